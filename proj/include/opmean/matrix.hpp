#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opmean {

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& m) : std::runtime_error(m) {}
};
struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& m) : std::runtime_error(m) {}
};
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& m) : std::runtime_error(m) {}
};

/// Dense real square matrix, row-major. Doubles as the symmetric and the
/// positive definite type; definiteness/symmetry are checked at operation
/// entry rather than at construction, since extended-parameter curves may
/// legitimately leave the PD cone.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 1) throw InvalidInput("matrix dimension must be positive");
    }
    Matrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
        if (n < 1 || a_.size() != static_cast<size_t>(n) * n)
            throw InvalidInput("entry count does not match dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);

    int dim() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    Matrix transpose() const;
    /// (M + M^T)/2, applied after composite products to keep symmetry assertable.
    Matrix symmetrized() const;

    double frobenius_norm() const;
    double max_abs() const;
    double trace() const;

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(double s, const Matrix& x);

/// ||X - Y||_F relative to max(1, ||Y||_F).
double rel_frobenius_gap(const Matrix& x, const Matrix& y);

bool is_symmetric(const Matrix& m, double rel_tol = 1e-12);
void require_same_dim(const Matrix& a, const Matrix& b);
void require_symmetric(const Matrix& m);

struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-12;
};

enum class Verdict { holds, fails, indeterminate };

const char* to_string(Verdict v);

/// Outcome of an order comparison. margin is the signed distance to the
/// decision boundary in units of the tested eigen-quantity; witness is the
/// deciding eigenvalue index where one exists.
struct OrderVerdict {
    Verdict verdict = Verdict::indeterminate;
    double margin = 0.0;
    int witness = -1;
};

}  // namespace opmean
