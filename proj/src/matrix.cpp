#include "opmean/matrix.hpp"

#include <algorithm>

namespace opmean {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 1) throw InvalidInput("empty matrix literal");
    a_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n_)
            throw InvalidInput("matrix literal is not square");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::symmetrized() const {
    Matrix s(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return s;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw InvalidInput("dimension mismatch");
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y);
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y);
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    require_same_dim(x, y);
    const int n = x.dim();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

Matrix operator*(double s, const Matrix& x) {
    Matrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = s * x(i, j);
    return r;
}

double rel_frobenius_gap(const Matrix& x, const Matrix& y) {
    return (x - y).frobenius_norm() / std::max(1.0, y.frobenius_norm());
}

bool is_symmetric(const Matrix& m, double rel_tol) {
    const double scale = std::max(1.0, m.max_abs());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > rel_tol * scale) return false;
    return true;
}

void require_symmetric(const Matrix& m) {
    if (!is_symmetric(m)) throw InvalidInput("matrix is not symmetric");
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "indeterminate";
    }
}

}  // namespace opmean
