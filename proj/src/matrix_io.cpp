#include "opmean/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace opmean {

Matrix read_matrix_document(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("matrix document parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("rows"))
        throw InvalidInput("matrix document must have 'dim' and 'rows' fields");
    const auto& jd = doc["dim"];
    if (!jd.is_number_integer() || jd.get<int>() < 1)
        throw InvalidInput("'dim' must be a positive integer");
    const int n = jd.get<int>();
    const auto& rows = doc["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw InvalidInput("'rows' must be an array of dim rows");
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InvalidInput("each row must have dim entries");
        for (int j = 0; j < n; ++j) {
            const auto& cell = row[static_cast<size_t>(j)];
            if (!cell.is_number())
                throw InvalidInput("matrix entries must be numbers");
            m(i, j) = cell.get<double>();
        }
    }
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open matrix file: " + path);
    return read_matrix_document(in);
}

std::string to_matrix_document(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["dim"] = m.dim();
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    out << to_matrix_document(m);
}

}  // namespace opmean
