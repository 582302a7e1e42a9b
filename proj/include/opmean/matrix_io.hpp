#pragma once

#include <iosfwd>
#include <string>

#include "opmean/matrix.hpp"

namespace opmean {

/// Matrix file format: a JSON document {"dim": n, "rows": [[...], ...]}.
/// Decimal values of up to 17 significant digits round-trip bit-exactly.
Matrix read_matrix_document(std::istream& in);
Matrix read_matrix_file(const std::string& path);

std::string to_matrix_document(const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace opmean
