#pragma once

#include <optional>
#include <string>

#include "pmul/matrix.hpp"

namespace pmul {

struct FormatError : Error {
    using Error::Error;
};

/// Parsed matrix file payload: exactly one of the two members is set.
struct MatrixFile {
    std::optional<Matrix> real;
    std::optional<CMatrix> cmat;

    bool is_complex() const { return cmat.has_value(); }
};

/// Canonical JSON form, byte-stable: fixed key order (rows, cols, domain,
/// complex, data), two-space indent, every value a canonical decimal string,
/// complex entries as [re, im] pairs. Parsing then serializing a canonical
/// file reproduces it byte for byte.
std::string serialize_matrix(const Matrix& m);
std::string serialize_matrix(const CMatrix& m);

MatrixFile parse_matrix_file(const std::string& text);

MatrixFile read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);
void write_matrix_file(const std::string& path, const CMatrix& m);

/// Scalar parsing used by the file format: plain decimal for int domain,
/// strtod-compatible literal for float.
Scalar parse_scalar(const std::string& text, Domain d);

} // namespace pmul
