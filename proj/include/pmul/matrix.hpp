#pragma once

#include <cstdint>
#include <vector>

#include "pmul/numeric.hpp"

namespace pmul {

using Index = std::size_t;

/// Dense row-major real matrix over one scalar domain.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0), dom_(Domain::ExactInt) {}
    Matrix(Index rows, Index cols, Domain d);
    Matrix(Index rows, Index cols, std::vector<Scalar> data);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Domain domain() const { return dom_; }
    Index size() const { return data_.size(); }

    const Scalar& at(Index r, Index c) const { return data_[r * cols_ + c]; }
    Scalar& at(Index r, Index c) { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& data() const { return data_; }

    static Matrix identity(Index n, Domain d);

    /// Stable FNV-1a hash of shape, domain and canonical element renderings.
    /// Used to bind precomputed correction sets to their operand.
    std::uint64_t content_hash() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    Index rows_, cols_;
    Domain dom_;
    std::vector<Scalar> data_;
};

/// Dense row-major complex matrix over one scalar domain.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0), dom_(Domain::ExactInt) {}
    CMatrix(Index rows, Index cols, Domain d);
    CMatrix(Index rows, Index cols, std::vector<CScalar> data);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Domain domain() const { return dom_; }
    Index size() const { return data_.size(); }

    const CScalar& at(Index r, Index c) const { return data_[r * cols_ + c]; }
    CScalar& at(Index r, Index c) { return data_[r * cols_ + c]; }
    const std::vector<CScalar>& data() const { return data_; }

    static CMatrix identity(Index n, Domain d);

    std::uint64_t content_hash() const;

    friend bool operator==(const CMatrix& a, const CMatrix& b);
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

  private:
    Index rows_, cols_;
    Domain dom_;
    std::vector<CScalar> data_;
};

/// N-point DFT coefficient matrix W[k][i] = exp(-2*pi*j*k*i/N), Float domain.
CMatrix dft_matrix(Index n);

} // namespace pmul
