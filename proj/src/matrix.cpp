#include "pmul/matrix.hpp"

#include <cmath>
#include <numbers>

namespace pmul {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
}

void fnv_str(std::uint64_t& h, const std::string& s) {
    fnv_bytes(h, s.data(), s.size());
    fnv_bytes(h, "|", 1);
}

void check_uniform(Domain d, const Scalar& v) {
    if (v.domain() != d) throw MixedDomainError("matrix elements span mixed domains");
}

} // namespace

Matrix::Matrix(Index rows, Index cols, Domain d)
    : rows_(rows), cols_(cols), dom_(d), data_(rows * cols, Scalar::zero(d)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

Matrix::Matrix(Index rows, Index cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), dom_(Domain::ExactInt), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw DimensionError("matrix payload does not match shape");
    dom_ = data_[0].domain();
    for (const auto& v : data_) check_uniform(dom_, v);
}

Matrix Matrix::identity(Index n, Domain d) {
    Matrix m(n, n, d);
    Scalar one = d == Domain::ExactInt ? Scalar(1) : Scalar::real(1.0);
    for (Index i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

std::uint64_t Matrix::content_hash() const {
    std::uint64_t h = kFnvOffset;
    fnv_str(h, std::to_string(rows_));
    fnv_str(h, std::to_string(cols_));
    fnv_str(h, std::string(domain_name(dom_)));
    for (const auto& v : data_) fnv_str(h, v.str());
    return h;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dom_ == b.dom_ && a.data_ == b.data_;
}

CMatrix::CMatrix(Index rows, Index cols, Domain d)
    : rows_(rows), cols_(cols), dom_(d), data_(rows * cols, CScalar::zero(d)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

CMatrix::CMatrix(Index rows, Index cols, std::vector<CScalar> data)
    : rows_(rows), cols_(cols), dom_(Domain::ExactInt), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw DimensionError("matrix payload does not match shape");
    dom_ = data_[0].domain();
    for (const auto& v : data_) check_uniform(dom_, v.re);
}

CMatrix CMatrix::identity(Index n, Domain d) {
    CMatrix m(n, n, d);
    Scalar one = d == Domain::ExactInt ? Scalar(1) : Scalar::real(1.0);
    for (Index i = 0; i < n; ++i) m.at(i, i) = CScalar(one, Scalar::zero(d));
    return m;
}

std::uint64_t CMatrix::content_hash() const {
    std::uint64_t h = kFnvOffset;
    fnv_str(h, std::to_string(rows_));
    fnv_str(h, std::to_string(cols_));
    fnv_str(h, std::string(domain_name(dom_)));
    fnv_str(h, "complex");
    for (const auto& v : data_) {
        fnv_str(h, v.re.str());
        fnv_str(h, v.im.str());
    }
    return h;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dom_ == b.dom_ && a.data_ == b.data_;
}

CMatrix dft_matrix(Index n) {
    CMatrix w(n, n, Domain::Float);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i) {
            const double phi = step * static_cast<double>(k * i % n);
            w.at(k, i) = CScalar(Scalar::real(std::cos(phi)), Scalar::real(std::sin(phi)));
        }
    return w;
}

} // namespace pmul
