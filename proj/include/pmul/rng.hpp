#pragma once

#include <cstdint>

#include "pmul/matrix.hpp"

namespace pmul {

/// SplitMix64. Self-contained so generated datasets are bit-identical
/// across platforms and standard library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi]. Modulo mapping; the tiny bias is irrelevant for
    /// test data and keeps the stream portable.
    long long next_in(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    /// Uniform double in [lo, hi) from the top 53 bits.
    double next_real(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

  private:
    std::uint64_t state_;
};

inline Scalar random_scalar(SplitMix64& rng, Domain d, long long lo, long long hi) {
    if (d == Domain::ExactInt) return Scalar(rng.next_in(lo, hi));
    return Scalar::real(rng.next_real(static_cast<double>(lo), static_cast<double>(hi)));
}

inline Matrix random_matrix(SplitMix64& rng, Index rows, Index cols, Domain d, long long lo,
                            long long hi) {
    Matrix m(rows, cols, d);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, d, lo, hi);
    return m;
}

inline CMatrix random_cmatrix(SplitMix64& rng, Index rows, Index cols, Domain d, long long lo,
                              long long hi) {
    CMatrix m(rows, cols, d);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            m.at(r, c) = CScalar(random_scalar(rng, d, lo, hi), random_scalar(rng, d, lo, hi));
    return m;
}

} // namespace pmul
