#pragma once

#include <cmath>

#include "pmul/kernels_complex.hpp"
#include "pmul/kernels_real.hpp"
#include "pmul/rng.hpp"

namespace pmul::test {

inline Scalar I(long long v) { return Scalar(v); }
inline CScalar C(long long re, long long im) { return {Scalar(re), Scalar(im)}; }
inline CScalar Cf(double re, double im) { return {Scalar::real(re), Scalar::real(im)}; }

inline Matrix mat(Index rows, Index cols, std::initializer_list<long long> vals) {
    std::vector<Scalar> data;
    for (long long v : vals) data.emplace_back(v);
    return Matrix(rows, cols, std::move(data));
}

inline CMatrix cmat(Index rows, Index cols, std::initializer_list<std::pair<long long, long long>> vals) {
    std::vector<CScalar> data;
    for (auto [re, im] : vals) data.push_back(C(re, im));
    return CMatrix(rows, cols, std::move(data));
}

inline std::vector<Scalar> vec(std::initializer_list<long long> vals) {
    std::vector<Scalar> out;
    for (long long v : vals) out.emplace_back(v);
    return out;
}

inline std::vector<CScalar> cvec(std::initializer_list<std::pair<long long, long long>> vals) {
    std::vector<CScalar> out;
    for (auto [re, im] : vals) out.push_back(C(re, im));
    return out;
}

// Recover ab from the partial multiplication identity.
inline Scalar pm_recover(const Scalar& a, const Scalar& b) {
    return halve_exact(pm(a, b) - square(a) - square(b));
}

// Recover xy from the 4-square complex partial multiplication.
inline CScalar cpm_recover(const CScalar& x, const CScalar& y) {
    CpmParts parts = cpm(x, y);
    Scalar sx = -(square(x.re) + square(x.im));
    Scalar sy = -(square(y.re) + square(y.im));
    return {halve_exact(parts.re_part + sx + sy), halve_exact(parts.im_part + sx + sy)};
}

// Recover xy from the 3-square complex partial multiplication.
inline CScalar cpm3_recover(const CScalar& x, const CScalar& y) {
    Cpm3Parts t = cpm3(x, y);
    Scalar sab = square(x.im) - pm(x.re, x.im);
    Scalar sba = -pm(x.re, x.im) - square(x.re);
    Scalar scs = pm(y.re, y.im) - square(y.re);
    Scalar ssc = -square(y.re) - square(y.im - y.re);
    return {halve_exact(t.t1 - t.t2 + sab + scs), halve_exact(t.t1 + t.t3 + sba + ssc)};
}

inline double abs_diff(const Scalar& a, const Scalar& b) {
    return std::abs(a.approx() - b.approx());
}

inline double max_abs_diff(const std::vector<CScalar>& a, const std::vector<CScalar>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, abs_diff(a[i].re, b[i].re));
        m = std::max(m, abs_diff(a[i].im, b[i].im));
    }
    return m;
}

} // namespace pmul::test
