#pragma once

#include "pmul/correction.hpp"
#include "pmul/kernels_real.hpp"

namespace pmul {

/// Schoolbook complex product oracle; 4 real multiplications per complex
/// multiplication. Deliberately ignorant of the 3-multiplication rewrite.
WithOps<CMatrix> cmatmul_mac(const CMatrix& x, const CMatrix& y);

/// 4-square form: per inner term one cpm (4 squarings), plus the Sx_h/Sy_k
/// row/column corrections. 4MNP + 2MN + 2NP squarings fresh, 4MNP supplied.
WithOps<CMatrix> cmatmul_sq4(const CMatrix& x, const CMatrix& y);
WithOps<CMatrix> cmatmul_sq4(const CMatrix& x, const CMatrix& y, const CorrectionSet& corr);

/// 3-square form: per inner term one cpm3 with (c+a+b)^2 shared between the
/// real and imaginary parts. 3MNP + 3MN + 3NP squarings fresh, 3MNP supplied.
WithOps<CMatrix> cmatmul_sq3(const CMatrix& x, const CMatrix& y);
WithOps<CMatrix> cmatmul_sq3(const CMatrix& x, const CMatrix& y, const CorrectionSet& corr);

/// Direct complex transform oracle X_k = sum_i w_ki x_i.
WithOps<std::vector<CScalar>> ctransform_mac(const CMatrix& w, const std::vector<CScalar>& x);

/// 4-square transform; the (x^2+y^2)(1+j) sample term is computed once per
/// sample and shared by all K rows. Registers conceptually start at S_k(1+j).
WithOps<std::vector<CScalar>> ctransform_sq4(const CMatrix& w, const std::vector<CScalar>& x,
                                             const CorrectionSet& s);
WithOps<std::vector<CScalar>> ctransform_sq4(const CMatrix& w, const std::vector<CScalar>& x);

/// 3-square transform; shared sample term -(x+y)^2+y^2 + j(-(x+y)^2-x^2),
/// row initializers Sxk + j*Syk.
WithOps<std::vector<CScalar>> ctransform_sq3(const CMatrix& w, const std::vector<CScalar>& x,
                                             const CorrectionSet& s);
WithOps<std::vector<CScalar>> ctransform_sq3(const CMatrix& w, const std::vector<CScalar>& x);

/// Valid-mode complex correlation oracle z_k = sum_i w_i x_{i+k}.
WithOps<std::vector<CScalar>> cconv_mac(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x);

/// 4-square complex convolution; per-sample modulus squares shared across
/// windows, S_w = -sum(c_i^2+s_i^2) applied once per output as S_w(1+j).
WithOps<std::vector<CScalar>> cconv_sq4(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x, const CorrectionSet& s_w);
WithOps<std::vector<CScalar>> cconv_sq4(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x);

/// 3-square complex convolution; S_w is the complex kernel-side correction
/// sum((-c^2+(c+s)^2) + j(-c^2-(s-c)^2)).
WithOps<std::vector<CScalar>> cconv_sq3(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x, const CorrectionSet& s_w);
WithOps<std::vector<CScalar>> cconv_sq3(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x);

/// Counted schoolbook complex multiply-accumulate helper (4 mul, 2 add).
CScalar cmul_counted(const CScalar& p, const CScalar& q, OpLedger& led);

} // namespace pmul
