#pragma once

#include "pmul/correction.hpp"
#include "pmul/matrix.hpp"

namespace pmul {

template <typename T>
struct WithOps {
    T value;
    OpLedger ops;
};

// ---- matrix multiplication ---------------------------------------------------

/// Schoolbook product, the oracle: c_ij = sum_k a_ik b_kj. M*N*P multiplications.
WithOps<Matrix> matmul_mac(const Matrix& a, const Matrix& b);

/// Square-based product: c_ij = halve(sum_k pm(a_ik,b_kj) + Sa_i + Sb_j).
/// Bit-exact equal to matmul_mac in ExactInt. Fresh corrections cost
/// M*N + N*P extra squarings; the supplied-corrections overload runs with
/// exactly M*N*P squarings and zero multiplications.
WithOps<Matrix> matmul_sq(const Matrix& a, const Matrix& b);
WithOps<Matrix> matmul_sq(const Matrix& a, const Matrix& b, const CorrectionSet& corr);

// ---- linear transform ----------------------------------------------------------

WithOps<std::vector<Scalar>> transform_mac(const Matrix& w, const std::vector<Scalar>& x);

/// Square-based transform. Per input sample: one shared x_i^2 plus K row
/// squarings, so exactly K+1 squarings per sample with Sw precomputed.
/// `checkpoints`, when given, receives a ledger snapshot after each sample.
WithOps<std::vector<Scalar>> transform_sq(const Matrix& w, const std::vector<Scalar>& x,
                                          const CorrectionSet& sw,
                                          std::vector<OpLedger>* checkpoints = nullptr);
WithOps<std::vector<Scalar>> transform_sq(const Matrix& w, const std::vector<Scalar>& x);

// ---- 1D convolution / correlation ----------------------------------------------

/// Valid-mode correlation y_k = sum_i w_i x_{i+k}; no kernel flip.
WithOps<std::vector<Scalar>> conv1d_mac(const std::vector<Scalar>& w,
                                        const std::vector<Scalar>& x);

/// Square-based form. Sample squares are computed lazily, once per sample,
/// so every output after the first costs exactly N+1 squarings (N pm plus
/// the one new sample); the first output also absorbs the N-1 warm-up
/// sample squares. `checkpoints` receives a snapshot after each output.
WithOps<std::vector<Scalar>> conv1d_sq(const std::vector<Scalar>& w, const std::vector<Scalar>& x,
                                       const CorrectionSet& sw,
                                       std::vector<OpLedger>* checkpoints = nullptr);
WithOps<std::vector<Scalar>> conv1d_sq(const std::vector<Scalar>& w, const std::vector<Scalar>& x);

// ---- 2D convolution --------------------------------------------------------------

/// Valid-mode 2D sliding window: y_hk = sum_ij w_ij x_{h+i,k+j}.
WithOps<Matrix> conv2d_mac(const Matrix& w, const Matrix& x);

/// Square-based form; each sample square is computed once per run and shared
/// by every window that covers the sample.
WithOps<Matrix> conv2d_sq(const Matrix& w, const Matrix& x, const CorrectionSet& sw);
WithOps<Matrix> conv2d_sq(const Matrix& w, const Matrix& x);

} // namespace pmul
