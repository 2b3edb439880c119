#include "pmul/kernels_real.hpp"

namespace pmul {

namespace {

void check_matmul_dims(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions disagree (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    require_same_domain(a.at(0, 0), b.at(0, 0));
}

void check_transform_dims(const Matrix& w, const std::vector<Scalar>& x) {
    if (w.cols() != x.size())
        throw DimensionError("transform: coefficient columns != sample count");
    require_same_domain(w.at(0, 0), x.at(0));
}

void check_conv_dims(std::size_t nw, std::size_t nx) {
    if (nw == 0) throw DimensionError("conv: empty kernel");
    if (nw > nx) throw DimensionError("conv: kernel longer than signal");
}

} // namespace

WithOps<Matrix> matmul_mac(const Matrix& a, const Matrix& b) {
    check_matmul_dims(a, b);
    OpLedger led;
    Matrix c(a.rows(), b.cols(), a.domain());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) {
            Scalar acc = Scalar::zero(a.domain());
            for (Index k = 0; k < a.cols(); ++k)
                acc = add(acc, mul(a.at(i, k), b.at(k, j), led), led);
            c.at(i, j) = std::move(acc);
        }
    return {std::move(c), led};
}

WithOps<Matrix> matmul_sq(const Matrix& a, const Matrix& b) {
    check_matmul_dims(a, b);
    OpLedger led;
    CorrectionSet corr = real_mat_corrections(a, b, led);
    auto res = matmul_sq(a, b, corr);
    res.ops += led;
    return res;
}

WithOps<Matrix> matmul_sq(const Matrix& a, const Matrix& b, const CorrectionSet& corr) {
    check_matmul_dims(a, b);
    require_fresh(corr, CorrectionKind::RealMat, a.content_hash(), b.content_hash());
    const auto& sa = corr.term("Sa");
    const auto& sb = corr.term("Sb");
    OpLedger led;
    Matrix c(a.rows(), b.cols(), a.domain());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) {
            Scalar acc = add(sa[i], sb[j], led);
            for (Index k = 0; k < a.cols(); ++k)
                acc = add(acc, pm(a.at(i, k), b.at(k, j), led), led);
            c.at(i, j) = halve_exact(acc);
        }
    return {std::move(c), led};
}

WithOps<std::vector<Scalar>> transform_mac(const Matrix& w, const std::vector<Scalar>& x) {
    check_transform_dims(w, x);
    OpLedger led;
    std::vector<Scalar> out(w.rows(), Scalar::zero(w.domain()));
    for (Index k = 0; k < w.rows(); ++k)
        for (Index i = 0; i < w.cols(); ++i)
            out[k] = add(out[k], mul(w.at(k, i), x[i], led), led);
    return {std::move(out), led};
}

WithOps<std::vector<Scalar>> transform_sq(const Matrix& w, const std::vector<Scalar>& x,
                                          const CorrectionSet& sw,
                                          std::vector<OpLedger>* checkpoints) {
    check_transform_dims(w, x);
    require_fresh(sw, CorrectionKind::RealTransform, w.content_hash());
    const auto& swk = sw.term("Sw");
    OpLedger led;
    std::vector<Scalar> acc(swk.begin(), swk.end());
    for (Index i = 0; i < w.cols(); ++i) {
        const Scalar sq_x = square(x[i], led); // shared across all K rows
        for (Index k = 0; k < w.rows(); ++k)
            acc[k] = add(acc[k], sub(pm(w.at(k, i), x[i], led), sq_x, led), led);
        if (checkpoints) checkpoints->push_back(led);
    }
    for (auto& v : acc) v = halve_exact(v);
    return {std::move(acc), led};
}

WithOps<std::vector<Scalar>> transform_sq(const Matrix& w, const std::vector<Scalar>& x) {
    OpLedger led;
    CorrectionSet sw = transform_corrections(w, led);
    auto res = transform_sq(w, x, sw);
    res.ops += led;
    return res;
}

WithOps<std::vector<Scalar>> conv1d_mac(const std::vector<Scalar>& w,
                                        const std::vector<Scalar>& x) {
    check_conv_dims(w.size(), x.size());
    require_same_domain(w[0], x[0]);
    OpLedger led;
    const std::size_t n_out = x.size() - w.size() + 1;
    std::vector<Scalar> y(n_out, Scalar::zero(w[0].domain()));
    for (std::size_t k = 0; k < n_out; ++k)
        for (std::size_t i = 0; i < w.size(); ++i)
            y[k] = add(y[k], mul(w[i], x[i + k], led), led);
    return {std::move(y), led};
}

WithOps<std::vector<Scalar>> conv1d_sq(const std::vector<Scalar>& w, const std::vector<Scalar>& x,
                                       const CorrectionSet& sw,
                                       std::vector<OpLedger>* checkpoints) {
    check_conv_dims(w.size(), x.size());
    require_same_domain(w[0], x[0]);
    const Scalar& sw_val = sw.scalar_term("Sw");
    OpLedger led;
    const std::size_t n = w.size();
    const std::size_t n_out = x.size() - n + 1;
    const Domain dom = w[0].domain();

    std::vector<Scalar> sq_x(x.size(), Scalar::zero(dom));
    std::vector<Scalar> y;
    y.reserve(n_out);
    Scalar win_sq = Scalar::zero(dom); // running sum of the window's sample squares
    for (std::size_t k = 0; k < n_out; ++k) {
        if (k == 0) {
            for (std::size_t t = 0; t < n; ++t) {
                sq_x[t] = square(x[t], led);
                win_sq = add(win_sq, sq_x[t], led);
            }
        } else {
            sq_x[k + n - 1] = square(x[k + n - 1], led);
            win_sq = add(sub(win_sq, sq_x[k - 1], led), sq_x[k + n - 1], led);
        }
        Scalar acc = sub(sw_val, win_sq, led);
        for (std::size_t i = 0; i < n; ++i) acc = add(acc, pm(w[i], x[i + k], led), led);
        y.push_back(halve_exact(acc));
        if (checkpoints) checkpoints->push_back(led);
    }
    return {std::move(y), led};
}

WithOps<std::vector<Scalar>> conv1d_sq(const std::vector<Scalar>& w,
                                       const std::vector<Scalar>& x) {
    OpLedger led;
    CorrectionSet sw = conv_corrections(w, led);
    auto res = conv1d_sq(w, x, sw);
    res.ops += led;
    return res;
}

WithOps<Matrix> conv2d_mac(const Matrix& w, const Matrix& x) {
    if (w.rows() > x.rows() || w.cols() > x.cols())
        throw DimensionError("conv2d: kernel exceeds sample grid");
    require_same_domain(w.at(0, 0), x.at(0, 0));
    OpLedger led;
    Matrix y(x.rows() - w.rows() + 1, x.cols() - w.cols() + 1, w.domain());
    for (Index h = 0; h < y.rows(); ++h)
        for (Index k = 0; k < y.cols(); ++k) {
            Scalar acc = Scalar::zero(w.domain());
            for (Index i = 0; i < w.rows(); ++i)
                for (Index j = 0; j < w.cols(); ++j)
                    acc = add(acc, mul(w.at(i, j), x.at(h + i, k + j), led), led);
            y.at(h, k) = std::move(acc);
        }
    return {std::move(y), led};
}

WithOps<Matrix> conv2d_sq(const Matrix& w, const Matrix& x, const CorrectionSet& sw) {
    if (w.rows() > x.rows() || w.cols() > x.cols())
        throw DimensionError("conv2d: kernel exceeds sample grid");
    require_same_domain(w.at(0, 0), x.at(0, 0));
    require_fresh(sw, CorrectionKind::RealConv2D, w.content_hash());
    const Scalar& sw_val = sw.scalar_term("Sw");
    OpLedger led;

    // One square per sample for the whole run, shared across windows.
    Matrix sq_x(x.rows(), x.cols(), x.domain());
    for (Index r = 0; r < x.rows(); ++r)
        for (Index c = 0; c < x.cols(); ++c) sq_x.at(r, c) = square(x.at(r, c), led);

    Matrix y(x.rows() - w.rows() + 1, x.cols() - w.cols() + 1, w.domain());
    for (Index h = 0; h < y.rows(); ++h)
        for (Index k = 0; k < y.cols(); ++k) {
            Scalar acc = sw_val;
            for (Index i = 0; i < w.rows(); ++i)
                for (Index j = 0; j < w.cols(); ++j) {
                    acc = add(acc, pm(w.at(i, j), x.at(h + i, k + j), led), led);
                    acc = sub(acc, sq_x.at(h + i, k + j), led);
                }
            y.at(h, k) = halve_exact(acc);
        }
    return {std::move(y), led};
}

WithOps<Matrix> conv2d_sq(const Matrix& w, const Matrix& x) {
    OpLedger led;
    CorrectionSet sw = conv2d_corrections(w, led);
    auto res = conv2d_sq(w, x, sw);
    res.ops += led;
    return res;
}

} // namespace pmul
