#include "pmul/kernels_complex.hpp"

namespace pmul {

namespace {

void check_cmatmul_dims(const CMatrix& x, const CMatrix& y) {
    if (x.cols() != y.rows())
        throw DimensionError("cmatmul: inner dimensions disagree (" + std::to_string(x.cols()) +
                             " vs " + std::to_string(y.rows()) + ")");
    require_same_domain(x.at(0, 0).re, y.at(0, 0).re);
}

void check_ctransform_dims(const CMatrix& w, const std::vector<CScalar>& x) {
    if (w.cols() != x.size())
        throw DimensionError("ctransform: coefficient columns != sample count");
    require_same_domain(w.at(0, 0).re, x.at(0).re);
}

void check_cconv_dims(std::size_t nw, std::size_t nx) {
    if (nw == 0) throw DimensionError("cconv: empty kernel");
    if (nw > nx) throw DimensionError("cconv: kernel longer than signal");
}

} // namespace

CScalar cmul_counted(const CScalar& p, const CScalar& q, OpLedger& led) {
    Scalar re = sub(mul(p.re, q.re, led), mul(p.im, q.im, led), led);
    Scalar im = add(mul(p.im, q.re, led), mul(p.re, q.im, led), led);
    return {std::move(re), std::move(im)};
}

WithOps<CMatrix> cmatmul_mac(const CMatrix& x, const CMatrix& y) {
    check_cmatmul_dims(x, y);
    OpLedger led;
    CMatrix z(x.rows(), y.cols(), x.domain());
    for (Index h = 0; h < x.rows(); ++h)
        for (Index k = 0; k < y.cols(); ++k) {
            CScalar acc = CScalar::zero(x.domain());
            for (Index i = 0; i < x.cols(); ++i) {
                CScalar prod = cmul_counted(x.at(h, i), y.at(i, k), led);
                acc.re = add(acc.re, prod.re, led);
                acc.im = add(acc.im, prod.im, led);
            }
            z.at(h, k) = std::move(acc);
        }
    return {std::move(z), led};
}

WithOps<CMatrix> cmatmul_sq4(const CMatrix& x, const CMatrix& y) {
    check_cmatmul_dims(x, y);
    OpLedger led;
    CorrectionSet corr = cmatmul4_corrections(x, y, led);
    auto res = cmatmul_sq4(x, y, corr);
    res.ops += led;
    return res;
}

WithOps<CMatrix> cmatmul_sq4(const CMatrix& x, const CMatrix& y, const CorrectionSet& corr) {
    check_cmatmul_dims(x, y);
    require_fresh(corr, CorrectionKind::Complex4, x.content_hash(), y.content_hash());
    const auto& sx = corr.term("Sx");
    const auto& sy = corr.term("Sy");
    OpLedger led;
    CMatrix z(x.rows(), y.cols(), x.domain());
    for (Index h = 0; h < x.rows(); ++h)
        for (Index k = 0; k < y.cols(); ++k) {
            const Scalar init = add(sx[h], sy[k], led);
            Scalar re_acc = init;
            Scalar im_acc = init;
            for (Index i = 0; i < x.cols(); ++i) {
                CpmParts parts = cpm(x.at(h, i), y.at(i, k), led);
                re_acc = add(re_acc, parts.re_part, led);
                im_acc = add(im_acc, parts.im_part, led);
            }
            z.at(h, k) = halve_exact(CScalar(std::move(re_acc), std::move(im_acc)));
        }
    return {std::move(z), led};
}

WithOps<CMatrix> cmatmul_sq3(const CMatrix& x, const CMatrix& y) {
    check_cmatmul_dims(x, y);
    OpLedger led;
    CorrectionSet corr = cmatmul3_corrections(x, y, led);
    auto res = cmatmul_sq3(x, y, corr);
    res.ops += led;
    return res;
}

WithOps<CMatrix> cmatmul_sq3(const CMatrix& x, const CMatrix& y, const CorrectionSet& corr) {
    check_cmatmul_dims(x, y);
    require_fresh(corr, CorrectionKind::Complex3, x.content_hash(), y.content_hash());
    const auto& sab = corr.term("Sab");
    const auto& sba = corr.term("Sba");
    const auto& scs = corr.term("Scs");
    const auto& ssc = corr.term("Ssc");
    OpLedger led;
    CMatrix z(x.rows(), y.cols(), x.domain());
    for (Index h = 0; h < x.rows(); ++h)
        for (Index k = 0; k < y.cols(); ++k) {
            Scalar re_acc = add(sab[h], scs[k], led);
            Scalar im_acc = add(sba[h], ssc[k], led);
            for (Index i = 0; i < x.cols(); ++i) {
                Cpm3Parts t = cpm3(x.at(h, i), y.at(i, k), led);
                re_acc = add(re_acc, sub(t.t1, t.t2, led), led);
                im_acc = add(im_acc, add(t.t1, t.t3, led), led);
            }
            z.at(h, k) = halve_exact(CScalar(std::move(re_acc), std::move(im_acc)));
        }
    return {std::move(z), led};
}

WithOps<std::vector<CScalar>> ctransform_mac(const CMatrix& w, const std::vector<CScalar>& x) {
    check_ctransform_dims(w, x);
    OpLedger led;
    std::vector<CScalar> out(w.rows(), CScalar::zero(w.domain()));
    for (Index k = 0; k < w.rows(); ++k)
        for (Index i = 0; i < w.cols(); ++i) {
            CScalar prod = cmul_counted(w.at(k, i), x[i], led);
            out[k].re = add(out[k].re, prod.re, led);
            out[k].im = add(out[k].im, prod.im, led);
        }
    return {std::move(out), led};
}

WithOps<std::vector<CScalar>> ctransform_sq4(const CMatrix& w, const std::vector<CScalar>& x,
                                             const CorrectionSet& s) {
    check_ctransform_dims(w, x);
    require_fresh(s, CorrectionKind::Complex4, w.content_hash());
    const auto& sk = s.term("Sk");
    OpLedger led;
    std::vector<Scalar> re_acc(sk.begin(), sk.end()); // S_k(1+j) initialization
    std::vector<Scalar> im_acc(sk.begin(), sk.end());
    for (Index i = 0; i < w.cols(); ++i) {
        const CScalar common = sample_common_term(x[i], SampleTermVariant::Cpm, led);
        for (Index k = 0; k < w.rows(); ++k) {
            CpmParts parts = cpm(w.at(k, i), x[i], led);
            re_acc[k] = add(re_acc[k], sub(parts.re_part, common.re, led), led);
            im_acc[k] = add(im_acc[k], sub(parts.im_part, common.im, led), led);
        }
    }
    std::vector<CScalar> out;
    out.reserve(w.rows());
    for (Index k = 0; k < w.rows(); ++k)
        out.push_back(halve_exact(CScalar(std::move(re_acc[k]), std::move(im_acc[k]))));
    return {std::move(out), led};
}

WithOps<std::vector<CScalar>> ctransform_sq4(const CMatrix& w, const std::vector<CScalar>& x) {
    OpLedger led;
    CorrectionSet s = ctransform4_corrections(w, led);
    auto res = ctransform_sq4(w, x, s);
    res.ops += led;
    return res;
}

WithOps<std::vector<CScalar>> ctransform_sq3(const CMatrix& w, const std::vector<CScalar>& x,
                                             const CorrectionSet& s) {
    check_ctransform_dims(w, x);
    require_fresh(s, CorrectionKind::Complex3, w.content_hash());
    const auto& sxk = s.term("Sxk");
    const auto& syk = s.term("Syk");
    OpLedger led;
    std::vector<Scalar> re_acc(sxk.begin(), sxk.end());
    std::vector<Scalar> im_acc(syk.begin(), syk.end());
    for (Index i = 0; i < w.cols(); ++i) {
        const CScalar common = sample_common_term(x[i], SampleTermVariant::Cpm3, led);
        for (Index k = 0; k < w.rows(); ++k) {
            // The sample is the a+jb operand here, the coefficient the c+js one.
            Cpm3Parts t = cpm3(x[i], w.at(k, i), led);
            re_acc[k] = add(re_acc[k], add(sub(t.t1, t.t2, led), common.re, led), led);
            im_acc[k] = add(im_acc[k], add(add(t.t1, t.t3, led), common.im, led), led);
        }
    }
    std::vector<CScalar> out;
    out.reserve(w.rows());
    for (Index k = 0; k < w.rows(); ++k)
        out.push_back(halve_exact(CScalar(std::move(re_acc[k]), std::move(im_acc[k]))));
    return {std::move(out), led};
}

WithOps<std::vector<CScalar>> ctransform_sq3(const CMatrix& w, const std::vector<CScalar>& x) {
    OpLedger led;
    CorrectionSet s = ctransform3_corrections(w, led);
    auto res = ctransform_sq3(w, x, s);
    res.ops += led;
    return res;
}

WithOps<std::vector<CScalar>> cconv_mac(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x) {
    check_cconv_dims(w.size(), x.size());
    require_same_domain(w[0].re, x[0].re);
    OpLedger led;
    const std::size_t n_out = x.size() - w.size() + 1;
    std::vector<CScalar> z(n_out, CScalar::zero(w[0].domain()));
    for (std::size_t k = 0; k < n_out; ++k)
        for (std::size_t i = 0; i < w.size(); ++i) {
            CScalar prod = cmul_counted(w[i], x[i + k], led);
            z[k].re = add(z[k].re, prod.re, led);
            z[k].im = add(z[k].im, prod.im, led);
        }
    return {std::move(z), led};
}

WithOps<std::vector<CScalar>> cconv_sq4(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x, const CorrectionSet& s_w) {
    check_cconv_dims(w.size(), x.size());
    require_same_domain(w[0].re, x[0].re);
    const Scalar& sw = s_w.scalar_term("Sw");
    OpLedger led;
    const std::size_t n = w.size();
    const std::size_t n_out = x.size() - n + 1;
    const Domain dom = w[0].domain();

    std::vector<Scalar> msq(x.size(), Scalar::zero(dom)); // |x_t|^2, lazily filled
    Scalar win_msq = Scalar::zero(dom);
    std::vector<CScalar> z;
    z.reserve(n_out);
    for (std::size_t k = 0; k < n_out; ++k) {
        if (k == 0) {
            for (std::size_t t = 0; t < n; ++t) {
                msq[t] = add(square(x[t].re, led), square(x[t].im, led), led);
                win_msq = add(win_msq, msq[t], led);
            }
        } else {
            msq[k + n - 1] = add(square(x[k + n - 1].re, led), square(x[k + n - 1].im, led), led);
            win_msq = add(sub(win_msq, msq[k - 1], led), msq[k + n - 1], led);
        }
        Scalar re_acc = sub(sw, win_msq, led);
        Scalar im_acc = re_acc;
        for (std::size_t i = 0; i < n; ++i) {
            CpmParts parts = cpm(w[i], x[i + k], led);
            re_acc = add(re_acc, parts.re_part, led);
            im_acc = add(im_acc, parts.im_part, led);
        }
        z.push_back(halve_exact(CScalar(std::move(re_acc), std::move(im_acc))));
    }
    return {std::move(z), led};
}

WithOps<std::vector<CScalar>> cconv_sq4(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x) {
    OpLedger led;
    CorrectionSet s_w = cconv4_corrections(w, led);
    auto res = cconv_sq4(w, x, s_w);
    res.ops += led;
    return res;
}

WithOps<std::vector<CScalar>> cconv_sq3(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x, const CorrectionSet& s_w) {
    check_cconv_dims(w.size(), x.size());
    require_same_domain(w[0].re, x[0].re);
    const CScalar& sw = s_w.cscalar_term("Sw");
    OpLedger led;
    const std::size_t n = w.size();
    const std::size_t n_out = x.size() - n + 1;
    const Domain dom = w[0].domain();

    std::vector<CScalar> common(x.size(), CScalar::zero(dom)); // per-sample shared terms
    CScalar win_common = CScalar::zero(dom);
    std::vector<CScalar> z;
    z.reserve(n_out);
    for (std::size_t k = 0; k < n_out; ++k) {
        if (k == 0) {
            for (std::size_t t = 0; t < n; ++t) {
                common[t] = sample_common_term(x[t], SampleTermVariant::Cpm3, led);
                win_common += common[t];
            }
        } else {
            common[k + n - 1] = sample_common_term(x[k + n - 1], SampleTermVariant::Cpm3, led);
            win_common += common[k + n - 1] - common[k - 1];
        }
        Scalar re_acc = add(sw.re, win_common.re, led);
        Scalar im_acc = add(sw.im, win_common.im, led);
        for (std::size_t i = 0; i < n; ++i) {
            Cpm3Parts t = cpm3(x[i + k], w[i], led);
            re_acc = add(re_acc, sub(t.t1, t.t2, led), led);
            im_acc = add(im_acc, add(t.t1, t.t3, led), led);
        }
        z.push_back(halve_exact(CScalar(std::move(re_acc), std::move(im_acc))));
    }
    return {std::move(z), led};
}

WithOps<std::vector<CScalar>> cconv_sq3(const std::vector<CScalar>& w,
                                        const std::vector<CScalar>& x) {
    OpLedger led;
    CorrectionSet s_w = cconv3_corrections(w, led);
    auto res = cconv_sq3(w, x, s_w);
    res.ops += led;
    return res;
}

} // namespace pmul
