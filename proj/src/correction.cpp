#include "pmul/correction.hpp"

namespace pmul {

const char* correction_kind_name(CorrectionKind k) {
    switch (k) {
        case CorrectionKind::RealMat: return "RealMat";
        case CorrectionKind::RealTransform: return "RealTransform";
        case CorrectionKind::RealConv1D: return "RealConv1D";
        case CorrectionKind::RealConv2D: return "RealConv2D";
        case CorrectionKind::Complex4: return "Complex4";
        case CorrectionKind::Complex3: return "Complex3";
        case CorrectionKind::ComplexConv: return "ComplexConv";
        case CorrectionKind::Complex3Conv: return "Complex3Conv";
    }
    return "?";
}

const std::vector<Scalar>& CorrectionSet::term(const std::string& name) const {
    auto it = terms.find(name);
    if (it == terms.end()) throw Error("correction set has no term '" + name + "'");
    return it->second;
}

const std::vector<CScalar>& CorrectionSet::cterm(const std::string& name) const {
    auto it = cterms.find(name);
    if (it == cterms.end()) throw Error("correction set has no complex term '" + name + "'");
    return it->second;
}

void require_fresh(const CorrectionSet& corr, CorrectionKind kind, std::uint64_t hash_a,
                   std::uint64_t hash_b) {
    if (corr.kind != kind)
        throw StaleCorrectionError(std::string("correction kind mismatch: have ") +
                                   correction_kind_name(corr.kind) + ", need " +
                                   correction_kind_name(kind));
    if (corr.hash_a != hash_a || (hash_b != 0 && corr.hash_b != hash_b))
        throw StaleCorrectionError("correction set is stale: operand hash mismatch");
}

namespace {

// -sum of squares over an index range of a row or column.
Scalar neg_sq_sum_row(const Matrix& m, Index r, OpLedger& led) {
    Scalar acc = Scalar::zero(m.domain());
    for (Index c = 0; c < m.cols(); ++c) acc += square(m.at(r, c), led);
    return -acc;
}

Scalar neg_sq_sum_col(const Matrix& m, Index c, OpLedger& led) {
    Scalar acc = Scalar::zero(m.domain());
    for (Index r = 0; r < m.rows(); ++r) acc += square(m.at(r, c), led);
    return -acc;
}

// Element contributions for the 3-square family; z plays the a+jb role.
// Returns (-(a+b)^2 + b^2, -(a+b)^2 - a^2), 3 squarings with (a+b)^2 shared.
std::pair<Scalar, Scalar> ab_terms(const CScalar& z, OpLedger& led) {
    Scalar sq_sum = pm(z.re, z.im, led);
    Scalar sq_b = square(z.im, led);
    Scalar sq_a = square(z.re, led);
    return {sq_b - sq_sum, -sq_sum - sq_a};
}

// z plays the c+js role. Returns (-c^2 + (c+s)^2, -c^2 - (s-c)^2).
std::pair<Scalar, Scalar> cs_terms(const CScalar& z, OpLedger& led) {
    Scalar sq_c = square(z.re, led);
    Scalar sq_cs = pm(z.re, z.im, led);
    Scalar sq_sc = square(z.im - z.re, led);
    return {sq_cs - sq_c, -sq_c - sq_sc};
}

} // namespace

CorrectionSet real_mat_corrections(const Matrix& a, const Matrix& b, OpLedger& led) {
    if (a.cols() != b.rows()) throw DimensionError("real_mat_corrections: inner dims disagree");
    require_same_domain(a.at(0, 0), b.at(0, 0));
    CorrectionSet set{CorrectionKind::RealMat, a.content_hash(), b.content_hash(), {}, {}};
    std::vector<Scalar> sa, sb;
    sa.reserve(a.rows());
    sb.reserve(b.cols());
    for (Index i = 0; i < a.rows(); ++i) sa.push_back(neg_sq_sum_row(a, i, led));
    for (Index j = 0; j < b.cols(); ++j) sb.push_back(neg_sq_sum_col(b, j, led));
    set.terms["Sa"] = std::move(sa);
    set.terms["Sb"] = std::move(sb);
    return set;
}

CorrectionSet real_mat_corrections(const Matrix& a, const Matrix& b) {
    OpLedger scratch;
    return real_mat_corrections(a, b, scratch);
}

CorrectionSet transform_corrections(const Matrix& w, OpLedger& led) {
    CorrectionSet set{CorrectionKind::RealTransform, w.content_hash(), 0, {}, {}};
    std::vector<Scalar> sw;
    sw.reserve(w.rows());
    for (Index k = 0; k < w.rows(); ++k) sw.push_back(neg_sq_sum_row(w, k, led));
    set.terms["Sw"] = std::move(sw);
    return set;
}

CorrectionSet transform_corrections(const Matrix& w) {
    OpLedger scratch;
    return transform_corrections(w, scratch);
}

CorrectionSet conv_corrections(const std::vector<Scalar>& w, OpLedger& led) {
    if (w.empty()) throw DimensionError("conv_corrections: empty kernel");
    CorrectionSet set{CorrectionKind::RealConv1D, 0, 0, {}, {}};
    Scalar acc = Scalar::zero(w[0].domain());
    for (const auto& wi : w) acc += square(wi, led);
    set.terms["Sw"] = {-acc};
    return set;
}

CorrectionSet conv_corrections(const std::vector<Scalar>& w) {
    OpLedger scratch;
    return conv_corrections(w, scratch);
}

CorrectionSet conv2d_corrections(const Matrix& w, OpLedger& led) {
    CorrectionSet set{CorrectionKind::RealConv2D, w.content_hash(), 0, {}, {}};
    Scalar acc = Scalar::zero(w.domain());
    for (Index r = 0; r < w.rows(); ++r)
        for (Index c = 0; c < w.cols(); ++c) acc += square(w.at(r, c), led);
    set.terms["Sw"] = {-acc};
    return set;
}

CorrectionSet conv2d_corrections(const Matrix& w) {
    OpLedger scratch;
    return conv2d_corrections(w, scratch);
}

CorrectionSet complex4_corrections(const CMatrix& x, Side side, OpLedger& led) {
    CorrectionSet set{CorrectionKind::Complex4, x.content_hash(), 0, {}, {}};
    std::vector<Scalar> s;
    if (side == Side::Rows) {
        s.reserve(x.rows());
        for (Index h = 0; h < x.rows(); ++h) {
            Scalar acc = Scalar::zero(x.domain());
            for (Index i = 0; i < x.cols(); ++i) {
                const CScalar& z = x.at(h, i);
                acc += square(z.re, led) + square(z.im, led);
            }
            s.push_back(-acc);
        }
        set.terms["Sx"] = std::move(s);
    } else {
        s.reserve(x.cols());
        for (Index k = 0; k < x.cols(); ++k) {
            Scalar acc = Scalar::zero(x.domain());
            for (Index i = 0; i < x.rows(); ++i) {
                const CScalar& z = x.at(i, k);
                acc += square(z.re, led) + square(z.im, led);
            }
            s.push_back(-acc);
        }
        set.terms["Sy"] = std::move(s);
    }
    return set;
}

CorrectionSet complex4_corrections(const CMatrix& x, Side side) {
    OpLedger scratch;
    return complex4_corrections(x, side, scratch);
}

CorrectionSet complex3_corrections(const CMatrix& x, Side side, OpLedger& led) {
    CorrectionSet set{CorrectionKind::Complex3, x.content_hash(), 0, {}, {}};
    if (side == Side::Rows) {
        std::vector<Scalar> sab, sba;
        sab.reserve(x.rows());
        sba.reserve(x.rows());
        for (Index h = 0; h < x.rows(); ++h) {
            Scalar acc_ab = Scalar::zero(x.domain());
            Scalar acc_ba = Scalar::zero(x.domain());
            for (Index i = 0; i < x.cols(); ++i) {
                auto [t_ab, t_ba] = ab_terms(x.at(h, i), led);
                acc_ab += t_ab;
                acc_ba += t_ba;
            }
            sab.push_back(std::move(acc_ab));
            sba.push_back(std::move(acc_ba));
        }
        set.terms["Sab"] = std::move(sab);
        set.terms["Sba"] = std::move(sba);
    } else {
        std::vector<Scalar> scs, ssc;
        scs.reserve(x.cols());
        ssc.reserve(x.cols());
        for (Index k = 0; k < x.cols(); ++k) {
            Scalar acc_cs = Scalar::zero(x.domain());
            Scalar acc_sc = Scalar::zero(x.domain());
            for (Index i = 0; i < x.rows(); ++i) {
                auto [t_cs, t_sc] = cs_terms(x.at(i, k), led);
                acc_cs += t_cs;
                acc_sc += t_sc;
            }
            scs.push_back(std::move(acc_cs));
            ssc.push_back(std::move(acc_sc));
        }
        set.terms["Scs"] = std::move(scs);
        set.terms["Ssc"] = std::move(ssc);
    }
    return set;
}

CorrectionSet complex3_corrections(const CMatrix& x, Side side) {
    OpLedger scratch;
    return complex3_corrections(x, side, scratch);
}

CorrectionSet cmatmul4_corrections(const CMatrix& x, const CMatrix& y, OpLedger& led) {
    if (x.cols() != y.rows()) throw DimensionError("cmatmul4_corrections: inner dims disagree");
    CorrectionSet rows = complex4_corrections(x, Side::Rows, led);
    CorrectionSet cols = complex4_corrections(y, Side::Cols, led);
    CorrectionSet set{CorrectionKind::Complex4, x.content_hash(), y.content_hash(), {}, {}};
    set.terms["Sx"] = rows.term("Sx");
    set.terms["Sy"] = cols.term("Sy");
    return set;
}

CorrectionSet cmatmul3_corrections(const CMatrix& x, const CMatrix& y, OpLedger& led) {
    if (x.cols() != y.rows()) throw DimensionError("cmatmul3_corrections: inner dims disagree");
    CorrectionSet rows = complex3_corrections(x, Side::Rows, led);
    CorrectionSet cols = complex3_corrections(y, Side::Cols, led);
    CorrectionSet set{CorrectionKind::Complex3, x.content_hash(), y.content_hash(), {}, {}};
    set.terms["Sab"] = rows.term("Sab");
    set.terms["Sba"] = rows.term("Sba");
    set.terms["Scs"] = cols.term("Scs");
    set.terms["Ssc"] = cols.term("Ssc");
    return set;
}

CorrectionSet cmatmul4_corrections(const CMatrix& x, const CMatrix& y) {
    OpLedger scratch;
    return cmatmul4_corrections(x, y, scratch);
}

CorrectionSet cmatmul3_corrections(const CMatrix& x, const CMatrix& y) {
    OpLedger scratch;
    return cmatmul3_corrections(x, y, scratch);
}

CorrectionSet ctransform4_corrections(const CMatrix& w, OpLedger& led) {
    CorrectionSet rows = complex4_corrections(w, Side::Rows, led);
    CorrectionSet set{CorrectionKind::Complex4, w.content_hash(), 0, {}, {}};
    set.terms["Sk"] = rows.term("Sx");
    return set;
}

CorrectionSet ctransform4_corrections(const CMatrix& w) {
    OpLedger scratch;
    return ctransform4_corrections(w, scratch);
}

CorrectionSet ctransform3_corrections(const CMatrix& w, OpLedger& led) {
    // Coefficient row k plays the c+js role of the 3-square identity, so the
    // cs-side formulas run across rows here.
    CorrectionSet set{CorrectionKind::Complex3, w.content_hash(), 0, {}, {}};
    std::vector<Scalar> sxk, syk;
    sxk.reserve(w.rows());
    syk.reserve(w.rows());
    for (Index k = 0; k < w.rows(); ++k) {
        Scalar acc_x = Scalar::zero(w.domain());
        Scalar acc_y = Scalar::zero(w.domain());
        for (Index i = 0; i < w.cols(); ++i) {
            auto [t_cs, t_sc] = cs_terms(w.at(k, i), led);
            acc_x += t_cs;
            acc_y += t_sc;
        }
        sxk.push_back(std::move(acc_x));
        syk.push_back(std::move(acc_y));
    }
    set.terms["Sxk"] = std::move(sxk);
    set.terms["Syk"] = std::move(syk);
    return set;
}

CorrectionSet ctransform3_corrections(const CMatrix& w) {
    OpLedger scratch;
    return ctransform3_corrections(w, scratch);
}

CorrectionSet cconv4_corrections(const std::vector<CScalar>& w, OpLedger& led) {
    if (w.empty()) throw DimensionError("cconv4_corrections: empty kernel");
    CorrectionSet set{CorrectionKind::ComplexConv, 0, 0, {}, {}};
    Scalar acc = Scalar::zero(w[0].domain());
    for (const auto& wi : w) acc += square(wi.re, led) + square(wi.im, led);
    set.terms["Sw"] = {-acc};
    return set;
}

CorrectionSet cconv4_corrections(const std::vector<CScalar>& w) {
    OpLedger scratch;
    return cconv4_corrections(w, scratch);
}

CorrectionSet cconv3_corrections(const std::vector<CScalar>& w, OpLedger& led) {
    if (w.empty()) throw DimensionError("cconv3_corrections: empty kernel");
    CorrectionSet set{CorrectionKind::Complex3Conv, 0, 0, {}, {}};
    Scalar acc_re = Scalar::zero(w[0].domain());
    Scalar acc_im = Scalar::zero(w[0].domain());
    for (const auto& wi : w) {
        auto [t_cs, t_sc] = cs_terms(wi, led);
        acc_re += t_cs;
        acc_im += t_sc;
    }
    set.cterms["Sw"] = {CScalar(std::move(acc_re), std::move(acc_im))};
    return set;
}

CorrectionSet cconv3_corrections(const std::vector<CScalar>& w) {
    OpLedger scratch;
    return cconv3_corrections(w, scratch);
}

Scalar sample_common_term(const Scalar& x, OpLedger& led) {
    return square(x, led);
}

CScalar sample_common_term(const CScalar& x, SampleTermVariant variant, OpLedger& led) {
    switch (variant) {
        case SampleTermVariant::Cpm: {
            // (x^2+y^2)(1+j)
            Scalar mod = square(x.re, led) + square(x.im, led);
            return {mod, mod};
        }
        case SampleTermVariant::Cpm3: {
            // -(x+y)^2+y^2 + j(-(x+y)^2-x^2); these are the ab-side terms.
            auto [t_ab, t_ba] = ab_terms(x, led);
            return {std::move(t_ab), std::move(t_ba)};
        }
    }
    throw Error("unknown sample term variant");
}

std::shared_ptr<const CorrectionSet> CorrectionCache::find(const Key& key) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

std::shared_ptr<const CorrectionSet> CorrectionCache::put(const Key& key, CorrectionSet set) {
    std::lock_guard lock(mu_);
    auto sp = std::make_shared<const CorrectionSet>(std::move(set));
    entries_[key] = sp;
    return sp;
}

std::size_t CorrectionCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

} // namespace pmul
