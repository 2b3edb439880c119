#include "hwsim_util.hpp"

namespace pmul {

using namespace detail;

// K parallel accumulating registers, one sample broadcast per cycle, done in
// exactly N compute cycles. Square-based variants share one sample-term
// computation per cycle across all K taps and return the doubled transform.

TransformResult transform_engine_run(const Matrix& coeffs, const std::vector<Scalar>& x,
                                     const CorrectionSet* s, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::TransformEngine) throw Error("transform_engine_run: arch mismatch");
    if (cfg.variant != Variant::MAC && cfg.variant != Variant::SQ)
        throw Error("real transform engine supports MAC and SQ only");
    if (coeffs.cols() != x.size())
        throw DimensionError("transform_engine_run: coefficient columns != sample count");
    require_same_domain(coeffs.at(0, 0), x.at(0));

    const bool sq = cfg.variant == Variant::SQ;
    const std::vector<Scalar>* sw = nullptr;
    if (sq) {
        if (!s) throw Error("transform_engine_run: SQ variant needs corrections");
        require_fresh(*s, CorrectionKind::RealTransform, coeffs.content_hash());
        sw = &s->term("Sw");
    }

    const Index k_regs = coeffs.rows(), n = coeffs.cols();
    const Domain dom = coeffs.domain();
    TraceBuilder tb(cfg);
    const int in_bits = cfg.bitplan.sum_bits(1);
    const int acc_bits = cfg.bitplan.accumulator_bits();
    auto unit = [](Index k) { return "x[" + std::to_string(k) + "]"; };

    std::vector<Scalar> regs(k_regs, Scalar::zero(dom));
    for (Index k = 0; k < k_regs; ++k) {
        if (sq) regs[k] = (*sw)[k];
        tb.event(0, unit(k), kInit, regs[k], TraceLevel::Registers);
        tb.check(0, unit(k), kInit, regs[k], acc_bits);
    }

    for (Index i = 0; i < n; ++i) {
        const std::uint64_t cyc = i + 1;
        tb.check(cyc, "in", kAcc, x[i], in_bits);
        Scalar shared_sq = Scalar::zero(dom);
        if (sq) {
            shared_sq = x[i] * x[i]; // the one shared squarer
            tb.check(cyc, "sqx", kAcc, shared_sq, cfg.bitplan.square_bits(1));
        }
        for (Index k = 0; k < k_regs; ++k) {
            tb.check(cyc, unit(k), kRega, coeffs.at(k, i), in_bits);
            if (sq) {
                Scalar sum = coeffs.at(k, i) + x[i];
                tb.check(cyc, unit(k), kAcc, sum, cfg.bitplan.sum_bits(2));
                Scalar term = sum * sum;
                tb.check(cyc, unit(k), kAcc, term, cfg.bitplan.square_bits(2));
                regs[k] += term - shared_sq;
            } else {
                Scalar term = coeffs.at(k, i) * x[i];
                tb.check(cyc, unit(k), kAcc, term, cfg.bitplan.square_bits(1));
                regs[k] += term;
            }
            tb.event(cyc, unit(k), kAcc, regs[k], TraceLevel::Registers);
            tb.check(cyc, unit(k), kAcc, regs[k], acc_bits);
        }
    }

    const std::uint64_t last = n;
    for (Index k = 0; k < k_regs; ++k) {
        tb.event(last, unit(k), kOut, regs[k], TraceLevel::Final);
        tb.final_kv("O[" + std::to_string(k) + "]", regs[k].str());
    }
    TransformResult res{std::move(regs), tb.take(last + 1)};
    return res;
}

CTransformResult transform_engine_run(const CMatrix& coeffs, const std::vector<CScalar>& x,
                                      const CorrectionSet* s, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::TransformEngine) throw Error("transform_engine_run: arch mismatch");
    if (cfg.variant != Variant::MAC && cfg.variant != Variant::CPM && cfg.variant != Variant::CPM3)
        throw Error("complex transform engine supports MAC, CPM and CPM3");
    if (coeffs.cols() != x.size())
        throw DimensionError("transform_engine_run: coefficient columns != sample count");
    require_same_domain(coeffs.at(0, 0).re, x.at(0).re);

    const Index k_regs = coeffs.rows(), n = coeffs.cols();
    const Domain dom = coeffs.domain();
    const std::vector<Scalar>* sk = nullptr;
    const std::vector<Scalar>* sxk = nullptr;
    const std::vector<Scalar>* syk = nullptr;
    if (cfg.variant == Variant::CPM) {
        if (!s) throw Error("transform_engine_run: CPM variant needs corrections");
        require_fresh(*s, CorrectionKind::Complex4, coeffs.content_hash());
        sk = &s->term("Sk");
    } else if (cfg.variant == Variant::CPM3) {
        if (!s) throw Error("transform_engine_run: CPM3 variant needs corrections");
        require_fresh(*s, CorrectionKind::Complex3, coeffs.content_hash());
        sxk = &s->term("Sxk");
        syk = &s->term("Syk");
    }

    TraceBuilder tb(cfg);
    const int in_bits = cfg.bitplan.sum_bits(1);
    const int acc_bits = cfg.bitplan.accumulator_bits();
    auto unit = [](Index k) { return "x[" + std::to_string(k) + "]"; };

    std::vector<CScalar> regs(k_regs, CScalar::zero(dom));
    for (Index k = 0; k < k_regs; ++k) {
        if (cfg.variant == Variant::CPM)
            regs[k] = CScalar((*sk)[k], (*sk)[k]); // S_k(1+j)
        else if (cfg.variant == Variant::CPM3)
            regs[k] = CScalar((*sxk)[k], (*syk)[k]);
        tb.event(0, unit(k), kInit, regs[k], TraceLevel::Registers);
        tb.check(0, unit(k), kInit, regs[k], acc_bits);
    }

    OpLedger scratch;
    for (Index i = 0; i < n; ++i) {
        const std::uint64_t cyc = i + 1;
        tb.check(cyc, "in", kAcc, x[i], in_bits);
        CScalar shared = CScalar::zero(dom);
        if (cfg.variant == Variant::CPM)
            shared = sample_common_term(x[i], SampleTermVariant::Cpm, scratch);
        else if (cfg.variant == Variant::CPM3)
            shared = sample_common_term(x[i], SampleTermVariant::Cpm3, scratch);
        for (Index k = 0; k < k_regs; ++k) {
            tb.check(cyc, unit(k), kRega, coeffs.at(k, i), in_bits);
            if (cfg.variant == Variant::CPM) {
                CpmParts parts = cpm(coeffs.at(k, i), x[i], scratch);
                tb.check(cyc, unit(k), kAcc, parts.re_part, cfg.bitplan.square_bits(2));
                tb.check(cyc, unit(k), kAcc, parts.im_part, cfg.bitplan.square_bits(2));
                regs[k].re += parts.re_part - shared.re;
                regs[k].im += parts.im_part - shared.im;
            } else if (cfg.variant == Variant::CPM3) {
                Cpm3Parts t = cpm3(x[i], coeffs.at(k, i), scratch);
                tb.check(cyc, unit(k), kAcc, t.t1, cfg.bitplan.square_bits(3));
                tb.check(cyc, unit(k), kAcc, t.t2, cfg.bitplan.square_bits(3));
                tb.check(cyc, unit(k), kAcc, t.t3, cfg.bitplan.square_bits(3));
                regs[k].re += t.t1 - t.t2 + shared.re;
                regs[k].im += t.t1 + t.t3 + shared.im;
            } else {
                regs[k] += coeffs.at(k, i) * x[i];
            }
            tb.event(cyc, unit(k), kAcc, regs[k], TraceLevel::Registers);
            tb.check(cyc, unit(k), kAcc, regs[k], acc_bits);
        }
    }

    const std::uint64_t last = n;
    for (Index k = 0; k < k_regs; ++k) {
        tb.event(last, unit(k), kOut, regs[k], TraceLevel::Final);
        tb.final_kv("O[" + std::to_string(k) + "]", regs[k].str());
    }
    CTransformResult res{std::move(regs), tb.take(last + 1)};
    return res;
}

} // namespace pmul
