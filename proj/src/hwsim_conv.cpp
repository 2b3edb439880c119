#include "hwsim_util.hpp"

namespace pmul {

using namespace detail;

// Streaming FIR engines, one sample in per cycle, one valid output per cycle
// once warm. Transposed forms broadcast each sample to all N taps and push
// partial outputs along a register chain d[1..N-1]; the direct MAC form keeps
// a sample shift register instead. Square-based taps subtract the shared
// per-sample term each cycle; the kernel correction is added at the output
// stage only.

ConvResult conv_engine_run(const std::vector<Scalar>& w, const std::vector<Scalar>& x,
                           const CorrectionSet* s_w, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::ConvEngine) throw Error("conv_engine_run: arch mismatch");
    if (cfg.variant != Variant::MACDirect && cfg.variant != Variant::MACTransposed &&
        cfg.variant != Variant::SQ)
        throw Error("real conv engine supports MAC-direct, MAC-transposed and SQ");
    if (w.empty()) throw DimensionError("conv_engine_run: empty kernel");
    if (w.size() > x.size()) throw DimensionError("conv_engine_run: kernel longer than signal");
    require_same_domain(w[0], x[0]);

    const bool sq = cfg.variant == Variant::SQ;
    Scalar sw_val = Scalar::zero(w[0].domain());
    if (sq) {
        if (!s_w) throw Error("conv_engine_run: SQ variant needs corrections");
        if (s_w->kind != CorrectionKind::RealConv1D)
            throw StaleCorrectionError("conv_engine_run: corrections must be RealConv1D");
        sw_val = s_w->scalar_term("Sw");
    }

    const std::size_t n = w.size();
    const Domain dom = w[0].domain();
    TraceBuilder tb(cfg);
    const int in_bits = cfg.bitplan.sum_bits(1);
    const int acc_bits = cfg.bitplan.accumulator_bits();

    std::vector<Scalar> y;
    y.reserve(x.size() - n + 1);

    if (cfg.variant == Variant::MACDirect) {
        // Sample shift register s[0..n-1]; all taps read it combinationally.
        std::vector<Scalar> sreg(n, Scalar::zero(dom));
        for (std::size_t t = 0; t < x.size(); ++t) {
            for (std::size_t c = 0; c + 1 < n; ++c) sreg[c] = sreg[c + 1];
            sreg[n - 1] = x[t];
            tb.check(t, "s[" + std::to_string(n - 1) + "]", kAcc, x[t], in_bits);
            if (tb.wants(TraceLevel::Registers))
                for (std::size_t c = 0; c < n; ++c)
                    tb.event(t, "s[" + std::to_string(c) + "]", kAcc, sreg[c],
                             TraceLevel::Registers);
            if (t + 1 >= n) {
                Scalar out = Scalar::zero(dom);
                for (std::size_t i = 0; i < n; ++i) {
                    Scalar term = w[i] * sreg[i];
                    tb.check(t, "out", kAcc, term, cfg.bitplan.square_bits(1));
                    out += term;
                }
                tb.check(t, "out", kOut, out, acc_bits);
                tb.event(t, "out", kOut, out, TraceLevel::Final);
                y.push_back(std::move(out));
            }
        }
    } else {
        // Transposed chain; d[c] holds the output completing in c cycles.
        std::vector<Scalar> d(n, Scalar::zero(dom)); // d[0] unused
        auto tap = [&](std::size_t i, const Scalar& xt, std::uint64_t cyc,
                       const std::string& unit) {
            if (sq) {
                Scalar sum = w[i] + xt;
                tb.check(cyc, unit, kAcc, sum, cfg.bitplan.sum_bits(2));
                Scalar term = sum * sum;
                tb.check(cyc, unit, kAcc, term, cfg.bitplan.square_bits(2));
                return term;
            }
            Scalar term = w[i] * xt;
            tb.check(cyc, unit, kAcc, term, cfg.bitplan.square_bits(1));
            return term;
        };
        for (std::size_t t = 0; t < x.size(); ++t) {
            tb.check(t, "in", kAcc, x[t], in_bits);
            Scalar shared_sq = Scalar::zero(dom);
            if (sq) {
                shared_sq = x[t] * x[t];
                tb.check(t, "sqx", kAcc, shared_sq, cfg.bitplan.square_bits(1));
            }
            // Output stage: completes y[t-n+1] once warm.
            if (t + 1 >= n) {
                Scalar out = d[1 % n] + tap(n - 1, x[t], t, "out");
                if (sq) {
                    out -= shared_sq;
                    out += sw_val; // kernel correction applied once, at the end
                }
                tb.check(t, "out", kOut, out, acc_bits);
                tb.event(t, "out", kOut, out, TraceLevel::Final);
                y.push_back(std::move(out));
            }
            // Chain update, oldest first so each d[c] reads last cycle's d[c+1].
            for (std::size_t c = 1; c + 1 <= n - 1; ++c) {
                d[c] = d[c + 1] + tap(n - 1 - c, x[t], t, "d[" + std::to_string(c) + "]");
                if (sq) d[c] -= shared_sq;
                tb.event(t, "d[" + std::to_string(c) + "]", kAcc, d[c], TraceLevel::Registers);
                tb.check(t, "d[" + std::to_string(c) + "]", kAcc, d[c], acc_bits);
            }
            if (n >= 2) {
                d[n - 1] = tap(0, x[t], t, "d[" + std::to_string(n - 1) + "]");
                if (sq) d[n - 1] -= shared_sq;
                tb.event(t, "d[" + std::to_string(n - 1) + "]", kAcc, d[n - 1],
                         TraceLevel::Registers);
                tb.check(t, "d[" + std::to_string(n - 1) + "]", kAcc, d[n - 1], acc_bits);
            }
        }
    }

    for (std::size_t k = 0; k < y.size(); ++k)
        tb.final_kv("O[" + std::to_string(k) + "]", y[k].str());
    ConvResult res{std::move(y), tb.take(x.size())};
    return res;
}

CConvResult conv_engine_run(const std::vector<CScalar>& w, const std::vector<CScalar>& x,
                            const CorrectionSet* s_w, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::ConvEngine) throw Error("conv_engine_run: arch mismatch");
    if (cfg.variant != Variant::MACTransposed && cfg.variant != Variant::CPM &&
        cfg.variant != Variant::CPM3)
        throw Error("complex conv engine supports MAC-transposed, CPM and CPM3");
    if (w.empty()) throw DimensionError("conv_engine_run: empty kernel");
    if (w.size() > x.size()) throw DimensionError("conv_engine_run: kernel longer than signal");
    require_same_domain(w[0].re, x[0].re);

    const std::size_t n = w.size();
    const Domain dom = w[0].domain();
    CScalar sw_val = CScalar::zero(dom);
    if (cfg.variant == Variant::CPM) {
        if (!s_w) throw Error("conv_engine_run: CPM variant needs corrections");
        if (s_w->kind != CorrectionKind::ComplexConv)
            throw StaleCorrectionError("conv_engine_run: corrections must be ComplexConv");
        const Scalar& sw = s_w->scalar_term("Sw");
        sw_val = CScalar(sw, sw); // S_w(1+j)
    } else if (cfg.variant == Variant::CPM3) {
        if (!s_w) throw Error("conv_engine_run: CPM3 variant needs corrections");
        if (s_w->kind != CorrectionKind::Complex3Conv)
            throw StaleCorrectionError("conv_engine_run: corrections must be Complex3Conv");
        sw_val = s_w->cscalar_term("Sw");
    }

    TraceBuilder tb(cfg);
    const int in_bits = cfg.bitplan.sum_bits(1);
    const int acc_bits = cfg.bitplan.accumulator_bits();
    OpLedger scratch;

    auto tap = [&](std::size_t i, const CScalar& xt, const CScalar& shared, std::uint64_t cyc,
                   const std::string& unit) {
        if (cfg.variant == Variant::CPM) {
            CpmParts p = cpm(w[i], xt, scratch);
            tb.check(cyc, unit, kAcc, p.re_part, cfg.bitplan.square_bits(2));
            tb.check(cyc, unit, kAcc, p.im_part, cfg.bitplan.square_bits(2));
            return CScalar(p.re_part - shared.re, p.im_part - shared.im);
        }
        if (cfg.variant == Variant::CPM3) {
            Cpm3Parts t = cpm3(xt, w[i], scratch);
            tb.check(cyc, unit, kAcc, t.t1, cfg.bitplan.square_bits(3));
            tb.check(cyc, unit, kAcc, t.t2, cfg.bitplan.square_bits(3));
            tb.check(cyc, unit, kAcc, t.t3, cfg.bitplan.square_bits(3));
            return CScalar(t.t1 - t.t2 + shared.re, t.t1 + t.t3 + shared.im);
        }
        return xt * w[i];
    };

    std::vector<CScalar> d(n, CScalar::zero(dom));
    std::vector<CScalar> z;
    z.reserve(x.size() - n + 1);
    for (std::size_t t = 0; t < x.size(); ++t) {
        tb.check(t, "in", kAcc, x[t], in_bits);
        CScalar shared = CScalar::zero(dom);
        if (cfg.variant == Variant::CPM)
            shared = sample_common_term(x[t], SampleTermVariant::Cpm, scratch);
        else if (cfg.variant == Variant::CPM3)
            shared = sample_common_term(x[t], SampleTermVariant::Cpm3, scratch);
        if (t + 1 >= n) {
            CScalar out = d[1 % n] + tap(n - 1, x[t], shared, t, "out");
            if (variant_is_square_based(cfg.variant)) out += sw_val;
            tb.check(t, "out", kOut, out, acc_bits);
            tb.event(t, "out", kOut, out, TraceLevel::Final);
            z.push_back(std::move(out));
        }
        for (std::size_t c = 1; c + 1 <= n - 1; ++c) {
            d[c] = d[c + 1] + tap(n - 1 - c, x[t], shared, t, "d[" + std::to_string(c) + "]");
            tb.event(t, "d[" + std::to_string(c) + "]", kAcc, d[c], TraceLevel::Registers);
            tb.check(t, "d[" + std::to_string(c) + "]", kAcc, d[c], acc_bits);
        }
        if (n >= 2) {
            d[n - 1] = tap(0, x[t], shared, t, "d[" + std::to_string(n - 1) + "]");
            tb.event(t, "d[" + std::to_string(n - 1) + "]", kAcc, d[n - 1], TraceLevel::Registers);
            tb.check(t, "d[" + std::to_string(n - 1) + "]", kAcc, d[n - 1], acc_bits);
        }
    }

    for (std::size_t k = 0; k < z.size(); ++k)
        tb.final_kv("O[" + std::to_string(k) + "]", z[k].str());
    CConvResult res{std::move(z), tb.take(x.size())};
    return res;
}

} // namespace pmul
