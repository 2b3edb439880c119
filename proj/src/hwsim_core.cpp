#include <ostream>
#include <sstream>

#include "hwsim_util.hpp"

namespace pmul {

using namespace detail;

const char* arch_name(Arch a) {
    switch (a) {
        case Arch::PMAcc: return "pmacc";
        case Arch::Systolic: return "systolic";
        case Arch::TensorCore: return "tensorcore";
        case Arch::TransformEngine: return "transform";
        case Arch::ConvEngine: return "conv";
    }
    return "?";
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::MAC: return "MAC";
        case Variant::MACDirect: return "MAC-direct";
        case Variant::MACTransposed: return "MAC-transposed";
        case Variant::SQ: return "SQ";
        case Variant::CPM: return "CPM";
        case Variant::CPM3: return "CPM3";
    }
    return "?";
}

bool variant_is_square_based(Variant v) {
    return v == Variant::SQ || v == Variant::CPM || v == Variant::CPM3;
}

Arch parse_arch(const std::string& s) {
    if (s == "pmacc") return Arch::PMAcc;
    if (s == "systolic") return Arch::Systolic;
    if (s == "tensorcore") return Arch::TensorCore;
    if (s == "transform") return Arch::TransformEngine;
    if (s == "conv") return Arch::ConvEngine;
    throw Error("unknown architecture '" + s + "'");
}

Variant parse_variant(const std::string& s) {
    if (s == "MAC" || s == "mac") return Variant::MAC;
    if (s == "MAC-direct" || s == "mac-direct") return Variant::MACDirect;
    if (s == "MAC-transposed" || s == "mac-transposed") return Variant::MACTransposed;
    if (s == "SQ" || s == "sq") return Variant::SQ;
    if (s == "CPM" || s == "cpm") return Variant::CPM;
    if (s == "CPM3" || s == "cpm3") return Variant::CPM3;
    throw Error("unknown variant '" + s + "'");
}

TraceLevel parse_trace_level(const std::string& s) {
    if (s == "final") return TraceLevel::Final;
    if (s == "registers") return TraceLevel::Registers;
    if (s == "full") return TraceLevel::Full;
    throw Error("unknown trace level '" + s + "'");
}

void SimConfig::validate() const {
    auto ok = [&](std::initializer_list<Variant> allowed) {
        for (Variant v : allowed)
            if (v == variant) return true;
        return false;
    };
    bool legal = false;
    switch (arch) {
        case Arch::PMAcc: legal = ok({Variant::MAC, Variant::SQ, Variant::CPM, Variant::CPM3}); break;
        case Arch::Systolic: legal = ok({Variant::MAC, Variant::SQ}); break;
        case Arch::TensorCore: legal = ok({Variant::MAC, Variant::SQ}); break;
        case Arch::TransformEngine:
            legal = ok({Variant::MAC, Variant::SQ, Variant::CPM, Variant::CPM3});
            break;
        case Arch::ConvEngine:
            legal = ok({Variant::MACDirect, Variant::MACTransposed, Variant::SQ, Variant::CPM,
                        Variant::CPM3});
            break;
    }
    if (!legal)
        throw Error(std::string("variant ") + variant_name(variant) + " is not defined for " +
                    arch_name(arch));
}

std::string SimTrace::to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
}

void SimTrace::write_csv(std::ostream& os) const {
    os << "cycle,unit,signal,value\n";
    for (const auto& e : events)
        os << e.cycle << ',' << e.unit << ',' << e.signal << ',' << e.value << '\n';
}

// ---- PM accumulator ------------------------------------------------------------

PmAccResult pm_accumulator_run(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                               const Scalar& init, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::PMAcc) throw Error("pm_accumulator_run: config arch mismatch");
    if (cfg.variant != Variant::MAC && cfg.variant != Variant::SQ)
        throw Error("real pm_accumulator_run supports MAC and SQ only");
    if (a.size() != b.size()) throw DimensionError("pm_accumulator_run: sequence length mismatch");

    TraceBuilder tb(cfg);
    const int acc_bits = cfg.bitplan.accumulator_bits();
    const std::string unit = "acc0";

    Scalar acc = init;
    tb.event(0, unit, kInit, acc, TraceLevel::Registers);
    tb.check(0, unit, kInit, acc, acc_bits);
    for (std::size_t t = 0; t < a.size(); ++t) {
        const std::uint64_t cyc = t + 1;
        tb.check(cyc, unit, kAcc, a[t], cfg.bitplan.sum_bits(1));
        tb.check(cyc, unit, kAcc, b[t], cfg.bitplan.sum_bits(1));
        if (cfg.variant == Variant::SQ) {
            Scalar sum = a[t] + b[t];
            tb.check(cyc, unit, kAcc, sum, cfg.bitplan.sum_bits(2));
            Scalar sq = sum * sum;
            tb.check(cyc, unit, kAcc, sq, cfg.bitplan.square_bits(2));
            acc += sq;
        } else {
            Scalar prod = a[t] * b[t];
            tb.check(cyc, unit, kAcc, prod, cfg.bitplan.square_bits(1));
            acc += prod;
        }
        tb.event(cyc, unit, kAcc, acc, TraceLevel::Registers);
        tb.check(cyc, unit, kAcc, acc, acc_bits);
    }
    const std::uint64_t last = a.size();
    tb.event(last, unit, kOut, acc, TraceLevel::Final);
    tb.final_kv("O", acc.str());
    PmAccResult res{acc, tb.take(last + 1)};
    return res;
}

CPmAccResult pm_accumulator_run(const std::vector<CScalar>& x, const std::vector<CScalar>& y,
                                const CScalar& init, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::PMAcc) throw Error("pm_accumulator_run: config arch mismatch");
    if (cfg.variant != Variant::MAC && cfg.variant != Variant::CPM && cfg.variant != Variant::CPM3)
        throw Error("complex pm_accumulator_run supports MAC, CPM and CPM3");
    if (x.size() != y.size()) throw DimensionError("pm_accumulator_run: sequence length mismatch");

    TraceBuilder tb(cfg);
    const int acc_bits = cfg.bitplan.accumulator_bits();
    const std::string unit = "acc0";

    CScalar acc = init;
    tb.event(0, unit, kInit, acc, TraceLevel::Registers);
    tb.check(0, unit, kInit, acc, acc_bits);
    OpLedger scratch;
    for (std::size_t t = 0; t < x.size(); ++t) {
        const std::uint64_t cyc = t + 1;
        tb.check(cyc, unit, kAcc, x[t], cfg.bitplan.sum_bits(1));
        tb.check(cyc, unit, kAcc, y[t], cfg.bitplan.sum_bits(1));
        if (cfg.variant == Variant::CPM) {
            CpmParts p = cpm(x[t], y[t], scratch);
            tb.check(cyc, unit, kAcc, p.re_part, cfg.bitplan.accumulator_bits());
            tb.check(cyc, unit, kAcc, p.im_part, cfg.bitplan.accumulator_bits());
            acc.re += p.re_part;
            acc.im += p.im_part;
        } else if (cfg.variant == Variant::CPM3) {
            Cpm3Parts p = cpm3(x[t], y[t], scratch);
            tb.check(cyc, unit, kAcc, p.t1, cfg.bitplan.square_bits(3));
            tb.check(cyc, unit, kAcc, p.t2, cfg.bitplan.square_bits(3));
            tb.check(cyc, unit, kAcc, p.t3, cfg.bitplan.square_bits(3));
            acc.re += p.t1 - p.t2;
            acc.im += p.t1 + p.t3;
        } else {
            acc += x[t] * y[t];
        }
        tb.event(cyc, unit, kAcc, acc, TraceLevel::Registers);
        tb.check(cyc, unit, kAcc, acc, acc_bits);
    }
    const std::uint64_t last = x.size();
    tb.event(last, unit, kOut, acc, TraceLevel::Final);
    tb.final_kv("O", acc.str());
    CPmAccResult res{acc, tb.take(last + 1)};
    return res;
}

} // namespace pmul
