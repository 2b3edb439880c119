#include "pmul/costmodel.hpp"

#include <charconv>
#include <sstream>

namespace pmul {

namespace {

Rational ratio(unsigned m, unsigned n, unsigned p, unsigned f_inner, unsigned f_outer) {
    if (m == 0 || n == 0 || p == 0) throw DimensionError("ratio: zero dimension");
    const BigInt mnp = BigInt(m) * n * p;
    const BigInt num = f_inner * mnp + f_outer * (BigInt(m) * n + BigInt(n) * p);
    return Rational(num, mnp);
}

std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

Rational ratio_real(unsigned m, unsigned n, unsigned p) { return ratio(m, n, p, 1, 1); }
Rational ratio_complex4(unsigned m, unsigned n, unsigned p) { return ratio(m, n, p, 4, 2); }
Rational ratio_complex3(unsigned m, unsigned n, unsigned p) { return ratio(m, n, p, 3, 3); }

AreaReport area_estimate(Arch arch, Variant variant, int n_bits, const AreaDims& dims,
                         const AreaModel& model) {
    SimConfig probe;
    probe.arch = arch;
    probe.variant = variant;
    probe.validate();
    if (n_bits < 1) throw Error("area_estimate: n_bits must be positive");

    BitWidthPlan plan{n_bits, static_cast<int>(dims.depth < 1 ? 1 : dims.depth)};
    const int acc_bits = plan.accumulator_bits();
    const double acc_adder = model.adder_area(acc_bits);

    AreaReport r;
    r.arch = arch_name(arch);
    r.variant = variant_name(variant);
    r.n_bits = n_bits;

    // Datapath composition per PE. "mult positions" is how many real
    // multipliers the MAC reference PE holds in the same place.
    double mult_positions = 1;
    bool complex_pe = variant == Variant::CPM || variant == Variant::CPM3;
    double pe_area_variant = 0;

    switch (variant) {
        case Variant::MAC:
        case Variant::MACDirect:
        case Variant::MACTransposed:
            pe_area_variant = model.mult_area(n_bits) + acc_adder;
            r.mult_count = 1;
            break;
        case Variant::SQ:
            r.squarer_count = 1;
            r.pre_adder_area = model.adder_area(plan.sum_bits(2));
            r.squarer_area = model.squarer_area(plan.sum_bits(2));
            pe_area_variant = r.pre_adder_area + r.squarer_area + acc_adder;
            break;
        case Variant::CPM:
            r.squarer_count = 4;
            r.pre_adder_area = 4 * model.adder_area(plan.sum_bits(2));
            r.squarer_area = 4 * model.squarer_area(plan.sum_bits(2));
            pe_area_variant = r.pre_adder_area + r.squarer_area +
                              2 * model.adder_area(plan.square_bits(2)) + 2 * acc_adder;
            mult_positions = 4;
            break;
        case Variant::CPM3:
            r.squarer_count = 3;
            r.pre_adder_area = 6 * model.adder_area(plan.sum_bits(3));
            r.squarer_area = 3 * model.squarer_area(plan.sum_bits(3));
            pe_area_variant = r.pre_adder_area + r.squarer_area +
                              2 * model.adder_area(plan.square_bits(3)) + 2 * acc_adder;
            mult_positions = 4;
            break;
    }

    // MAC reference PE occupying the same slot.
    double pe_area_mac;
    if (complex_pe) {
        pe_area_mac = 4 * model.mult_area(n_bits) + 2 * model.adder_area(2 * n_bits) +
                      2 * acc_adder;
    } else {
        pe_area_mac = model.mult_area(n_bits) + acc_adder;
    }

    r.multiplier_area = mult_positions * model.mult_area(n_bits);
    r.replacement_area =
        variant_is_square_based(variant) ? r.squarer_area : r.multiplier_area;

    // PE count and per-PE replication by architecture.
    std::size_t pe_count = 1;
    double per_pe_scale = 1.0; // tensor core PEs hold a `depth`-wide dot unit
    double shared_area = 0;    // transform/conv engines share one sample squarer
    switch (arch) {
        case Arch::PMAcc: pe_count = 1; break;
        case Arch::Systolic: pe_count = dims.rows * dims.cols; break;
        case Arch::TensorCore:
            pe_count = dims.rows * dims.cols;
            per_pe_scale = static_cast<double>(dims.depth);
            break;
        case Arch::TransformEngine:
            pe_count = dims.rows;
            if (variant_is_square_based(variant))
                shared_area = model.squarer_area(n_bits) * (complex_pe ? 2 : 1);
            break;
        case Arch::ConvEngine:
            pe_count = dims.rows;
            if (variant_is_square_based(variant))
                shared_area = model.squarer_area(n_bits) * (complex_pe ? 2 : 1);
            break;
    }

    r.pe_count = pe_count;
    r.pe_area = pe_area_variant * per_pe_scale;
    r.pe_area_mac = pe_area_mac * per_pe_scale;
    r.total_area = r.pe_area * static_cast<double>(pe_count) + shared_area;
    r.total_area_mac = r.pe_area_mac * static_cast<double>(pe_count);
    return r;
}

std::vector<std::pair<std::string, std::string>> AreaReport::rows() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("arch", arch);
    out.emplace_back("variant", variant);
    out.emplace_back("n_bits", std::to_string(n_bits));
    out.emplace_back("pe_count", std::to_string(pe_count));
    out.emplace_back("multiplier_area", fmt(multiplier_area));
    out.emplace_back("replacement_area", fmt(replacement_area));
    out.emplace_back("squarer_count", fmt(squarer_count));
    out.emplace_back("pre_adder_area", fmt(pre_adder_area));
    out.emplace_back("squarer_area", fmt(squarer_area));
    out.emplace_back("pe_area", fmt(pe_area));
    out.emplace_back("pe_area_mac", fmt(pe_area_mac));
    out.emplace_back("total_area", fmt(total_area));
    out.emplace_back("total_area_mac", fmt(total_area_mac));
    out.emplace_back("mac_over_variant_ratio", fmt(mac_over_variant_ratio()));
    return out;
}

std::string AreaReport::to_text() const {
    std::ostringstream os;
    os << "# area model estimate (not calibrated silicon data)\n";
    for (const auto& [k, v] : rows()) os << k << ": " << v << "\n";
    return os.str();
}

} // namespace pmul
