#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pmul/hwsim.hpp"

namespace pmul {

using Rational = boost::multiprecision::cpp_rational;

/// Squarings-per-multiplication ratios for the square-based matmul forms,
/// as exact rationals.
///   real:     (MNP + MN + NP) / MNP  = 1 + 1/P + 1/M
///   complex4: (4MNP + 2MN + 2NP) / MNP = 4 + 2/P + 2/M
///   complex3: (3MNP + 3MN + 3NP) / MNP = 3 + 3/P + 3/M
Rational ratio_real(unsigned m, unsigned n, unsigned p);
Rational ratio_complex4(unsigned m, unsigned n, unsigned p);
Rational ratio_complex3(unsigned m, unsigned n, unsigned p);

/// Parametric gate-area model. The defaults encode the verbal claim that an
/// n-bit squarer costs about half an nxn multiplier; nothing here is
/// calibrated silicon data, every report is a model estimate.
struct AreaModel {
    double mult_coeff = 1.0;     // multiplier area = mult_coeff * n^2
    double squarer_factor = 0.5; // squarer = factor * same-width multiplier
    double adder_coeff = 1.0;    // adder area = adder_coeff * n

    double mult_area(int n) const { return mult_coeff * n * n; }
    double squarer_area(int n) const { return squarer_factor * mult_area(n); }
    double adder_area(int n) const { return adder_coeff * n; }
};

/// PE grid geometry for the estimate. rows*cols PEs; depth is the dot-product
/// width inside one PE (tensor core) and the accumulation depth used to size
/// accumulators.
struct AreaDims {
    Index rows = 1;
    Index cols = 1;
    Index depth = 1;
};

struct AreaReport {
    std::string arch;
    std::string variant;
    int n_bits = 0;
    std::size_t pe_count = 0;
    // Per multiplier position: what a MAC PE spends on its multiplier and
    // what the square-based datapath puts in its place (the squarer; the
    // pre-adder is accounted separately in the PE totals).
    double multiplier_area = 0;
    double replacement_area = 0;
    // Per-PE composition for this variant and for the MAC reference.
    double squarer_count = 0;
    double mult_count = 0;
    double pre_adder_area = 0;
    double squarer_area = 0;
    double pe_area = 0;
    double pe_area_mac = 0;
    // Whole-array totals (including shared sample squarers where present).
    double total_area = 0;
    double total_area_mac = 0;

    double mac_over_variant_ratio() const { return total_area_mac / total_area; }
    std::vector<std::pair<std::string, std::string>> rows() const;
    std::string to_text() const; // "key: value" lines, labeled "model estimate"
};

AreaReport area_estimate(Arch arch, Variant variant, int n_bits, const AreaDims& dims,
                         const AreaModel& model = {});

} // namespace pmul
