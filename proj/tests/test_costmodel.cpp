#include <doctest.h>

#include "pmul/costmodel.hpp"

#include "helpers.hpp"

using namespace pmul;
using namespace pmul::test;

TEST_CASE("closed-form ratios") {
    CHECK(ratio_real(4, 4, 4) == Rational(3, 2));
    CHECK(ratio_real(1, 1, 1) == Rational(3));
    CHECK(ratio_complex4(8, 3, 8) == Rational(9, 2));
    CHECK(ratio_complex3(6, 9, 6) == Rational(4));
    CHECK_THROWS_AS(ratio_real(0, 1, 1), DimensionError);
}

TEST_CASE("ratios decrease in M and P toward their limits, constant in N") {
    Rational prev = ratio_real(1, 5, 1);
    for (unsigned s = 2; s <= 64; s *= 2) {
        Rational cur = ratio_real(s, 5, s);
        CHECK(cur < prev);
        CHECK(cur > Rational(1));
        prev = cur;
    }
    CHECK(ratio_real(3, 1, 7) == ratio_real(3, 99, 7));
    CHECK(ratio_complex4(3, 1, 7) == ratio_complex4(3, 50, 7));
    CHECK(ratio_complex3(3, 2, 7) == ratio_complex3(3, 11, 7));

    CHECK(ratio_complex4(1u << 13, 1, 1u << 13) > Rational(4));
    CHECK(ratio_complex4(1u << 13, 1, 1u << 13) - Rational(4) < Rational(1, 1000));
    CHECK(ratio_complex3(1u << 13, 1, 1u << 13) > Rational(3));
    CHECK(ratio_complex3(1u << 13, 1, 1u << 13) - Rational(3) < Rational(1, 1000));
}

TEST_CASE("measured matmul ledgers equal the closed forms exactly") {
    SplitMix64 rng(139);
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            for (unsigned p = 1; p <= 4; ++p) {
                Matrix a = random_matrix(rng, m, n, Domain::ExactInt, -50, 50);
                Matrix b = random_matrix(rng, n, p, Domain::ExactInt, -50, 50);
                auto sq = matmul_sq(a, b);
                auto macr = matmul_mac(a, b);
                CHECK(Rational(sq.ops.squarings, macr.ops.multiplications) == ratio_real(m, n, p));
            }
}

TEST_CASE("area report for the worked 8-bit example") {
    auto r = area_estimate(Arch::PMAcc, Variant::SQ, 8, AreaDims{1, 1, 16});
    CHECK(r.multiplier_area == doctest::Approx(64.0));
    CHECK(r.squarer_area == doctest::Approx(0.5 * 81.0));
    CHECK(r.pre_adder_area == doctest::Approx(9.0));
    CHECK(r.replacement_area == doctest::Approx(40.5));
    CHECK(r.replacement_area < r.multiplier_area);
    CHECK(r.mac_over_variant_ratio() > 1.0);

    // Labeled as a model estimate.
    CHECK(r.to_text().find("model estimate") != std::string::npos);
}

TEST_CASE("squarer replacement beats the multiplier for n >= 4 at factor 0.5") {
    for (int n = 4; n <= 64; ++n) {
        auto r = area_estimate(Arch::PMAcc, Variant::SQ, n, AreaDims{1, 1, 16});
        CHECK(r.replacement_area < r.multiplier_area);
    }
}

TEST_CASE("factor 1.0 squarer is never cheaper than the multiplier") {
    AreaModel unit;
    unit.squarer_factor = 1.0;
    for (int n = 2; n <= 32; ++n) {
        auto r = area_estimate(Arch::PMAcc, Variant::SQ, n, AreaDims{1, 1, 16}, unit);
        CHECK(r.replacement_area >= r.multiplier_area);
    }
}

TEST_CASE("CPM3 uses 3 squarers to CPM's 4") {
    auto c3 = area_estimate(Arch::PMAcc, Variant::CPM3, 8, AreaDims{1, 1, 16});
    auto c4 = area_estimate(Arch::PMAcc, Variant::CPM, 8, AreaDims{1, 1, 16});
    CHECK(c3.squarer_count == 3);
    CHECK(c4.squarer_count == 4);
    // Same-width squarer area scales with the count alone.
    AreaModel m;
    CHECK(c3.squarer_count * m.squarer_area(9) / (c4.squarer_count * m.squarer_area(9)) ==
          doctest::Approx(0.75));
}

TEST_CASE("area scales linearly in each model parameter") {
    AreaModel base;
    AreaModel scaled;
    scaled.mult_coeff = 2.0;
    auto r1 = area_estimate(Arch::Systolic, Variant::MAC, 8, AreaDims{4, 4, 16}, base);
    auto r2 = area_estimate(Arch::Systolic, Variant::MAC, 8, AreaDims{4, 4, 16}, scaled);
    CHECK(r2.multiplier_area == doctest::Approx(2 * r1.multiplier_area));

    AreaModel adder2;
    adder2.adder_coeff = 3.0;
    auto s1 = area_estimate(Arch::Systolic, Variant::SQ, 8, AreaDims{4, 4, 16}, base);
    auto s2 = area_estimate(Arch::Systolic, Variant::SQ, 8, AreaDims{4, 4, 16}, adder2);
    CHECK(s2.pre_adder_area == doctest::Approx(3 * s1.pre_adder_area));
    CHECK(s2.squarer_area == doctest::Approx(s1.squarer_area));

    AreaModel sq2;
    sq2.squarer_factor = 0.25;
    auto q1 = area_estimate(Arch::TensorCore, Variant::SQ, 8, AreaDims{2, 2, 4}, base);
    auto q2 = area_estimate(Arch::TensorCore, Variant::SQ, 8, AreaDims{2, 2, 4}, sq2);
    CHECK(q2.squarer_area == doctest::Approx(0.5 * q1.squarer_area));
    CHECK(q1.pe_count == 4);
}

TEST_CASE("area estimate validates the arch/variant pair") {
    CHECK_THROWS_AS(area_estimate(Arch::Systolic, Variant::CPM3, 8, AreaDims{2, 2, 4}), Error);
}
