// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance is pinned here, in code.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pmul/costmodel.hpp"
#include "pmul/hwsim.hpp"
#include "pmul/kernels_complex.hpp"
#include "pmul/kernels_real.hpp"
#include "pmul/rng.hpp"

using namespace pmul;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s :: %s\n", pass ? "PASS" : "FAIL", num, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

constexpr long long kValRange = 32768; // +/- 2^15
constexpr Index kMaxDim = 16;

Index dim(SplitMix64& rng) { return 1 + rng.next() % kMaxDim; }

// ---- criterion 1: real oracle equivalence ------------------------------------

bool real_case(SplitMix64& rng, int which) {
    switch (which) {
        case 0: {
            Matrix a = random_matrix(rng, dim(rng), dim(rng), Domain::ExactInt, -kValRange,
                                     kValRange);
            Matrix b = random_matrix(rng, a.cols(), dim(rng), Domain::ExactInt, -kValRange,
                                     kValRange);
            return matmul_sq(a, b).value == matmul_mac(a, b).value;
        }
        case 1: {
            Matrix w = random_matrix(rng, dim(rng), dim(rng), Domain::ExactInt, -kValRange,
                                     kValRange);
            auto x = random_matrix(rng, 1, w.cols(), Domain::ExactInt, -kValRange, kValRange)
                         .data();
            return transform_sq(w, x).value == transform_mac(w, x).value;
        }
        case 2: {
            Index n = dim(rng);
            auto w = random_matrix(rng, 1, n, Domain::ExactInt, -kValRange, kValRange).data();
            auto x = random_matrix(rng, 1, n + dim(rng), Domain::ExactInt, -kValRange, kValRange)
                         .data();
            return conv1d_sq(w, x).value == conv1d_mac(w, x).value;
        }
        default: {
            Index kr = 1 + rng.next() % 4, kc = 1 + rng.next() % 4;
            Matrix w = random_matrix(rng, kr, kc, Domain::ExactInt, -kValRange, kValRange);
            Matrix x = random_matrix(rng, kr + rng.next() % 12, kc + rng.next() % 12,
                                     Domain::ExactInt, -kValRange, kValRange);
            return conv2d_sq(w, x).value == conv2d_mac(w, x).value;
        }
    }
}

void criterion1() {
    const char* names[] = {"matmul_sq", "transform_sq", "conv1d_sq", "conv2d_sq"};
    std::string detail;
    bool pass = true;
    for (int which = 0; which < 4; ++which) {
        SplitMix64 rng(1000 + which);
        int ok = 0;
        for (int i = 0; i < 1000; ++i) ok += real_case(rng, which) ? 1 : 0;
        detail += std::string(names[which]) + " " + std::to_string(ok) + "/1000 ";
        pass = pass && ok == 1000;
    }
    report(1, "real kernels bit-exact vs MAC oracles", pass, detail + "(exact)");
}

// ---- criterion 2: complex oracle equivalence -----------------------------------

bool complex_case(SplitMix64& rng, int which) {
    switch (which) {
        case 0:
        case 1: {
            CMatrix x = random_cmatrix(rng, dim(rng), dim(rng), Domain::ExactInt, -kValRange,
                                       kValRange);
            CMatrix y = random_cmatrix(rng, x.cols(), dim(rng), Domain::ExactInt, -kValRange,
                                       kValRange);
            CMatrix want = cmatmul_mac(x, y).value;
            return (which == 0 ? cmatmul_sq4(x, y).value : cmatmul_sq3(x, y).value) == want;
        }
        case 2:
        case 3: {
            CMatrix w = random_cmatrix(rng, dim(rng), dim(rng), Domain::ExactInt, -kValRange,
                                       kValRange);
            auto x = random_cmatrix(rng, 1, w.cols(), Domain::ExactInt, -kValRange, kValRange)
                         .data();
            auto want = ctransform_mac(w, x).value;
            return (which == 2 ? ctransform_sq4(w, x).value : ctransform_sq3(w, x).value) == want;
        }
        default: {
            Index n = dim(rng);
            auto w = random_cmatrix(rng, 1, n, Domain::ExactInt, -kValRange, kValRange).data();
            auto x = random_cmatrix(rng, 1, n + dim(rng), Domain::ExactInt, -kValRange, kValRange)
                         .data();
            auto want = cconv_mac(w, x).value;
            return (which == 4 ? cconv_sq4(w, x).value : cconv_sq3(w, x).value) == want;
        }
    }
}

void criterion2() {
    const char* names[] = {"cmatmul_sq4", "cmatmul_sq3", "ctransform_sq4",
                           "ctransform_sq3", "cconv_sq4", "cconv_sq3"};
    std::string detail;
    bool pass = true;
    for (int which = 0; which < 6; ++which) {
        SplitMix64 rng(2000 + which);
        int ok = 0;
        for (int i = 0; i < 1000; ++i) ok += complex_case(rng, which) ? 1 : 0;
        detail += std::string(names[which]) + " " + std::to_string(ok) + "/1000 ";
        pass = pass && ok == 1000;
    }
    report(2, "complex kernels bit-exact vs schoolbook oracles", pass, detail + "(exact)");
}

// ---- criterion 3: count ratios ---------------------------------------------------

void criterion3() {
    SplitMix64 rng(3000);
    bool pass = true;
    long checked = 0;
    for (unsigned m = 1; m <= 8 && pass; ++m)
        for (unsigned n = 1; n <= 8 && pass; ++n)
            for (unsigned p = 1; p <= 8 && pass; ++p) {
                Matrix a = random_matrix(rng, m, n, Domain::ExactInt, -9, 9);
                Matrix b = random_matrix(rng, n, p, Domain::ExactInt, -9, 9);
                auto sq = matmul_sq(a, b);
                auto mac = matmul_mac(a, b);
                pass = pass && Rational(sq.ops.squarings, mac.ops.multiplications) ==
                                   ratio_real(m, n, p);

                CMatrix cx = random_cmatrix(rng, m, n, Domain::ExactInt, -9, 9);
                CMatrix cy = random_cmatrix(rng, n, p, Domain::ExactInt, -9, 9);
                const std::uint64_t cmults = static_cast<std::uint64_t>(m) * n * p;
                pass = pass && Rational(cmatmul_sq4(cx, cy).ops.squarings, cmults) ==
                                   ratio_complex4(m, n, p);
                pass = pass && Rational(cmatmul_sq3(cx, cy).ops.squarings, cmults) ==
                                   ratio_complex3(m, n, p);
                checked += 3;
            }
    report(3, "measured ledger ratios equal the closed forms as exact rationals", pass,
           std::to_string(checked) + " (M,N,P) ratio checks over {1..8}^3");
}

// ---- criterion 4: per-step square budgets ---------------------------------------

void criterion4() {
    SplitMix64 rng(4000);
    bool pass = true;
    std::string detail;

    // transform_sq: exactly K+1 squarings per input sample.
    for (int trial = 0; trial < 20 && pass; ++trial) {
        Index k = dim(rng), n = dim(rng);
        Matrix w = random_matrix(rng, k, n, Domain::ExactInt, -999, 999);
        auto x = random_matrix(rng, 1, n, Domain::ExactInt, -999, 999).data();
        CorrectionSet sw = transform_corrections(w);
        std::vector<OpLedger> marks;
        transform_sq(w, x, sw, &marks);
        std::uint64_t prev = 0;
        for (const OpLedger& mk : marks) {
            pass = pass && (mk.squarings - prev == k + 1);
            prev = mk.squarings;
        }
    }
    detail += "transform K+1/sample ";

    // conv1d_sq: N+1 squarings per output in steady state; the first output
    // additionally absorbs the N-1 warm-up sample squares.
    for (int trial = 0; trial < 20 && pass; ++trial) {
        Index n = dim(rng);
        auto w = random_matrix(rng, 1, n, Domain::ExactInt, -999, 999).data();
        auto x = random_matrix(rng, 1, n + 8 + rng.next() % 24, Domain::ExactInt, -999, 999)
                     .data();
        CorrectionSet sw = conv_corrections(w);
        std::vector<OpLedger> marks;
        auto res = conv1d_sq(w, x, sw, &marks);
        pass = pass && marks[0].squarings == 2 * n;
        for (std::size_t i = 1; i < marks.size(); ++i)
            pass = pass && (marks[i].squarings - marks[i - 1].squarings <= n + 1);
        pass = pass && res.ops.squarings == (n + 1) * marks.size() + (n - 1);
    }
    detail += "conv <=N+1/output(steady) ";

    // cmatmul_sq3: exactly 3 (h,k)-dependent squarings per inner term.
    for (int trial = 0; trial < 10 && pass; ++trial) {
        Index m = dim(rng), n = dim(rng), p = dim(rng);
        CMatrix x = random_cmatrix(rng, m, n, Domain::ExactInt, -999, 999);
        CMatrix y = random_cmatrix(rng, n, p, Domain::ExactInt, -999, 999);
        CorrectionSet corr = cmatmul3_corrections(x, y);
        auto res = cmatmul_sq3(x, y, corr);
        pass = pass && res.ops.squarings == 3 * m * n * p;
    }
    detail += "cmatmul_sq3 3/term";
    report(4, "per-step square budgets", pass, detail);
}

// ---- criterion 5: simulator fidelity ---------------------------------------------

Matrix scale2(const Matrix& m) {
    Matrix out = m;
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) out.at(r, c) += m.at(r, c);
    return out;
}

SimConfig mkcfg(Arch a, Variant v) {
    SimConfig cfg;
    cfg.arch = a;
    cfg.variant = v;
    cfg.bitplan = BitWidthPlan{24, 64};
    cfg.trace_level = TraceLevel::Registers;
    return cfg;
}

Index sdim(SplitMix64& rng) { return 1 + rng.next() % 5; }

bool sim_case(Arch arch, Variant variant, SplitMix64& rng, bool check_trace) {
    const long long r = 499;
    switch (arch) {
        case Arch::PMAcc: {
            Index n = 1 + rng.next() % 8;
            if (variant == Variant::MAC || variant == Variant::SQ) {
                auto a = random_matrix(rng, 1, n, Domain::ExactInt, -r, r).data();
                auto b = random_matrix(rng, 1, n, Domain::ExactInt, -r, r).data();
                Scalar want = Scalar::zero(Domain::ExactInt);
                for (Index i = 0; i < n; ++i) want += a[i] * b[i];
                Scalar init = Scalar::zero(Domain::ExactInt);
                if (variant == Variant::SQ) {
                    Matrix am(1, n, a), bm(n, 1, b);
                    CorrectionSet corr = real_mat_corrections(am, bm);
                    init = corr.term("Sa")[0] + corr.term("Sb")[0];
                }
                auto res = pm_accumulator_run(a, b, init, mkcfg(arch, variant));
                if (check_trace) {
                    auto res2 = pm_accumulator_run(a, b, init, mkcfg(arch, variant));
                    if (res.trace.to_csv() != res2.trace.to_csv()) return false;
                }
                return res.final_value == (variant == Variant::SQ ? want + want : want);
            }
            auto x = random_cmatrix(rng, 1, n, Domain::ExactInt, -r, r).data();
            auto y = random_cmatrix(rng, 1, n, Domain::ExactInt, -r, r).data();
            CScalar want = CScalar::zero(Domain::ExactInt);
            for (Index i = 0; i < n; ++i) want += x[i] * y[i];
            CScalar init = CScalar::zero(Domain::ExactInt);
            CMatrix xm(1, n, x), ym(n, 1, y);
            if (variant == Variant::CPM) {
                Scalar s = complex4_corrections(xm, Side::Rows).term("Sx")[0] +
                           complex4_corrections(ym, Side::Cols).term("Sy")[0];
                init = CScalar(s, s);
            } else if (variant == Variant::CPM3) {
                CorrectionSet rows = complex3_corrections(xm, Side::Rows);
                CorrectionSet cols = complex3_corrections(ym, Side::Cols);
                init = CScalar(rows.term("Sab")[0] + cols.term("Scs")[0],
                               rows.term("Sba")[0] + cols.term("Ssc")[0]);
            }
            auto res = pm_accumulator_run(x, y, init, mkcfg(arch, variant));
            return res.final_value == (variant == Variant::MAC ? want : want + want);
        }
        case Arch::Systolic: {
            Matrix a = random_matrix(rng, sdim(rng), sdim(rng), Domain::ExactInt, -r, r);
            Matrix b = random_matrix(rng, a.cols(), sdim(rng), Domain::ExactInt, -r, r);
            auto res = systolic_run(a, b, mkcfg(arch, variant));
            Matrix want = matmul_mac(a, b).value;
            if (check_trace) {
                auto res2 = systolic_run(a, b, mkcfg(arch, variant));
                if (res.trace.to_csv() != res2.trace.to_csv()) return false;
            }
            return res.out == (variant == Variant::SQ ? scale2(want) : want);
        }
        case Arch::TensorCore: {
            Index m = sdim(rng), p = sdim(rng), tw = sdim(rng);
            Index tiles = 1 + rng.next() % 3;
            Matrix a = random_matrix(rng, m, tw * tiles, Domain::ExactInt, -r, r);
            Matrix b = random_matrix(rng, tw * tiles, p, Domain::ExactInt, -r, r);
            std::vector<Matrix> a_tiles, b_tiles;
            for (Index t = 0; t < tiles; ++t) {
                Matrix ta(m, tw, Domain::ExactInt), tb(tw, p, Domain::ExactInt);
                for (Index i = 0; i < m; ++i)
                    for (Index k = 0; k < tw; ++k) ta.at(i, k) = a.at(i, t * tw + k);
                for (Index k = 0; k < tw; ++k)
                    for (Index j = 0; j < p; ++j) tb.at(k, j) = b.at(t * tw + k, j);
                a_tiles.push_back(std::move(ta));
                b_tiles.push_back(std::move(tb));
            }
            CorrectionSet corr = real_mat_corrections(a, b);
            auto res = tensorcore_run(a_tiles, b_tiles,
                                      variant == Variant::SQ ? &corr : nullptr,
                                      mkcfg(arch, variant));
            if (check_trace) {
                auto res2 = tensorcore_run(a_tiles, b_tiles,
                                           variant == Variant::SQ ? &corr : nullptr,
                                           mkcfg(arch, variant));
                if (res.trace.to_csv() != res2.trace.to_csv()) return false;
            }
            Matrix want = matmul_mac(a, b).value;
            return res.out == (variant == Variant::SQ ? scale2(want) : want);
        }
        case Arch::TransformEngine: {
            Index k = sdim(rng), n = sdim(rng);
            if (variant == Variant::MAC || variant == Variant::SQ) {
                Matrix w = random_matrix(rng, k, n, Domain::ExactInt, -r, r);
                auto x = random_matrix(rng, 1, n, Domain::ExactInt, -r, r).data();
                CorrectionSet s = transform_corrections(w);
                auto res = transform_engine_run(w, x, variant == Variant::SQ ? &s : nullptr,
                                                mkcfg(arch, variant));
                if (check_trace) {
                    auto res2 = transform_engine_run(w, x, variant == Variant::SQ ? &s : nullptr,
                                                     mkcfg(arch, variant));
                    if (res.trace.to_csv() != res2.trace.to_csv()) return false;
                }
                auto want = transform_mac(w, x).value;
                for (Index i = 0; i < k; ++i)
                    if (res.regs[i] != (variant == Variant::SQ ? want[i] + want[i] : want[i]))
                        return false;
                return true;
            }
            CMatrix w = random_cmatrix(rng, k, n, Domain::ExactInt, -r, r);
            auto x = random_cmatrix(rng, 1, n, Domain::ExactInt, -r, r).data();
            CorrectionSet s;
            const CorrectionSet* sp = nullptr;
            if (variant == Variant::CPM) {
                s = ctransform4_corrections(w);
                sp = &s;
            } else if (variant == Variant::CPM3) {
                s = ctransform3_corrections(w);
                sp = &s;
            }
            auto res = transform_engine_run(w, x, sp, mkcfg(arch, variant));
            auto want = ctransform_mac(w, x).value;
            for (Index i = 0; i < k; ++i)
                if (res.regs[i] != (variant == Variant::MAC ? want[i] : want[i] + want[i]))
                    return false;
            return true;
        }
        case Arch::ConvEngine: {
            Index n = 1 + rng.next() % 5;
            Index len = n + 1 + rng.next() % 12;
            if (variant == Variant::CPM || variant == Variant::CPM3) {
                auto w = random_cmatrix(rng, 1, n, Domain::ExactInt, -r, r).data();
                auto x = random_cmatrix(rng, 1, len, Domain::ExactInt, -r, r).data();
                CorrectionSet s =
                    variant == Variant::CPM ? cconv4_corrections(w) : cconv3_corrections(w);
                auto res = conv_engine_run(w, x, &s, mkcfg(arch, variant));
                auto want = cconv_mac(w, x).value;
                for (std::size_t i = 0; i < want.size(); ++i)
                    if (res.z[i] != want[i] + want[i]) return false;
                return true;
            }
            auto w = random_matrix(rng, 1, n, Domain::ExactInt, -r, r).data();
            auto x = random_matrix(rng, 1, len, Domain::ExactInt, -r, r).data();
            CorrectionSet s = conv_corrections(w);
            auto res = conv_engine_run(w, x, variant == Variant::SQ ? &s : nullptr,
                                       mkcfg(arch, variant));
            if (check_trace) {
                auto res2 = conv_engine_run(w, x, variant == Variant::SQ ? &s : nullptr,
                                            mkcfg(arch, variant));
                if (res.trace.to_csv() != res2.trace.to_csv()) return false;
            }
            auto want = conv1d_mac(w, x).value;
            for (std::size_t i = 0; i < want.size(); ++i)
                if (res.y[i] != (variant == Variant::SQ ? want[i] + want[i] : want[i]))
                    return false;
            return true;
        }
    }
    return false;
}

void criterion5() {
    struct Combo {
        Arch arch;
        Variant variant;
    };
    const std::vector<Combo> combos = {
        {Arch::PMAcc, Variant::MAC},           {Arch::PMAcc, Variant::SQ},
        {Arch::PMAcc, Variant::CPM},           {Arch::PMAcc, Variant::CPM3},
        {Arch::Systolic, Variant::MAC},        {Arch::Systolic, Variant::SQ},
        {Arch::TensorCore, Variant::MAC},      {Arch::TensorCore, Variant::SQ},
        {Arch::TransformEngine, Variant::MAC}, {Arch::TransformEngine, Variant::SQ},
        {Arch::TransformEngine, Variant::CPM}, {Arch::TransformEngine, Variant::CPM3},
        {Arch::ConvEngine, Variant::MACDirect}, {Arch::ConvEngine, Variant::MACTransposed},
        {Arch::ConvEngine, Variant::SQ},       {Arch::ConvEngine, Variant::CPM},
        {Arch::ConvEngine, Variant::CPM3},
    };
    bool pass = true;
    int combos_ok = 0;
    for (const Combo& c : combos) {
        SplitMix64 rng(5000 + static_cast<int>(c.arch) * 16 + static_cast<int>(c.variant));
        bool all = true;
        for (int i = 0; i < 100; ++i) all = all && sim_case(c.arch, c.variant, rng, i == 0);
        pass = pass && all;
        combos_ok += all ? 1 : 0;
    }
    report(5, "simulators equal 2x/1x kernel results with deterministic traces", pass,
           std::to_string(combos_ok) + "/" + std::to_string(combos.size()) +
               " (arch,variant) combos, 100 cases each");
}

// ---- criterion 6: doubled-value evenness --------------------------------------

void criterion6() {
    SplitMix64 rng(6000);
    long odd_errors = 0;
    long runs = 0;
    for (int i = 0; i < 200; ++i) {
        try {
            for (int which = 0; which < 4; ++which) real_case(rng, which);
            for (int which = 0; which < 6; ++which) complex_case(rng, which);
            runs += 10;
        } catch (const OddDoubledResult&) {
            ++odd_errors;
        }
    }
    report(6, "every doubled value halves exactly (zero OddDoubledResult)", odd_errors == 0,
           std::to_string(runs) + " square-based runs, " + std::to_string(odd_errors) +
               " odd-doubled errors");
}

// ---- criterion 7: unit-modulus simplification ----------------------------------

void criterion7() {
    bool pass = true;
    std::string detail;
    for (Index n : {4u, 8u, 16u}) {
        CMatrix w = dft_matrix(n);
        CorrectionSet s4 = ctransform4_corrections(w);
        double worst = 0;
        for (const Scalar& v : s4.term("Sk"))
            worst = std::max(worst, std::abs(v.approx() + static_cast<double>(n)));
        CorrectionSet rows = complex4_corrections(w, Side::Rows);
        for (const Scalar& v : rows.term("Sx"))
            worst = std::max(worst, std::abs(v.approx() + static_cast<double>(n)));
        // Unit-modulus convolution kernel from one DFT row.
        std::vector<CScalar> wk(w.data().begin(), w.data().begin() + n);
        worst = std::max(worst,
                         std::abs(cconv4_corrections(wk).scalar_term("Sw").approx() +
                                  static_cast<double>(n)));
        pass = pass && worst < 1e-9;
        detail += "N=" + std::to_string(n) + " |S+N|<=" + Scalar::real(worst).str() + " ";

        SplitMix64 rng(7000 + n);
        std::vector<CScalar> x;
        for (Index i = 0; i < n; ++i)
            x.push_back(CScalar(Scalar::real(rng.next_real(-1, 1)),
                                Scalar::real(rng.next_real(-1, 1))));
        auto oracle = ctransform_mac(w, x).value;
        auto s3 = ctransform3_corrections(w);
        auto got4 = ctransform_sq4(w, x, s4).value;
        auto got3 = ctransform_sq3(w, x, s3).value;
        double err = 0;
        for (Index k = 0; k < n; ++k) {
            err = std::max(err, std::abs(got4[k].re.approx() - oracle[k].re.approx()));
            err = std::max(err, std::abs(got4[k].im.approx() - oracle[k].im.approx()));
            err = std::max(err, std::abs(got3[k].re.approx() - oracle[k].re.approx()));
            err = std::max(err, std::abs(got3[k].im.approx() - oracle[k].im.approx()));
        }
        pass = pass && err < 1e-9;
    }
    report(7, "float DFT corrections collapse to -N and square-based DFT tracks the oracle",
           pass, detail + "(tol 1e-9)");
}

// ---- criterion 8: width soundness ------------------------------------------------

void criterion8() {
    const BitWidthPlan plan{8, 16};
    SimConfig base;
    base.bitplan = plan;
    base.trace_level = TraceLevel::Final;
    std::size_t violations = 0;
    int sims = 0;
    SplitMix64 rng(8000);

    auto adv = [&](Index count) {
        std::vector<Scalar> v;
        for (Index i = 0; i < count; ++i)
            v.push_back(Scalar(rng.next() % 2 == 0 ? 127 : -127));
        return v;
    };
    auto cadv = [&](Index count) {
        std::vector<CScalar> v;
        for (Index i = 0; i < count; ++i)
            v.push_back(CScalar(Scalar(rng.next() % 2 == 0 ? 127 : -127),
                                Scalar(rng.next() % 2 == 0 ? 127 : -127)));
        return v;
    };

    for (int rep = 0; rep < 8; ++rep) {
        // PM accumulators at full depth 16.
        for (Variant v : {Variant::MAC, Variant::SQ}) {
            SimConfig cfg = base;
            cfg.arch = Arch::PMAcc;
            cfg.variant = v;
            auto a = adv(16), b = adv(16);
            Scalar init = Scalar::zero(Domain::ExactInt);
            if (v == Variant::SQ) {
                Matrix am(1, 16, a), bm(16, 1, b);
                CorrectionSet corr = real_mat_corrections(am, bm);
                init = corr.term("Sa")[0] + corr.term("Sb")[0];
            }
            violations += pm_accumulator_run(a, b, init, cfg).trace.width_violations.size();
            ++sims;
        }
        for (Variant v : {Variant::MAC, Variant::CPM, Variant::CPM3}) {
            SimConfig cfg = base;
            cfg.arch = Arch::PMAcc;
            cfg.variant = v;
            auto x = cadv(16), y = cadv(16);
            CMatrix xm(1, 16, x), ym(16, 1, y);
            CScalar init = CScalar::zero(Domain::ExactInt);
            if (v == Variant::CPM) {
                Scalar s = complex4_corrections(xm, Side::Rows).term("Sx")[0] +
                           complex4_corrections(ym, Side::Cols).term("Sy")[0];
                init = CScalar(s, s);
            } else if (v == Variant::CPM3) {
                CorrectionSet rows = complex3_corrections(xm, Side::Rows);
                CorrectionSet cols = complex3_corrections(ym, Side::Cols);
                init = CScalar(rows.term("Sab")[0] + cols.term("Scs")[0],
                               rows.term("Sba")[0] + cols.term("Ssc")[0]);
            }
            violations += pm_accumulator_run(x, y, init, cfg).trace.width_violations.size();
            ++sims;
        }
        // Systolic with the full 16-deep reduction.
        for (Variant v : {Variant::MAC, Variant::SQ}) {
            SimConfig cfg = base;
            cfg.arch = Arch::Systolic;
            cfg.variant = v;
            Matrix a(4, 16, adv(64));
            Matrix b(16, 4, adv(64));
            violations += systolic_run(a, b, cfg).trace.width_violations.size();
            ++sims;
        }
        // Tensor core, 4 tiles of width 4 (full-depth corrections).
        for (Variant v : {Variant::MAC, Variant::SQ}) {
            SimConfig cfg = base;
            cfg.arch = Arch::TensorCore;
            cfg.variant = v;
            Matrix a(4, 16, adv(64));
            Matrix b(16, 4, adv(64));
            std::vector<Matrix> a_tiles, b_tiles;
            for (Index t = 0; t < 4; ++t) {
                Matrix ta(4, 4, Domain::ExactInt), tb(4, 4, Domain::ExactInt);
                for (Index i = 0; i < 4; ++i)
                    for (Index k = 0; k < 4; ++k) {
                        ta.at(i, k) = a.at(i, t * 4 + k);
                        tb.at(k, i) = b.at(t * 4 + k, i);
                    }
                a_tiles.push_back(std::move(ta));
                b_tiles.push_back(std::move(tb));
            }
            CorrectionSet corr = real_mat_corrections(a, b);
            violations += tensorcore_run(a_tiles, b_tiles, v == Variant::SQ ? &corr : nullptr, cfg)
                              .trace.width_violations.size();
            ++sims;
        }
        // Transform engines at N=16.
        for (Variant v : {Variant::MAC, Variant::SQ}) {
            SimConfig cfg = base;
            cfg.arch = Arch::TransformEngine;
            cfg.variant = v;
            Matrix w(4, 16, adv(64));
            auto x = adv(16);
            CorrectionSet s = transform_corrections(w);
            violations += transform_engine_run(w, x, v == Variant::SQ ? &s : nullptr, cfg)
                              .trace.width_violations.size();
            ++sims;
        }
        for (Variant v : {Variant::MAC, Variant::CPM, Variant::CPM3}) {
            SimConfig cfg = base;
            cfg.arch = Arch::TransformEngine;
            cfg.variant = v;
            CMatrix w(4, 16, cadv(64));
            auto x = cadv(16);
            CorrectionSet s;
            const CorrectionSet* sp = nullptr;
            if (v == Variant::CPM) {
                s = ctransform4_corrections(w);
                sp = &s;
            } else if (v == Variant::CPM3) {
                s = ctransform3_corrections(w);
                sp = &s;
            }
            violations += transform_engine_run(w, x, sp, cfg).trace.width_violations.size();
            ++sims;
        }
        // Conv engines with 16-tap kernels.
        for (Variant v : {Variant::MACDirect, Variant::MACTransposed, Variant::SQ}) {
            SimConfig cfg = base;
            cfg.arch = Arch::ConvEngine;
            cfg.variant = v;
            auto w = adv(16);
            auto x = adv(40);
            CorrectionSet s = conv_corrections(w);
            violations += conv_engine_run(w, x, v == Variant::SQ ? &s : nullptr, cfg)
                              .trace.width_violations.size();
            ++sims;
        }
        for (Variant v : {Variant::MACTransposed, Variant::CPM, Variant::CPM3}) {
            SimConfig cfg = base;
            cfg.arch = Arch::ConvEngine;
            cfg.variant = v;
            auto w = cadv(16);
            auto x = cadv(40);
            CorrectionSet s;
            const CorrectionSet* sp = nullptr;
            if (v == Variant::CPM) {
                s = cconv4_corrections(w);
                sp = &s;
            } else if (v == Variant::CPM3) {
                s = cconv3_corrections(w);
                sp = &s;
            }
            violations += conv_engine_run(w, x, sp, cfg).trace.width_violations.size();
            ++sims;
        }
    }
    report(8, "BitWidthPlan(n=8, N=16) holds for adversarial +/-127 inputs", violations == 0,
           std::to_string(sims) + " simulator runs, " + std::to_string(violations) +
               " width violations");
}

// ---- criterion 9: area model -------------------------------------------------------

void criterion9() {
    bool pass = true;
    int worst_n = -1;
    for (int n = 4; n <= 64; ++n) {
        auto r = area_estimate(Arch::PMAcc, Variant::SQ, n, AreaDims{1, 1, 16});
        if (!(r.replacement_area < r.multiplier_area)) {
            pass = false;
            worst_n = n;
        }
    }
    auto r8 = area_estimate(Arch::PMAcc, Variant::SQ, 8, AreaDims{1, 1, 16});
    pass = pass && r8.to_text().find("model estimate") != std::string::npos;
    std::string detail = "squarer(n+1)*0.5 < mult(n) for n in [4,64]";
    if (worst_n >= 0) detail += " FAILED at n=" + std::to_string(worst_n);
    report(9, "default area model keeps the squarer below the multiplier (labeled estimate)",
           pass, detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0)
        std::printf("all 9 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
