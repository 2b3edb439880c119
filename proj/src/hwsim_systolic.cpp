#include <optional>

#include "hwsim_util.hpp"

namespace pmul {

using namespace detail;

// Weight-stationary array for C = A*B with A (MxN) held in the REGA grid.
// Internally the grid is N rows (reduction index k) by M columns (output row
// index i): PE(k,i) holds a_ik. Schedule, all cycles 0-based:
//   cycles 0..M-1          load phase, one A row shifted in per cycle
//   compute cycle tc = cycle - M:
//     b_kj sits at PE(k,i) when tc = k + j + i (enters row k at tc = k + j,
//     then shifts right one column per cycle)
//     the accumulation chain for c_ij enters column i's top with Sa_i at
//     tc = i + j and trickles down one row per cycle
//     the bottom rail adds Sb_j and emits 2*c_ij at tc = i + j + N
// MAC variant: same dataflow, multiply instead of pm, zero top input, no
// bottom rail add, output c_ij.
SystolicResult systolic_run(const Matrix& a, const Matrix& b, const CorrectionSet* corr,
                            const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::Systolic) throw Error("systolic_run: config arch mismatch");
    if (a.cols() != b.rows()) throw DimensionError("systolic_run: inner dimensions disagree");
    require_same_domain(a.at(0, 0), b.at(0, 0));
    if (cfg.array_rows != 0 && (cfg.array_rows != a.rows() || cfg.array_cols != a.cols()))
        throw DimensionError("systolic_run: operand dims do not match array dims");

    const bool sq = cfg.variant == Variant::SQ;
    const std::vector<Scalar>* sa = nullptr;
    const std::vector<Scalar>* sb = nullptr;
    if (sq) {
        if (!corr) throw Error("systolic_run: SQ variant needs corrections");
        require_fresh(*corr, CorrectionKind::RealMat, a.content_hash(), b.content_hash());
        sa = &corr->term("Sa");
        sb = &corr->term("Sb");
    }

    const Index m = a.rows(), n = a.cols(), p = b.cols();
    const Domain dom = a.domain();
    TraceBuilder tb(cfg);
    const int in_bits = cfg.bitplan.sum_bits(1);
    const int acc_bits = cfg.bitplan.accumulator_bits();

    auto pe_unit = [](Index r, Index c) {
        return "pe[" + std::to_string(r) + "][" + std::to_string(c) + "]";
    };

    // REGA grid, loaded by shifting columns in from the left.
    std::vector<std::vector<Scalar>> rega(n, std::vector<Scalar>(m, Scalar::zero(dom)));
    tb.event_str(0, "array", kMux, "load", TraceLevel::Full);
    for (Index t = 0; t < m; ++t) {
        for (Index r = 0; r < n; ++r) {
            for (Index c = m; c-- > 1;) rega[r][c] = rega[r][c - 1];
            rega[r][0] = a.at(m - 1 - t, r);
        }
        if (tb.wants(TraceLevel::Full))
            for (Index r = 0; r < n; ++r)
                for (Index c = 0; c < m; ++c)
                    tb.event(t, pe_unit(r, c), kRega, rega[r][c], TraceLevel::Full);
    }
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < m; ++c) tb.check(m - 1, pe_unit(r, c), kRega, rega[r][c], in_bits);
    tb.event_str(m, "array", kMux, "compute", TraceLevel::Full);

    // Registered state between compute cycles.
    std::vector<std::vector<std::optional<Scalar>>> breg(n, std::vector<std::optional<Scalar>>(m));
    std::vector<std::vector<std::optional<Scalar>>> psum(n, std::vector<std::optional<Scalar>>(m));

    Matrix out(m, p, dom);
    const Index tc_end = (m - 1) + (p - 1) + n; // tc of the last output
    for (Index tc = 0; tc <= tc_end; ++tc) {
        const std::uint64_t cyc = m + tc;

        // Bottom rail consumes last cycle's bottom-row psums: chain (i=c, j)
        // finished row n-1 at tc-1 = c + j + n - 1.
        for (Index c = 0; c < m; ++c) {
            if (tc < c + n) continue;
            const Index j = tc - c - n;
            if (j >= p || !psum[n - 1][c].has_value()) continue;
            Scalar v = *psum[n - 1][c];
            if (sq) v += (*sb)[j];
            tb.check(cyc, "bottom[" + std::to_string(c) + "]", kOut, v, acc_bits);
            tb.event(cyc, "bottom[" + std::to_string(c) + "]", kOut, v, TraceLevel::Final);
            out.at(c, j) = std::move(v);
        }

        // Combinational evaluation from current registers, then commit.
        std::vector<std::vector<std::optional<Scalar>>> breg_next(
            n, std::vector<std::optional<Scalar>>(m));
        std::vector<std::vector<std::optional<Scalar>>> psum_next(
            n, std::vector<std::optional<Scalar>>(m));
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < m; ++c) {
                std::optional<Scalar> b_in;
                if (c == 0) {
                    if (tc >= r && tc - r < p) b_in = b.at(r, tc - r);
                } else {
                    b_in = breg[r][c - 1];
                }
                if (!b_in.has_value()) continue;
                tb.check(cyc, pe_unit(r, c), kAcc, *b_in, in_bits);

                std::optional<Scalar> psum_in;
                if (r == 0) {
                    // A new chain starts while column c still has B data: j = tc - c.
                    if (tc >= c && tc - c < p) {
                        psum_in = sq ? (*sa)[c] : Scalar::zero(dom);
                        if (tc - c == 0)
                            tb.event(cyc, "top[" + std::to_string(c) + "]", kInit, *psum_in,
                                     TraceLevel::Full);
                    }
                } else {
                    psum_in = psum[r - 1][c];
                }
                if (psum_in.has_value()) {
                    Scalar term;
                    if (sq) {
                        Scalar sum = rega[r][c] + *b_in;
                        tb.check(cyc, pe_unit(r, c), kAcc, sum, cfg.bitplan.sum_bits(2));
                        term = sum * sum;
                        tb.check(cyc, pe_unit(r, c), kAcc, term, cfg.bitplan.square_bits(2));
                    } else {
                        term = rega[r][c] * *b_in;
                        tb.check(cyc, pe_unit(r, c), kAcc, term, cfg.bitplan.square_bits(1));
                    }
                    psum_next[r][c] = *psum_in + term;
                    tb.event(cyc, pe_unit(r, c), kAcc, *psum_next[r][c], TraceLevel::Registers);
                    tb.check(cyc, pe_unit(r, c), kAcc, *psum_next[r][c], acc_bits);
                }
                breg_next[r][c] = std::move(b_in);
            }
        breg = std::move(breg_next);
        psum = std::move(psum_next);
    }

    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < p; ++j)
            tb.final_kv("O[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                        out.at(i, j).str());
    SystolicResult res{std::move(out), tb.take(m + tc_end + 1)};
    return res;
}

SystolicResult systolic_run(const Matrix& a, const Matrix& b, const SimConfig& cfg) {
    if (cfg.variant == Variant::SQ) {
        CorrectionSet corr = real_mat_corrections(a, b);
        return systolic_run(a, b, &corr, cfg);
    }
    return systolic_run(a, b, nullptr, cfg);
}

} // namespace pmul
