#include "hwsim_util.hpp"

namespace pmul {

using namespace detail;

// Tile-pair-per-cycle tensor core: every PE(i,j) accumulates the partial dot
// product of row i of the A tile and column j of the B tile. The Init cycle
// presets accumulators to Sa_i + Sb_j (SQ) or zero (MAC); Sa/Sb must come
// from the full rows/columns of the matrices being tiled.
TensorCoreResult tensorcore_run(const std::vector<Matrix>& a_tiles,
                                const std::vector<Matrix>& b_tiles, const CorrectionSet* corr,
                                const SimConfig& cfg) {
    cfg.validate();
    if (cfg.arch != Arch::TensorCore) throw Error("tensorcore_run: config arch mismatch");
    if (a_tiles.empty() || a_tiles.size() != b_tiles.size())
        throw DimensionError("tensorcore_run: tile lists must be non-empty and equal length");

    const Index m = a_tiles[0].rows(), n = a_tiles[0].cols(), p = b_tiles[0].cols();
    const Domain dom = a_tiles[0].domain();
    for (std::size_t t = 0; t < a_tiles.size(); ++t) {
        if (a_tiles[t].rows() != m || a_tiles[t].cols() != n || b_tiles[t].rows() != n ||
            b_tiles[t].cols() != p)
            throw DimensionError("tensorcore_run: tile shape mismatch at index " +
                                 std::to_string(t));
        require_same_domain(a_tiles[t].at(0, 0), b_tiles[t].at(0, 0));
    }
    if (cfg.array_rows != 0 && (cfg.array_rows != m || cfg.array_cols != p))
        throw DimensionError("tensorcore_run: tile dims do not match array dims");

    const bool sq = cfg.variant == Variant::SQ;
    const std::vector<Scalar>* sa = nullptr;
    const std::vector<Scalar>* sb = nullptr;
    if (sq) {
        if (!corr) throw Error("tensorcore_run: SQ variant needs corrections");
        if (corr->kind != CorrectionKind::RealMat)
            throw StaleCorrectionError("tensorcore_run: corrections must be RealMat");
        sa = &corr->term("Sa");
        sb = &corr->term("Sb");
        if (sa->size() != m || sb->size() != p)
            throw DimensionError("tensorcore_run: correction lengths do not match tile dims");
    }

    TraceBuilder tb(cfg);
    const int in_bits = cfg.bitplan.sum_bits(1);
    const int acc_bits = cfg.bitplan.accumulator_bits();
    auto pe_unit = [](Index i, Index j) {
        return "pe[" + std::to_string(i) + "][" + std::to_string(j) + "]";
    };

    Matrix acc(m, p, dom);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < p; ++j) {
            acc.at(i, j) = sq ? (*sa)[i] + (*sb)[j] : Scalar::zero(dom);
            tb.event(0, pe_unit(i, j), kInit, acc.at(i, j), TraceLevel::Registers);
            tb.check(0, pe_unit(i, j), kInit, acc.at(i, j), acc_bits);
        }

    for (std::size_t t = 0; t < a_tiles.size(); ++t) {
        const std::uint64_t cyc = t + 1;
        const Matrix& ta = a_tiles[t];
        const Matrix& tb_tile = b_tiles[t];
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; j < p; ++j) {
                Scalar pdp = Scalar::zero(dom);
                for (Index k = 0; k < n; ++k) {
                    tb.check(cyc, pe_unit(i, j), kAcc, ta.at(i, k), in_bits);
                    tb.check(cyc, pe_unit(i, j), kAcc, tb_tile.at(k, j), in_bits);
                    if (sq) {
                        Scalar sum = ta.at(i, k) + tb_tile.at(k, j);
                        tb.check(cyc, pe_unit(i, j), kAcc, sum, cfg.bitplan.sum_bits(2));
                        Scalar term = sum * sum;
                        tb.check(cyc, pe_unit(i, j), kAcc, term, cfg.bitplan.square_bits(2));
                        pdp += term;
                    } else {
                        Scalar term = ta.at(i, k) * tb_tile.at(k, j);
                        tb.check(cyc, pe_unit(i, j), kAcc, term, cfg.bitplan.square_bits(1));
                        pdp += term;
                    }
                }
                acc.at(i, j) += pdp;
                tb.event(cyc, pe_unit(i, j), kAcc, acc.at(i, j), TraceLevel::Registers);
                tb.check(cyc, pe_unit(i, j), kAcc, acc.at(i, j), acc_bits);
            }
    }

    const std::uint64_t last = a_tiles.size();
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < p; ++j) {
            tb.event(last, pe_unit(i, j), kOut, acc.at(i, j), TraceLevel::Final);
            tb.final_kv("O[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                        acc.at(i, j).str());
        }
    TensorCoreResult res{std::move(acc), tb.take(last + 1)};
    return res;
}

} // namespace pmul
