#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pmul/correction.hpp"
#include "pmul/matrix.hpp"

namespace pmul {

enum class Arch { PMAcc, Systolic, TensorCore, TransformEngine, ConvEngine };
enum class Variant { MAC, MACDirect, MACTransposed, SQ, CPM, CPM3 };
enum class TraceLevel { Final, Registers, Full };

const char* arch_name(Arch a);
const char* variant_name(Variant v);
bool variant_is_square_based(Variant v);

/// Parse CLI-facing names ("systolic", "mac-direct", ...). Throws Error.
Arch parse_arch(const std::string& s);
Variant parse_variant(const std::string& s);
TraceLevel parse_trace_level(const std::string& s);

struct TraceEvent {
    std::uint64_t cycle;
    std::string unit;
    std::string signal; // one of REGA, ACC, MUXSEL, INIT, O
    std::string value;
};

struct WidthViolation {
    std::uint64_t cycle;
    std::string unit;
    std::string signal;
    std::string value;
    int bits; // planned width the value did not fit
};

struct SimTrace {
    std::vector<TraceEvent> events;
    std::vector<std::pair<std::string, std::string>> final_state;
    std::uint64_t cycles_total = 0;
    std::vector<WidthViolation> width_violations;

    bool ok() const { return width_violations.empty(); }
    /// CSV with header `cycle,unit,signal,value`; complex values rendered as
    /// `re+imi` literals, all numbers in canonical decimal.
    std::string to_csv() const;
    void write_csv(std::ostream& os) const;
};

struct SimConfig {
    Arch arch = Arch::PMAcc;
    Variant variant = Variant::SQ;
    Index array_rows = 0; // Systolic: rows of A; TensorCore: tile rows M
    Index array_cols = 0; // Systolic: cols of A; TensorCore: tile cols P
    BitWidthPlan bitplan{};
    TraceLevel trace_level = TraceLevel::Registers;

    /// Rejects variants the architecture does not define (e.g. CPM3 on the
    /// systolic array, which exists for real values only).
    void validate() const;
};

// ---- partial multiplication accumulator --------------------------------------

struct PmAccResult {
    Scalar final_value;
    SimTrace trace;
};

/// One accumulation per cycle. SQ: register starts at `init` (typically
/// Sa_i + Sb_j) and accumulates (a_t+b_t)^2, ending at 2*c_ij. MAC variant
/// multiplies instead and is conventionally started at zero.
PmAccResult pm_accumulator_run(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                               const Scalar& init, const SimConfig& cfg);

struct CPmAccResult {
    CScalar final_value;
    SimTrace trace;
};

/// Complex accumulator: CPM (4 squares, init (Sx+Sy)(1+j)), CPM3 (3 squares,
/// init (Sab+Scs) + j(Sba+Ssc)), or schoolbook MAC.
CPmAccResult pm_accumulator_run(const std::vector<CScalar>& x, const std::vector<CScalar>& y,
                                const CScalar& init, const SimConfig& cfg);

// ---- weight-stationary systolic array -----------------------------------------

struct SystolicResult {
    Matrix out; // 2*(A*B) for SQ, A*B for MAC
    SimTrace trace;
};

/// Loads A into the REGA grid over M cycles, streams B columns in staggered
/// by one cycle, initializes each accumulation chain with Sa_i at the top and
/// finalizes with Sb_j at the bottom rail. Output element [i][j] emerges at
/// cycle M + i + j + N.
SystolicResult systolic_run(const Matrix& a, const Matrix& b, const CorrectionSet* corr,
                            const SimConfig& cfg);
SystolicResult systolic_run(const Matrix& a, const Matrix& b, const SimConfig& cfg);

// ---- tensor core ---------------------------------------------------------------

struct TensorCoreResult {
    Matrix out; // 2*(full row x full column) for SQ, 1x for MAC
    SimTrace trace;
};

/// Consumes one (A tile, B tile) pair per cycle, each PE accumulating a
/// partial dot product. Init presets every accumulator to Sa_i + Sb_j (SQ),
/// where the corrections come from the full rows/columns of the untiled
/// matrices, or clears it (MAC).
TensorCoreResult tensorcore_run(const std::vector<Matrix>& a_tiles,
                                const std::vector<Matrix>& b_tiles, const CorrectionSet* corr,
                                const SimConfig& cfg);

// ---- linear transform engine -----------------------------------------------------

struct TransformResult {
    std::vector<Scalar> regs; // 2*transform for SQ, 1x for MAC
    SimTrace trace;
};

TransformResult transform_engine_run(const Matrix& coeffs, const std::vector<Scalar>& x,
                                     const CorrectionSet* s, const SimConfig& cfg);

struct CTransformResult {
    std::vector<CScalar> regs;
    SimTrace trace;
};

CTransformResult transform_engine_run(const CMatrix& coeffs, const std::vector<CScalar>& x,
                                      const CorrectionSet* s, const SimConfig& cfg);

// ---- convolution engine ------------------------------------------------------------

struct ConvResult {
    std::vector<Scalar> y; // 2*conv for SQ, 1x for the MAC forms
    SimTrace trace;
};

/// Streams one sample per cycle; steady-state throughput is one output per
/// cycle. SQ squares each incoming sample once, feeds N partial multipliers,
/// and adds Sw once at the output stage.
ConvResult conv_engine_run(const std::vector<Scalar>& w, const std::vector<Scalar>& x,
                           const CorrectionSet* s_w, const SimConfig& cfg);

struct CConvResult {
    std::vector<CScalar> z;
    SimTrace trace;
};

CConvResult conv_engine_run(const std::vector<CScalar>& w, const std::vector<CScalar>& x,
                            const CorrectionSet* s_w, const SimConfig& cfg);

} // namespace pmul
