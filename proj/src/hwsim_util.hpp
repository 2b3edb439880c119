#pragma once

#include "pmul/hwsim.hpp"

namespace pmul::detail {

inline constexpr const char* kRega = "REGA";
inline constexpr const char* kAcc = "ACC";
inline constexpr const char* kMux = "MUXSEL";
inline constexpr const char* kInit = "INIT";
inline constexpr const char* kOut = "O";

/// Accumulates trace events, final state and width violations for one run.
/// Events are recorded in stepping order, which makes traces byte-stable.
class TraceBuilder {
  public:
    explicit TraceBuilder(const SimConfig& cfg) : lvl_(cfg.trace_level), plan_(cfg.bitplan) {}

    bool wants(TraceLevel min_lvl) const {
        return static_cast<int>(lvl_) >= static_cast<int>(min_lvl);
    }

    void event(std::uint64_t cycle, std::string unit, const char* signal, const Scalar& v,
               TraceLevel min_lvl) {
        if (wants(min_lvl)) trace_.events.push_back({cycle, std::move(unit), signal, v.str()});
    }
    void event(std::uint64_t cycle, std::string unit, const char* signal, const CScalar& v,
               TraceLevel min_lvl) {
        if (wants(min_lvl)) trace_.events.push_back({cycle, std::move(unit), signal, v.str()});
    }
    void event_str(std::uint64_t cycle, std::string unit, const char* signal, std::string value,
                   TraceLevel min_lvl) {
        if (wants(min_lvl))
            trace_.events.push_back({cycle, std::move(unit), signal, std::move(value)});
    }

    /// Width check against the plan; violations are always recorded, whatever
    /// the trace level.
    void check(std::uint64_t cycle, const std::string& unit, const char* signal, const Scalar& v,
               int bits) {
        if (!BitWidthPlan::fits_signed(v, bits))
            trace_.width_violations.push_back({cycle, unit, signal, v.str(), bits});
    }
    void check(std::uint64_t cycle, const std::string& unit, const char* signal, const CScalar& v,
               int bits) {
        check(cycle, unit, signal, v.re, bits);
        check(cycle, unit, signal, v.im, bits);
    }

    const BitWidthPlan& plan() const { return plan_; }

    void final_kv(std::string key, std::string value) {
        trace_.final_state.emplace_back(std::move(key), std::move(value));
    }

    SimTrace take(std::uint64_t cycles_total) {
        trace_.cycles_total = cycles_total;
        return std::move(trace_);
    }

  private:
    SimTrace trace_;
    TraceLevel lvl_;
    BitWidthPlan plan_;
};

} // namespace pmul::detail
