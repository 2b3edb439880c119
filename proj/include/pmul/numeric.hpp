#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmul {

using BigInt = boost::multiprecision::cpp_int;

enum class Domain { ExactInt, Float };

const char* domain_name(Domain d);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands from different scalar domains were combined.
struct MixedDomainError : Error {
    using Error::Error;
};

// An ExactInt doubled accumulator turned out odd. Algebraically impossible
// for integer inputs, so it signals a broken square-based pipeline.
struct OddDoubledResult : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// A value in one of two domains: exact unbounded signed integer, or float64.
/// ExactInt is the correctness ground truth; Float exists for transform
/// coefficients (DFT twiddles etc). Mixed-domain arithmetic is rejected.
class Scalar {
  public:
    Scalar() : v_(BigInt(0)) {}
    Scalar(BigInt v) : v_(std::move(v)) {}
    Scalar(int v) : v_(BigInt(v)) {}
    Scalar(long long v) : v_(BigInt(v)) {}
    explicit Scalar(double v) : v_(v) {}

    static Scalar exact(BigInt v) { return Scalar(std::move(v)); }
    static Scalar real(double v) { return Scalar(v); }
    static Scalar zero(Domain d) {
        return d == Domain::ExactInt ? Scalar(BigInt(0)) : Scalar(0.0);
    }

    Domain domain() const {
        return std::holds_alternative<BigInt>(v_) ? Domain::ExactInt : Domain::Float;
    }
    bool is_exact() const { return domain() == Domain::ExactInt; }

    const BigInt& int_value() const;
    double float_value() const;

    /// Lossy numeric view, for reports only.
    double approx() const;

    /// Canonical rendering: plain decimal for ExactInt, shortest
    /// round-trip (<= 17 significant digits) for Float.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  private:
    std::variant<BigInt, double> v_;
};

/// Complex scalar; re and im always share one domain.
struct CScalar {
    Scalar re, im;

    CScalar() = default;
    CScalar(Scalar r, Scalar i);

    Domain domain() const { return re.domain(); }
    static CScalar zero(Domain d) { return {Scalar::zero(d), Scalar::zero(d)}; }

    std::string str() const;

    CScalar operator-() const { return {-re, -im}; }
    CScalar& operator+=(const CScalar& rhs);
    CScalar& operator-=(const CScalar& rhs);
    friend CScalar operator+(CScalar lhs, const CScalar& rhs) { return lhs += rhs; }
    friend CScalar operator-(CScalar lhs, const CScalar& rhs) { return lhs -= rhs; }
    /// Schoolbook product (4 real multiplications); oracle use only.
    friend CScalar operator*(const CScalar& lhs, const CScalar& rhs);
    friend bool operator==(const CScalar& lhs, const CScalar& rhs) {
        return lhs.re == rhs.re && lhs.im == rhs.im;
    }
    friend bool operator!=(const CScalar& lhs, const CScalar& rhs) { return !(lhs == rhs); }
};

/// Counters of arithmetic incurred by one kernel or simulator run.
/// Monotone non-decreasing while the run is in flight.
struct OpLedger {
    std::uint64_t squarings = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;

    OpLedger& operator+=(const OpLedger& rhs) {
        squarings += rhs.squarings;
        multiplications += rhs.multiplications;
        additions += rhs.additions;
        return *this;
    }
    friend bool operator==(const OpLedger& a, const OpLedger& b) {
        return a.squarings == b.squarings && a.multiplications == b.multiplications &&
               a.additions == b.additions;
    }
};

/// Planned two's-complement widths for the simulated datapaths: the bit
/// growth of an n-bit PM pipeline feeding a depth-N accumulation.
struct BitWidthPlan {
    int input_bits = 8;       // n, signed operand width
    int reduction_depth = 16; // N_max, deepest accumulation the plan covers

    /// Width of a k-term pre-adder output: n + ceil(log2(k)). k=2 gives n+1.
    int sum_bits(int terms = 2) const;
    /// Squarer output width for a k-term pre-add: 2 * sum_bits(k).
    int square_bits(int terms = 2) const;
    /// 2(n+1) + ceil(log2(N_max)) + 2; the +2 guards the correction adds.
    int accumulator_bits() const;

    /// ExactInt: does v fit a signed two's-complement field of `bits`?
    /// Float values are outside the width model and always fit.
    static bool fits_signed(const Scalar& v, int bits);
    static bool fits_signed(const CScalar& v, int bits);
};

int ceil_log2(int n);

// ---- counted primitives ----------------------------------------------------
// Each records its cost in the caller's ledger. The un-ledgered overloads
// exist for callers that do not account (tests, reports).

Scalar square(const Scalar& x, OpLedger& led);
Scalar square(const Scalar& x);

Scalar mul(const Scalar& a, const Scalar& b, OpLedger& led);

Scalar add(const Scalar& a, const Scalar& b, OpLedger& led);
Scalar sub(const Scalar& a, const Scalar& b, OpLedger& led);

/// Partial multiplication: pm(a,b) = (a+b)^2. One add, one squaring.
/// pm(a,b) - a^2 - b^2 == 2ab exactly in ExactInt.
Scalar pm(const Scalar& a, const Scalar& b, OpLedger& led);
Scalar pm(const Scalar& a, const Scalar& b);

/// Complex partial multiplication, 4 squarings. For x=a+jb, y=c+js returns
///   re_part = (a+c)^2 + (b-s)^2
///   im_part = (b+c)^2 + (a+s)^2
/// With Sx = -(a^2+b^2), Sy = -(c^2+s^2):
///   halve(re_part + Sx + Sy) = Re(xy), halve(im_part + Sx + Sy) = Im(xy).
struct CpmParts {
    Scalar re_part, im_part;
};
CpmParts cpm(const CScalar& x, const CScalar& y, OpLedger& led);
CpmParts cpm(const CScalar& x, const CScalar& y);

/// Complex partial multiplication, 3 squarings. For x=a+jb, y=c+js returns
///   t1 = (c+a+b)^2   (shared between real and imaginary parts)
///   t2 = (b+c+s)^2
///   t3 = (a+s-c)^2
/// Real part uses t1-t2, imaginary part t1+t3, with the Sab/Scs and
/// Sba/Ssc corrections supplied separately.
struct Cpm3Parts {
    Scalar t1, t2, t3;
};
Cpm3Parts cpm3(const CScalar& x, const CScalar& y, OpLedger& led);
Cpm3Parts cpm3(const CScalar& x, const CScalar& y);

/// Exact halving of a doubled result. ExactInt must be even, else throws
/// OddDoubledResult; Float halves by 0.5.
Scalar halve_exact(const Scalar& v);
CScalar halve_exact(const CScalar& v);

void require_same_domain(const Scalar& a, const Scalar& b);

} // namespace pmul
