#include "pmul/numeric.hpp"

#include <charconv>

namespace pmul {

const char* domain_name(Domain d) {
    return d == Domain::ExactInt ? "int" : "float";
}

void require_same_domain(const Scalar& a, const Scalar& b) {
    if (a.domain() != b.domain())
        throw MixedDomainError(std::string("mixed scalar domains: ") + domain_name(a.domain()) +
                               " vs " + domain_name(b.domain()));
}

const BigInt& Scalar::int_value() const {
    if (!is_exact()) throw MixedDomainError("int_value() on Float scalar");
    return std::get<BigInt>(v_);
}

double Scalar::float_value() const {
    if (is_exact()) throw MixedDomainError("float_value() on ExactInt scalar");
    return std::get<double>(v_);
}

double Scalar::approx() const {
    return is_exact() ? int_value().convert_to<double>() : float_value();
}

std::string Scalar::str() const {
    if (is_exact()) return int_value().str();
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, float_value());
    return std::string(buf, res.ptr);
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-int_value());
    return Scalar(-float_value());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_domain(*this, rhs);
    if (is_exact())
        std::get<BigInt>(v_) += rhs.int_value();
    else
        std::get<double>(v_) += rhs.float_value();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_domain(*this, rhs);
    if (is_exact())
        std::get<BigInt>(v_) -= rhs.int_value();
    else
        std::get<double>(v_) -= rhs.float_value();
    return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    require_same_domain(lhs, rhs);
    if (lhs.is_exact()) return Scalar(lhs.int_value() * rhs.int_value());
    return Scalar(lhs.float_value() * rhs.float_value());
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.domain() != rhs.domain()) return false;
    if (lhs.is_exact()) return lhs.int_value() == rhs.int_value();
    return lhs.float_value() == rhs.float_value();
}

CScalar::CScalar(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {
    require_same_domain(re, im);
}

std::string CScalar::str() const {
    // `re+imi` literal; the sign of im folds into the separator.
    std::string s = re.str();
    std::string i = im.str();
    if (!i.empty() && i[0] == '-')
        s += i;
    else
        s += "+" + i;
    return s + "i";
}

CScalar& CScalar::operator+=(const CScalar& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

CScalar& CScalar::operator-=(const CScalar& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

CScalar operator*(const CScalar& lhs, const CScalar& rhs) {
    return {lhs.re * rhs.re - lhs.im * rhs.im, lhs.im * rhs.re + lhs.re * rhs.im};
}

int ceil_log2(int n) {
    int w = 0;
    while ((1LL << w) < n) ++w;
    return w;
}

int BitWidthPlan::sum_bits(int terms) const {
    return input_bits + ceil_log2(terms);
}

int BitWidthPlan::square_bits(int terms) const {
    return 2 * sum_bits(terms);
}

int BitWidthPlan::accumulator_bits() const {
    return 2 * (input_bits + 1) + ceil_log2(reduction_depth) + 2;
}

bool BitWidthPlan::fits_signed(const Scalar& v, int bits) {
    if (!v.is_exact()) return true;
    const BigInt lo = -(BigInt(1) << (bits - 1));
    const BigInt hi = (BigInt(1) << (bits - 1)) - 1;
    return v.int_value() >= lo && v.int_value() <= hi;
}

bool BitWidthPlan::fits_signed(const CScalar& v, int bits) {
    return fits_signed(v.re, bits) && fits_signed(v.im, bits);
}

Scalar square(const Scalar& x, OpLedger& led) {
    led.squarings++;
    return x * x;
}

Scalar square(const Scalar& x) {
    OpLedger scratch;
    return square(x, scratch);
}

Scalar mul(const Scalar& a, const Scalar& b, OpLedger& led) {
    led.multiplications++;
    return a * b;
}

Scalar add(const Scalar& a, const Scalar& b, OpLedger& led) {
    led.additions++;
    return a + b;
}

Scalar sub(const Scalar& a, const Scalar& b, OpLedger& led) {
    led.additions++;
    return a - b;
}

Scalar pm(const Scalar& a, const Scalar& b, OpLedger& led) {
    return square(add(a, b, led), led);
}

Scalar pm(const Scalar& a, const Scalar& b) {
    OpLedger scratch;
    return pm(a, b, scratch);
}

CpmParts cpm(const CScalar& x, const CScalar& y, OpLedger& led) {
    require_same_domain(x.re, y.re);
    const Scalar& a = x.re;
    const Scalar& b = x.im;
    const Scalar& c = y.re;
    const Scalar& s = y.im;
    Scalar re_part = add(square(add(a, c, led), led), square(sub(b, s, led), led), led);
    Scalar im_part = add(square(add(b, c, led), led), square(add(a, s, led), led), led);
    return {std::move(re_part), std::move(im_part)};
}

CpmParts cpm(const CScalar& x, const CScalar& y) {
    OpLedger scratch;
    return cpm(x, y, scratch);
}

Cpm3Parts cpm3(const CScalar& x, const CScalar& y, OpLedger& led) {
    require_same_domain(x.re, y.re);
    const Scalar& a = x.re;
    const Scalar& b = x.im;
    const Scalar& c = y.re;
    const Scalar& s = y.im;
    Scalar t1 = square(add(add(c, a, led), b, led), led);
    Scalar t2 = square(add(add(b, c, led), s, led), led);
    Scalar t3 = square(sub(add(a, s, led), c, led), led);
    return {std::move(t1), std::move(t2), std::move(t3)};
}

Cpm3Parts cpm3(const CScalar& x, const CScalar& y) {
    OpLedger scratch;
    return cpm3(x, y, scratch);
}

Scalar halve_exact(const Scalar& v) {
    if (v.is_exact()) {
        const BigInt& n = v.int_value();
        if (n % 2 != 0)
            throw OddDoubledResult("doubled result is odd: " + n.str());
        return Scalar(BigInt(n / 2));
    }
    return Scalar(v.float_value() * 0.5);
}

CScalar halve_exact(const CScalar& v) {
    return {halve_exact(v.re), halve_exact(v.im)};
}

} // namespace pmul
