#include "horocalc/log2.hpp"

#include <cmath>

namespace horocalc {

namespace {

Integer pow_int(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

unsigned to_exponent(const Integer& x)
{
    if (x < 0 || x > 1'000'000)
        throw BudgetExceeded("exponent " + x.str() + " too large for an exact power comparison");
    return static_cast<unsigned>(x);
}

// Fractional bits of log2(y) for y = mantissa / 2^precision in [1, 2],
// with floor or ceiling rounding at each squaring.
Rational fractional_bits(Integer mantissa, unsigned precision, unsigned bits, bool round_up)
{
    const Integer one = Integer(1) << precision;
    const Integer two = one << 1;
    Integer acc = 0;
    for (unsigned i = 0; i < bits; ++i)
    {
        Integer sq = mantissa * mantissa;
        mantissa = sq >> precision;
        if (round_up && (mantissa << precision) != sq)
            ++mantissa;
        acc <<= 1;
        if (mantissa >= two)
        {
            acc += 1;
            bool odd = (mantissa & 1) != 0;
            mantissa >>= 1;
            if (round_up && odd)
                ++mantissa;
        }
    }
    return Rational(acc, Integer(1) << bits);
}

} // namespace

double Interval::midpoint() const
{
    return static_cast<double>(Rational((lo + hi) / 2));
}

Interval log2_bounds(const Integer& x, unsigned bits)
{
    if (x < 1)
        throw std::domain_error("log2 of a non-positive integer");
    const unsigned b = static_cast<unsigned>(boost::multiprecision::msb(x));
    const unsigned precision = bits + 32;
    // Mantissa x / 2^b scaled by 2^precision.
    Integer lo_m = (x << precision) >> b;
    Integer hi_m = lo_m;
    if ((lo_m << b) != (x << precision))
        ++hi_m;
    Interval out;
    out.lo = Rational(b) + fractional_bits(lo_m, precision, bits, false);
    out.hi = Rational(b) + fractional_bits(hi_m, precision, bits, true) +
             Rational(1, Integer(1) << bits);
    return out;
}

double log2_approx(const Integer& x)
{
    if (x < 1)
        throw std::domain_error("log2 of a non-positive integer");
    const unsigned b = static_cast<unsigned>(boost::multiprecision::msb(x));
    if (b < 53)
        return std::log2(static_cast<double>(x));
    Integer top = x >> (b - 52);
    return static_cast<double>(b - 52) + std::log2(static_cast<double>(top));
}

Interval LogRatio::bounds(unsigned bits) const
{
    if (num < 1 || den < 2)
        throw std::domain_error("log ratio needs num >= 1 and den >= 2");
    Interval a = log2_bounds(num, bits), b = log2_bounds(den, bits);
    return {a.lo / b.hi, a.hi / b.lo};
}

double LogRatio::approx() const
{
    return log2_approx(num) / log2_approx(den);
}

bool LogRatio::at_most(const Rational& r) const
{
    if (r < 0)
        return false;
    const unsigned p = to_exponent(numerator(r)), q = to_exponent(denominator(r));
    return pow_int(num, q) <= pow_int(den, p);
}

bool LogRatio::at_least(const Rational& r) const
{
    if (r <= 0)
        return true;
    const unsigned p = to_exponent(numerator(r)), q = to_exponent(denominator(r));
    return pow_int(num, q) >= pow_int(den, p);
}

std::optional<int> compare(const LogRatio& a, const LogRatio& b, unsigned max_bits)
{
    if (a.num == b.num && a.den == b.den)
        return 0;
    for (unsigned bits = 64; bits <= max_bits; bits *= 2)
    {
        Interval x = a.bounds(bits), y = b.bounds(bits);
        if (x.hi < y.lo)
            return -1;
        if (y.hi < x.lo)
            return 1;
    }
    return std::nullopt;
}

} // namespace horocalc
