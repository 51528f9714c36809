#ifndef HOROCALC_LOG2_HPP
#define HOROCALC_LOG2_HPP

#include <optional>

#include "horocalc/scalar.hpp"

namespace horocalc {

/// Closed interval [lo, hi] containing a real number.
struct Interval
{
    Rational lo;
    Rational hi;

    double midpoint() const;
};

/// Rigorous enclosure of log2(x) for x >= 1 with about `bits` fractional bits.
Interval log2_bounds(const Integer& x, unsigned bits = 64);

/// Nearest double to log2(x), for display.
double log2_approx(const Integer& x);

/**
 * The quotient log2(num) / log2(den) of two positive integers with den >= 2.
 * Comparisons are decided exactly when possible and otherwise by refining
 * enclosures until they separate.
 */
struct LogRatio
{
    Integer num;
    Integer den;

    Interval bounds(unsigned bits = 64) const;
    double approx() const;
    /// Exact test of log2(num)/log2(den) <= p/q, by num^q <= den^p.
    bool at_most(const Rational& r) const;
    bool at_least(const Rational& r) const;
};

/// Sign of a - b, or nullopt if the enclosures never separate within the
/// precision cap.
std::optional<int> compare(const LogRatio& a, const LogRatio& b, unsigned max_bits = 4096);

} // namespace horocalc

#endif // HOROCALC_LOG2_HPP
