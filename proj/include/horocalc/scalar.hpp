#ifndef HOROCALC_SCALAR_HPP
#define HOROCALC_SCALAR_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace horocalc {

// Expression templates are disabled so that scalars compose with Eigen's own
// expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A lattice point of Z^d.
using Point = Vector<Integer>;
using RationalVector = Vector<Rational>;

/// Thrown when an operation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error
{
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::invalid_argument
{
public:
    explicit DimensionMismatch(const std::string& what = "dimension mismatch")
        : std::invalid_argument(what) {}
};

/// Lexicographic order on coordinate tuples; shorter vectors first.
struct LexLess
{
    template <typename Scalar>
    bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

template <typename Scalar>
bool lex_equal(const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

template <typename Scalar>
bool matrix_equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           std::equal(a.data(), a.data() + a.size(), b.data());
}

inline Point make_point(std::initializer_list<long long> coords)
{
    Point p(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (long long c : coords)
        p(i++) = Integer(c);
    return p;
}

inline Point zero_point(Eigen::Index dim)
{
    return Point::Constant(dim, Integer(0));
}

template <typename Scalar>
Scalar abs_value(const Scalar& x)
{
    return x < 0 ? Scalar(-x) : x;
}

inline Integer gcd(Integer a, Integer b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0)
    {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Floor division for integers (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b)
{
    return -floor_div(-a, b);
}

inline Integer floor_of(const Rational& r)
{
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline Integer ceil_of(const Rational& r)
{
    return ceil_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline Point primitive(const Point& v)
{
    Integer g = 0;
    for (const Integer& x : v)
        g = gcd(g, x);
    if (g == 0 || g == 1)
        return v;
    Point out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = v(i) / g;
    return out;
}

inline bool is_zero(const Point& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline RationalVector to_rational(const Point& v)
{
    RationalVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = Rational(v(i));
    return out;
}

inline Integer max_abs(const Point& v)
{
    Integer m = 0;
    for (const Integer& x : v)
        m = std::max(m, abs_value(x));
    return m;
}

/// Narrowing conversion used where coordinates index dense grids.
inline std::int64_t to_int64(const Integer& x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw BudgetExceeded("coordinate " + x.str() + " exceeds the dense-grid range");
    return x.convert_to<std::int64_t>();
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(Matrix<Integer> m);

/// Generalized cross product: the vector orthogonal to the d-1 columns of
/// `columns` (a d x (d-1) matrix) whose entries are the signed maximal minors.
Point orthogonal_complement(const Matrix<Integer>& columns);

/// Rank over Q of the columns of an integer matrix.
Eigen::Index rank(const Matrix<Integer>& columns);

std::string to_string(const Point& p);

} // namespace horocalc

#endif // HOROCALC_SCALAR_HPP
