#ifndef HOROCALC_POINT_SET_HPP
#define HOROCALC_POINT_SET_HPP

#include <vector>

#include "horocalc/scalar.hpp"

namespace horocalc {

/**
 * A finite set of lattice points in Z^d.
 *
 * Points are kept deduplicated and in lexicographic order, so iteration and
 * serialization are canonical and set equality is vector equality.
 */
class PointSet
{
public:
    using const_iterator = std::vector<Point>::const_iterator;

    explicit PointSet(Eigen::Index dim = 1) : dim_(dim)
    {
        if (dim < 1)
            throw std::invalid_argument("PointSet dimension must be positive");
    }

    /// Builds a set from arbitrary (unsorted, possibly repeated) points.
    PointSet(Eigen::Index dim, std::vector<Point> points);

    static PointSet singleton(const Point& p) { return PointSet(p.size(), {p}); }
    static PointSet origin(Eigen::Index dim) { return singleton(zero_point(dim)); }

    Eigen::Index dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const_iterator begin() const { return points_.begin(); }
    const_iterator end() const { return points_.end(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    bool contains(const Point& p) const;
    /// Index of `p` in canonical order, or -1.
    std::ptrdiff_t index_of(const Point& p) const;

    friend bool operator==(const PointSet& a, const PointSet& b)
    {
        if (a.dim_ != b.dim_ || a.points_.size() != b.points_.size())
            return false;
        for (std::size_t i = 0; i < a.points_.size(); ++i)
            if (!lex_equal(a.points_[i], b.points_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

private:
    Eigen::Index dim_;
    std::vector<Point> points_;
};

/// Axis-aligned box of lattice points, bounds inclusive.
struct Window
{
    Point lo;
    Point hi;

    Window(Point lo_, Point hi_);
    static Window cube(Eigen::Index dim, long long lo, long long hi);

    Eigen::Index dim() const { return lo.size(); }
    bool contains(const Point& p) const;
    Window inflated(const Integer& margin) const;
    Window deflated(const Integer& margin) const;
    Window translated(const Point& v) const;
    /// Number of lattice points in the box.
    Integer volume() const;
    PointSet points() const;
};

Window bounding_box(const PointSet& s);
Window bounding_box(const Window& a, const Window& b);

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
/// True iff every point of `sub` is in `super`.
bool is_subset(const PointSet& sub, const PointSet& super);
PointSet restrict_to(const PointSet& s, const Window& w);
PointSet translate(const PointSet& s, const Point& v);
PointSet negate(const PointSet& s);

/// Minkowski sum {x + y : x in p, y in q}.
PointSet minkowski_sum(const PointSet& p, const PointSet& q);

/// Morphological erosion {v : v + b is contained in t}; `b` must be non-empty.
PointSet erode(const PointSet& t, const PointSet& b);

} // namespace horocalc

#endif // HOROCALC_POINT_SET_HPP
