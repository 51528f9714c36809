#include "horocalc/point_set.hpp"

#include <algorithm>

namespace horocalc {

namespace {

void require_same_dim(const PointSet& a, const PointSet& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("point sets of dimension " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
}

std::vector<Point> canonicalize(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return lex_equal(a, b); }),
              pts.end());
    return pts;
}

} // namespace

PointSet::PointSet(Eigen::Index dim, std::vector<Point> points) : dim_(dim)
{
    if (dim < 1)
        throw std::invalid_argument("PointSet dimension must be positive");
    for (const Point& p : points)
        if (p.size() != dim)
            throw DimensionMismatch("point " + to_string(p) + " in a set of dimension " +
                                    std::to_string(dim));
    points_ = canonicalize(std::move(points));
}

bool PointSet::contains(const Point& p) const
{
    return index_of(p) >= 0;
}

std::ptrdiff_t PointSet::index_of(const Point& p) const
{
    auto it = std::lower_bound(points_.begin(), points_.end(), p, LexLess{});
    if (it != points_.end() && lex_equal(*it, p))
        return it - points_.begin();
    return -1;
}

Window::Window(Point lo_, Point hi_) : lo(std::move(lo_)), hi(std::move(hi_))
{
    if (lo.size() != hi.size() || lo.size() < 1)
        throw DimensionMismatch("window bounds of different dimension");
    for (Eigen::Index i = 0; i < lo.size(); ++i)
        if (lo(i) > hi(i))
            throw std::invalid_argument("window lower bound exceeds upper bound");
}

Window Window::cube(Eigen::Index dim, long long lo, long long hi)
{
    return Window(Point::Constant(dim, Integer(lo)), Point::Constant(dim, Integer(hi)));
}

bool Window::contains(const Point& p) const
{
    if (p.size() != lo.size())
        return false;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) < lo(i) || p(i) > hi(i))
            return false;
    return true;
}

Window Window::inflated(const Integer& margin) const
{
    Point m = Point::Constant(dim(), margin);
    return Window(lo - m, hi + m);
}

Window Window::deflated(const Integer& margin) const
{
    return inflated(-margin);
}

Window Window::translated(const Point& v) const
{
    return Window(lo + v, hi + v);
}

Integer Window::volume() const
{
    Integer v = 1;
    for (Eigen::Index i = 0; i < dim(); ++i)
        v *= hi(i) - lo(i) + 1;
    return v;
}

PointSet Window::points() const
{
    if (volume() > 50'000'000)
        throw BudgetExceeded("window has more than 5e7 lattice points");
    std::vector<Point> out;
    Point cur = lo;
    while (true)
    {
        out.push_back(cur);
        Eigen::Index i = dim() - 1;
        while (i >= 0 && cur(i) == hi(i))
        {
            cur(i) = lo(i);
            --i;
        }
        if (i < 0)
            break;
        ++cur(i);
    }
    return PointSet(dim(), std::move(out));
}

Window bounding_box(const PointSet& s)
{
    if (s.empty())
        throw std::invalid_argument("bounding box of an empty set");
    Point lo = s[0];
    Point hi = s[0];
    for (const Point& p : s)
        for (Eigen::Index i = 0; i < p.size(); ++i)
        {
            lo(i) = std::min(lo(i), p(i));
            hi(i) = std::max(hi(i), p(i));
        }
    return Window(lo, hi);
}

Window bounding_box(const Window& a, const Window& b)
{
    Point lo = a.lo;
    Point hi = a.hi;
    for (Eigen::Index i = 0; i < lo.size(); ++i)
    {
        lo(i) = std::min(lo(i), b.lo(i));
        hi(i) = std::max(hi(i), b.hi(i));
    }
    return Window(lo, hi);
}

PointSet set_union(const PointSet& a, const PointSet& b)
{
    require_same_dim(a, b);
    std::vector<Point> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), LexLess{});
    return PointSet(a.dim(), std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b)
{
    require_same_dim(a, b);
    std::vector<Point> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                          LexLess{});
    return PointSet(a.dim(), std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b)
{
    require_same_dim(a, b);
    std::vector<Point> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        LexLess{});
    return PointSet(a.dim(), std::move(out));
}

bool is_subset(const PointSet& sub, const PointSet& super)
{
    require_same_dim(sub, super);
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end(), LexLess{});
}

PointSet restrict_to(const PointSet& s, const Window& w)
{
    std::vector<Point> out;
    for (const Point& p : s)
        if (w.contains(p))
            out.push_back(p);
    return PointSet(s.dim(), std::move(out));
}

PointSet translate(const PointSet& s, const Point& v)
{
    std::vector<Point> out;
    out.reserve(s.size());
    for (const Point& p : s)
        out.push_back(p + v);
    return PointSet(s.dim(), std::move(out));
}

PointSet negate(const PointSet& s)
{
    std::vector<Point> out;
    out.reserve(s.size());
    for (const Point& p : s)
        out.push_back(-p);
    return PointSet(s.dim(), std::move(out));
}

PointSet minkowski_sum(const PointSet& p, const PointSet& q)
{
    require_same_dim(p, q);
    std::vector<Point> out;
    out.reserve(p.size() * q.size());
    for (const Point& x : p)
        for (const Point& y : q)
            out.push_back(x + y);
    return PointSet(p.dim(), std::move(out));
}

PointSet erode(const PointSet& t, const PointSet& b)
{
    require_same_dim(t, b);
    if (b.empty())
        throw std::invalid_argument("erosion by an empty structuring set");
    // Every v with v + b inside t satisfies v + b[0] in t.
    std::vector<Point> out;
    for (const Point& x : t)
    {
        Point v = x - b[0];
        bool fits = true;
        for (const Point& y : b)
            if (!t.contains(v + y))
            {
                fits = false;
                break;
            }
        if (fits)
            out.push_back(std::move(v));
    }
    return PointSet(t.dim(), std::move(out));
}

} // namespace horocalc
