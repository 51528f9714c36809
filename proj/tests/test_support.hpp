#ifndef HOROCALC_TEST_SUPPORT_HPP
#define HOROCALC_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "horocalc/point_set.hpp"

namespace horocalc::testing {

inline PointSet pts(Eigen::Index dim, std::initializer_list<std::initializer_list<long long>> list)
{
    std::vector<Point> out;
    for (auto coords : list)
        out.push_back(make_point(coords));
    return PointSet(dim, std::move(out));
}

inline PointSet interval(long long lo, long long hi)
{
    return Window::cube(1, lo, hi).points();
}

inline PointSet box(Eigen::Index dim, long long lo, long long hi)
{
    return Window::cube(dim, lo, hi).points();
}

inline PointSet square() { return box(2, -1, 1); }
inline PointSet diamond() { return pts(2, {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }
inline PointSet triangle() { return pts(2, {{0, 0}, {1, 0}, {0, 1}, {-1, -1}}); }
inline PointSet four_point() { return pts(2, {{0, 0}, {1, 1}, {1, -1}, {-1, 0}}); }

/// Uniformly random subset of a window.
inline PointSet random_subset(std::mt19937& rng, const Window& w, double density)
{
    std::bernoulli_distribution keep(density);
    std::vector<Point> out;
    for (const Point& p : w.points())
        if (keep(rng))
            out.push_back(p);
    return PointSet(w.dim(), std::move(out));
}


/// Sets of integers as plain sorted vectors, for oracles that avoid the library.
using IntSet = std::vector<long>;

inline IntSet int_sum(const IntSet& a, const IntSet& b)
{
    IntSet out;
    for (long x : a)
        for (long y : b)
            out.push_back(x + y);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline IntSet int_power(const IntSet& a, long k)
{
    IntSet out = {0};
    for (long i = 0; i < k; ++i)
        out = int_sum(out, a);
    return out;
}

inline PointSet to_points(const IntSet& s)
{
    std::vector<Point> out;
    for (long x : s)
        out.push_back(make_point({x}));
    return PointSet(1, out);
}

/// Number of N with N + kA = M + kA in Z, by exhaustive enumeration of all
/// subsets of M + kA as bitmasks.
inline long long brute_force_preimages(const IntSet& m, const IntSet& a, long k)
{
    const IntSet ka = int_power(a, k);
    const IntSet t = int_sum(m, ka);
    if (t.empty())
        return 1;
    const long lo = t.front();
    const long width = t.back() - lo + 1;
    if (t.size() > 24 || width > 60)
        throw std::invalid_argument("oracle instance too large");
    std::uint64_t target = 0;
    for (long x : t)
        target |= std::uint64_t(1) << (x - lo);
    long long count = 0;
    const std::size_t n = t.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
    {
        std::uint64_t image = 0;
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i)
        {
            if (!(mask >> i & 1))
                continue;
            for (long y : ka)
            {
                long pos = t[i] + y - lo;
                if (pos < 0 || pos >= width)
                {
                    inside = false;
                    break;
                }
                image |= std::uint64_t(1) << pos;
            }
        }
        if (inside && image == target)
            ++count;
    }
    return count;
}

/// Compositions of m into parts 1, 2 and 3.
inline Integer tribonacci(long m)
{
    std::vector<Integer> t = {1, 1, 2};
    while (static_cast<long>(t.size()) <= m)
        t.push_back(t[t.size() - 1] + t[t.size() - 2] + t[t.size() - 3]);
    return t[m];
}

// {v in win : v + rA inside W + rA}, by explicit loops.
inline PointSet brute_force_shel_r(const PointSet& a, const PointSet& w, long r, const Window& win)
{
    PointSet ball = PointSet::origin(a.dim());
    for (long i = 0; i < r; ++i)
    {
        std::vector<Point> next;
        for (const Point& x : ball)
            for (const Point& y : a)
                next.push_back(x + y);
        ball = PointSet(a.dim(), next);
    }
    std::vector<Point> grown;
    for (const Point& x : w)
        for (const Point& y : ball)
            grown.push_back(x + y);
    const PointSet big(a.dim(), grown);
    std::vector<Point> out;
    for (const Point& v : win.points())
    {
        bool inside = true;
        for (const Point& y : ball)
            inside = inside && big.contains(v + y);
        if (inside)
            out.push_back(v);
    }
    return PointSet(a.dim(), out);
}

} // namespace horocalc::testing

#endif
