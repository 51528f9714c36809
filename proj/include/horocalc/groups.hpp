#ifndef HOROCALC_GROUPS_HPP
#define HOROCALC_GROUPS_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "horocalc/scalar.hpp"

namespace horocalc {

/*
 * Group types model a finitely generated group with a finite generating set
 * containing the identity:
 *
 *   using Element;                 totally ordered, value semantics
 *   Element identity() const;
 *   Element multiply(const Element&, const Element&) const;
 *   Element inverse(const Element&) const;
 *   const std::vector<Element>& generators() const;
 *   std::string encode(const Element&) const;
 *   Element decode(const std::string&) const;
 */

/// Z^d with a generating set of integer vectors.
class ZdGroup
{
public:
    using Element = std::vector<std::int64_t>;

    ZdGroup(std::size_t dim, std::vector<Element> generators);
    /// {-1,0,1}^d.
    static ZdGroup cube(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Element identity() const { return Element(dim_, 0); }
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    const std::vector<Element>& generators() const { return gens_; }
    std::string encode(const Element& a) const;
    Element decode(const std::string& s) const;

private:
    std::size_t dim_;
    std::vector<Element> gens_;
};

/// Integer Heisenberg group, (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy'),
/// generated by {e, a^{+-1}, b^{+-1}} with a = (1,0,0), b = (0,1,0).
class HeisenbergGroup
{
public:
    using Element = std::array<std::int64_t, 3>;

    HeisenbergGroup();

    Element identity() const { return {0, 0, 0}; }
    Element multiply(const Element& g, const Element& h) const
    {
        return {g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
    }
    Element inverse(const Element& g) const { return {-g[0], -g[1], -g[2] + g[0] * g[1]}; }
    const std::vector<Element>& generators() const { return gens_; }
    std::string encode(const Element& g) const;
    Element decode(const std::string& s) const;

    Element a() const { return {1, 0, 0}; }
    Element b() const { return {0, 1, 0}; }
    /// The commutator a b a^{-1} b^{-1} = (0,0,1).
    Element commutator() const;

private:
    std::vector<Element> gens_;
};

/// Lamplighter group Z_2 wr Z: lit lamps and the lamplighter position,
/// generated by {e, a, t^{+-1}}; a toggles the lamp at the position.
class LamplighterGroup
{
public:
    struct Element
    {
        std::vector<std::int64_t> lamps;
        std::int64_t position = 0;

        friend bool operator<(const Element& x, const Element& y)
        {
            return std::tie(x.position, x.lamps) < std::tie(y.position, y.lamps);
        }
        friend bool operator==(const Element& x, const Element& y)
        {
            return x.position == y.position && x.lamps == y.lamps;
        }
    };

    LamplighterGroup();

    Element identity() const { return {}; }
    Element multiply(const Element& g, const Element& h) const;
    Element inverse(const Element& g) const;
    const std::vector<Element>& generators() const { return gens_; }
    std::string encode(const Element& g) const;
    Element decode(const std::string& s) const;

    /// Lamps -n..n lit, lamplighter at 0.
    static Element dead_end_element(std::int64_t n);

private:
    std::vector<Element> gens_;
};

/// Free group on `rank` letters a, b, ...; inverses are upper case and the
/// identity is the empty word, encoded as "e".
class FreeGroup
{
public:
    using Element = std::string;

    explicit FreeGroup(int rank = 2);

    Element identity() const { return {}; }
    Element multiply(const Element& g, const Element& h) const;
    Element inverse(const Element& g) const;
    const std::vector<Element>& generators() const { return gens_; }
    std::string encode(const Element& g) const { return g.empty() ? "e" : g; }
    Element decode(const std::string& s) const;

private:
    int rank_;
    std::vector<Element> gens_;
};

/// Word lengths of all elements of the ball of radius `radius`.
template <typename G>
struct BallTable
{
    using Element = typename G::Element;

    int radius = 0;
    std::map<Element, int> length;
    /// sphere[k] = number of elements of length exactly k.
    std::vector<std::size_t> sphere;

    std::optional<int> length_of(const Element& g) const
    {
        auto it = length.find(g);
        if (it == length.end())
            return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return length.size(); }
};

inline std::size_t default_element_budget() { return 20'000'000; }

template <typename G>
BallTable<G> ball(const G& group, int r, std::size_t budget = default_element_budget())
{
    if (r < 0)
        throw std::invalid_argument("radius must be non-negative");
    BallTable<G> table;
    table.radius = r;
    std::vector<typename G::Element> layer = {group.identity()};
    table.length.emplace(group.identity(), 0);
    table.sphere.push_back(1);
    for (int k = 1; k <= r; ++k)
    {
        std::vector<typename G::Element> next;
        for (const auto& g : layer)
            for (const auto& a : group.generators())
            {
                auto h = group.multiply(g, a);
                if (table.length.emplace(h, k).second)
                {
                    next.push_back(std::move(h));
                    if (table.length.size() > budget)
                        throw BudgetExceeded("ball exceeds " + std::to_string(budget) +
                                             " elements at radius " + std::to_string(k));
                }
            }
        table.sphere.push_back(next.size());
        layer.swap(next);
    }
    return table;
}

/// The set g A^n (right translates by words of length at most n).
template <typename G>
std::set<typename G::Element> right_ball(const G& group, const typename G::Element& g, int n)
{
    std::set<typename G::Element> seen = {g};
    std::vector<typename G::Element> layer = {g};
    for (int k = 0; k < n; ++k)
    {
        std::vector<typename G::Element> next;
        for (const auto& x : layer)
            for (const auto& a : group.generators())
            {
                auto y = group.multiply(x, a);
                if (seen.insert(y).second)
                    next.push_back(std::move(y));
            }
        layer.swap(next);
    }
    return seen;
}

struct DeadEndDepth
{
    /// Largest n <= horizon with g A^n inside A^{|g|}.
    int depth = 0;
    int horizon = 0;
    /// True when depth == horizon, so the true depth may be larger.
    bool horizon_limited = false;
};

/// Certified depth of g using a ball table of radius at least |g| + horizon.
template <typename G>
DeadEndDepth dead_end_depth(const G& group, const BallTable<G>& table,
                            const typename G::Element& g, int horizon)
{
    const auto len = table.length_of(g);
    if (!len)
        throw std::invalid_argument("element outside the ball table");
    if (*len + horizon > table.radius)
        throw std::invalid_argument("ball table too small for the requested horizon");
    DeadEndDepth out;
    out.horizon = horizon;
    std::set<typename G::Element> seen = {g};
    std::vector<typename G::Element> layer = {g};
    for (int n = 1; n <= horizon; ++n)
    {
        std::vector<typename G::Element> next;
        for (const auto& x : layer)
            for (const auto& a : group.generators())
            {
                auto y = group.multiply(x, a);
                if (!seen.insert(y).second)
                    continue;
                if (*table.length_of(y) > *len)
                    return out;
                next.push_back(std::move(y));
            }
        layer.swap(next);
        out.depth = n;
    }
    out.horizon_limited = true;
    return out;
}

template <typename G>
struct DeadEndRecord
{
    typename G::Element element;
    int length = 0;
    DeadEndDepth depth;
};

/// All dead ends of length at most R - 1, depth certified up to R - |g|.
template <typename G>
std::vector<DeadEndRecord<G>> dead_ends(const G& group, int R,
                                        std::size_t budget = default_element_budget())
{
    if (R < 2)
        throw std::invalid_argument("dead end search needs R >= 2");
    const BallTable<G> table = ball(group, R, budget);
    std::vector<DeadEndRecord<G>> out;
    for (const auto& [g, len] : table.length)
    {
        if (len > R - 1)
            continue;
        DeadEndDepth d = dead_end_depth(group, table, g, R - len);
        if (d.depth >= 1)
            out.push_back({g, len, d});
    }
    return out;
}

/// S^r(w) = {v in w A^r : v A^r inside w A^r}.
template <typename G>
std::set<typename G::Element> shel_r_general(const G& group,
                                             const std::set<typename G::Element>& w, int r)
{
    if (r < 1)
        throw std::invalid_argument("sheltered radius must be at least 1");
    std::set<typename G::Element> grown;
    const BallTable<G> table = ball(group, r);
    for (const auto& x : w)
        for (const auto& [h, len] : table.length)
            grown.insert(group.multiply(x, h));
    std::set<typename G::Element> out;
    for (const auto& v : grown)
    {
        bool inside = true;
        for (auto it = table.length.begin(); it != table.length.end() && inside; ++it)
            inside = grown.count(group.multiply(v, it->first)) > 0;
        if (inside)
            out.insert(v);
    }
    return out;
}

/// The ball A^n as a set.
template <typename G>
std::set<typename G::Element> ball_set(const G& group, int n)
{
    std::set<typename G::Element> out;
    for (const auto& [g, len] : ball(group, n).length)
        out.insert(g);
    return out;
}

/// Least n in [1, n_max] with c^m A^n inside A^{n+2}.
std::optional<int> heisenberg_commutator_check(int m, int n_max);

struct GrowthEstimate
{
    int radius = 0;
    std::size_t ball_size = 0;
    /// |S_r| / |S_{r-1}|.
    Rational sphere_ratio;
    /// Enclosure of |A^r|^{1/r}.
    Rational root_lo;
    Rational root_hi;
};

/// Enclosure [x / 2^bits, (x + 1) / 2^bits] of n^{1/r}.
std::pair<Rational, Rational> root_bounds(const Integer& n, int r, unsigned bits = 32);

template <typename G>
GrowthEstimate exp_growth_estimate(const G& group, int r)
{
    if (r < 2)
        throw std::invalid_argument("growth estimate needs r >= 2");
    const BallTable<G> table = ball(group, r);
    GrowthEstimate out;
    out.radius = r;
    out.ball_size = table.size();
    out.sphere_ratio = Rational(Integer(table.sphere[r]), Integer(table.sphere[r - 1]));
    std::tie(out.root_lo, out.root_hi) = root_bounds(Integer(table.size()), r);
    return out;
}

/**
 * Partial Busemann ball: the union of gamma_k A^k over k <= r, where gamma_k
 * is the product of the first k letters of the periodic word `step`,
 * restricted to the ball of radius r. Throws if some gamma_k, k <= r, is not
 * of length k. Values are word lengths.
 */
template <typename G>
std::map<typename G::Element, int> busemann_window(const G& group,
                                                   const std::vector<typename G::Element>& step,
                                                   int r)
{
    if (step.empty())
        throw std::invalid_argument("ray word is empty");
    if (r < 0)
        throw std::invalid_argument("radius must be non-negative");
    const BallTable<G> table = ball(group, 2 * r);
    std::map<typename G::Element, int> out;
    auto gamma = group.identity();
    for (int k = 0; k <= r; ++k)
    {
        if (k > 0)
            gamma = group.multiply(gamma, step[(k - 1) % step.size()]);
        if (table.length_of(gamma) != k)
            throw std::invalid_argument("ray word is not geodesic at step " + std::to_string(k));
        for (const auto& x : right_ball(group, gamma, k))
        {
            const auto len = table.length_of(x);
            if (len && *len <= r)
                out.emplace(x, *len);
        }
    }
    return out;
}

} // namespace horocalc

#endif // HOROCALC_GROUPS_HPP
