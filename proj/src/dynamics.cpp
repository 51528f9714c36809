#include "horocalc/dynamics.hpp"

namespace horocalc {

namespace {

void require_non_negative(long n, const char* what)
{
    if (n < 0)
        throw std::invalid_argument(std::string(what) + " must be non-negative");
}

Integer power(long base, long exponent)
{
    return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

} // namespace

GenSet GenSet::from(const PointSet& a)
{
    GenerationCheck check = positive_generation_check(a);
    if (!check.ok)
        throw InvalidGenSet(check.reason);
    GenSet g;
    g.a = a;
    g.polytope = hull(a);
    g.faces = face_lattice(g.polytope, a);
    const PointSet minus = negate(a);
    PointSet ball = a;
    g.q = 1;
    while (!is_subset(minus, ball))
    {
        ball = minkowski_sum(ball, a);
        ++g.q;
    }
    return g;
}

PointSet iterate_sum(const PointSet& a, long n)
{
    require_non_negative(n, "iteration count");
    PointSet out = PointSet::origin(a.dim());
    for (long i = 0; i < n; ++i)
        out = minkowski_sum(out, a);
    return out;
}

std::vector<PointSet> iterate_sums(const PointSet& a, long n_max)
{
    require_non_negative(n_max, "iteration count");
    std::vector<PointSet> out = {PointSet::origin(a.dim())};
    for (long i = 0; i < n_max; ++i)
        out.push_back(minkowski_sum(out.back(), a));
    return out;
}

PointSet phi(const GenSet& g, const PointSet& w, long n)
{
    return minkowski_sum(w, iterate_sum(g.a, n));
}

bool sf_holds(const GenSet& g, long threshold, long n_max)
{
    std::vector<PointSet> balls = iterate_sums(g.a, n_max);
    for (long n = std::max(threshold, 0L); n <= n_max; ++n)
        if (!is_subset(scaled_lattice_points(g.polytope, n - threshold), balls[n]))
            return false;
    return true;
}

SfThreshold sf_threshold(const GenSet& g, long horizon)
{
    const long d = static_cast<long>(g.dim());
    const PointSet target = scaled_lattice_points(g.polytope, d);
    PointSet ball = PointSet::origin(g.dim());
    long k = 0;
    while (!is_subset(target, ball))
    {
        if (++k > 1000)
            throw BudgetExceeded("no k <= 1000 with d conv(A) inside kA");
        ball = minkowski_sum(ball, g.a);
    }
    SfThreshold out;
    out.k = k;
    out.n = std::max(k - d, 0L);
    if (!sf_holds(g, out.n, horizon))
        throw std::logic_error("threshold " + std::to_string(out.n) + " failed verification");
    out.verified_to = horizon;
    return out;
}

Rational volume_estimate(const GenSet& g, long n)
{
    if (n < 1)
        throw std::invalid_argument("volume estimate needs n >= 1");
    return Rational(Integer(iterate_sum(g.a, n).size()), power(n, g.dim()));
}

Rational hull_volume(const GenSet& g)
{
    return volume(g.polytope, g.faces);
}

CoverInstance preimage_instance(const GenSet& g, const PointSet& m, long k, PointSet* candidates)
{
    if (k < 1)
        throw std::invalid_argument("preimage count needs k >= 1");
    if (m.dim() != g.dim())
        throw DimensionMismatch();
    const PointSet ka = iterate_sum(g.a, k);
    const PointSet target = minkowski_sum(m, ka);
    const PointSet s = target.empty() ? PointSet(g.dim()) : erode(target, ka);
    CoverInstance inst;
    inst.num_targets = target.size();
    for (const Point& x : s)
    {
        std::vector<std::uint32_t> cov;
        for (const Point& y : ka)
            cov.push_back(static_cast<std::uint32_t>(target.index_of(x + y)));
        std::sort(cov.begin(), cov.end());
        inst.covers.push_back(std::move(cov));
    }
    if (candidates)
        *candidates = s;
    return inst;
}

PreimageCount preimage_count(const GenSet& g, const PointSet& m, long k)
{
    return preimage_count(g, m, k, default_node_budget());
}

PreimageCount preimage_count(const GenSet& g, const PointSet& m, long k, std::uint64_t node_budget)
{
    PreimageCount out;
    PointSet s(g.dim());
    CoverInstance inst = preimage_instance(g, m, k, &s);
    out.target = minkowski_sum(m, iterate_sum(g.a, k));
    out.k = k;
    out.candidates = s.size();
    out.count = count_covers(inst, node_budget);
    return out;
}

std::vector<PointSet> enumerate_preimages(const GenSet& g, const PointSet& m, long k)
{
    PointSet s(g.dim());
    CoverInstance inst = preimage_instance(g, m, k, &s);
    if (s.size() > 20)
        throw BudgetExceeded("enumeration needs at most 20 candidates, got " +
                             std::to_string(s.size()));
    const PointSet ka = iterate_sum(g.a, k);
    const PointSet target = minkowski_sum(m, ka);
    std::vector<PointSet> out;
    for (const auto& model : enumerate_covers(inst))
    {
        std::vector<Point> points;
        for (std::uint32_t v : model)
            points.push_back(s[v]);
        PointSet n(g.dim(), std::move(points));
        if (minkowski_sum(n, ka) != target)
            throw std::logic_error("enumerated preimage fails verification");
        out.push_back(std::move(n));
    }
    return out;
}

AmenabilityRatio amenability_ratio(const GenSet& g, const PointSet& m)
{
    if (m.empty())
        throw std::invalid_argument("amenability ratio needs a non-empty set");
    const long q = g.q;
    AmenabilityRatio out;
    out.numerator = preimage_count(g, phi(g, m, (q + 5) * q), q);
    out.denominator = preimage_count(g, phi(g, m, (q + 1) * q), q);
    return out;
}

} // namespace horocalc
