#include "horocalc/sheltered.hpp"

#include "horocalc/linear_program.hpp"

namespace horocalc {

namespace {

Integer dot(const Point& a, const Point& b)
{
    Integer s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Lattice points of {x : <n_F, x> <= max_W <n_F, .>} over the facets of
// conv(-A). Outside it some facet separates v + Env from W.
PointSet uncertified_region(const GenSet& rev, const PointSet& w)
{
    const Eigen::Index d = rev.dim();
    std::vector<RationalVector> normals;
    std::vector<Rational> bounds;
    for (const Facet& f : rev.polytope.facets)
    {
        Integer best = dot(f.normal, w[0]);
        for (const Point& x : w)
            best = std::max(best, dot(f.normal, x));
        normals.push_back(to_rational(f.normal));
        bounds.emplace_back(best);
    }
    Point lo(d), hi(d);
    for (Eigen::Index i = 0; i < d; ++i)
    {
        RationalVector e = RationalVector::Zero(d);
        e[i] = 1;
        hi[i] = floor_of(*maximize_over_polyhedron(e, normals, bounds));
        e[i] = -1;
        lo[i] = ceil_of(Rational(-*maximize_over_polyhedron(e, normals, bounds)));
    }
    std::vector<Point> out;
    for (const Point& x : Window(lo, hi).points())
    {
        bool inside = true;
        for (std::size_t k = 0; k < normals.size() && inside; ++k)
            inside = Rational(dot(rev.polytope.facets[k].normal, x)) <= bounds[k];
        if (inside)
            out.push_back(x);
    }
    return PointSet(d, std::move(out));
}

std::optional<HoroballCertificate> certify_with(const GenSet& rev,
                                                const std::vector<Horoball>& vertex_balls,
                                                const PointSet& w, const Point& v)
{
    for (const Horoball& h : vertex_balls)
    {
        Horoball ball = h.translated(v);
        if (!horoball_meets(ball, w))
            return HoroballCertificate{v, rev.polytope.vertices[h.face_vertices.front()], v};
    }
    return std::nullopt;
}

std::vector<Horoball> vertex_horoballs(const GenSet& rev)
{
    std::vector<Horoball> out;
    for (std::size_t i = 0; i < rev.faces.size(); ++i)
        if (rev.faces[i].dim == 0)
            out.push_back(make_horoball(rev, i));
    return out;
}

} // namespace

PointSet shel_r(const GenSet& g, const PointSet& w, long r)
{
    if (r < 1)
        throw std::invalid_argument("sheltered radius must be at least 1");
    if (w.dim() != g.dim())
        throw DimensionMismatch();
    if (w.empty())
        return w;
    const PointSet ball = iterate_sum(g.a, r);
    return erode(minkowski_sum(w, ball), ball);
}

GenSet reversed(const GenSet& g)
{
    return GenSet::from(negate(g.a));
}

std::optional<HoroballCertificate> certify_outside(const GenSet& g, const PointSet& w,
                                                   const Point& v, long search_radius)
{
    if (search_radius < 0)
        throw std::invalid_argument("search radius must be non-negative");
    if (w.contains(v))
        throw std::invalid_argument("point " + to_string(v) + " belongs to W");
    const GenSet rev = reversed(g);
    return certify_with(rev, vertex_horoballs(rev), w, v);
}

bool verify_certificate(const GenSet& g, const PointSet& w, const HoroballCertificate& c)
{
    const GenSet rev = reversed(g);
    std::ptrdiff_t id = rev.polytope.vertices.index_of(c.vertex);
    if (id < 0)
        return false;
    auto face = find_face(rev.faces, {static_cast<std::size_t>(id)});
    Horoball h = make_horoball(rev, *face, c.shift);
    return horoball_contains(h, c.point) && !horoball_meets(h, w);
}

ShelterResult shel(const GenSet& g, const PointSet& w, long r_max, long search_radius)
{
    if (r_max < 1)
        throw std::invalid_argument("r_max must be at least 1");
    if (search_radius < 0)
        throw std::invalid_argument("search radius must be non-negative");
    if (w.empty())
        throw std::invalid_argument("sheltered hull of the empty set");
    ShelterResult out;
    PointSet current = shel_r(g, w, 1);
    out.stable_radius = r_max;
    for (long r = 1; r < r_max; ++r)
    {
        PointSet next = shel_r(g, w, r + 1);
        if (next == current)
        {
            out.stable_radius = r;
            break;
        }
        current = std::move(next);
    }
    const PointSet candidate = current;
    const GenSet rev = reversed(g);
    const std::vector<Horoball> balls = vertex_horoballs(rev);
    for (const Point& v : uncertified_region(rev, w))
    {
        if (candidate.contains(v))
            continue;
        if (auto c = certify_with(rev, balls, w, v))
            out.certificates.push_back(std::move(*c));
        else
            out.uncertified.push_back(v);
    }
    if (out.uncertified.empty())
    {
        out.status = ShelterResult::Status::Exact;
        out.exact = candidate;
        out.lower = candidate;
        out.upper = candidate;
    }
    else
    {
        out.status = ShelterResult::Status::Bounds;
        out.lower = out.stable_radius == r_max ? candidate : shel_r(g, w, r_max);
        out.upper = set_union(candidate, PointSet(g.dim(), out.uncertified));
    }
    return out;
}

} // namespace horocalc
