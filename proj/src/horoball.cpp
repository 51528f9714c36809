#include "horocalc/horoball.hpp"

#include <algorithm>
#include <deque>

namespace horocalc {

namespace {

using Coords = std::vector<std::int64_t>;

Coords to_coords(const Point& p)
{
    Coords out(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i)
        out[i] = to_int64(p[i]);
    return out;
}

// Semigroup reachability from 0 inside a box of Z^d.
class Saturation
{
public:
    Saturation(const Window& box, const PointSet& generators)
        : lo_(to_coords(box.lo)), hi_(to_coords(box.hi))
    {
        const std::size_t d = lo_.size();
        strides_.resize(d);
        std::size_t total = 1;
        for (std::size_t i = d; i-- > 0;)
        {
            strides_[i] = total;
            total *= static_cast<std::size_t>(hi_[i] - lo_[i] + 1);
            if (total > 50'000'000)
                throw BudgetExceeded("saturation box exceeds 5e7 cells");
        }
        reached_.assign(total, 0);
        for (const Point& g : generators)
            gens_.push_back(to_coords(g));
    }

    /// Runs the search; stops early once `stop` (if given) is reached.
    void run(const Coords* stop = nullptr)
    {
        Coords origin(lo_.size(), 0);
        if (!inside(origin))
            return;
        std::deque<Coords> queue = {origin};
        reached_[offset(origin)] = 1;
        while (!queue.empty())
        {
            Coords x = std::move(queue.front());
            queue.pop_front();
            if (stop && x == *stop)
                return;
            for (const Coords& g : gens_)
            {
                Coords y = x;
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] += g[i];
                if (!inside(y))
                    continue;
                char& cell = reached_[offset(y)];
                if (!cell)
                {
                    cell = 1;
                    queue.push_back(std::move(y));
                }
            }
        }
    }

    bool reached(const Coords& x) const { return inside(x) && reached_[offset(x)]; }

private:
    bool inside(const Coords& x) const
    {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < lo_[i] || x[i] > hi_[i])
                return false;
        return true;
    }
    std::size_t offset(const Coords& x) const
    {
        std::size_t o = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            o += static_cast<std::size_t>(x[i] - lo_[i]) * strides_[i];
        return o;
    }

    Coords lo_, hi_;
    std::vector<std::size_t> strides_;
    std::vector<Coords> gens_;
    std::vector<char> reached_;
};

// Any representation of x as a sum of generators can be reordered so its
// partial sums stay within this distance of the segment [0, x].
Integer steinitz_margin(const Horoball& h)
{
    Integer m = 0;
    for (const Point& g : h.generators)
        m = std::max(m, max_abs(g));
    return Integer(2 * h.dim) * m;
}

Window box_with_origin(const Window& w)
{
    Point lo = w.lo, hi = w.hi;
    for (Eigen::Index i = 0; i < lo.size(); ++i)
    {
        lo[i] = std::min(lo[i], Integer(0));
        hi[i] = std::max(hi[i], Integer(0));
    }
    return Window(lo, hi);
}

std::string describe(const GenSet& g, std::size_t face)
{
    std::string s = "{";
    const Face& f = g.faces[face];
    for (std::size_t i = 0; i < f.vertex_ids.size(); ++i)
        s += (i ? ", " : "") + to_string(g.polytope.vertices[f.vertex_ids[i]]);
    return s + "}";
}

} // namespace

Horoball Horoball::translated(const Point& v) const
{
    Horoball out = *this;
    out.shift = stabilizer.reduce(Point(shift + v));
    return out;
}

Lattice stabilizer(const GenSet& g, const Face& f)
{
    return difference_lattice(f.points_in_face.points(), g.dim());
}

Horoball make_horoball(const GenSet& g, std::size_t face, const Point& shift)
{
    if (face >= g.faces.size())
        throw std::out_of_range("face index " + std::to_string(face) + " out of range");
    if (shift.size() != g.dim())
        throw DimensionMismatch();
    const Face& f = g.faces[face];
    Horoball h;
    h.dim = g.dim();
    h.face = face;
    h.face_vertices = f.vertex_ids;
    std::vector<Point> gens;
    for (const Point& w : f.vertex_points(g.polytope))
        for (const Point& u : g.a)
            if (!lex_equal(u, w))
                gens.push_back(u - w);
    h.generators = PointSet(g.dim(), std::move(gens));
    h.envelope = envelope(g.polytope, f);
    h.stabilizer = stabilizer(g, f);
    h.shift = h.stabilizer.reduce(shift);
    return h;
}

Horoball make_horoball(const GenSet& g, std::size_t face)
{
    return make_horoball(g, face, zero_point(g.dim()));
}

std::vector<Horoball> horoballs(const GenSet& g)
{
    std::vector<Horoball> out;
    for (std::size_t i = 0; i < g.faces.size(); ++i)
        out.push_back(make_horoball(g, i));
    return out;
}

PointSet horoball_window(const Horoball& h, const Window& win)
{
    if (win.dim() != h.dim)
        throw DimensionMismatch();
    const Window local = win.translated(Point(-h.shift));
    Saturation sat(box_with_origin(local).inflated(steinitz_margin(h)), h.generators);
    sat.run();
    std::vector<Point> out;
    for (const Point& y : local.points())
        if (cone_contains(h.envelope, y) && sat.reached(to_coords(y)))
            out.push_back(y + h.shift);
    return PointSet(h.dim, std::move(out));
}

bool horoball_contains(const Horoball& h, const Point& x)
{
    if (x.size() != h.dim)
        throw DimensionMismatch();
    const Point y = x - h.shift;
    if (!cone_contains(h.envelope, y))
        return false;
    if (is_zero(y))
        return true;
    Saturation sat(box_with_origin(Window(y, y)).inflated(steinitz_margin(h)), h.generators);
    const Coords target = to_coords(y);
    sat.run(&target);
    return sat.reached(target);
}

bool horoball_meets(const Horoball& h, const PointSet& w)
{
    if (w.empty())
        return false;
    std::vector<Point> inside;
    for (const Point& x : w)
        if (cone_contains(h.envelope, Point(x - h.shift)))
            inside.push_back(x);
    if (inside.empty())
        return false;
    const PointSet candidates(h.dim, inside);
    return !set_intersection(horoball_window(h, bounding_box(candidates)), candidates).empty();
}

std::string to_string(LimitClass::Tag tag)
{
    switch (tag)
    {
    case LimitClass::Tag::Empty:
        return "empty";
    case LimitClass::Tag::Full:
        return "full";
    case LimitClass::Tag::Horoball:
        return "horoball";
    case LimitClass::Tag::Diverges:
        return "diverges";
    }
    return "unknown";
}

LimitClass classify_limit(const GenSet& g, std::size_t face, const Point& c, const Point& u)
{
    if (face >= g.faces.size())
        throw std::out_of_range("face index " + std::to_string(face) + " out of range");
    if (c.size() != g.dim() || u.size() != g.dim())
        throw DimensionMismatch();
    if (is_zero(u))
        throw std::invalid_argument("direction must be non-zero");
    const Face& f = g.faces[face];
    std::vector<std::size_t> flat;
    bool all_negative = true;
    for (std::size_t k : f.containing_facets)
    {
        const Point& n = g.polytope.facets[k].normal;
        Integer s = 0;
        for (Eigen::Index i = 0; i < n.size(); ++i)
            s += n[i] * u[i];
        if (s > 0)
            return {LimitClass::Tag::Empty, std::nullopt};
        if (s == 0)
        {
            flat.push_back(k);
            all_negative = false;
        }
    }
    if (all_negative)
        return {LimitClass::Tag::Full, std::nullopt};
    std::vector<std::size_t> ids = g.polytope.facet_vertices[flat.front()];
    for (std::size_t k : flat)
    {
        std::vector<std::size_t> next;
        const auto& other = g.polytope.facet_vertices[k];
        std::set_intersection(ids.begin(), ids.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        ids.swap(next);
    }
    std::optional<std::size_t> wider = find_face(g.faces, ids);
    if (!wider)
        throw std::logic_error("facet intersection is not a face");
    Horoball limit = make_horoball(g, *wider, c);
    if (!limit.stabilizer.contains(u))
        return {LimitClass::Tag::Diverges, std::nullopt};
    return {LimitClass::Tag::Horoball, std::move(limit)};
}

FaceSignature face_signature(const GenSet& g, std::size_t face)
{
    const Face& f = g.faces.at(face);
    return {f.dim, envelope(g.polytope, f), stabilizer(g, f)};
}

bool signature_equal(const FaceSignature& a, const FaceSignature& b)
{
    return a.dim == b.dim && cone_equal(a.envelope, b.envelope) && a.stabilizer == b.stabilizer;
}

ConjugacyVerdict conjugacy_decide(const GenSet& g1, const GenSet& g2)
{
    if (g1.dim() != g2.dim())
        throw DimensionMismatch("generating sets live in different dimensions");
    ConjugacyVerdict out;
    if (g1.faces.size() != g2.faces.size())
    {
        out.reason = "face counts differ: " + std::to_string(g1.faces.size()) + " vs " +
                     std::to_string(g2.faces.size());
        return out;
    }
    std::vector<FaceSignature> s2;
    for (std::size_t j = 0; j < g2.faces.size(); ++j)
        s2.push_back(face_signature(g2, j));
    std::vector<bool> used(s2.size(), false);
    for (std::size_t i = 0; i < g1.faces.size(); ++i)
    {
        FaceSignature s1 = face_signature(g1, i);
        bool matched = false;
        for (std::size_t j = 0; j < s2.size() && !matched; ++j)
            if (!used[j] && signature_equal(s1, s2[j]))
            {
                used[j] = true;
                out.witness.emplace_back(i, j);
                matched = true;
            }
        if (!matched)
        {
            out.witness.clear();
            out.reason = "no face of the second set matches face " + describe(g1, i) +
                         " (dimension " + std::to_string(s1.dim) + ")";
            return out;
        }
    }
    out.conjugate = true;
    return out;
}

CbReport cb_report(const GenSet& g)
{
    CbReport out;
    out.rank = static_cast<int>(g.dim()) + 1;
    out.layers.assign(static_cast<std::size_t>(g.dim()), 0);
    for (const Face& f : g.faces)
        ++out.layers[static_cast<std::size_t>(f.dim)];
    return out;
}

} // namespace horocalc
