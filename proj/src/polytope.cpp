#include "horocalc/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "horocalc/linear_program.hpp"

namespace horocalc {

namespace {

Integer dot(const Point& a, const Point& b)
{
    Integer s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a(i) * b(i);
    return s;
}

std::vector<RationalVector> to_rational(const std::vector<Point>& pts)
{
    std::vector<RationalVector> out;
    out.reserve(pts.size());
    for (const Point& p : pts)
        out.push_back(horocalc::to_rational(p));
    return out;
}

// Calls `visit` with every k-subset of {0, ..., n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true)
    {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

bool is_subset_of(const std::vector<std::size_t>& sub, const std::vector<std::size_t>& super)
{
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

} // namespace

Eigen::Index affine_rank(const std::vector<Point>& points)
{
    if (points.empty())
        return -1;
    Matrix<Integer> diffs(points[0].size(), static_cast<Eigen::Index>(points.size()) - 1);
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
    return rank(diffs);
}

bool Polytope::contains(const Point& x) const
{
    return contains_scaled(x, Integer(1));
}

bool Polytope::contains_scaled(const Point& x, const Integer& scale) const
{
    for (const Facet& f : facets)
        if (dot(f.normal, x) < scale * f.offset)
            return false;
    return true;
}

std::vector<Point> Face::vertex_points(const Polytope& p) const
{
    std::vector<Point> out;
    for (std::size_t id : vertex_ids)
        out.push_back(p.vertices[id]);
    return out;
}

Polytope hull(const PointSet& a)
{
    const Eigen::Index d = a.dim();
    const Eigen::Index r = affine_rank(a.points());
    if (r < d)
        throw NotFullDimensional(std::max<Eigen::Index>(r, 0), d);

    Polytope p;
    p.dim = d;
    std::vector<Point> extreme;
    const std::vector<RationalVector> all = to_rational(a.points());
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        std::vector<RationalVector> others;
        others.reserve(all.size() - 1);
        for (std::size_t j = 0; j < all.size(); ++j)
            if (j != i)
                others.push_back(all[j]);
        if (!in_convex_hull(others, all[i]))
            extreme.push_back(a[i]);
    }
    p.vertices = PointSet(d, extreme);

    const std::vector<Point>& verts = p.vertices.points();
    std::map<Point, Integer, LexLess> found;
    for_each_combination(verts.size(), static_cast<std::size_t>(d),
                         [&](const std::vector<std::size_t>& idx) {
                             Matrix<Integer> diffs(d, d - 1);
                             for (Eigen::Index j = 1; j < d; ++j)
                                 diffs.col(j - 1) = verts[idx[static_cast<std::size_t>(j)]] -
                                                    verts[idx[0]];
                             Point n = primitive(orthogonal_complement(diffs));
                             if (is_zero(n))
                                 return;
                             const Integer off = dot(n, verts[idx[0]]);
                             bool above = true, below = true;
                             for (const Point& v : verts)
                             {
                                 const Integer s = dot(n, v);
                                 above = above && s >= off;
                                 below = below && s <= off;
                             }
                             if (above)
                                 found.emplace(n, off);
                             else if (below)
                                 found.emplace(Point(-n), Integer(-off));
                         });
    for (const auto& [normal, offset] : found)
    {
        p.facets.push_back({normal, offset});
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (dot(normal, verts[i]) == offset)
                tight.push_back(i);
        p.facet_vertices.push_back(std::move(tight));
    }
    return p;
}

std::vector<Face> face_lattice(const Polytope& p, const PointSet& a)
{
    std::set<std::vector<std::size_t>> seen(p.facet_vertices.begin(), p.facet_vertices.end());
    std::vector<std::vector<std::size_t>> work(seen.begin(), seen.end());
    while (!work.empty())
    {
        std::vector<std::size_t> face = std::move(work.back());
        work.pop_back();
        for (const auto& facet : p.facet_vertices)
        {
            std::vector<std::size_t> meet;
            std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                                  std::back_inserter(meet));
            if (!meet.empty() && seen.insert(meet).second)
                work.push_back(std::move(meet));
        }
    }

    std::vector<Face> faces;
    for (const auto& ids : seen)
    {
        Face f;
        f.vertex_ids = ids;
        f.dim = affine_rank(f.vertex_points(p));
        for (std::size_t k = 0; k < p.facet_vertices.size(); ++k)
            if (is_subset_of(ids, p.facet_vertices[k]))
                f.containing_facets.push_back(k);
        std::vector<Point> on_face;
        for (const Point& x : a)
        {
            bool tight = true;
            for (std::size_t k : f.containing_facets)
                if (dot(p.facets[k].normal, x) != p.facets[k].offset)
                {
                    tight = false;
                    break;
                }
            if (tight)
                on_face.push_back(x);
        }
        f.points_in_face = PointSet(p.dim, std::move(on_face));
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
        return std::tie(x.dim, x.vertex_ids) < std::tie(y.dim, y.vertex_ids);
    });
    for (std::size_t i = 0; i < faces.size(); ++i)
        faces[i].id = i;
    return faces;
}

std::optional<std::size_t> find_face(const std::vector<Face>& faces,
                                     const std::vector<std::size_t>& vertex_ids)
{
    for (const Face& f : faces)
        if (f.vertex_ids == vertex_ids)
            return f.id;
    return std::nullopt;
}

Cone::Cone(Eigen::Index dim, const std::vector<Point>& normals) : dim_(dim)
{
    std::vector<Point> prim;
    for (const Point& n : normals)
    {
        if (n.size() != dim)
            throw DimensionMismatch("cone normal " + to_string(n) + " in dimension " +
                                    std::to_string(dim));
        if (!is_zero(n))
            prim.push_back(primitive(n));
    }
    std::sort(prim.begin(), prim.end(), LexLess{});
    prim.erase(std::unique(prim.begin(), prim.end(),
                           [](const Point& x, const Point& y) { return lex_equal(x, y); }),
               prim.end());

    // A normal is redundant iff it is a non-negative combination of the others.
    for (std::size_t i = 0; i < prim.size();)
    {
        std::vector<RationalVector> others;
        for (std::size_t j = 0; j < prim.size(); ++j)
            if (j != i)
                others.push_back(horocalc::to_rational(prim[j]));
        if (!others.empty() && in_cone(others, horocalc::to_rational(prim[i])))
            prim.erase(prim.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    normals_ = std::move(prim);

    if (!normals_.empty())
    {
        // Not pointed iff 0 is a convex combination of the normals.
        implicit_equalities_ =
            in_convex_hull(to_rational(normals_), RationalVector::Zero(dim_).eval());
    }
}

bool Cone::contains(const Point& x) const
{
    if (x.size() != dim_)
        throw DimensionMismatch();
    for (const Point& n : normals_)
        if (dot(n, x) < 0)
            return false;
    return true;
}

bool Cone::contains(const RationalVector& x) const
{
    if (x.size() != dim_)
        throw DimensionMismatch();
    for (const Point& n : normals_)
    {
        Rational s = 0;
        for (Eigen::Index i = 0; i < dim_; ++i)
            s += Rational(n(i)) * x(i);
        if (s < 0)
            return false;
    }
    return true;
}

bool operator<(const Cone& a, const Cone& b)
{
    if (a.dim_ != b.dim_)
        return a.dim_ < b.dim_;
    return std::lexicographical_compare(a.normals_.begin(), a.normals_.end(), b.normals_.begin(),
                                        b.normals_.end(), LexLess{});
}

Cone envelope(const Polytope& p, const Face& f)
{
    std::vector<Point> normals;
    for (std::size_t k : f.containing_facets)
        normals.push_back(p.facets[k].normal);
    return Cone(p.dim, normals);
}

bool cone_contains(const Cone& c, const Point& x)
{
    return c.contains(x);
}

bool cone_contains(const Cone& c, const RationalVector& x)
{
    return c.contains(x);
}

bool cone_equal(const Cone& a, const Cone& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("cones of dimension " + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
    const auto& na = a.normals();
    const auto& nb = b.normals();
    if (na.size() == nb.size() &&
        std::equal(na.begin(), na.end(), nb.begin(),
                   [](const Point& x, const Point& y) { return lex_equal(x, y); }))
        return true;
    // Irredundant normals are unique only for full-dimensional cones; otherwise
    // compare by mutual inclusion (each normal of one cone is a valid
    // inequality of the other iff it lies in the other's normal cone).
    if (!a.has_implicit_equalities() && !b.has_implicit_equalities())
        return false;
    auto implied_by = [](const std::vector<Point>& normals, const std::vector<Point>& by) {
        const std::vector<RationalVector> gens = to_rational(by);
        for (const Point& n : normals)
            if (!in_cone(gens, horocalc::to_rational(n)))
                return false;
        return true;
    };
    return implied_by(na, nb) && implied_by(nb, na);
}

std::optional<Rational> cone_coeff_sum(const PointSet& generators, const Point& x)
{
    if (generators.empty())
        throw std::invalid_argument("cone_coeff_sum needs at least one generator");
    if (x.size() != generators.dim())
        throw DimensionMismatch();
    return min_cone_coefficient_sum(to_rational(generators.points()), horocalc::to_rational(x));
}

GenerationCheck positive_generation_check(const PointSet& a)
{
    const Eigen::Index d = a.dim();
    if (!a.contains(zero_point(d)))
        return {false, "identity missing"};
    Lattice span = lattice_from(a.points(), d);
    if (span.rank() < d)
        return {false, "lattice rank " + std::to_string(span.rank()) + " below dimension " +
                           std::to_string(d)};
    if (span.index() != 1)
        return {false, "lattice index " + span.index().str()};
    const std::vector<RationalVector> gens = to_rational(a.points());
    for (Eigen::Index i = 0; i < d; ++i)
        for (int sign : {1, -1})
        {
            RationalVector e = RationalVector::Zero(d);
            e(i) = Rational(sign);
            if (!in_cone(gens, e))
                return {false, "cone is a proper half-space"};
        }
    return {true, ""};
}

Rational volume(const Polytope& p, const std::vector<Face>& faces)
{
    const Eigen::Index d = p.dim;
    // Sub-faces of each face, and of the polytope itself (stored at index faces.size()).
    const std::size_t whole = faces.size();
    std::vector<std::size_t> all_ids(p.vertices.size());
    for (std::size_t i = 0; i < all_ids.size(); ++i)
        all_ids[i] = i;
    auto ids_of = [&](std::size_t f) -> const std::vector<std::size_t>& {
        return f == whole ? all_ids : faces[f].vertex_ids;
    };
    auto dim_of = [&](std::size_t f) { return f == whole ? d : faces[f].dim; };

    std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
    std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> triangulate =
        [&](std::size_t f) -> const std::vector<std::vector<std::size_t>>& {
        auto it = memo.find(f);
        if (it != memo.end())
            return it->second;
        std::vector<std::vector<std::size_t>> simplices;
        const auto& ids = ids_of(f);
        if (dim_of(f) == 0)
            simplices.push_back({ids.front()});
        else
        {
            const std::size_t apex = ids.front();
            for (const Face& g : faces)
            {
                if (g.dim != dim_of(f) - 1 || !is_subset_of(g.vertex_ids, ids) ||
                    std::binary_search(g.vertex_ids.begin(), g.vertex_ids.end(), apex))
                    continue;
                for (const auto& s : triangulate(g.id))
                {
                    std::vector<std::size_t> t = s;
                    t.push_back(apex);
                    simplices.push_back(std::move(t));
                }
            }
        }
        return memo.emplace(f, std::move(simplices)).first->second;
    };

    Integer total = 0;
    for (const auto& s : triangulate(whole))
    {
        Matrix<Integer> m(d, d);
        for (Eigen::Index j = 0; j < d; ++j)
            m.col(j) = p.vertices[s[static_cast<std::size_t>(j) + 1]] - p.vertices[s[0]];
        total += abs_value(determinant(m));
    }
    Integer factorial = 1;
    for (Eigen::Index k = 2; k <= d; ++k)
        factorial *= k;
    return Rational(total) / Rational(factorial);
}

PointSet scaled_lattice_points(const Polytope& p, const Integer& scale)
{
    const Window box = bounding_box(p.vertices);
    Window scaled(box.lo * scale, box.hi * scale);
    std::vector<Point> out;
    for (const Point& x : scaled.points())
        if (p.contains_scaled(x, scale))
            out.push_back(x);
    return PointSet(p.dim, std::move(out));
}

} // namespace horocalc
