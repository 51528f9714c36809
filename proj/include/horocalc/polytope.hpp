#ifndef HOROCALC_POLYTOPE_HPP
#define HOROCALC_POLYTOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "horocalc/lattice.hpp"
#include "horocalc/point_set.hpp"

namespace horocalc {

class NotFullDimensional : public std::invalid_argument
{
public:
    NotFullDimensional(Eigen::Index affine_rank, Eigen::Index dim)
        : std::invalid_argument("point set has affine rank " + std::to_string(affine_rank) +
                                " in dimension " + std::to_string(dim)),
          affine_rank_(affine_rank)
    {
    }
    Eigen::Index affine_rank() const { return affine_rank_; }

private:
    Eigen::Index affine_rank_;
};

/// The half-space {x : <normal, x> >= offset}; `normal` is primitive and
/// points into the polytope.
struct Facet
{
    Point normal;
    Integer offset;
};

/// Exact convex hull of a full-dimensional finite point set.
struct Polytope
{
    Eigen::Index dim = 0;
    PointSet vertices;
    std::vector<Facet> facets;
    /// Indices into `vertices` of the vertices lying on each facet.
    std::vector<std::vector<std::size_t>> facet_vertices;

    bool contains(const Point& x) const;
    /// Whether x lies in scale * conv.
    bool contains_scaled(const Point& x, const Integer& scale) const;
};

/// A proper face of a polytope together with the generator points on it.
struct Face
{
    std::size_t id = 0;
    Eigen::Index dim = 0;
    std::vector<std::size_t> vertex_ids;
    /// Facets containing this face (the set M_F).
    std::vector<std::size_t> containing_facets;
    /// All input points lying on the face, not only its vertices.
    PointSet points_in_face;

    std::vector<Point> vertex_points(const Polytope& p) const;
};

/**
 * A polyhedral cone {x : <n, x> >= 0 for every stored normal}.
 *
 * Normals are primitive, deduplicated, sorted lexicographically and
 * irredundant (each one is certified by an exact LP to be not implied by the
 * others).
 */
class Cone
{
public:
    explicit Cone(Eigen::Index dim = 1) : dim_(dim) {}
    /// Canonicalizes an arbitrary list of normals.
    Cone(Eigen::Index dim, const std::vector<Point>& normals);

    Eigen::Index dim() const { return dim_; }
    const std::vector<Point>& normals() const { return normals_; }
    /// True when the normals positively span a line, i.e. the cone is not
    /// full-dimensional.
    bool has_implicit_equalities() const { return implicit_equalities_; }

    bool contains(const Point& x) const;
    bool contains(const RationalVector& x) const;

    friend bool operator<(const Cone& a, const Cone& b);

private:
    Eigen::Index dim_;
    std::vector<Point> normals_;
    bool implicit_equalities_ = false;
};

/// Throws NotFullDimensional when `a` does not affinely span R^d.
Polytope hull(const PointSet& a);

/// All proper faces (dimensions 0 .. d-1), ordered by dimension and vertex ids.
std::vector<Face> face_lattice(const Polytope& p, const PointSet& a);

/// Index of the face whose vertex set equals `vertex_ids`, if any.
std::optional<std::size_t> find_face(const std::vector<Face>& faces,
                                     const std::vector<std::size_t>& vertex_ids);

/// The cone of directions bounded by the facets containing `f`.
Cone envelope(const Polytope& p, const Face& f);

bool cone_contains(const Cone& c, const Point& x);
bool cone_contains(const Cone& c, const RationalVector& x);

bool cone_equal(const Cone& a, const Cone& b);

/// Least sum of non-negative coefficients expressing x over the generators,
/// or nullopt when x is outside their cone.
std::optional<Rational> cone_coeff_sum(const PointSet& generators, const Point& x);

struct GenerationCheck
{
    bool ok = false;
    std::string reason;
};

/// Whether `a` (containing 0) generates Z^d as a semigroup: its integer span
/// is Z^d and 0 is an interior point of its convex hull.
GenerationCheck positive_generation_check(const PointSet& a);

/// Exact d-dimensional volume via a pulling triangulation of the face lattice.
Rational volume(const Polytope& p, const std::vector<Face>& faces);

/// Lattice points of scale * conv.
PointSet scaled_lattice_points(const Polytope& p, const Integer& scale);

/// Rank of the affine span of the points (-1 for the empty set).
Eigen::Index affine_rank(const std::vector<Point>& points);

} // namespace horocalc

#endif // HOROCALC_POLYTOPE_HPP
