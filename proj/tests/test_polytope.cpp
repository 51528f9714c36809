#include <gtest/gtest.h>

#include <set>

#include "horocalc/linear_program.hpp"
#include "horocalc/polytope.hpp"
#include "test_support.hpp"

using namespace horocalc;
using namespace horocalc::testing;

namespace {

Integer dot(const Point& a, const Point& b)
{
    Integer s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::set<std::pair<long, long>> normal_set(const Cone& c)
{
    std::set<std::pair<long, long>> out;
    for (const Point& n : c.normals())
        out.insert({long(to_int64(n[0])), long(to_int64(n[1]))});
    return out;
}

// Whether the union of nA, n <= 50, covers [-5,5]^2: plain integer BFS by levels.
bool saturates_window(const PointSet& a)
{
    std::set<std::pair<long, long>> gens;
    for (const Point& p : a)
        gens.insert({long(to_int64(p[0])), long(to_int64(p[1]))});
    std::set<std::pair<long, long>> reached = {{0, 0}};
    for (int n = 1; n <= 50; ++n)
    {
        std::set<std::pair<long, long>> next;
        for (auto [x, y] : reached)
            for (auto [gx, gy] : gens)
                next.insert({x + gx, y + gy});
        reached.swap(next);
        bool covered = true;
        for (long x = -5; x <= 5 && covered; ++x)
            for (long y = -5; y <= 5 && covered; ++y)
                covered = reached.count({x, y}) > 0;
        if (covered)
            return true;
    }
    return false;
}

std::vector<RationalVector> rationals(const std::vector<Point>& points)
{
    std::vector<RationalVector> out;
    for (const Point& p : points)
        out.push_back(to_rational(p));
    return out;
}

} // namespace

TEST(Hull, Square)
{
    Polytope p = hull(square());
    EXPECT_EQ(p.vertices, pts(2, {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
    ASSERT_EQ(p.facets.size(), 4u);
    for (const Facet& f : p.facets)
    {
        EXPECT_EQ(max_abs(f.normal), 1);
        EXPECT_EQ(f.offset, -1);
    }
}

TEST(Hull, Interval)
{
    Polytope p = hull(interval(-1, 1));
    EXPECT_EQ(p.vertices, pts(1, {{-1}, {1}}));
    EXPECT_EQ(p.facets.size(), 2u);
}

TEST(Hull, TriangleHasInteriorOrigin)
{
    Polytope p = hull(triangle());
    EXPECT_EQ(p.vertices, pts(2, {{1, 0}, {0, 1}, {-1, -1}}));
    for (const Facet& f : p.facets)
        EXPECT_GT(dot(f.normal, zero_point(2)), f.offset);
}

TEST(Hull, RejectsDegenerateInput)
{
    try
    {
        hull(pts(2, {{0, 0}, {1, 1}, {2, 2}}));
        FAIL() << "expected NotFullDimensional";
    }
    catch (const NotFullDimensional& e)
    {
        EXPECT_EQ(e.affine_rank(), 1);
    }
}

TEST(Hull, Invariants)
{
    std::mt19937 rng(5);
    for (Eigen::Index d = 2; d <= 3; ++d)
    {
        const Window w = Window::cube(d, -2, 2);
        for (int trial = 0; trial < 15; ++trial)
        {
            PointSet a = random_subset(rng, w, d == 2 ? 0.35 : 0.12);
            if (affine_rank(a.points()) < d)
                continue;
            Polytope p = hull(a);
            for (std::size_t i = 0; i < p.facets.size(); ++i)
            {
                const Facet& f = p.facets[i];
                Integer g = 0;
                for (Eigen::Index k = 0; k < d; ++k)
                    g = gcd(g, f.normal[k]);
                EXPECT_EQ(g, 1);
                for (const Point& x : a)
                    EXPECT_GE(dot(f.normal, x), f.offset);
                std::vector<Point> tight;
                for (std::size_t v : p.facet_vertices[i])
                {
                    EXPECT_EQ(dot(f.normal, p.vertices[v]), f.offset);
                    tight.push_back(p.vertices[v]);
                }
                EXPECT_EQ(affine_rank(tight), d - 1);
            }
            // Each vertex is outside the hull of the remaining input points.
            for (const Point& v : p.vertices)
            {
                std::vector<Point> rest;
                for (const Point& x : a)
                    if (!lex_equal(x, v))
                        rest.push_back(x);
                EXPECT_FALSE(in_convex_hull(rationals(rest), to_rational(v)));
            }
        }
    }
}

TEST(FaceLattice, Counts)
{
    EXPECT_EQ(face_lattice(hull(square()), square()).size(), 8u);
    EXPECT_EQ(face_lattice(hull(triangle()), triangle()).size(), 6u);
    EXPECT_EQ(face_lattice(hull(interval(-1, 1)), interval(-1, 1)).size(), 2u);
    PointSet cube = box(3, -1, 1);
    EXPECT_EQ(face_lattice(hull(cube), cube).size(), 26u);
}

TEST(FaceLattice, PointsInFaceIncludeNonVertices)
{
    PointSet a = square();
    Polytope p = hull(a);
    for (const Face& f : face_lattice(p, a))
    {
        EXPECT_EQ(f.points_in_face.size(), f.dim == 0 ? 1u : 3u);
        EXPECT_EQ(affine_rank(f.vertex_points(p)), f.dim);
        for (const Point& v : f.vertex_points(p))
            EXPECT_TRUE(f.points_in_face.contains(v));
        EXPECT_EQ(f.containing_facets.size(), f.dim == 0 ? 2u : 1u);
    }
}

TEST(Envelope, SquareExamples)
{
    PointSet a = square();
    Polytope p = hull(a);
    std::vector<Face> faces = face_lattice(p, a);
    auto corner = find_face(faces, {std::size_t(p.vertices.index_of(make_point({1, 1})))});
    ASSERT_TRUE(corner);
    Cone q = envelope(p, faces[*corner]);
    EXPECT_EQ(normal_set(q), (std::set<std::pair<long, long>>{{-1, 0}, {0, -1}}));
    EXPECT_TRUE(cone_contains(q, make_point({-3, -1})));
    EXPECT_FALSE(cone_contains(q, make_point({1, 0})));
    EXPECT_TRUE(cone_contains(q, zero_point(2)));

    std::vector<std::size_t> right = {std::size_t(p.vertices.index_of(make_point({1, -1}))),
                                      std::size_t(p.vertices.index_of(make_point({1, 1})))};
    auto edge = find_face(faces, right);
    ASSERT_TRUE(edge);
    EXPECT_EQ(normal_set(envelope(p, faces[*edge])),
              (std::set<std::pair<long, long>>{{-1, 0}}));
}

TEST(Envelope, Interval)
{
    PointSet a = interval(-1, 1);
    Polytope p = hull(a);
    std::vector<Face> faces = face_lattice(p, a);
    auto top = find_face(faces, {std::size_t(p.vertices.index_of(make_point({1})))});
    ASSERT_TRUE(top);
    Cone c = envelope(p, faces[*top]);
    ASSERT_EQ(c.normals().size(), 1u);
    EXPECT_EQ(c.normals()[0][0], -1);
}

TEST(Envelope, AgreesWithGeneratorForm)
{
    std::mt19937 rng(17);
    const Window w = Window::cube(2, -2, 2);
    for (int trial = 0; trial < 12; ++trial)
    {
        PointSet a = random_subset(rng, w, 0.4);
        if (affine_rank(a.points()) < 2)
            continue;
        Polytope p = hull(a);
        for (const Face& f : face_lattice(p, a))
        {
            Cone env = envelope(p, f);
            std::vector<Point> gens;
            for (const Point& u : a)
                for (const Point& v : f.vertex_points(p))
                    if (!lex_equal(u, v))
                        gens.push_back(u - v);
            for (const Point& g : gens)
                EXPECT_TRUE(cone_contains(env, g));
            // Every ray of the envelope is spanned by the generators; test a
            // sample of lattice points in the cone.
            for (const Point& x : Window::cube(2, -3, 3).points())
                if (cone_contains(env, x))
                    EXPECT_TRUE(in_cone(rationals(gens), to_rational(x)));
        }
    }
}

TEST(ConeEqual, Examples)
{
    Cone quadrant(2, {make_point({-1, 0}), make_point({0, -1})});
    Cone half(2, {make_point({-1, 0})});
    EXPECT_TRUE(cone_equal(quadrant, Cone(2, {make_point({0, -1}), make_point({-1, 0})})));
    EXPECT_FALSE(cone_equal(quadrant, half));
    Cone redundant(2, {make_point({1, 0}), make_point({0, 1}), make_point({1, 1})});
    Cone plain(2, {make_point({1, 0}), make_point({0, 1})});
    EXPECT_TRUE(cone_equal(redundant, plain));
    EXPECT_EQ(redundant.normals().size(), 2u);
}

TEST(ConeEqual, ScalingAndPermutationInvariance)
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> scale(1, 4);
    for (int trial = 0; trial < 40; ++trial)
    {
        std::vector<Point> normals;
        for (int i = 0; i < 4; ++i)
        {
            Point n = make_point({coord(rng), coord(rng)});
            if (!is_zero(n))
                normals.push_back(n);
        }
        std::vector<Point> shuffled = normals;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (Point& n : shuffled)
            n *= Integer(scale(rng));
        Cone a(2, normals), b(2, shuffled);
        EXPECT_TRUE(cone_equal(a, b));
        EXPECT_TRUE(cone_equal(b, a));
        // Equality agrees with membership on a window.
        for (const Point& x : Window::cube(2, -3, 3).points())
            EXPECT_EQ(a.contains(x), b.contains(x));
    }
}

TEST(ConeEqual, MatchesPointwiseMembership)
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coord(-2, 2);
    std::vector<Cone> cones;
    for (int trial = 0; trial < 25; ++trial)
    {
        std::vector<Point> normals;
        for (int i = 0; i < 3; ++i)
        {
            Point n = make_point({coord(rng), coord(rng)});
            if (!is_zero(n))
                normals.push_back(n);
        }
        cones.emplace_back(2, normals);
    }
    const PointSet probe = Window::cube(2, -4, 4).points();
    for (const Cone& a : cones)
        for (const Cone& b : cones)
        {
            bool same = true;
            for (const Point& x : probe)
                same = same && a.contains(x) == b.contains(x);
            EXPECT_EQ(cone_equal(a, b), same);
        }
}

TEST(ConeCoeffSum, Examples)
{
    PointSet gens = pts(2, {{-1, 0}, {0, -1}, {-2, -2}, {-1, -2}, {-2, -1}});
    EXPECT_EQ(cone_coeff_sum(gens, make_point({-3, 0})).value(), 3);
    EXPECT_EQ(cone_coeff_sum(gens, zero_point(2)).value(), 0);
    EXPECT_FALSE(cone_coeff_sum(gens, make_point({1, 1})).has_value());
    // (-2,-2) itself is cheaper than (-1,0)+(0,-1) twice.
    EXPECT_EQ(cone_coeff_sum(gens, make_point({-2, -2})).value(), 1);
}

TEST(PositiveGeneration, Examples)
{
    EXPECT_TRUE(positive_generation_check(interval(-1, 1)).ok);
    GenerationCheck half = positive_generation_check(pts(1, {{0}, {1}}));
    EXPECT_FALSE(half.ok);
    EXPECT_EQ(half.reason, "cone is a proper half-space");
    GenerationCheck even = positive_generation_check(pts(1, {{0}, {2}, {-2}}));
    EXPECT_FALSE(even.ok);
    EXPECT_EQ(even.reason, "lattice index 2");
    EXPECT_TRUE(positive_generation_check(triangle()).ok);
    GenerationCheck no_identity = positive_generation_check(pts(1, {{1}, {-1}}));
    EXPECT_FALSE(no_identity.ok);
    EXPECT_EQ(no_identity.reason, "identity missing");
}

TEST(PositiveGeneration, AgreesWithSaturation)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coord(-2, 2);
    std::uniform_int_distribution<int> count(2, 5);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<Point> points = {zero_point(2)};
        const int n = count(rng);
        for (int i = 0; i < n; ++i)
            points.push_back(make_point({coord(rng), coord(rng)}));
        PointSet a(2, points);
        const bool ok = positive_generation_check(a).ok;
        EXPECT_EQ(ok, saturates_window(a)) << to_string(a[0]);
        (ok ? positives : negatives)++;
    }
    EXPECT_GT(positives, 0);
    EXPECT_GT(negatives, 0);
}

TEST(Volume, Examples)
{
    PointSet s = square();
    Polytope p = hull(s);
    EXPECT_EQ(volume(p, face_lattice(p, s)), 4);
    PointSet t = triangle();
    Polytope q = hull(t);
    EXPECT_EQ(volume(q, face_lattice(q, t)), Rational(3, 2));
    PointSet c = box(3, 0, 1);
    Polytope r = hull(c);
    EXPECT_EQ(volume(r, face_lattice(r, c)), 1);
}

TEST(ScaledLatticePoints, Triangle)
{
    Polytope p = hull(triangle());
    EXPECT_EQ(scaled_lattice_points(p, 1), triangle());
    // 2*conv is the 2-fold sum here.
    EXPECT_EQ(scaled_lattice_points(p, 2), minkowski_sum(triangle(), triangle()));
}
