#include <gtest/gtest.h>

#include "horocalc/horoball.hpp"
#include "test_support.hpp"

using namespace horocalc;
using namespace horocalc::testing;

namespace {

std::size_t face_of(const GenSet& g, std::initializer_list<std::initializer_list<long long>> vertices)
{
    std::vector<std::size_t> ids;
    for (auto v : vertices)
    {
        std::ptrdiff_t i = g.polytope.vertices.index_of(make_point(v));
        EXPECT_GE(i, 0);
        ids.push_back(static_cast<std::size_t>(i));
    }
    std::sort(ids.begin(), ids.end());
    auto f = find_face(g.faces, ids);
    EXPECT_TRUE(f.has_value());
    return f.value_or(0);
}

PointSet filter(const Window& w, const std::function<bool(long, long)>& keep)
{
    std::vector<Point> out;
    for (const Point& p : w.points())
        if (keep(long(to_int64(p[0])), long(to_int64(p[1]))))
            out.push_back(p);
    return PointSet(2, out);
}

} // namespace

TEST(Horoballs, Census)
{
    EXPECT_EQ(horoballs(GenSet::from(square())).size(), 8u);
    EXPECT_EQ(horoballs(GenSet::from(triangle())).size(), 6u);
    EXPECT_EQ(horoballs(GenSet::from(interval(-1, 1))).size(), 2u);
}

TEST(HoroballWindow, SquareExamples)
{
    GenSet g = GenSet::from(square());
    const Window win = Window::cube(2, -3, 3);
    Horoball corner = make_horoball(g, face_of(g, {{1, 1}}));
    EXPECT_EQ(horoball_window(corner, win), filter(win, [](long x, long y) { return x <= 0 && y <= 0; }));
    Horoball edge = make_horoball(g, face_of(g, {{1, -1}, {1, 1}}));
    EXPECT_EQ(horoball_window(edge, win), filter(win, [](long x, long) { return x <= 0; }));
}

TEST(HoroballWindow, Line)
{
    GenSet g = GenSet::from(interval(-1, 1));
    Horoball h = make_horoball(g, face_of(g, {{1}}));
    EXPECT_EQ(horoball_window(h, Window::cube(1, -5, 5)), interval(-5, 0));
    Horoball shifted = make_horoball(g, face_of(g, {{-1}}), make_point({2}));
    EXPECT_EQ(horoball_window(shifted, Window::cube(1, -5, 5)), interval(2, 5));
}

TEST(HoroballContains, Examples)
{
    GenSet g = GenSet::from(square());
    for (const Horoball& h : horoballs(g))
        EXPECT_TRUE(horoball_contains(h, zero_point(2)));
    Horoball corner = make_horoball(g, face_of(g, {{1, 1}}));
    EXPECT_TRUE(horoball_contains(corner, make_point({-5, -3})));
    EXPECT_FALSE(horoball_contains(corner, make_point({1, 0})));
}

TEST(HoroballContains, AgreesWithWindow)
{
    for (const PointSet& a : {triangle(), four_point()})
    {
        GenSet g = GenSet::from(a);
        const Window win = Window::cube(2, -5, 5);
        for (const Horoball& h0 : horoballs(g))
        {
            Horoball h = h0.translated(make_point({1, -1}));
            PointSet inside = horoball_window(h, win);
            for (const Point& x : win.points())
                EXPECT_EQ(horoball_contains(h, x), inside.contains(x)) << to_string(x);
        }
    }
}

TEST(Stabilizer, Examples)
{
    GenSet g = GenSet::from(square());
    Lattice edge = stabilizer(g, g.faces[face_of(g, {{1, -1}, {1, 1}})]);
    EXPECT_EQ(edge, lattice_from({make_point({0, 1})}, 2));
    EXPECT_EQ(stabilizer(g, g.faces[face_of(g, {{1, 1}})]).rank(), 0);
    GenSet h = GenSet::from(four_point());
    EXPECT_EQ(stabilizer(h, h.faces[face_of(h, {{1, -1}, {1, 1}})]),
              lattice_from({make_point({0, 2})}, 2));
}

TEST(Stabilizer, ActsTriviallyOnWindows)
{
    for (const PointSet& a : {square(), four_point(), triangle()})
    {
        GenSet g = GenSet::from(a);
        const Window win = Window::cube(2, -6, 6);
        for (const Horoball& h : horoballs(g))
            for (Eigen::Index j = 0; j < h.stabilizer.rank(); ++j)
            {
                Point s = h.stabilizer.basis_vector(j);
                Horoball moved = h;
                moved.shift = s;
                const Window inner = win.deflated(max_abs(s));
                EXPECT_EQ(restrict_to(horoball_window(moved, win), inner),
                          restrict_to(horoball_window(h, win), inner));
            }
    }
}

TEST(Horoballs, DynamicsIdentity)
{
    for (const PointSet& a : {square(), triangle(), four_point()})
    {
        GenSet g = GenSet::from(a);
        const Window win = Window::cube(2, -8, 8);
        for (const Horoball& h : horoballs(g))
        {
            PointSet image = restrict_to(minkowski_sum(horoball_window(h, win.inflated(2)), a),
                                         win);
            for (const Point& v : g.faces[h.face].vertex_points(g.polytope))
            {
                Horoball moved = h;
                moved.shift = v;
                EXPECT_EQ(image, horoball_window(moved, win));
            }
        }
    }
}

TEST(Horoballs, EnvelopeCoherence)
{
    for (const PointSet& a : {square(), triangle(), four_point()})
    {
        GenSet g = GenSet::from(a);
        const Window win = Window::cube(2, -6, 6);
        for (const Horoball& h : horoballs(g))
        {
            PointSet inside = horoball_window(h, win);
            for (const Point& x : inside)
                EXPECT_TRUE(cone_contains(h.envelope, x));
            std::vector<Point> env;
            for (const Point& x : win.points())
                if (cone_contains(h.envelope, x))
                    env.push_back(x);
            bool found = false;
            for (const Point& s : Window::cube(2, -3, 3).points())
            {
                Horoball moved = h;
                moved.shift = s;
                if (is_subset(PointSet(2, env), horoball_window(moved, win)))
                {
                    found = true;
                    break;
                }
            }
            EXPECT_TRUE(found);
        }
    }
}

TEST(Horoballs, BallLimitsAtVertices)
{
    for (const PointSet& a : {square(), triangle()})
    {
        GenSet g = GenSet::from(a);
        const Window win = Window::cube(2, -8, 8);
        std::vector<PointSet> balls = iterate_sums(a, 40);
        for (std::size_t i = 0; i < g.polytope.vertices.size(); ++i)
        {
            const Point& v = g.polytope.vertices[i];
            Horoball h = make_horoball(g, *find_face(g.faces, {i}));
            PointSet expected = horoball_window(h, win);
            PointSet last = restrict_to(translate(balls[40], Point(v * Integer(-40))), win);
            EXPECT_EQ(last, expected);
        }
    }
}

TEST(ClassifyLimit, Examples)
{
    GenSet g = GenSet::from(square());
    const std::size_t corner = face_of(g, {{1, 1}});
    EXPECT_EQ(classify_limit(g, corner, zero_point(2), make_point({1, 1})).tag,
              LimitClass::Tag::Full);
    EXPECT_EQ(classify_limit(g, corner, zero_point(2), make_point({-1, 0})).tag,
              LimitClass::Tag::Empty);
    LimitClass up = classify_limit(g, corner, zero_point(2), make_point({0, 1}));
    ASSERT_EQ(up.tag, LimitClass::Tag::Horoball);
    EXPECT_EQ(up.limit->face, face_of(g, {{1, -1}, {1, 1}}));
    EXPECT_TRUE(is_zero(up.limit->shift));

    GenSet h = GenSet::from(four_point());
    const std::size_t tip = face_of(h, {{1, 1}});
    EXPECT_EQ(classify_limit(h, tip, zero_point(2), make_point({0, 1})).tag,
              LimitClass::Tag::Diverges);
    LimitClass even = classify_limit(h, tip, zero_point(2), make_point({0, 2}));
    ASSERT_EQ(even.tag, LimitClass::Tag::Horoball);
    EXPECT_EQ(even.limit->face, face_of(h, {{1, -1}, {1, 1}}));
}

TEST(ClassifyLimit, AgreesWithTranslates)
{
    const Window win = Window::cube(2, -4, 4);
    const std::vector<Point> directions = {make_point({1, 1}), make_point({0, 1}),
                                           make_point({0, 2}), make_point({-1, 0}),
                                           make_point({1, -2}), make_point({0, -1})};
    for (const PointSet& a : {square(), four_point()})
    {
        GenSet g = GenSet::from(a);
        for (std::size_t f = 0; f < g.faces.size(); ++f)
            for (const Point& u : directions)
            {
                const Point c = make_point({1, -1});
                LimitClass lc = classify_limit(g, f, c, u);
                auto at = [&](long n) {
                    return horoball_window(make_horoball(g, f, Point(c + u * Integer(n))), win);
                };
                switch (lc.tag)
                {
                case LimitClass::Tag::Empty:
                    EXPECT_TRUE(at(20).empty() && at(40).empty());
                    break;
                case LimitClass::Tag::Full:
                    EXPECT_EQ(at(20), win.points());
                    EXPECT_EQ(at(40), win.points());
                    break;
                case LimitClass::Tag::Horoball:
                    EXPECT_EQ(at(20), horoball_window(*lc.limit, win));
                    EXPECT_EQ(at(40), horoball_window(*lc.limit, win));
                    break;
                case LimitClass::Tag::Diverges:
                    EXPECT_NE(at(20), at(21));
                    EXPECT_NE(at(40), at(41));
                    break;
                }
            }
    }
}

TEST(Conjugacy, Examples)
{
    GenSet sq = GenSet::from(square());
    EXPECT_TRUE(conjugacy_decide(sq, sq).conjugate);
    PointSet big = box(2, -2, 2);
    EXPECT_TRUE(conjugacy_decide(GenSet::from(big),
                                 GenSet::from(set_difference(big, pts(2, {{2, 0}}))))
                    .conjugate);
    ConjugacyVerdict diamond_verdict = conjugacy_decide(sq, GenSet::from(diamond()));
    EXPECT_FALSE(diamond_verdict.conjugate);
    EXPECT_TRUE(diamond_verdict.witness.empty());
    EXPECT_FALSE(diamond_verdict.reason.empty());
    EXPECT_FALSE(conjugacy_decide(sq, GenSet::from(set_difference(square(), pts(2, {{1, 0}}))))
                     .conjugate);
    EXPECT_THROW(conjugacy_decide(sq, GenSet::from(interval(-1, 1))), DimensionMismatch);
}

TEST(Conjugacy, ReflexiveSymmetricAndInteriorInvariant)
{
    std::vector<GenSet> sets;
    for (const PointSet& a : {square(), diamond(), triangle(), four_point(), box(2, -2, 2)})
        sets.push_back(GenSet::from(a));
    for (const GenSet& x : sets)
    {
        EXPECT_TRUE(conjugacy_decide(x, x).conjugate);
        for (const GenSet& y : sets)
            EXPECT_EQ(conjugacy_decide(x, y).conjugate, conjugacy_decide(y, x).conjugate);
    }
    // Interior points leave every face untouched.
    GenSet wide = GenSet::from(pts(2, {{0, 0}, {3, 0}, {0, 3}, {-3, -3}, {1, 0}, {0, 1}}));
    GenSet wider = GenSet::from(set_union(wide.a, pts(2, {{1, 1}, {-1, -1}})));
    EXPECT_TRUE(conjugacy_decide(wide, wider).conjugate);
}

TEST(CbReport, Examples)
{
    CbReport sq = cb_report(GenSet::from(square()));
    EXPECT_EQ(sq.rank, 3);
    EXPECT_EQ(sq.layers, (std::vector<std::size_t>{4, 4}));
    CbReport line = cb_report(GenSet::from(interval(-1, 1)));
    EXPECT_EQ(line.rank, 2);
    EXPECT_EQ(line.layers, (std::vector<std::size_t>{2}));
    EXPECT_EQ(cb_report(GenSet::from(triangle())).layers, (std::vector<std::size_t>{3, 3}));
}
