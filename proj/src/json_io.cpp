#include "horocalc/json_io.hpp"

namespace horocalc {

namespace {

Json point_list(const std::vector<Point>& points)
{
    Json out = Json::array();
    for (const Point& p : points)
        out.push_back(to_json(p));
    return out;
}

} // namespace

Json to_json(const Integer& x)
{
    return x.str();
}

Json to_json(const Rational& x)
{
    return x.str();
}

Json to_json(const Point& p)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i)
    {
        if (p[i] >= std::numeric_limits<std::int64_t>::min() &&
            p[i] <= std::numeric_limits<std::int64_t>::max())
            out.push_back(static_cast<std::int64_t>(p[i]));
        else
            out.push_back(p[i].str());
    }
    return out;
}

Json to_json(const PointSet& s)
{
    return Json{{"dim", s.dim()}, {"points", point_list(s.points())}};
}

Json to_json(const Polytope& p)
{
    Json facets = Json::array();
    for (std::size_t k = 0; k < p.facets.size(); ++k)
        facets.push_back(Json{{"normal", to_json(p.facets[k].normal)},
                              {"offset", to_json(p.facets[k].offset)},
                              {"vertex_ids", p.facet_vertices[k]}});
    return Json{{"dim", p.dim}, {"vertices", point_list(p.vertices.points())}, {"facets", facets}};
}

Json to_json(const Polytope& p, const Face& f)
{
    return Json{{"id", f.id},
                {"dim", f.dim},
                {"vertex_ids", f.vertex_ids},
                {"vertices", point_list(f.vertex_points(p))},
                {"facets", f.containing_facets},
                {"points", point_list(f.points_in_face.points())}};
}

Json to_json(const Cone& c)
{
    return Json{{"dim", c.dim()}, {"normals", point_list(c.normals())}};
}

Json to_json(const Lattice& l)
{
    std::vector<Point> basis;
    for (Eigen::Index j = 0; j < l.rank(); ++j)
        basis.push_back(l.basis_vector(j));
    return Json{{"dim", l.dim()}, {"rank", l.rank()}, {"basis", point_list(basis)}};
}

Json to_json(const GenSet& g, const Horoball& h)
{
    return Json{{"face", h.face_vertices},
                {"face_id", h.face},
                {"face_vertices", point_list(g.faces[h.face].vertex_points(g.polytope))},
                {"shift", to_json(h.shift)},
                {"generators", point_list(h.generators.points())},
                {"envelope", point_list(h.envelope.normals())},
                {"stabilizer", to_json(h.stabilizer)["basis"]}};
}

Json to_json(const GenSet& g, const LimitClass& c)
{
    Json out{{"class", to_string(c.tag)}};
    if (c.limit)
    {
        out["face"] = c.limit->face_vertices;
        out["face_id"] = c.limit->face;
        out["shift"] = to_json(c.limit->shift);
        out["face_vertices"] = point_list(g.faces[c.limit->face].vertex_points(g.polytope));
    }
    return out;
}

Json to_json(const ConjugacyVerdict& v)
{
    Json out{{"conjugate", v.conjugate}};
    if (v.conjugate)
    {
        Json pairs = Json::array();
        for (auto [a, b] : v.witness)
            pairs.push_back(Json::array({a, b}));
        out["witness"] = pairs;
    }
    else
        out["reason"] = v.reason;
    return out;
}

Json to_json(const CbReport& r)
{
    return Json{{"rank", r.rank}, {"layers", r.layers}};
}

Json to_json(const PreimageCount& c)
{
    const Interval l = c.log2();
    return Json{{"count", to_json(c.count)},
                {"log2", l.midpoint()},
                {"log2_bits", static_cast<std::size_t>(boost::multiprecision::msb(c.count)) + 1},
                {"k", c.k},
                {"target_size", c.target.size()},
                {"candidates", c.candidates}};
}

Json to_json(const AmenabilityRatio& r)
{
    const LogRatio ratio = r.ratio();
    Json out{{"numerator", to_json(r.numerator)}, {"denominator", to_json(r.denominator)}};
    if (r.denominator.count >= 2)
    {
        const Interval b = ratio.bounds();
        out["ratio"] = ratio.approx();
        out["ratio_bounds"] = Json::array({to_json(b.lo), to_json(b.hi)});
    }
    else
        out["ratio"] = nullptr;
    return out;
}

Json to_json(const ShelterResult& r)
{
    Json out{{"status", r.status == ShelterResult::Status::Exact ? "exact" : "bounds"},
             {"stable_radius", r.stable_radius}};
    if (r.exact)
        out["exact"] = to_json(*r.exact);
    out["lower"] = to_json(r.lower);
    if (r.upper)
        out["upper"] = to_json(*r.upper);
    Json certs = Json::array();
    for (const HoroballCertificate& c : r.certificates)
        certs.push_back(Json{{"point", to_json(c.point)},
                             {"vertex", to_json(c.vertex)},
                             {"shift", to_json(c.shift)}});
    out["certificates"] = certs;
    out["uncertified"] = point_list(r.uncertified);
    return out;
}

Json to_json(const SfThreshold& t)
{
    return Json{{"threshold", t.n}, {"k", t.k}, {"verified_to", t.verified_to}};
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
    {
        const std::string s = j.get<std::string>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size() ||
            s.find_first_not_of("0123456789", start) != std::string::npos)
            throw MalformedInput("not an integer: \"" + s + "\"");
        return Integer(s);
    }
    throw MalformedInput("expected an integer, got " + j.dump());
}

Point point_from_json(const Json& j)
{
    if (!j.is_array() || j.empty())
        throw MalformedInput("a point must be a non-empty array, got " + j.dump());
    Point p(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        p[static_cast<Eigen::Index>(i)] = integer_from_json(j[i]);
    return p;
}

PointSet point_set_from_json(const Json& j, Eigen::Index dim_hint)
{
    Json list;
    Eigen::Index dim = dim_hint;
    if (j.is_object())
    {
        if (!j.contains("points"))
            throw MalformedInput("point set object needs a \"points\" field");
        list = j.at("points");
        if (j.contains("dim"))
        {
            if (!j.at("dim").is_number_integer() || j.at("dim").get<long>() < 1)
                throw MalformedInput("\"dim\" must be a positive integer");
            dim = j.at("dim").get<long>();
        }
    }
    else
        list = j;
    if (!list.is_array())
        throw MalformedInput("points must be an array");
    std::vector<Point> points;
    for (const Json& p : list)
        points.push_back(point_from_json(p));
    if (dim == 0)
    {
        if (points.empty())
            throw MalformedInput("cannot infer the dimension of an empty point list");
        dim = points.front().size();
    }
    for (const Point& p : points)
        if (p.size() != dim)
            throw MalformedInput("point " + to_string(p) + " does not have dimension " +
                                 std::to_string(dim));
    return PointSet(dim, std::move(points));
}

Json parse_json(const std::string& text)
{
    try
    {
        return Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw MalformedInput(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace horocalc
