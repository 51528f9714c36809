#include "horocalc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "horocalc/groups.hpp"
#include "horocalc/horoball.hpp"
#include "horocalc/json_io.hpp"
#include "horocalc/sheltered.hpp"
#include "horocalc/svg.hpp"

namespace horocalc {

namespace {

struct Options
{
    std::string genset;
    std::string set;
    std::string face;
    std::string shift;
    std::string window;
    std::string format = "json";
    std::string render_format = "svg";
    std::string c;
    std::string u;
    std::string sequence;
    std::vector<std::string> files;
    long k = 1;
    long n = 10;
    long horizon = 20;
    long r_max = 16;
    long search_radius = 0;
    std::uint64_t budget = 0;
    bool pretty = false;

    std::string group;
    std::string op;
    std::string element;
    std::string ray;
    std::string generators;
    int radius = 4;
    int r = 1;
    int rank = 2;
    int dim = 1;
    int m = 1;
};

GenSet load_genset(const Options& o)
{
    if (o.genset.empty())
        throw MalformedInput("--genset is required");
    return parse_genset(read_input(o.genset));
}

PointSet load_set(const Options& o, Eigen::Index dim)
{
    if (o.set.empty())
        throw MalformedInput("--set is required");
    PointSet s = point_set_from_json(parse_json(read_input(o.set)), dim);
    if (s.dim() != dim)
        throw DimensionMismatch("--set has dimension " + std::to_string(s.dim()) +
                                ", generating set has " + std::to_string(dim));
    return s;
}

Point load_point(const std::string& text, Eigen::Index dim, const std::string& what)
{
    Point p = point_from_json(parse_json(text));
    if (p.size() != dim)
        throw DimensionMismatch(what + " has dimension " + std::to_string(p.size()));
    return p;
}

/// "LO:HI" for a cube, or JSON [[lo...],[hi...]].
Window parse_window(const std::string& text, Eigen::Index dim)
{
    const auto colon = text.find(':');
    if (!text.empty() && text[0] != '[' && colon != std::string::npos)
    {
        try
        {
            std::size_t used_lo = 0, used_hi = 0;
            const long long lo = std::stoll(text.substr(0, colon), &used_lo);
            const long long hi = std::stoll(text.substr(colon + 1), &used_hi);
            if (used_lo != colon || used_hi != text.size() - colon - 1)
                throw MalformedInput("window bounds must be integers");
            if (lo > hi)
                throw MalformedInput("window has lo > hi");
            return Window::cube(dim, lo, hi);
        }
        catch (const std::logic_error&)
        {
            throw MalformedInput("malformed window \"" + text + "\"");
        }
    }
    const Json j = parse_json(text);
    if (!j.is_array() || j.size() != 2)
        throw MalformedInput("window must be LO:HI or [[lo...],[hi...]]");
    Point lo = load_point(j[0].dump(), dim, "window corner");
    Point hi = load_point(j[1].dump(), dim, "window corner");
    for (Eigen::Index i = 0; i < dim; ++i)
        if (lo[i] > hi[i])
            throw MalformedInput("window has lo > hi");
    return Window(lo, hi);
}

/// A face id, or a JSON list of its vertices.
std::size_t parse_face(const GenSet& g, const std::string& text)
{
    if (text.empty())
        throw MalformedInput("--face is required");
    if (text[0] == '[')
    {
        const PointSet verts = point_set_from_json(parse_json(text), g.dim());
        std::vector<std::size_t> ids;
        for (const Point& v : verts.points())
        {
            const auto idx = g.polytope.vertices.index_of(v);
            if (idx < 0)
                throw std::invalid_argument(to_string(v) + " is not a vertex of conv(A)");
            ids.push_back(static_cast<std::size_t>(idx));
        }
        std::sort(ids.begin(), ids.end());
        const auto face = find_face(g.faces, ids);
        if (!face)
            throw std::invalid_argument("the given vertices do not span a face");
        return *face;
    }
    std::size_t used = 0;
    long id = -1;
    try
    {
        id = std::stol(text, &used);
    }
    catch (const std::logic_error&)
    {
        throw MalformedInput("malformed face \"" + text + "\"");
    }
    if (used != text.size())
        throw MalformedInput("malformed face \"" + text + "\"");
    if (id < 0 || static_cast<std::size_t>(id) >= g.faces.size())
        throw std::invalid_argument("face id out of range");
    return static_cast<std::size_t>(id);
}

std::uint64_t budget_of(const Options& o)
{
    return o.budget > 0 ? o.budget : default_node_budget();
}

Json cmd_hull(const Options& o)
{
    const GenSet g = load_genset(o);
    Json out = to_json(g.polytope);
    out["volume"] = to_json(hull_volume(g));
    return out;
}

Json cmd_faces(const Options& o)
{
    const GenSet g = load_genset(o);
    Json faces = Json::array();
    for (const Face& f : g.faces)
        faces.push_back(to_json(g.polytope, f));
    return Json{{"dim", g.dim()}, {"faces", faces}};
}

Json cmd_envelope(const Options& o)
{
    const GenSet g = load_genset(o);
    std::vector<std::size_t> ids;
    if (o.face.empty())
        for (const Face& f : g.faces)
        {
            if (f.dim < g.dim())
                ids.push_back(f.id);
        }
    else
        ids.push_back(parse_face(g, o.face));
    Json out = Json::array();
    for (std::size_t id : ids)
    {
        const Face& f = g.faces[id];
        out.push_back(Json{{"face", f.vertex_ids},
                           {"face_id", f.id},
                           {"cone", to_json(envelope(g.polytope, f))}});
    }
    return Json{{"envelopes", out}};
}

Json cmd_growth(const Options& o)
{
    const GenSet g = load_genset(o);
    if (o.n < 0)
        throw std::invalid_argument("--n must be non-negative");
    Json sizes = Json::array();
    for (const PointSet& s : iterate_sums(g.a, o.n))
        sizes.push_back(s.size());
    Json out{{"n", o.n}, {"sizes", sizes}, {"hull_volume", to_json(hull_volume(g))}};
    if (o.n > 0)
        out["volume_estimate"] = to_json(volume_estimate(g, o.n));
    out["q"] = g.q;
    return out;
}

Json cmd_sf_threshold(const Options& o)
{
    const GenSet g = load_genset(o);
    if (o.horizon < 1)
        throw std::invalid_argument("--horizon must be positive");
    return to_json(sf_threshold(g, o.horizon));
}

int cmd_preimages(const Options& o, Json& result)
{
    const GenSet g = load_genset(o);
    const PointSet m = load_set(o, g.dim());
    if (o.k < 0)
        throw std::invalid_argument("--k must be non-negative");
    PointSet candidates;
    const CoverInstance inst = preimage_instance(g, m, o.k, &candidates);
    try
    {
        result = to_json(preimage_count(g, m, o.k, budget_of(o)));
        return exit_code::ok;
    }
    catch (const BudgetExceeded& e)
    {
        result = Json{{"status", "inconclusive"},
                      {"error", e.what()},
                      {"k", o.k},
                      {"candidates", candidates.size()},
                      {"upper_bound_log2", inst.num_vars()}};
        return exit_code::inconclusive;
    }
}

PointSet sequence_member(const GenSet& g, const std::string& kind, long n)
{
    if (kind == "box")
        return Window::cube(g.dim(), 0, n - 1).points();
    if (kind == "ball")
        return iterate_sum(g, n);
    throw MalformedInput("--sequence must be box or ball");
}

int cmd_amenability(const Options& o, Json& result)
{
    const GenSet g = load_genset(o);
    std::vector<std::pair<long, PointSet>> members;
    if (!o.set.empty())
        members.emplace_back(0, load_set(o, g.dim()));
    else if (!o.sequence.empty())
    {
        if (o.n < 1)
            throw std::invalid_argument("--n must be positive");
        for (long n = 1; n <= o.n; ++n)
            members.emplace_back(n, sequence_member(g, o.sequence, n));
    }
    else
        throw MalformedInput("amenability-ratio needs --set or --sequence");

    Json rows = Json::array();
    for (const auto& [n, m] : members)
    {
        try
        {
            Json row = to_json(amenability_ratio(g, m));
            if (n > 0)
                row["n"] = n;
            row["size"] = m.size();
            rows.push_back(row);
        }
        catch (const BudgetExceeded& e)
        {
            result = Json{{"status", "inconclusive"}, {"error", e.what()}, {"completed", rows}};
            return exit_code::inconclusive;
        }
    }
    result = Json{{"q", g.q}};
    if (!o.set.empty())
        result.update(rows[0]);
    else
    {
        result["sequence"] = o.sequence;
        result["rows"] = rows;
    }
    return exit_code::ok;
}

std::string shelter_svg(const GenSet& g, const PointSet& w, const ShelterResult& r,
                        const std::string& window_text)
{
    const PointSet& inner = r.exact ? *r.exact : r.lower;
    Window win = window_text.empty() ? bounding_box(inner).inflated(Integer(2))
                                     : parse_window(window_text, g.dim());
    std::vector<Point> cert_points, open_points;
    for (const Point& v : set_difference(win.points(), inner))
    {
        if (certify_outside(g, w, v))
            cert_points.push_back(v);
        else
            open_points.push_back(v);
    }
    const PointSet certified(g.dim(), cert_points);
    const PointSet uncertified(g.dim(), open_points);
    SvgScene scene{win, {}, "sheltered hull"};
    scene.layers.push_back({"W", "#d62728", restrict_to(w, win), true});
    scene.layers.push_back(
        {"sheltered", "#1f77b4", restrict_to(set_difference(inner, w), win), true});
    scene.layers.push_back({"certified", "#7f7f7f", restrict_to(certified, win), false});
    scene.layers.push_back({"uncertified", "#ff7f0e", restrict_to(uncertified, win), false});
    return render_svg(scene);
}

int cmd_sheltered(const Options& o, Json& result, std::string& text)
{
    const GenSet g = load_genset(o);
    const PointSet w = load_set(o, g.dim());
    if (o.r_max < 1)
        throw std::invalid_argument("--r-max must be positive");
    if (o.search_radius < 0)
        throw std::invalid_argument("--search-radius must be non-negative");
    const ShelterResult r = shel(g, w, o.r_max, o.search_radius);
    if (o.format == "svg")
    {
        if (g.dim() != 2)
            throw SvgDimensionError(g.dim());
        text = shelter_svg(g, w, r, o.window);
    }
    else
        result = to_json(r);
    return exit_code::ok;
}

Json cmd_horoballs(const Options& o)
{
    const GenSet g = load_genset(o);
    std::optional<Window> win;
    if (!o.window.empty())
        win = parse_window(o.window, g.dim());
    Json list = Json::array();
    for (const Horoball& h : horoballs(g))
    {
        Json j = to_json(g, h);
        if (win)
            j["window_points"] = to_json(horoball_window(h, *win))["points"];
        list.push_back(j);
    }
    return Json{{"dim", g.dim()}, {"count", list.size()}, {"horoballs", list}};
}

int cmd_render(const Options& o, Json& result, std::string& text)
{
    const GenSet g = load_genset(o);
    const std::size_t face = parse_face(g, o.face);
    if (g.faces[face].dim == g.dim())
        throw std::invalid_argument("the full polytope has no proper horoball");
    const Point shift =
        o.shift.empty() ? zero_point(g.dim()) : load_point(o.shift, g.dim(), "--shift");
    const Horoball h = make_horoball(g, face, shift);
    const Window win =
        o.window.empty() ? Window::cube(g.dim(), -5, 5) : parse_window(o.window, g.dim());
    const PointSet pts = horoball_window(h, win);
    if (o.render_format == "json")
    {
        result = to_json(g, h);
        result["window_points"] = to_json(pts)["points"];
        return exit_code::ok;
    }
    if (g.dim() != 2)
        throw SvgDimensionError(g.dim());
    SvgScene scene{win, {}, "horoball"};
    scene.layers.push_back({"horoball", "#1f77b4", pts, true});
    scene.layers.push_back({"A", "#d62728", restrict_to(g.a, win), false});
    text = render_svg(scene);
    return exit_code::ok;
}

Json cmd_classify_limit(const Options& o)
{
    const GenSet g = load_genset(o);
    const std::size_t face = parse_face(g, o.face);
    if (o.c.empty() || o.u.empty())
        throw MalformedInput("classify-limit needs --c and --u");
    const Point c = load_point(o.c, g.dim(), "--c");
    const Point u = load_point(o.u, g.dim(), "--u");
    return to_json(g, classify_limit(g, face, c, u));
}

Json cmd_conjugate(const Options& o)
{
    if (o.files.size() != 2)
        throw MalformedInput("conjugate needs two generating sets");
    const GenSet a = parse_genset(read_input(o.files[0]));
    const GenSet b = parse_genset(read_input(o.files[1]));
    return to_json(conjugacy_decide(a, b));
}

Json cmd_cb_report(const Options& o)
{
    return to_json(cb_report(load_genset(o)));
}

template <typename G>
typename G::Element decode_element(const G& group, const Json& j)
{
    if (!j.is_string())
        throw MalformedInput("group elements are encoded as strings, got " + j.dump());
    try
    {
        return group.decode(j.get<std::string>());
    }
    catch (const MalformedInput&)
    {
        throw;
    }
    catch (const std::exception& e)
    {
        throw MalformedInput(e.what());
    }
}

template <typename G>
std::vector<typename G::Element> decode_list(const G& group, const std::string& text)
{
    const Json j = parse_json(text);
    if (!j.is_array())
        throw MalformedInput("expected a JSON list of group elements");
    std::vector<typename G::Element> out;
    for (const Json& e : j)
        out.push_back(decode_element(group, e));
    return out;
}

template <typename G, typename Container>
Json encode_all(const G& group, const Container& elements)
{
    Json out = Json::array();
    for (const auto& e : elements)
        out.push_back(group.encode(e));
    return out;
}

template <typename G>
Json group_op(const G& group, const Options& o)
{
    Json out{{"group", o.group}, {"op", o.op}};
    if (o.op == "ball")
    {
        if (o.radius < 0)
            throw std::invalid_argument("--radius must be non-negative");
        const BallTable<G> table = ball(group, o.radius);
        out["radius"] = o.radius;
        out["size"] = table.size();
        out["spheres"] = table.sphere;
        if (o.format == "table")
        {
            Json lengths = Json::array();
            for (const auto& [g, len] : table.length)
                lengths.push_back(Json::array({group.encode(g), len}));
            out["elements"] = lengths;
        }
        return out;
    }
    if (o.op == "deadends")
    {
        if (!o.element.empty())
        {
            const auto g = decode_element(group, parse_json(o.element));
            const BallTable<G> table = ball(group, o.radius);
            const auto len = table.length_of(g);
            if (!len)
                throw std::invalid_argument("element lies outside the ball of radius " +
                                            std::to_string(o.radius));
            const DeadEndDepth d = dead_end_depth(group, table, g, o.radius - *len);
            out["element"] = group.encode(g);
            out["length"] = *len;
            out["depth"] = d.depth;
            out["horizon"] = d.horizon;
            out["horizon_limited"] = d.horizon_limited;
            return out;
        }
        Json records = Json::array();
        for (const auto& rec : dead_ends(group, o.radius))
            records.push_back(Json{{"element", group.encode(rec.element)},
                                   {"length", rec.length},
                                   {"depth", rec.depth.depth},
                                   {"horizon", rec.depth.horizon},
                                   {"horizon_limited", rec.depth.horizon_limited}});
        out["radius"] = o.radius;
        out["dead_ends"] = records;
        return out;
    }
    if (o.op == "sheltered")
    {
        std::set<typename G::Element> w;
        if (!o.set.empty())
        {
            const auto list = decode_list(group, read_input(o.set));
            w.insert(list.begin(), list.end());
        }
        else
        {
            if (o.n < 0)
                throw std::invalid_argument("--n must be non-negative");
            w = ball_set(group, static_cast<int>(o.n));
        }
        const auto s = shel_r_general(group, w, o.r);
        std::vector<typename G::Element> added;
        std::set_difference(s.begin(), s.end(), w.begin(), w.end(), std::back_inserter(added));
        out["r"] = o.r;
        out["size"] = s.size();
        out["sheltered"] = encode_all(group, s);
        out["added"] = encode_all(group, added);
        return out;
    }
    if (o.op == "busemann")
    {
        if (o.ray.empty())
            throw MalformedInput("busemann needs --ray");
        const auto step = decode_list(group, read_input(o.ray));
        Json elements = Json::array();
        for (const auto& [g, len] : busemann_window(group, step, o.radius))
            elements.push_back(Json::array({group.encode(g), len}));
        out["radius"] = o.radius;
        out["size"] = elements.size();
        out["elements"] = elements;
        return out;
    }
    if (o.op == "growth")
    {
        const GrowthEstimate e = exp_growth_estimate(group, o.radius);
        out["radius"] = e.radius;
        out["ball_size"] = e.ball_size;
        out["sphere_ratio"] = to_json(e.sphere_ratio);
        out["root_bounds"] = Json::array({to_json(e.root_lo), to_json(e.root_hi)});
        return out;
    }
    if (o.op == "commutator")
    {
        if constexpr (std::is_same_v<G, HeisenbergGroup>)
        {
            const auto n = heisenberg_commutator_check(o.m, o.radius);
            out["m"] = o.m;
            out["n_max"] = o.radius;
            out["n"] = n ? Json(*n) : Json(nullptr);
            return out;
        }
        throw std::invalid_argument("--op commutator needs --group heisenberg");
    }
    throw MalformedInput("unknown --op " + o.op);
}

ZdGroup zd_group(const Options& o)
{
    if (o.generators.empty())
    {
        if (o.dim < 1)
            throw std::invalid_argument("--dim must be positive");
        return ZdGroup::cube(static_cast<std::size_t>(o.dim));
    }
    const PointSet gens = point_set_from_json(parse_json(read_input(o.generators)));
    std::vector<ZdGroup::Element> elements;
    for (const Point& p : gens.points())
    {
        ZdGroup::Element e;
        for (const Integer& x : p)
            e.push_back(to_int64(x));
        elements.push_back(e);
    }
    return ZdGroup(static_cast<std::size_t>(gens.dim()), elements);
}

Json cmd_group(const Options& o)
{
    if (o.group == "zd")
        return group_op(zd_group(o), o);
    if (o.group == "heisenberg")
        return group_op(HeisenbergGroup(), o);
    if (o.group == "lamplighter")
        return group_op(LamplighterGroup(), o);
    if (o.group == "free")
    {
        if (o.rank < 1 || o.rank > 13)
            throw std::invalid_argument("--rank must lie in 1..13");
        return group_op(FreeGroup(o.rank), o);
    }
    throw MalformedInput("unknown --group " + o.group);
}

void add_genset(CLI::App* sub, Options& o)
{
    sub->add_option("--genset", o.genset, "generating set: JSON file or inline JSON")
        ->required();
}

void add_budget(CLI::App* sub, Options& o)
{
    sub->add_option("--budget", o.budget, "node budget of the cover counter (HOROCALC_BUDGET)");
}

} // namespace

std::string read_input(const std::string& arg)
{
    std::error_code ec;
    const std::string trimmed = arg.substr(std::min(arg.find_first_not_of(" \t\n"), arg.size()));
    if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '['))
        return arg;
    if (!std::filesystem::is_regular_file(arg, ec))
        throw MalformedInput("no such input file: " + arg);
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in && !in.eof())
        throw MalformedInput("cannot read " + arg);
    return buf.str();
}

GenSet parse_genset(const std::string& json_text)
{
    return GenSet::from(point_set_from_json(parse_json(json_text)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Minkowski dynamics, horoballs and sheltered hulls on lattices", "horocalc"};
    app.require_subcommand(1);
    app.add_flag("--pretty", o.pretty, "indent JSON output");

    auto* hull_cmd = app.add_subcommand("hull", "vertices and facets of conv(A)");
    add_genset(hull_cmd, o);

    auto* faces_cmd = app.add_subcommand("faces", "face lattice of conv(A)");
    add_genset(faces_cmd, o);

    auto* env_cmd = app.add_subcommand("envelope", "envelope cones of proper faces");
    add_genset(env_cmd, o);
    env_cmd->add_option("--face", o.face, "face id or JSON list of vertices");

    auto* growth_cmd = app.add_subcommand("growth", "sizes of nA and the volume estimate");
    add_genset(growth_cmd, o);
    growth_cmd->add_option("--n", o.n, "largest n");

    auto* sf_cmd = app.add_subcommand("sf-threshold", "Shapley-Folkman threshold");
    add_genset(sf_cmd, o);
    sf_cmd->add_option("--horizon", o.horizon, "verify up to this n");

    auto* pre_cmd = app.add_subcommand("preimages", "number of W with W + kA = M + kA");
    add_genset(pre_cmd, o);
    pre_cmd->add_option("--set", o.set, "the set M")->required();
    pre_cmd->add_option("--k", o.k, "number of steps");
    add_budget(pre_cmd, o);

    auto* amen_cmd = app.add_subcommand("amenability-ratio", "ratio of preimage-count logs");
    add_genset(amen_cmd, o);
    amen_cmd->add_option("--set", o.set, "a single set M");
    amen_cmd->add_option("--sequence", o.sequence, "box or ball")
        ->check(CLI::IsMember({"box", "ball"}));
    amen_cmd->add_option("--n", o.n, "sequence length");
    add_budget(amen_cmd, o);

    auto* shel_cmd = app.add_subcommand("sheltered", "sheltered hull of a finite set");
    add_genset(shel_cmd, o);
    shel_cmd->add_option("--set", o.set, "the set W")->required();
    shel_cmd->add_option("--r-max", o.r_max, "largest radius for S^r");
    shel_cmd->add_option("--search-radius", o.search_radius, "certificate search radius");
    shel_cmd->add_option("--format", o.format, "json or svg")
        ->check(CLI::IsMember({"json", "svg"}));
    shel_cmd->add_option("--window", o.window, "SVG window, LO:HI or [[lo],[hi]]");

    auto* horo_cmd = app.add_subcommand("horoballs", "horoball census");
    add_genset(horo_cmd, o);
    horo_cmd->add_option("--window", o.window, "also list points in this window");

    auto* render_cmd = app.add_subcommand("render", "draw a horoball");
    add_genset(render_cmd, o);
    render_cmd->add_option("--face", o.face, "face id or JSON list of vertices")->required();
    render_cmd->add_option("--shift", o.shift, "translation as a JSON point");
    render_cmd->add_option("--window", o.window, "LO:HI or [[lo],[hi]]");
    render_cmd->add_option("--format", o.render_format, "svg or json")
        ->check(CLI::IsMember({"json", "svg"}));

    auto* cl_cmd = app.add_subcommand("classify-limit", "limit of c + n u + H_F");
    add_genset(cl_cmd, o);
    cl_cmd->add_option("--face", o.face, "face id or JSON list of vertices")->required();
    cl_cmd->add_option("--c", o.c, "base point")->required();
    cl_cmd->add_option("--u", o.u, "direction")->required();

    auto* conj_cmd = app.add_subcommand("conjugate", "topological conjugacy of horoball spaces");
    conj_cmd->add_option("gensets", o.files, "two generating sets")->expected(2)->required();

    auto* cb_cmd = app.add_subcommand("cb-report", "Cantor-Bendixson layers");
    add_genset(cb_cmd, o);

    auto* group_cmd = app.add_subcommand("group", "computations in other groups");
    group_cmd->add_option("--group", o.group, "zd, heisenberg, lamplighter or free")
        ->required()
        ->check(CLI::IsMember({"zd", "heisenberg", "lamplighter", "free"}));
    group_cmd->add_option("--op", o.op, "ball, deadends, sheltered, busemann, growth or commutator")
        ->required()
        ->check(CLI::IsMember({"ball", "deadends", "sheltered", "busemann", "growth", "commutator"}));
    group_cmd->add_option("--radius", o.radius, "ball radius (n_max for commutator)");
    group_cmd->add_option("--element", o.element, "JSON string of one element");
    group_cmd->add_option("--set", o.set, "JSON list of elements");
    group_cmd->add_option("--n", o.n, "use the ball A^n as the set");
    group_cmd->add_option("--r", o.r, "sheltered radius");
    group_cmd->add_option("--ray", o.ray, "JSON list of generators repeated along the ray");
    group_cmd->add_option("--dim", o.dim, "dimension for zd");
    group_cmd->add_option("--generators", o.generators, "generating set for zd");
    group_cmd->add_option("--rank", o.rank, "rank of the free group");
    group_cmd->add_option("--m", o.m, "commutator exponent");
    group_cmd->add_option("--format", o.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return exit_code::ok;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::malformed;
    }

    const int indent = o.pretty ? 2 : -1;
    Json result;
    std::string text;
    int code = exit_code::ok;
    try
    {
        if (hull_cmd->parsed())
            result = cmd_hull(o);
        else if (faces_cmd->parsed())
            result = cmd_faces(o);
        else if (env_cmd->parsed())
            result = cmd_envelope(o);
        else if (growth_cmd->parsed())
            result = cmd_growth(o);
        else if (sf_cmd->parsed())
            result = cmd_sf_threshold(o);
        else if (pre_cmd->parsed())
            code = cmd_preimages(o, result);
        else if (amen_cmd->parsed())
            code = cmd_amenability(o, result);
        else if (shel_cmd->parsed())
            code = cmd_sheltered(o, result, text);
        else if (horo_cmd->parsed())
            result = cmd_horoballs(o);
        else if (render_cmd->parsed())
            code = cmd_render(o, result, text);
        else if (cl_cmd->parsed())
            result = cmd_classify_limit(o);
        else if (conj_cmd->parsed())
            result = cmd_conjugate(o);
        else if (cb_cmd->parsed())
            result = cmd_cb_report(o);
        else if (group_cmd->parsed())
            result = cmd_group(o);
    }
    catch (const InvalidGenSet& e)
    {
        out << Json{{"status", "invalid"}, {"reason", e.reason()}}.dump(indent) << "\n";
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_genset;
    }
    catch (const SvgDimensionError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::svg_dimension;
    }
    catch (const BudgetExceeded& e)
    {
        out << Json{{"status", "inconclusive"}, {"error", e.what()}}.dump(indent) << "\n";
        err << "error: " << e.what() << "\n";
        return exit_code::inconclusive;
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::malformed;
    }
    catch (const std::out_of_range& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::malformed;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }

    if (!text.empty())
        out << text;
    else
        out << result.dump(indent) << "\n";
    return code;
}

} // namespace horocalc
