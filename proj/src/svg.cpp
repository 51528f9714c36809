#include "horocalc/svg.hpp"

#include <regex>
#include <sstream>

namespace horocalc {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 32;
constexpr int kLegendRow = 18;

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const SvgScene& scene)
{
    if (scene.window.dim() != 2)
        throw SvgDimensionError(scene.window.dim());
    for (const SvgLayer& layer : scene.layers)
        if (layer.points.dim() != 2)
            throw SvgDimensionError(layer.points.dim());
    const long long x0 = to_int64(scene.window.lo[0]), x1 = to_int64(scene.window.hi[0]);
    const long long y0 = to_int64(scene.window.lo[1]), y1 = to_int64(scene.window.hi[1]);
    if (x1 - x0 > 400 || y1 - y0 > 400)
        throw BudgetExceeded("SVG window wider than 401 cells");
    const long long cols = x1 - x0 + 1, rows = y1 - y0 + 1;
    const long long width = 2 * kMargin + (cols - 1) * kCell;
    const long long plot_height = 2 * kMargin + (rows - 1) * kCell;
    const long long height =
        plot_height + kLegendRow * static_cast<long long>(scene.layers.size()) + 8;
    auto px = [&](long long x) { return kMargin + (x - x0) * kCell; };
    auto py = [&](long long y) { return kMargin + (y1 - y) * kCell; };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    if (!scene.title.empty())
        s << "  <title>" << escape(scene.title) << "</title>\n";
    s << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (long long x = x0; x <= x1; ++x)
        s << "    <line x1=\"" << px(x) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x) << "\" y2=\""
          << py(y0) << "\"/>\n";
    for (long long y = y0; y <= y1; ++y)
        s << "    <line x1=\"" << px(x0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x1) << "\" y2=\""
          << py(y) << "\"/>\n";
    s << "  </g>\n";
    if (x0 <= 0 && 0 <= x1)
        s << "  <line x1=\"" << px(0) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(0) << "\" y2=\""
          << py(y0) << "\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
    if (y0 <= 0 && 0 <= y1)
        s << "  <line x1=\"" << px(x0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x1) << "\" y2=\""
          << py(0) << "\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";

    const int n = static_cast<int>(scene.layers.size());
    for (int i = 0; i < n; ++i)
    {
        const SvgLayer& layer = scene.layers[i];
        // Later layers are drawn smaller so earlier ones stay visible.
        const double radius = std::max(3.0, 9.0 - 2.0 * i);
        s << "  <g data-layer=\"" << escape(layer.name) << "\">\n";
        for (const Point& p : layer.points)
        {
            if (!scene.window.contains(p))
                continue;
            const long long x = to_int64(p[0]), y = to_int64(p[1]);
            s << "    <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << radius << "\"";
            if (layer.filled)
                s << " fill=\"" << escape(layer.color) << "\"";
            else
                s << " fill=\"none\" stroke=\"" << escape(layer.color) << "\" stroke-width=\"2\"";
            s << " data-layer=\"" << escape(layer.name) << "\" data-point=\"" << x << ',' << y
              << "\"/>\n";
        }
        s << "  </g>\n";
    }
    for (int i = 0; i < n; ++i)
    {
        const long long y = plot_height + i * kLegendRow;
        s << "  <circle cx=\"" << kMargin << "\" cy=\"" << y << "\" r=\"6\" fill=\""
          << escape(scene.layers[i].color) << "\"/>\n";
        s << "  <text x=\"" << kMargin + 14 << "\" y=\"" << y + 5
          << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape(scene.layers[i].name)
          << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::vector<std::tuple<std::string, long long, long long>> svg_points(const std::string& svg)
{
    static const std::regex circle(
        "<circle[^>]*data-layer=\"([^\"]*)\" data-point=\"(-?[0-9]+),(-?[0-9]+)\"");
    std::vector<std::tuple<std::string, long long, long long>> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle);
         it != std::sregex_iterator(); ++it)
        out.emplace_back((*it)[1].str(), std::stoll((*it)[2].str()), std::stoll((*it)[3].str()));
    return out;
}

} // namespace horocalc
