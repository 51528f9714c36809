#ifndef HOROCALC_SVG_HPP
#define HOROCALC_SVG_HPP

#include <string>
#include <vector>

#include "horocalc/point_set.hpp"

namespace horocalc {

class SvgDimensionError : public std::invalid_argument
{
public:
    explicit SvgDimensionError(Eigen::Index dim)
        : std::invalid_argument("SVG output needs dimension 2, got " + std::to_string(dim))
    {
    }
};

struct SvgLayer
{
    std::string name;
    /// Any SVG colour.
    std::string color;
    PointSet points;
    bool filled = true;
};

struct SvgScene
{
    Window window;
    std::vector<SvgLayer> layers;
    std::string title;
};

/// Deterministic SVG: grid, axes, one circle per point per layer and a legend.
/// Each circle carries data-layer and data-point attributes.
std::string render_svg(const SvgScene& scene);

/// (layer name, x, y) of every circle, in document order.
std::vector<std::tuple<std::string, long long, long long>> svg_points(const std::string& svg);

} // namespace horocalc

#endif // HOROCALC_SVG_HPP
