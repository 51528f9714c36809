#ifndef HOROCALC_JSON_IO_HPP
#define HOROCALC_JSON_IO_HPP

#include <json.hpp>

#include "horocalc/dynamics.hpp"
#include "horocalc/horoball.hpp"
#include "horocalc/sheltered.hpp"

namespace horocalc {

using Json = nlohmann::ordered_json;

/// Thrown for JSON that does not match the expected schema.
class MalformedInput : public std::invalid_argument
{
public:
    explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

Json to_json(const Point& p);
Json to_json(const PointSet& s);
Json to_json(const Polytope& p);
Json to_json(const Polytope& p, const Face& f);
Json to_json(const Cone& c);
Json to_json(const Lattice& l);
Json to_json(const GenSet& g, const Horoball& h);
Json to_json(const GenSet& g, const LimitClass& c);
Json to_json(const ConjugacyVerdict& v);
Json to_json(const CbReport& r);
Json to_json(const PreimageCount& c);
Json to_json(const AmenabilityRatio& r);
Json to_json(const ShelterResult& r);
Json to_json(const SfThreshold& t);

/// Integers are written as decimal strings.
Json to_json(const Integer& x);
Json to_json(const Rational& x);

Integer integer_from_json(const Json& j);
Point point_from_json(const Json& j);
/// Accepts {"dim": d, "points": [...]} or a bare list of points (dim inferred,
/// or taken from `dim_hint` when the list is empty).
PointSet point_set_from_json(const Json& j, Eigen::Index dim_hint = 0);

/// Parses JSON text, mapping syntax errors to MalformedInput.
Json parse_json(const std::string& text);

} // namespace horocalc

#endif // HOROCALC_JSON_IO_HPP
