#ifndef HOROCALC_SHELTERED_HPP
#define HOROCALC_SHELTERED_HPP

#include <optional>
#include <vector>

#include "horocalc/horoball.hpp"

namespace horocalc {

/// The r-sheltered hull {v : v + rA inside W + rA}.
PointSet shel_r(const GenSet& g, const PointSet& w, long r);

/**
 * A witness that v lies outside the sheltered hull of W: the vertex horoball
 * shift + H_{vertex} of the reversed set -A contains v and misses W.
 */
struct HoroballCertificate
{
    Point point;
    Point vertex;
    Point shift;
};

/// The reversed generating set -A.
GenSet reversed(const GenSet& g);

/**
 * Looks for a vertex horoball of -A through v avoiding W. The zero shift
 * gives the smallest such horoball, so `search_radius` cannot change the
 * outcome; it is validated and kept for interface stability.
 */
std::optional<HoroballCertificate> certify_outside(const GenSet& g, const PointSet& w,
                                                   const Point& v, long search_radius = 0);

/// Whether the certificate's horoball contains its point and misses W.
bool verify_certificate(const GenSet& g, const PointSet& w, const HoroballCertificate& c);

struct ShelterResult
{
    enum class Status
    {
        Exact,
        Bounds
    };
    Status status = Status::Bounds;
    std::optional<PointSet> exact;
    PointSet lower;
    std::optional<PointSet> upper;
    /// Radius at which S^r stopped growing (or r_max).
    long stable_radius = 0;
    std::vector<HoroballCertificate> certificates;
    std::vector<Point> uncertified;
};

/// Full sheltered hull: S^r up to r_max, then certification of the complement.
ShelterResult shel(const GenSet& g, const PointSet& w, long r_max = 16, long search_radius = 0);

} // namespace horocalc

#endif // HOROCALC_SHELTERED_HPP
