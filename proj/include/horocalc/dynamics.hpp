#ifndef HOROCALC_DYNAMICS_HPP
#define HOROCALC_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "horocalc/cover_counting.hpp"
#include "horocalc/log2.hpp"
#include "horocalc/polytope.hpp"

namespace horocalc {

class InvalidGenSet : public std::invalid_argument
{
public:
    explicit InvalidGenSet(const std::string& reason)
        : std::invalid_argument("invalid generating set: " + reason), reason_(reason)
    {
    }
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

/**
 * A positively generating set A of Z^d together with its hull data.
 *
 * `q` is the least positive integer with -A contained in qA.
 */
struct GenSet
{
    PointSet a;
    Polytope polytope;
    std::vector<Face> faces;
    int q = 1;

    /// Validates with positive_generation_check; throws InvalidGenSet.
    static GenSet from(const PointSet& a);

    Eigen::Index dim() const { return a.dim(); }
};

/// The n-fold sum nA, with 0A = {0}.
PointSet iterate_sum(const PointSet& a, long n);
inline PointSet iterate_sum(const GenSet& g, long n) { return iterate_sum(g.a, n); }

/// The balls 0A, 1A, ..., n_max A.
std::vector<PointSet> iterate_sums(const PointSet& a, long n_max);

/// phi^n(w) = w + nA.
PointSet phi(const GenSet& g, const PointSet& w, long n);

struct SfThreshold
{
    /// Certified threshold N.
    long n = 0;
    /// Least k with d * conv(A) cap Z^d contained in kA.
    long k = 0;
    /// (n - N) conv(A) cap Z^d is inside nA for all N <= n <= verified_to.
    long verified_to = 0;
};

SfThreshold sf_threshold(const GenSet& g, long horizon = 20);

/// Whether (n - N) conv(A) cap Z^d lies in nA for every n in [N, n_max].
bool sf_holds(const GenSet& g, long threshold, long n_max);

/// |nA| / n^d.
Rational volume_estimate(const GenSet& g, long n);

/// Exact volume of conv(A).
Rational hull_volume(const GenSet& g);

struct PreimageCount
{
    /// phi^k(M) = M + kA.
    PointSet target;
    long k = 0;
    /// Number of N with N + kA = M + kA.
    Integer count;
    /// Size of the candidate set S = erode(M + kA, kA).
    std::size_t candidates = 0;

    Interval log2(unsigned bits = 64) const { return log2_bounds(count, bits); }
};

/// The cover instance whose models are the preimages; `candidates` receives S.
CoverInstance preimage_instance(const GenSet& g, const PointSet& m, long k,
                                PointSet* candidates = nullptr);

PreimageCount preimage_count(const GenSet& g, const PointSet& m, long k);
PreimageCount preimage_count(const GenSet& g, const PointSet& m, long k,
                             std::uint64_t node_budget);

/// Every N with N + kA = M + kA, each verified; needs |S| <= 20.
std::vector<PointSet> enumerate_preimages(const GenSet& g, const PointSet& m, long k);

struct AmenabilityRatio
{
    PreimageCount numerator;
    PreimageCount denominator;

    LogRatio ratio() const { return {numerator.count, denominator.count}; }
};

/// L^q(phi^{(q+5)q}(M)) / L^q(phi^{(q+1)q}(M)).
AmenabilityRatio amenability_ratio(const GenSet& g, const PointSet& m);

} // namespace horocalc

#endif // HOROCALC_DYNAMICS_HPP
