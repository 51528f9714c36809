#ifndef HOROCALC_HOROBALL_HPP
#define HOROCALC_HOROBALL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horocalc/dynamics.hpp"

namespace horocalc {

/**
 * The horoball v + H_F of a face F, where H_F is the semigroup generated by
 * {u - w : u in A, w a vertex of F}.
 *
 * The shift is kept reduced modulo the stabilizer lattice, so two
 * descriptors denote the same set iff their faces and shifts agree.
 */
struct Horoball
{
    Eigen::Index dim = 0;
    std::size_t face = 0;
    std::vector<std::size_t> face_vertices;
    Point shift;
    PointSet generators;
    Cone envelope;
    Lattice stabilizer{1};

    Horoball translated(const Point& v) const;
};

/// v + H_F for the face with index `face` in g.faces.
Horoball make_horoball(const GenSet& g, std::size_t face, const Point& shift);
Horoball make_horoball(const GenSet& g, std::size_t face);

/// One unshifted horoball per proper face.
std::vector<Horoball> horoballs(const GenSet& g);

/// Lattice of differences of the generator points on the face.
Lattice stabilizer(const GenSet& g, const Face& f);

/// Exact (shift + H_F) cap win.
PointSet horoball_window(const Horoball& h, const Window& win);

bool horoball_contains(const Horoball& h, const Point& x);

/// Whether (shift + H_F) meets the finite set w.
bool horoball_meets(const Horoball& h, const PointSet& w);

struct LimitClass
{
    enum class Tag
    {
        Empty,
        Full,
        Horoball,
        Diverges
    };
    Tag tag = Tag::Empty;
    /// Present iff tag == Horoball.
    std::optional<horocalc::Horoball> limit;
};

std::string to_string(LimitClass::Tag tag);

/// Limit of c + n u + H_F as n grows.
LimitClass classify_limit(const GenSet& g, std::size_t face, const Point& c, const Point& u);

struct FaceSignature
{
    Eigen::Index dim = 0;
    Cone envelope;
    Lattice stabilizer{1};
};

FaceSignature face_signature(const GenSet& g, std::size_t face);
bool signature_equal(const FaceSignature& a, const FaceSignature& b);

struct ConjugacyVerdict
{
    bool conjugate = false;
    /// Face index pairs (first set, second set); empty unless conjugate.
    std::vector<std::pair<std::size_t, std::size_t>> witness;
    std::string reason;
};

ConjugacyVerdict conjugacy_decide(const GenSet& g1, const GenSet& g2);

struct CbReport
{
    int rank = 0;
    /// Orbit count of layer k, k = 0 .. d-1.
    std::vector<std::size_t> layers;
    /// The empty set and the whole group.
    std::size_t fixed_points = 2;
};

CbReport cb_report(const GenSet& g);

} // namespace horocalc

#endif // HOROCALC_HOROBALL_HPP
