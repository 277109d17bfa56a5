#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "bolza/config.hpp"
#include "bolza/group.hpp"

namespace bolza {

struct DiscPoint {
    Cx z;
    DiscPoint() = default;
    explicit DiscPoint(Cx z_);  // throws if |z| >= 1 - eps_boundary
};

struct BoundaryPoint {
    double theta = 0;  // normalized to [0, 2pi)
    BoundaryPoint() = default;
    explicit BoundaryPoint(double t);
};

// Generic unit-determinant isometry of the disc, [[a,b],[conj b, conj a]].
struct Isometry {
    Cx a{1, 0}, b{0, 0};

    Isometry() = default;
    Isometry(Cx a_, Cx b_);  // throws on determinant drift beyond 1e-9

    static Isometry identity() { return {}; }
    static Isometry rotation(double angle);       // about 0
    static Isometry translation_to(Cx p);         // maps 0 to p
    static Isometry from(const GroupElem& g);

    Isometry inverse() const { return Isometry(std::conj(a), -b); }
    Cx trace() const { return a + std::conj(a); }
    Cx apply(Cx z) const { return (a * z + b) / (std::conj(b) * z + std::conj(a)); }
};

Isometry compose(const Isometry& f, const Isometry& g);

enum class IsoClass { Identity, Elliptic, Parabolic, Hyperbolic };
IsoClass classify(const Isometry& f, double tau = 1e-9);

// 2*arccosh(|tr|/2); throws unless hyperbolic
double translation_length(const Isometry& f);

double distance(Cx p, Cx q);

// Complete geodesic as an unordered pair of boundary angles, smaller first.
struct Geodesic {
    double t1 = 0, t2 = 0;
    Geodesic() = default;
    Geodesic(double a, double b);  // canonicalizes; throws if endpoints collide

    bool same_as(const Geodesic& o, double tol = 1e-9) const;
};

// Axis of a hyperbolic isometry: fixed points of conj(b) z^2 + (conj(a)-a) z - b = 0.
Geodesic axis(const Isometry& f);
Geodesic axis(const GroupElem& g);

// Do the endpoint pairs interleave on the circle (iff the geodesics cross)?
bool geodesics_interleave(const Geodesic& u, const Geodesic& v);

struct Crossing {
    Cx point;
    double angle;  // in (0, pi)
};
// Unique transversal crossing if the endpoints interleave; nullopt otherwise.
std::optional<Crossing> geodesic_cross(const Geodesic& u, const Geodesic& v);

// Klein-model helpers: geodesics are straight chords there, so clipping and
// containment reduce to planar convex geometry.
Cx poincare_to_klein(Cx z);
Cx klein_to_poincare(Cx z);

// point of the geodesic nearest to 0
Cx geodesic_foot(const Geodesic& g);
// signed arc parameter of x (must lie on g) measured from `base` toward `dir_to`
double arc_parameter(Cx x, Cx base, Cx toward);
// unit direction at p toward the ideal point angle
Cx direction_toward(Cx p, double theta);
// point at arc length s from base along the geodesic, direction da (|da| = 1)
Cx point_at_arc(Cx base, Cx da, double s);
// hyperbolic distance from a point to a complete geodesic
double point_geodesic_distance(Cx z, const Geodesic& g);

// Convex geodesic polygon; vertices in ccw order (Poincare coords).
struct ConvexPolygon {
    std::vector<Cx> vertices;          // Poincare
    std::vector<Cx> klein;             // cached Klein images

    explicit ConvexPolygon(std::vector<Cx> verts);
    // signed containment: eps > 0 fattens outward, eps < 0 shrinks
    bool contains_klein(Cx zk, double eps) const;
    bool contains(Cx z, double eps) const { return contains_klein(poincare_to_klein(z), eps); }
};

struct Segment {
    Geodesic carrier;
    Cx p, q;
    int side_p = -1, side_q = -1;      // polygon side indices the endpoints lie on
    bool vertex_p = false, vertex_q = false;
};

// Chord of the geodesic inside the polygon; nullopt if disjoint.
// Grazing contact shorter than eps_vertex raises std::runtime_error.
std::optional<Segment> clip_to_polygon(const Geodesic& g, const ConvexPolygon& poly,
                                       const Tolerances& tol = {});

}  // namespace bolza
