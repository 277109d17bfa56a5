#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bolza/group.hpp"
#include "bolza/hyp.hpp"
#include "bolza/spectrum.hpp"
#include "bolza/words.hpp"

namespace bolza {

struct GeneratorSet {
    std::array<GroupElem, 4> g;
    Word relator;
};

// g_k = [[1+sqrt2, alpha e^{ik pi/4}], [alpha e^{-ik pi/4}, 1+sqrt2]], alpha = sqrt(2+2sqrt2).
// Relator discovered by searching length-8 products; construction throws if the
// relation or pairing certificates fail.
const GeneratorSet& generators();

struct OctagonDomain {
    std::array<Cx, 8> vertices;     // radius tanh(acosh(3+2sqrt2)/2), angles pi/8 + k pi/4
    std::array<Geodesic, 8> sides;  // side k runs from vertex k-1 to vertex k... see impl
    ConvexPolygon polygon;
    double interior_angle;          // pi/4
    double side_length;             // 2 acosh(1+sqrt2)
    double circumradius;            // acosh(3+2sqrt2)
};

const OctagonDomain& fundamental_octagon();

// Returns (reduced point, w) with w.p inside the closed octagon.
std::pair<Cx, GroupElem> reduce_to_domain(Cx p);

struct CurveSystem {
    std::string name;
    std::vector<CurveClass> classes;
    size_t size() const { return classes.size(); }
};

// The distinguished systems.  Words come from the frozen data file and are
// re-certified on load (lengths, simplicity, cardinality, pairwise distinct).
const CurveSystem& omega1();          // 4 side curves of the right-angled picture
const CurveSystem& omega2();          // 8 diagonal curves
const CurveSystem& systolic_set();    // omega1 + omega2, the 12 systoles
const CurveSystem& second_systoles(); // 12 classes at 2 acosh(3+2sqrt2)

struct SpecialIsometries {
    Isometry R;  // order 8, rotation by pi/4 about 0
    Isometry L;  // order 3, rotation about a (4,4,4) face incenter
    Isometry J;  // hyperelliptic involution z -> -z
    std::vector<Isometry> closure;  // <R,L> as isometries of the quotient
};

const SpecialIsometries& special_isometries();

// 6 fixed points of J on the quotient: center, vertex class, 4 side midpoints.
const std::vector<Cx>& weierstrass_points();
// All lifts of those meeting the closed fundamental octagon (17 points),
// paired with their class index 0..5.
const std::vector<std::pair<int, Cx>>& weierstrass_lifts();

// Curve-system data file.
std::string curve_systems_json();                  // current (certified) state
void rebuild_certificates(const std::string& path);  // regenerate + write

}  // namespace bolza
