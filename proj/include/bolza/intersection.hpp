#pragma once

#include <string>
#include <vector>

#include "bolza/bolza_model.hpp"
#include "bolza/spectrum.hpp"

namespace bolza {

struct CrossingPoint {
    Cx point;            // representative in the half-open fundamental domain
    bool vertex_incident;  // within eps_vertex of a systolic-graph vertex (W point)
};

struct IntersectionRecord {
    int count = 0;
    std::vector<CrossingPoint> crossings;
    bool all_vertex_incident() const;
};

// Geometric intersection number of two distinct unoriented classes: crossings
// of their lift-axis families counted inside the half-open fundamental domain.
IntersectionRecord intersection_number(const CurveClass& c1, const CurveClass& c2,
                                       const Tolerances& tol = {});

// Sum over the members of the system; shared vertex points count once per
// crossed member.
IntersectionRecord intersection_with_system(const CurveClass& c, const CurveSystem& S,
                                            const Tolerances& tol = {});

// Independent second algorithm: walk one period of the axis through the
// tiling and count crossings with the lifts of S, with multiplicity equal to
// the number of member strands through each crossing point.  Must agree with
// intersection_with_system.
int lift_count(const CurveClass& c, const CurveSystem& S, const Tolerances& tol = {});

struct ComplexityRow {
    int k = 0;
    long T_k = 0;
    bool certified = false;
    std::vector<std::string> witnesses;  // words, sorted
};

// T_k = number of simple closed non-systolic classes c with i(c, Sys) <= k,
// certified by sweeping all classes of length <= k * acosh(1+sqrt2).
std::vector<ComplexityRow> complexity_table(int k_max, const EnumerationOptions& opt = {});
// Variant over a precomputed sweep (certified up to the given length).
std::vector<ComplexityRow> complexity_table(int k_max,
                                            const std::vector<CurveClass>& classes,
                                            double certified_length,
                                            const EnumerationOptions& opt = {});

// Classes meeting the Omega1 tessellation graph only at its vertices
// (the paper's exceptional set; 16 members).  The enumeration cutoff is
// 10*acosh(1+sqrt2).  Throws if the cardinality is not 16.
struct GammaSetEntry {
    CurveClass cls;
    int i_sys = 0;
    bool sys_vertex_only = false;  // whether *all* Sys crossings are vertex-incident
};
std::vector<GammaSetEntry> gamma_set(const EnumerationOptions& opt = {});
// Variant over a precomputed sweep; no cardinality check.
std::vector<GammaSetEntry> gamma_set_scan(const std::vector<CurveClass>& classes,
                                          const EnumerationOptions& opt = {});

}  // namespace bolza
