#pragma once

#include <map>
#include <string>
#include <vector>

#include "bolza/bolza_model.hpp"
#include "bolza/spectrum.hpp"

namespace bolza {

struct GraphVertex {
    Cx position;                       // half-open domain representative
    std::vector<double> corner_angles; // ccw gaps between consecutive strand ends
};

struct GraphFace {
    std::vector<double> corner_angles;  // in traversal order
    double area;                        // angle deficit
};

struct SurfaceGraph {
    int V = 0, E = 0, F = 0;
    std::vector<GraphVertex> vertices;
    std::vector<GraphFace> faces;
    std::vector<std::pair<int, int>> edge_list;
    int euler() const { return V - E + F; }
    double total_area() const;
    bool degenerate = false;  // no intersections at all
};

// Arrangement of a system of simple closed geodesics on the quotient.
// Faces come from the rotation-system traversal; the Euler and Gauss-Bonnet
// identities are asserted unless `lenient`.
SurfaceGraph build_arrangement(const CurveSystem& S, const Tolerances& tol = {},
                               bool lenient = false);

struct FaceCensus {
    // signature = sorted (p1,...,pn) with angles pi/p, p in 2..12; count
    std::map<std::vector<int>, int> signatures;
    int unclassified = 0;
    bool all_triangles() const;
};

FaceCensus face_census(const SurfaceGraph& g, double grid_tol = 1e-6);

// True iff every complementary region is a disc (traversal face count matches
// the Euler formula for the genus-2 surface).
bool is_filling(const CurveSystem& S, const Tolerances& tol = {});

struct InvolutionRecord {
    bool fixed = false;                 // J.c conjugate to c or c^{-1}
    bool orientation_preserved = false; // J m J^{-1} conjugate to m
    bool separating = false;
};

// Haas-Susskind checks for a simple class.  J acts on words by inverting
// every letter in place (J g_k J^{-1} = g_k^{-1} exactly), so the test is
// symbolic: oriented conjugacy keys.
InvolutionRecord involution_check(const CurveClass& c);

}  // namespace bolza
