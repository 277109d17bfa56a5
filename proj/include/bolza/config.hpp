#pragma once

#include <cstdint>
#include <string>

namespace bolza {

// All tolerances live here; code never hard-codes an epsilon inline.
// Hierarchy: boundary < merge < vertex.
struct Tolerances {
    double boundary = 1e-12;  // guard distance to the unit circle
    double merge = 1e-9;      // point/length dedup on the quotient
    double vertex = 1e-7;     // vertex-incidence detection
    double classify = 1e-9;   // elliptic/parabolic/hyperbolic trace margin
    double trace_snap = 1e-6; // max residual when snapping a trace to Z[sqrt2]
    double relator = 1e-10;   // relator-evaluates-to-identity check
};

enum class Precision { Double, High };

inline Tolerances tolerances_for(Precision p) {
    Tolerances t;
    if (p == Precision::High) {
        // 128-bit mantissa mode: everything the float path recomputes gets
        // tightened; exact-integer invariants are unaffected.
        t.boundary = 1e-30;
        t.merge = 1e-25;
        t.vertex = 1e-20;
        t.classify = 1e-25;
        t.trace_snap = 1e-20;
        t.relator = 1e-30;
    }
    return t;
}

struct RunConfig {
    Precision precision = Precision::Double;
    Tolerances tol;
    double max_length = 4.9;
    int kmax = 10;
    int jobs = 0;  // 0 = hardware concurrency
    std::string format = "json";
    std::string out_path;
    bool certified_only = false;
    uint64_t seed = 20260810;
};

}  // namespace bolza
