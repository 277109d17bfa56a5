#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bolza/config.hpp"
#include "bolza/group.hpp"
#include "bolza/hyp.hpp"
#include "bolza/quadint.hpp"
#include "bolza/words.hpp"

namespace bolza {

// A lift-axis of the closed geodesic meeting the closed fundamental octagon,
// recorded as tile^{-1} . axis(rep).
struct AxisLift {
    Geodesic geo;
    GroupElem conj;  // tile^{-1} * rep * tile; its axis is `geo`
    GroupElem tile;
};

struct CurveClass {
    CyclicKey key;
    Word word;               // canonical representative
    GroupElem elem;          // axis-normalized representative
    QuadInt trace_exact;     // signed
    double length = 0;
    bool primitive = true;
    int self_intersections = -1;
    bool simple = false;
    std::optional<bool> separating;   // meaningful for simple classes
    std::vector<AxisLift> axes;       // deduped lift-axes through the closed octagon

    Cx axis_base;            // point of axis(elem) nearest 0
    Cx axis_dir;             // unit direction of travel at axis_base
};

// Conjugate g so that its axis passes through the closed fundamental octagon.
GroupElem normalize_to_domain_axis(const GroupElem& g);

// All distinct lift-axes of the class of g (axis-normalized) whose carrier
// tile closure meets one period of the axis; everything downstream
// (self-intersections, intersection numbers, arrangements) counts crossings
// of these against a half-open fundamental domain.
std::vector<AxisLift> axes_through_domain(const GroupElem& g);
std::vector<AxisLift> axes_through_domain(const GroupElem& g, Cx base, Cx dir);
// (base, direction) anchored inside the closed domain for a normalized element
std::pair<Cx, Cx> domain_base_of(const GroupElem& normalized);

// Half-open fundamental domain membership: interior, sides 0..3, one vertex.
bool halfopen_domain_contains(Cx z, double eps = 1e-9);

int count_self_intersections(const std::vector<AxisLift>& axes);

struct EnumerationOptions {
    double ball_margin = 1.0;   // BFS expansion slack beyond the covering bound
    bool with_geometry = true;  // fill axes + self-intersection counts
    Precision precision = Precision::Double;
    int jobs = 0;
};

// Every unoriented primitive conjugacy class with translation length <= L_max,
// exactly once, sorted by (length, trace, word).
std::vector<CurveClass> enumerate_classes(double L_max, const EnumerationOptions& opt = {});

// Completeness cross-check: re-runs with a larger search bound and compares
// key sets.  Throws on mismatch (incomplete-enumeration error).
void certify_enumeration(double L_max, const std::vector<CurveClass>& classes,
                         const EnumerationOptions& opt = {});

struct SpectrumRow {
    double length;
    QuadInt trace;           // of the positive-trace member if mixed; see words
    int mult_total;
    int mult_simple;
    std::vector<std::string> words;
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows;  // strictly increasing lengths
};

SpectrumTable length_spectrum(double L_max, const EnumerationOptions& opt = {});

std::optional<QuadInt> snap_trace(double t, double max_residual = 1e-6);

// Build a full class record from a representative word (used when loading the
// frozen curve-system data).
CurveClass make_curve_class(const Word& w, bool with_geometry = true);

}  // namespace bolza
