#pragma once

#include "bolza/bolza_model.hpp"
#include "bolza/spectrum.hpp"

namespace bolza {

// Recomputes the geometric intersection count of c against the members of S
// with 128-bit mantissa floats, starting from the exact integer matrices of
// the recorded axis lifts.  Used by the precision cross-check.
int intersection_count_high(const CurveClass& c, const CurveSystem& S);

// Same for the self-intersection count.
int self_intersection_count_high(const CurveClass& c);

}  // namespace bolza
