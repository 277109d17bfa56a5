#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "bolza/quadint.hpp"

namespace bolza {

using Cx = std::complex<double>;

// Letters index the generator alphabet: 2k = g_k, 2k+1 = g_k^{-1}.
using Letter = uint8_t;
using Word = std::vector<Letter>;
inline constexpr Letter letter_inverse(Letter c) { return c ^ 1; }

// Exact element of the Bolza group as an SU(1,1) matrix [[a, b], [conj b, conj a]].
// 'a' lies in Z[sqrt2, i]; 'b' is beta * (stored ZGauss) with beta = sqrt(1+sqrt2).
// Closure: beta^2 = 1 + sqrt2 stays in the ring, so products never leave this form.
struct GroupElem {
    ZGauss a;  // literal value
    ZGauss b;  // value divided by beta

    friend constexpr bool operator==(const GroupElem&, const GroupElem&) = default;

    static constexpr GroupElem identity() { return {ZGauss(1, 0, 0, 0), ZGauss()}; }

    GroupElem inverse() const { return {a.conj(), -b}; }
    bool is_identity() const { return *this == identity(); }

    // trace = 2 * Re(a), exact in Z[sqrt2]
    QuadInt trace() const { return {2 * a.re.p, 2 * a.re.q}; }

    // det = |a|^2 - (1+sqrt2)|b/beta... checked exactly; true for all genuine elements
    bool det_is_one() const;

    Cx a_cx() const;
    Cx b_cx() const;  // includes the beta factor

    double translation_length() const;
    double displacement(Cx z) const;  // hyperbolic d(z, g.z)
};

GroupElem operator*(const GroupElem& x, const GroupElem& y);

struct GroupElemHash {
    size_t operator()(const GroupElem& g) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](int64_t v) {
            h ^= uint64_t(v);
            h *= 1099511628211ull;
        };
        mix(g.a.re.p); mix(g.a.re.q); mix(g.a.im.p); mix(g.a.im.q);
        mix(g.b.re.p); mix(g.b.re.q); mix(g.b.im.p); mix(g.b.im.q);
        return size_t(h);
    }
};

// The 8 letter matrices g_0, g_0^{-1}, ..., g_3, g_3^{-1}.
const std::array<GroupElem, 8>& letter_matrices();

GroupElem word_to_elem(const Word& w);

// Elements with d(g.0, 0) <= radius, BFS over the Cayley graph (includes identity).
std::vector<GroupElem> element_ball(double radius);

}  // namespace bolza
