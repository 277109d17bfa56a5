#include "bolza/group.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace bolza {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kBeta = std::sqrt(1.0 + kSqrt2);  // b entries carry this factor

Cx zg_cx(const ZGauss& z) {
    return {double(z.re.p) + double(z.re.q) * kSqrt2,
            double(z.im.p) + double(z.im.q) * kSqrt2};
}
// beta^2 = 1 + sqrt2
constexpr ZGauss kBeta2{QuadInt{1, 1}, QuadInt{0, 0}};
}  // namespace

GroupElem operator*(const GroupElem& x, const GroupElem& y) {
    // [[a1,b1],[~b1,~a1]] [[a2,b2],[~b2,~a2]], with b = beta * stored:
    // a = a1 a2 + beta^2 b1 ~b2 ; b = a1 b2 + b1 ~a2
    return {x.a * y.a + kBeta2 * (x.b * y.b.conj()),
            x.a * y.b + x.b * y.a.conj()};
}

bool GroupElem::det_is_one() const {
    ZGauss d = a * a.conj() - kBeta2 * (b * b.conj());
    return d == ZGauss(1, 0, 0, 0);
}

Cx GroupElem::a_cx() const { return zg_cx(a); }
Cx GroupElem::b_cx() const { return kBeta * zg_cx(b); }

double GroupElem::translation_length() const {
    QuadInt t = trace();
    double half = std::fabs(t.value()) / 2.0;
    if (half <= 1.0) throw std::domain_error("translation_length: not hyperbolic");
    return 2.0 * std::acosh(half);
}

double GroupElem::displacement(Cx z) const {
    Cx a = a_cx(), b = b_cx();
    Cx w = (a * z + b) / (std::conj(b) * z + std::conj(a));
    double n = std::norm(w - z);
    double d = (1.0 - std::norm(w)) * (1.0 - std::norm(z));
    return std::acosh(1.0 + 2.0 * n / d);
}

const std::array<GroupElem, 8>& letter_matrices() {
    // g_k: a = 1 + sqrt2; b = alpha e^{ik pi/4} = beta * sqrt2 * e^{ik pi/4}
    static const std::array<GroupElem, 8> m = [] {
        const ZGauss t{QuadInt{1, 1}, QuadInt{0, 0}};
        const ZGauss bk[4] = {
            ZGauss(0, 1, 0, 0),   // sqrt2
            ZGauss(1, 0, 1, 0),   // 1 + i
            ZGauss(0, 0, 0, 1),   // i sqrt2
            ZGauss(-1, 0, 1, 0),  // -1 + i
        };
        std::array<GroupElem, 8> out;
        for (int k = 0; k < 4; ++k) {
            out[2 * k] = GroupElem{t, bk[k]};
            out[2 * k + 1] = out[2 * k].inverse();
        }
        return out;
    }();
    return m;
}

GroupElem word_to_elem(const Word& w) {
    GroupElem m = GroupElem::identity();
    for (Letter c : w) m = m * letter_matrices()[c];
    return m;
}

std::vector<GroupElem> element_ball(double radius) {
    std::unordered_set<GroupElem, GroupElemHash> seen;
    std::deque<GroupElem> queue;
    std::vector<GroupElem> out;
    seen.insert(GroupElem::identity());
    queue.push_back(GroupElem::identity());
    out.push_back(GroupElem::identity());
    while (!queue.empty()) {
        GroupElem g = queue.front();
        queue.pop_front();
        for (const GroupElem& l : letter_matrices()) {
            GroupElem h = g * l;
            if (seen.count(h)) continue;
            if (h.displacement(Cx{0, 0}) > radius) continue;
            seen.insert(h);
            queue.push_back(h);
            out.push_back(h);
        }
    }
    return out;
}

}  // namespace bolza
