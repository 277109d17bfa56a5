#include "bolza/quadint.hpp"

#include <cstdio>

namespace bolza {

std::string QuadInt::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld%+lld*sqrt2", (long long)p, (long long)q);
    return buf;
}

std::optional<QuadInt> snap_quadint(double t, double max_residual) {
    const double s2 = std::sqrt(2.0);
    long long p0 = (long long)std::llround(t / 2.0);
    QuadInt best;
    double best_res = 1e300;
    for (long long p = p0 - 2; p <= p0 + 2; ++p) {
        long long q = (long long)std::llround((t - double(p)) / s2);
        double res = std::fabs(double(p) + double(q) * s2 - t);
        if (res < best_res) {
            best_res = res;
            best = QuadInt(p, q);
        }
    }
    if (best_res >= max_residual) return std::nullopt;
    return best;
}

}  // namespace bolza
