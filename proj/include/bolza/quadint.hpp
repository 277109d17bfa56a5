#pragma once

#include <cstdint>
#include <cmath>
#include <optional>
#include <string>

namespace bolza {

// Element p + q*sqrt(2) of Z[sqrt2].  Traces of all group elements land here.
struct QuadInt {
    int64_t p = 0;
    int64_t q = 0;

    constexpr QuadInt() = default;
    constexpr QuadInt(int64_t p_, int64_t q_) : p(p_), q(q_) {}

    friend constexpr QuadInt operator+(QuadInt a, QuadInt b) { return {a.p + b.p, a.q + b.q}; }
    friend constexpr QuadInt operator-(QuadInt a, QuadInt b) { return {a.p - b.p, a.q - b.q}; }
    friend constexpr QuadInt operator*(QuadInt a, QuadInt b) {
        return {a.p * b.p + 2 * a.q * b.q, a.p * b.q + a.q * b.p};
    }
    constexpr QuadInt operator-() const { return {-p, -q}; }
    friend constexpr bool operator==(QuadInt a, QuadInt b) = default;

    // Galois conjugate p - q*sqrt2.
    constexpr QuadInt conj() const { return {p, -q}; }

    double value() const { return double(p) + double(q) * std::sqrt(2.0); }
    double conj_value() const { return double(p) - double(q) * std::sqrt(2.0); }

    std::string str() const;
};

// Nearest p + q*sqrt2 to t.  Group traces have Galois conjugate bounded by 2
// (the conjugate embedding of the trace field lands in a definite algebra),
// so p sits within 1 of t/2; a small window search covers roundoff.
std::optional<QuadInt> snap_quadint(double t, double max_residual);

// x + y*sqrt2 + i*(z + w*sqrt2): entries of group matrices live here.
struct ZGauss {
    QuadInt re, im;

    constexpr ZGauss() = default;
    constexpr ZGauss(QuadInt r, QuadInt i) : re(r), im(i) {}
    constexpr ZGauss(int64_t a, int64_t b, int64_t c, int64_t d) : re(a, b), im(c, d) {}

    friend constexpr ZGauss operator+(ZGauss a, ZGauss b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr ZGauss operator-(ZGauss a, ZGauss b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr ZGauss operator*(ZGauss a, ZGauss b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    constexpr ZGauss operator-() const { return {-re, -im}; }
    constexpr ZGauss conj() const { return {re, -im}; }
    friend constexpr bool operator==(ZGauss a, ZGauss b) = default;
};

}  // namespace bolza
