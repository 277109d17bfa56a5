#include "bolza/hyp.hpp"

#include <cmath>
#include <stdexcept>

namespace bolza {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double norm_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}
}  // namespace

DiscPoint::DiscPoint(Cx z_) : z(z_) {
    if (std::abs(z) >= 1.0 - 1e-12)
        throw std::domain_error("DiscPoint: outside the boundary guard");
}

BoundaryPoint::BoundaryPoint(double t) : theta(norm_angle(t)) {}

Isometry::Isometry(Cx a_, Cx b_) : a(a_), b(b_) {
    double det = std::norm(a) - std::norm(b);
    double scale = std::max(1.0, std::norm(a));
    if (std::fabs(det - 1.0) > 1e-9 * scale)
        throw std::runtime_error("Isometry: determinant drift");
}

Isometry Isometry::rotation(double angle) {
    return Isometry(std::polar(1.0, angle / 2.0), Cx{0, 0});
}

Isometry Isometry::translation_to(Cx p) {
    double n = 1.0 / std::sqrt(1.0 - std::norm(p));
    return Isometry(Cx{n, 0}, n * p);
}

Isometry Isometry::from(const GroupElem& g) { return Isometry(g.a_cx(), g.b_cx()); }

Isometry compose(const Isometry& f, const Isometry& g) {
    return Isometry(f.a * g.a + f.b * std::conj(g.b), f.a * g.b + f.b * std::conj(g.a));
}

IsoClass classify(const Isometry& f, double tau) {
    double t = std::fabs(f.a.real()) * 2.0;
    if (t > 2.0 + tau) return IsoClass::Hyperbolic;
    if (t < 2.0 - tau) return IsoClass::Elliptic;
    // |tr| = 2: identity iff b = 0 and a = +-1
    if (std::abs(f.b) < tau && std::fabs(std::fabs(f.a.real()) - 1.0) < tau &&
        std::fabs(f.a.imag()) < tau)
        return IsoClass::Identity;
    return IsoClass::Parabolic;
}

double translation_length(const Isometry& f) {
    if (classify(f) != IsoClass::Hyperbolic)
        throw std::domain_error("translation_length: not hyperbolic");
    return 2.0 * std::acosh(std::fabs(f.a.real()));
}

double distance(Cx p, Cx q) {
    double n = std::norm(p - q);
    double d = (1.0 - std::norm(p)) * (1.0 - std::norm(q));
    return std::acosh(1.0 + 2.0 * n / d);
}

Geodesic::Geodesic(double a, double b) {
    a = norm_angle(a);
    b = norm_angle(b);
    if (a > b) std::swap(a, b);
    double gap = std::min(b - a, kTwoPi - (b - a));
    if (gap < 1e-10) throw std::domain_error("Geodesic: coincident endpoints");
    t1 = a;
    t2 = b;
}

bool Geodesic::same_as(const Geodesic& o, double tol) const {
    auto eq = [tol](double x, double y) {
        double d = std::fabs(x - y);
        return d < tol || std::fabs(d - kTwoPi) < tol;
    };
    return (eq(t1, o.t1) && eq(t2, o.t2)) || (eq(t1, o.t2) && eq(t2, o.t1));
}

Geodesic axis(const Isometry& f) {
    if (classify(f) != IsoClass::Hyperbolic)
        throw std::domain_error("axis: not hyperbolic");
    // roots of conj(b) z^2 + (conj(a) - a) z - b = 0 lie on the circle
    double s = std::sqrt(f.a.real() * f.a.real() - 1.0);
    Cx bb = std::conj(f.b);
    Cx z1 = (Cx{0, f.a.imag()} + s) / bb;
    Cx z2 = (Cx{0, f.a.imag()} - s) / bb;
    return Geodesic(std::arg(z1), std::arg(z2));
}

Geodesic axis(const GroupElem& g) { return axis(Isometry::from(g)); }

bool geodesics_interleave(const Geodesic& u, const Geodesic& v) {
    auto between = [](double a, double x, double b) {
        return norm_angle(x - a) < norm_angle(b - a);
    };
    return between(u.t1, v.t1, u.t2) != between(u.t1, v.t2, u.t2);
}

Cx poincare_to_klein(Cx z) { return 2.0 * z / (1.0 + std::norm(z)); }

Cx klein_to_poincare(Cx z) {
    double n = std::norm(z);
    if (n >= 1.0) n = 1.0 - 1e-15;
    return z / (1.0 + std::sqrt(1.0 - n));
}

std::optional<Crossing> geodesic_cross(const Geodesic& u, const Geodesic& v) {
    if (u.same_as(v)) throw std::domain_error("geodesic_cross: identical geodesics");
    if (!geodesics_interleave(u, v)) return std::nullopt;
    // Klein chords are straight; intersect the lines.
    Cx a1 = std::polar(1.0, u.t1), a2 = std::polar(1.0, u.t2);
    Cx b1 = std::polar(1.0, v.t1), b2 = std::polar(1.0, v.t2);
    Cx d1 = a2 - a1, d2 = b2 - b1;
    double den = d1.real() * d2.imag() - d1.imag() * d2.real();
    Cx r = b1 - a1;
    double t = (r.real() * d2.imag() - r.imag() * d2.real()) / den;
    Cx zk = a1 + t * d1;
    Cx zp = klein_to_poincare(zk);
    if (std::abs(zp) >= 1.0 - 1e-12)
        throw std::runtime_error("geodesic_cross: crossing at the boundary guard");
    Cx du = direction_toward(zp, u.t2);
    Cx dv = direction_toward(zp, v.t2);
    double ang = std::fabs(std::arg(dv / du));  // in (0, pi]
    return Crossing{zp, ang};
}

Cx geodesic_foot(const Geodesic& g) {
    Cx u = std::polar(1.0, g.t1), v = std::polar(1.0, g.t2);
    double du = norm_angle(g.t2 - g.t1);
    if (std::fabs(du - 3.14159265358979323846) < 1e-12) return Cx{0, 0};
    Cx mid = u + v;
    mid /= std::abs(mid);
    double phi = std::min(du, kTwoPi - du) / 2.0;
    double d = std::atanh(std::cos(phi));
    return std::tanh(d / 2.0) * mid;
}

Cx direction_toward(Cx p, double theta) {
    Cx t = std::polar(1.0, theta);
    Cx w = (t - p) / (1.0 - std::conj(p) * t);
    return w / std::abs(w);
}

double arc_parameter(Cx x, Cx base, Cx toward) {
    double d = distance(x, base);
    if (d < 1e-15) return 0.0;
    Cx w = (x - base) / (1.0 - std::conj(base) * x);
    return (w / toward).real() > 0 ? d : -d;
}

Cx point_at_arc(Cx base, Cx da, double s) {
    double x = std::tanh(s / 2.0);
    return (base + da * x) / (1.0 + std::conj(base) * da * x);
}

double point_geodesic_distance(Cx z, const Geodesic& g) {
    Cx u = std::polar(1.0, g.t1), v = std::polar(1.0, g.t2);
    Cx tu = (u - z) / (1.0 - std::conj(z) * u);
    Cx tv = (v - z) / (1.0 - std::conj(z) * v);
    double du = norm_angle(std::arg(tv) - std::arg(tu));
    double phi = std::min(du, kTwoPi - du) / 2.0;
    double c = std::cos(phi);
    if (c <= 0.0) return 0.0;  // z between the endpoints' antipodes: on the geodesic side
    if (c >= 1.0) c = 1.0 - 1e-16;
    return std::atanh(c);
}

ConvexPolygon::ConvexPolygon(std::vector<Cx> verts) : vertices(std::move(verts)) {
    klein.reserve(vertices.size());
    for (Cx v : vertices) klein.push_back(poincare_to_klein(v));
}

bool ConvexPolygon::contains_klein(Cx zk, double eps) const {
    size_t n = klein.size();
    for (size_t k = 0; k < n; ++k) {
        Cx a = klein[k], b = klein[(k + 1) % n];
        Cx e = b - a;
        double cr = e.real() * (zk - a).imag() - e.imag() * (zk - a).real();
        if (cr < -eps * std::abs(e)) return false;
    }
    return true;
}

std::optional<Segment> clip_to_polygon(const Geodesic& g, const ConvexPolygon& poly,
                                       const Tolerances& tol) {
    Cx a1 = std::polar(1.0, g.t1), a2 = std::polar(1.0, g.t2);
    Cx d = a2 - a1;
    double lo = 0.0, hi = 1.0;
    int side_lo = -1, side_hi = -1;
    size_t n = poly.klein.size();
    for (size_t k = 0; k < n; ++k) {
        Cx A = poly.klein[k], B = poly.klein[(k + 1) % n];
        Cx e = B - A;
        double f1 = e.real() * (a1 - A).imag() - e.imag() * (a1 - A).real();
        double f2 = e.real() * (a2 - A).imag() - e.imag() * (a2 - A).real();
        // inside = left of each edge (ccw polygon)
        if (f1 < 0 && f2 < 0) return std::nullopt;
        double df = f2 - f1;
        if (std::fabs(df) < 1e-300) {
            if (f1 < 0) return std::nullopt;
            continue;
        }
        double tc = -f1 / df;
        if (df > 0) {
            if (tc > lo) { lo = tc; side_lo = int(k); }
        } else {
            if (tc < hi) { hi = tc; side_hi = int(k); }
        }
    }
    if (lo >= hi) return std::nullopt;
    Segment seg;
    seg.carrier = g;
    seg.p = klein_to_poincare(a1 + lo * d);
    seg.q = klein_to_poincare(a1 + hi * d);
    seg.side_p = side_lo;
    seg.side_q = side_hi;
    double len = distance(seg.p, seg.q);
    for (Cx v : poly.vertices) {
        if (distance(seg.p, v) < tol.vertex) seg.vertex_p = true;
        if (distance(seg.q, v) < tol.vertex) seg.vertex_q = true;
    }
    if (len < tol.vertex && !(seg.vertex_p && seg.vertex_q))
        throw std::runtime_error("clip_to_polygon: grazing contact below vertex tolerance");
    return seg;
}

}  // namespace bolza
