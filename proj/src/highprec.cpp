#include "bolza/highprec.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace bolza {

namespace {

namespace mp = boost::multiprecision;
using R128 = mp::number<mp::cpp_bin_float<128, mp::digit_base_2>, mp::et_off>;

struct C128 {
    R128 re, im;
    C128() : re(0), im(0) {}
    C128(R128 r, R128 i) : re(std::move(r)), im(std::move(i)) {}
    friend C128 operator+(const C128& a, const C128& b) { return {a.re + b.re, a.im + b.im}; }
    friend C128 operator-(const C128& a, const C128& b) { return {a.re - b.re, a.im - b.im}; }
    friend C128 operator*(const C128& a, const C128& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    C128 conj() const { return {re, -im}; }
    R128 norm() const { return re * re + im * im; }
    friend C128 operator/(const C128& a, const C128& b) {
        R128 n = b.norm();
        C128 num = a * b.conj();
        return {num.re / n, num.im / n};
    }
};

R128 sqrt2_hp() {
    static const R128 v = sqrt(R128(2));
    return v;
}
R128 beta_hp() {
    static const R128 v = sqrt(R128(1) + sqrt2_hp());
    return v;
}
R128 pi_hp() {
    static const R128 v = 4 * atan(R128(1));
    return v;
}

C128 zg_hp(const ZGauss& z) {
    return {R128(z.re.p) + R128(z.re.q) * sqrt2_hp(),
            R128(z.im.p) + R128(z.im.q) * sqrt2_hp()};
}

struct Ax128 {
    R128 t1, t2;  // boundary angles
};

R128 norm_ang(R128 t) {
    R128 tp = 2 * pi_hp();
    while (t < 0) t += tp;
    while (t >= tp) t -= tp;
    return t;
}

Ax128 axis_hp(const GroupElem& g) {
    C128 a = zg_hp(g.a);
    C128 b = zg_hp(g.b);
    b = {b.re * beta_hp(), b.im * beta_hp()};
    R128 s = sqrt(a.re * a.re - 1);
    C128 bb = b.conj();
    C128 z1 = C128{s, a.im} / bb;
    C128 z2 = C128{-s, a.im} / bb;
    return {norm_ang(atan2(z1.im, z1.re)), norm_ang(atan2(z2.im, z2.re))};
}

bool interleave_hp(const Ax128& u, const Ax128& v) {
    R128 tp = 2 * pi_hp();
    auto between = [&](const R128& a, const R128& x, const R128& b) {
        R128 xa = x - a;
        while (xa < 0) xa += tp;
        R128 ba = b - a;
        while (ba < 0) ba += tp;
        return xa < ba;
    };
    return between(u.t1, v.t1, u.t2) != between(u.t1, v.t2, u.t2);
}

bool same_axis_hp(const Ax128& u, const Ax128& v) {
    R128 tp = 2 * pi_hp();
    auto eq = [&](R128 a, R128 b) {
        R128 d = abs(a - b);
        return d < R128(1e-25) || abs(d - tp) < R128(1e-25);
    };
    return (eq(u.t1, v.t1) && eq(u.t2, v.t2)) || (eq(u.t1, v.t2) && eq(u.t2, v.t1));
}

C128 cross_klein_hp(const Ax128& u, const Ax128& v) {
    C128 a1{cos(u.t1), sin(u.t1)}, a2{cos(u.t2), sin(u.t2)};
    C128 b1{cos(v.t1), sin(v.t1)}, b2{cos(v.t2), sin(v.t2)};
    C128 d1 = a2 - a1, d2 = b2 - b1;
    R128 den = d1.re * d2.im - d1.im * d2.re;
    C128 r = b1 - a1;
    R128 t = (r.re * d2.im - r.im * d2.re) / den;
    return {a1.re + t * d1.re, a1.im + t * d1.im};
}

// half-open octagon membership in Klein coordinates
bool halfopen_hp(const C128& zk) {
    static const std::vector<C128> verts = [] {
        std::vector<C128> out;
        R128 circ = acosh(R128(3) + 2 * sqrt2_hp());
        R128 r = tanh(circ / 2);
        // Klein radius of the vertices
        R128 rk = 2 * r / (1 + r * r);
        for (int k = 0; k < 8; ++k) {
            R128 th = pi_hp() / 8 + k * pi_hp() / 4;
            out.push_back({rk * cos(th), rk * sin(th)});
        }
        return out;
    }();
    const R128 eps(1e-25);
    int onside = -1, count = 0;
    for (int k = 0; k < 8; ++k) {
        C128 a = verts[k], b = verts[(k + 1) % 8];
        C128 e = b - a;
        R128 cr = e.re * (zk.im - a.im) - e.im * (zk.re - a.re);
        R128 el = sqrt(e.norm());
        if (cr < -eps * el) return false;
        if (abs(cr) < eps * el) {
            onside = k;
            ++count;
        }
    }
    if (count == 0) return true;
    if (count >= 2) {
        // vertex; keep only vertex 0 at angle pi/8
        R128 th = atan2(zk.im, zk.re);
        return abs(th - pi_hp() / 8) < R128(1e-20);
    }
    return onside < 4;
}

}  // namespace

int intersection_count_high(const CurveClass& c, const CurveSystem& S) {
    std::vector<Ax128> xs;
    for (const AxisLift& x : c.axes) xs.push_back(axis_hp(x.conj));
    int count = 0;
    for (const CurveClass& m : S.classes) {
        if (m.key == c.key) throw std::invalid_argument("intersection_count_high: member");
        for (const AxisLift& y : m.axes) {
            Ax128 ya = axis_hp(y.conj);
            for (const Ax128& xa : xs) {
                if (same_axis_hp(xa, ya)) continue;
                if (!interleave_hp(xa, ya)) continue;
                if (halfopen_hp(cross_klein_hp(xa, ya))) ++count;
            }
        }
    }
    return count;
}

int self_intersection_count_high(const CurveClass& c) {
    std::vector<Ax128> xs;
    for (const AxisLift& x : c.axes) xs.push_back(axis_hp(x.conj));
    int count = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = i + 1; j < xs.size(); ++j) {
            if (same_axis_hp(xs[i], xs[j])) continue;
            if (!interleave_hp(xs[i], xs[j])) continue;
            if (halfopen_hp(cross_klein_hp(xs[i], xs[j]))) ++count;
        }
    }
    return count;
}

}  // namespace bolza
