#include "bolza/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bolza/intersection.hpp"

namespace bolza {

namespace {
const double kPi = 3.14159265358979323846;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// SVG coordinates: unit disc mapped to a centered square, y flipped
struct Mapper {
    double half;
    explicit Mapper(int size) : half(size / 2.0) {}
    double x(double u) const { return half + u * half * 0.98; }
    double y(double v) const { return half - v * half * 0.98; }
};

// full geodesic between boundary angles as an SVG path (arc or chord)
std::string geodesic_path(const Mapper& m, double t1, double t2) {
    double gap = std::fmod(std::fabs(t1 - t2), 2 * kPi);
    if (gap > kPi) gap = 2 * kPi - gap;
    Cx u = std::polar(1.0, t1), v = std::polar(1.0, t2);
    std::ostringstream os;
    if (std::fabs(gap - kPi) < 1e-9) {
        os << "M " << fmt(m.x(u.real())) << " " << fmt(m.y(u.imag())) << " L "
           << fmt(m.x(v.real())) << " " << fmt(m.y(v.imag()));
        return os.str();
    }
    // circle orthogonal to the unit circle through u, v
    Cx c = (u + v) / (1.0 + (u * std::conj(v)).real());
    double r = std::abs(u - c);
    double rr = r * m.half * 0.98;
    // sweep flag: pick the arc inside the disc (the minor arc w.r.t. the center c)
    double cross = (u - c).real() * (v - c).imag() - (u - c).imag() * (v - c).real();
    int sweep = cross > 0 ? 0 : 1;  // y axis flipped in SVG
    os << "M " << fmt(m.x(u.real())) << " " << fmt(m.y(u.imag())) << " A " << fmt(rr) << " "
       << fmt(rr) << " 0 0 " << sweep << " " << fmt(m.x(v.real())) << " "
       << fmt(m.y(v.imag()));
    return os.str();
}

// geodesic segment between two interior points
std::string segment_path(const Mapper& m, Cx p, Cx q) {
    Cx pk = poincare_to_klein(p), qk = poincare_to_klein(q);
    Cx d = qk - pk;
    double A = std::norm(d);
    double B = 2 * (pk.real() * d.real() + pk.imag() * d.imag());
    double C = std::norm(pk) - 1.0;
    double disc = std::sqrt(std::max(B * B - 4 * A * C, 0.0));
    double t1 = (-B - disc) / (2 * A), t2 = (-B + disc) / (2 * A);
    double a1 = std::arg(pk + t1 * d), a2 = std::arg(pk + t2 * d);
    double gap = std::fmod(std::fabs(a1 - a2), 2 * kPi);
    if (gap > kPi) gap = 2 * kPi - gap;
    std::ostringstream os;
    if (std::fabs(gap - kPi) < 1e-9) {
        os << "M " << fmt(m.x(p.real())) << " " << fmt(m.y(p.imag())) << " L "
           << fmt(m.x(q.real())) << " " << fmt(m.y(q.imag()));
        return os.str();
    }
    Cx u = std::polar(1.0, a1), v = std::polar(1.0, a2);
    Cx c = (u + v) / (1.0 + (u * std::conj(v)).real());
    double r = std::abs(u - c) * m.half * 0.98;
    double cross = (p - c).real() * (q - c).imag() - (p - c).imag() * (q - c).real();
    int sweep = cross > 0 ? 0 : 1;
    os << "M " << fmt(m.x(p.real())) << " " << fmt(m.y(p.imag())) << " A " << fmt(r) << " "
       << fmt(r) << " 0 0 " << sweep << " " << fmt(m.x(q.real())) << " "
       << fmt(m.y(q.imag()));
    return os.str();
}

Cx apply_elem(const GroupElem& g, Cx z) {
    Cx a = g.a_cx(), b = g.b_cx();
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
}

const char* system_color(const std::string& name) {
    if (name == "omega1") return "#c62828";
    if (name == "omega2") return "#1565c0";
    if (name == "sys") return "#6a1b9a";
    if (name == "second") return "#2e7d32";
    if (name == "gamma") return "#ef6c00";
    return "#37474f";
}
}  // namespace

std::string render_svg(const RenderSpec& spec) {
    if (spec.tile_depth > 6) throw std::invalid_argument("render: tile depth > 6");
    Mapper m(spec.size_px);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size_px
       << "\" height=\"" << spec.size_px << "\" viewBox=\"0 0 " << spec.size_px << " "
       << spec.size_px << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<circle cx=\"" << fmt(m.half) << "\" cy=\"" << fmt(m.half) << "\" r=\""
       << fmt(m.half * 0.98) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // octagon tiles
    const OctagonDomain& dom = fundamental_octagon();
    std::vector<GroupElem> tiles{GroupElem::identity()};
    if (spec.tile_depth > 0) {
        std::set<std::string> words;
        const WordSystem& ws = bolza_words();
        for (const Word& w : ws.enumerate_words(spec.tile_depth)) {
            tiles.push_back(word_to_elem(w));
        }
    }
    os << "<g stroke=\"#9e9e9e\" stroke-width=\"0.6\" fill=\"none\">\n";
    for (const GroupElem& t : tiles) {
        for (int k = 0; k < 8; ++k) {
            Cx a = apply_elem(t, dom.vertices[k]);
            Cx b = apply_elem(t, dom.vertices[(k + 1) % 8]);
            os << "<path d=\"" << segment_path(m, a, b) << "\"/>\n";
        }
    }
    os << "</g>\n";

    auto draw_system = [&](const CurveSystem& sys, const char* color) {
        os << "<g stroke=\"" << color << "\" stroke-width=\"1.2\" fill=\"none\">\n";
        for (const CurveClass& c : sys.classes)
            for (const AxisLift& ax : c.axes)
                os << "<path d=\"" << geodesic_path(m, ax.geo.t1, ax.geo.t2) << "\"/>\n";
        os << "</g>\n";
    };

    for (const std::string& name : spec.systems) {
        if (name == "omega1") draw_system(omega1(), system_color(name));
        else if (name == "omega2") draw_system(omega2(), system_color(name));
        else if (name == "sys") draw_system(systolic_set(), system_color(name));
        else if (name == "second") draw_system(second_systoles(), system_color(name));
        else if (name == "gamma") {
            CurveSystem gs;
            gs.name = "gamma";
            for (auto& e : gamma_set()) gs.classes.push_back(e.cls);
            draw_system(gs, system_color(name));
        } else {
            throw std::invalid_argument("render: unknown system " + name);
        }
    }
    if (!spec.custom_words.empty()) {
        CurveSystem cs;
        cs.name = "custom";
        for (const std::string& wstr : spec.custom_words) {
            auto w = parse_word(wstr);
            if (!w) throw std::invalid_argument("render: bad word " + wstr);
            cs.classes.push_back(make_curve_class(*w));
        }
        draw_system(cs, system_color("custom"));
    }

    if (spec.weierstrass_dots) {
        os << "<g fill=\"black\">\n";
        for (const auto& [idx, p] : weierstrass_lifts())
            os << "<circle cx=\"" << fmt(m.x(p.real())) << "\" cy=\"" << fmt(m.y(p.imag()))
               << "\" r=\"3\"/>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bolza
