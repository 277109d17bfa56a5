#include "bolza/bolza_model.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "curve_systems_data.hpp"

namespace bolza {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kPi = 3.14159265358979323846;
}  // namespace

const GeneratorSet& generators() {
    static const GeneratorSet gs = [] {
        GeneratorSet out;
        for (int k = 0; k < 4; ++k) {
            out.g[k] = letter_matrices()[2 * k];
            if (!out.g[k].det_is_one())
                throw std::runtime_error("generators: determinant check failed");
            if (!(out.g[k].trace() == QuadInt(2, 2)))
                throw std::runtime_error("generators: trace check failed");
        }
        out.relator = bolza_words().relator();
        if (!word_to_elem(out.relator).is_identity())
            throw std::runtime_error("generators: relator does not evaluate to identity");
        return out;
    }();
    return gs;
}

const OctagonDomain& fundamental_octagon() {
    static const OctagonDomain dom = [] {
        double circum = std::acosh(3.0 + 2.0 * kSqrt2);
        double r = std::tanh(circum / 2.0);
        std::vector<Cx> verts;
        std::array<Cx, 8> varr;
        for (int k = 0; k < 8; ++k) {
            varr[k] = std::polar(r, kPi / 8.0 + k * kPi / 4.0);
            verts.push_back(varr[k]);
        }
        std::array<Geodesic, 8> sides = [&] {
            std::array<Geodesic, 8> s;
            for (int k = 0; k < 8; ++k) {
                // side k joins vertex k-1 and vertex k; its midpoint sits at angle k pi/4
                Cx a = varr[(k + 7) % 8], b = varr[k];
                // boundary angles of the geodesic through two interior points: use the
                // Klein chord extended to the circle
                Cx ak = poincare_to_klein(a), bk = poincare_to_klein(b);
                Cx d = bk - ak;
                // solve |ak + t d| = 1
                double A = std::norm(d), B = 2 * (ak.real() * d.real() + ak.imag() * d.imag());
                double C = std::norm(ak) - 1.0;
                double disc = std::sqrt(B * B - 4 * A * C);
                double t1 = (-B - disc) / (2 * A), t2 = (-B + disc) / (2 * A);
                s[k] = Geodesic(std::arg(ak + t1 * d), std::arg(ak + t2 * d));
            }
            return s;
        }();
        return OctagonDomain{varr, sides, ConvexPolygon(verts),
                             kPi / 4.0, 2.0 * std::acosh(1.0 + kSqrt2), circum};
    }();
    return dom;
}

std::pair<Cx, GroupElem> reduce_to_domain(Cx p) {
    const OctagonDomain& dom = fundamental_octagon();
    GroupElem w = GroupElem::identity();
    for (int it = 0; it < 10000; ++it) {
        if (dom.polygon.contains_klein(poincare_to_klein(p), 1e-9)) return {p, w};
        double best = distance(p, Cx{0, 0});
        int pick = -1;
        Cx pz;
        for (int c = 0; c < 8; ++c) {
            const GroupElem& l = letter_matrices()[c];
            Cx z = Isometry::from(l).apply(p);
            double d = distance(z, Cx{0, 0});
            if (d < best - 1e-14) {
                best = d;
                pick = c;
                pz = z;
            }
        }
        if (pick < 0) return {p, w};  // boundary tie: already in the closed domain
        p = pz;
        w = letter_matrices()[pick] * w;
    }
    throw std::runtime_error("reduce_to_domain: iteration cap exceeded");
}

const std::vector<Cx>& weierstrass_points() {
    static const std::vector<Cx> pts = [] {
        const OctagonDomain& dom = fundamental_octagon();
        double mid_r = std::tanh(std::acosh(1.0 + kSqrt2) / 2.0);
        std::vector<Cx> out;
        out.push_back(Cx{0, 0});
        out.push_back(dom.vertices[0]);
        for (int k = 0; k < 4; ++k) out.push_back(std::polar(mid_r, k * kPi / 4.0));
        return out;
    }();
    return pts;
}

const std::vector<std::pair<int, Cx>>& weierstrass_lifts() {
    static const std::vector<std::pair<int, Cx>> lifts = [] {
        const OctagonDomain& dom = fundamental_octagon();
        double mid_r = std::tanh(std::acosh(1.0 + kSqrt2) / 2.0);
        std::vector<std::pair<int, Cx>> out;
        out.emplace_back(0, Cx{0, 0});
        for (int k = 0; k < 8; ++k) out.emplace_back(1, dom.vertices[k]);
        for (int k = 0; k < 8; ++k)
            out.emplace_back(2 + (k % 4), std::polar(mid_r, k * kPi / 4.0));
        return out;
    }();
    return lifts;
}

// ---- curve systems ------------------------------------------------------

namespace {

CurveSystem load_system(const nlohmann::json& arr, const std::string& name,
                        size_t expected, double expected_length) {
    CurveSystem sys;
    sys.name = name;
    std::set<CyclicKey> keys;
    for (const auto& row : arr) {
        auto w = parse_word(row.at("word").get<std::string>());
        if (!w) throw std::runtime_error("curve data: bad word in " + name);
        CurveClass c = make_curve_class(*w, true);
        QuadInt want(row.at("trace_p").get<int64_t>(), row.at("trace_q").get<int64_t>());
        if (!(c.trace_exact == want))
            throw std::runtime_error("curve data: trace certificate mismatch for " +
                                     word_str(*w));
        if (std::fabs(c.length - expected_length) > 1e-9)
            throw std::runtime_error("curve data: length certificate mismatch for " +
                                     word_str(*w));
        if (!c.simple)
            throw std::runtime_error("curve data: class not simple: " + word_str(*w));
        if (!keys.insert(c.key).second)
            throw std::runtime_error("curve data: duplicate class in " + name);
        sys.classes.push_back(std::move(c));
    }
    if (sys.classes.size() != expected)
        throw std::runtime_error("curve data: wrong cardinality for " + name);
    return sys;
}

struct SystemsBundle {
    CurveSystem om1, om2, sys, second;
};

const SystemsBundle& systems() {
    static const SystemsBundle bundle = [] {
        nlohmann::json j;
        {
            std::ifstream f("data/curve_systems.json");
            if (f.good())
                f >> j;
            else
                j = nlohmann::json::parse(detail::kCurveSystemsJson);
        }
        if (j.at("version").get<int>() != 1)
            throw std::runtime_error("curve data: unsupported version");
        Word rel = *parse_word(j.at("relator").get<std::string>());
        if (!word_to_elem(rel).is_identity())
            throw std::runtime_error("curve data: stored relator is not a relation");
        double l1 = 2.0 * std::acosh(1.0 + kSqrt2);
        double l2 = 2.0 * std::acosh(3.0 + 2.0 * kSqrt2);
        SystemsBundle b;
        b.om1 = load_system(j.at("systems").at("omega1"), "omega1", 4, l1);
        b.om2 = load_system(j.at("systems").at("omega2"), "omega2", 8, l1);
        b.second = load_system(j.at("systems").at("second_systoles"), "second_systoles", 12, l2);
        // omega1 members avoid the center and vertex Weierstrass points
        for (const CurveClass& c : b.om1.classes) {
            for (const auto& [idx, pt] : weierstrass_lifts()) {
                if (idx > 1) continue;
                for (const AxisLift& ax : c.axes)
                    if (point_geodesic_distance(pt, ax.geo) < 1e-7)
                        throw std::runtime_error(
                            "curve data: omega1 class passes a center/vertex point");
            }
        }
        b.sys.name = "systolic_set";
        b.sys.classes = b.om1.classes;
        b.sys.classes.insert(b.sys.classes.end(), b.om2.classes.begin(), b.om2.classes.end());
        return b;
    }();
    return bundle;
}

}  // namespace

const CurveSystem& omega1() { return systems().om1; }
const CurveSystem& omega2() { return systems().om2; }
const CurveSystem& systolic_set() { return systems().sys; }
const CurveSystem& second_systoles() { return systems().second; }

// ---- special isometries --------------------------------------------------

namespace {

// canonical coset representative of f * Gamma via a generic interior point
Isometry canon_coset(const Isometry& f) {
    const Cx probe{0.1, 0.037};
    auto [z, w] = reduce_to_domain(f.apply(probe));
    (void)z;
    Isometry rep = compose(Isometry::from(w), f);
    if (rep.a.real() < -1e-7 ||
        (std::fabs(rep.a.real()) < 1e-7 && rep.a.imag() < 0)) {
        rep = Isometry(-rep.a, -rep.b);
    }
    return rep;
}

struct CosetKey {
    int64_t v[4];
    bool operator<(const CosetKey& o) const {
        for (int i = 0; i < 4; ++i)
            if (v[i] != o.v[i]) return v[i] < o.v[i];
        return false;
    }
};

CosetKey coset_key(const Isometry& f) {
    auto q = [](double x) { return (int64_t)std::llround(x * 1e6); };
    return CosetKey{{q(f.a.real()), q(f.a.imag()), q(f.b.real()), q(f.b.imag())}};
}

}  // namespace

const SpecialIsometries& special_isometries() {
    static const SpecialIsometries si = [] {
        SpecialIsometries out;
        out.R = Isometry::rotation(kPi / 4.0);
        out.J = Isometry::rotation(kPi);
        // L: 2pi/3 rotation about the incenter of the (4,4,4) face with
        // vertices {center, midpoint 0, midpoint 1}
        double cosh_rho = std::sqrt((2.0 * (1.0 + kSqrt2) + 1.0) / 3.0);
        double rho = std::acosh(cosh_rho);
        Cx pc = std::polar(std::tanh(rho / 2.0), kPi / 8.0);
        Isometry t = Isometry::translation_to(pc);
        out.L = compose(compose(t, Isometry::rotation(2.0 * kPi / 3.0)), t.inverse());

        // certificates
        auto near_identity = [](const Isometry& f) {
            double d = std::min(std::abs(f.a - Cx{1, 0}) + std::abs(f.b),
                                std::abs(f.a + Cx{1, 0}) + std::abs(f.b));
            return d < 1e-9;
        };
        Isometry r8 = Isometry::identity();
        for (int i = 0; i < 8; ++i) r8 = compose(r8, out.R);
        Isometry l3 = compose(compose(out.L, out.L), out.L);
        Isometry j2 = compose(out.J, out.J);
        if (!near_identity(r8) || !near_identity(l3) || !near_identity(j2))
            throw std::runtime_error("special_isometries: order certificate failed");
        // R and L normalize Gamma: conjugates of generators land back in the group
        static const std::vector<GroupElem> ball = element_ball(8.2);
        auto in_gamma = [&](const Isometry& f) {
            for (const GroupElem& g : ball) {
                Cx ga = g.a_cx(), gb = g.b_cx();
                if ((std::abs(f.a - ga) < 1e-7 && std::abs(f.b - gb) < 1e-7) ||
                    (std::abs(f.a + ga) < 1e-7 && std::abs(f.b + gb) < 1e-7))
                    return true;
            }
            return false;
        };
        for (int k = 0; k < 4; ++k) {
            Isometry gk = Isometry::from(generators().g[k]);
            if (!in_gamma(compose(compose(out.R, gk), out.R.inverse())) ||
                !in_gamma(compose(compose(out.L, gk), out.L.inverse())))
                throw std::runtime_error("special_isometries: normalization certificate failed");
        }
        // closure of <R, L> acting on the quotient
        std::map<CosetKey, Isometry> seen;
        Isometry id_rep = canon_coset(Isometry::identity());
        seen[coset_key(id_rep)] = id_rep;
        std::vector<Isometry> frontier{id_rep};
        while (!frontier.empty()) {
            std::vector<Isometry> next;
            for (const Isometry& f : frontier) {
                for (const Isometry* gg : {&out.R, &out.L}) {
                    Isometry h = canon_coset(compose(f, *gg));
                    CosetKey k = coset_key(h);
                    if (!seen.count(k)) {
                        seen[k] = h;
                        next.push_back(h);
                    }
                }
            }
            frontier = std::move(next);
            if (seen.size() > 1000)
                throw std::runtime_error("special_isometries: closure did not stabilize");
        }
        for (auto& [k, f] : seen) out.closure.push_back(f);
        return out;
    }();
    return si;
}

std::string curve_systems_json() {
    nlohmann::json j;
    j["version"] = 1;
    j["relator"] = word_str(bolza_words().relator());
    auto dump = [](const CurveSystem& s) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CurveClass& c : s.classes) {
            nlohmann::json row;
            row["word"] = word_str(c.word);
            row["trace_p"] = c.trace_exact.p;
            row["trace_q"] = c.trace_exact.q;
            row["length"] = c.length;
            arr.push_back(row);
        }
        return arr;
    };
    j["systems"]["omega1"] = dump(omega1());
    j["systems"]["omega2"] = dump(omega2());
    j["systems"]["second_systoles"] = dump(second_systoles());
    return j.dump(1);
}

void rebuild_certificates(const std::string& path) {
    // Re-derive the systems from a fresh enumeration, then overwrite the file.
    EnumerationOptions opt;
    double l1 = 2.0 * std::acosh(1.0 + kSqrt2);
    double l2 = 2.0 * std::acosh(3.0 + 2.0 * kSqrt2);
    auto classes = enumerate_classes(l2 + 1e-6, opt);
    CurveSystem om1{"omega1", {}}, om2{"omega2", {}}, second{"second_systoles", {}};
    for (const CurveClass& c : classes) {
        if (std::fabs(c.length - l1) < 1e-9) {
            bool through_cv = false;
            for (const auto& [idx, pt] : weierstrass_lifts()) {
                if (idx > 1) continue;
                for (const AxisLift& ax : c.axes)
                    if (point_geodesic_distance(pt, ax.geo) < 1e-7) through_cv = true;
            }
            (through_cv ? om2 : om1).classes.push_back(c);
        } else if (std::fabs(c.length - l2) < 1e-9) {
            second.classes.push_back(c);
        }
    }
    if (om1.classes.size() != 4 || om2.classes.size() != 8 || second.classes.size() != 12)
        throw std::runtime_error("rebuild_certificates: census mismatch");
    nlohmann::json j;
    j["version"] = 1;
    j["relator"] = word_str(bolza_words().relator());
    auto dump = [](const CurveSystem& s) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CurveClass& c : s.classes) {
            nlohmann::json row;
            row["word"] = word_str(c.word);
            row["trace_p"] = c.trace_exact.p;
            row["trace_q"] = c.trace_exact.q;
            row["length"] = c.length;
            arr.push_back(row);
        }
        return arr;
    };
    j["systems"]["omega1"] = dump(om1);
    j["systems"]["omega2"] = dump(om2);
    j["systems"]["second_systoles"] = dump(second);
    std::ofstream f(path);
    f << j.dump(1) << "\n";
    if (!f.good()) throw std::runtime_error("rebuild_certificates: write failed");
}

}  // namespace bolza
