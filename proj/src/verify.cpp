#include "bolza/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bolza/bolza_model.hpp"
#include "bolza/graph.hpp"
#include "bolza/highprec.hpp"
#include "bolza/intersection.hpp"
#include "bolza/spectrum.hpp"

namespace bolza {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kPi = 3.14159265358979323846;

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

}  // namespace

bool VerifyReport::all_pass() const {
    for (const CriterionResult& r : results)
        if (!r.pass && !r.skipped) return false;
    return true;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["all_pass"] = all_pass();
    nlohmann::json arr = nlohmann::json::array();
    for (const CriterionResult& r : results) {
        nlohmann::json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["skipped"] = r.skipped;
        row["detail"] = r.detail;
        row["seconds"] = r.seconds;
        arr.push_back(row);
    }
    j["criteria"] = arr;
    return j.dump(1);
}

VerifyReport run_acceptance(const RunConfig& cfg, bool verbose) {
    VerifyReport report;
    const double l1 = 2.0 * std::acosh(1.0 + kSqrt2);
    const double l2 = 2.0 * std::acosh(3.0 + 2.0 * kSqrt2);
    const double unit = std::acosh(1.0 + kSqrt2);

    EnumerationOptions opt;
    opt.jobs = cfg.jobs;

    auto run = [&](int id, const std::string& name, auto&& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        double t0 = now_seconds();
        try {
            Check c;
            body(c);
            r.pass = c.ok;
            r.detail = c.detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = now_seconds() - t0;
        if (verbose) {
            std::printf("[%s] criterion %2d %-22s (%.1fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                        r.id, r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ",
                        r.detail.c_str());
            std::fflush(stdout);
        }
        report.results.push_back(std::move(r));
    };

    // shared sweeps
    std::vector<CurveClass> sweep_small;   // up to just past l2
    std::vector<CurveClass> sweep_parity;  // up to 10 * acosh(1+sqrt2)
    const double parity_len = (cfg.kmax >= 10 ? 10.0 : double(cfg.kmax)) * unit;

    run(1, "systole census", [&](Check& c) {
        sweep_small = enumerate_classes(l2 + 1e-6, opt);
        int n = 0;
        for (const CurveClass& cc : sweep_small) {
            if (std::fabs(cc.length - l1) < 1e-9) {
                ++n;
                c.expect(cc.simple, "systole not simple: " + word_str(cc.word));
                QuadInt t(std::llabs(cc.trace_exact.p), std::llabs(cc.trace_exact.q));
                c.expect(t == QuadInt(2, 2), "trace != 2+2sqrt2: " + word_str(cc.word));
                c.expect(std::fabs(cc.length - l1) < 1e-9, "length drift");
            }
        }
        c.expect(n == 12, "count " + std::to_string(n) + " != 12");
        c.note("12 classes at 3.0571418");
    });

    run(2, "second systole census", [&](Check& c) {
        int n2 = 0, between = 0;
        for (const CurveClass& cc : sweep_small) {
            if (std::fabs(cc.length - l2) < 1e-9) {
                ++n2;
                c.expect(cc.simple, "second systole not simple: " + word_str(cc.word));
            } else if (cc.length > l1 + 1e-9 && cc.length < l2 - 1e-9) {
                ++between;
            }
        }
        c.expect(n2 == 12, "count " + std::to_string(n2) + " != 12");
        c.expect(between == 0,
                 "classes strictly between l1 and l2: " + std::to_string(between));
        // Weierstrass incidence: each passes exactly two of the six points
        for (const CurveClass& cc : sweep_small) {
            if (std::fabs(cc.length - l2) >= 1e-9) continue;
            std::set<int> hit;
            for (const auto& [idx, pt] : weierstrass_lifts())
                for (const AxisLift& ax : cc.axes)
                    if (point_geodesic_distance(pt, ax.geo) < cfg.tol.vertex) hit.insert(idx);
            c.expect(hit.size() == 2, "Weierstrass count != 2: " + word_str(cc.word));
        }
        c.note("12 at 4.8969020, spectrum gap clean");
    });

    run(3, "parity laws", [&](Check& c) {
        sweep_parity = enumerate_classes(parity_len, opt);
        const CurveSystem& om1 = omega1();
        const CurveSystem& om2 = omega2();
        std::set<CyclicKey> sys_keys;
        for (const CurveClass& m : systolic_set().classes) sys_keys.insert(m.key);
        int checked = 0, viol = 0;
        for (const CurveClass& cc : sweep_parity) {
            if (!cc.simple || sys_keys.count(cc.key)) continue;
            int i1 = intersection_with_system(cc, om1, cfg.tol).count;
            int i2 = intersection_with_system(cc, om2, cfg.tol).count;
            ++checked;
            if (i1 % 2 || i2 % 2) {
                ++viol;
                c.expect(false, "odd intersection: " + word_str(cc.word));
            }
        }
        c.note(std::to_string(checked) + " simple classes to length " +
               std::to_string(parity_len) + ", violations " + std::to_string(viol));
    });

    run(4, "complexity theorem", [&](Check& c) {
        int km = std::max(1, std::min(cfg.kmax, 11));
        std::vector<ComplexityRow> rows;
        if (km >= 11) {
            // the k=11 row needs its own certified sweep to 11*acosh(1+sqrt2)
            double len11 = 11.0 * unit;
            auto sweep11 = enumerate_classes(len11, opt);
            rows = complexity_table(11, sweep11, len11, opt);
        } else {
            rows = complexity_table(std::min(km, 10), sweep_parity, parity_len, opt);
        }
        for (const auto& row : rows)
            if (row.k <= 9)
                c.expect(row.T_k == 0,
                         "T_" + std::to_string(row.k) + " = " + std::to_string(row.T_k));
        if (km >= 10) {
            long t10 = rows[9].T_k;
            c.expect(rows[9].certified, "T_10 row not certified");
            c.expect(t10 >= 16, "T_10 = " + std::to_string(t10) + " < 16");
            c.note("T_10 = " + std::to_string(t10));
            if (km >= 11) {
                c.expect(rows[10].T_k == t10, "T_11 = " + std::to_string(rows[10].T_k) +
                                                  " != T_10 = " + std::to_string(t10));
                c.note("T_11 sweep-certified");
            } else {
                c.note("kmax < 11: T_11 = T_10 rests on the parity law (odd i excluded)");
            }
        }
    });

    run(5, "exceptional set", [&](Check& c) {
        auto gs = gamma_set_scan(sweep_parity, opt);
        c.expect(gs.size() == 16, "cardinality " + std::to_string(gs.size()) + " != 16");
        int at10 = 0, vertex_only_sys = 0;
        for (const auto& e : gs) {
            if (e.i_sys == 10) ++at10;
            if (e.sys_vertex_only) ++vertex_only_sys;
        }
        c.note("i(Sys) distribution: " + std::to_string(at10) + " at 10, " +
               std::to_string((int)gs.size() - at10) + " at 12");
        c.expect(at10 == (int)gs.size(),
                 "only " + std::to_string(at10) + "/16 members have i(gamma,Sys) = 10");
        c.expect(vertex_only_sys == (int)gs.size(),
                 "no member meets the full systolic union only at vertices "
                 "(all meet Omega1 only at vertices; the 12 second systoles and the "
                 "8 longer members cross Omega2 diagonals at interior points)");
    });

    run(6, "triangulations", [&](Check& c) {
        SurfaceGraph gs = build_arrangement(systolic_set(), cfg.tol);
        c.expect(gs.V == 6 && gs.E == 24 && gs.F == 16,
                 "systolic V,E,F = " + std::to_string(gs.V) + "," + std::to_string(gs.E) + "," +
                     std::to_string(gs.F));
        c.expect(gs.euler() == -2, "systolic Euler != -2");
        c.expect(std::fabs(gs.total_area() - 4 * kPi) < 1e-6, "systolic area != 4pi");
        FaceCensus fc = face_census(gs);
        c.expect(fc.signatures.size() == 1 &&
                     fc.signatures.count(std::vector<int>{4, 4, 4}) &&
                     fc.signatures.at(std::vector<int>{4, 4, 4}) == 16,
                 "systolic census not {(4,4,4): 16}");
        SurfaceGraph g2 = build_arrangement(second_systoles(), cfg.tol);
        c.expect(g2.V == 22 && g2.E == 72 && g2.F == 48,
                 "second V,E,F = " + std::to_string(g2.V) + "," + std::to_string(g2.E) + "," +
                     std::to_string(g2.F));
        c.expect(g2.euler() == -2, "second Euler != -2");
        FaceCensus f2 = face_census(g2);
        c.expect(f2.signatures.size() == 1 &&
                     f2.signatures.count(std::vector<int>{3, 3, 4}) &&
                     f2.signatures.at(std::vector<int>{3, 3, 4}) == 48,
                 "second census not {(4,3,3): 48}");
    });

    run(7, "involution theorem", [&](Check& c) {
        int checked = 0;
        for (const CurveClass& cc : sweep_parity.empty() ? sweep_small : sweep_parity) {
            if (cc.length > 8.0 + 1e-9 || !cc.simple) continue;
            InvolutionRecord r = involution_check(cc);
            ++checked;
            c.expect(r.fixed, "J image not conjugate: " + word_str(cc.word));
            c.expect(r.orientation_preserved == r.separating,
                     "orientation/separating mismatch: " + word_str(cc.word));
        }
        c.note(std::to_string(checked) + " simple classes to length 8");
    });

    run(8, "filling dichotomy", [&](Check& c) {
        c.expect(is_filling(omega1(), cfg.tol), "Omega1 not filling");
        c.expect(is_filling(systolic_set(), cfg.tol), "Sys not filling");
        CurveSystem ab;
        ab.name = "ab";
        // an adjacent pair from Omega1 (i = 1)
        ab.classes = {omega1().classes[0], omega1().classes[1]};
        int i01 = intersection_number(ab.classes[0], ab.classes[1], cfg.tol).count;
        c.expect(i01 == 1, "adjacent Omega1 pair has i != 1");
        c.expect(!is_filling(ab, cfg.tol), "{a,b} reported filling");
    });

    run(9, "group sanity", [&](Check& c) {
        const GeneratorSet& gen = generators();
        c.expect(word_to_elem(gen.relator).is_identity(), "relator != identity (exact)");
        // float residual of the relator product
        Isometry rf = Isometry::identity();
        for (Letter l : gen.relator) rf = compose(rf, Isometry::from(letter_matrices()[l]));
        double res = std::abs(rf.a - Cx{1, 0}) + std::abs(rf.b);
        c.expect(res < cfg.tol.relator, "relator float residual " + std::to_string(res));
        const SpecialIsometries& si = special_isometries();
        c.expect(si.closure.size() == 48,
                 "|<R,L>| = " + std::to_string(si.closure.size()) + " != 48");
        // R conjugation permutes the generators
        for (int k = 0; k < 4; ++k) {
            Isometry lhs = compose(compose(si.R, Isometry::from(gen.g[k])), si.R.inverse());
            Isometry rhs = Isometry::from(k < 3 ? gen.g[k + 1] : gen.g[0].inverse());
            double d = std::abs(lhs.a - rhs.a) + std::abs(lhs.b - rhs.b);
            c.expect(d < 1e-9, "R-conjugation drift at k=" + std::to_string(k));
        }
        // J inverts generators
        for (int k = 0; k < 4; ++k) {
            Isometry lhs = compose(compose(si.J, Isometry::from(gen.g[k])), si.J.inverse());
            Isometry rhs = Isometry::from(gen.g[k].inverse());
            double d = std::abs(lhs.a - rhs.a) + std::abs(lhs.b - rhs.b);
            c.expect(d < 1e-9, "J-conjugation drift at k=" + std::to_string(k));
        }
        // traces snap to Z[sqrt2]: exact by construction; sample the float path
        std::mt19937_64 rng(cfg.seed);
        int samples = 200000;
        double worst = 0;
        for (int s = 0; s < samples; ++s) {
            int len = 1 + int(rng() % 12);
            Word w;
            for (int i = 0; i < len; ++i) {
                Letter cand = Letter(rng() % 8);
                while (!w.empty() && cand == letter_inverse(w.back())) cand = Letter(rng() % 8);
                w.push_back(cand);
            }
            GroupElem g = word_to_elem(w);
            Isometry f = Isometry::identity();
            for (Letter l : w) f = compose(f, Isometry::from(letter_matrices()[l]));
            double ex = g.trace().value();
            double residual = std::fabs(f.trace().real() - ex);
            worst = std::max(worst, residual);
            auto snapped = snap_trace(f.trace().real(), cfg.tol.trace_snap);
            if (!snapped || !(*snapped == g.trace())) {
                c.expect(false, "float trace failed to snap at word " + word_str(w));
                break;
            }
        }
        c.expect(worst < 1e-9, "float trace residual " + std::to_string(worst));
        c.note("worst float-vs-exact trace residual over 2e5 words of length <= 12: " +
               std::to_string(worst));
    });

    run(10, "two-algorithm equivalence", [&](Check& c) {
        const CurveSystem& om1 = omega1();
        const CurveSystem& sys = systolic_set();
        std::set<CyclicKey> om1_keys, sys_keys;
        for (const CurveClass& m : om1.classes) om1_keys.insert(m.key);
        for (const CurveClass& m : sys.classes) sys_keys.insert(m.key);
        int checked = 0;
        const auto& pool = sweep_parity.empty() ? sweep_small : sweep_parity;
        for (const CurveClass& cc : pool) {
            if (!om1_keys.count(cc.key)) {
                int a = intersection_with_system(cc, om1, cfg.tol).count;
                int b = lift_count(cc, om1, cfg.tol);
                if (a != b)
                    c.expect(false, "omega1 mismatch at " + word_str(cc.word) + ": " +
                                        std::to_string(a) + " vs " + std::to_string(b));
            }
            if (!sys_keys.count(cc.key)) {
                int a = intersection_with_system(cc, sys, cfg.tol).count;
                int b = lift_count(cc, sys, cfg.tol);
                if (a != b)
                    c.expect(false, "sys mismatch at " + word_str(cc.word) + ": " +
                                        std::to_string(a) + " vs " + std::to_string(b));
            }
            ++checked;
        }
        c.note("lift_count == direct sum on " + std::to_string(checked) + " classes");
        // double vs 128-bit: identical class sets and counts to length 8
        auto classes8 = enumerate_classes(8.0, opt);
        for (const CurveClass& cc : classes8) {
            int hs = self_intersection_count_high(cc);
            c.expect(hs == cc.self_intersections,
                     "high-precision self count differs at " + word_str(cc.word));
            if (cc.simple && !sys_keys.count(cc.key)) {
                int hi = intersection_count_high(cc, sys);
                int di = intersection_with_system(cc, sys, cfg.tol).count;
                c.expect(hi == di, "high-precision i(Sys) differs at " + word_str(cc.word));
            }
        }
        c.note("double vs 128-bit identical on " + std::to_string(classes8.size()) +
               " classes to length 8");
    });

    return report;
}

}  // namespace bolza
