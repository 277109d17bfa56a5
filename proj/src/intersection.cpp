#include "bolza/intersection.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace bolza {

namespace {
const double kSqrt2 = std::sqrt(2.0);

bool near_weierstrass(Cx z, double eps) {
    for (const auto& [idx, pt] : weierstrass_lifts())
        if (distance(z, pt) < eps) return true;
    return false;
}

Cx apply_elem(const GroupElem& g, Cx z) {
    Cx a = g.a_cx(), b = g.b_cx();
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
}

int hw_jobs(int jobs) {
    if (jobs > 0) return jobs;
    int n = (int)std::thread::hardware_concurrency();
    return n < 1 ? 1 : n;
}

template <typename Fn>
void parallel_for(size_t n, int jobs, Fn&& fn) {
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < hw_jobs(jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

bool IntersectionRecord::all_vertex_incident() const {
    for (const CrossingPoint& c : crossings)
        if (!c.vertex_incident) return false;
    return true;
}

IntersectionRecord intersection_number(const CurveClass& c1, const CurveClass& c2,
                                       const Tolerances& tol) {
    if (c1.key == c2.key)
        throw std::invalid_argument("intersection_number: identical classes");
    if (c1.axes.empty() || c2.axes.empty())
        throw std::invalid_argument("intersection_number: classes built without geometry");
    IntersectionRecord rec;
    for (const AxisLift& x : c1.axes) {
        for (const AxisLift& y : c2.axes) {
            if (x.geo.same_as(y.geo)) continue;
            if (!geodesics_interleave(x.geo, y.geo)) continue;
            auto cr = geodesic_cross(x.geo, y.geo);
            if (!cr) continue;
            if (!halfopen_domain_contains(cr->point)) continue;
            rec.crossings.push_back({cr->point, near_weierstrass(cr->point, tol.vertex)});
        }
    }
    rec.count = (int)rec.crossings.size();
    return rec;
}

IntersectionRecord intersection_with_system(const CurveClass& c, const CurveSystem& S,
                                            const Tolerances& tol) {
    IntersectionRecord rec;
    for (const CurveClass& m : S.classes) {
        if (m.key == c.key)
            throw std::invalid_argument("intersection_with_system: class belongs to the system");
        IntersectionRecord one = intersection_number(c, m, tol);
        rec.count += one.count;
        rec.crossings.insert(rec.crossings.end(), one.crossings.begin(), one.crossings.end());
    }
    return rec;
}

int lift_count(const CurveClass& c, const CurveSystem& S, const Tolerances& tol) {
    // The path-lift route: follow one fundamental period of the lift through
    // the tiles it meets and count its crossings with p^{-1}(S) as events
    // along the curve, keyed by arc position and crossed member.  A shared
    // point contributes one event per member strand through it.
    if (c.axes.empty())
        throw std::invalid_argument("lift_count: class built without geometry");
    double ell = c.elem.translation_length();
    std::set<std::pair<int64_t, int>> events;
    for (const AxisLift& x : c.axes) {
        GroupElem ti = x.tile.inverse();
        Cx bl = apply_elem(ti, c.axis_base);
        Cx gl = apply_elem(ti, apply_elem(c.elem, c.axis_base));
        Cx dl = (gl - bl) / (1.0 - std::conj(bl) * gl);
        dl /= std::abs(dl);
        for (size_t mi = 0; mi < S.classes.size(); ++mi) {
            const CurveClass& m = S.classes[mi];
            if (m.key == c.key)
                throw std::invalid_argument("lift_count: class belongs to the system");
            for (const AxisLift& y : m.axes) {
                if (x.geo.same_as(y.geo)) continue;
                if (!geodesics_interleave(x.geo, y.geo)) continue;
                auto cr = geodesic_cross(x.geo, y.geo);
                if (!cr || !halfopen_domain_contains(cr->point)) continue;
                double s = arc_parameter(cr->point, bl, dl);
                double f = std::fmod(s, ell);
                if (f < 0) f += ell;
                if (f > ell - 0.5e-6) f = 0.0;  // wrap guard
                events.emplace((int64_t)std::llround(f * 1e6), (int)mi);
            }
        }
    }
    (void)tol;
    return (int)events.size();
}

// ---- complexity table -----------------------------------------------------

std::vector<ComplexityRow> complexity_table(int k_max,
                                            const std::vector<CurveClass>& classes,
                                            double certified_length,
                                            const EnumerationOptions& opt) {
    if (k_max < 1 || k_max > 12)
        throw std::invalid_argument("complexity_table: k_max in 1..12");
    const CurveSystem& sys = systolic_set();
    double unit = std::acosh(1.0 + kSqrt2);

    std::set<CyclicKey> sys_keys;
    for (const CurveClass& m : sys.classes) sys_keys.insert(m.key);

    struct Witness {
        int i_sys;
        std::string word;
    };
    std::vector<Witness> witnesses;
    std::mutex mu;
    parallel_for(classes.size(), opt.jobs, [&](size_t i) {
        const CurveClass& c = classes[i];
        if (!c.simple || sys_keys.count(c.key)) return;
        int isys = intersection_with_system(c, sys).count;
        if (isys <= k_max) {
            std::lock_guard<std::mutex> lk(mu);
            witnesses.push_back({isys, word_str(c.word)});
        }
    });
    std::sort(witnesses.begin(), witnesses.end(), [](const Witness& a, const Witness& b) {
        return std::tie(a.i_sys, a.word) < std::tie(b.i_sys, b.word);
    });

    std::vector<ComplexityRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        ComplexityRow row;
        row.k = k;
        // the sweep certifies row k when it covered every simple class of
        // length <= k * acosh(1+sqrt2)
        row.certified = certified_length + 1e-9 >= k * unit;
        for (const Witness& w : witnesses)
            if (w.i_sys <= k) {
                row.T_k++;
                row.witnesses.push_back(w.word);
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ComplexityRow> complexity_table(int k_max, const EnumerationOptions& opt) {
    double unit = std::acosh(1.0 + kSqrt2);
    double sweep_len = k_max * unit;
    auto classes = enumerate_classes(sweep_len, opt);
    return complexity_table(k_max, classes, sweep_len, opt);
}

// ---- exceptional set ------------------------------------------------------

std::vector<GammaSetEntry> gamma_set_scan(const std::vector<CurveClass>& classes,
                                          const EnumerationOptions& opt) {
    const CurveSystem& om1 = omega1();
    const CurveSystem& sys = systolic_set();
    std::set<CyclicKey> sys_keys;
    for (const CurveClass& m : sys.classes) sys_keys.insert(m.key);

    std::vector<GammaSetEntry> out;
    std::mutex mu;
    parallel_for(classes.size(), opt.jobs, [&](size_t i) {
        const CurveClass& c = classes[i];
        if (!c.simple || sys_keys.count(c.key)) return;
        IntersectionRecord r1 = intersection_with_system(c, om1);
        if (r1.count == 0 || !r1.all_vertex_incident()) return;
        IntersectionRecord rs = intersection_with_system(c, sys);
        GammaSetEntry e;
        e.cls = c;
        e.i_sys = rs.count;
        e.sys_vertex_only = rs.all_vertex_incident();
        std::lock_guard<std::mutex> lk(mu);
        out.push_back(std::move(e));
    });
    std::sort(out.begin(), out.end(), [](const GammaSetEntry& a, const GammaSetEntry& b) {
        return std::tie(a.cls.length, a.cls.word) < std::tie(b.cls.length, b.cls.word);
    });
    return out;
}

std::vector<GammaSetEntry> gamma_set(const EnumerationOptions& opt) {
    double cutoff = 10.0 * std::acosh(1.0 + kSqrt2);
    auto classes = enumerate_classes(cutoff, opt);
    auto out = gamma_set_scan(classes, opt);
    if (out.size() != 16) throw std::runtime_error("gamma_set: cardinality is not 16");
    return out;
}

}  // namespace bolza
