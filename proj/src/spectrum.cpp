#include "bolza/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <cstdio>
#include <cstdlib>
#include <unordered_set>

#include "bolza/bolza_model.hpp"

namespace bolza {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kPi = 3.14159265358979323846;

// covering radius of the Weierstrass point set: circumradius of a (4,4,4) face
double cover_radius() {
    static const double r = std::acosh(std::sqrt((2.0 * (1.0 + kSqrt2) + 1.0) / 3.0));
    return r;
}

// every class of length <= L has a representative g with d(g.q, q) <= this,
// for one of the six Weierstrass basepoints q
double ball_radius(double L) {
    return 2.0 * std::asinh(std::cosh(cover_radius()) * std::sinh(L / 2.0));
}

// tiles sharing at least a point with the closed central octagon
const std::vector<GroupElem>& touch_set() {
    static const std::vector<GroupElem> ts = [] {
        std::vector<GroupElem> out;
        double lim = 2.0 * fundamental_octagon().circumradius + 0.2;
        for (const GroupElem& g : element_ball(lim + 0.5))
            if (!g.is_identity() && g.displacement(Cx{0, 0}) <= lim) out.push_back(g);
        return out;
    }();
    return ts;
}

Cx apply_elem(const GroupElem& g, Cx z) {
    Cx a = g.a_cx(), b = g.b_cx();
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
}

}  // namespace

GroupElem normalize_to_domain_axis(const GroupElem& g) {
    Geodesic A = axis(g);
    Cx p = geodesic_foot(A);
    auto [q, w] = reduce_to_domain(p);
    (void)q;
    return (w * g) * w.inverse();
}

// The base point is the reduced image of the axis foot: it lies on the axis of
// the normalized element *and* in the closed domain, which anchors the period
// window used by the coverage search.
std::pair<Cx, Cx> domain_base_of(const GroupElem& normalized) {
    Geodesic A = axis(normalized);
    Cx foot = geodesic_foot(A);
    auto [base, w] = reduce_to_domain(foot);
    (void)w;
    Cx gp = apply_elem(normalized, base);
    Cx dir = (gp - base) / (1.0 - std::conj(base) * gp);
    dir /= std::abs(dir);
    return {base, dir};
}

bool halfopen_domain_contains(Cx z, double eps) {
    const OctagonDomain& dom = fundamental_octagon();
    Cx zk = poincare_to_klein(z);
    if (!dom.polygon.contains_klein(zk, eps)) return false;
    int onside = -1, count = 0;
    for (int k = 0; k < 8; ++k) {
        Cx a = dom.polygon.klein[k], b = dom.polygon.klein[(k + 1) % 8];
        Cx e = b - a;
        double cr = e.real() * (zk - a).imag() - e.imag() * (zk - a).real();
        if (std::fabs(cr) < eps * std::abs(e)) {
            onside = k;
            ++count;
        }
    }
    if (count == 0) return true;
    if (count >= 2)  // vertex: keep only the one at angle pi/8 (polygon vertex 0)
        return distance(z, dom.vertices[0]) < 1e-6;
    // polygon edge k runs vertex[k] -> vertex[k+1]; its midpoint sits at angle
    // (k+1) pi/4; pair edges k and k+4: keep k in 0..3
    return onside < 4;
}

namespace {

struct ClipResult {
    double lo, hi;
};

// clip the geodesic against the fattened Klein octagon; s measured along the
// geodesic from `base` toward `dir`
std::optional<ClipResult> clip_to_domain(const Geodesic& g, Cx base, Cx dir, double fat) {
    const OctagonDomain& dom = fundamental_octagon();
    Cx a1 = std::polar(1.0, g.t1), a2 = std::polar(1.0, g.t2);
    Cx d = a2 - a1;
    double lo = 0.0, hi = 1.0;
    for (int k = 0; k < 8; ++k) {
        Cx A = dom.polygon.klein[k], B = dom.polygon.klein[(k + 1) % 8];
        Cx e = B - A;
        double tolk = fat * std::abs(e);
        double f1 = e.real() * (a1 - A).imag() - e.imag() * (a1 - A).real();
        double f2 = e.real() * (a2 - A).imag() - e.imag() * (a2 - A).real();
        if (f1 < -tolk && f2 < -tolk) return std::nullopt;
        double df = f2 - f1;
        if (std::fabs(df) < 1e-300) continue;
        double tc = (-tolk - f1) / df;
        if (df > 0)
            lo = std::max(lo, tc);
        else
            hi = std::min(hi, tc);
    }
    if (lo > hi) return std::nullopt;
    double s[2];
    int i = 0;
    for (double t : {lo, hi}) {
        Cx zp = klein_to_poincare(a1 + t * d);
        s[i++] = arc_parameter(zp, base, dir);
    }
    return ClipResult{std::min(s[0], s[1]), std::max(s[0], s[1])};
}

}  // namespace

std::vector<AxisLift> axes_through_domain(const GroupElem& g) {
    auto [base, dir] = domain_base_of(g);
    return axes_through_domain(g, base, dir);
}

std::vector<AxisLift> axes_through_domain(const GroupElem& g, Cx base, Cx dir) {
    double ell = g.translation_length();
    Cx gp = apply_elem(g, base);

    struct Node {
        GroupElem tile;
    };
    std::unordered_set<GroupElem, GroupElemHash> seen;
    std::deque<GroupElem> queue;
    std::vector<AxisLift> out;
    std::map<std::pair<int64_t, int64_t>, bool> axis_seen;

    auto visit = [&](const GroupElem& tile) -> bool {
        GroupElem ti = tile.inverse();
        GroupElem conj = (ti * g) * tile;
        Geodesic ax = axis(conj);
        Cx bl = apply_elem(ti, base);
        Cx gl = apply_elem(ti, gp);
        Cx dl = (gl - bl) / (1.0 - std::conj(bl) * gl);
        dl /= std::abs(dl);
        auto clip = clip_to_domain(ax, bl, dl, 1e-7);
        if (!clip) return false;
        if (clip->hi < -0.2 || clip->lo > ell + 0.2) return false;
        double u1 = ax.t1, u2 = ax.t2;
        auto key = std::make_pair((int64_t)std::llround(u1 * 1e8),
                                  (int64_t)std::llround(u2 * 1e8));
        if (!axis_seen.count(key)) {
            axis_seen[key] = true;
            out.push_back(AxisLift{ax, conj, tile});
        }
        return true;
    };

    GroupElem id = GroupElem::identity();
    if (!visit(id)) throw std::runtime_error("axes_through_domain: base tile misses the axis");
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        GroupElem t = queue.front();
        queue.pop_front();
        for (const GroupElem& h : touch_set()) {
            GroupElem t2 = t * h;
            if (seen.count(t2)) continue;
            seen.insert(t2);
            GroupElem probe = t2;
            // test before enqueueing; only expand from tiles meeting the strip
            GroupElem ti = probe.inverse();
            GroupElem conj = (ti * g) * probe;
            Geodesic ax = axis(conj);
            Cx bl = apply_elem(ti, base);
            Cx gl = apply_elem(ti, gp);
            Cx dl = (gl - bl) / (1.0 - std::conj(bl) * gl);
            dl /= std::abs(dl);
            auto clip = clip_to_domain(ax, bl, dl, 1e-7);
            if (!clip || clip->hi < -0.2 || clip->lo > ell + 0.2) continue;
            double u1 = ax.t1, u2 = ax.t2;
            auto key = std::make_pair((int64_t)std::llround(u1 * 1e8),
                                      (int64_t)std::llround(u2 * 1e8));
            if (!axis_seen.count(key)) {
                axis_seen[key] = true;
                out.push_back(AxisLift{ax, conj, t2});
            }
            queue.push_back(t2);
        }
    }
    return out;
}

int count_self_intersections(const std::vector<AxisLift>& axes) {
    int cnt = 0;
    for (size_t i = 0; i < axes.size(); ++i) {
        for (size_t j = i + 1; j < axes.size(); ++j) {
            const Geodesic& a = axes[i].geo;
            const Geodesic& b = axes[j].geo;
            if (a.same_as(b)) continue;
            if (!geodesics_interleave(a, b)) continue;
            auto cr = geodesic_cross(a, b);
            if (cr && halfopen_domain_contains(cr->point)) ++cnt;
        }
    }
    return cnt;
}

std::optional<QuadInt> snap_trace(double t, double max_residual) {
    if (std::fabs(t) > 1e6) throw std::domain_error("snap_trace: out of range");
    return snap_quadint(t, max_residual);
}

CurveClass make_curve_class(const Word& w, bool with_geometry) {
    const WordSystem& ws = bolza_words();
    CurveClass c;
    c.key = ws.conjugacy_key(w);
    c.word = c.key.word;
    GroupElem m = word_to_elem(c.word);
    c.trace_exact = m.trace();
    double half = std::fabs(c.trace_exact.value()) / 2.0;
    if (half <= 1.0) throw std::domain_error("make_curve_class: not hyperbolic");
    c.length = 2.0 * std::acosh(half);
    c.primitive = WordSystem::is_primitive(c.word);
    auto ab = abelianize(c.word);
    bool sep = ab[0] == 0 && ab[1] == 0 && ab[2] == 0 && ab[3] == 0;
    if (with_geometry) {
        c.elem = normalize_to_domain_axis(m);
        auto [base, dir] = domain_base_of(c.elem);
        c.axis_base = base;
        c.axis_dir = dir;
        c.axes = axes_through_domain(c.elem, base, dir);
        c.self_intersections = count_self_intersections(c.axes);
        c.simple = (c.self_intersections == 0);
        if (c.simple) c.separating = sep;
    } else {
        c.elem = m;
    }
    return c;
}

// ---- enumeration ----------------------------------------------------------

namespace {

struct BallState {
    GroupElem g;
    int32_t parent;
    Letter letter;
};

// Collect candidate (element, word) pairs from the displacement ball around
// one basepoint: hyperbolic elements with translation length <= L whose axis
// passes within the covering radius of the basepoint.
void collect_from_basepoint(Cx q, double L, double margin,
                            std::vector<std::pair<GroupElem, Word>>& out) {
    const double R = ball_radius(L) + margin;
    const double cosh_half_max = std::cosh(L / 2.0);
    const double axis_cut = cover_radius() + 1e-6;

    std::unordered_map<GroupElem, int32_t, GroupElemHash> index;
    index.reserve(size_t(std::exp(R) / 3.0) + 64);
    std::vector<BallState> states;
    states.push_back({GroupElem::identity(), -1, 0});
    index.emplace(GroupElem::identity(), 0);
    std::deque<int32_t> queue{0};
    while (!queue.empty()) {
        int32_t cur = queue.front();
        queue.pop_front();
        GroupElem g = states[cur].g;
        for (Letter c = 0; c < 8; ++c) {
            GroupElem h = g * letter_matrices()[c];
            if (index.count(h)) continue;
            if (h.displacement(q) > R) continue;
            int32_t id = (int32_t)states.size();
            states.push_back({h, cur, c});
            index.emplace(h, id);
            queue.push_back(id);
        }
    }
    for (int32_t si = 0; si < (int32_t)states.size(); ++si) {
        const BallState& st = states[si];
        QuadInt tr = st.g.trace();
        double half = std::fabs(tr.value()) / 2.0;
        if (half <= 1.0 + 1e-12 || half > cosh_half_max + 1e-9) continue;
        Geodesic A = axis(st.g);
        if (point_geodesic_distance(q, A) > axis_cut) continue;
        Word w;
        for (int32_t i = si; i > 0; i = states[i].parent) w.push_back(states[i].letter);
        std::reverse(w.begin(), w.end());
        out.emplace_back(st.g, std::move(w));
    }
}

template <typename Fn>
void run_parallel(size_t n, int jobs, Fn&& fn) {
    if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
    if (jobs < 1) jobs = 1;
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
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<CurveClass> enumerate_classes(double L_max, const EnumerationOptions& opt) {
    if (L_max <= 0) throw std::invalid_argument("enumerate_classes: L_max > 0 required");
    const WordSystem& ws = bolza_words();

    std::vector<std::pair<GroupElem, Word>> candidates;
    for (Cx q : weierstrass_points()) collect_from_basepoint(q, L_max, opt.ball_margin, candidates);

    // exact dedup of elements
    {
        std::unordered_set<GroupElem, GroupElemHash> elem_seen;
        elem_seen.reserve(candidates.size() * 2);
        std::vector<std::pair<GroupElem, Word>> uniq;
        uniq.reserve(candidates.size());
        for (auto& cw : candidates)
            if (elem_seen.insert(cw.first).second) uniq.push_back(std::move(cw));
        candidates = std::move(uniq);
    }

    if (std::getenv("BOLZA_SWEEP_STATS"))
        std::fprintf(stderr, "sweep L=%.3f: %zu unique candidates\n", L_max, candidates.size());
    // stage 1: cheap closure keys in parallel
    std::vector<Word> closure_keys(candidates.size());
    run_parallel(candidates.size(), opt.jobs, [&](size_t i) {
        Word red = ws.cyclic_dehn_reduce(candidates[i].second);
        closure_keys[i] = red.empty() ? Word{} : ws.closure_key(red);
    });
    std::map<Word, Word> buckets;  // closure key -> smallest reduced member
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (closure_keys[i].empty()) continue;
        auto it = buckets.find(closure_keys[i]);
        if (it == buckets.end())
            buckets.emplace(closure_keys[i], closure_keys[i]);
    }

    if (std::getenv("BOLZA_SWEEP_STATS"))
        std::fprintf(stderr, "sweep L=%.3f: %zu closure buckets\n", L_max, buckets.size());
    // stage 2: one full conjugacy key per bucket
    std::vector<Word> bucket_words;
    bucket_words.reserve(buckets.size());
    for (auto& [k, wrep] : buckets) bucket_words.push_back(wrep);
    std::vector<CyclicKey> full_keys(bucket_words.size());
    run_parallel(bucket_words.size(), opt.jobs, [&](size_t i) {
        full_keys[i] = ws.conjugacy_key(bucket_words[i]);
    });
    std::unordered_set<CyclicKey, CyclicKeyHash> key_seen;
    std::vector<Word> reps;
    for (const CyclicKey& k : full_keys) {
        if (!WordSystem::is_primitive(k.word)) continue;
        if (key_seen.insert(k).second) reps.push_back(k.word);
    }
    std::sort(reps.begin(), reps.end());

    // stage 3: geometry per class
    std::vector<CurveClass> classes(reps.size());
    run_parallel(reps.size(), opt.jobs, [&](size_t i) {
        classes[i] = make_curve_class(reps[i], opt.with_geometry);
    });

    std::vector<CurveClass> out;
    for (CurveClass& c : classes)
        if (c.length <= L_max + 1e-9) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const CurveClass& a, const CurveClass& b) {
        if (std::fabs(a.length - b.length) > 1e-12) return a.length < b.length;
        if (!(a.trace_exact == b.trace_exact))
            return a.trace_exact.value() < b.trace_exact.value();
        return a.word < b.word;
    });
    return out;
}

void certify_enumeration(double L_max, const std::vector<CurveClass>& classes,
                         const EnumerationOptions& opt) {
    EnumerationOptions wider = opt;
    wider.ball_margin = opt.ball_margin + 0.5;
    wider.with_geometry = false;
    auto again = enumerate_classes(L_max, wider);
    if (again.size() != classes.size())
        throw std::runtime_error("certify_enumeration: class census not saturated");
    for (size_t i = 0; i < again.size(); ++i)
        if (!(again[i].key == classes[i].key))
            throw std::runtime_error("certify_enumeration: class sets differ");
}

SpectrumTable length_spectrum(double L_max, const EnumerationOptions& opt) {
    auto classes = enumerate_classes(L_max, opt);
    SpectrumTable table;
    for (const CurveClass& c : classes) {
        if (!table.rows.empty() && std::fabs(table.rows.back().length - c.length) < 1e-9) {
            SpectrumRow& r = table.rows.back();
            r.mult_total++;
            if (c.simple) r.mult_simple++;
            r.words.push_back(word_str(c.word));
        } else {
            SpectrumRow r;
            r.length = c.length;
            r.trace = QuadInt(std::llabs(c.trace_exact.p), std::llabs(c.trace_exact.q));
            r.mult_total = 1;
            r.mult_simple = c.simple ? 1 : 0;
            r.words = {word_str(c.word)};
            table.rows.push_back(std::move(r));
        }
    }
    return table;
}

}  // namespace bolza
