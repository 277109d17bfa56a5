#include "bolza/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "bolza/intersection.hpp"

namespace bolza {

namespace {
const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;

Cx apply_elem(const GroupElem& g, Cx z) {
    Cx a = g.a_cx(), b = g.b_cx();
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
}
}  // namespace

double SurfaceGraph::total_area() const {
    double s = 0;
    for (const GraphFace& f : faces) s += f.area;
    return s;
}

SurfaceGraph build_arrangement(const CurveSystem& S, const Tolerances& tol, bool lenient) {
    for (const CurveClass& c : S.classes) {
        if (!c.simple) throw std::invalid_argument("build_arrangement: non-simple class");
        if (c.axes.empty())
            throw std::invalid_argument("build_arrangement: class built without geometry");
    }
    const size_t n = S.classes.size();

    // 1. crossing events in the half-open domain
    struct Strand {
        size_t curve;
        size_t axis;  // index into S.classes[curve].axes
    };
    struct Event {
        Cx z;
        Strand s1, s2;
    };
    std::vector<Event> events;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            const auto& xa = S.classes[i].axes;
            const auto& ya = S.classes[j].axes;
            for (size_t ii = 0; ii < xa.size(); ++ii) {
                for (size_t jj = (i == j ? ii + 1 : size_t(0)); jj < ya.size(); ++jj) {
                    const Geodesic& a = xa[ii].geo;
                    const Geodesic& b = ya[jj].geo;
                    if (a.same_as(b)) continue;
                    if (!geodesics_interleave(a, b)) continue;
                    auto cr = geodesic_cross(a, b);
                    if (!cr || !halfopen_domain_contains(cr->point)) continue;
                    events.push_back({cr->point, {i, ii}, {j, jj}});
                }
            }
        }
    }
    SurfaceGraph g;
    if (events.empty()) {
        g.degenerate = true;
        return g;
    }

    // 2. merge events into vertices
    std::vector<Cx> vpos;
    auto find_vertex = [&](Cx z) -> size_t {
        for (size_t v = 0; v < vpos.size(); ++v)
            if (distance(vpos[v], z) < tol.merge * 1e3) return v;
        vpos.push_back(z);
        return vpos.size() - 1;
    };
    // strand set per vertex
    std::vector<std::set<std::pair<size_t, size_t>>> vstrands;
    for (const Event& e : events) {
        size_t v = find_vertex(e.z);
        if (v >= vstrands.size()) vstrands.resize(v + 1);
        vstrands[v].insert({e.s1.curve, e.s1.axis});
        vstrands[v].insert({e.s2.curve, e.s2.axis});
    }

    // 3. passages per curve: (s along the curve, vertex, direction at vertex)
    struct Passage {
        double s;
        size_t vertex;
        Cx dir;  // direction of travel (increasing s) at the vertex
    };
    std::vector<std::vector<Passage>> passages(n);
    for (size_t v = 0; v < vpos.size(); ++v) {
        for (auto [ci, ai] : vstrands[v]) {
            const CurveClass& c = S.classes[ci];
            const AxisLift& lift = c.axes[ai];
            Cx z_global = apply_elem(lift.tile, vpos[v]);
            double ell = c.length;
            double s = arc_parameter(z_global, c.axis_base, c.axis_dir);
            s = std::fmod(s, ell);
            if (s < 0) s += ell;
            if (s > ell - 1e-9) s = 0.0;
            // direction of travel at the vertex, in domain coordinates:
            // push the axis direction forward along the lift
            Cx fwd_pt = apply_elem(lift.tile.inverse(),
                                   point_at_arc(c.axis_base, c.axis_dir,
                                                arc_parameter(z_global, c.axis_base, c.axis_dir) + 1e-5));
            Cx d = (fwd_pt - vpos[v]) / (1.0 - std::conj(vpos[v]) * fwd_pt);
            d /= std::abs(d);
            passages[ci].push_back({s, v, d});
        }
    }

    // 4. edges between consecutive passages
    struct End {
        size_t vertex;
        double angle;
        size_t edge;
        bool head;  // true = this end is the edge's head (arrival)
    };
    struct Edge {
        size_t v_from, v_to;
        double length;
    };
    std::vector<Edge> edges;
    std::vector<End> ends;
    for (size_t ci = 0; ci < n; ++ci) {
        auto& ps = passages[ci];
        if (ps.empty()) {
            if (!lenient)
                throw std::runtime_error("build_arrangement: curve with no intersections");
            continue;
        }
        std::sort(ps.begin(), ps.end(), [](const Passage& a, const Passage& b) { return a.s < b.s; });
        double ell = S.classes[ci].length;
        for (size_t k = 0; k < ps.size(); ++k) {
            const Passage& from = ps[k];
            const Passage& to = ps[(k + 1) % ps.size()];
            double len = (k + 1 < ps.size()) ? to.s - from.s : ell - from.s + to.s;
            size_t eid = edges.size();
            edges.push_back({from.vertex, to.vertex, len});
            // tail end: leaves `from` in direction from.dir
            ends.push_back({from.vertex, std::arg(from.dir), eid, false});
            // head end: arrives at `to`; its direction at the vertex points back
            ends.push_back({to.vertex, std::arg(-to.dir), eid, true});
        }
    }

    // 5. rotation system
    std::vector<std::vector<size_t>> rot(vpos.size());  // end indices ccw per vertex
    for (size_t e = 0; e < ends.size(); ++e) rot[ends[e].vertex].push_back(e);
    for (auto& r : rot)
        std::sort(r.begin(), r.end(),
                  [&](size_t a, size_t b) { return ends[a].angle < ends[b].angle; });

    // vertex corner angles (gaps between consecutive ends)
    g.vertices.resize(vpos.size());
    for (size_t v = 0; v < vpos.size(); ++v) {
        g.vertices[v].position = vpos[v];
        const auto& r = rot[v];
        for (size_t k = 0; k < r.size(); ++k) {
            double a = ends[r[k]].angle;
            double b = ends[r[(k + 1) % r.size()]].angle;
            double gap = b - a;
            if (gap <= 0) gap += kTwoPi;
            g.vertices[v].corner_angles.push_back(gap);
        }
        double sum = 0;
        for (double a : g.vertices[v].corner_angles) sum += a;
        if (!lenient && std::fabs(sum - kTwoPi) > 1e-6)
            throw std::runtime_error("build_arrangement: vertex angle sum != 2pi");
    }

    // 6. face traversal: half-edges are (edge, direction); next = rotate the
    // reversed arrival end to the next ccw outgoing end at the vertex
    // half-edge id: 2*edge + d, d = 0 tail->head, d = 1 head->tail
    auto target_vertex = [&](size_t he) {
        return (he & 1) ? edges[he >> 1].v_from : edges[he >> 1].v_to;
    };
    // the end record representing arrival of the half-edge at its target
    std::vector<size_t> arrival_end(2 * edges.size());
    for (size_t e = 0; e < ends.size(); ++e) {
        const End& en = ends[e];
        arrival_end[2 * en.edge + (en.head ? 0 : 1)] = e;
    }
    // position of each end in its vertex rotation
    std::vector<size_t> pos_in_rot(ends.size());
    for (size_t v = 0; v < vpos.size(); ++v)
        for (size_t k = 0; k < rot[v].size(); ++k) pos_in_rot[rot[v][k]] = k;
    // outgoing half-edge represented by an end
    auto end_to_halfedge = [&](size_t e) {
        return 2 * ends[e].edge + (ends[e].head ? 1 : 0);
    };

    std::vector<char> seen_he(2 * edges.size(), 0);
    for (size_t he = 0; he < 2 * edges.size(); ++he) {
        if (seen_he[he]) continue;
        GraphFace face;
        size_t cur = he;
        size_t guard = 0;
        do {
            seen_he[cur] = 1;
            size_t v = target_vertex(cur);
            size_t arr = arrival_end[cur];
            const auto& r = rot[v];
            size_t k = pos_in_rot[arr];
            size_t nxt_end = r[(k + 1) % r.size()];
            face.corner_angles.push_back(g.vertices[v].corner_angles[k]);
            cur = end_to_halfedge(nxt_end);
            if (++guard > 10 * edges.size() + 16)
                throw std::runtime_error("build_arrangement: face traversal did not close");
        } while (cur != he);
        double sum = 0;
        for (double a : face.corner_angles) sum += a;
        face.area = kPi * (double(face.corner_angles.size()) - 2.0) - sum;
        g.faces.push_back(std::move(face));
    }

    g.V = (int)vpos.size();
    g.E = (int)edges.size();
    for (const Edge& e : edges) g.edge_list.emplace_back((int)e.v_from, (int)e.v_to);
    g.F = (int)g.faces.size();
    if (!lenient) {
        if (g.euler() != -2)
            throw std::runtime_error("build_arrangement: Euler characteristic != -2");
        if (std::fabs(g.total_area() - 4.0 * kPi) > 1e-6)
            throw std::runtime_error("build_arrangement: Gauss-Bonnet area != 4pi");
    }
    return g;
}

FaceCensus face_census(const SurfaceGraph& g, double grid_tol) {
    FaceCensus out;
    for (const GraphFace& f : g.faces) {
        std::vector<int> sig;
        bool ok = true;
        for (double a : f.corner_angles) {
            int found = 0;
            for (int p = 2; p <= 12; ++p) {
                if (std::fabs(a - kPi / p) < grid_tol) {
                    found = p;
                    break;
                }
            }
            if (!found) {
                ok = false;
                break;
            }
            sig.push_back(found);
        }
        if (!ok) {
            out.unclassified++;
            continue;
        }
        std::sort(sig.begin(), sig.end());
        out.signatures[sig]++;
    }
    return out;
}

bool FaceCensus::all_triangles() const {
    if (unclassified) return false;
    for (const auto& [sig, cnt] : signatures)
        if (sig.size() != 3) return false;
    return true;
}

bool is_filling(const CurveSystem& S, const Tolerances& tol) {
    SurfaceGraph g = build_arrangement(S, tol, /*lenient=*/true);
    if (g.degenerate) return false;
    if (g.euler() != -2) return false;
    for (const GraphFace& f : g.faces)
        if (f.area <= 0) return false;
    return true;
}

InvolutionRecord involution_check(const CurveClass& c) {
    if (!c.simple) throw std::invalid_argument("involution_check: class not simple");
    const WordSystem& ws = bolza_words();
    // J g_k J^{-1} = g_k^{-1} exactly, so J acts on words by inverting letters
    Word jw;
    jw.reserve(c.word.size());
    for (Letter l : c.word) jw.push_back(letter_inverse(l));
    InvolutionRecord rec;
    rec.fixed = ws.conjugacy_key(jw) == c.key;
    rec.orientation_preserved =
        ws.oriented_conjugacy_key(jw) == ws.oriented_conjugacy_key(c.word);
    auto ab = abelianize(c.word);
    rec.separating = ab[0] == 0 && ab[1] == 0 && ab[2] == 0 && ab[3] == 0;
    return rec;
}

}  // namespace bolza
