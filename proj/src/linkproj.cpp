#include "wlink/linkproj.hpp"

#include "wlink/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

namespace wlink {

void validate_link(const PLLink& link, bool check_disjoint, double eps) {
    for (size_t c = 0; c < link.components.size(); ++c) {
        const auto& comp = link.components[c];
        if (comp.size() < 3)
            throw structural_error("component " + std::to_string(c) + " has fewer than 3 vertices");
        for (size_t i = 0; i < comp.size(); ++i)
            if (dist(comp[i], comp[(i + 1) % comp.size()]) == 0.0)
                throw structural_error("repeated consecutive vertex in component " +
                                       std::to_string(c));
    }
    if (!check_disjoint) return;
    for (size_t c1 = 0; c1 < link.components.size(); ++c1)
        for (size_t c2 = c1; c2 < link.components.size(); ++c2) {
            const auto& a = link.components[c1];
            const auto& b = link.components[c2];
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j) {
                    if (c1 == c2) {
                        size_t d = (j + b.size() - i) % b.size();
                        if (d <= 1 || d == b.size() - 1) continue; // same or adjacent
                    }
                    double sep = segment_distance(a[i], a[(i + 1) % a.size()], b[j],
                                                  b[(j + 1) % b.size()]);
                    if (sep <= eps)
                        throw numeric_error("link segments within proximity tolerance");
                }
        }
}

namespace {

struct RawCrossing {
    int ca, cb;         // component indices, (ca,pa) canonically before (cb,pb)
    double pa, pb;      // arc positions: segment index + parameter
    Vec2 point;
    double depth_a, depth_b;
    Vec2 dir_a, dir_b; // projected tangents
};

struct Projected {
    std::vector<std::vector<Vec2>> pts;
    std::vector<std::vector<double>> depth;
};

Vec3 perp_basis_u(Vec3 d) {
    Vec3 e = std::abs(d.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return normalized(cross(d, e));
}

// One candidate direction: extract crossings, or fail the genericity tests.
bool try_direction(const PLLink& link, Vec3 dir, std::vector<RawCrossing>& out, Projected& proj,
                   bool parallel) {
    Vec3 u = perp_basis_u(dir);
    Vec3 v = cross(dir, u);
    size_t nc = link.components.size();
    proj.pts.assign(nc, {});
    proj.depth.assign(nc, {});
    for (size_t c = 0; c < nc; ++c)
        for (const Vec3& p : link.components[c]) {
            proj.pts[c].push_back(Vec2{dot(p, u), dot(p, v)});
            proj.depth[c].push_back(dot(p, dir));
        }

    struct Seg {
        int c, i;
        Vec2 a, b;
    };
    std::vector<Seg> segs;
    for (size_t c = 0; c < nc; ++c)
        for (size_t i = 0; i < proj.pts[c].size(); ++i)
            segs.push_back({static_cast<int>(c), static_cast<int>(i), proj.pts[c][i],
                            proj.pts[c][(i + 1) % proj.pts[c].size()]});

    int ns = static_cast<int>(segs.size());
    std::atomic<bool> reject{false};
    std::vector<RawCrossing> found;
#pragma omp parallel if (parallel)
    {
        std::vector<RawCrossing> local;
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < ns; ++i) {
            if (reject.load(std::memory_order_relaxed)) continue;
            for (int j = i + 1; j < ns; ++j) {
                const Seg& s = segs[i];
                const Seg& t = segs[j];
                int m = static_cast<int>(proj.pts[s.c].size());
                if (s.c == t.c &&
                    ((t.i - s.i + m) % m <= 1 || (s.i - t.i + m) % m <= 1))
                    continue; // identical or adjacent segments of one component
                Vec2 pt;
                SegRelation rel = segment_relation(s.a, s.b, t.a, t.b, &pt);
                if (rel == SegRelation::disjoint) continue;
                if (rel == SegRelation::overlap) { reject.store(true); break; }
                double tp, up;
                if (!segments_cross(s.a, s.b, t.a, t.b, &tp, &up)) {
                    reject.store(true); // endpoint touching: vertex coincidence
                    break;
                }
                Vec2 da = s.b - s.a, db = t.b - t.a;
                double sinang = std::abs(cross(da, db)) / (norm(da) * norm(db));
                if (sinang < 1e-7 || tp < 1e-9 || tp > 1 - 1e-9 || up < 1e-9 || up > 1 - 1e-9) {
                    reject.store(true);
                    break;
                }
                RawCrossing rc;
                rc.ca = s.c;
                rc.pa = s.i + tp;
                rc.cb = t.c;
                rc.pb = t.i + up;
                rc.point = pt;
                int m2 = static_cast<int>(proj.pts[t.c].size());
                rc.depth_a = proj.depth[s.c][s.i] * (1 - tp) +
                             proj.depth[s.c][(s.i + 1) % m] * tp;
                rc.depth_b = proj.depth[t.c][t.i] * (1 - up) +
                             proj.depth[t.c][(t.i + 1) % m2] * up;
                rc.dir_a = da;
                rc.dir_b = db;
                local.push_back(rc);
            }
        }
#pragma omp critical
        found.insert(found.end(), local.begin(), local.end());
    }
    if (reject.load()) return false;

    // Triple points: two crossings coinciding in the plane.
    for (size_t i = 0; i < found.size(); ++i)
        for (size_t j = i + 1; j < found.size(); ++j)
            if (dist(found[i].point, found[j].point) < 1e-9) return false;

    std::sort(found.begin(), found.end(), [](const RawCrossing& a, const RawCrossing& b) {
        return std::tie(a.ca, a.pa, a.cb, a.pb) < std::tie(b.ca, b.pa, b.cb, b.pb);
    });
    out = std::move(found);
    return true;
}

} // namespace

LinkDiagram project(const PLLink& link, Vec3 direction, std::uint64_t seed, int max_attempts,
                    bool parallel) {
    validate_link(link);
    if (norm(direction) == 0) throw structural_error("zero projection direction");
    Vec3 base = normalized(direction);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<RawCrossing> raw;
    Projected proj;
    Vec3 dir = base;
    bool ok = false;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        if (attempt > 0) {
            double sigma = 0.05 * (1.0 + attempt / 50.0);
            dir = normalized(base + sigma * Vec3{gauss(rng), gauss(rng), gauss(rng)});
        }
        if (try_direction(link, dir, raw, proj, parallel)) {
            ok = true;
            break;
        }
    }
    if (!ok) throw numeric_error("no generic projection direction found");

    LinkDiagram d;
    d.component_count = static_cast<int>(link.components.size());
    d.projected = proj.pts;
    d.direction = dir;

    // Strand-order passages; ids assigned at first encounter.
    struct Pass {
        int comp;
        double pos;
        int raw;      // raw crossing index
        bool first;   // this passage is the (ca,pa) slot of the raw crossing
    };
    std::vector<Pass> passes;
    for (size_t r = 0; r < raw.size(); ++r) {
        passes.push_back({raw[r].ca, raw[r].pa, static_cast<int>(r), true});
        passes.push_back({raw[r].cb, raw[r].pb, static_cast<int>(r), false});
    }
    std::sort(passes.begin(), passes.end(), [](const Pass& a, const Pass& b) {
        return std::tie(a.comp, a.pos) < std::tie(b.comp, b.pos);
    });
    std::vector<int> id_of(raw.size(), 0);
    int next_id = 1;
    for (const Pass& p : passes)
        if (id_of[p.raw] == 0) id_of[p.raw] = next_id++;

    d.crossings.resize(raw.size());
    for (size_t r = 0; r < raw.size(); ++r) {
        const RawCrossing& rc = raw[r];
        Crossing c;
        c.id = id_of[r];
        bool a_over = rc.depth_a > rc.depth_b;
        c.over_component = a_over ? rc.ca : rc.cb;
        c.under_component = a_over ? rc.cb : rc.ca;
        c.over_pos = a_over ? rc.pa : rc.pb;
        c.under_pos = a_over ? rc.pb : rc.pa;
        c.point = rc.point;
        Vec2 over_dir = a_over ? rc.dir_a : rc.dir_b;
        Vec2 under_dir = a_over ? rc.dir_b : rc.dir_a;
        c.sign = cross(over_dir, under_dir) > 0 ? 1 : -1;
        d.crossings[c.id - 1] = c;
    }
    d.sequences.assign(d.component_count, {});
    for (const Pass& p : passes) {
        const Crossing& c = d.crossings[id_of[p.raw] - 1];
        bool over = p.comp == c.over_component && p.pos == c.over_pos;
        d.sequences[p.comp].push_back({c.id, over, p.pos});
    }
    return d;
}

int linking_number(const LinkDiagram& diagram, int comp1, int comp2) {
    if (comp1 == comp2)
        throw structural_error("linking number needs two distinct components (use writhe)");
    if (comp1 < 0 || comp2 < 0 || comp1 >= diagram.component_count ||
        comp2 >= diagram.component_count)
        throw structural_error("component index out of range");
    int sum = 0;
    for (const Crossing& c : diagram.crossings) {
        if ((c.over_component == comp1 && c.under_component == comp2) ||
            (c.over_component == comp2 && c.under_component == comp1))
            sum += c.sign;
    }
    if (sum % 2 != 0) throw structural_error("odd crossing sign sum between closed components");
    return sum / 2;
}

int writhe(const LinkDiagram& diagram, int comp) {
    if (comp < 0 || comp >= diagram.component_count)
        throw structural_error("component index out of range");
    int sum = 0;
    for (const Crossing& c : diagram.crossings)
        if (c.over_component == comp && c.under_component == comp) sum += c.sign;
    return sum;
}

namespace {

double safe_asin_dot(Vec3 a, Vec3 b) {
    double na = norm(a), nb = norm(b);
    if (na < 1e-14 || nb < 1e-14) return 0.0;
    return std::asin(std::clamp(dot(a, b) / (na * nb), -1.0, 1.0));
}

// Closed-form signed solid angle contribution of one segment pair.
double segment_pair_lk(Vec3 a1, Vec3 a2, Vec3 b1, Vec3 b2) {
    Vec3 r12 = a2 - a1, r34 = b2 - b1;
    Vec3 r13 = b1 - a1, r14 = b2 - a1, r23 = b1 - a2, r24 = b2 - a2;
    Vec3 n1 = cross(r13, r14), n2 = cross(r14, r24), n3 = cross(r24, r23), n4 = cross(r23, r13);
    double omega = safe_asin_dot(n1, n2) + safe_asin_dot(n2, n3) + safe_asin_dot(n3, n4) +
                   safe_asin_dot(n4, n1);
    double s = dot(cross(r34, r12), r13);
    double sign = s > 0 ? 1.0 : (s < 0 ? -1.0 : 0.0);
    return omega * sign / (4.0 * std::numbers::pi);
}

} // namespace

double gauss_linking_integral(const std::vector<Vec3>& c1, const std::vector<Vec3>& c2,
                              bool parallel, double proximity_eps) {
    if (c1.size() < 3 || c2.size() < 3)
        throw structural_error("curves need at least 3 vertices each");
    int n1 = static_cast<int>(c1.size()), n2 = static_cast<int>(c2.size());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            if (segment_distance(c1[i], c1[(i + 1) % n1], c2[j], c2[(j + 1) % n2]) <=
                proximity_eps)
                throw numeric_error("curves touching within proximity tolerance");

    double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (parallel)
    for (int i = 0; i < n1; ++i) {
        double row = 0.0;
        for (int j = 0; j < n2; ++j)
            row += segment_pair_lk(c1[i], c1[(i + 1) % n1], c2[j], c2[(j + 1) % n2]);
        total += row;
    }
    return total;
}

CylinderCurves cylinder_curves(const Cylinder& cyl) {
    int nt = static_cast<int>(cyl.triangles.size());
    if (nt < 2 || nt % 2 != 0)
        throw structural_error("strip triangulation needs an even triangle count >= 2");
    for (const auto& t : cyl.triangles)
        for (int v : t)
            if (v < 0 || v >= static_cast<int>(cyl.points.size()))
                throw structural_error("triangle vertex index out of range");

    // Edge usage: boundary edges appear once, interior edges twice.
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (int t = 0; t < nt; ++t)
        for (int k = 0; k < 3; ++k) {
            int a = cyl.triangles[t][k], b = cyl.triangles[t][(k + 1) % 3];
            edge_tris[{std::min(a, b), std::max(a, b)}].push_back(t);
        }
    std::vector<std::pair<int, int>> boundary_edges;
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> nbr(nt); // (tri, shared edge)
    for (const auto& [e, ts] : edge_tris) {
        if (ts.size() == 1) {
            boundary_edges.push_back(e);
        } else if (ts.size() == 2) {
            nbr[ts[0]].push_back({ts[1], e});
            nbr[ts[1]].push_back({ts[0], e});
        } else {
            throw structural_error("edge shared by more than two triangles");
        }
    }

    // Dual cycle of triangles via shared interior edges.
    for (int t = 0; t < nt; ++t)
        if (nbr[t].size() != 2) throw structural_error("triangulation is not a closed strip");
    std::vector<int> dual{0};
    std::vector<std::pair<int, int>> shared; // edge between dual[i] and dual[i+1]
    std::vector<char> seen(nt, 0);
    seen[0] = 1;
    int cur = 0, prev = -1;
    // Canonical direction: step to the smaller-index neighbour first.
    while (true) {
        auto [t0, e0] = nbr[cur][0];
        auto [t1, e1] = nbr[cur][1];
        if (t1 < t0 || t0 == prev) { std::swap(t0, t1); std::swap(e0, e1); }
        int next = t0 == prev ? t1 : t0;
        auto edge = t0 == prev ? e1 : e0;
        shared.push_back(edge);
        if (next == 0) break;
        if (seen[next]) throw structural_error("strip dual is not a single cycle");
        seen[next] = 1;
        dual.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(dual.size()) != nt)
        throw structural_error("strip dual is not a single cycle");

    // Boundary cycles.
    std::map<int, std::vector<int>> badj;
    for (auto [a, b] : boundary_edges) {
        badj[a].push_back(b);
        badj[b].push_back(a);
    }
    for (const auto& [v, ns] : badj)
        if (ns.size() != 2) throw structural_error("boundary vertex without exactly two edges");
    std::vector<std::vector<int>> cycles;
    std::set<int> visited;
    for (const auto& [start, ns] : badj) {
        if (visited.count(start)) continue;
        std::vector<int> cyc{start};
        visited.insert(start);
        int v = ns[0], pv = start;
        while (v != start) {
            cyc.push_back(v);
            visited.insert(v);
            const auto& vn = badj[v];
            int nx = vn[0] == pv ? vn[1] : vn[0];
            pv = v;
            v = nx;
        }
        cycles.push_back(std::move(cyc));
    }
    if (cycles.size() != 2)
        throw structural_error("expected 2 boundary cycles, found " +
                               std::to_string(cycles.size()));

    // Orient both cycles "in the same direction": along the dual cycle.
    std::vector<int> first_pos(cyl.points.size(), -1);
    for (int i = 0; i < nt; ++i)
        for (int v : cyl.triangles[dual[i]])
            if (first_pos[v] < 0) first_pos[v] = i;
    auto orient = [&](std::vector<int>& cyc) {
        size_t m = cyc.size();
        // Start at the vertex appearing earliest along the dual cycle.
        size_t best = 0;
        for (size_t i = 1; i < m; ++i)
            if (std::tie(first_pos[cyc[i]], cyc[i]) < std::tie(first_pos[cyc[best]], cyc[best]))
                best = i;
        std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(best), cyc.end());
        int fwd = 0, bwd = 0;
        for (size_t i = 0; i < m; ++i) {
            int a = first_pos[cyc[i]], b = first_pos[cyc[(i + 1) % m]];
            if (a < b) ++fwd;
            if (a > b) ++bwd;
        }
        if (bwd > fwd) std::reverse(cyc.begin() + 1, cyc.end());
    };
    orient(cycles[0]);
    orient(cycles[1]);
    if (cycles[1][0] < cycles[0][0]) std::swap(cycles[0], cycles[1]);

    CylinderCurves out;
    for (int v : cycles[0]) out.boundary_a.push_back(cyl.points[v]);
    for (int v : cycles[1]) out.boundary_b.push_back(cyl.points[v]);
    // Medial: midpoints of alternate shared edges along the dual cycle.
    for (size_t i = 0; i < shared.size(); i += 2)
        out.medial.push_back(midpoint(cyl.points[shared[i].first], cyl.points[shared[i].second]));
    return out;
}

std::vector<int> framings_from_cylinders(const std::vector<Cylinder>& cyls, std::uint64_t seed) {
    std::vector<int> framings;
    Vec3 dir = normalized(Vec3{0.2797, 0.5437, 0.7912});
    for (size_t i = 0; i < cyls.size(); ++i) {
        CylinderCurves cc = cylinder_curves(cyls[i]);
        PLLink pair;
        pair.components = {cc.boundary_a, cc.boundary_b};
        LinkDiagram d = project(pair, dir, seed + i);
        framings.push_back(linking_number(d, 0, 1));
    }
    return framings;
}

bool check_size_bound(const PLLink& link, int n) {
    size_t total = 0;
    for (const auto& comp : link.components) total += comp.size();
    return total <= static_cast<size_t>(12) * n * n;
}

} // namespace wlink
