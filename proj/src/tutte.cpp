#include "wlink/tutte.hpp"

#include "wlink/error.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>

namespace wlink {

EdgeWeights nervure_weights(const WingState& state, Side side, int multiplier) {
    const RotationMap& map = side == Side::left ? state.left : state.right;
    if (multiplier < 1) throw structural_error("weight multiplier must be >= 1");
    EdgeWeights w;
    w.weight.assign(map.edge_count(), 1);

    // Root: the lowest-indexed upper-case vertex, or the lone apex before any
    // move touched this side.
    int root = -1;
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        Label l = map.label(v);
        if (l.is_upper() && (root < 0 || l.index < map.label(root).index)) root = v;
    }
    if (root < 0) {
        for (int v = 0; v < map.raw_vertex_count(); ++v)
            if (map.vertex_alive(v) && map.label(v).is_lower()) { root = v; break; }
    }
    if (root < 0) throw structural_error("nervure has no root");

    // Pendant-leaf counts per subtree via DFS from the root.
    std::vector<int> pend(map.raw_vertex_count(), 0);
    std::vector<std::pair<int, int>> stack{{root, -1}}; // (vertex, entering edge)
    std::vector<std::pair<int, int>> order;
    while (!stack.empty()) {
        auto [v, e_in] = stack.back();
        stack.pop_back();
        order.push_back({v, e_in});
        for (int e : map.star(v)) {
            if (map.edge_class(e) != EdgeClass::nervure || e == e_in) continue;
            stack.push_back({map.other_end(e, v), e});
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, e_in] = *it;
        if (map.label(v).is_lower() && map.nervure_degree(v) <= 1) pend[v] = 1;
        if (e_in >= 0) {
            int parent = map.other_end(e_in, v);
            pend[parent] += pend[v];
            w.weight[e_in] = std::max(1, multiplier * pend[v]);
        }
    }
    return w;
}

namespace {

std::vector<std::vector<std::pair<int, double>>> weighted_adjacency(const RotationMap& map,
                                                                    const EdgeWeights& weights) {
    std::vector<std::vector<std::pair<int, double>>> adj(map.raw_vertex_count());
    for (int e = 0; e < map.edge_count(); ++e) {
        double w = e < static_cast<int>(weights.weight.size()) ? weights.weight[e] : 1.0;
        if (w < 1) throw structural_error("edge weight below 1");
        const auto& ends = map.edge_ends(e);
        adj[ends[0]].push_back({ends[1], w});
        adj[ends[1]].push_back({ends[0], w});
    }
    return adj;
}

double residual_of(const std::vector<std::vector<std::pair<int, double>>>& adj,
                   const std::vector<char>& fixed, const std::vector<Vec2>& pos) {
    double worst = 0;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        if (fixed[v] || adj[v].empty()) continue;
        Vec2 acc{0, 0};
        double wsum = 0;
        for (auto [u, w] : adj[v]) {
            acc = acc + w * pos[u];
            wsum += w;
        }
        worst = std::max(worst, dist(pos[v], (1.0 / wsum) * acc));
    }
    return worst;
}

} // namespace

double jacobi_sweep(const std::vector<std::vector<std::pair<int, double>>>& adj,
                    const std::vector<char>& fixed, std::vector<Vec2>& pos, bool parallel) {
    int nv = static_cast<int>(adj.size());
    std::vector<Vec2> next(pos);
#pragma omp parallel for schedule(static) if (parallel)
    for (int v = 0; v < nv; ++v) {
        if (fixed[v] || adj[v].empty()) continue;
        Vec2 acc{0, 0};
        double wsum = 0;
        for (auto [u, w] : adj[v]) {
            acc = acc + w * pos[u];
            wsum += w;
        }
        next[v] = (1.0 / wsum) * acc;
    }
    pos.swap(next);
    return residual_of(adj, fixed, pos);
}

PlaneEmbedding tutte_embed(const RotationMap& map, const EdgeWeights& weights,
                           const std::map<int, Vec2>& fixed_coords, const TutteOptions& opts) {
    int nv = map.raw_vertex_count();
    if (fixed_coords.size() < 3) throw structural_error("need at least 3 fixed boundary vertices");
    {
        // Some non-collinear triple must exist among the fixed positions.
        bool noncollinear = false;
        std::vector<Vec2> pts;
        for (auto& [v, p] : fixed_coords) pts.push_back(p);
        for (size_t i = 0; i + 2 < pts.size() && !noncollinear; ++i)
            for (size_t j = i + 1; j + 1 < pts.size() && !noncollinear; ++j)
                for (size_t k = j + 1; k < pts.size() && !noncollinear; ++k)
                    if (orient2d(pts[i], pts[j], pts[k]) != 0) noncollinear = true;
        if (!noncollinear) throw structural_error("fixed boundary vertices are collinear");
    }

    auto adj = weighted_adjacency(map, weights);

    PlaneEmbedding emb;
    emb.coords.assign(nv, Vec2{});
    emb.fixed.assign(nv, 0);
    for (auto& [v, p] : fixed_coords) {
        if (v < 0 || v >= nv || !map.vertex_alive(v))
            throw structural_error("fixed vertex id out of range");
        emb.fixed[v] = 1;
        emb.coords[v] = p;
    }

    // Connectivity (over alive vertices).
    {
        std::vector<char> seen(nv, 0);
        int root = fixed_coords.begin()->first;
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, w] : adj[v])
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
        }
        for (int v = 0; v < nv; ++v)
            if (map.vertex_alive(v) && !seen[v]) throw structural_error("graph is disconnected");
    }

    std::vector<int> free_index(nv, -1);
    std::vector<int> free_verts;
    for (int v = 0; v < nv; ++v) {
        if (!map.vertex_alive(v) || emb.fixed[v]) continue;
        free_index[v] = static_cast<int>(free_verts.size());
        free_verts.push_back(v);
    }

    if (opts.solver == Solver::direct) {
        int nf = static_cast<int>(free_verts.size());
        if (nf > 0) {
            Eigen::SparseMatrix<double> L(nf, nf);
            std::vector<Eigen::Triplet<double>> trips;
            Eigen::VectorXd bx = Eigen::VectorXd::Zero(nf), by = Eigen::VectorXd::Zero(nf);
            for (int i = 0; i < nf; ++i) {
                int v = free_verts[i];
                double wsum = 0;
                for (auto [u, w] : adj[v]) {
                    wsum += w;
                    if (free_index[u] >= 0) {
                        trips.emplace_back(i, free_index[u], -w);
                    } else {
                        bx[i] += w * emb.coords[u].x;
                        by[i] += w * emb.coords[u].y;
                    }
                }
                trips.emplace_back(i, i, wsum);
            }
            L.setFromTriplets(trips.begin(), trips.end());
            Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(L);
            if (solver.info() != Eigen::Success)
                throw numeric_error("sparse factorization failed");
            Eigen::VectorXd x = solver.solve(bx);
            Eigen::VectorXd y = solver.solve(by);
            for (int i = 0; i < nf; ++i) emb.coords[free_verts[i]] = {x[i], y[i]};
        }
        emb.residual = residual_of(adj, emb.fixed, emb.coords);
        return emb;
    }

    // Iterative: Jacobi sweeps from the boundary centroid.
    Vec2 centroid{0, 0};
    for (auto& [v, p] : fixed_coords) centroid = centroid + p;
    centroid = (1.0 / fixed_coords.size()) * centroid;
    for (int v : free_verts) emb.coords[v] = centroid;
    int max_iters = opts.max_iters > 0 ? opts.max_iters : 50 * std::max(1, map.vertex_count());
    double res = residual_of(adj, emb.fixed, emb.coords);
    for (int it = 0; it < max_iters && res > opts.tol; ++it)
        res = jacobi_sweep(adj, emb.fixed, emb.coords, true);
    emb.residual = res;
    if (res > opts.tol)
        throw numeric_error("Tutte relaxation did not converge: residual " + std::to_string(res));
    return emb;
}

std::map<int, Vec2> default_wing_boundary(const RotationMap& map, int n) {
    std::map<int, Vec2> fixed;
    for (int j = 1; j <= 2 * n; ++j) {
        int v = map.vertex_by_label(Label{'z', j});
        if (v < 0) throw structural_error("missing axis vertex z" + std::to_string(j));
        fixed[v] = Vec2{0.0, static_cast<double>(j)};
    }
    for (char k : {'a', 'b'}) {
        int apex = map.vertex_by_label(Label{k, 1});
        if (apex >= 0) fixed[apex] = Vec2{static_cast<double>(n), (2.0 * n + 1.0) / 2.0};
    }
    return fixed;
}

std::map<int, Vec2> wing_boundary(const RotationMap& map, int n) {
    std::map<int, Vec2> fixed = default_wing_boundary(map, n);
    for (char k : {'a', 'b'})
        if (map.vertex_by_label(Label{k, 1}) >= 0) return fixed; // apex still alive

    // The original apex was consumed by moves: pin the whole outer face walk
    // between z3^1 and z3^2n along the sides of the outer triangle.
    int z_first = map.vertex_by_label(Label{'z', 1});
    int z_last = map.vertex_by_label(Label{'z', 2 * n});
    const std::vector<Dart>* outer = nullptr;
    size_t outer_len = 0;
    auto faces = trace_faces(map);
    for (const auto& f : faces) {
        bool has_first = false, has_last = false;
        for (const Dart& d : f) {
            has_first |= d.first == z_first;
            has_last |= d.first == z_last;
        }
        if (has_first && has_last && f.size() > outer_len) {
            outer = &f;
            outer_len = f.size();
        }
    }
    if (!outer) throw structural_error("no face contains both extreme axis vertices");

    // Longest cyclic arc of non-axis vertices running from z3^1 to z3^2n
    // (or the reverse); pin its vertices by arc position.
    size_t m = outer->size();
    std::vector<int> walk;
    for (const Dart& d : *outer) walk.push_back(d.first);
    std::vector<int> best_path;
    for (size_t s = 0; s < m; ++s) {
        if (walk[s] != z_first && walk[s] != z_last) continue;
        std::vector<int> path;
        for (size_t off = 1; off < m; ++off) {
            int v = walk[(s + off) % m];
            if (map.label(v).is_z()) {
                if ((walk[s] == z_first && v == z_last) ||
                    (walk[s] == z_last && v == z_first)) {
                    if (path.size() > best_path.size()) best_path = path;
                }
                break;
            }
            path.push_back(v);
        }
    }
    if (best_path.empty())
        throw structural_error("outer face has no wing path between the extreme axis vertices");

    Vec2 lo{0.0, 1.0}, apex{static_cast<double>(n), (2.0 * n + 1.0) / 2.0}, hi{0.0, 2.0 * n};
    size_t steps = best_path.size() + 1;
    for (size_t i = 0; i < best_path.size(); ++i) {
        double t = 2.0 * static_cast<double>(i + 1) / static_cast<double>(steps);
        Vec2 p = t <= 1.0 ? lo + t * (apex - lo) : apex + (t - 1.0) * (hi - apex);
        fixed.emplace(best_path[i], p); // first occurrence wins for repeats
    }
    return fixed;
}

bool verify_rectilinear(const RotationMap& map, const PlaneEmbedding& emb,
                        std::vector<SegmentViolation>* violations, bool parallel) {
    struct Seg {
        Vec2 a, b;
        int va, vb;
        int edge;
        double lox, hix, loy, hiy;
    };
    std::vector<Seg> segs;
    segs.reserve(map.edge_count());
    for (int e = 0; e < map.edge_count(); ++e) {
        const auto& ends = map.edge_ends(e);
        Seg s;
        s.va = ends[0];
        s.vb = ends[1];
        s.edge = e;
        s.a = emb.coords[s.va];
        s.b = emb.coords[s.vb];
        s.lox = std::min(s.a.x, s.b.x);
        s.hix = std::max(s.a.x, s.b.x);
        s.loy = std::min(s.a.y, s.b.y);
        s.hiy = std::max(s.a.y, s.b.y);
        segs.push_back(s);
    }
    int ne = static_cast<int>(segs.size());
    bool ok = true;
    // Degenerate edges are violations against themselves.
    for (int e = 0; e < ne; ++e) {
        if (segs[e].a.x == segs[e].b.x && segs[e].a.y == segs[e].b.y) {
            ok = false;
            if (violations) violations->push_back({e, e});
        }
    }

    // Plane sweep along x: only pairs with overlapping x-intervals are tested.
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.lox < b.lox; });

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (int i = 0; i < ne; ++i) {
        for (int j = i + 1; j < ne; ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            if (t.lox > s.hix) break;
            if (s.hiy < t.loy || t.hiy < s.loy) continue;
            int shared_v = -1;
            int nshared = 0;
            for (int u : {s.va, s.vb})
                for (int w : {t.va, t.vb})
                    if (u == w) { shared_v = u; ++nshared; }
            Vec2 pt;
            SegRelation rel = segment_relation(s.a, s.b, t.a, t.b, &pt);
            bool bad;
            if (nshared >= 2) {
                bad = true; // parallel edge pair drawn as coincident segments
            } else if (nshared == 1) {
                Vec2 sp = emb.coords[shared_v];
                bad = rel == SegRelation::overlap ||
                      (rel == SegRelation::point && (pt.x != sp.x || pt.y != sp.y));
            } else {
                bad = rel != SegRelation::disjoint;
            }
            if (bad) {
#pragma omp critical
                {
                    ok = false;
                    if (violations)
                        violations->push_back(
                            {std::min(s.edge, t.edge), std::max(s.edge, t.edge)});
                }
            }
        }
    }
    if (violations)
        std::sort(violations->begin(), violations->end(), [](auto& a, auto& b) {
            return std::tie(a.edge_a, a.edge_b) < std::tie(b.edge_a, b.edge_b);
        });
    return ok;
}

std::map<Label, Vec3> lift_to_halfplane(const RotationMap& map, const PlaneEmbedding& emb,
                                        Side side) {
    std::map<Label, Vec3> out;
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        Vec2 p = emb.coords[v];
        Label l = map.label(v);
        if (l.is_z() && p.x != 0.0)
            throw numeric_error("axis vertex " + to_string(l) + " has nonzero x");
        double x = side == Side::left ? p.x : -p.x;
        out[l] = Vec3{x, 0.0, p.y};
    }
    return out;
}

} // namespace wlink
