// Compares the serial reference path of each parallel kernel against its
// OpenMP version: same results required, wall times reported.

#include "wlink/geom3.hpp"
#include "wlink/linkproj.hpp"
#include "wlink/tutte.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <vector>

using namespace wlink;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::vector<Vec3> torus_curve(int n, double R, double r, int wraps, Vec3 offset,
                              std::mt19937_64& rng) {
    std::uniform_real_distribution<double> jitter(-0.01, 0.01);
    std::vector<Vec3> pts;
    for (int i = 0; i < n; ++i) {
        double t = 2 * std::numbers::pi * i / n;
        double u = wraps * t;
        Vec3 p{(R + r * std::cos(u)) * std::cos(t), (R + r * std::cos(u)) * std::sin(t),
               r * std::sin(u)};
        pts.push_back(p + offset + Vec3{jitter(rng), jitter(rng), jitter(rng)});
    }
    return pts;
}

template <typename F> double timed(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "match" : "MISMATCH");
}

} // namespace

int main() {
    std::mt19937_64 rng(7);
    int fails = 0;

    { // Gauss linking integral.
        auto c1 = torus_curve(600, 10, 2, 3, {0, 0, 0}, rng);
        auto c2 = torus_curve(600, 10, 2, 5, {0, 0, 6}, rng);
        double rs = 0, rp = 0;
        double ts = timed([&] { rs = gauss_linking_integral(c1, c2, false); });
        double tp = timed([&] { rp = gauss_linking_integral(c1, c2, true); });
        bool agree = std::abs(rs - rp) < 1e-9;
        report("gauss_linking_integral", ts, tp, agree);
        fails += !agree;
    }

    { // Projection crossing sweep.
        PLLink link;
        link.components.push_back(torus_curve(900, 10, 2, 3, {0, 0, 0}, rng));
        link.components.push_back(torus_curve(900, 10, 2, 5, {1, 2, 5}, rng));
        LinkDiagram ds, dp;
        double ts = timed([&] { ds = project(link, {0.3, 0.5, 0.8}, 11, 1000, false); });
        double tp = timed([&] { dp = project(link, {0.3, 0.5, 0.8}, 11, 1000, true); });
        bool agree = ds.crossings.size() == dp.crossings.size();
        for (size_t i = 0; agree && i < ds.crossings.size(); ++i)
            agree = ds.crossings[i].id == dp.crossings[i].id &&
                    ds.crossings[i].sign == dp.crossings[i].sign;
        report("projection crossing sweep", ts, tp, agree);
        fails += !agree;
    }

    { // Jacobi sweeps on a grid graph.
        int side = 260;
        auto idx = [&](int r, int c) { return r * side + c; };
        std::vector<std::vector<std::pair<int, double>>> adj(side * side);
        std::vector<char> fixed(side * side, 0);
        std::vector<Vec2> pos_s(side * side), pos_p;
        for (int r = 0; r < side; ++r)
            for (int c = 0; c < side; ++c) {
                if (r + 1 < side) {
                    adj[idx(r, c)].push_back({idx(r + 1, c), 1.0});
                    adj[idx(r + 1, c)].push_back({idx(r, c), 1.0});
                }
                if (c + 1 < side) {
                    adj[idx(r, c)].push_back({idx(r, c + 1), 1.0});
                    adj[idx(r, c + 1)].push_back({idx(r, c), 1.0});
                }
                bool edge = r == 0 || c == 0 || r == side - 1 || c == side - 1;
                fixed[idx(r, c)] = edge;
                pos_s[idx(r, c)] = edge ? Vec2{static_cast<double>(c), static_cast<double>(r)}
                                        : Vec2{side / 2.0, side / 2.0};
            }
        pos_p = pos_s;
        double rs = 0, rp = 0;
        double ts = timed(
            [&] {
                for (int i = 0; i < 20; ++i) rs = jacobi_sweep(adj, fixed, pos_s, false);
            },
            1);
        double tp = timed(
            [&] {
                for (int i = 0; i < 20; ++i) rp = jacobi_sweep(adj, fixed, pos_p, true);
            },
            1);
        bool agree = std::abs(rs - rp) < 1e-12;
        for (size_t i = 0; agree && i < pos_s.size(); ++i)
            agree = pos_s[i].x == pos_p[i].x && pos_s[i].y == pos_p[i].y;
        report("jacobi sweeps (260x260)", ts, tp, agree);
        fails += !agree;
    }

    { // Triangle-intersection sweep of the cone complex.
        int n = 150;
        WingState st = init_wings(n);
        std::map<Label, Vec3> left, right;
        Vec3 a1{static_cast<double>(n), 0.0, n + 0.5};
        left[Label{'a', 1}] = a1;
        right[Label{'b', 1}] = Vec3{-a1.x, 0.0, a1.z};
        for (int j = 1; j <= 2 * n; ++j) {
            left[Label{'z', j}] = right[Label{'z', j}] = Vec3{0, 0, static_cast<double>(j)};
        }
        AxisFrame frame = default_axis_frame(n, left[Label{'a', 1}], right[Label{'b', 1}]);
        Complex3 cs, cp;
        double ts = timed([&] { cs = build_h1_diamond(st, left, right, frame, false); }, 1);
        double tp = timed([&] { cp = build_h1_diamond(st, left, right, frame, true); }, 1);
        bool agree = cs.triangles == cp.triangles;
        report("cone intersection sweep", ts, tp, agree);
        fails += !agree;
    }

    { // Rectilinearity verification on a big valid wing.
        int n = 400; // star with 2n spokes
        RotationMap map;
        int apex = map.add_vertex(Label{'a', 1});
        PlaneEmbedding emb;
        std::vector<int> zs;
        for (int j = 1; j <= 2 * n; ++j) zs.push_back(map.add_vertex(Label{'z', j}));
        for (int j = 0; j < 2 * n; ++j) {
            int e = map.add_edge(apex, zs[j], EdgeClass::wing);
            map.star(apex).push_back(e);
            map.star(zs[j]).push_back(e);
        }
        emb.coords.assign(map.raw_vertex_count(), {});
        emb.fixed.assign(map.raw_vertex_count(), 1);
        emb.coords[apex] = {static_cast<double>(n), n + 0.5};
        for (int j = 0; j < 2 * n; ++j) emb.coords[zs[j]] = {0.0, j + 1.0};
        bool rs = false, rp = false;
        double ts = timed([&] { rs = verify_rectilinear(map, emb, nullptr, false); });
        double tp = timed([&] { rp = verify_rectilinear(map, emb, nullptr, true); });
        bool agree = rs == rp;
        report("verify_rectilinear", ts, tp, agree);
        fails += !agree;
    }

    return fails == 0 ? 0 : 1;
}
