#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wlink::testgen {

namespace {

// Linearized wing star of a pendant vertex: z-indices after the nervure cut.
std::vector<int> wing_z_list(const RotationMap& map, int v) {
    const auto& st = map.star(v);
    int cut = 0;
    for (int i = 0; i < static_cast<int>(st.size()); ++i)
        if (map.edge_class(st[i]) == EdgeClass::nervure) cut = i;
    std::vector<int> zs;
    int deg = static_cast<int>(st.size());
    for (int k = 1; k <= deg; ++k) {
        int e = st[(cut + k) % deg];
        if (map.edge_class(e) == EdgeClass::nervure) continue;
        zs.push_back(map.label(map.other_end(e, v)).index);
    }
    return zs;
}

} // namespace

MoveLog random_move_log(int n, int moves, std::mt19937_64& rng) {
    MoveLog log;
    log.n = n;
    WingState st = init_wings(n);
    for (int m = 1; m <= moves; ++m) {
        int color = static_cast<int>(rng() % 2);
        MoveRecord mv;
        bool found = false;
        for (int attempt = 0; attempt < 2 && !found; ++attempt, color ^= 1) {
            const RotationMap& map = color == 1 ? st.left : st.right;
            std::vector<int> cands;
            for (int v : pendant_nervure_vertices(map))
                if (wing_z_list(map, v).size() >= 2) cands.push_back(v);
            if (cands.empty()) continue;
            int v = cands[rng() % cands.size()];
            std::vector<int> zs = wing_z_list(map, v);
            int k = static_cast<int>(zs.size());
            // Cut so that the two flanking z-indices are distinct.
            std::vector<int> cuts;
            for (int c = 1; c < k; ++c)
                if (zs[c - 1] != zs[c]) cuts.push_back(c);
            if (cuts.empty()) continue;
            int c = cuts[rng() % cuts.size()];
            mv.m = m;
            mv.color = color;
            mv.target = map.label(v);
            mv.head_u = static_cast<int>(rng() % 4) + 1;
            mv.head_v = static_cast<int>(rng() % 4) + 1;
            mv.tail_r = static_cast<int>(rng() % 4) + 1;
            mv.tail_s = static_cast<int>(rng() % 4) + 1;
            mv.tail_type = "P_1";
            mv.split_first.assign(zs.begin(), zs.begin() + c);
            mv.split_second.assign(zs.begin() + c, zs.end());
            mv.new_z = {zs[c - 1], zs[c]};
            found = true;
        }
        if (!found) break;
        st = apply_wbp_move(st, mv);
        log.moves.push_back(std::move(mv));
    }
    return log;
}

TriGraph random_stacked_triangulation(int verts, std::mt19937_64& rng) {
    TriGraph g;
    if (verts < 4) verts = 4;
    int v0 = g.map.add_vertex(Label{'a', 1});
    int v1 = g.map.add_vertex(Label{'a', 2});
    int v2 = g.map.add_vertex(Label{'a', 3});
    auto link = [&](int u, int v) {
        int e = g.map.add_edge(u, v, EdgeClass::wing);
        g.map.star(u).push_back(e);
        g.map.star(v).push_back(e);
    };
    link(v0, v1);
    link(v1, v2);
    link(v2, v0);
    g.fixed[v0] = Vec2{0.0, 0.0};
    g.fixed[v1] = Vec2{1.0, 0.0};
    g.fixed[v2] = Vec2{0.5, std::sqrt(3.0) / 2.0};

    struct Tri {
        int a, b, c, depth;
    };
    std::vector<Tri> tris{{v0, v1, v2, 0}};
    constexpr int max_depth = 16; // keeps barycentric separations >> 1e-12
    for (int i = 3; i < verts; ++i) {
        std::vector<int> eligible;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t)
            if (tris[t].depth < max_depth) eligible.push_back(t);
        int t = eligible[rng() % eligible.size()];
        Tri old = tris[t];
        int v = g.map.add_vertex(Label{'a', i + 1});
        link(v, old.a);
        link(v, old.b);
        link(v, old.c);
        tris[t] = {old.a, old.b, v, old.depth + 1};
        tris.push_back({old.b, old.c, v, old.depth + 1});
        tris.push_back({old.c, old.a, v, old.depth + 1});
    }
    return g;
}

PLLink random_two_component_link(std::mt19937_64& rng, int max_vertices) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int wraps = static_cast<int>(rng() % 7) - 3; // -3..3
    double R = 10.0, r = 1.5 + 1.5 * unit(rng);
    int n_core = 12 + static_cast<int>(rng() % 8);
    int n_tube = std::min(max_vertices, 24 + 5 * std::abs(wraps));

    // Random rotation from three Euler angles, plus translation.
    double a = 2 * std::numbers::pi * unit(rng), b = 2 * std::numbers::pi * unit(rng),
           c = 2 * std::numbers::pi * unit(rng);
    auto rot = [&](Vec3 p) {
        Vec3 q{p.x, p.y * std::cos(a) - p.z * std::sin(a), p.y * std::sin(a) + p.z * std::cos(a)};
        Vec3 s{q.x * std::cos(b) + q.z * std::sin(b), q.y, -q.x * std::sin(b) + q.z * std::cos(b)};
        return Vec3{s.x * std::cos(c) - s.y * std::sin(c), s.x * std::sin(c) + s.y * std::cos(c),
                    s.z};
    };
    Vec3 shift{10 * unit(rng), 10 * unit(rng), 10 * unit(rng)};
    auto place = [&](Vec3 p) { return rot(p) + shift; };
    std::uniform_real_distribution<double> jit(-0.02, 0.02);

    PLLink link;
    std::vector<Vec3> core;
    for (int i = 0; i < n_core; ++i) {
        double t = 2 * std::numbers::pi * i / n_core;
        core.push_back(place(Vec3{R * std::cos(t) + jit(rng), R * std::sin(t) + jit(rng),
                                  jit(rng)}));
    }
    std::vector<Vec3> tube;
    for (int i = 0; i < n_tube; ++i) {
        double t = 2 * std::numbers::pi * i / n_tube;
        double u = wraps * t;
        double rad = R + r * std::cos(u);
        Vec3 p = wraps == 0 ? Vec3{R + 3 * r + r * std::cos(t), 0.0, r * std::sin(t)}
                            : Vec3{rad * std::cos(t), rad * std::sin(t), r * std::sin(u)};
        tube.push_back(place(p + Vec3{jit(rng), jit(rng), jit(rng)}));
    }
    link.components = {core, tube};
    return link;
}

Cylinder twisted_band(int twists, int samples, double R, double w, Vec3 offset) {
    Cylinder cyl;
    std::vector<int> plus(samples), minus(samples);
    for (int i = 0; i < samples; ++i) {
        double t = 2 * std::numbers::pi * i / samples;
        Vec3 er{std::cos(t), std::sin(t), 0};
        Vec3 ez{0, 0, 1};
        Vec3 center = R * er + offset;
        Vec3 dir = std::cos(twists * t) * er + std::sin(twists * t) * ez;
        plus[i] = static_cast<int>(cyl.points.size());
        cyl.points.push_back(center + w * dir);
        minus[i] = static_cast<int>(cyl.points.size());
        cyl.points.push_back(center - w * dir);
    }
    for (int i = 0; i < samples; ++i) {
        int j = (i + 1) % samples;
        cyl.triangles.push_back({plus[i], minus[i], plus[j]});
        cyl.triangles.push_back({minus[i], minus[j], plus[j]});
    }
    return cyl;
}

} // namespace wlink::testgen
