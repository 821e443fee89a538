#include "wlink/error.hpp"
#include "wlink/tutte.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <random>

using namespace wlink;

namespace {

struct TriCentroid {
    RotationMap map;
    int corners[3];
    int center;
};

TriCentroid triangle_with_center() {
    TriCentroid g;
    for (int i = 0; i < 3; ++i) g.corners[i] = g.map.add_vertex(Label{'a', i + 1});
    g.center = g.map.add_vertex(Label{'a', 4});
    auto link = [&](int u, int v) {
        int e = g.map.add_edge(u, v, EdgeClass::wing);
        g.map.star(u).push_back(e);
        g.map.star(v).push_back(e);
        return e;
    };
    link(g.corners[0], g.corners[1]);
    link(g.corners[1], g.corners[2]);
    link(g.corners[2], g.corners[0]);
    for (int i = 0; i < 3; ++i) link(g.center, g.corners[i]);
    return g;
}

std::map<int, Vec2> corner_coords(const TriCentroid& g) {
    return {{g.corners[0], {0, 0}}, {g.corners[1], {6, 0}}, {g.corners[2], {0, 6}}};
}

} // namespace

TEST_CASE("interior vertex lands on the (weighted) barycenter") {
    TriCentroid g = triangle_with_center();
    EdgeWeights unit;
    unit.weight.assign(g.map.edge_count(), 1);
    PlaneEmbedding emb = tutte_embed(g.map, unit, corner_coords(g));
    CHECK(emb.coords[g.center].x == doctest::Approx(2.0));
    CHECK(emb.coords[g.center].y == doctest::Approx(2.0));
    CHECK(emb.residual <= 1e-10);
    CHECK(verify_rectilinear(g.map, emb));

    // Doubling one spoke weight equals adding a parallel unit edge.
    EdgeWeights heavy = unit;
    heavy.weight[3] = 2; // center-corner0 spoke
    PlaneEmbedding emb2 = tutte_embed(g.map, heavy, corner_coords(g));
    TriCentroid h = triangle_with_center();
    int extra = h.map.add_edge(h.center, h.corners[0], EdgeClass::wing);
    h.map.star(h.center).push_back(extra);
    h.map.star(h.corners[0]).push_back(extra);
    EdgeWeights unit2;
    unit2.weight.assign(h.map.edge_count(), 1);
    PlaneEmbedding emb3 = tutte_embed(h.map, unit2, corner_coords(h));
    CHECK(emb2.coords[g.center].x == doctest::Approx(emb3.coords[h.center].x).epsilon(1e-9));
    CHECK(emb2.coords[g.center].y == doctest::Approx(emb3.coords[h.center].y).epsilon(1e-9));
    // Weighted average check: (2*(0,0)+(6,0)+(0,6))/4 = (1.5, 1.5).
    CHECK(emb2.coords[g.center].x == doctest::Approx(1.5));

    // Scaling all weights by a constant leaves the fixed point unchanged.
    EdgeWeights scaled = heavy;
    for (int& w : scaled.weight) w *= 7;
    PlaneEmbedding emb4 = tutte_embed(g.map, scaled, corner_coords(g));
    CHECK(emb4.coords[g.center].x == doctest::Approx(emb2.coords[g.center].x).epsilon(1e-10));
}

TEST_CASE("iterative solver matches the direct solve on a grid") {
    int side = 5;
    RotationMap map;
    std::vector<int> vid;
    for (int i = 0; i < side * side; ++i) vid.push_back(map.add_vertex(Label{'a', i + 1}));
    auto link = [&](int u, int v) {
        int e = map.add_edge(u, v, EdgeClass::wing);
        map.star(u).push_back(e);
        map.star(v).push_back(e);
    };
    std::map<int, Vec2> fixed;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            if (r + 1 < side) link(vid[r * side + c], vid[(r + 1) * side + c]);
            if (c + 1 < side) link(vid[r * side + c], vid[r * side + c + 1]);
            if (r == 0 || c == 0 || r == side - 1 || c == side - 1)
                fixed[vid[r * side + c]] = Vec2{static_cast<double>(c), static_cast<double>(r)};
        }
    EdgeWeights w;
    w.weight.assign(map.edge_count(), 1);
    TutteOptions direct;
    TutteOptions iter;
    iter.solver = Solver::iterative;
    PlaneEmbedding ed = tutte_embed(map, w, fixed, direct);
    PlaneEmbedding ei = tutte_embed(map, w, fixed, iter);
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        CHECK(ed.coords[v].x == doctest::Approx(ei.coords[v].x).epsilon(1e-9));
        CHECK(ed.coords[v].y == doctest::Approx(ei.coords[v].y).epsilon(1e-9));
    }
}

TEST_CASE("iterative residual decreases monotonically") {
    std::mt19937_64 rng(3);
    testgen::TriGraph g = testgen::random_stacked_triangulation(60, rng);
    std::vector<std::vector<std::pair<int, double>>> adj(g.map.raw_vertex_count());
    for (int e = 0; e < g.map.edge_count(); ++e) {
        auto ends = g.map.edge_ends(e);
        adj[ends[0]].push_back({ends[1], 1.0});
        adj[ends[1]].push_back({ends[0], 1.0});
    }
    std::vector<char> fixed(g.map.raw_vertex_count(), 0);
    std::vector<Vec2> pos(g.map.raw_vertex_count(), Vec2{0.4, 0.3});
    for (auto& [v, p] : g.fixed) {
        fixed[v] = 1;
        pos[v] = p;
    }
    double prev = 1e300;
    for (int it = 0; it < 40; ++it) {
        double res = jacobi_sweep(adj, fixed, pos, true);
        CHECK(res <= prev + 1e-12);
        prev = res;
    }
}

TEST_CASE("degenerate boundaries and disconnected graphs are rejected") {
    TriCentroid g = triangle_with_center();
    EdgeWeights w;
    w.weight.assign(g.map.edge_count(), 1);
    CHECK_THROWS_AS(tutte_embed(g.map, w, {{g.corners[0], {0, 0}}, {g.corners[1], {1, 1}}}),
                    Error);
    std::map<int, Vec2> collinear{
        {g.corners[0], {0, 0}}, {g.corners[1], {1, 1}}, {g.corners[2], {2, 2}}};
    CHECK_THROWS_AS(tutte_embed(g.map, w, collinear), Error);
    g.map.add_vertex(Label{'b', 9}); // isolated vertex
    CHECK_THROWS_AS(tutte_embed(g.map, w, corner_coords(g)), Error);
}

TEST_CASE("nervure weights follow pendant-descendant counts") {
    // Path A1 - a2 - a3: one leaf, multiplier 1 -> every nervure edge weight 1.
    WingState st = init_wings(1);
    RotationMap& m = st.left;
    int A1 = m.add_vertex(Label{'A', 1});
    int a2 = m.add_vertex(Label{'a', 2});
    int a3 = m.add_vertex(Label{'a', 3});
    auto nerv = [&](int u, int v) {
        int e = m.add_edge(u, v, EdgeClass::nervure);
        m.star(u).push_back(e);
        m.star(v).push_back(e);
        return e;
    };
    // Keep the map valid by removing the original apex star first.
    int apex = m.vertex_by_label(Label{'a', 1});
    std::vector<int> spokes = m.star(apex);
    m.remove_vertex(apex);
    for (int e : spokes) {
        m.set_edge_end(e, m.edge_ends(e)[0] == apex ? 0 : 1, A1);
        m.star(A1).push_back(e);
    }
    int e1 = nerv(A1, a2);
    int e2 = nerv(a2, a3);
    EdgeWeights w1 = nervure_weights(st, Side::left, 1);
    CHECK(w1.weight[e1] == 1);
    CHECK(w1.weight[e2] == 1);
    // Multiplier 3 scales the heuristic.
    EdgeWeights w3 = nervure_weights(st, Side::left, 3);
    CHECK(w3.weight[e1] == 3);
    CHECK(w3.weight[e2] == 3);

    // Balanced binary nervure with 4 leaves: root-adjacent edges weight 2.
    int A2 = m.add_vertex(Label{'A', 2});
    int A3 = m.add_vertex(Label{'A', 3});
    int lAA2 = nerv(A1, A2);
    int lAA3 = nerv(A1, A3);
    int l4 = nerv(A2, m.add_vertex(Label{'a', 4}));
    int l5 = nerv(A2, m.add_vertex(Label{'a', 5}));
    int l6 = nerv(A3, m.add_vertex(Label{'a', 6}));
    int l7 = nerv(A3, m.add_vertex(Label{'a', 7}));
    // The a2-a3 path still hangs under A1 but only the new edges are checked.
    EdgeWeights wb = nervure_weights(st, Side::left, 1);
    CHECK(wb.weight[lAA2] == 2);
    CHECK(wb.weight[lAA3] == 2);
    CHECK(wb.weight[l4] == 1);
    CHECK(wb.weight[l5] == 1);
    CHECK(wb.weight[l6] == 1);
    CHECK(wb.weight[l7] == 1);
    // All wing edges keep weight 1.
    for (int e : m.star(A1))
        if (m.edge_class(e) == EdgeClass::wing) CHECK(wb.weight[e] == 1);
}

TEST_CASE("rectilinearity verifier flags crossing pairs") {
    RotationMap m;
    int a = m.add_vertex(Label{'a', 1});
    int b = m.add_vertex(Label{'a', 2});
    int c = m.add_vertex(Label{'a', 3});
    int d = m.add_vertex(Label{'a', 4});
    auto link = [&](int u, int v) {
        int e = m.add_edge(u, v, EdgeClass::wing);
        m.star(u).push_back(e);
        m.star(v).push_back(e);
    };
    link(a, b);
    link(c, d);
    PlaneEmbedding emb;
    emb.coords = {{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    emb.fixed = {1, 1, 1, 1};
    std::vector<SegmentViolation> bad;
    CHECK_FALSE(verify_rectilinear(m, emb, &bad));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].edge_a == 0);
    CHECK(bad[0].edge_b == 1);
    // Move the second segment away: clean.
    emb.coords[2] = {5, 0};
    emb.coords[3] = {5, 2};
    CHECK(verify_rectilinear(m, emb));
    // Adjacent segments meeting anywhere but the shared vertex: violation.
    link(b, c); // b=(2,2), c=(5,0)
    emb.coords[c] = {1, 1}; // now edge a-b passes through c
    std::vector<SegmentViolation> bad2;
    CHECK_FALSE(verify_rectilinear(m, emb, &bad2));
}

TEST_CASE("halfplane lifting conventions") {
    RotationMap m;
    int z3 = m.add_vertex(Label{'z', 3});
    int a2 = m.add_vertex(Label{'a', 2});
    int e = m.add_edge(z3, a2, EdgeClass::wing);
    m.star(z3).push_back(e);
    m.star(a2).push_back(e);
    PlaneEmbedding emb;
    emb.coords = {{0, 3}, {1, 2}};
    emb.fixed = {1, 1};
    auto left = lift_to_halfplane(m, emb, Side::left);
    CHECK(left[Label{'z', 3}].x == 0.0);
    CHECK(left[Label{'z', 3}].z == 3.0);
    CHECK(left[Label{'a', 2}].x == 1.0);
    auto right = lift_to_halfplane(m, emb, Side::right);
    CHECK(right[Label{'a', 2}].x == -1.0);
    CHECK(right[Label{'a', 2}].y == 0.0);
    CHECK(right[Label{'a', 2}].z == 2.0);
    emb.coords[0] = {0.5, 3}; // axis vertex off the axis
    CHECK_THROWS_AS(lift_to_halfplane(m, emb, Side::left), Error);
}

TEST_CASE("r524 wings embed rectilinearly and share axis images") {
    std::mt19937_64 rng(5);
    MoveLog log = testgen::random_move_log(12, 11, rng);
    WingState st = replay_move_log(log);
    std::map<Label, Vec3> lifts[2];
    int i = 0;
    for (Side side : {Side::left, Side::right}) {
        const RotationMap& map = side == Side::left ? st.left : st.right;
        EdgeWeights w = nervure_weights(st, side, 3);
        PlaneEmbedding emb = tutte_embed(map, w, wing_boundary(map, st.n));
        CHECK(emb.residual <= 1e-10);
        CHECK(verify_rectilinear(map, emb));
        lifts[i++] = lift_to_halfplane(map, emb, side);
    }
    for (int j = 1; j <= 2 * st.n; ++j) {
        Vec3 zl = lifts[0][Label{'z', j}], zr = lifts[1][Label{'z', j}];
        CHECK(zl.x == zr.x);
        CHECK(zl.z == zr.z);
    }
}
