#include "wlink/error.hpp"
#include "wlink/geom3.hpp"

#include <doctest.h>

#include <cmath>

using namespace wlink;

namespace {

bool near(Vec3 a, Vec3 b, double eps = 1e-12) { return dist(a, b) <= eps; }

} // namespace

TEST_CASE("default axis frame satisfies the midpoint constraints") {
    Vec3 a1{2, 0, 2.5}, b1{-2, 0, 2.5};
    AxisFrame f = default_axis_frame(2, a1, b1);
    CHECK(near(f.z2, Vec3{0, 2, 0}));
    CHECK(near(midpoint(f.z0, f.z2), a1));
    CHECK(near(midpoint(f.z1, f.z2), b1));
    REQUIRE(f.z3.size() == 4);
    for (int j = 1; j <= 4; ++j) CHECK(near(f.z3[j - 1], Vec3{0, 0, static_cast<double>(j)}));
}

TEST_CASE("cone over a polyline") {
    std::vector<Vec3> base{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
    auto tris = cone(Vec3{0, 0, 5}, base);
    REQUIRE(tris.size() == 2);
    CHECK(near(tris[0].pts[0], Vec3{0, 0, 5}));
    CHECK(near(tris[0].pts[1], base[0]));
    CHECK(near(tris[0].pts[2], base[1]));
    // Apex collinear with a base segment degenerates.
    CHECK_THROWS_AS(cone(Vec3{2, 0, 0}, base), Error);
    CHECK_THROWS_AS(cone(Vec3{0, 0, 5}, std::vector<Vec3>{{0, 0, 0}}), Error);
}

TEST_CASE("representative edges prefer upper-case neighbours") {
    WingState st = init_wings(2);
    auto reps = select_representatives(st);
    REQUIRE(reps.size() == 8); // 2n per side
    for (const Representative& r : reps)
        CHECK(r.far == Label{r.side == Side::left ? 'a' : 'b', 1});

    // After a move, axis vertices adjacent to the new upper-case vertex pick it.
    WingState st1 = init_wings(1);
    MoveRecord mv;
    mv.m = 1;
    mv.color = 1;
    mv.target = Label{'a', 1};
    mv.tail_type = "P_1";
    mv.split_first = {1};
    mv.split_second = {2};
    mv.new_z = {1, 2};
    WingState st2 = apply_wbp_move(st1, mv);
    for (const Representative& r : select_representatives(st2))
        if (r.side == Side::left) CHECK(r.far == Label{'A', 1});
}

TEST_CASE("trivial wings cone to an intersection-free complex of 10n triangles") {
    WingState st = init_wings(1);
    std::map<Label, Vec3> lifts[2];
    Side sides[2] = {Side::left, Side::right};
    for (int i = 0; i < 2; ++i) {
        const RotationMap& map = sides[i] == Side::left ? st.left : st.right;
        EdgeWeights w;
        w.weight.assign(map.edge_count(), 1);
        PlaneEmbedding emb = tutte_embed(map, w, default_wing_boundary(map, 1));
        lifts[i] = lift_to_halfplane(map, emb, sides[i]);
    }
    AxisFrame frame = default_axis_frame(1, lifts[0][Label{'a', 1}], lifts[1][Label{'b', 1}]);
    Complex3 cx = build_h1_diamond(st, lifts[0], lifts[1], frame);
    CHECK(cx.triangles.size() == 10);
    CHECK(cx.points.count("z0") == 1);
    CHECK(cx.points.count("Z2") == 1);

    // A frame violating the apex midpoint constraint is rejected.
    AxisFrame bad = frame;
    bad.z0 = bad.z0 + Vec3{0.5, 0, 0};
    CHECK_THROWS_AS(build_h1_diamond(st, lifts[0], lifts[1], bad), Error);
    // Axis points must sit on the z-axis.
    AxisFrame off = frame;
    off.z3[0].x = 0.1;
    CHECK_THROWS_AS(build_h1_diamond(st, lifts[0], lifts[1], off), Error);
    // Wrong axis point count.
    AxisFrame shorter = frame;
    shorter.z3.pop_back();
    CHECK_THROWS_AS(build_h1_diamond(st, lifts[0], lifts[1], shorter), Error);
}

TEST_CASE("blow-up point formulas") {
    Vec3 z2{0, 0, 0};
    std::vector<Vec3> chi{{2, 0, 0}, {4, 0, 0}, {6, 0, 0}};
    std::vector<Vec3> omega{{0, 2, 0}, {0, 4, 0}, {0, 6, 0}};

    BlowupPoints plain = blowup_points(z2, chi, omega, BlowupVariant::plain);
    REQUIRE(plain.beta.size() == 3);
    CHECK(near(plain.beta[0], Vec3{1, 0, 0}));
    CHECK(near(plain.zeta[2], Vec3{0, 3, 0}));
    REQUIRE(plain.alpha.size() == 2);
    CHECK(near(plain.alpha[0], Vec3{1, 1, 0}));
    CHECK(near(plain.alpha[1], Vec3{1.5, 1.5, 0}));
    CHECK(plain.nu.empty());

    BlowupPoints refined = blowup_points(z2, chi, omega, BlowupVariant::refined);
    REQUIRE(refined.alpha.size() == 2);
    CHECK(near(refined.alpha[0], Vec3{1, 1, 0}));
    CHECK(near(refined.alpha[1], Vec3{1.5, 2, 0}));

    BlowupPoints bump = blowup_points(z2, chi, omega, BlowupVariant::bump);
    REQUIRE(bump.nu.size() == 3);
    CHECK(near(bump.nu[0], Vec3{0, 1, 0}));
    REQUIRE(bump.alpha.size() == 3);
    CHECK(near(bump.alpha[0], Vec3{0.5, 0.5, 0}));
    CHECK(near(bump.alpha[1], Vec3{1, 1, 0}));
    CHECK(near(bump.alpha[2], Vec3{1.5, 1.5, 0}));
}

TEST_CASE("blow-up points are affine equivariant and hull-bounded") {
    Vec3 z2{1, -2, 3};
    std::vector<Vec3> chi{{2, 1, 0}, {-4, 2, 5}, {6, -1, 2}};
    std::vector<Vec3> omega{{0, 2, -3}, {1, 4, 4}};
    auto T = [](Vec3 p) {
        return Vec3{2 * p.x + p.y - 1, p.y - 3 * p.z + 4, p.x + p.z + 0.5};
    };
    for (BlowupVariant v : {BlowupVariant::plain, BlowupVariant::refined, BlowupVariant::bump}) {
        BlowupPoints raw = blowup_points(z2, chi, omega, v);
        std::vector<Vec3> tchi, tomega;
        for (Vec3 c : chi) tchi.push_back(T(c));
        for (Vec3 w : omega) tomega.push_back(T(w));
        BlowupPoints mapped = blowup_points(T(z2), tchi, tomega, v);
        REQUIRE(mapped.alpha.size() == raw.alpha.size());
        for (size_t i = 0; i < raw.alpha.size(); ++i)
            CHECK(near(mapped.alpha[i], T(raw.alpha[i]), 1e-9));

        // Every output lies in the componentwise bounding box of the inputs.
        Vec3 lo = z2, hi = z2;
        auto grow = [&](Vec3 p) {
            lo = Vec3{std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = Vec3{std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        };
        for (Vec3 c : chi) grow(c);
        for (Vec3 w : omega) grow(w);
        auto inside = [&](Vec3 p) {
            return p.x >= lo.x - 1e-12 && p.x <= hi.x + 1e-12 && p.y >= lo.y - 1e-12 &&
                   p.y <= hi.y + 1e-12 && p.z >= lo.z - 1e-12 && p.z <= hi.z + 1e-12;
        };
        for (Vec3 p : raw.beta) CHECK(inside(p));
        for (Vec3 p : raw.zeta) CHECK(inside(p));
        for (Vec3 p : raw.alpha) CHECK(inside(p));
        for (Vec3 p : raw.nu) CHECK(inside(p));
    }
}

TEST_CASE("shortcut reduces an unobstructed hexagon to a triangle") {
    PLLink link;
    std::vector<Vec3> hex;
    for (int i = 0; i < 6; ++i) {
        double t = 2 * 3.14159265358979323846 * i / 6;
        hex.push_back({2 * std::cos(t), 2 * std::sin(t), 0});
    }
    link.components = {hex};
    PLLink out = shortcut(link, {});
    REQUIRE(out.components.size() == 1);
    CHECK(out.components[0].size() == 3);

    PLLink tiny;
    tiny.components = {{Vec3{0, 0, 0}, Vec3{1, 0, 0}}};
    CHECK_THROWS_AS(shortcut(tiny, {}), Error);
}

TEST_CASE("shortcut leaves a fully obstructed square unchanged") {
    PLLink link;
    link.components = {{Vec3{0, 0, 0}, Vec3{2, 0, 0}, Vec3{2, 2, 0}, Vec3{0, 2, 0}}};
    // One vertical stabber inside each elimination triangle.
    std::vector<std::array<Vec3, 2>> obstacles{
        {Vec3{1.2, 0.5, -1}, Vec3{1.2, 0.5, 1}},
        {Vec3{0.5, 1.2, -1}, Vec3{0.5, 1.2, 1}},
        {Vec3{1.5, 1.2, -1}, Vec3{1.5, 1.2, 1}},
    };
    PLLink out = shortcut(link, obstacles);
    CHECK(out.components[0].size() == 4);
    // Without them it collapses to a triangle.
    CHECK(shortcut(link, {}).components[0].size() == 3);
}
