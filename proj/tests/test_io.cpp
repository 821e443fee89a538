#include "wlink/error.hpp"
#include "wlink/io.hpp"
#include "wlink/render.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace wlink;

TEST_CASE("link JSON round-trip is exact") {
    PLLink link;
    link.components = {{Vec3{0.1, -2.5, 3.0}, Vec3{1e-17, 4.0, 5.0}, Vec3{7.0, 8.0, 9.0}},
                       {Vec3{1, 1, 1}, Vec3{2, 2, 2}, Vec3{3, 1, 2}}};
    link.framings = {-3, 2};
    PLLink back = pllink_from_json(pllink_to_json(link));
    REQUIRE(back.components.size() == 2);
    for (size_t c = 0; c < 2; ++c) {
        REQUIRE(back.components[c].size() == link.components[c].size());
        for (size_t i = 0; i < back.components[c].size(); ++i) {
            CHECK(back.components[c][i].x == link.components[c][i].x);
            CHECK(back.components[c][i].y == link.components[c][i].y);
            CHECK(back.components[c][i].z == link.components[c][i].z);
        }
    }
    CHECK(back.framings == link.framings);

    CHECK_THROWS_AS(pllink_from_json("not json"), Error);
    CHECK_THROWS_AS(pllink_from_json("{\"points\": []}"), Error);
    CHECK_THROWS_AS(pllink_from_json("{\"components\": [[[1,2]]]}"), Error);
}

TEST_CASE("complex JSON and OBJ export") {
    Complex3 cx;
    cx.points["z0"] = Vec3{0, 0, 0};
    cx.points["z1"] = Vec3{1, 0, 0.5};
    cx.points["a2"] = Vec3{0, 1, -0.25};
    cx.triangles.push_back({"z0", "z1", "a2"});
    cx.segments.push_back({"z0", "a2"});

    Complex3 back = complex3_from_json(complex3_to_json(cx));
    CHECK(back.points.size() == 3);
    CHECK(back.points["z1"].z == 0.5);
    CHECK(back.triangles == cx.triangles);
    CHECK(back.segments == cx.segments);

    std::string obj = complex3_to_obj(cx);
    CHECK(obj.find("v 0 1 -0.25\n") != std::string::npos);
    CHECK(obj.find("f ") != std::string::npos);
    CHECK(obj.find("l ") != std::string::npos);
    // Points are indexed in name order: a2=1, z0=2, z1=3.
    CHECK(obj.find("f 2 3 1\n") != std::string::npos);
    CHECK(obj.find("l 2 1\n") != std::string::npos);

    CHECK_THROWS_AS(complex3_from_json("{\"triangles\": []}"), Error);
    CHECK_THROWS_AS(
        complex3_from_json("{\"points\": {}, \"triangles\": [[\"x\",\"y\",\"z\"]]}"), Error);
}

TEST_CASE("cylinder JSON round-trip") {
    std::vector<Cylinder> cyls{testgen::twisted_band(1, 6, 10.0, 1.0),
                               testgen::twisted_band(0, 4, 5.0, 0.5, {0, 0, 20})};
    std::vector<Cylinder> back = cylinders_from_json(cylinders_to_json(cyls));
    REQUIRE(back.size() == 2);
    CHECK(back[0].points.size() == 12);
    CHECK(back[0].triangles == cyls[0].triangles);
    CHECK(back[1].points[0].z == cyls[1].points[0].z);
    CHECK_THROWS_AS(cylinders_from_json("{}"), Error);
}

TEST_CASE("blow-up JSON input and output") {
    BlowupInput in = blowup_input_from_json(
        "{\"z2\": [0,0,0], \"chi\": [[2,0,0],[4,0,0]], \"omega\": [[0,2,0],[0,4,0]]}");
    CHECK(in.chi.size() == 2);
    CHECK(in.omega[1].y == 4.0);
    BlowupPoints pts = blowup_points(in.z2, in.chi, in.omega, BlowupVariant::plain);
    std::string out = blowup_to_json(pts);
    CHECK(out.find("\"alpha\"") != std::string::npos);
    CHECK(out.find("\"beta\"") != std::string::npos);
    CHECK_THROWS_AS(blowup_input_from_json("{\"z2\": [0,0,0]}"), Error);
}

TEST_CASE("embedding JSON and SVG rendering") {
    WingState st = init_wings(2);
    EdgeWeights w;
    w.weight.assign(st.left.edge_count(), 1);
    PlaneEmbedding emb = tutte_embed(st.left, w, default_wing_boundary(st.left, 2));
    std::string j = embedding_to_json(st.left, emb);
    CHECK(j.find("\"z1\"") != std::string::npos);
    CHECK(j.find("\"a1\"") != std::string::npos);
    CHECK(j.find("\"residual\"") != std::string::npos);

    std::string svg = embedding_to_svg(st.left, emb);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("z1") != std::string::npos);
}

TEST_CASE("diagram SVG interrupts the under strand") {
    PLLink link;
    auto circle = [](Vec3 c, bool xz) {
        std::vector<Vec3> pts;
        for (int i = 0; i < 16; ++i) {
            double t = 2 * 3.14159265358979323846 * i / 16;
            pts.push_back(xz ? c + Vec3{std::cos(t), 0, std::sin(t)}
                             : c + Vec3{std::cos(t), std::sin(t), 0});
        }
        return pts;
    };
    link.components = {circle({0, 0, 0}, false), circle({1, 0, 0}, true)};
    LinkDiagram d = project(link, {0.577, 0.577, 0.577}, 11);
    std::string svg = diagram_to_svg(d);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    // At least one crossing sign marker appears.
    bool has_sign =
        svg.find(">+") != std::string::npos || svg.find(">-") != std::string::npos;
    CHECK(has_sign);
}
