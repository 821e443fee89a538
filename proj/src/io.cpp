#include "wlink/io.hpp"

#include "wlink/error.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace wlink {

using nlohmann::json;

namespace {

json vec3_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw format_error("expected [x, y, z] point");
    return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw format_error("malformed JSON");
    return j;
}

} // namespace

std::string pllink_to_json(const PLLink& link) {
    json j;
    j["components"] = json::array();
    for (const auto& comp : link.components) {
        json jc = json::array();
        for (const Vec3& p : comp) jc.push_back(vec3_json(p));
        j["components"].push_back(jc);
    }
    if (!link.framings.empty()) j["framings"] = link.framings;
    return j.dump(2) + "\n";
}

PLLink pllink_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("components")) throw format_error("link JSON lacks \"components\"");
    PLLink link;
    for (const json& jc : j["components"]) {
        std::vector<Vec3> comp;
        for (const json& jp : jc) comp.push_back(vec3_from(jp));
        link.components.push_back(std::move(comp));
    }
    if (j.contains("framings")) link.framings = j["framings"].get<std::vector<int>>();
    return link;
}

std::string complex3_to_json(const Complex3& cx) {
    json j;
    j["points"] = json::object();
    for (const auto& [name, p] : cx.points) j["points"][name] = vec3_json(p);
    j["triangles"] = cx.triangles;
    j["segments"] = cx.segments;
    return j.dump(2) + "\n";
}

Complex3 complex3_from_json(const std::string& text) {
    json j = parse(text);
    Complex3 cx;
    if (!j.contains("points")) throw format_error("complex JSON lacks \"points\"");
    for (auto& [name, jp] : j["points"].items()) cx.points[name] = vec3_from(jp);
    if (j.contains("triangles"))
        cx.triangles = j["triangles"].get<std::vector<std::array<std::string, 3>>>();
    if (j.contains("segments"))
        cx.segments = j["segments"].get<std::vector<std::array<std::string, 2>>>();
    for (const auto& t : cx.triangles)
        for (const auto& name : t)
            if (!cx.points.count(name)) throw format_error("triangle uses unknown point " + name);
    for (const auto& s : cx.segments)
        for (const auto& name : s)
            if (!cx.points.count(name)) throw format_error("segment uses unknown point " + name);
    return cx;
}

std::string complex3_to_obj(const Complex3& cx) {
    std::ostringstream out;
    out.precision(17);
    std::map<std::string, int> index;
    for (const auto& [name, p] : cx.points) {
        index[name] = static_cast<int>(index.size()) + 1;
        out << "v " << p.x << " " << p.y << " " << p.z << "\n";
    }
    for (const auto& t : cx.triangles)
        out << "f " << index.at(t[0]) << " " << index.at(t[1]) << " " << index.at(t[2]) << "\n";
    for (const auto& s : cx.segments) out << "l " << index.at(s[0]) << " " << index.at(s[1]) << "\n";
    return out.str();
}

std::string cylinders_to_json(const std::vector<Cylinder>& cyls) {
    json j;
    j["cylinders"] = json::array();
    for (const Cylinder& c : cyls) {
        json jc;
        jc["points"] = json::array();
        for (const Vec3& p : c.points) jc["points"].push_back(vec3_json(p));
        jc["triangles"] = c.triangles;
        j["cylinders"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::vector<Cylinder> cylinders_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("cylinders")) throw format_error("cylinder JSON lacks \"cylinders\"");
    std::vector<Cylinder> cyls;
    for (const json& jc : j["cylinders"]) {
        Cylinder c;
        for (const json& jp : jc.at("points")) c.points.push_back(vec3_from(jp));
        c.triangles = jc.at("triangles").get<std::vector<std::array<int, 3>>>();
        cyls.push_back(std::move(c));
    }
    return cyls;
}

std::string embedding_to_json(const RotationMap& map, const PlaneEmbedding& emb) {
    json j;
    j["vertices"] = json::object();
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        j["vertices"][to_string(map.label(v))] =
            json::array({emb.coords[v].x, emb.coords[v].y});
    }
    j["residual"] = emb.residual;
    return j.dump(2) + "\n";
}

std::string linking_matrix_to_json(const LinkingMatrix& lm) {
    json j;
    j["matrix"] = lm.m;
    j["diagonal"] = lm.diagonal_is_writhe ? "writhe" : "framing";
    return j.dump(2) + "\n";
}

BlowupInput blowup_input_from_json(const std::string& text) {
    json j = parse(text);
    BlowupInput in;
    if (!j.contains("z2") || !j.contains("chi") || !j.contains("omega"))
        throw format_error("blow-up JSON needs z2, chi and omega");
    in.z2 = vec3_from(j["z2"]);
    for (const json& jp : j["chi"]) in.chi.push_back(vec3_from(jp));
    for (const json& jp : j["omega"]) in.omega.push_back(vec3_from(jp));
    return in;
}

std::string blowup_to_json(const BlowupPoints& pts) {
    json j;
    auto dump = [](const std::vector<Vec3>& v) {
        json a = json::array();
        for (const Vec3& p : v) a.push_back(vec3_json(p));
        return a;
    };
    j["beta"] = dump(pts.beta);
    j["zeta"] = dump(pts.zeta);
    j["alpha"] = dump(pts.alpha);
    j["nu"] = dump(pts.nu);
    return j.dump(2) + "\n";
}

} // namespace wlink
