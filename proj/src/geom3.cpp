#include "wlink/geom3.hpp"

#include "wlink/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace wlink {

AxisFrame default_axis_frame(int n, Vec3 a1, Vec3 b1) {
    AxisFrame f;
    f.z2 = Vec3{0.0, static_cast<double>(n), 0.0};
    f.z0 = 2.0 * a1 - f.z2;
    f.z1 = 2.0 * b1 - f.z2;
    for (int j = 1; j <= 2 * n; ++j) f.z3.push_back(Vec3{0, 0, static_cast<double>(j)});
    return f;
}

std::vector<Triangle3> cone(Vec3 apex, const std::vector<Vec3>& base) {
    if (base.size() < 2) throw structural_error("cone base needs at least one segment");
    std::vector<Triangle3> tris;
    for (size_t i = 0; i + 1 < base.size(); ++i) {
        Vec3 p = base[i], q = base[i + 1];
        Vec3 nrm = cross(q - p, apex - p);
        double scale = std::max({dist(p, q), dist(p, apex), dist(q, apex)});
        if (norm(nrm) <= 1e-12 * scale * scale)
            throw numeric_error("degenerate cone: apex collinear with base segment " +
                                std::to_string(i));
        tris.push_back(Triangle3{{apex, p, q}, {-1, -1, -1}});
    }
    return tris;
}

std::vector<Representative> select_representatives(const WingState& state) {
    std::vector<Representative> reps;
    for (Side side : {Side::left, Side::right}) {
        const RotationMap& map = side == Side::left ? state.left : state.right;
        for (int j = 1; j <= 2 * state.n; ++j) {
            int zv = map.vertex_by_label(Label{'z', j});
            if (zv < 0 || map.star(zv).empty())
                throw structural_error("axis vertex z" + std::to_string(j) +
                                       " has no incident edge");
            Label best{};
            bool have = false;
            for (int e : map.star(zv)) {
                Label far = map.label(map.other_end(e, zv));
                if (!have) {
                    best = far;
                    have = true;
                    continue;
                }
                // Upper-case labels take precedence; within a case class the
                // smallest index wins.
                bool far_up = far.is_upper(), best_up = best.is_upper();
                if (far_up != best_up ? far_up : far.index < best.index) best = far;
            }
            reps.push_back(Representative{side, j, best});
        }
    }
    return reps;
}

namespace {

Vec3 lookup(const std::map<Label, Vec3>& lift, Label l) {
    auto it = lift.find(l);
    if (it == lift.end()) throw structural_error("missing lifted coordinate for " + to_string(l));
    return it->second;
}

} // namespace

Complex3 build_h1_diamond(const WingState& state, const std::map<Label, Vec3>& left_lift,
                          const std::map<Label, Vec3>& right_lift, const AxisFrame& frame,
                          bool parallel) {
    int n = state.n;
    if (static_cast<int>(frame.z3.size()) != 2 * n)
        throw structural_error("frame has wrong axis point count");
    // a1 / b1 may have been consumed by moves; the midpoint constraints are
    // checked only while the apexes are still alive.
    auto mid_ok = [](Vec3 m, Vec3 p) { return dist(m, p) <= 1e-9 * std::max(1.0, norm(p)); };
    if (auto it = left_lift.find(Label{'a', 1});
        it != left_lift.end() && !mid_ok(midpoint(frame.z0, frame.z2), it->second))
        throw structural_error("frame violates a1 = (z0+z2)/2");
    if (auto it = right_lift.find(Label{'b', 1});
        it != right_lift.end() && !mid_ok(midpoint(frame.z1, frame.z2), it->second))
        throw structural_error("frame violates b1 = (z1+z2)/2");
    for (const Vec3& z : frame.z3)
        if (std::abs(z.x) > 0 || std::abs(z.y) > 0)
            throw structural_error("frame axis point off the z-axis");

    Complex3 cx;
    cx.points["z0"] = frame.z0;
    cx.points["z1"] = frame.z1;
    cx.points["z2"] = frame.z2;
    for (int j = 1; j <= 2 * n; ++j) cx.points["Z" + std::to_string(j)] = frame.z3[j - 1];

    struct Tri {
        Triangle3 g;
        std::array<std::string, 3> names;
    };
    std::vector<Tri> tris;
    // Vertex identity ids for the shared-simplex allowance: 0,1,2 for z0,z1,z2;
    // 3..2+2n for the axis points; wing vertices numbered after.
    auto zid = [&](int j) { return 2 + j; };
    std::map<Label, int> wing_ids;
    auto wid = [&](Label l, Side s) {
        Label key = l; // labels are already side-disambiguated (a/A vs b/B)
        auto [it, fresh] = wing_ids.insert({key, 0});
        if (fresh) it->second = 3 + 2 * n + static_cast<int>(wing_ids.size());
        (void)s;
        return it->second;
    };

    for (const Representative& r : select_representatives(state)) {
        const auto& lift = r.side == Side::left ? left_lift : right_lift;
        Vec3 far = lookup(lift, r.far);
        Vec3 zpt = frame.z3[r.z_index - 1];
        std::string far_name = to_string(r.far);
        std::string z_name = "Z" + std::to_string(r.z_index);
        cx.points[far_name] = far;
        int fid = wid(r.far, r.side);
        Vec3 apex_a = r.side == Side::left ? frame.z0 : frame.z1;
        std::string apex_name = r.side == Side::left ? "z0" : "z1";
        int apex_id = r.side == Side::left ? 0 : 1;
        tris.push_back({Triangle3{{apex_a, far, zpt}, {apex_id, fid, zid(r.z_index)}},
                        {apex_name, far_name, z_name}});
        tris.push_back({Triangle3{{frame.z2, far, zpt}, {2, fid, zid(r.z_index)}},
                        {"z2", far_name, z_name}});
    }
    for (int j = 1; j <= 2 * n; ++j) {
        tris.push_back({Triangle3{{frame.z3[j - 1], frame.z1, frame.z0}, {zid(j), 1, 0}},
                        {"Z" + std::to_string(j), "z1", "z0"}});
    }

    // Exhaustive pairwise improper-intersection check.
    int nt = static_cast<int>(tris.size());
    std::atomic<int> bad_i{-1}, bad_j{-1};
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int i = 0; i < nt; ++i) {
        if (bad_i.load(std::memory_order_relaxed) >= 0) continue;
        for (int j = i + 1; j < nt; ++j) {
            if (triangles_intersect_improperly(tris[i].g, tris[j].g)) {
                bad_i.store(i);
                bad_j.store(j);
                break;
            }
        }
    }
    if (bad_i.load() >= 0) {
        auto nm = [&](int i) {
            return tris[i].names[0] + "-" + tris[i].names[1] + "-" + tris[i].names[2];
        };
        throw numeric_error("improper triangle intersection: " + nm(bad_i.load()) + " vs " +
                            nm(bad_j.load()));
    }

    for (const Tri& t : tris) cx.triangles.push_back(t.names);
    return cx;
}

BlowupPoints blowup_points(Vec3 z2, const std::vector<Vec3>& chi, const std::vector<Vec3>& omega,
                           BlowupVariant variant) {
    BlowupPoints out;
    // beta_j = (z2 + chi_{j+1})/2 and zeta_j = (z2 + omega_{j+1})/2, from j=0.
    for (const Vec3& c : chi) out.beta.push_back(midpoint(z2, c));
    for (const Vec3& w : omega) out.zeta.push_back(midpoint(z2, w));

    switch (variant) {
    case BlowupVariant::plain:
        for (size_t j = 1; j < std::min(out.beta.size(), out.zeta.size()); ++j)
            out.alpha.push_back(midpoint(out.zeta[j], out.beta[j]));
        break;
    case BlowupVariant::refined:
        // alpha_j = (omega_j + beta_j)/2; omega is 1-based so omega_j = omega[j-1].
        for (size_t j = 1; j < out.beta.size() && j <= omega.size(); ++j)
            out.alpha.push_back(midpoint(omega[j - 1], out.beta[j]));
        break;
    case BlowupVariant::bump:
        // nu_j = (z2 + omega_j)/2, alpha_j = (beta_{j-1} + nu_j)/2.
        for (size_t j = 1; j <= omega.size(); ++j) out.nu.push_back(midpoint(z2, omega[j - 1]));
        for (size_t j = 1; j <= out.nu.size() && j <= out.beta.size(); ++j)
            out.alpha.push_back(midpoint(out.beta[j - 1], out.nu[j - 1]));
        break;
    }
    if (out.alpha.empty() && !chi.empty() && !omega.empty())
        throw structural_error("blow-up lists too short for requested indices");
    return out;
}

PLLink shortcut(const PLLink& link, const std::vector<std::array<Vec3, 2>>& obstacles) {
    PLLink cur = link;
    for (const auto& comp : cur.components)
        if (comp.size() < 3) throw structural_error("link component with fewer than 3 vertices");

    bool removed = true;
    while (removed) {
        removed = false;
        for (size_t ci = 0; ci < cur.components.size() && !removed; ++ci) {
            auto& comp = cur.components[ci];
            if (comp.size() <= 3) continue;
            for (size_t vi = 0; vi < comp.size(); ++vi) {
                size_t prev = (vi + comp.size() - 1) % comp.size();
                size_t next = (vi + 1) % comp.size();
                Vec3 p = comp[prev], v = comp[vi], q = comp[next];

                bool pierced = false;
                auto test = [&](Vec3 s0, Vec3 s1) {
                    if (!pierced && segment_pierces_triangle(s0, s1, p, v, q)) pierced = true;
                };
                for (const auto& ob : obstacles) test(ob[0], ob[1]);
                // The link's own current segments, except the two incident ones.
                for (size_t cj = 0; cj < cur.components.size() && !pierced; ++cj) {
                    const auto& other = cur.components[cj];
                    for (size_t k = 0; k < other.size() && !pierced; ++k) {
                        size_t k2 = (k + 1) % other.size();
                        if (cj == ci && (k == prev || k == vi)) continue;
                        test(other[k], other[k2]);
                    }
                }
                if (!pierced) {
                    comp.erase(comp.begin() + static_cast<long>(vi));
                    removed = true;
                    break; // restart the scan
                }
            }
        }
    }
    return cur;
}

} // namespace wlink
