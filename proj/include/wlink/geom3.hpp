#pragma once

#include "wlink/geometry.hpp"
#include "wlink/planar_map.hpp"
#include "wlink/tutte.hpp"

#include <map>
#include <string>
#include <vector>

namespace wlink {

struct Complex3 {
    std::map<std::string, Vec3> points;
    std::vector<std::array<std::string, 3>> triangles;
    std::vector<std::array<std::string, 2>> segments;
};

struct AxisFrame {
    Vec3 z0, z1, z2;
    std::vector<Vec3> z3; // 2n axis points, index j-1 -> z3^j
};

// Default frame for given lifted apex positions: axis points (0,0,j), z2 lifted
// off the wing plane at (0,n,0), z0/z1 reflected through the apexes so the
// midpoint constraints hold.
AxisFrame default_axis_frame(int n, Vec3 a1, Vec3 b1);

// Cone x * Y over a polyline base: one triangle per base segment.
std::vector<Triangle3> cone(Vec3 apex, const std::vector<Vec3>& base);

// Distinguished representative wing edge per axis vertex, per side: the unique
// incident edge, else the edge whose far endpoint has the smallest-indexed
// upper-case label (upper case preferred over lower case).
struct Representative {
    Side side;
    int z_index;
    Label far; // non-Z endpoint of the representative edge
};
std::vector<Representative> select_representatives(const WingState& state);

// Cone complex over both lifted wings plus the closing triangles
// {z3^j z1 z0}.  Runs the pairwise improper-intersection check.
Complex3 build_h1_diamond(const WingState& state, const std::map<Label, Vec3>& left_lift,
                          const std::map<Label, Vec3>& right_lift, const AxisFrame& frame,
                          bool parallel = true);

enum class BlowupVariant { plain, refined, bump };

struct BlowupPoints {
    std::vector<Vec3> beta;  // beta[j] = beta_j, defined from j=0
    std::vector<Vec3> zeta;  // zeta[j] = zeta_j, defined from j=0
    std::vector<Vec3> alpha; // alpha[j-1] = alpha_j, defined from j=1
    std::vector<Vec3> nu;    // nu[j-1] = nu_j (bump only), defined from j=1
};

// Midpoint formulas of the tail blow-up.  chi/omega are 1-based lists passed
// as chi[0] = chi_1 etc.
BlowupPoints blowup_points(Vec3 z2, const std::vector<Vec3>& chi, const std::vector<Vec3>& omega,
                           BlowupVariant variant);

struct PLLink {
    std::vector<std::vector<Vec3>> components; // closed polylines
    std::vector<int> framings;                 // empty until computed
};

// Removes vertices whose elimination triangle is pierced by no obstacle
// segment, rescanning until a fixed point; components never drop below 3
// vertices.  The link's own current segments always count as obstacles.
PLLink shortcut(const PLLink& link, const std::vector<std::array<Vec3, 2>>& obstacles);

} // namespace wlink
