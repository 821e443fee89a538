#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace wlink {

struct Vec2 {
    double x = 0, y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) {
    double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}
inline double dist(Vec3 a, Vec3 b) { return norm(a - b); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec3 midpoint(Vec3 a, Vec3 b) { return 0.5 * (a + b); }

// Sign of the orientation determinant of (b-a, c-a).  Evaluated in doubles and,
// when the magnitude falls under the uncertainty threshold, re-evaluated in
// exact rational arithmetic (doubles are exact inputs).
int orient2d(Vec2 a, Vec2 b, Vec2 c);

// p is on the closed segment [a,b].
bool point_on_segment(Vec2 p, Vec2 a, Vec2 b);

enum class SegRelation { disjoint, point, overlap };

// Closed-segment intersection classification.  For the `point` case the
// intersection point is returned.
SegRelation segment_relation(Vec2 a, Vec2 b, Vec2 c, Vec2 d, Vec2* point = nullptr);

// Transversal crossing of the open segments, with crossing parameters on each
// segment (a + t*(b-a) = c + u*(d-c)).
bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double* t = nullptr, double* u = nullptr);

// Minimum distance between closed 3D segments.
double segment_distance(Vec3 a, Vec3 b, Vec3 c, Vec3 d);

// Does the closed segment [a,b] meet the open interior of triangle (p,q,r)?
// Tolerance guards the coplanar/degenerate regime; a degenerate triangle has
// empty interior and is never pierced.
bool segment_pierces_triangle(Vec3 a, Vec3 b, Vec3 p, Vec3 q, Vec3 r, double eps = 1e-12);

struct Triangle3 {
    std::array<Vec3, 3> pts;
    std::array<int, 3> verts{-1, -1, -1}; // shared-vertex identity; -1 = anonymous
};

// Improper-intersection test for a pair of triangles: contact anywhere other
// than the simplex spanned by shared vertex ids.
bool triangles_intersect_improperly(const Triangle3& s, const Triangle3& t, double eps = 1e-9);

} // namespace wlink
