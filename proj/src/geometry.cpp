#include "wlink/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace wlink {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int exact_orient2d(Vec2 a, Vec2 b, Vec2 c) {
    // double -> rational conversion is exact, so this is the true sign.
    Rational det = (Rational(b.x) - Rational(a.x)) * (Rational(c.y) - Rational(a.y)) -
                   (Rational(b.y) - Rational(a.y)) * (Rational(c.x) - Rational(a.x));
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

} // namespace

int orient2d(Vec2 a, Vec2 b, Vec2 c) {
    // Coincident inputs are exactly degenerate; skip the rational fallback.
    if ((a.x == b.x && a.y == b.y) || (a.x == c.x && a.y == c.y) || (b.x == c.x && b.y == c.y))
        return 0;
    double detleft = (b.x - a.x) * (c.y - a.y);
    double detright = (b.y - a.y) * (c.x - a.x);
    double det = detleft - detright;
    double bound = 1e-12 * (std::abs(detleft) + std::abs(detright));
    if (std::abs(det) > bound && std::abs(det) > 0) return det > 0 ? 1 : -1;
    return exact_orient2d(a, b, c);
}

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
    if (orient2d(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

SegRelation segment_relation(Vec2 a, Vec2 b, Vec2 c, Vec2 d, Vec2* point) {
    int d1 = orient2d(c, d, a);
    int d2 = orient2d(c, d, b);
    int d3 = orient2d(a, b, c);
    int d4 = orient2d(a, b, d);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear: compare parameter intervals along the dominant axis.
        bool use_x = std::abs(b.x - a.x) + std::abs(d.x - c.x) >=
                     std::abs(b.y - a.y) + std::abs(d.y - c.y);
        auto key = [&](Vec2 p) { return use_x ? p.x : p.y; };
        double lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        double lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return SegRelation::disjoint;
        if (lo == hi) {
            if (point) {
                Vec2 p = (key(a) == lo) ? a : (key(b) == lo) ? b : (key(c) == lo) ? c : d;
                *point = p;
            }
            return SegRelation::point;
        }
        return SegRelation::overlap;
    }

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        if (point) {
            double denom = cross(b - a, d - c);
            double t = cross(c - a, d - c) / denom;
            *point = a + t * (b - a);
        }
        return SegRelation::point;
    }

    // Endpoint touching.
    auto touch = [&](Vec2 p, Vec2 u, Vec2 v) { return point_on_segment(p, u, v); };
    if (d1 == 0 && touch(a, c, d)) { if (point) *point = a; return SegRelation::point; }
    if (d2 == 0 && touch(b, c, d)) { if (point) *point = b; return SegRelation::point; }
    if (d3 == 0 && touch(c, a, b)) { if (point) *point = c; return SegRelation::point; }
    if (d4 == 0 && touch(d, a, b)) { if (point) *point = d; return SegRelation::point; }
    return SegRelation::disjoint;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double* t, double* u) {
    double d1 = cross(d - c, a - c);
    double d2 = cross(d - c, b - c);
    double d3 = cross(b - a, c - a);
    double d4 = cross(b - a, d - a);
    if (!(((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
          ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))))
        return false;
    double denom = cross(b - a, d - c);
    if (denom == 0) return false;
    if (t) *t = cross(c - a, d - c) / denom;
    if (u) *u = cross(c - a, b - a) / denom;
    return true;
}

double segment_distance(Vec3 p1, Vec3 p2, Vec3 q1, Vec3 q2) {
    // Standard clamped closest-point computation (Ericson).
    Vec3 d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
    double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    double s = 0, t = 0;
    const double tiny = 1e-300;
    if (a <= tiny && e <= tiny) return norm(r);
    if (a <= tiny) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        double c = dot(d1, r);
        if (e <= tiny) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            double b = dot(d1, d2);
            double denom = a * e - b * b;
            if (denom > tiny) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0) {
                t = 0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1) {
                t = 1;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    Vec3 cp1 = p1 + s * d1, cp2 = q1 + t * d2;
    return dist(cp1, cp2);
}

namespace {

// 2D coordinates of p in the plane of the triangle with orthonormal basis (u,v) at origin o.
Vec2 plane_coords(Vec3 p, Vec3 o, Vec3 u, Vec3 v) { return {dot(p - o, u), dot(p - o, v)}; }

bool point_strictly_inside_2d(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double eps_area) {
    double s1 = cross(b - a, p - a);
    double s2 = cross(c - b, p - b);
    double s3 = cross(a - c, p - c);
    double area = cross(b - a, c - a);
    if (area < 0) { s1 = -s1; s2 = -s2; s3 = -s3; area = -area; }
    double margin = eps_area * area;
    return s1 > margin && s2 > margin && s3 > margin;
}

bool point_in_closed_2d(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double eps_area) {
    double s1 = cross(b - a, p - a);
    double s2 = cross(c - b, p - b);
    double s3 = cross(a - c, p - c);
    double area = cross(b - a, c - a);
    if (area < 0) { s1 = -s1; s2 = -s2; s3 = -s3; area = -area; }
    double margin = -eps_area * area;
    return s1 > margin && s2 > margin && s3 > margin;
}

} // namespace

bool segment_pierces_triangle(Vec3 a, Vec3 b, Vec3 p, Vec3 q, Vec3 r, double eps) {
    Vec3 n = cross(q - p, r - p);
    double area2 = norm(n);
    double scale = std::max({dist(p, q), dist(q, r), dist(r, p)});
    if (area2 <= eps * scale * scale) return false; // degenerate triangle: empty interior
    n = (1.0 / area2) * n;

    double da = dot(n, a - p);
    double db = dot(n, b - p);
    double tol = eps * std::max(scale, std::max(norm(a - p), norm(b - p)));

    Vec3 u = normalized(q - p);
    Vec3 v = cross(n, u);
    Vec2 A = plane_coords(p, p, u, v), B = plane_coords(q, p, u, v), C = plane_coords(r, p, u, v);

    if (std::abs(da) <= tol && std::abs(db) <= tol) {
        // Coplanar segment: pierces iff it meets the open interior.
        Vec2 s0 = plane_coords(a, p, u, v), s1 = plane_coords(b, p, u, v);
        if (point_strictly_inside_2d(s0, A, B, C, 1e-12) ||
            point_strictly_inside_2d(s1, A, B, C, 1e-12))
            return true;
        if (point_strictly_inside_2d(0.5 * (s0 + s1), A, B, C, 1e-12)) return true;
        // A chord crossing the triangle: proper crossing with any edge means the
        // segment enters the interior (unless it merely grazes a vertex).
        double t, w;
        int crossings = 0;
        if (segments_cross(s0, s1, A, B, &t, &w)) ++crossings;
        if (segments_cross(s0, s1, B, C, &t, &w)) ++crossings;
        if (segments_cross(s0, s1, C, A, &t, &w)) ++crossings;
        return crossings >= 2;
    }

    if ((da > tol && db > tol) || (da < -tol && db < -tol)) return false;

    double denom = da - db;
    if (std::abs(denom) <= tol) return false; // parallel graze
    double t = da / denom;
    if (t <= 0.0 || t >= 1.0) return false;
    Vec3 x = a + t * (b - a);
    Vec2 X = plane_coords(x, p, u, v);
    return point_strictly_inside_2d(X, A, B, C, eps);
}

namespace {

// Contact points of a closed segment with a closed triangle.
void collect_contacts(Vec3 a, Vec3 b, const Triangle3& T, double eps, std::vector<Vec3>& out) {
    Vec3 p = T.pts[0], q = T.pts[1], r = T.pts[2];
    Vec3 n = cross(q - p, r - p);
    double area2 = norm(n);
    double scale = std::max({dist(p, q), dist(q, r), dist(r, p), dist(a, b)});
    if (area2 <= 1e-300) return;
    n = (1.0 / area2) * n;
    Vec3 u = normalized(q - p);
    Vec3 v = cross(n, u);
    Vec2 A = plane_coords(p, p, u, v), B = plane_coords(q, p, u, v), C = plane_coords(r, p, u, v);

    double da = dot(n, a - p);
    double db = dot(n, b - p);
    double tol = eps * std::max(1.0, scale);

    auto lift = [&](Vec2 w) { return p + w.x * u + w.y * v; };

    if (std::abs(da) <= tol && std::abs(db) <= tol) {
        // Coplanar: clip the segment against the triangle; record clip endpoints.
        Vec2 s0 = plane_coords(a, p, u, v), s1 = plane_coords(b, p, u, v);
        std::vector<double> params;
        if (point_in_closed_2d(s0, A, B, C, 1e-12)) params.push_back(0.0);
        if (point_in_closed_2d(s1, A, B, C, 1e-12)) params.push_back(1.0);
        double t, w;
        if (segments_cross(s0, s1, A, B, &t, &w)) params.push_back(t);
        if (segments_cross(s0, s1, B, C, &t, &w)) params.push_back(t);
        if (segments_cross(s0, s1, C, A, &t, &w)) params.push_back(t);
        if (params.empty()) return;
        auto [lo, hi] = std::minmax_element(params.begin(), params.end());
        out.push_back(lift(s0 + *lo * (s1 - s0)));
        out.push_back(lift(s0 + *hi * (s1 - s0)));
        out.push_back(lift(s0 + 0.5 * (*lo + *hi) * (s1 - s0)));
        return;
    }

    if ((da > tol && db > tol) || (da < -tol && db < -tol)) return;

    if (std::abs(da) <= tol) {
        Vec2 s0 = plane_coords(a, p, u, v);
        if (point_in_closed_2d(s0, A, B, C, eps)) out.push_back(a);
    }
    if (std::abs(db) <= tol) {
        Vec2 s1 = plane_coords(b, p, u, v);
        if (point_in_closed_2d(s1, A, B, C, eps)) out.push_back(b);
    }
    if ((da > tol && db < -tol) || (da < -tol && db > tol)) {
        double t = da / (da - db);
        Vec3 x = a + t * (b - a);
        Vec2 X = plane_coords(x, p, u, v);
        if (point_in_closed_2d(X, A, B, C, eps)) out.push_back(x);
    }
}

double dist_point_segment(Vec3 x, Vec3 a, Vec3 b) {
    Vec3 d = b - a;
    double dd = dot(d, d);
    if (dd <= 1e-300) return dist(x, a);
    double t = std::clamp(dot(x - a, d) / dd, 0.0, 1.0);
    return dist(x, a + t * d);
}

} // namespace

bool triangles_intersect_improperly(const Triangle3& s, const Triangle3& t, double eps) {
    std::vector<int> shared;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (s.verts[i] >= 0 && s.verts[i] == t.verts[j]) shared.push_back(i);
    if (shared.size() >= 3) return false; // identical triangle

    double scale = 0;
    for (int i = 0; i < 3; ++i) {
        scale = std::max(scale, dist(s.pts[i], s.pts[(i + 1) % 3]));
        scale = std::max(scale, dist(t.pts[i], t.pts[(i + 1) % 3]));
    }
    double tol = eps * std::max(1.0, scale);

    // Admissible contact set: nothing / the shared vertex / the shared edge.
    auto allowed = [&](Vec3 x) {
        if (shared.empty()) return false;
        if (shared.size() == 1) return dist(x, s.pts[shared[0]]) <= tol;
        return dist_point_segment(x, s.pts[shared[0]], s.pts[shared[1]]) <= tol;
    };

    std::vector<Vec3> contacts;
    for (int i = 0; i < 3; ++i) {
        collect_contacts(s.pts[i], s.pts[(i + 1) % 3], t, eps, contacts);
        collect_contacts(t.pts[i], t.pts[(i + 1) % 3], s, eps, contacts);
    }
    for (const Vec3& x : contacts)
        if (!allowed(x)) return true;
    return false;
}

} // namespace wlink
