#pragma once

#include "wlink/geom3.hpp"
#include "wlink/linkproj.hpp"
#include "wlink/planar_map.hpp"
#include "wlink/tutte.hpp"

#include <map>
#include <random>

namespace wlink::testgen {

// Random valid move log: every move targets a pendant vertex with >= 2 wing
// edges, splits its star into two nonempty contiguous arcs and hooks the new
// upper-case vertex to the two z-vertices flanking the cut (which keeps the
// grown wing planar).  May return fewer than `moves` moves if no pendant
// vertex is eligible.
MoveLog random_move_log(int n, int moves, std::mt19937_64& rng);

struct TriGraph {
    RotationMap map;
    std::map<int, Vec2> fixed; // outer triangle
};

// Random stacked (Apollonian-style) triangulation with `verts` vertices;
// 3-connected and planar, so Tutte's theorem applies.  Subdivision depth is
// capped so vertex separations stay well above double precision noise.
TriGraph random_stacked_triangulation(int verts, std::mt19937_64& rng);

// Random well-separated 2-component link: a jittered core circle and a tube
// curve winding `wraps` times around it, both under a random rigid motion.
PLLink random_two_component_link(std::mt19937_64& rng, int max_vertices = 40);

// Closed band around a circle of radius R whose director turns `twists` full
// turns; the two boundary curves then have linking number `twists`.
Cylinder twisted_band(int twists, int samples, double R, double w, Vec3 offset = {});

} // namespace wlink::testgen
