#pragma once

#include "wlink/geom3.hpp"
#include "wlink/geometry.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace wlink {

struct Crossing {
    int id = 0;
    int sign = 0; // +1 / -1, right-handed (over tangent, under tangent)
    int over_component = -1, under_component = -1;
    double over_pos = 0, under_pos = 0; // segment index + parameter along the component
    Vec2 point;                         // projected crossing point
};

struct Passage {
    int crossing_id = 0;
    bool over = false;
    double pos = 0;
};

struct LinkDiagram {
    int component_count = 0;
    std::vector<Crossing> crossings;
    std::vector<std::vector<Passage>> sequences; // per component, in strand order
    std::vector<std::vector<Vec2>> projected;    // projected closed polylines
    Vec3 direction;                              // accepted projection direction
};

// Structural validation: >= 3 vertices per component, consecutive vertices
// distinct; with `check_disjoint`, pairwise/self segment clearance above eps.
void validate_link(const PLLink& link, bool check_disjoint = false, double eps = 1e-9);

// Generic projection along a direction sampled near `direction` (rejection
// sampling driven by `seed`): no near-parallel crossing pair, no crossing near
// a segment endpoint, no coincident crossings.  Throws numeric_error when no
// generic direction is found within `max_attempts`.
LinkDiagram project(const PLLink& link, Vec3 direction, std::uint64_t seed,
                    int max_attempts = 1000, bool parallel = true);

// Half the algebraic crossing sign sum between two distinct components.
int linking_number(const LinkDiagram& diagram, int comp1, int comp2);

// Algebraic self-crossing sign sum of one component.
int writhe(const LinkDiagram& diagram, int comp);

// Independent numeric oracle: the Gauss double integral evaluated by the
// closed-form solid-angle contribution of each segment pair.
double gauss_linking_integral(const std::vector<Vec3>& c1, const std::vector<Vec3>& c2,
                              bool parallel = true, double proximity_eps = 1e-9);

struct Cylinder {
    std::vector<Vec3> points;
    std::vector<std::array<int, 3>> triangles; // closed strip triangulation
};

struct CylinderCurves {
    std::vector<Vec3> boundary_a, boundary_b; // oriented the same way
    std::vector<Vec3> medial;                 // midpoints of alternate cross-edges
};

// Extracts the two boundary cycles and the medial cycle of a closed strip.
// Throws structural_error unless the triangulation has exactly two boundary
// cycles and a single closed dual cycle.
CylinderCurves cylinder_curves(const Cylinder& cyl);

// framing_j = linking number of cylinder j's two boundaries, same orientation.
std::vector<int> framings_from_cylinders(const std::vector<Cylinder>& cyls, std::uint64_t seed);

// Total segment count <= 12 n^2.
bool check_size_bound(const PLLink& link, int n);

} // namespace wlink
