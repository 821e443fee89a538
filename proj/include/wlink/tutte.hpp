#pragma once

#include "wlink/geometry.hpp"
#include "wlink/planar_map.hpp"

#include <map>
#include <string>
#include <vector>

namespace wlink {

enum class Side { left, right };
enum class Solver { direct, iterative };

struct EdgeWeights {
    std::vector<int> weight; // per edge id, >= 1
};

// Weight heuristic against clustering: wing edges weigh 1, a nervure edge
// weighs multiplier times the number of pendant nervure vertices hanging on
// its far-from-root side (floored at 1).
EdgeWeights nervure_weights(const WingState& state, Side side, int multiplier);

struct PlaneEmbedding {
    std::vector<Vec2> coords;  // per vertex id
    std::vector<char> fixed;   // per vertex id
    double residual = 0;       // max barycentric defect over free vertices
};

struct TutteOptions {
    Solver solver = Solver::direct;
    int max_iters = 0; // 0 -> 50 * vertex count
    double tol = 1e-10;
};

// Weighted Tutte barycentric embedding with prescribed boundary positions.
// Every free vertex ends up at the weighted average of its neighbours within
// `tol`; throws numeric_error on non-convergence (iterative path) and
// structural_error on a disconnected graph or a degenerate boundary.
PlaneEmbedding tutte_embed(const RotationMap& map, const EdgeWeights& weights,
                           const std::map<int, Vec2>& fixed_coords,
                           const TutteOptions& opts = {});

// Default boundary for one wing: z3^j at (0, j), apex at (n, (2n+1)/2).
std::map<int, Vec2> default_wing_boundary(const RotationMap& map, int n);

// Full boundary assignment for a grown wing.  Axis vertices go to (0, j); the
// non-axis vertices on the outer face walk between z3^1 and z3^2n are pinned
// along the two sides of the outer triangle (apex (n, (2n+1)/2)).
std::map<int, Vec2> wing_boundary(const RotationMap& map, int n);

struct SegmentViolation {
    int edge_a = -1, edge_b = -1;
};

// True iff the straight-line drawing is an embedding: non-adjacent closed
// segments are disjoint and adjacent segments meet only at the shared vertex.
bool verify_rectilinear(const RotationMap& map, const PlaneEmbedding& emb,
                        std::vector<SegmentViolation>* violations = nullptr,
                        bool parallel = true);

// Rotates the half-plane drawing back into 3-space: left (x,z) -> (x,0,z),
// right (x,z) -> (-x,0,z).  Z-vertices must sit exactly on the axis.
std::map<Label, Vec3> lift_to_halfplane(const RotationMap& map, const PlaneEmbedding& emb,
                                        Side side);

// One Jacobi relaxation sweep; exposed for the benchmark.  Returns the
// post-sweep residual.  `parallel` toggles the OpenMP path.
double jacobi_sweep(const std::vector<std::vector<std::pair<int, double>>>& adj,
                    const std::vector<char>& fixed, std::vector<Vec2>& pos, bool parallel);

} // namespace wlink
