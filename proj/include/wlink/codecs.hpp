#pragma once

#include "wlink/linkproj.hpp"
#include "wlink/planar_map.hpp"

#include <array>
#include <string>
#include <vector>

namespace wlink {

// Signed crossing labels per component; "+" is an up (over) passage and "-" a
// down (under) passage.
struct GaussCode {
    std::vector<std::vector<int>> components;
};

GaussCode parse_gauss(const std::string& text);
std::string serialize_gauss(const GaussCode& code);
// Every label must appear exactly twice overall, once with each sign.
void validate_gauss(const GaussCode& code);

struct Quintet {
    int crossing = 0;
    bool under = false; // d = under, u = over
    int in_leg = 0, out_leg = 0;
    int component = 0;
};

struct DuetQuintetFile {
    std::vector<std::array<int, 2>> duets; // perfect matching on legs 1..4k
    std::vector<Quintet> quintets;         // two per crossing
    int crossing_count() const { return static_cast<int>(quintets.size()) / 2; }
    int component_count() const;
};

DuetQuintetFile parse_dq(const std::string& text);
std::string serialize_dq(const DuetQuintetFile& file);

// Crossings become degree-4 vertices whose star is the counterclockwise leg
// order (4x-3, 4x-2, 4x-1, 4x); duets become the edges.
RotationMap dq_to_map(const DuetQuintetFile& file);

// Strand traversal honoring the quintet in-leg/out-leg orientation.
LinkDiagram dq_to_diagram(const DuetQuintetFile& file);
GaussCode dq_to_gauss(const DuetQuintetFile& file);
GaussCode diagram_to_gauss(const LinkDiagram& diagram);

struct LinkingMatrix {
    std::vector<std::vector<int>> m;
    bool diagonal_is_writhe = true; // false when true framings were supplied
};

LinkingMatrix linking_matrix(const LinkDiagram& diagram,
                             const std::vector<int>* framings = nullptr);
std::string linking_matrix_csv(const LinkingMatrix& lm);

// Inserts |f - w| curls of sign (f - w) per component so writhe = target.
LinkDiagram blackboard_frame(const LinkDiagram& diagram, const std::vector<int>& targets);

// True iff some choice of crossing chiralities embeds the code's 4-regular
// graph in the sphere (exhaustive search, capped at 22 crossings, with the
// interlacement-parity criterion as a fast necessary filter).
bool realizable(const GaussCode& code);

} // namespace wlink
