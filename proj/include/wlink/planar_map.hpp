#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wlink {

enum class EdgeClass : std::uint8_t { wing, nervure };

// Vertex labels: z<j> (axis vertices z3^j), a<i>/b<i> (lower case), A<p>/B<q> (upper case).
struct Label {
    char kind = 'z'; // one of z a A b B
    int index = 0;

    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
    bool is_z() const { return kind == 'z'; }
    bool is_lower() const { return kind == 'a' || kind == 'b'; }
    bool is_upper() const { return kind == 'A' || kind == 'B'; }
};

std::string to_string(Label l);
Label parse_label(std::string_view text);

// Planar map as a rotation system: each vertex carries the counterclockwise
// cyclic sequence of incident edge ids, and each edge id appears exactly twice
// across all stars.
class RotationMap {
  public:
    int add_vertex(Label label);
    // Creates the edge record only; the caller places the id into stars.
    int add_edge(int v, int w, EdgeClass cls);
    void remove_vertex(int v); // tombstone; edges must be re-anchored first

    int vertex_by_label(Label l) const; // -1 if absent
    bool vertex_alive(int v) const { return alive_[v]; }
    Label label(int v) const { return labels_[v]; }
    const std::vector<int>& star(int v) const { return stars_[v]; }
    std::vector<int>& star(int v) { return stars_[v]; }
    const std::array<int, 2>& edge_ends(int e) const { return ends_[e]; }
    void set_edge_end(int e, int which, int v) { ends_[e][which] = v; }
    EdgeClass edge_class(int e) const { return classes_[e]; }

    int raw_vertex_count() const { return static_cast<int>(labels_.size()); }
    int vertex_count() const;
    int edge_count() const { return static_cast<int>(ends_.size()); }
    int other_end(int e, int v) const;

    // Checks the rotation invariant: every edge id appears exactly twice across
    // stars, consistently with its endpoint record.  Throws structural_error.
    void validate() const;

    // Degree restricted to nervure edges.
    int nervure_degree(int v) const;

  private:
    std::vector<Label> labels_;
    std::vector<char> alive_;
    std::vector<std::vector<int>> stars_;
    std::vector<std::array<int, 2>> ends_;
    std::vector<EdgeClass> classes_;
};

// Face tracing on the rotation system.  Each face is the cyclic list of darts
// (vertex, star position) on its boundary walk.
using Dart = std::pair<int, int>;
std::vector<std::vector<Dart>> trace_faces(const RotationMap& map);

// Euler-characteristic genus of a connected map; throws on a disconnected map.
int map_genus(const RotationMap& map);

// wbp-move record.  The star split lists the z-indices of the wing edges
// assigned to each replacement vertex, contiguous in the target's cyclic star.
struct MoveRecord {
    int m = 0;             // 1-based move index
    int color = 0;         // balloon tail color; 1 -> a-side (left), 0 -> b-side (right)
    Label target;          // currently pendant nervure vertex
    int head_u = 0, head_v = 0;
    int tail_r = 0, tail_s = 0;
    std::string tail_type; // P_i, B_i, P'_i, B'_i
    std::vector<int> split_first, split_second;
    std::vector<int> new_z; // z-indices gaining an edge to the new upper-case vertex
};

struct MoveLog {
    int n = 0;
    std::vector<MoveRecord> moves;
};

MoveLog parse_move_log(std::istream& in);
MoveLog parse_move_log_text(const std::string& text);
std::string serialize_move_log(const MoveLog& log);

struct WingState {
    int n = 0;
    int step = 0;   // moves applied so far
    int last_a = 1; // highest lower-case a index issued
    int last_b = 1;
    RotationMap left;
    RotationMap right;

    const RotationMap& side(int color) const { return color == 1 ? left : right; }
};

WingState init_wings(int n);
WingState apply_wbp_move(const WingState& state, const MoveRecord& move);
WingState replay_move_log(const MoveLog& log);

// Pendant nervure vertices (lower-case, nervure degree <= 1) of one side.
std::vector<int> pendant_nervure_vertices(const RotationMap& map);

// The nervure edges form a spanning tree of the non-Z vertices.
bool nervure_is_spanning_tree(const RotationMap& map);

} // namespace wlink
