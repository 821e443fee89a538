#include "wlink/planar_map.hpp"

#include "wlink/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace wlink {

std::string to_string(Label l) { return std::string(1, l.kind) + std::to_string(l.index); }

Label parse_label(std::string_view text) {
    if (text.size() < 2) throw format_error("bad vertex label '" + std::string(text) + "'");
    char k = text[0];
    if (k != 'z' && k != 'a' && k != 'A' && k != 'b' && k != 'B')
        throw format_error("bad vertex label kind '" + std::string(text) + "'");
    int idx = 0;
    auto [p, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), idx);
    if (ec != std::errc() || p != text.data() + text.size() || idx <= 0)
        throw format_error("bad vertex label index '" + std::string(text) + "'");
    return Label{k, idx};
}

int RotationMap::add_vertex(Label label) {
    labels_.push_back(label);
    alive_.push_back(1);
    stars_.emplace_back();
    return static_cast<int>(labels_.size()) - 1;
}

int RotationMap::add_edge(int v, int w, EdgeClass cls) {
    ends_.push_back({v, w});
    classes_.push_back(cls);
    return static_cast<int>(ends_.size()) - 1;
}

void RotationMap::remove_vertex(int v) {
    alive_[v] = 0;
    stars_[v].clear();
}

int RotationMap::vertex_by_label(Label l) const {
    for (int v = 0; v < raw_vertex_count(); ++v)
        if (alive_[v] && labels_[v] == l) return v;
    return -1;
}

int RotationMap::vertex_count() const {
    return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
}

int RotationMap::other_end(int e, int v) const {
    return ends_[e][0] == v ? ends_[e][1] : ends_[e][0];
}

void RotationMap::validate() const {
    std::vector<int> seen(ends_.size(), 0);
    for (int v = 0; v < raw_vertex_count(); ++v) {
        if (!alive_[v]) continue;
        for (int e : stars_[v]) {
            if (e < 0 || e >= edge_count()) throw structural_error("star references unknown edge");
            if (ends_[e][0] != v && ends_[e][1] != v)
                throw structural_error("edge " + std::to_string(e) + " in star of non-endpoint");
            ++seen[e];
        }
    }
    for (int e = 0; e < edge_count(); ++e)
        if (seen[e] != 2)
            throw structural_error("edge " + std::to_string(e) + " appears " +
                                   std::to_string(seen[e]) + " times (expected 2)");
}

int RotationMap::nervure_degree(int v) const {
    int d = 0;
    for (int e : stars_[v])
        if (classes_[e] == EdgeClass::nervure) ++d;
    return d;
}

std::vector<std::vector<Dart>> trace_faces(const RotationMap& map) {
    map.validate();
    // An edgeless map has a single face covering the whole sphere.
    if (map.edge_count() == 0) return {std::vector<Dart>{}};
    // Occurrences of each edge as darts (vertex, star position).
    std::vector<std::array<Dart, 2>> occ(map.edge_count(), {Dart{-1, -1}, Dart{-1, -1}});
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        const auto& st = map.star(v);
        for (int i = 0; i < static_cast<int>(st.size()); ++i) {
            auto& slots = occ[st[i]];
            (slots[0].first < 0 ? slots[0] : slots[1]) = {v, i};
        }
    }
    auto flip = [&](Dart d) {
        int e = map.star(d.first)[d.second];
        return occ[e][0] == d ? occ[e][1] : occ[e][0];
    };
    std::vector<std::vector<char>> used(map.raw_vertex_count());
    for (int v = 0; v < map.raw_vertex_count(); ++v)
        used[v].assign(map.star(v).size(), 0);

    std::vector<std::vector<Dart>> faces;
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        for (int i = 0; i < static_cast<int>(map.star(v).size()); ++i) {
            if (used[v][i]) continue;
            std::vector<Dart> face;
            Dart d{v, i};
            while (!used[d.first][d.second]) {
                used[d.first][d.second] = 1;
                face.push_back(d);
                Dart o = flip(d);
                int deg = static_cast<int>(map.star(o.first).size());
                d = {o.first, (o.second + 1) % deg};
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

int map_genus(const RotationMap& map) {
    int V = map.vertex_count();
    if (V == 0) throw structural_error("empty map");
    // Connectivity.
    std::vector<int> comp(map.raw_vertex_count(), -1);
    int root = -1;
    for (int v = 0; v < map.raw_vertex_count(); ++v)
        if (map.vertex_alive(v)) { root = v; break; }
    std::vector<int> stack{root};
    comp[root] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : map.star(v)) {
            int w = map.other_end(e, v);
            if (comp[w] < 0) { comp[w] = 0; stack.push_back(w); }
        }
    }
    for (int v = 0; v < map.raw_vertex_count(); ++v)
        if (map.vertex_alive(v) && comp[v] < 0) throw structural_error("map is disconnected");
    int E = map.edge_count();
    int F = static_cast<int>(trace_faces(map).size());
    int euler = V - E + F;
    if (euler > 2 || (2 - euler) % 2 != 0)
        throw structural_error("inconsistent Euler characteristic " + std::to_string(euler));
    return (2 - euler) / 2;
}

WingState init_wings(int n) {
    if (n < 1) throw structural_error("invalid gem half-order n=" + std::to_string(n));
    WingState st;
    st.n = n;
    for (int pass = 0; pass < 2; ++pass) {
        RotationMap& map = pass == 0 ? st.left : st.right;
        int apex = map.add_vertex(Label{pass == 0 ? 'a' : 'b', 1});
        for (int j = 1; j <= 2 * n; ++j) {
            int zj = map.add_vertex(Label{'z', j});
            int e = map.add_edge(apex, zj, EdgeClass::wing);
            map.star(apex).push_back(e);
            map.star(zj).push_back(e);
        }
    }
    return st;
}

namespace {

// Wing edges of the target in star order, linearized by cutting at the nervure
// parent edge (or at position 0 for the degenerate root).
struct TargetStar {
    std::vector<int> wing_edges; // edge ids, cyclic order
    std::vector<int> wing_z;     // z-index of the far endpoint, parallel array
    int parent_edge = -1;
    bool cyclic = false; // no parent: arcs may start anywhere in the cycle
};

TargetStar dissect_target_star(const RotationMap& map, int target) {
    TargetStar ts;
    const auto& st = map.star(target);
    int cut = 0;
    for (int i = 0; i < static_cast<int>(st.size()); ++i) {
        if (map.edge_class(st[i]) == EdgeClass::nervure) {
            if (ts.parent_edge >= 0) throw structural_error("target is not pendant");
            ts.parent_edge = st[i];
            cut = i;
        }
    }
    ts.cyclic = ts.parent_edge < 0;
    int deg = static_cast<int>(st.size());
    for (int k = 1; k <= deg; ++k) {
        int e = st[(cut + k) % deg];
        if (e == ts.parent_edge) continue;
        int w = map.other_end(e, target);
        if (!map.label(w).is_z()) throw structural_error("non-wing edge in target star");
        ts.wing_edges.push_back(e);
        ts.wing_z.push_back(map.label(w).index);
    }
    return ts;
}

// Finds the rotation of the (cyclic) wing sequence matching arc1 ++ arc2;
// returns the start offset or -1.
int match_split(const TargetStar& ts, const std::vector<int>& arc1, const std::vector<int>& arc2,
                bool cyclic) {
    std::vector<int> want(arc1);
    want.insert(want.end(), arc2.begin(), arc2.end());
    int k = static_cast<int>(ts.wing_z.size());
    if (static_cast<int>(want.size()) != k) return -1;
    if (k == 0) return 0; // bare pendant vertex, both arcs empty
    for (int s = 0; s < k; ++s) {
        // With a nervure parent in the star, both cut points must be adjacent to
        // the parent position, so only the identity and swapped-arc rotations
        // keep the arcs contiguous in the full cyclic star.
        if (!cyclic && s != 0 && s != static_cast<int>(arc2.size()) % k) continue;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = ts.wing_z[(s + i) % k] == want[i];
        if (ok) return s;
    }
    return -1;
}

} // namespace

WingState apply_wbp_move(const WingState& state, const MoveRecord& move) {
    WingState next = state;
    char lower = move.color == 1 ? 'a' : 'b';
    char upper = move.color == 1 ? 'A' : 'B';
    if (move.target.kind != lower)
        throw structural_error("move color " + std::to_string(move.color) +
                               " does not match target side '" + to_string(move.target) + "'");
    RotationMap& map = move.color == 1 ? next.left : next.right;
    int& last = move.color == 1 ? next.last_a : next.last_b;

    int target = map.vertex_by_label(move.target);
    if (target < 0) throw structural_error("unknown target vertex " + to_string(move.target));
    if (map.nervure_degree(target) > 1)
        throw structural_error("target " + to_string(move.target) + " is not pendant");

    TargetStar ts = dissect_target_star(map, target);
    int shift = match_split(ts, move.split_first, move.split_second, ts.cyclic);
    if (shift < 0)
        throw format_error("star_split is not a contiguous partition of the star of " +
                           to_string(move.target));

    if (move.new_z.size() != 2 || move.new_z[0] == move.new_z[1])
        throw format_error("new_z_adjacencies must list two distinct z-vertices");
    for (int j : move.new_z)
        if (j < 1 || j > 2 * state.n)
            throw format_error("new_z index " + std::to_string(j) + " out of range");

    int p = move.target.index;
    int vp1 = map.add_vertex(Label{lower, last + 1});
    int vup = map.add_vertex(Label{upper, p});
    int vp2 = map.add_vertex(Label{lower, last + 2});
    last += 2;

    int e1 = map.add_edge(vp1, vup, EdgeClass::nervure);
    int e2 = map.add_edge(vp2, vup, EdgeClass::nervure);

    // Redistribute the old wing edges along the matched rotation.
    int k = static_cast<int>(ts.wing_edges.size());
    auto reanchor = [&](int e, int to) {
        const auto& ends = map.edge_ends(e);
        map.set_edge_end(e, ends[0] == target ? 0 : 1, to);
    };
    map.star(vp1).push_back(e1);
    for (int i = 0; i < static_cast<int>(move.split_first.size()); ++i) {
        int e = ts.wing_edges[(shift + i) % k];
        reanchor(e, vp1);
        map.star(vp1).push_back(e);
    }
    map.star(vp2).push_back(e2);
    for (int i = 0; i < static_cast<int>(move.split_second.size()); ++i) {
        int e = ts.wing_edges[(shift + move.split_first.size() + i) % k];
        reanchor(e, vp2);
        map.star(vp2).push_back(e);
    }

    map.star(vup).push_back(e1);
    for (int j : move.new_z) {
        int zv = map.vertex_by_label(Label{'z', j});
        int e = map.add_edge(vup, zv, EdgeClass::wing);
        map.star(vup).push_back(e);
        map.star(zv).push_back(e);
    }
    map.star(vup).push_back(e2);
    if (ts.parent_edge >= 0) {
        reanchor(ts.parent_edge, vup);
        map.star(vup).push_back(ts.parent_edge);
    }

    map.remove_vertex(target);
    next.step += 1;
    map.validate();
    return next;
}

WingState replay_move_log(const MoveLog& log) {
    WingState st = init_wings(log.n);
    for (const MoveRecord& mv : log.moves) st = apply_wbp_move(st, mv);
    return st;
}

std::vector<int> pendant_nervure_vertices(const RotationMap& map) {
    std::vector<int> out;
    for (int v = 0; v < map.raw_vertex_count(); ++v)
        if (map.vertex_alive(v) && map.label(v).is_lower() && map.nervure_degree(v) <= 1)
            out.push_back(v);
    return out;
}

bool nervure_is_spanning_tree(const RotationMap& map) {
    std::vector<int> ids;
    std::vector<int> parent(map.raw_vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int nonz = 0;
    for (int v = 0; v < map.raw_vertex_count(); ++v)
        if (map.vertex_alive(v) && !map.label(v).is_z()) ++nonz;
    int nerv_edges = 0;
    for (int e = 0; e < map.edge_count(); ++e) {
        if (map.edge_class(e) != EdgeClass::nervure) continue;
        ++nerv_edges;
        const auto& ends = map.edge_ends(e);
        if (map.label(ends[0]).is_z() || map.label(ends[1]).is_z()) return false;
        int a = find(ends[0]), b = find(ends[1]);
        if (a == b) return false; // cycle
        parent[a] = b;
    }
    return nerv_edges == nonz - 1;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    if (text.empty()) return out;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw format_error(std::string("bad integer list in ") + what);
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

MoveLog parse_move_log(std::istream& in) {
    MoveLog log;
    std::string line;
    bool have_n = false;
    int expect_m = 1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!have_n) {
            if (first.rfind("n=", 0) != 0)
                throw format_error("move log must start with an n=<int> header");
            log.n = std::stoi(first.substr(2));
            if (log.n < 1) throw format_error("invalid n in move log header");
            have_n = true;
            continue;
        }
        MoveRecord mv;
        std::string target, split, newz;
        std::istringstream rs(line);
        if (!(rs >> mv.m >> mv.color >> target >> mv.head_u >> mv.head_v >> mv.tail_r >>
              mv.tail_s >> mv.tail_type >> split >> newz))
            throw format_error("malformed move on line " + std::to_string(lineno));
        if (mv.m != expect_m)
            throw format_error("move index " + std::to_string(mv.m) + " out of sequence");
        if (mv.color != 0 && mv.color != 1) throw format_error("move color must be 0 or 1");
        ++expect_m;
        mv.target = parse_label(target);
        if (split.rfind("split=", 0) != 0 || newz.rfind("newz=", 0) != 0)
            throw format_error("expected split=...|... newz=... on line " + std::to_string(lineno));
        std::string_view body(split);
        body.remove_prefix(6);
        auto bar = body.find('|');
        if (bar == std::string_view::npos) throw format_error("split must contain '|'");
        mv.split_first = parse_int_list(body.substr(0, bar), "split");
        mv.split_second = parse_int_list(body.substr(bar + 1), "split");
        mv.new_z = parse_int_list(std::string_view(newz).substr(5), "newz");
        log.moves.push_back(std::move(mv));
    }
    if (!have_n) throw format_error("empty move log");
    if (static_cast<int>(log.moves.size()) > log.n - 1)
        throw format_error("move log has more than n-1 moves");
    return log;
}

MoveLog parse_move_log_text(const std::string& text) {
    std::istringstream in(text);
    return parse_move_log(in);
}

std::string serialize_move_log(const MoveLog& log) {
    std::ostringstream os;
    os << "n=" << log.n << "\n";
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    for (const MoveRecord& mv : log.moves) {
        os << mv.m << ' ' << mv.color << ' ' << to_string(mv.target) << ' ' << mv.head_u << ' '
           << mv.head_v << ' ' << mv.tail_r << ' ' << mv.tail_s << ' ' << mv.tail_type
           << " split=" << join(mv.split_first) << '|' << join(mv.split_second)
           << " newz=" << join(mv.new_z) << "\n";
    }
    return os.str();
}

} // namespace wlink
