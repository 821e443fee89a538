#include "wlink/codecs.hpp"

#include "wlink/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace wlink {

int DuetQuintetFile::component_count() const {
    int c = 0;
    for (const Quintet& q : quintets) c = std::max(c, q.component);
    return c;
}

// ---------------------------------------------------------------- Gauss code

GaussCode parse_gauss(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    size_t i = 0;
    auto expect = [&](char c) {
        if (i >= s.size() || s[i] != c)
            throw format_error("Gauss code: expected '" + std::string(1, c) + "' at offset " +
                               std::to_string(i));
        ++i;
    };
    GaussCode code;
    expect('(');
    while (i < s.size() && s[i] == '(') {
        ++i;
        std::vector<int> comp;
        while (i < s.size() && s[i] != ')') {
            int sign = 1;
            if (s[i] == '+') {
                ++i;
            } else if (s[i] == '-') {
                sign = -1;
                ++i;
            }
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw format_error("Gauss code: expected crossing label at offset " +
                                               std::to_string(i));
            comp.push_back(sign * std::stoi(s.substr(start, i - start)));
            if (i < s.size() && s[i] == ',') ++i;
        }
        expect(')');
        if (comp.empty()) throw format_error("Gauss code: empty component");
        code.components.push_back(std::move(comp));
        if (i < s.size() && s[i] == ',') ++i;
    }
    expect(')');
    if (i != s.size()) throw format_error("Gauss code: trailing characters at offset " +
                                          std::to_string(i));
    if (code.components.empty()) throw format_error("Gauss code: no components");
    validate_gauss(code);
    return code;
}

std::string serialize_gauss(const GaussCode& code) {
    std::string out = "(";
    for (size_t c = 0; c < code.components.size(); ++c) {
        if (c) out += ",";
        out += "(";
        for (size_t i = 0; i < code.components[c].size(); ++i) {
            int e = code.components[c][i];
            if (i) out += ",";
            out += (e > 0 ? "+" : "-") + std::to_string(std::abs(e));
        }
        out += ")";
    }
    out += ")";
    return out;
}

void validate_gauss(const GaussCode& code) {
    std::map<int, std::pair<int, int>> counts; // label -> (plus, minus)
    for (const auto& comp : code.components)
        for (int e : comp) {
            if (e == 0) throw structural_error("Gauss code: zero label");
            auto& [plus, minus] = counts[std::abs(e)];
            (e > 0 ? plus : minus) += 1;
        }
    for (const auto& [label, pm] : counts)
        if (pm.first != 1 || pm.second != 1)
            throw structural_error("Gauss code: label " + std::to_string(label) +
                                   " must appear exactly once with each sign");
}

// ------------------------------------------------------------- duet/quintet

namespace {

void validate_dq(const DuetQuintetFile& f) {
    if (f.quintets.empty()) throw structural_error("duet/quintet file: no quintets");
    if (f.quintets.size() % 2 != 0)
        throw structural_error("duet/quintet file: odd quintet count");
    int k = 0;
    for (const Quintet& q : f.quintets) k = std::max(k, q.crossing);
    std::vector<int> d_count(k + 1, 0), u_count(k + 1, 0);
    std::vector<std::set<int>> legs_of(k + 1);
    for (const Quintet& q : f.quintets) {
        if (q.crossing < 1) throw structural_error("quintet with non-positive crossing id");
        (q.under ? d_count : u_count)[q.crossing] += 1;
        int lo = 4 * q.crossing - 3, hi = 4 * q.crossing;
        for (int leg : {q.in_leg, q.out_leg}) {
            if (leg < lo || leg > hi)
                throw structural_error("quintet of crossing " + std::to_string(q.crossing) +
                                       " uses leg " + std::to_string(leg) + " it does not own");
            if (!legs_of[q.crossing].insert(leg).second)
                throw structural_error("leg " + std::to_string(leg) +
                                       " used twice in quintets of crossing " +
                                       std::to_string(q.crossing));
        }
        // The two legs of a passage are an opposite pair at the crossing.
        if ((q.in_leg - q.out_leg) % 2 != 0)
            throw structural_error("quintet of crossing " + std::to_string(q.crossing) +
                                   " joins adjacent legs");
        if (q.component < 1) throw structural_error("quintet with non-positive component id");
    }
    for (int x = 1; x <= k; ++x)
        if (d_count[x] != 1 || u_count[x] != 1)
            throw structural_error("crossing " + std::to_string(x) +
                                   " lacks exactly one d and one u quintet");

    std::vector<int> leg_seen(4 * k + 1, 0);
    for (const auto& d : f.duets) {
        for (int leg : d) {
            if (leg < 1 || leg > 4 * k)
                throw structural_error("duet leg " + std::to_string(leg) + " out of range");
            if (leg_seen[leg]++)
                throw structural_error("leg " + std::to_string(leg) + " appears in two duets");
        }
        if (d[0] == d[1]) throw structural_error("duet matches a leg to itself");
    }
    for (int leg = 1; leg <= 4 * k; ++leg)
        if (!leg_seen[leg])
            throw structural_error("leg " + std::to_string(leg) + " missing from the duets");

    std::set<int> comps;
    for (const Quintet& q : f.quintets) comps.insert(q.component);
    int c = static_cast<int>(comps.size());
    if (*comps.begin() != 1 || *comps.rbegin() != c)
        throw structural_error("component ids are not contiguous from 1");
}

} // namespace

DuetQuintetFile parse_dq(const std::string& text) {
    DuetQuintetFile f;
    enum { none, duets, quintets } section = none;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "duets") {
                section = duets;
            } else if (tok == "quintets") {
                section = quintets;
            } else if (section == duets) {
                int a, b;
                char comma;
                std::istringstream ts(tok);
                if (!(ts >> a >> comma >> b) || comma != ',' ||
                    ts.peek() != std::istringstream::traits_type::eof())
                    throw format_error("line " + std::to_string(lineno) + ": bad duet '" + tok +
                                       "'");
                f.duets.push_back({a, b});
            } else if (section == quintets) {
                Quintet q;
                char c1, c2, c3, c4, c5, kind, c6;
                std::istringstream ts(tok);
                if (!(ts >> c1 >> q.crossing >> c2 >> kind >> c3 >> q.in_leg >> c4 >> q.out_leg >>
                      c5 >> q.component >> c6) ||
                    c1 != '{' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',' || c6 != '}' ||
                    (kind != 'd' && kind != 'u') ||
                    ts.peek() != std::istringstream::traits_type::eof())
                    throw format_error("line " + std::to_string(lineno) + ": bad quintet '" +
                                       tok + "'");
                q.under = kind == 'd';
                f.quintets.push_back(q);
            } else {
                throw format_error("line " + std::to_string(lineno) +
                                   ": data before a section header");
            }
        }
    }
    validate_dq(f);
    return f;
}

std::string serialize_dq(const DuetQuintetFile& file) {
    DuetQuintetFile f = file;
    for (auto& d : f.duets)
        if (d[0] > d[1]) std::swap(d[0], d[1]);
    std::sort(f.duets.begin(), f.duets.end());
    std::stable_sort(f.quintets.begin(), f.quintets.end(), [](const Quintet& a, const Quintet& b) {
        return std::tie(a.crossing, b.under) < std::tie(b.crossing, a.under); // d before u
    });
    std::string out = "duets\n";
    for (size_t i = 0; i < f.duets.size(); ++i) {
        out += std::to_string(f.duets[i][0]) + "," + std::to_string(f.duets[i][1]);
        out += (i % 8 == 7 || i + 1 == f.duets.size()) ? "\n" : " ";
    }
    out += "quintets\n";
    for (size_t i = 0; i < f.quintets.size(); ++i) {
        const Quintet& q = f.quintets[i];
        out += "{" + std::to_string(q.crossing) + "," + (q.under ? "d" : "u") + "," +
               std::to_string(q.in_leg) + "," + std::to_string(q.out_leg) + "," +
               std::to_string(q.component) + "}";
        out += (i % 6 == 5 || i + 1 == f.quintets.size()) ? "\n" : " ";
    }
    return out;
}

RotationMap dq_to_map(const DuetQuintetFile& file) {
    int k = file.crossing_count();
    RotationMap map;
    std::vector<int> vid(k + 1, -1);
    for (int x = 1; x <= k; ++x) vid[x] = map.add_vertex(Label{'a', x});

    std::vector<std::array<int, 2>> duets = file.duets;
    for (auto& d : duets)
        if (d[0] > d[1]) std::swap(d[0], d[1]);
    std::sort(duets.begin(), duets.end());
    std::vector<int> edge_of_leg(4 * k + 1, -1);
    for (const auto& d : duets) {
        int xa = (d[0] + 3) / 4, xb = (d[1] + 3) / 4;
        int e = map.add_edge(vid[xa], vid[xb], EdgeClass::wing);
        edge_of_leg[d[0]] = edge_of_leg[d[1]] = e;
    }
    for (int x = 1; x <= k; ++x)
        for (int leg = 4 * x - 3; leg <= 4 * x; ++leg)
            map.star(vid[x]).push_back(edge_of_leg[leg]);
    map.validate();
    return map;
}

LinkDiagram dq_to_diagram(const DuetQuintetFile& file) {
    int k = file.crossing_count();
    std::vector<int> partner(4 * k + 1, 0);
    for (const auto& d : file.duets) {
        partner[d[0]] = d[1];
        partner[d[1]] = d[0];
    }
    std::vector<int> quintet_by_in(4 * k + 1, -1);
    std::vector<char> leg_is_out(4 * k + 1, 0);
    for (size_t q = 0; q < file.quintets.size(); ++q) {
        const Quintet& qt = file.quintets[q];
        if (quintet_by_in[qt.in_leg] >= 0 || leg_is_out[qt.in_leg])
            throw structural_error("leg " + std::to_string(qt.in_leg) +
                                   " used by two passages");
        quintet_by_in[qt.in_leg] = static_cast<int>(q);
        if (leg_is_out[qt.out_leg] || quintet_by_in[qt.out_leg] >= 0)
            throw structural_error("leg " + std::to_string(qt.out_leg) +
                                   " used by two passages");
        leg_is_out[qt.out_leg] = 1;
    }

    int ncomp = file.component_count();
    LinkDiagram d;
    d.component_count = ncomp;
    d.crossings.assign(k, Crossing{});
    d.sequences.assign(ncomp, {});
    for (int x = 1; x <= k; ++x) d.crossings[x - 1].id = x;

    std::vector<char> visited(file.quintets.size(), 0);
    struct PassageSite {
        int comp = -1;
        double pos = 0;
        int in_leg = 0, out_leg = 0;
        bool set = false;
    };
    std::vector<PassageSite> over_site(k + 1), under_site(k + 1);

    for (int comp = 1; comp <= ncomp; ++comp) {
        // Canonical start: smallest (crossing, in_leg) quintet of the component.
        int start = -1;
        for (size_t q = 0; q < file.quintets.size(); ++q) {
            const Quintet& qt = file.quintets[q];
            if (qt.component != comp) continue;
            if (start < 0 || std::tie(qt.crossing, qt.in_leg) <
                                 std::tie(file.quintets[start].crossing,
                                          file.quintets[start].in_leg))
                start = static_cast<int>(q);
        }
        if (start < 0) throw structural_error("component " + std::to_string(comp) +
                                              " has no quintets");
        int cur = start;
        int pos = 0;
        do {
            const Quintet& qt = file.quintets[cur];
            if (qt.component != comp)
                throw structural_error("component id mismatch along strand: crossing " +
                                       std::to_string(qt.crossing));
            if (visited[cur]) throw structural_error("strand revisits a passage");
            visited[cur] = 1;
            PassageSite& site = qt.under ? under_site[qt.crossing] : over_site[qt.crossing];
            site = {comp - 1, static_cast<double>(pos), qt.in_leg, qt.out_leg, true};
            d.sequences[comp - 1].push_back({qt.crossing, !qt.under,
                                             static_cast<double>(pos)});
            ++pos;
            int next_in = partner[qt.out_leg];
            if (quintet_by_in[next_in] < 0)
                throw structural_error(
                    "orientation error: leg " + std::to_string(next_in) +
                    " is not an in-leg where the strand arrives");
            cur = quintet_by_in[next_in];
        } while (cur != start);
    }
    for (size_t q = 0; q < file.quintets.size(); ++q)
        if (!visited[q])
            throw structural_error("passage at crossing " +
                                   std::to_string(file.quintets[q].crossing) +
                                   " unreachable along its component");

    // Signs from the counterclockwise leg geometry.
    auto legdir = [](int leg) {
        static const double dx[4] = {-1, 1, 1, -1};
        static const double dy[4] = {-1, -1, 1, 1};
        int s = (leg - 1) % 4;
        return Vec2{dx[s], dy[s]};
    };
    for (int x = 1; x <= k; ++x) {
        const PassageSite& o = over_site[x];
        const PassageSite& u = under_site[x];
        if (!o.set || !u.set) throw structural_error("crossing without both passages");
        Crossing& c = d.crossings[x - 1];
        c.over_component = o.comp;
        c.over_pos = o.pos;
        c.under_component = u.comp;
        c.under_pos = u.pos;
        Vec2 to = legdir(o.out_leg) - legdir(o.in_leg);
        Vec2 tu = legdir(u.out_leg) - legdir(u.in_leg);
        c.sign = cross(to, tu) > 0 ? 1 : -1;
    }
    return d;
}

GaussCode diagram_to_gauss(const LinkDiagram& diagram) {
    GaussCode code;
    for (const auto& seq : diagram.sequences) {
        std::vector<int> comp;
        for (const Passage& p : seq) comp.push_back(p.over ? p.crossing_id : -p.crossing_id);
        code.components.push_back(std::move(comp));
    }
    validate_gauss(code);
    return code;
}

GaussCode dq_to_gauss(const DuetQuintetFile& file) { return diagram_to_gauss(dq_to_diagram(file)); }

LinkingMatrix linking_matrix(const LinkDiagram& diagram, const std::vector<int>* framings) {
    int nc = diagram.component_count;
    if (framings && static_cast<int>(framings->size()) != nc)
        throw structural_error("framing count does not match component count");
    LinkingMatrix lm;
    lm.diagonal_is_writhe = framings == nullptr;
    lm.m.assign(nc, std::vector<int>(nc, 0));
    for (int i = 0; i < nc; ++i) {
        lm.m[i][i] = framings ? (*framings)[i] : writhe(diagram, i);
        for (int j = i + 1; j < nc; ++j) lm.m[i][j] = lm.m[j][i] = linking_number(diagram, i, j);
    }
    return lm;
}

std::string linking_matrix_csv(const LinkingMatrix& lm) {
    std::string out;
    for (const auto& row : lm.m) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(row[j]);
        }
        out += "\n";
    }
    return out;
}

LinkDiagram blackboard_frame(const LinkDiagram& diagram, const std::vector<int>& targets) {
    if (static_cast<int>(targets.size()) != diagram.component_count)
        throw structural_error("target framing count does not match component count");
    LinkDiagram out = diagram;
    int next_id = 0;
    for (const Crossing& c : out.crossings) next_id = std::max(next_id, c.id);
    for (int comp = 0; comp < out.component_count; ++comp) {
        int w = writhe(out, comp);
        int delta = targets[comp] - w;
        int sign = delta > 0 ? 1 : -1;
        double pos = out.sequences[comp].empty() ? 0.0 : out.sequences[comp].back().pos;
        for (int i = 0; i < std::abs(delta); ++i) {
            ++next_id;
            Crossing c;
            c.id = next_id;
            c.sign = sign;
            c.over_component = c.under_component = comp;
            c.over_pos = pos + 1;
            c.under_pos = pos + 2;
            pos += 2;
            out.crossings.push_back(c);
            out.sequences[comp].push_back({c.id, true, c.over_pos});
            out.sequences[comp].push_back({c.id, false, c.under_pos});
        }
    }
    return out;
}

namespace {

// Interlacement parity: in a realizable single-component code every label is
// interlaced with an even number of labels.
bool parity_filter(const std::vector<int>& comp) {
    std::map<int, std::pair<int, int>> span;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
        auto [it, fresh] = span.insert({std::abs(comp[i]), {i, -1}});
        if (!fresh) it->second.second = i;
    }
    for (const auto& [label, se] : span) {
        int inter = 0;
        for (const auto& [other, se2] : span) {
            if (other == label) continue;
            bool in1 = se.first < se2.first && se2.first < se.second;
            bool in2 = se.first < se2.second && se2.second < se.second;
            if (in1 != in2) ++inter;
        }
        if (inter % 2 != 0) return false;
    }
    return true;
}

} // namespace

bool realizable(const GaussCode& code) {
    validate_gauss(code);
    if (code.components.size() == 1 && !parity_filter(code.components[0])) return false;

    // Relabel crossings 0..k-1.
    std::map<int, int> index;
    for (const auto& comp : code.components)
        for (int e : comp) index.emplace(std::abs(e), 0);
    int k = 0;
    for (auto& [label, idx] : index) idx = k++;
    if (k > 22) throw structural_error("realizability search capped at 22 crossings");

    // Arcs between consecutive passages; per crossing record the four arc ends
    // by role: over-in, over-out, under-in, under-out.
    struct Roles {
        int oin = -1, oout = -1, uin = -1, uout = -1;
    };
    std::vector<Roles> roles(k);
    int arc = 0;
    struct End {
        int crossing;
        bool over;
        bool incoming;
    };
    std::vector<std::array<End, 2>> arcs;
    for (const auto& comp : code.components) {
        int m = static_cast<int>(comp.size());
        for (int i = 0; i < m; ++i) {
            int a = comp[i], b = comp[(i + 1) % m];
            arcs.push_back({End{index[std::abs(a)], a > 0, false},
                            End{index[std::abs(b)], b > 0, true}});
            ++arc;
        }
    }
    for (int e = 0; e < static_cast<int>(arcs.size()); ++e)
        for (const End& end : arcs[e]) {
            Roles& r = roles[end.crossing];
            int& slot = end.over ? (end.incoming ? r.oin : r.oout)
                                 : (end.incoming ? r.uin : r.uout);
            slot = e;
        }

    // Connected pieces of the underlying 4-regular graph.
    std::vector<int> comp_of(k, -1);
    int pieces = 0;
    for (int s = 0; s < k; ++s) {
        if (comp_of[s] >= 0) continue;
        std::vector<int> stack{s};
        comp_of[s] = pieces;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : {roles[v].oin, roles[v].oout, roles[v].uin, roles[v].uout})
                for (const End& end : arcs[e])
                    if (comp_of[end.crossing] < 0) {
                        comp_of[end.crossing] = pieces;
                        stack.push_back(end.crossing);
                    }
        }
        ++pieces;
    }

    // Dart model: darts 4x..4x+3 counterclockwise around crossing x; sigma is
    // +1 mod 4; alpha pairs the two ends of each arc.  Chirality bit b picks
    // the star order (oin, uin, oout, uout) or (oin, uout, oout, uin).
    int na = static_cast<int>(arcs.size());
    std::vector<int> alpha(4 * k, -1);
    std::vector<int> dart_of_end(2 * na, -1);
    int target_faces = na - k + 2 * pieces; // Euler: V - E + F = 2 * pieces
    for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
        for (int x = 0; x < k; ++x) {
            const Roles& r = roles[x];
            bool b = (bits >> x) & 1;
            int order[4] = {r.oin, b ? r.uout : r.uin, r.oout, b ? r.uin : r.uout};
            bool inc[4] = {true, !b, false, b};
            for (int s = 0; s < 4; ++s)
                dart_of_end[2 * order[s] + (inc[s] ? 1 : 0)] = 4 * x + s;
        }
        for (int e = 0; e < na; ++e) {
            alpha[dart_of_end[2 * e]] = dart_of_end[2 * e + 1];
            alpha[dart_of_end[2 * e + 1]] = dart_of_end[2 * e];
        }
        // Count orbits of d -> sigma(alpha(d)).
        std::vector<char> used(4 * k, 0);
        int faces = 0;
        for (int d0 = 0; d0 < 4 * k; ++d0) {
            if (used[d0]) continue;
            ++faces;
            int d = d0;
            while (!used[d]) {
                used[d] = 1;
                int o = alpha[d];
                d = (o & ~3) | ((o + 1) & 3);
            }
        }
        if (faces == target_faces) return true;
    }
    return false;
}

} // namespace wlink
