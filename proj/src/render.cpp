#include "wlink/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace wlink {

namespace {

struct Mapper {
    double minx = 0, miny = 0, scale = 1, height = 0;
    double x(Vec2 p) const { return (p.x - minx) * scale + 20; }
    double y(Vec2 p) const { return height - ((p.y - miny) * scale + 20); }
};

Mapper fit(double minx, double maxx, double miny, double maxy) {
    Mapper m;
    m.minx = minx;
    m.miny = miny;
    double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
    m.scale = 760.0 / std::max(w, h);
    m.height = h * m.scale + 40;
    return m;
}

const char* palette(int i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#8c564b", "#e377c2", "#17becf", "#bcbd22"};
    return colors[i % 9];
}

} // namespace

std::string embedding_to_svg(const RotationMap& map, const PlaneEmbedding& emb) {
    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        minx = std::min(minx, emb.coords[v].x);
        maxx = std::max(maxx, emb.coords[v].x);
        miny = std::min(miny, emb.coords[v].y);
        maxy = std::max(maxy, emb.coords[v].y);
    }
    Mapper m = fit(minx, maxx, miny, maxy);
    std::ostringstream out;
    out.precision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
        << static_cast<int>(m.height) << "\">\n";
    for (int e = 0; e < map.edge_count(); ++e) {
        const auto& ends = map.edge_ends(e);
        Vec2 a = emb.coords[ends[0]], b = emb.coords[ends[1]];
        bool thick = map.edge_class(e) == EdgeClass::nervure;
        out << "<line x1=\"" << m.x(a) << "\" y1=\"" << m.y(a) << "\" x2=\"" << m.x(b)
            << "\" y2=\"" << m.y(b) << "\" stroke=\"" << (thick ? "#202020" : "#7aa0c8")
            << "\" stroke-width=\"" << (thick ? 2.6 : 0.9) << "\"/>\n";
    }
    for (int v = 0; v < map.raw_vertex_count(); ++v) {
        if (!map.vertex_alive(v)) continue;
        Vec2 p = emb.coords[v];
        Label l = map.label(v);
        out << "<circle cx=\"" << m.x(p) << "\" cy=\"" << m.y(p) << "\" r=\"2.2\" fill=\""
            << (l.is_z() ? "#c03030" : "#303030") << "\"/>\n";
        out << "<text x=\"" << m.x(p) + 3 << "\" y=\"" << m.y(p) - 3
            << "\" font-size=\"8\" fill=\"#555\">" << to_string(l) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string diagram_to_svg(const LinkDiagram& diagram) {
    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    for (const auto& comp : diagram.projected)
        for (Vec2 p : comp) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    if (diagram.projected.empty()) minx = maxx = miny = maxy = 0;
    Mapper m = fit(minx, maxx, miny, maxy);

    // Under-strand gaps per (component, segment): crossing parameter plus the
    // half-gap (3% of the stroke on each side, 6% total).
    std::map<std::pair<int, int>, std::vector<double>> gaps;
    for (const Crossing& c : diagram.crossings) {
        int seg = static_cast<int>(std::floor(c.under_pos));
        gaps[{c.under_component, seg}].push_back(c.under_pos - seg);
    }

    std::ostringstream out;
    out.precision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
        << static_cast<int>(m.height) << "\">\n";
    for (size_t ci = 0; ci < diagram.projected.size(); ++ci) {
        const auto& comp = diagram.projected[ci];
        const char* color = palette(static_cast<int>(ci));
        for (size_t i = 0; i < comp.size(); ++i) {
            Vec2 a = comp[i], b = comp[(i + 1) % comp.size()];
            std::vector<std::pair<double, double>> pieces{{0.0, 1.0}};
            auto it = gaps.find({static_cast<int>(ci), static_cast<int>(i)});
            if (it != gaps.end()) {
                std::vector<double> ts = it->second;
                std::sort(ts.begin(), ts.end());
                pieces.clear();
                double start = 0.0;
                for (double t : ts) {
                    double lo = std::max(0.0, t - 0.03), hi = std::min(1.0, t + 0.03);
                    if (lo > start) pieces.push_back({start, lo});
                    start = hi;
                }
                if (start < 1.0) pieces.push_back({start, 1.0});
            }
            for (auto [t0, t1] : pieces) {
                Vec2 p = a + t0 * (b - a), q = a + t1 * (b - a);
                out << "<line x1=\"" << m.x(p) << "\" y1=\"" << m.y(p) << "\" x2=\"" << m.x(q)
                    << "\" y2=\"" << m.y(q) << "\" stroke=\"" << color
                    << "\" stroke-width=\"1.8\"/>\n";
            }
        }
    }
    for (const Crossing& c : diagram.crossings)
        out << "<text x=\"" << m.x(c.point) + 3 << "\" y=\"" << m.y(c.point) - 3
            << "\" font-size=\"8\" fill=\"#777\">" << (c.sign > 0 ? "+" : "-") << c.id
            << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace wlink
