// Command-line pipeline driver: grows wings from a move log, embeds and
// renders them, builds the cone complex, projects links, and handles the
// Gauss-code / duet-quintet formats.

#include "wlink/codecs.hpp"
#include "wlink/error.hpp"
#include "wlink/geom3.hpp"
#include "wlink/io.hpp"
#include "wlink/linkproj.hpp"
#include "wlink/planar_map.hpp"
#include "wlink/render.hpp"
#include "wlink/tutte.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace wlink;

namespace {

struct Config {
    double tolerance = 1e-10;
    int max_iters = 0;
    int multiplier = 3;
    std::uint64_t seed = 1;
    std::string solver = "direct";
    std::string output_dir = ".";
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw format_error("cannot write " + path.string());
    out << text;
}

TutteOptions tutte_options(const Config& cfg) {
    TutteOptions opts;
    opts.solver = cfg.solver == "iterative" ? Solver::iterative : Solver::direct;
    opts.tol = cfg.tolerance;
    opts.max_iters = cfg.max_iters;
    return opts;
}

struct EmbeddedWings {
    WingState state;
    PlaneEmbedding left, right;
};

EmbeddedWings embed_wings(const std::string& movelog_path, const Config& cfg) {
    MoveLog log = parse_move_log_text(slurp(movelog_path));
    EmbeddedWings ew{replay_move_log(log), {}, {}};
    for (Side side : {Side::left, Side::right}) {
        const RotationMap& map = side == Side::left ? ew.state.left : ew.state.right;
        EdgeWeights w = nervure_weights(ew.state, side, cfg.multiplier);
        PlaneEmbedding emb = tutte_embed(map, w, wing_boundary(map, ew.state.n),
                                         tutte_options(cfg));
        if (!verify_rectilinear(map, emb))
            throw numeric_error(std::string(side == Side::left ? "left" : "right") +
                                " wing drawing is not an embedding");
        (side == Side::left ? ew.left : ew.right) = emb;
    }
    return ew;
}

int cmd_wings(const std::string& movelog_path, const Config& cfg) {
    EmbeddedWings ew = embed_wings(movelog_path, cfg);
    fs::path dir(cfg.output_dir);
    spill(dir / "left.json", embedding_to_json(ew.state.left, ew.left));
    spill(dir / "left.svg", embedding_to_svg(ew.state.left, ew.left));
    spill(dir / "right.json", embedding_to_json(ew.state.right, ew.right));
    spill(dir / "right.svg", embedding_to_svg(ew.state.right, ew.right));
    std::cout << "wings: n=" << ew.state.n << " moves=" << ew.state.step
              << " residuals=" << ew.left.residual << "," << ew.right.residual << "\n";
    return 0;
}

int cmd_cone(const std::string& movelog_path, const Config& cfg) {
    EmbeddedWings ew = embed_wings(movelog_path, cfg);
    auto left_lift = lift_to_halfplane(ew.state.left, ew.left, Side::left);
    auto right_lift = lift_to_halfplane(ew.state.right, ew.right, Side::right);
    int n = ew.state.n;
    Vec3 apex{static_cast<double>(n), 0.0, (2.0 * n + 1.0) / 2.0};
    Vec3 a1 = left_lift.count(Label{'a', 1}) ? left_lift[Label{'a', 1}] : apex;
    Vec3 b1 = right_lift.count(Label{'b', 1}) ? right_lift[Label{'b', 1}]
                                              : Vec3{-apex.x, 0.0, apex.z};
    Complex3 cx = build_h1_diamond(ew.state, left_lift, right_lift,
                                   default_axis_frame(n, a1, b1));
    fs::path dir(cfg.output_dir);
    spill(dir / "complex.json", complex3_to_json(cx));
    spill(dir / "complex.obj", complex3_to_obj(cx));
    std::cout << "cone: " << cx.triangles.size() << " triangles, " << cx.points.size()
              << " points\n";
    return 0;
}

BlowupVariant variant_of(const std::string& name) {
    if (name == "plain") return BlowupVariant::plain;
    if (name == "refined") return BlowupVariant::refined;
    if (name == "bump") return BlowupVariant::bump;
    throw format_error("unknown blow-up variant " + name);
}

int cmd_blowup(const std::string& json_path, const std::string& variant, const Config& cfg) {
    BlowupInput in = blowup_input_from_json(slurp(json_path));
    BlowupPoints pts = blowup_points(in.z2, in.chi, in.omega, variant_of(variant));
    spill(fs::path(cfg.output_dir) / "blowup.json", blowup_to_json(pts));
    std::cout << "blowup-points: " << pts.beta.size() << " beta, " << pts.alpha.size()
              << " alpha (" << variant << ")\n";
    return 0;
}

int cmd_link(const std::string& json_path, const Config& cfg) {
    std::string text = slurp(json_path);
    PLLink link;
    std::vector<int> framings;
    bool have_framings = false;
    if (text.find("\"cylinders\"") != std::string::npos) {
        std::vector<Cylinder> cyls = cylinders_from_json(text);
        for (const Cylinder& c : cyls) link.components.push_back(cylinder_curves(c).medial);
        framings = framings_from_cylinders(cyls, cfg.seed);
        have_framings = true;
    } else {
        link = pllink_from_json(text);
        if (!link.framings.empty()) {
            framings = link.framings;
            have_framings = true;
        }
    }
    LinkDiagram d = project(link, Vec3{0.2797, 0.5437, 0.7912}, cfg.seed);
    GaussCode code = diagram_to_gauss(d);
    LinkingMatrix lm = linking_matrix(d, have_framings ? &framings : nullptr);
    fs::path dir(cfg.output_dir);
    spill(dir / "gauss.txt", serialize_gauss(code) + "\n");
    spill(dir / "matrix.csv", linking_matrix_csv(lm));
    spill(dir / "matrix.json", linking_matrix_to_json(lm));
    spill(dir / "diagram.svg", diagram_to_svg(d));
    std::cout << "link: " << d.component_count << " components, " << d.crossings.size()
              << " crossings\n"
              << serialize_gauss(code) << "\n";
    return 0;
}

int cmd_dq(const std::string& dq_path, const Config& cfg) {
    DuetQuintetFile f = parse_dq(slurp(dq_path));
    RotationMap map = dq_to_map(f);
    int genus = map_genus(map);
    LinkDiagram d = dq_to_diagram(f);
    GaussCode code = diagram_to_gauss(d);
    LinkingMatrix lm = linking_matrix(d);
    fs::path dir(cfg.output_dir);
    spill(dir / "gauss.txt", serialize_gauss(code) + "\n");
    spill(dir / "matrix.csv", linking_matrix_csv(lm));
    spill(dir / "matrix.json", linking_matrix_to_json(lm));
    std::cout << "dq: OK, " << f.crossing_count() << " crossings, " << f.component_count()
              << " components, genus " << genus << "\n";
    return 0;
}

int cmd_gauss(const std::string& input) {
    std::string text = fs::exists(input) ? slurp(input) : input;
    GaussCode code = parse_gauss(text);
    int k = 0;
    for (const auto& comp : code.components)
        for (int e : comp) k = std::max(k, std::abs(e));
    std::cout << "gauss: " << code.components.size() << " components, " << k << " crossings\n";
    std::cout << serialize_gauss(code) << "\n";
    if (k <= 22) std::cout << "realizable: " << (realizable(code) ? "true" : "false") << "\n";
    return 0;
}

int cmd_simplify(const std::string& json_path, const Config& cfg) {
    PLLink link = pllink_from_json(slurp(json_path));
    size_t before = 0, after = 0;
    for (const auto& c : link.components) before += c.size();
    PLLink out = shortcut(link, {});
    for (const auto& c : out.components) after += c.size();
    spill(fs::path(cfg.output_dir) / "simplified.json", pllink_to_json(out));
    std::cout << "simplify: " << before << " -> " << after << " vertices\n";
    return 0;
}

int cmd_check_bounds(const std::string& json_path, int n) {
    PLLink link = pllink_from_json(slurp(json_path));
    bool ok = check_size_bound(link, n);
    size_t total = 0;
    for (const auto& c : link.components) total += c.size();
    std::cout << "check-bounds: " << total << " segments, bound " << 12 * n * n << " -> "
              << (ok ? "true" : "false") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wing/nervure link pipeline"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--tolerance", cfg.tolerance, "numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-iters", cfg.max_iters, "iteration cap (0 = automatic)");
    app.add_option("--weight-multiplier", cfg.multiplier, "nervure weight multiplier")
        ->check(CLI::Range(1, 1000000));
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--solver", cfg.solver, "direct|iterative")
        ->check(CLI::IsMember({"direct", "iterative"}));
    app.add_option("-o,--output-dir", cfg.output_dir, "output directory");

    std::string in_path, variant = "plain", gauss_input;
    int bound_n = 1;

    CLI::App* wings = app.add_subcommand("wings", "embed both wings from a move log");
    wings->add_option("movelog", in_path, "move log file")->required();

    CLI::App* cone_cmd = app.add_subcommand("cone", "build the cone complex from a move log");
    cone_cmd->add_option("movelog", in_path, "move log file")->required();

    CLI::App* blowup = app.add_subcommand("blowup-points", "tail blow-up midpoints");
    blowup->add_option("input", in_path, "JSON with z2, chi, omega")->required();
    blowup->add_option("--variant", variant, "plain|refined|bump")
        ->check(CLI::IsMember({"plain", "refined", "bump"}));

    CLI::App* link_cmd = app.add_subcommand("link", "project a link or cylinder set");
    link_cmd->add_option("input", in_path, "polylines or cylinders JSON")->required();

    CLI::App* dq_cmd = app.add_subcommand("dq", "validate a duet/quintet file");
    dq_cmd->add_option("input", in_path, "duet/quintet file")->required();

    CLI::App* gauss_cmd = app.add_subcommand("gauss", "parse and check a Gauss code");
    gauss_cmd->add_option("input", gauss_input, "code string or file")->required();

    CLI::App* simplify = app.add_subcommand("simplify", "shortcut a PL link");
    simplify->add_option("input", in_path, "polylines JSON")->required();

    CLI::App* bounds = app.add_subcommand("check-bounds", "verify the 12n^2 size bound");
    bounds->add_option("input", in_path, "polylines JSON")->required();
    bounds->add_option("--n", bound_n, "gem half-order n")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (wings->parsed()) return cmd_wings(in_path, cfg);
        if (cone_cmd->parsed()) return cmd_cone(in_path, cfg);
        if (blowup->parsed()) return cmd_blowup(in_path, variant, cfg);
        if (link_cmd->parsed()) return cmd_link(in_path, cfg);
        if (dq_cmd->parsed()) return cmd_dq(in_path, cfg);
        if (gauss_cmd->parsed()) return cmd_gauss(gauss_input);
        if (simplify->parsed()) return cmd_simplify(in_path, cfg);
        if (bounds->parsed()) return cmd_check_bounds(in_path, bound_n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::numeric ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
