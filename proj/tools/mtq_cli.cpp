// mtq command-line driver: families, cone curves, conics, moduli, lattice.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mtq/acceptance.hpp"
#include "mtq/conic.hpp"
#include "mtq/json_io.hpp"
#include "mtq/moduli.hpp"
#include "mtq/picard.hpp"
#include "mtq/sampling.hpp"

namespace {

using mtq::Json;
using mtq::Rational;

struct RunConfig {
    std::string a_text, q_text, plane_text, param_text, config_text, config2_text;
    int points = 64;
    uint64_t seed = 0;
    std::string format = "json";
    double tol_defect = 1e-10;
    double tol_cluster = 1e-6;
    std::string out_path;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

Rational parse_rat(const std::string& text) {
    try {
        return mtq::parse_rational(text);
    } catch (const std::exception&) {
        throw mtq::ParseError("not a rational: " + text);
    }
}

mtq::FamilyParams family_from(const RunConfig& cfg) {
    if (cfg.a_text.empty() || cfg.q_text.empty())
        throw mtq::ParseError("--a and --q are required here");
    const auto qs = split(cfg.q_text, ',');
    if (qs.size() != 3) throw mtq::ParseError("--q expects three comma-separated rationals");
    return mtq::FamilyParams{parse_rat(cfg.a_text),
                             {parse_rat(qs[0]), parse_rat(qs[1]), parse_rat(qs[2])}};
}

std::array<Rational, 4> plane_from(const RunConfig& cfg) {
    const auto ps = split(cfg.plane_text, ',');
    if (ps.size() != 4) throw mtq::ParseError("--plane expects four comma-separated rationals");
    return {parse_rat(ps[0]), parse_rat(ps[1]), parse_rat(ps[2]), parse_rat(ps[3])};
}

std::array<double, 4> plane_double_from(const RunConfig& cfg) {
    const auto p = plane_from(cfg);
    return {mtq::to_double(p[0]), mtq::to_double(p[1]), mtq::to_double(p[2]),
            mtq::to_double(p[3])};
}

// Three quadratics in plane coordinates, coefficients descending (s^2, s, 1).
std::array<mtq::PolyQ, 3> param_from(const RunConfig& cfg) {
    const auto cs = split(cfg.param_text, ',');
    if (cs.size() != 9)
        throw mtq::ParseError("--param expects nine comma-separated rationals");
    std::array<mtq::PolyQ, 3> x;
    for (int i = 0; i < 3; ++i)
        x[static_cast<size_t>(i)] = mtq::PolyQ(
            {parse_rat(cs[static_cast<size_t>(3 * i + 2)]), parse_rat(cs[static_cast<size_t>(3 * i + 1)]),
             parse_rat(cs[static_cast<size_t>(3 * i)])});
    return x;
}

mtq::PlaneConicQ conic_from(const RunConfig& cfg) {
    if (cfg.plane_text.empty() || cfg.param_text.empty())
        throw mtq::ParseError("--plane and --param are required here");
    return mtq::make_plane_conic(plane_from(cfg), param_from(cfg));
}

std::array<mtq::PPoint1, 4> config_from(const std::string& text) {
    const auto ps = split(text, ',');
    if (ps.size() != 4) throw mtq::ParseError("--config expects four comma-separated points");
    std::array<mtq::PPoint1, 4> out;
    for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = mtq::parse_point1(ps[static_cast<size_t>(i)]);
    return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw mtq::ParseError("cannot open output path: " + cfg.out_path);
    f << text;
}

void emit_json(const RunConfig& cfg, const Json& j) {
    if (cfg.format != "json")
        throw mtq::ParseError("this subcommand only supports --format json");
    emit(cfg, j.dump(2) + "\n");
}

// ---- subcommand bodies; return the process exit code -----------------------

int cmd_family_check(const RunConfig& cfg) {
    const mtq::StarVerdict v = mtq::check_star(family_from(cfg));
    emit_json(cfg, mtq::star_to_json(v));
    return v.holds ? 0 : 1;
}

int cmd_family_normalize(const RunConfig& cfg) {
    const auto [normalized, record] = mtq::normalize_family(family_from(cfg));
    Json j;
    j["family"] = mtq::family_to_json(normalized);
    j["transform"] = mtq::mobius_to_json(record.transform);
    j["quartic_scale"] = mtq::rational_to_json(record.quartic_scale);
    j["y23_scale"] = mtq::rational_to_json(record.y23_scale);
    j["identity"] = record.identity;
    emit_json(cfg, j);
    return 0;
}

int cmd_family_singular(const RunConfig& cfg) {
    const mtq::FamilyParams params = family_from(cfg);
    const mtq::SingularPoints sp = mtq::singular_points(params);
    const mtq::ScreenResult screen = mtq::singular_screen(params, cfg.points, cfg.seed);
    Json j;
    j["certified"] = sp.certified;
    j["double_root"] = sp.lambda0.to_string();
    j["hessian_ranks"] = sp.hessian_ranks;
    j["screen_checked"] = screen.checked;
    j["screen_clean"] = screen.clean();
    emit_json(cfg, j);
    return sp.certified && screen.clean() ? 0 : 1;
}

int cmd_cone_branch_curve(const RunConfig& cfg) {
    emit_json(cfg, mtq::cone_curve_to_json(mtq::branch_curve(family_from(cfg))));
    return 0;
}

int cmd_cone_branch_points(const RunConfig& cfg) {
    const auto roots = mtq::branch_points_over_line(mtq::branch_curve(family_from(cfg)));
    Json list = Json::array();
    for (const auto& r : roots) {
        Json e;
        if (mtq::is_infinity(r.where))
            e["where"] = "inf";
        else
            e["where"] = std::get<mtq::AlgebraicReal>(r.where).to_string();
        e["multiplicity"] = r.multiplicity;
        list.push_back(e);
    }
    emit_json(cfg, Json{{"branch_points", list}});
    return 0;
}

int cmd_cone_j(const RunConfig& cfg) {
    if (cfg.a_text.empty()) throw mtq::ParseError("--a is required here");
    Rational j_value;
    if (cfg.q_text.empty())
        j_value = mtq::j_closed_form(parse_rat(cfg.a_text));
    else
        j_value = mtq::family_j_invariant(family_from(cfg));
    emit_json(cfg, Json{{"j", mtq::rational_to_json(j_value)}});
    return 0;
}

int cmd_cone_fibers(const RunConfig& cfg) {
    const auto fibers = mtq::reducible_fibers(family_from(cfg));
    Json list = Json::array();
    for (const auto& u : fibers) list.push_back(mtq::point1_to_json(u));
    emit_json(cfg, Json{{"fibers", list}});
    return 0;
}

std::string svg_real_locus(const std::vector<mtq::RealLocusSample>& samples) {
    // Polyline plot per component in the (u, zeta) chart; infinity is skipped.
    const char* colors[] = {"#1f77b4", "#d62728"};
    double umin = -2, umax = 2, zmax = 1;
    for (const auto& s : samples) {
        if (s.u.is_infinity()) continue;
        const double u = mtq::to_double(s.u.value());
        umin = std::min(umin, u);
        umax = std::max(umax, u);
        zmax = std::max(zmax, std::abs(s.zeta));
    }
    const double w = 640, h = 360;
    auto px = [&](double u) { return (u - umin) / (umax - umin) * (w - 40) + 20; };
    auto py = [&](double z) { return h / 2 - z / zmax * (h / 2 - 20); };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    for (int comp = 0; comp < 2; ++comp) {
        const auto want = comp == 0 ? mtq::RealLocusComponent::T2Sphere
                                    : mtq::RealLocusComponent::T4Sphere;
        for (int sign = -1; sign <= 1; sign += 2) {
            std::vector<std::pair<double, double>> pts;
            for (const auto& s : samples) {
                if (s.component != want || s.u.is_infinity()) continue;
                pts.emplace_back(mtq::to_double(s.u.value()), sign * s.zeta);
            }
            std::sort(pts.begin(), pts.end());
            if (pts.empty()) continue;
            svg << "  <polyline fill=\"none\" stroke=\"" << colors[comp] << "\" points=\"";
            for (const auto& [u, z] : pts) svg << px(u) << "," << py(z) << " ";
            svg << "\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

int cmd_cone_real_locus(const RunConfig& cfg) {
    const mtq::FamilyParams params = family_from(cfg);
    const auto samples = mtq::sample_real_locus(params, cfg.points, cfg.seed);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "u,zeta,component\n";
        for (const auto& s : samples)
            csv << mtq::format_point1(s.u) << "," << s.zeta << ","
                << mtq::component_name(s.component) << "\n";
        emit(cfg, csv.str());
        return 0;
    }
    if (cfg.format == "svg") {
        emit(cfg, svg_real_locus(samples));
        return 0;
    }
    Json list = Json::array();
    for (const auto& s : samples) {
        Json e;
        e["u"] = mtq::point1_to_json(s.u);
        e["zeta"] = s.zeta;
        e["component"] = mtq::component_name(s.component);
        list.push_back(e);
    }
    emit_json(cfg, Json{{"samples", list}});
    return 0;
}

int cmd_conic_image(const RunConfig& cfg) {
    emit_json(cfg, mtq::cone_curve_to_json(mtq::conic_image_on_cone(conic_from(cfg))));
    return 0;
}

int cmd_conic_touch(const RunConfig& cfg) {
    const mtq::FamilyParams params = family_from(cfg);
    if (cfg.plane_text.empty()) throw mtq::ParseError("--plane is required here");
    const mtq::PlaneConicF conic =
        mtq::find_touching_conic(params, plane_double_from(cfg), cfg.seed, cfg.tol_defect);
    const mtq::TouchingVerdict tv =
        mtq::is_touching(params, conic, cfg.tol_defect, cfg.tol_cluster);
    Json j;
    j["conic"] = mtq::conic_to_json(conic);
    j["touching"] = tv.touching;
    j["defect"] = tv.defect;
    j["contact"] = mtq::contact_to_json(tv.report);
    emit_json(cfg, j);
    return tv.touching ? 0 : 1;
}

int cmd_conic_node(const RunConfig& cfg) {
    const auto nodes = mtq::detect_nodes(mtq::conic_image_on_cone(conic_from(cfg)));
    Json list = Json::array();
    for (const auto& n : nodes) list.push_back(mtq::node_to_json(n));
    emit_json(cfg, Json{{"nodes", list}});
    const bool ok = nodes.size() == 1 && nodes[0].type == mtq::NodeType::Node;
    return ok ? 0 : 1;
}

int cmd_conic_contact(const RunConfig& cfg) {
    const mtq::FamilyParams params = family_from(cfg);
    const mtq::ConeCurve img = mtq::conic_image_on_cone(conic_from(cfg));
    const mtq::ContactReport report = mtq::contact_with_branch(img, params);
    Json j;
    j["image"] = mtq::cone_curve_to_json(img);
    j["contact"] = mtq::contact_to_json(report);
    emit_json(cfg, j);
    return report.all_even ? 0 : 1;
}

int cmd_conic_lift(const RunConfig& cfg) {
    const mtq::FamilyParams params = family_from(cfg);
    if (cfg.plane_text.empty()) throw mtq::ParseError("--plane is required here");
    const mtq::PlaneConicF conic =
        mtq::find_touching_conic(params, plane_double_from(cfg), cfg.seed, cfg.tol_defect);
    const mtq::LiftResult lift =
        mtq::lift_minitwistor_line(params, conic, cfg.tol_defect, cfg.tol_cluster);
    Json j;
    j["conic"] = mtq::conic_to_json(conic);
    switch (lift.verdict) {
        case mtq::LiftVerdict::SplitsNodal: j["verdict"] = "SPLITS_NODAL"; break;
        case mtq::LiftVerdict::SplitsSmooth: j["verdict"] = "SPLITS_SMOOTH"; break;
        case mtq::LiftVerdict::Irreducible: j["verdict"] = "IRREDUCIBLE"; break;
    }
    j["node"] = mtq::node_to_json(lift.node);
    j["w1"] = {lift.w1.real(), lift.w1.imag()};
    j["w2"] = {lift.w2.real(), lift.w2.imag()};
    emit_json(cfg, j);
    return lift.verdict == mtq::LiftVerdict::SplitsNodal ? 0 : 1;
}

int cmd_moduli_invariant(const RunConfig& cfg) {
    if (cfg.config_text.empty()) throw mtq::ParseError("--config is required here");
    const auto c = mtq::CircleConfig::from_points(config_from(cfg.config_text));
    emit_json(cfg, Json{{"invariant", mtq::rational_to_json(mtq::canonical_invariant(c))}});
    return 0;
}

int cmd_moduli_equiv(const RunConfig& cfg) {
    if (cfg.config_text.empty() || cfg.config2_text.empty())
        throw mtq::ParseError("--config and --config2 are required here");
    const auto c1 = mtq::CircleConfig::from_points(config_from(cfg.config_text));
    const auto c2 = mtq::CircleConfig::from_points(config_from(cfg.config2_text));
    const mtq::EquivalenceWitness w = mtq::are_equivalent(c1, c2);
    Json j;
    j["equivalent"] = w.equivalent;
    if (w.witness) j["witness"] = mtq::mobius_to_json(*w.witness);
    emit_json(cfg, j);
    return w.equivalent ? 0 : 1;
}

int cmd_moduli_of_family(const RunConfig& cfg) {
    if (cfg.a_text.empty()) throw mtq::ParseError("--a is required here");
    const Rational a = parse_rat(cfg.a_text);
    if (a <= 0) throw mtq::InvalidFamily("a must be positive");
    const auto c = mtq::CircleConfig::from_points(
        {mtq::PPoint1::finite(-1), mtq::PPoint1::finite(0), mtq::PPoint1::finite(a),
         mtq::PPoint1::infinity()});
    emit_json(cfg, Json{{"invariant", mtq::rational_to_json(mtq::canonical_invariant(c))}});
    return 0;
}

int cmd_lattice_verify(const RunConfig& cfg) {
    const mtq::LineClassSolution sol = mtq::solve_line_classes();
    const mtq::DivisorClass mk = mtq::DivisorClass::anticanonical();
    Json constraints = Json::array();
    auto row = [](const std::string& name, int want, int got) {
        return Json{{"constraint", name}, {"required", want}, {"value", got}};
    };
    constraints.push_back(row("(-K)^2", 4, mtq::intersect(mk, mk)));
    constraints.push_back(row("L1.L2", 4, mtq::intersect(sol.l1, sol.l2)));
    constraints.push_back(row("L1.(-K)", 4, mtq::intersect(sol.l1, mk)));
    Json j;
    j["constraints"] = constraints;
    j["candidates_searched"] = sol.candidates_searched;
    j["solutions_found"] = sol.solutions_found;
    j["l1"] = {sol.l1.a, sol.l1.b, sol.l1.n[0], sol.l1.n[1], sol.l1.n[2], sol.l1.n[3]};
    j["l2"] = {sol.l2.a, sol.l2.b, sol.l2.n[0], sol.l2.n[1], sol.l2.n[2], sol.l2.n[3]};
    emit_json(cfg, j);
    return sol.solutions_found == 1 ? 0 : 1;
}

int cmd_suite_all(const RunConfig& cfg) {
    const auto results = mtq::run_acceptance(cfg.seed);
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
        Json e;
        e["index"] = r.index;
        e["name"] = r.name;
        e["passed"] = r.passed;
        if (!r.passed) e["detail"] = r.detail;
        list.push_back(e);
        all = all && r.passed;
        std::cerr << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.index << ": "
                  << r.name << "\n";
    }
    emit_json(cfg, Json{{"criteria", list}, {"all_passed", all}});
    return all ? 0 : 1;
}

bool is_input_error(const mtq::Error& e) {
    return dynamic_cast<const mtq::ParseError*>(&e) ||
           dynamic_cast<const mtq::InvalidFamily*>(&e) ||
           dynamic_cast<const mtq::InvalidConic*>(&e) ||
           dynamic_cast<const mtq::NotDistinct*>(&e) ||
           dynamic_cast<const mtq::NonRealInput*>(&e) ||
           dynamic_cast<const mtq::DegeneratePlane*>(&e) ||
           dynamic_cast<const mtq::OrbitTangentPlane*>(&e) ||
           dynamic_cast<const mtq::SymmetricConic*>(&e) ||
           dynamic_cast<const mtq::SingularTransform*>(&e);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for quartic families, cone curves and conics"};
    app.require_subcommand(1);

    RunConfig cfg;
    int (*action)(const RunConfig&) = nullptr;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a_text, "family parameter a (rational)");
        sub->add_option("--q", cfg.q_text, "q20,q11,q02 (rationals)");
        sub->add_option("--points", cfg.points, "sample count");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--format", cfg.format, "json|csv|svg")
            ->check(CLI::IsMember({"json", "csv", "svg"}));
        sub->add_option("--tol-defect", cfg.tol_defect, "square-defect tolerance");
        sub->add_option("--tol-cluster", cfg.tol_cluster, "root-cluster radius");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--plane", cfg.plane_text, "plane alpha,beta,gamma,delta");
        sub->add_option("--param", cfg.param_text,
                        "conic parametrization: nine rationals, three per plane "
                        "coordinate, descending (s^2,s,1)");
        sub->add_option("--config", cfg.config_text, "four points, comma list, inf allowed");
        sub->add_option("--config2", cfg.config2_text, "second four-point config");
    };
    auto sub = [&](CLI::App* parent, const char* name, const char* desc,
                   int (*fn)(const RunConfig&)) {
        CLI::App* s = parent->add_subcommand(name, desc);
        add_common(s);
        s->callback([&action, fn] { action = fn; });
        return s;
    };

    CLI::App* family = app.add_subcommand("family", "quartic family operations");
    family->require_subcommand(1);
    sub(family, "check", "check the double-root condition", cmd_family_check);
    sub(family, "normalize", "move the double root above a", cmd_family_normalize);
    sub(family, "singular", "certify singular points and screen samples", cmd_family_singular);

    CLI::App* cone = app.add_subcommand("cone", "quotient-cone operations");
    cone->require_subcommand(1);
    sub(cone, "branch-curve", "branch curve on the cone chart", cmd_cone_branch_curve);
    sub(cone, "branch-points", "branch points over the u-line", cmd_cone_branch_points);
    sub(cone, "j", "j-invariant of the branch curve", cmd_cone_j);
    sub(cone, "fibers", "degenerate fibers of the double cover", cmd_cone_fibers);
    sub(cone, "real-locus", "sample and classify the real locus", cmd_cone_real_locus);

    CLI::App* conic = app.add_subcommand("conic", "plane-conic operations");
    conic->require_subcommand(1);
    sub(conic, "image", "implicit image of a conic on the cone", cmd_conic_image);
    sub(conic, "touch", "search a touching conic in a plane", cmd_conic_touch);
    sub(conic, "node", "nodes of a conic's image curve", cmd_conic_node);
    sub(conic, "contact", "contact of the image with the branch curve", cmd_conic_contact);
    sub(conic, "lift", "lift a touching conic through the double cover", cmd_conic_lift);

    CLI::App* moduli = app.add_subcommand("moduli", "four points on a circle");
    moduli->require_subcommand(1);
    sub(moduli, "invariant", "canonical invariant of a config", cmd_moduli_invariant);
    sub(moduli, "equiv", "equivalence of two configs with witness", cmd_moduli_equiv);
    sub(moduli, "of-family", "invariant of the branch config of a family",
        cmd_moduli_of_family);

    CLI::App* lattice = app.add_subcommand("lattice", "divisor-class lattice");
    lattice->require_subcommand(1);
    sub(lattice, "verify", "line-class constraint table", cmd_lattice_verify);

    CLI::App* suite = app.add_subcommand("suite", "verification suites");
    suite->require_subcommand(1);
    sub(suite, "all", "run every acceptance criterion", cmd_suite_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action(cfg) : 2;
    } catch (const mtq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
