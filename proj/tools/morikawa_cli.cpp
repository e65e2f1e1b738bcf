#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "morikawa/algebra.hpp"
#include "morikawa/galois.hpp"
#include "morikawa/geometry.hpp"
#include "morikawa/json_io.hpp"
#include "morikawa/minimize.hpp"

namespace {

using namespace morikawa;

// All numeric output carries 15 significant digits.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

double default_tol() {
    if (const char* env = std::getenv("MORIKAWA_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
        throw DomainError("MORIKAWA_TOL is not a positive number");
    }
    return 1e-12;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw DomainError("empty value list");
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + path);
    f << content;
}

std::string companion_path(const std::string& path) {
    auto dotpos = path.rfind('.');
    if (dotpos == std::string::npos || path.find('/', dotpos) != std::string::npos)
        return path + ".z";
    return path.substr(0, dotpos) + ".z" + path.substr(dotpos);
}

const char* contact_name(geometry::CircleContactKind k) {
    switch (k) {
        case geometry::CircleContactKind::None: return "None";
        case geometry::CircleContactKind::Corner: return "Corner";
        case geometry::CircleContactKind::SideTangent: return "SideTangent";
        case geometry::CircleContactKind::CornerWithTangency: return "CornerWithTangency";
    }
    return "?";
}

std::string contact_detail(const geometry::CircleContact& c) {
    std::string out = contact_name(c.kind);
    if (c.vertex) out += std::string(" at ") + geometry::kVertexNames[static_cast<int>(*c.vertex)];
    if (c.side) out += std::string(" side ") + geometry::kSideNames[static_cast<int>(*c.side)];
    return out;
}

std::string svg_curves(const std::vector<std::pair<double, double>>& left,
                       const std::vector<std::pair<double, double>>& right,
                       const std::string& left_label, const std::string& right_label) {
    const double panel_w = 420, panel_h = 420, margin = 45;
    auto panel = [&](const std::vector<std::pair<double, double>>& pts, double x0, const std::string& label) {
        double xmin = pts.front().first, xmax = pts.front().first;
        double ymin = pts.front().second, ymax = pts.front().second;
        for (auto& [x, y] : pts) {
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
        if (xmax == xmin) xmax = xmin + 1;
        if (ymax == ymin) ymax = ymin + 1;
        std::string s;
        s += "<g>\n";
        s += "<rect x=\"" + fmt(x0 + margin) + "\" y=\"" + fmt(margin) + "\" width=\"" + fmt(panel_w - 2 * margin) +
             "\" height=\"" + fmt(panel_h - 2 * margin) + "\" fill=\"none\" stroke=\"black\"/>\n";
        s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
        for (auto& [x, y] : pts) {
            double px = x0 + margin + (x - xmin) / (xmax - xmin) * (panel_w - 2 * margin);
            double py = panel_h - margin - (y - ymin) / (ymax - ymin) * (panel_h - 2 * margin);
            s += fmt(px) + "," + fmt(py) + " ";
        }
        s += "\"/>\n";
        s += "<text x=\"" + fmt(x0 + panel_w / 2) + "\" y=\"" + fmt(panel_h - 8) +
             "\" text-anchor=\"middle\" font-size=\"14\">" + label + "</text>\n";
        s += "</g>\n";
        return s;
    };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(2 * panel_w) + "\" height=\"" +
                      fmt(panel_h) + "\">\n";
    svg += panel(left, 0, left_label);
    svg += panel(right, panel_w, right_label);
    svg += "</svg>\n";
    return svg;
}

int run(int argc, char** argv) {
    CLI::App app{"Minimal inscribed squares between a line and two tangent circles"};
    app.require_subcommand(1);

    double r_val = 1.0, theta = 0.0, tol = default_tol();
    int grid_n = 500, primes = 500;
    std::uint64_t seed = 0;
    std::string out_path, t_str = "1", k_str = "2", r_list = "1", format = "csv";

    auto* mu_cmd = app.add_subcommand("mu", "Minimal side length mu(r) and its minimizer x_m");
    mu_cmd->add_option("--r", r_val, "radius ratio, r >= 1")->required();
    mu_cmd->add_option("--tol", tol, "minimizer tolerance");

    auto* curve_cmd = app.add_subcommand("curve", "Emit s(theta) and z(x) curves");
    curve_cmd->add_option("--r", r_val)->required();
    curve_cmd->add_option("--n", grid_n, "grid size");
    curve_cmd->add_option("--out", out_path)->required();
    curve_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));

    auto* classify_cmd = app.add_subcommand("classify", "Contact profile of the inscribed square");
    classify_cmd->add_option("--r", r_val)->required();
    classify_cmd->add_option("--theta", theta)->required();
    classify_cmd->add_option("--tol", tol, "contact tolerance");

    auto* poly_cmd = app.add_subcommand("poly", "Coefficients of p(t,.) and its components");
    poly_cmd->add_option("--t", t_str, "rational t, e.g. 3/2")->required();
    poly_cmd->add_option("--out", out_path)->required();

    auto* hpoly_cmd = app.add_subcommand("hpoly", "Trivariate certificate h(k,x,y)");
    hpoly_cmd->add_option("--out", out_path)->required();

    auto* galois_cmd = app.add_subcommand("galois", "Cycle-type statistics of p(k0,.) mod primes");
    galois_cmd->add_option("--k", k_str, "rational k0 >= 1")->required();
    galois_cmd->add_option("--primes", primes, "number of primes to examine");
    galois_cmd->add_option("--seed", seed, "seed for the prime-range offset");
    galois_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "Residual suite over a list of radii");
    verify_cmd->add_option("--r-list", r_list, "comma-separated radii")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (mu_cmd->parsed()) {
        auto res = minimize::minimize_mu(r_val, tol);
        std::cout << "r " << fmt(res.r) << "\n";
        std::cout << "x_m " << fmt(res.x_m) << "\n";
        std::cout << "mu " << fmt(res.mu) << "\n";
        std::cout << "iterations " << res.iterations << "\n";
        std::cout << "residual_zprime " << fmt(res.residual_zprime) << "\n";
        return 0;
    }

    if (curve_cmd->parsed()) {
        if (grid_n < 2) throw DomainError("curve requires --n >= 2");
        auto scene = geometry::Scene::with_radius(r_val);
        std::vector<std::pair<double, double>> s_curve, z_curve;
        const double theta_max = std::numbers::pi / 2 - 1e-6;
        for (int i = 0; i < grid_n; ++i) {
            double th = theta_max * i / (grid_n - 1);
            s_curve.emplace_back(th, geometry::inscribed_square(scene, th).s);
        }
        const double lo = minimize::interval_lo() + 1e-9, hi = 1.0 - 1e-9;
        for (int i = 0; i < grid_n; ++i) {
            double x = lo + (hi - lo) * i / (grid_n - 1);
            z_curve.emplace_back(x, minimize::z(r_val, x));
        }
        if (format == "csv") {
            std::string a = "theta,s\n", b = "x,z\n";
            for (auto& [th, s] : s_curve) a += fmt(th) + "," + fmt(s) + "\n";
            for (auto& [x, zv] : z_curve) b += fmt(x) + "," + fmt(zv) + "\n";
            write_file(out_path, a);
            write_file(companion_path(out_path), b);
        } else if (format == "json") {
            nlohmann::ordered_json j;
            j["r"] = r_val;
            j["theta"] = nlohmann::ordered_json::array();
            j["s"] = nlohmann::ordered_json::array();
            for (auto& [th, s] : s_curve) {
                j["theta"].push_back(fmt(th));
                j["s"].push_back(fmt(s));
            }
            j["x"] = nlohmann::ordered_json::array();
            j["z"] = nlohmann::ordered_json::array();
            for (auto& [x, zv] : z_curve) {
                j["x"].push_back(fmt(x));
                j["z"].push_back(fmt(zv));
            }
            write_file(out_path, j.dump(2) + "\n");
        } else {
            write_file(out_path, svg_curves(s_curve, z_curve, "s(theta), r=" + fmt(r_val),
                                            "z(x), r=" + fmt(r_val)));
        }
        return 0;
    }

    if (classify_cmd->parsed()) {
        auto scene = geometry::Scene::with_radius(r_val);
        double contact_tol = classify_cmd->count("--tol") ? tol : geometry::default_contact_tol(scene);
        auto pose = geometry::inscribed_square(scene, theta);
        auto profile = geometry::classify(scene, pose, contact_tol);
        std::cout << "s " << fmt(pose.s) << "\n";
        std::cout << "line "
                  << (profile.line_contact == geometry::LineContactKind::SideOnLine ? "SideOnLine"
                                                                                    : "CornerOnLine")
                  << "\n";
        std::cout << "c1 " << contact_detail(profile.c1_contact) << "\n";
        std::cout << "cr " << contact_detail(profile.cr_contact) << "\n";
        std::cout << "hint " << profile.named_hint.value_or("-") << "\n";
        return 0;
    }

    if (poly_cmd->parsed()) {
        Rational t0 = parse_rational(t_str);
        const auto& cp = algebra::coeff_polys();
        nlohmann::ordered_json j;
        j["t"] = to_string(t0);
        j["E"] = to_json(algebra::specialize(cp.E, t0));
        j["F"] = to_json(algebra::specialize(cp.F, t0));
        j["C"] = to_json(algebra::specialize(cp.C, t0));
        j["B"] = to_json(algebra::specialize(cp.B, t0));
        j["D"] = to_json(algebra::specialize(cp.D, t0));
        j["G"] = to_json(algebra::specialize(cp.G, t0));
        j["H"] = to_json(algebra::specialize(cp.H, t0));
        j["p"] = to_json(algebra::specialize(algebra::build_p(), t0));
        write_file(out_path, j.dump(2) + "\n");
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }

    if (hpoly_cmd->parsed()) {
        write_file(out_path, to_json(algebra::build_h()).dump(2) + "\n");
        std::cout << "wrote " << out_path << "\n";
        return 0;
    }

    if (galois_cmd->parsed()) {
        Rational k0 = parse_rational(k_str);
        auto hist = galois::sample_cycle_types(k0, primes, seed);
        auto report = galois::s10_evidence(hist);
        auto j = galois::report_to_json(k0, hist, report);
        if (!out_path.empty()) write_file(out_path, j.dump(2) + "\n");
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        bool all_pass = true;
        std::cout << "r                     check                 value                  limit      status\n";
        auto row = [&](double r, const std::string& name, double value, double limit) {
            bool ok = value <= limit;
            all_pass = all_pass && ok;
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%-21.15g %-21s %-22.15g %-10.0e %s", r, name.c_str(),
                          value, limit, ok ? "PASS" : "FAIL");
            std::cout << buf << "\n";
        };
        for (double r : parse_double_list(r_list)) {
            auto scene = geometry::Scene::with_radius(r);
            auto mres = minimize::minimize_mu(r, tol);
            auto bres = geometry::brute_force_mu(scene, 2000);
            row(r, "two-path |d mu|", std::abs(mres.mu - bres.mu), 1e-8);
            row(r, "stationarity |z'|", mres.residual_zprime, 1e-9);

            double t = std::sqrt(r);
            const auto& p = algebra::build_p();
            double pmax = 0.0;
            for (int j = 0; j <= p.degree_x(); ++j)
                pmax = std::max(pmax, std::abs(p.coeff_in_x(j).eval(t)));
            row(r, "p residual", std::abs(algebra::eval(p, t, mres.x_m)) / pmax, 1e-7);

            double hval = algebra::eval(algebra::build_h(), t, mres.x_m, mres.mu * mres.mu);
            double hmax = to_double(algebra::build_h().max_abs_coeff());
            row(r, "h residual", std::abs(hval) / hmax, 1e-7);

            auto pose = geometry::inscribed_square(scene, bres.theta_star);
            auto cl = geometry::clearances(scene, pose);
            double worst = std::max({std::abs(cl[0]), std::abs(cl[1]), std::abs(cl[2])});
            row(r, "clearance", worst, 1e-10 * std::max(1.0, r));
        }
        std::cout << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
        return all_pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const EmptyHistogram& e) {
        std::cerr << "empty histogram: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
