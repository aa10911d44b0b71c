#include <complex>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twocrit/boettcher.hpp"
#include "twocrit/family.hpp"
#include "twocrit/orbit.hpp"
#include "twocrit/render.hpp"
#include "twocrit/resultant.hpp"
#include "verify_suites.hpp"

namespace {

using namespace twocrit;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string outcome_str(const PointClass& pc) {
    std::ostringstream os;
    switch (pc.kind) {
        case PointKind::BasinZero: os << "zero:" << pc.index; break;
        case PointKind::BasinInfinity: os << "inf:" << pc.index; break;
        case PointKind::Cycle:
            os << "cycle:p" << pc.period << ":mult" << pc.multiplier.abs();
            break;
        case PointKind::Undecided: os << "undecided"; break;
    }
    return os.str();
}

int level_or_period(const ParamClass& pc) {
    switch (pc.kind) {
        case ParamKind::BothEscape:
        case ParamKind::AlphaEscape:
        case ParamKind::AlphaResidual: return pc.alpha_level;
        case ParamKind::BetaEscape:
        case ParamKind::BetaResidual: return pc.beta_level;
        case ParamKind::AlphaCycle:
        case ParamKind::BetaCycle: return pc.period;
        case ParamKind::Undecided: return -1;
    }
    return -1;
}

struct ViewOpts {
    double center_re = 0.0, center_im = 0.0;
    double width = 5.0, height = 5.0;
    int px = 512, px_h = 0;

    ViewRect view() const { return ViewRect{{center_re, center_im}, width, height}; }
    int h() const { return px_h > 0 ? px_h : px; }
};

void add_view_options(CLI::App* cmd, ViewOpts& v) {
    cmd->add_option("--center", [&v](const std::vector<std::string>& vals) {
           v.center_re = std::stod(vals.at(0));
           v.center_im = std::stod(vals.at(1));
           return true;
       },
       "View center (re im)")
        ->expected(2)
        ->default_str("0 0");
    cmd->add_option("--width", v.width, "View width")->capture_default_str();
    cmd->add_option("--height", v.height, "View height")->capture_default_str();
    cmd->add_option("--px", v.px, "Pixels across")->capture_default_str();
    cmd->add_option("--px-h", v.px_h, "Pixel rows (default: same as --px)")
        ->capture_default_str();
}

void print_component_counts(const ClassGrid& grid, bool param_plane) {
    const std::vector<CellTag> tags =
        param_plane
            ? std::vector<CellTag>{CellTag::ParamBothEscape, CellTag::ParamAlphaEscape,
                                   CellTag::ParamBetaEscape, CellTag::ParamAlphaResidual,
                                   CellTag::ParamBetaResidual, CellTag::ParamAlphaCycle,
                                   CellTag::ParamBetaCycle, CellTag::ParamUndecided}
            : std::vector<CellTag>{CellTag::PointZero, CellTag::PointInfinity,
                                   CellTag::PointCycle, CellTag::PointUndecided};
    for (CellTag tag : tags) {
        const int c = count_components(grid, tag);
        if (c > 0)
            std::cout << "components " << to_string(tag) << "=" << c << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Dynamics of the rational family f_t(z) = t z^m ((1-z)/(1+z))^n: "
        "classification, Boettcher/Green functions, exact multiplier curves "
        "and plane rendering"};
    app.require_subcommand(1);

    int m = 2, n = 1, budget = 2000, threads = 0;
    double t_re = 1.0, t_im = 0.0, z_re = 0.0, z_im = 0.0;
    double c_re = -2.0, c_im = 0.0;
    std::string out_path = "out.ppm";
    bool no_smooth = false, no_circle = false, components = false, record = false;
    bool via_t = false;
    int ek = 0, max_print = 20;
    bool want_e0 = false, want_eres = false;
    std::vector<std::string> suite_args;

    auto add_mn = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "Exponent m (>= 2)")->capture_default_str();
        cmd->add_option("--n", n, "Exponent n (>= 1)")->capture_default_str();
    };
    auto add_t = [&](CLI::App* cmd, bool required = false) {
        auto* opt = cmd->add_option("--t",
                                    [&](const std::vector<std::string>& vals) {
                                        t_re = std::stod(vals.at(0));
                                        t_im = std::stod(vals.at(1));
                                        return true;
                                    },
                                    "Parameter t (re im)")
                        ->expected(2)
                        ->default_str("1 0");
        if (required) opt->required();
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "Iteration budget")->capture_default_str();
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads,
                        "Worker threads (0 = auto, capped by RENDER_THREADS)")
            ->capture_default_str();
    };

    // render-param
    auto* rp = app.add_subcommand("render-param",
                                  "Render the f_t parameter plane to a PPM image");
    ViewOpts rp_view;
    rp_view.width = rp_view.height = 5.0;
    add_mn(rp);
    add_view_options(rp, rp_view);
    add_budget(rp);
    add_threads(rp);
    rp->add_option("--out", out_path, "Output PPM path")->capture_default_str();
    rp->add_flag("--no-smooth", no_smooth, "Disable Green-smoothed shading");
    rp->add_flag("--no-circle", no_circle, "Disable the unit-circle overlay");
    rp->add_flag("--components", components, "Print 4-connected component counts");

    // render-pc
    auto* rpc = app.add_subcommand(
        "render-pc", "Render the P_c = c z^m (z+1)^n parameter plane");
    ViewOpts pc_view;
    pc_view.center_re = -2.0;
    pc_view.width = pc_view.height = 8.0;
    add_mn(rpc);
    add_view_options(rpc, pc_view);
    add_budget(rpc);
    add_threads(rpc);
    rpc->add_option("--out", out_path, "Output PPM path")->capture_default_str();
    rpc->add_flag("--no-smooth", no_smooth, "Disable Green-smoothed shading");
    rpc->add_flag("--via-t", via_t,
                  "Sample pixels in the t-plane and render P_{c_t} ((m,n)=(2,1); "
                  "default window -0.2<Re t<0.25, -0.25<Im t<0.25)");
    rpc->add_flag("--components", components, "Print component counts");

    // render-dyn
    auto* rd = app.add_subcommand("render-dyn",
                                  "Render the dynamical plane of one f_t");
    ViewOpts dyn_view;
    dyn_view.width = dyn_view.height = 4.0;
    add_mn(rd);
    add_t(rd);
    add_view_options(rd, dyn_view);
    add_budget(rd);
    add_threads(rd);
    rd->add_option("--out", out_path, "Output PPM path")->capture_default_str();
    rd->add_flag("--no-smooth", no_smooth, "Disable Green-smoothed shading");
    rd->add_flag("--components", components, "Print component counts");

    // classify
    auto* cl = app.add_subcommand("classify",
                                  "Classify a parameter by its critical orbits");
    add_mn(cl);
    add_t(cl);
    add_budget(cl);
    cl->add_flag("--record", record, "Also emit a single-line machine record");

    // orbit
    auto* ob = app.add_subcommand("orbit", "Iterate one orbit and report it");
    add_mn(ob);
    add_t(ob);
    add_budget(ob);
    ob->add_option("--z", [&](const std::vector<std::string>& vals) {
          z_re = std::stod(vals.at(0));
          z_im = std::stod(vals.at(1));
          return true;
      },
      "Seed z (re im)")
        ->expected(2)
        ->required();
    ob->add_option("--max-print", max_print, "Orbit points to print")
        ->capture_default_str();

    // boettcher
    auto* bo = app.add_subcommand(
        "boettcher", "Green/Boettcher data at a point, optional E-values");
    add_mn(bo);
    add_t(bo);
    add_budget(bo);
    bo->add_option("--z", [&](const std::vector<std::string>& vals) {
          z_re = std::stod(vals.at(0));
          z_im = std::stod(vals.at(1));
          return true;
      },
      "Evaluation point z (re im)")
        ->expected(2);
    bo->add_flag("--e0", want_e0, "Print E_0(t)");
    bo->add_flag("--eres", want_eres, "Print E_res(t)");
    bo->add_option("--ek", ek, "Print E_k(t) for this k >= 1");

    // verify
    auto* ve = app.add_subcommand("verify", "Run verification suites");
    std::string suites_help = "Suites:";
    for (const auto& s : twocrit::verify::suite_names()) suites_help += " " + s;
    ve->add_option("suites", suite_args, suites_help + " (or: all)")
        ->expected(-1)
        ->required();

    (void)c_re;
    (void)c_im;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        PaletteSpec pal;
        pal.smooth = !no_smooth;

        if (rp->parsed()) {
            pal.unit_circle = !no_circle;
            const auto res = render_parameter_plane(
                m, n, rp_view.view(), rp_view.px, rp_view.h(), budget, pal, threads);
            write_image(res.image, out_path);
            std::cout << "wrote " << out_path << " (" << rp_view.px << "x"
                      << rp_view.h() << ")\n";
            if (components) print_component_counts(res.grid, true);
        } else if (rpc->parsed()) {
            ViewOpts v = pc_view;
            if (via_t && !rpc->count("--center") && !rpc->count("--width") &&
                !rpc->count("--height")) {
                v.center_re = 0.025;
                v.center_im = 0.0;
                v.width = 0.45;
                v.height = 0.5;
            }
            const auto res =
                via_t ? render_pc_plane_via_t(v.view(), v.px, v.h(), budget, pal,
                                              threads)
                      : render_pc_parameter_plane(m, n, v.view(), v.px, v.h(),
                                                  budget, pal, threads);
            write_image(res.image, out_path);
            std::cout << "wrote " << out_path << " (" << v.px << "x" << v.h()
                      << ")\n";
            if (components) print_component_counts(res.grid, false);
        } else if (rd->parsed()) {
            const FamilyParams p(m, n, std::complex<double>(t_re, t_im));
            const auto res = render_dynamical_plane(
                p, dyn_view.view(), dyn_view.px, dyn_view.h(), budget, pal, threads);
            write_image(res.image, out_path);
            std::cout << "wrote " << out_path << " (" << dyn_view.px << "x"
                      << dyn_view.h() << ")\n";
            if (components) print_component_counts(res.grid, false);
        } else if (cl->parsed()) {
            const ParamClass pc =
                classify_parameter(m, n, ExtComplex(t_re, t_im), budget);
            const int iters = std::max(pc.alpha_outcome.iterations,
                                       pc.beta_outcome.iterations);
            std::cout << "m=" << m << "\n"
                      << "n=" << n << "\n"
                      << "t_re=" << t_re << "\n"
                      << "t_im=" << t_im << "\n"
                      << "class=" << to_string(pc.kind) << "\n"
                      << "level_or_period=" << level_or_period(pc) << "\n"
                      << "iterations=" << iters << "\n"
                      << "alpha_outcome=" << outcome_str(pc.alpha_outcome) << "\n"
                      << "beta_outcome=" << outcome_str(pc.beta_outcome) << "\n";
            if (record)
                std::cout << "record classify m=" << m << " n=" << n
                          << " t_re=" << t_re << " t_im=" << t_im
                          << " class=" << to_string(pc.kind)
                          << " level_or_period=" << level_or_period(pc)
                          << " iterations=" << iters
                          << " alpha_outcome=" << outcome_str(pc.alpha_outcome)
                          << " beta_outcome=" << outcome_str(pc.beta_outcome)
                          << "\n";
        } else if (ob->parsed()) {
            const FamilyParams p(m, n, std::complex<double>(t_re, t_im));
            const OrbitRecord rec = iterate_orbit(p, ExtComplex(z_re, z_im), budget,
                                                  trap_disc(m, n));
            std::cout << "outcome=" << outcome_str(rec.outcome) << "\n";
            if (rec.first_trap_entry)
                std::cout << "first_trap_entry=" << *rec.first_trap_entry << "\n";
            if (rec.first_escape)
                std::cout << "first_escape=" << *rec.first_escape << "\n";
            std::cout << "points_stored=" << rec.points.size() << "\n";
            const int k = std::min<int>((int)rec.points.size(), max_print);
            for (int i = 0; i < k; ++i)
                std::cout << "z" << i << "=" << rec.points[i] << "\n";
        } else if (bo->parsed()) {
            const FamilyParams p(m, n, std::complex<double>(t_re, t_im));
            if (bo->count("--z")) {
                const ExtComplex z(z_re, z_im);
                const PointClass pc = classify_point(p, z, budget);
                std::cout << "point_class=" << outcome_str(pc) << "\n";
                if (pc.kind == PointKind::BasinZero) {
                    const GreenValue g = green_zero(p, z);
                    const BoettcherValue phi = boettcher_coordinate(p, z);
                    const ExtComplex fz = eval_map(p, z);
                    const BoettcherValue phif = boettcher_coordinate(p, fz);
                    std::cout << "green=" << g.value
                              << " iterations=" << g.iterations_used
                              << " converged=" << g.converged << "\n"
                              << "phi=" << phi.value
                              << " branch_warnings=" << phi.branch_warnings << "\n"
                              << "functional_residual="
                              << std::abs(phif.value.value() -
                                          p.tv() * ipow(phi.value.value(), m))
                              << "\n"
                              << "modulus_consistency="
                              << std::abs(std::exp(g.value) - phi.value.abs())
                              << "\n";
                } else if (pc.kind == PointKind::BasinInfinity) {
                    const GreenValue g = green_infinity(p, z);
                    std::cout << "green_infinity=" << g.value
                              << " iterations=" << g.iterations_used
                              << " converged=" << g.converged << "\n";
                }
            }
            const ExtComplex t(t_re, t_im);
            if (want_e0) {
                const ExtComplex e = e_value(m, n, t, EKind::E0, 0, budget);
                std::cout << "E0=" << e << " abs=" << e.abs() << "\n";
            }
            if (want_eres) {
                const ExtComplex e = e_value(m, n, t, EKind::Eres, 0, budget);
                std::cout << "Eres=" << e << " abs=" << e.abs() << "\n";
            }
            if (ek >= 1) {
                const ExtComplex e = e_value(m, n, t, EKind::Ek, ek, budget);
                std::cout << "E" << ek << "=" << e << " abs=" << e.abs() << "\n";
            }
        } else if (ve->parsed()) {
            bool all = true;
            for (std::string name : suite_args) {
                if (name == "all") {
                    for (const auto& s : twocrit::verify::suite_names())
                        all = twocrit::verify::run_suite(s, std::cout) && all;
                } else {
                    all = twocrit::verify::run_suite(name, std::cout) && all;
                }
            }
            std::cout << (all ? "verify: all checks passed"
                              : "verify: FAILURES present")
                      << "\n";
            return all ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
