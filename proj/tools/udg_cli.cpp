// udg: generate, color, and check unit-disk graph instances.
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udgc/coloring.hpp"
#include "udgc/fourier.hpp"
#include "udgc/io.hpp"
#include "udgc/lpbounds.hpp"
#include "udgc/udg.hpp"

namespace {

struct CheckLine {
    bool ok;
    std::string what;
};

int64_t omega_from_flag(const std::string& flag, const udgc::UnitDiskGraph& g) {
    if (flag == "auto") return udgc::clique_number(g);
    const int64_t w = std::stoll(flag);
    if (w < 1) throw std::runtime_error("--omega must be 'auto' or a positive integer");
    return w;
}

int distinct_colors(const udgc::Coloring& c) {
    std::vector<int> seen;
    for (const auto& [id, col] : c.color) seen.push_back(col);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

// structural invariants of the graph itself (degree / clique bounds)
std::vector<CheckLine> structural_checks(const udgc::UnitDiskGraph& g) {
    std::vector<CheckLine> out;
    const int64_t omega = udgc::clique_number(g);
    const int64_t omega_d = udgc::disk_clique_number(g);
    out.push_back({omega_d <= omega, "omega_D <= omega"});

    const udgc::SlackReport reuleaux = udgc::check_reuleaux_inequality(g, omega);
    out.push_back({reuleaux.ok, "neighborhood weight sum <= 6*omega"});
    for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const udgc::SlackReport cor = udgc::check_cor_radius(g, omega, r);
        std::ostringstream os;
        os << "radius degree bound at r=" << r;
        out.push_back({cor.ok, os.str()});
    }

    int64_t delta = 0;
    for (int v = 0; v < g.n(); ++v) delta = std::max(delta, g.weighted_degree(v));
    out.push_back({g.n() == 0 || delta <= 6 * omega - 6, "max degree <= 6*omega - 6"});
    out.push_back({udgc::average_degree(g) <= 5.68 * static_cast<double>(omega) + 1e-9,
                   "average degree <= 5.68*omega"});

    bool pair_ok = true;
    for (int v = 0; v < g.n() && pair_ok; ++v) {
        for (size_t k = 0; k < g.adj[v].size() && pair_ok; ++k) {
            const int u = g.adj[v][k];
            const double d = g.adj_dist[v][k];
            if (u > v && d >= 0.5 && d <= 1.0) {
                pair_ok = g.weighted_degree(v) + g.weighted_degree(u) <=
                          2.0 * 5.675 * static_cast<double>(omega) + 1e-9;
            }
        }
    }
    out.push_back({pair_ok, "adjacent degree pairs <= 2*5.675*omega (lengths in [1/2,1])"});
    return out;
}

int cmd_gen(const std::string& out, int n, double width, double height,
            double strip_len, double grid_step, uint64_t seed) {
    udgc::WeightedPointSet ps;
    if (grid_step > 0.0) {
        ps = udgc::gen_grid(grid_step, width, height);
    } else if (strip_len > 0.0) {
        ps = udgc::gen_strip(n, strip_len, seed);
    } else {
        ps = udgc::gen_uniform_box(n, width, height, seed);
    }
    udgc::save_points(ps, out);
    std::printf("wrote %s (%zu points)\n", out.c_str(), ps.points.size());
    return 0;
}

int cmd_color(const std::string& in, const std::string& out, const std::string& algo,
              const std::string& omega_flag, uint64_t seed, int64_t r, double eps,
              bool simulate) {
    const udgc::WeightedPointSet ps = udgc::load_points(in);
    const udgc::UnitDiskGraph g = udgc::build_graph(ps);
    const int64_t omega = omega_from_flag(omega_flag, g);

    if (algo == "fractional") {
        const udgc::FractionalResult res = udgc::color_fractional(
            g, omega, r, eps,
            simulate ? udgc::FractionalMode::kSimulate : udgc::FractionalMode::kCentral,
            seed);
        if (!res.feasible) {
            std::fprintf(stderr, "infeasible: no region system covers some vertex (q = 0)\n");
            return 1;
        }
        if (!res.stabilized) {
            std::fprintf(stderr, "simulation did not stabilize within the round cap\n");
            return 1;
        }
        const udgc::ValidationReport rep = udgc::validate(g, res.coloring);
        if (!rep.ok) {
            std::fprintf(stderr, "invalid fractional coloring: %s\n", rep.violation.c_str());
            return 1;
        }
        if (out.empty()) {
            std::printf("%" PRId64 " %" PRId64 "\n", res.coloring.p, res.coloring.q);
        } else {
            udgc::save_fractional(res.coloring, out);
            std::printf("wrote %s (p=%" PRId64 ", q=%" PRId64 ")\n", out.c_str(),
                        res.coloring.p, res.coloring.q);
        }
        return 0;
    }

    udgc::Coloring coloring;
    int rounds = 0;
    std::string failure;
    if (algo == "4omega") {
        udgc::SimulatedColoring res = udgc::color_4omega(g, omega, seed);
        coloring = std::move(res.coloring);
        rounds = res.trace.rounds_executed;
        if (res.failed) failure = res.failure;
    } else if (algo == "568") {
        udgc::Sim568Result res = udgc::color_568(g, omega, seed);
        coloring = std::move(res.coloring);
        rounds = res.trace.rounds_executed;
        if (res.failed) failure = res.failure;
    } else {  // baseline
        udgc::SimulatedColoring res = udgc::color_greedy_baseline(g, seed);
        coloring = std::move(res.coloring);
        rounds = res.trace.rounds_executed;
        if (res.failed) failure = res.failure;
    }
    if (!failure.empty()) {
        std::fprintf(stderr, "coloring failed: %s\n", failure.c_str());
        return 1;
    }
    const udgc::ValidationReport rep = udgc::validate(g, coloring);
    if (!rep.ok) {
        std::fprintf(stderr, "invalid coloring: %s\n", rep.violation.c_str());
        return 1;
    }
    if (out.empty()) {
        udgc::save_coloring(coloring, "/dev/stdout");
    } else {
        udgc::save_coloring(coloring, out);
        std::printf("wrote %s (colors=%d, palette=%d, rounds=%d)\n", out.c_str(),
                    distinct_colors(coloring), coloring.palette_size, rounds);
    }
    return 0;
}

int cmd_check(const std::string& in, const std::string& coloring_path) {
    const udgc::WeightedPointSet ps = udgc::load_points(in);
    const udgc::UnitDiskGraph g = udgc::build_graph(ps);
    bool all_ok = true;
    std::string first_violation;

    for (const CheckLine& line : structural_checks(g)) {
        std::printf("%s %s\n", line.ok ? "ok  " : "FAIL", line.what.c_str());
        if (!line.ok && first_violation.empty()) first_violation = line.what;
        all_ok &= line.ok;
    }

    if (!coloring_path.empty()) {
        udgc::ValidationReport rep;
        if (udgc::looks_fractional(coloring_path)) {
            rep = udgc::validate(g, udgc::load_fractional(coloring_path));
        } else {
            rep = udgc::validate(g, udgc::load_coloring(coloring_path));
        }
        std::printf("%s coloring %s\n", rep.ok ? "ok  " : "FAIL", coloring_path.c_str());
        if (!rep.ok) {
            all_ok = false;
            if (first_violation.empty()) first_violation = rep.violation;
        }
    }
    if (!all_ok) {
        std::fprintf(stderr, "first violation: %s\n", first_violation.c_str());
        return 1;
    }
    return 0;
}

int cmd_omega(const std::string& in) {
    const udgc::WeightedPointSet ps = udgc::load_points(in);
    const udgc::UnitDiskGraph g = udgc::build_graph(ps);
    std::printf("omega %" PRId64 "\n", udgc::clique_number(g));
    std::printf("omega_D %" PRId64 "\n", udgc::disk_clique_number(g));
    return 0;
}

int cmd_lp_curves(const std::string& prefix) {
    udgc::emit_curves(prefix);
    const udgc::PairwiseBound pw = udgc::pairwise_degree_bound();
    std::printf("wrote %slp4.dat %slp5.dat\n", prefix.c_str(), prefix.c_str());
    std::printf("max min(f4,f5) = %.4f at delta %.3f\n", pw.value, pw.argmax_delta);
    return 0;
}

int cmd_fourier(int k_periods, int grid, double weight, bool uniform) {
    udgc::FourierConfig cfg;
    cfg.k_periods = k_periods;
    cfg.grid_resolution = grid;
    cfg.weight_scale = weight;
    cfg.uniform = uniform;
    const udgc::FourierReport rep = udgc::measure_ratio(cfg);
    std::printf("B %.15g\n", rep.b);
    std::printf("J1(2B)/B %.10f\n", udgc::bessel_j1(2.0 * rep.b) / rep.b);
    std::printf("sup_conv_half %.6f\n", rep.sup_conv_half);
    std::printf("avg_degree %.4f\n", rep.avg_degree);
    std::printf("omega_D %" PRId64 "\n", rep.omega_d);
    std::printf("ratio %.6f\n", rep.ratio);
    std::printf("total_weight %" PRId64 "\n", rep.total_weight);
    return 0;
}

int cmd_bench(const std::string& algo, int count, int n, double box, uint64_t seed) {
    std::printf("%-8s %6s %6s %7s %6s %6s\n", "instance", "n", "omega", "colors",
                "bound", "rounds");
    for (int i = 0; i < count; ++i) {
        const udgc::WeightedPointSet ps = udgc::gen_uniform_box(n, box, box, seed + i);
        const udgc::UnitDiskGraph g = udgc::build_graph(ps);
        const int64_t omega = udgc::clique_number(g);
        udgc::Coloring coloring;
        int rounds = 0;
        int64_t bound = 0;
        if (algo == "4omega") {
            udgc::SimulatedColoring res = udgc::color_4omega(g, omega, seed + i);
            if (res.failed) throw std::runtime_error(res.failure);
            coloring = std::move(res.coloring);
            rounds = res.trace.rounds_executed;
            bound = 4 * omega;
        } else if (algo == "568") {
            udgc::Sim568Result res = udgc::color_568(g, omega, seed + i);
            if (res.failed) throw std::runtime_error(res.failure);
            coloring = std::move(res.coloring);
            rounds = res.trace.rounds_executed;
            bound = (568 * omega + 99) / 100;
        } else {
            udgc::SimulatedColoring res = udgc::color_greedy_baseline(g, seed + i);
            if (res.failed) throw std::runtime_error(res.failure);
            coloring = std::move(res.coloring);
            rounds = res.trace.rounds_executed;
            bound = coloring.palette_size;
        }
        if (!udgc::validate(g, coloring).ok) throw std::runtime_error("invalid coloring");
        std::printf("%-8d %6d %6" PRId64 " %7d %6" PRId64 " %6d\n", i, g.n(), omega,
                    distinct_colors(coloring), bound, rounds);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-disk graph construction, coloring, and bound checking"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point file");
    std::string gen_out;
    int gen_n = 100;
    double gen_w = 10.0, gen_h = 10.0, gen_strip = 0.0, gen_grid = 0.0;
    uint64_t gen_seed = 0;
    gen->add_option("--out", gen_out, "output point file")->required();
    gen->add_option("--n", gen_n, "number of points (box / strip families)");
    gen->add_option("--width", gen_w, "box width");
    gen->add_option("--height", gen_h, "box height");
    gen->add_option("--strip", gen_strip, "strip length: uniform strip instance");
    gen->add_option("--grid", gen_grid, "grid step: full grid over the box");
    gen->add_option("--seed", gen_seed, "random seed");

    // color
    auto* color = app.add_subcommand("color", "run a coloring algorithm");
    std::string color_in, color_out, color_algo, color_omega = "auto";
    uint64_t color_seed = 0;
    int64_t color_r = 20000;
    double color_eps = 1e-4;
    bool color_sim = false;
    color->add_option("input", color_in, "point file")->required();
    color->add_option("--algo", color_algo, "algorithm")
        ->required()
        ->check(CLI::IsMember({"4omega", "fractional", "568", "baseline"}));
    color->add_option("--omega", color_omega, "'auto' or an explicit clique number");
    color->add_option("--seed", color_seed, "random seed");
    color->add_option("--r", color_r, "fractional: number of region systems");
    color->add_option("--eps", color_eps, "fractional: rectangle aspect 1/eps");
    color->add_flag("--simulate", color_sim, "fractional: run in the simulator");
    color->add_option("--out", color_out, "output coloring file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "validate a coloring + structural bounds");
    std::string check_in, check_coloring;
    check->add_option("input", check_in, "point file")->required();
    check->add_option("--coloring", check_coloring, "coloring file to validate");

    // omega
    auto* omega = app.add_subcommand("omega", "print exact omega and omega_D");
    std::string omega_in;
    omega->add_option("input", omega_in, "point file")->required();

    // lp-curves
    auto* lp = app.add_subcommand("lp-curves", "emit lp4.dat / lp5.dat");
    std::string lp_out;
    lp->add_option("--out", lp_out, "output path prefix");

    // fourier
    auto* fourier = app.add_subcommand("fourier", "sinusoidal construction report");
    int f_k = 16, f_grid = 512;
    double f_weight = 50.0;
    bool f_uniform = false;
    fourier->add_option("--k-periods", f_k, "periods in the box side");
    fourier->add_option("--grid", f_grid, "grid resolution M");
    fourier->add_option("--weight", f_weight, "weight scale");
    fourier->add_flag("--uniform", f_uniform, "zero the sinusoid (control)");

    // bench
    auto* bench = app.add_subcommand("bench", "batch seeds, summary table");
    std::string bench_algo = "4omega";
    int bench_count = 5, bench_n = 500;
    double bench_box = 30.0;
    uint64_t bench_seed = 0;
    bench->add_option("--algo", bench_algo, "algorithm")
        ->check(CLI::IsMember({"4omega", "568", "baseline"}));
    bench->add_option("--count", bench_count, "instances");
    bench->add_option("--n", bench_n, "points per instance");
    bench->add_option("--box", bench_box, "square box side");
    bench->add_option("--seed", bench_seed, "random seed (required: tables must be reproducible)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(gen_out, gen_n, gen_w, gen_h, gen_strip, gen_grid, gen_seed);
        }
        if (color->parsed()) {
            return cmd_color(color_in, color_out, color_algo, color_omega, color_seed,
                             color_r, color_eps, color_sim);
        }
        if (check->parsed()) return cmd_check(check_in, check_coloring);
        if (omega->parsed()) return cmd_omega(omega_in);
        if (lp->parsed()) return cmd_lp_curves(lp_out);
        if (fourier->parsed()) return cmd_fourier(f_k, f_grid, f_weight, f_uniform);
        if (bench->parsed()) return cmd_bench(bench_algo, bench_count, bench_n,
                                              bench_box, bench_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
