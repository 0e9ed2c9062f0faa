#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ph0/barcode.hpp"
#include "ph0/bench.hpp"
#include "ph0/boundary_matrix.hpp"
#include "ph0/format.hpp"
#include "ph0/oracle.hpp"
#include "ph0/parmodel.hpp"
#include "ph0/point_cloud.hpp"
#include "ph0/reduction.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

ph0::PointCloud load_cloud(const std::string& in_path, std::uint64_t n, bool n_given,
                           std::size_t dim, std::uint64_t seed) {
    if (!in_path.empty()) return ph0::read_points_file(in_path);
    if (!n_given)
        throw std::runtime_error("either --in or --n is required");
    return ph0::generate_uniform_cloud(n, dim, seed);
}

struct BarcodeArgs {
    std::string in_path;
    std::uint64_t n = 0;
    bool n_given = false;
    std::size_t dim = 2;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string pivot = "on";
    bool show_essential = false;
    std::string out_path = "-";
};

void add_cloud_options(CLI::App* cmd, BarcodeArgs& args) {
    cmd->add_option("--in", args.in_path, "point file (one point per line)");
    cmd->add_option("--n", args.n, "generate n uniform points instead of reading a file")
        ->each([&args](const std::string&) { args.n_given = true; });
    cmd->add_option("--dim", args.dim, "dimension of generated points")->default_val(2);
    cmd->add_option("--seed", args.seed, "seed for generated points")->default_val(1);
}

int run_compute(const BarcodeArgs& args) {
    const ph0::PointCloud cloud = load_cloud(args.in_path, args.n, args.n_given, args.dim, args.seed);
    const ph0::Filtration filtration = ph0::build_filtration(ph0::pairwise_distances(cloud));
    ph0::BoundaryMatrix m =
        ph0::build_boundary_matrix(filtration, static_cast<std::size_t>(cloud.size()));
    ph0::ReductionOptions opts{args.pivot == "on", args.workers};
    if (args.workers > 1)
        ph0::reduce_parallel(m, opts);
    else
        ph0::reduce(m, opts);
    const ph0::Barcode barcode = ph0::extract_barcode(m, filtration);
    write_output(args.out_path, ph0::format_barcode(barcode, args.show_essential));
    return 0;
}

int run_oracle(const BarcodeArgs& args) {
    const ph0::PointCloud cloud = load_cloud(args.in_path, args.n, args.n_given, args.dim, args.seed);
    const ph0::Filtration filtration = ph0::build_filtration(ph0::pairwise_distances(cloud));
    const ph0::Barcode barcode =
        ph0::kruskal_barcode(filtration, static_cast<std::size_t>(cloud.size()));
    write_output(args.out_path, ph0::format_barcode(barcode, args.show_essential));
    return 0;
}

std::string format_model_csv(const std::vector<std::uint64_t>& n_values, std::uint64_t width) {
    std::string csv = "n,width,regime,distance,sort,build,reduce,extract,total\n";
    for (const std::uint64_t n : n_values) {
        const ph0::MachineProfile profile{width};
        const ph0::StepCount sc = ph0::predict_steps(n, profile);
        csv += std::to_string(n);
        csv += ',';
        csv += std::to_string(width);
        csv += ',';
        csv += ph0::to_string(ph0::classify_regime(n, profile));
        csv += ',';
        csv += std::to_string(sc.distance_steps);
        csv += ',';
        csv += std::to_string(sc.sort_steps);
        csv += ',';
        csv += std::to_string(sc.build_steps);
        csv += ',';
        csv += std::to_string(sc.reduce_steps);
        csv += ',';
        csv += std::to_string(sc.extract_steps);
        csv += ',';
        csv += std::to_string(sc.total);
        csv += '\n';
    }
    return csv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"0th persistent homology barcodes with a parallel-width cost model"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "write a seeded uniform point cloud");
    std::uint64_t gen_n = 0;
    std::size_t gen_dim = 2;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    generate->add_option("--n", gen_n, "number of points")->required();
    generate->add_option("--dim", gen_dim, "dimension")->default_val(2);
    generate->add_option("--seed", gen_seed, "seed")->default_val(1);
    generate->add_option("--out", gen_out, "output file, '-' for stdout")->default_val("-");

    // compute
    BarcodeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "compute the barcode via matrix reduction");
    add_cloud_options(compute, compute_args);
    compute->add_option("--workers", compute_args.workers, "worker lanes for the reduction")
        ->default_val(1);
    compute->add_option("--pivot", compute_args.pivot, "claimed-low map on|off")
        ->default_val("on")
        ->check(CLI::IsMember({"on", "off"}));
    compute->add_flag("--show-essential", compute_args.show_essential,
                      "also print the essential bar(s) as 0,inf,-");
    compute->add_option("--out", compute_args.out_path, "output file, '-' for stdout")
        ->default_val("-");

    // oracle
    BarcodeArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "compute the barcode via union-find (Kruskal)");
    add_cloud_options(oracle, oracle_args);
    oracle->add_flag("--show-essential", oracle_args.show_essential,
                     "also print the essential bar(s) as 0,inf,-");
    oracle->add_option("--out", oracle_args.out_path, "output file, '-' for stdout")
        ->default_val("-");

    // bench
    auto* bench = app.add_subcommand("bench", "seeded benchmark sweeps with CSV/SVG output");
    std::vector<std::uint64_t> bench_n;
    std::vector<unsigned> bench_workers{1};
    unsigned bench_reps = 10;
    std::string bench_mode = "seq";
    std::uint64_t bench_width = 1000;
    std::uint64_t bench_seed = 1;
    std::size_t bench_dim = 2;
    std::string bench_pivot = "on";
    std::string bench_csv, bench_svg;
    bool bench_no_warmup = false;
    bench->add_option("--n-list", bench_n, "ascending point counts")->required()->delimiter(',');
    bench->add_option("--workers-list", bench_workers, "worker lane counts")->delimiter(',');
    bench->add_option("--reps", bench_reps, "timed repetitions per configuration")->default_val(10);
    bench->add_option("--mode", bench_mode, "seq, par, or model")
        ->default_val("seq")
        ->check(CLI::IsMember({"seq", "par", "model"}));
    bench->add_option("--width", bench_width, "model machine width P")->default_val(1000);
    bench->add_option("--seed", bench_seed, "base seed")->default_val(1);
    bench->add_option("--dim", bench_dim, "dimension of generated points")->default_val(2);
    bench->add_option("--pivot", bench_pivot, "claimed-low map on|off")
        ->default_val("on")
        ->check(CLI::IsMember({"on", "off"}));
    bench->add_option("--csv", bench_csv, "write records as CSV");
    bench->add_option("--svg", bench_svg, "write a log-log chart as SVG");
    bench->add_flag("--no-warmup", bench_no_warmup, "skip the untimed warm-up run per n");

    // model
    auto* model = app.add_subcommand("model", "closed-form step model: predict and classify");
    std::vector<std::uint64_t> model_n;
    std::uint64_t model_width = 1000;
    std::string model_csv;
    model->add_option("--n-list", model_n, "point counts")->required()->delimiter(',');
    model->add_option("--width", model_width, "machine width P")->default_val(1000);
    model->add_option("--csv", model_csv, "write the sweep as CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            const ph0::PointCloud cloud = ph0::generate_uniform_cloud(gen_n, gen_dim, gen_seed);
            std::ostringstream os;
            ph0::write_points(os, cloud);
            write_output(gen_out, os.str());
            return 0;
        }
        if (compute->parsed()) return run_compute(compute_args);
        if (oracle->parsed()) return run_oracle(oracle_args);

        if (bench->parsed()) {
            std::vector<ph0::BenchRecord> records;
            const ph0::BenchMode mode = ph0::bench_mode_from_string(bench_mode);
            for (const unsigned workers : bench_workers) {
                ph0::SweepOptions opts;
                opts.n_values = bench_n;
                opts.workers = workers;
                opts.reps = bench_reps;
                opts.mode = mode;
                opts.seed = bench_seed;
                opts.dim = bench_dim;
                opts.width = bench_width;
                opts.pivoting = bench_pivot == "on";
                opts.warmup = !bench_no_warmup;
                const auto sweep = ph0::run_sweep(opts);
                records.insert(records.end(), sweep.begin(), sweep.end());
                if (mode == ph0::BenchMode::Model) break;   // workers do not enter the model
            }
            if (!bench_csv.empty()) write_output(bench_csv, ph0::emit_csv(records));

            const auto means = ph0::aggregate_means(records);
            std::vector<ph0::SeriesFit> fits;
            for (const unsigned workers : bench_workers) {
                std::vector<std::pair<double, double>> pts;
                for (const auto& p : means)
                    if (p.workers == workers && p.mode == mode && p.mean > 0.0)
                        pts.push_back({static_cast<double>(p.n), p.mean});
                if (pts.size() >= 2) {
                    try {
                        fits.push_back({mode, workers, ph0::fit_exponent(pts)});
                        std::cout << "fit mode=" << bench_mode << " workers=" << workers
                                  << ": slope=" << ph0::format_double(fits.back().fit.slope)
                                  << " r2=" << ph0::format_double(fits.back().fit.r_squared)
                                  << '\n';
                    } catch (const std::domain_error&) {
                        // not enough usable points for this series
                    }
                }
                if (mode == ph0::BenchMode::Model) break;
            }
            if (mode != ph0::BenchMode::Model && bench_workers.size() > 1) {
                const unsigned base = bench_workers.front();
                for (const std::uint64_t n : bench_n) {
                    const auto mean_of = [&](unsigned workers) -> double {
                        for (const auto& p : means)
                            if (p.n == n && p.workers == workers && p.mode == mode) return p.mean;
                        return 0.0;
                    };
                    const double base_mean = mean_of(base);
                    for (std::size_t i = 1; i < bench_workers.size(); ++i) {
                        const double variant = mean_of(bench_workers[i]);
                        if (base_mean > 0.0 && variant > 0.0)
                            std::cout << "speedup n=" << n << " workers " << base << "->"
                                      << bench_workers[i] << ": "
                                      << ph0::format_double(ph0::speedup(base_mean, variant))
                                      << '\n';
                    }
                }
            }
            if (!bench_svg.empty()) write_output(bench_svg, ph0::emit_plot(records, fits));
            return 0;
        }

        if (model->parsed()) {
            const ph0::MachineProfile profile{model_width};
            const auto thresholds = ph0::regime_thresholds(profile);
            std::cout << "width " << model_width << ": row-parallel ceiling n_row="
                      << thresholds.n_row << ", column-parallel ceiling n_col=" << thresholds.n_col
                      << '\n';
            for (const std::uint64_t n : model_n) {
                const auto sc = ph0::predict_steps(n, profile);
                std::cout << "n=" << n << " regime=" << ph0::to_string(ph0::classify_regime(n, profile))
                          << " total=" << sc.total << " (distance=" << sc.distance_steps
                          << " sort=" << sc.sort_steps << " build=" << sc.build_steps
                          << " reduce=" << sc.reduce_steps << " extract=" << sc.extract_steps
                          << ")\n";
            }
            if (!model_csv.empty()) write_output(model_csv, format_model_csv(model_n, model_width));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
