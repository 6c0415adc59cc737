#include "sompkit/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>

#include "sompkit/bounds.hpp"
#include "sompkit/config_file.hpp"
#include "sompkit/harness.hpp"
#include "sompkit/tracy_widom.hpp"

namespace sompkit {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_report(const dictionary::MeasurementMatrix& matrix) {
  const auto& report = matrix.coherence;
  std::cout << "matrix: " << matrix.rows() << " x " << matrix.cols() << "  ("
            << matrix.provenance << ")\n";
  std::cout << "mu = " << fmt(report.mu) << "\n";
  std::cout << "welch_lower_bound = " << fmt(report.welch_lower_bound) << "\n";
  std::cout << "argmax_pair = (" << report.argmax_pair.first << ", "
            << report.argmax_pair.second << ")\n";
  std::cout << "gram_offdiag_max_abs = " << fmt(report.gram_offdiag_max_abs) << "\n";
}

struct BoundsInputs {
  int sparsity = 0;
  double mu = 0.0;
  int m = 0;
  int n = 0;
  int d = 1;
  std::optional<double> c_min;
  std::optional<double> sigma;
  std::optional<double> epsilon;
  double delta = 1e-3;
  std::optional<double> c_m;
};

struct BoundsRow {
  std::string name;
  std::string value;
  std::string note;
};

template <typename Fn>
void add_row(std::vector<BoundsRow>* rows, const std::string& name, Fn&& fn,
             const std::string& note = "") {
  try {
    rows->push_back({name, fmt(fn()), note});
  } catch (const error& e) {
    rows->push_back({name, "infeasible", e.what()});
  }
}

int run_bounds(const std::string& config_path, const std::string& csv_path) {
  configfile::Config file = configfile::Config::parse_file(config_path);
  BoundsInputs in;
  in.sparsity = static_cast<int>(file.get_int("inputs", "sparsity"));
  in.mu = file.get_double("inputs", "mu");
  in.m = static_cast<int>(file.get_int("inputs", "m"));
  in.n = static_cast<int>(file.get_int("inputs", "n"));
  in.d = static_cast<int>(file.get_int("inputs", "vectors", 1));
  if (file.has("inputs", "c_min")) in.c_min = file.get_double("inputs", "c_min");
  if (file.has("inputs", "sigma")) in.sigma = file.get_double("inputs", "sigma");
  if (file.has("inputs", "epsilon")) in.epsilon = file.get_double("inputs", "epsilon");
  in.delta = file.get_double("inputs", "delta", 1e-3);
  if (file.has("inputs", "c_m")) in.c_m = file.get_double("inputs", "c_m");
  file.finish();

  std::vector<BoundsRow> rows;
  add_row(&rows, "welch_bound", [&] { return coherence::welch_bound(in.m, in.n); });
  add_row(&rows, "noiseless_mu_limit",
          [&] { return 1.0 / (2.0 * in.sparsity - 1.0); });
  add_row(&rows, "erc_upper_bound",
          [&] { return coherence::erc_upper_bound(in.mu, in.sparsity); });
  add_row(&rows, "gram_min_eig_lower_bound",
          [&] { return coherence::gram_min_eig_lower_bound(in.mu, in.sparsity); });

  if (in.epsilon) {
    add_row(&rows, "cmin_threshold_bounded",
            [&] { return bounds::cmin_threshold_bounded(*in.epsilon, in.sparsity, in.mu); });
    add_row(&rows, "cmin_threshold_frobenius",
            [&] { return bounds::cmin_threshold_frobenius(*in.epsilon, in.sparsity, in.mu); },
            "treats epsilon as the Frobenius norm for comparison");
    add_row(&rows, "sompt_tau_bounded", [&] { return *in.epsilon; });
    if (in.c_min) {
      add_row(&rows, "epsilon_threshold_bounded", [&] {
        return bounds::epsilon_threshold_bounded(*in.c_min, in.sparsity, in.mu);
      });
      add_row(&rows, "mu_threshold_bounded",
              [&] { return bounds::mu_threshold_bounded(*in.c_min, *in.epsilon, in.sparsity); });
      add_row(&rows, "min_measurements_bounded", [&] {
        return static_cast<double>(
            bounds::min_measurements_bounded(in.n, in.sparsity, *in.c_min, *in.epsilon));
      });
    }
  }

  if (in.sigma) {
    add_row(&rows, "tw_spectral_quantile", [&] {
      return tracy_widom::spectral_norm_quantile(1.0 - in.delta, {in.m, in.d, *in.sigma});
    });
    add_row(&rows, "chernoff_spectral_quantile", [&] {
      return tracy_widom::chernoff_spectral_quantile(in.delta, in.m, in.d, *in.sigma);
    });
    add_row(&rows, "cmin_threshold_gaussian", [&] {
      return bounds::cmin_threshold_gaussian(in.delta, *in.sigma, in.m, in.d, in.sparsity,
                                             in.mu);
    });
    add_row(&rows, "sompt_tau_tw", [&] {
      return bounds::sompt_threshold(
          dictionary::NoiseSpec::gaussian(*in.sigma, in.m, in.d), in.delta,
          bounds::TauVariant::tw_quantile);
    });
    add_row(&rows, "sompt_tau_chernoff", [&] {
      return bounds::sompt_threshold(
          dictionary::NoiseSpec::gaussian(*in.sigma, in.m, in.d), in.delta,
          bounds::TauVariant::chernoff_quantile);
    });
    if (in.c_min) {
      add_row(&rows, "sigma_threshold_gaussian", [&] {
        return bounds::sigma_threshold_gaussian(in.delta, *in.c_min, in.m, in.d,
                                                in.sparsity, in.mu);
      });
      add_row(&rows, "srp_lower_bound_gaussian", [&] {
        return bounds::srp_lower_bound_gaussian(*in.c_min, in.sparsity, in.mu, *in.sigma,
                                                in.m, in.d)
            .value;
      }, "asymptotic; second-order error O(d^(-2/3))");
      add_row(&rows, "mu_threshold_gaussian_chernoff", [&] {
        return bounds::mu_threshold_gaussian_chernoff(
            *in.c_min, *in.sigma, in.m, in.d, bounds::t_from_delta(in.delta), in.sparsity);
      });
    }
    if (in.c_m) {
      add_row(&rows, "d_threshold_chernoff", [&] {
        return bounds::d_threshold_chernoff(*in.c_m, *in.sigma, in.m, in.sparsity, in.mu,
                                            bounds::t_from_delta(in.delta))
            .exact;
      });
      add_row(&rows, "d_threshold_chernoff_small_sigma", [&] {
        return bounds::d_threshold_chernoff(*in.c_m, *in.sigma, in.m, in.sparsity, in.mu,
                                            bounds::t_from_delta(in.delta))
            .small_sigma_approx;
      });
    }
  }

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  for (const auto& row : rows) {
    std::cout << row.name << std::string(width - row.name.size() + 2, ' ') << row.value;
    if (!row.note.empty()) std::cout << "   (" << row.note << ")";
    std::cout << "\n";
  }

  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw io_error("cannot open " + csv_path);
    out << "name,value,note\n";
    for (const auto& row : rows) {
      out << row.name << "," << row.value << ",\"" << row.note << "\"\n";
    }
    if (!out) throw io_error("write failed for " + csv_path);
  }
  return 0;
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"sparse-recovery toolkit: simultaneous pursuit, coherence design,\n"
               "recovery-guarantee calculators, and a Monte-Carlo figure harness"};
  app.require_subcommand(1);

  // --- coherence ---
  auto* coherence_cmd =
      app.add_subcommand("coherence", "print the coherence report of a matrix");
  std::string coherence_file;
  std::vector<int> coherence_design;
  std::uint64_t coherence_seed = 0;
  int coherence_iters = 300;
  double coherence_gamma = 0.95;
  double coherence_quantile = 0.80;
  coherence_cmd->add_option("matrix-file", coherence_file, "matrix file to analyze");
  coherence_cmd
      ->add_option("--design", coherence_design, "design an M N matrix instead of loading")
      ->expected(2);
  coherence_cmd->add_option("--seed", coherence_seed, "design seed");
  coherence_cmd->add_option("--iters", coherence_iters, "design iterations");
  coherence_cmd->add_option("--gamma", coherence_gamma, "design shrink factor");
  coherence_cmd->add_option("--quantile", coherence_quantile, "design shrink quantile");

  // --- design ---
  auto* design_cmd =
      app.add_subcommand("design", "design a low-coherence matrix and save it");
  int design_m = 0, design_n = 0;
  std::uint64_t design_seed = 0;
  int design_iters = 300;
  double design_gamma = 0.95;
  double design_quantile = 0.80;
  std::string design_out = "designed_matrix.txt";
  design_cmd->add_option("M", design_m, "measurement count")->required();
  design_cmd->add_option("N", design_n, "atom count")->required();
  design_cmd->add_option("--iters", design_iters, "design iterations");
  design_cmd->add_option("--gamma", design_gamma, "shrink factor");
  design_cmd->add_option("--quantile", design_quantile, "shrink quantile");
  design_cmd->add_option("--seed", design_seed, "seed");
  design_cmd->add_option("--out", design_out, "output matrix file");

  // --- bounds ---
  auto* bounds_cmd =
      app.add_subcommand("bounds", "print every applicable threshold and SRP bound");
  std::string bounds_config;
  std::string bounds_csv;
  bounds_cmd->add_option("--config", bounds_config, "parameter file with an [inputs] section")
      ->required();
  bounds_cmd->add_option("--csv", bounds_csv, "also write the table as CSV");

  // --- run ---
  auto* run_cmd = app.add_subcommand("run", "run an experiment and write CSV + SVG");
  std::string run_config;
  std::string run_figure;
  long run_trials = 0;
  std::uint64_t run_seed = 0;
  bool run_seed_set = false;
  std::string run_out;
  int run_threads = 0;
  bool run_print_config = false;
  run_cmd->add_option("--config", run_config, "experiment config file");
  run_cmd->add_option("--figure", run_figure, "figure preset name (fig1..fig16)");
  run_cmd->add_option("--trials", run_trials, "override trials per grid point");
  run_cmd->add_option("--seed", run_seed, "override the base seed")
      ->each([&](const std::string&) { run_seed_set = true; });
  run_cmd->add_option("--out", run_out, "output directory");
  run_cmd->add_option("--threads", run_threads, "worker threads (0 = all cores)");
  run_cmd->add_flag("--print-config", run_print_config,
                    "echo the fully-resolved config and exit");

  // --- tw-table ---
  auto* table_cmd =
      app.add_subcommand("tw-table", "dump the embedded Tracy-Widom CDF grid as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (coherence_cmd->parsed()) {
    if (!coherence_design.empty()) {
      dictionary::DesignParams params;
      params.iters = coherence_iters;
      params.shrink = coherence_gamma;
      params.shrink_quantile = coherence_quantile;
      print_report(dictionary::design_low_coherence(coherence_design[0], coherence_design[1],
                                                    params, coherence_seed));
    } else if (!coherence_file.empty()) {
      print_report(dictionary::measurement_matrix_from_file(coherence_file));
    } else {
      std::cerr << "coherence: give a matrix file or --design M N\n";
      return 1;
    }
    return 0;
  }

  if (design_cmd->parsed()) {
    dictionary::DesignParams params;
    params.iters = design_iters;
    params.shrink = design_gamma;
    params.shrink_quantile = design_quantile;
    const auto start = std::chrono::steady_clock::now();
    const auto matrix =
        dictionary::design_low_coherence(design_m, design_n, params, design_seed);
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start);
    dictionary::save_matrix(design_out, matrix.matrix);
    print_report(matrix);
    std::cout << "wrote " << design_out << " in " << elapsed.count() << " s\n";
    return 0;
  }

  if (bounds_cmd->parsed()) {
    return run_bounds(bounds_config, bounds_csv);
  }

  if (run_cmd->parsed()) {
    if (run_config.empty() == run_figure.empty()) {
      std::cerr << "run: give exactly one of --config or --figure\n";
      return 1;
    }
    harness::ExperimentConfig config = run_figure.empty()
                                           ? harness::config_from_file(run_config)
                                           : harness::figure_preset(run_figure);
    if (run_trials > 0) {
      config.trials = run_trials;
      config.tw_samples = run_trials;
    }
    if (run_seed_set) config.base_seed = run_seed;
    if (!run_out.empty()) config.output_dir = run_out;
    if (run_threads > 0) config.threads = run_threads;
    config.validate();
    if (run_print_config) {
      std::cout << config.canonical_text();
      return 0;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto written = harness::run_and_emit(config);
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start);
    for (const auto& file : written) std::cout << "wrote " << file << "\n";
    std::cout << "done in " << elapsed.count() << " s\n";
    return 0;
  }

  if (table_cmd->parsed()) {
    const auto& table = tracy_widom::table();
    std::cout << "s,f1\n";
    for (int i = 0; i < table.size; ++i) {
      std::cout << fmt(table.s_grid[i]) << "," << fmt(table.f1_values[i]) << "\n";
    }
    return 0;
  }

  return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sompkit
