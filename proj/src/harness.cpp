#include "sompkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "sompkit/numerics.hpp"
#include "sompkit/rng.hpp"
#include "sompkit/somp.hpp"
#include "sompkit/svg.hpp"

namespace sompkit::harness {

namespace {

constexpr double kEdgeTarget = 1.0;  // paper criterion: success in every trial

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void parallel_for(long count, int threads, const std::function<void(long)>& body) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<long>(workers, count));
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      try {
        for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          body(i);
        }
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

const char* matrix_source_name(MatrixSource s) {
  switch (s) {
    case MatrixSource::designed: return "designed";
    case MatrixSource::gaussian: return "gaussian";
    case MatrixSource::file: return "file";
  }
  return "unknown";
}

const char* tau_rule_name(TauRule r) {
  switch (r) {
    case TauRule::bounded_epsilon: return "bounded-epsilon";
    case TauRule::tw_quantile: return "tw-quantile";
    case TauRule::chernoff_quantile: return "chernoff-quantile";
    case TauRule::explicit_value: return "explicit";
  }
  return "unknown";
}

const char* noise_kind_name(dictionary::NoiseSpec::Kind k) {
  return k == dictionary::NoiseSpec::Kind::gaussian ? "gaussian" : "bounded";
}

// Everything needed to run the trials of one grid point.
struct TrialSetup {
  const dictionary::MeasurementMatrix* matrix = nullptr;
  int sparsity = 0;
  int vectors = 0;
  double c_min = 0.0;
  double c_max = 0.0;
  bool dynamic_range = false;
  dictionary::NoiseSpec noise;
  double tau = 0.0;
  bool feasible_dims = true;  // sparsity <= measurements
};

struct PointOutcome {
  long somps_successes = 0;
  long sompt_successes = 0;
  double frobenius_max = 0.0;
};

PointOutcome run_point(const TrialSetup& setup, bool with_somps, bool with_sompt,
                       long trials, std::uint64_t base_seed, std::uint64_t point_index,
                       int threads) {
  PointOutcome outcome;
  if (!setup.feasible_dims) return outcome;  // L > M: exact L-atom recovery impossible

  std::vector<unsigned char> ok_s(static_cast<std::size_t>(trials), 0);
  std::vector<unsigned char> ok_t(static_cast<std::size_t>(trials), 0);
  std::vector<double> frob(static_cast<std::size_t>(trials), 0.0);
  const DenseMatrix& phi = setup.matrix->matrix;
  const int n = static_cast<int>(phi.cols());

  parallel_for(trials, threads, [&](long k) {
    const std::uint64_t trial_seed = derive_seed(base_seed, point_index,
                                                 static_cast<std::uint64_t>(k));
    const std::uint64_t signal_seed = mix64(trial_seed ^ 0x5349474e414cULL);
    const std::uint64_t noise_seed = mix64(trial_seed ^ 0x4e4f495345ULL);
    const dictionary::RowSparseSignal signal =
        setup.dynamic_range
            ? dictionary::gen_signal_dynamic_range(n, setup.sparsity, setup.vectors,
                                                   setup.c_min, setup.c_max, signal_seed)
            : dictionary::gen_signal(n, setup.sparsity, setup.vectors, setup.c_min,
                                     signal_seed);
    const DenseMatrix noise = dictionary::sample_noise(setup.noise, noise_seed);
    const DenseMatrix y = dictionary::synthesize(phi, signal) + noise;
    frob[static_cast<std::size_t>(k)] = noise.norm();
    if (with_somps) {
      ok_s[static_cast<std::size_t>(k)] =
          somp::recovery_success(somp::somps(phi, y, setup.sparsity), signal) ? 1 : 0;
    }
    if (with_sompt) {
      ok_t[static_cast<std::size_t>(k)] =
          somp::recovery_success(somp::sompt(phi, y, setup.tau), signal) ? 1 : 0;
    }
  });

  for (long k = 0; k < trials; ++k) {
    outcome.somps_successes += ok_s[static_cast<std::size_t>(k)];
    outcome.sompt_successes += ok_t[static_cast<std::size_t>(k)];
    outcome.frobenius_max = std::max(outcome.frobenius_max, frob[static_cast<std::size_t>(k)]);
  }
  return outcome;
}

void apply_axis(SweepAxis axis, double value, int* m, int* sparsity, int* vectors,
                double* c_min, double* c_max, double* noise_level, bool dynamic_range) {
  switch (axis) {
    case SweepAxis::epsilon:
    case SweepAxis::sigma:
      *noise_level = value;
      break;
    case SweepAxis::c_min:
      *c_min = value;
      if (!dynamic_range) *c_max = value;
      break;
    case SweepAxis::sparsity:
      *sparsity = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::vectors:
      *vectors = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::measurements:
      *m = static_cast<int>(std::lround(value));
      break;
    case SweepAxis::dynamic_range:
      *c_min = value * *c_max;
      break;
  }
}

double resolve_tau(const ExperimentConfig& config, double noise_level, int m, int d) {
  switch (config.tau_rule) {
    case TauRule::bounded_epsilon:
      return noise_level;
    case TauRule::tw_quantile:
      return tracy_widom::spectral_norm_quantile(1.0 - config.delta, {m, d, noise_level});
    case TauRule::chernoff_quantile:
      return tracy_widom::chernoff_spectral_quantile(config.delta, m, d, noise_level);
    case TauRule::explicit_value:
      return config.tau_explicit;
  }
  throw domain_error("unknown tau rule");
}

TrialSetup resolve_setup(const ExperimentConfig& config, SweepAxis axis1, double v1,
                         std::optional<SweepAxis> axis2, double v2) {
  int m = config.m;
  int sparsity = config.sparsity;
  int vectors = config.vectors;
  double c_min = config.c_min;
  double c_max = config.c_max;
  double noise_level = config.noise_level;
  apply_axis(axis1, v1, &m, &sparsity, &vectors, &c_min, &c_max, &noise_level,
             config.dynamic_range_signal);
  if (axis2) {
    apply_axis(*axis2, v2, &m, &sparsity, &vectors, &c_min, &c_max, &noise_level,
               config.dynamic_range_signal);
  }
  if (config.c_min_is_sqrt_d_cm) {
    c_min = std::sqrt(vectors * config.c_m);
    c_max = c_min;
  }

  TrialSetup setup;
  setup.matrix = &resolve_matrix(config, m);
  setup.sparsity = sparsity;
  setup.vectors = vectors;
  setup.c_min = c_min;
  setup.c_max = config.dynamic_range_signal ? c_max : c_min;
  setup.dynamic_range = config.dynamic_range_signal;
  setup.noise = config.noise_kind == dictionary::NoiseSpec::Kind::gaussian
                    ? dictionary::NoiseSpec::gaussian(noise_level, m, vectors)
                    : dictionary::NoiseSpec::spectral_bounded(noise_level, m, vectors);
  setup.tau = config.run_sompt ? resolve_tau(config, noise_level, m, vectors) : 0.0;
  setup.feasible_dims = sparsity <= m;
  return setup;
}

// --- theory overlays ------------------------------------------------------

template <typename Fn>
std::optional<double> try_bound(Fn&& fn) {
  try {
    return fn();
  } catch (const feasibility_error&) {
    return std::nullopt;
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

std::vector<Overlay> sweep_overlays(const ExperimentConfig& config, double mu,
                                    double frobenius_max) {
  std::vector<Overlay> overlays;
  const bool gaussian = config.noise_kind == dictionary::NoiseSpec::Kind::gaussian;
  auto push = [&](const std::string& method, std::optional<double> v) {
    if (v.has_value()) overlays.push_back({method, *v});
  };
  switch (config.axis) {
    case SweepAxis::epsilon:
      push("epsilon_l2_bound", try_bound([&] {
        return bounds::epsilon_threshold_bounded(config.c_min, config.sparsity, mu);
      }));
      break;
    case SweepAxis::sigma:
      push("sigma_tw_bound", try_bound([&] {
        return bounds::sigma_threshold_gaussian(config.delta, config.c_min, config.m,
                                                config.vectors, config.sparsity, mu);
      }));
      break;
    case SweepAxis::c_min:
      if (gaussian) {
        push("cmin_tw_bound", try_bound([&] {
          return bounds::cmin_threshold_gaussian(config.delta, config.noise_level, config.m,
                                                 config.vectors, config.sparsity, mu);
        }));
      } else {
        push("cmin_l2_bound", try_bound([&] {
          return bounds::cmin_threshold_bounded(config.noise_level, config.sparsity, mu);
        }));
        push("cmin_frobenius_bound", try_bound([&] {
          return bounds::cmin_threshold_frobenius(frobenius_max, config.sparsity, mu);
        }));
      }
      break;
    default:
      break;
  }
  if (overlays.empty()) {
    std::cerr << "note: no theory overlay for " << config.name
              << " (axis without a closed-form threshold, or infeasible mu)\n";
  }
  return overlays;
}

// Theory threshold on axis2 for every axis1 value of a 2-D sweep.
std::vector<SrpGrid::TheoryEdge> grid_theory(const ExperimentConfig& config,
                                             const std::vector<double>& grid1,
                                             const std::vector<double>& grid2) {
  std::vector<SrpGrid::TheoryEdge> edges;
  const SweepAxis a1 = config.axis;
  const SweepAxis a2 = *config.axis2;
  const bool gaussian = config.noise_kind == dictionary::NoiseSpec::Kind::gaussian;

  auto mu_for = [&](int m) { return resolve_matrix(config, m).coherence.mu; };
  const double mu0 =
      a2 == SweepAxis::measurements ? 0.0 : mu_for(config.m);

  auto cmin_at = [&](double v1) {
    if (config.c_min_is_sqrt_d_cm && a1 == SweepAxis::vectors) {
      return std::sqrt(v1 * config.c_m);
    }
    if (a1 == SweepAxis::dynamic_range) return v1 * config.c_max;
    if (a1 == SweepAxis::c_min) return v1;
    return config.c_min;
  };

  if (a2 == SweepAxis::epsilon || a2 == SweepAxis::sigma) {
    SrpGrid::TheoryEdge edge;
    edge.method = a2 == SweepAxis::epsilon ? "epsilon_l2_bound" : "sigma_tw_bound";
    for (double v1 : grid1) {
      const int sparsity =
          a1 == SweepAxis::sparsity ? static_cast<int>(std::lround(v1)) : config.sparsity;
      const int vectors =
          a1 == SweepAxis::vectors ? static_cast<int>(std::lround(v1)) : config.vectors;
      const double c_min = cmin_at(v1);
      edge.values.push_back(try_bound([&] {
        return a2 == SweepAxis::epsilon
                   ? bounds::epsilon_threshold_bounded(c_min, sparsity, mu0)
                   : bounds::sigma_threshold_gaussian(config.delta, c_min, config.m,
                                                      vectors, sparsity, mu0);
      }));
    }
    edges.push_back(std::move(edge));
  } else if (a2 == SweepAxis::c_min) {
    SrpGrid::TheoryEdge tw{gaussian ? "cmin_tw_bound" : "cmin_l2_bound", {}};
    SrpGrid::TheoryEdge chern{"cmin_chernoff_bound", {}};
    const double t = bounds::t_from_delta(config.delta);
    for (double v1 : grid1) {
      const int vectors =
          a1 == SweepAxis::vectors ? static_cast<int>(std::lround(v1)) : config.vectors;
      tw.values.push_back(try_bound([&] {
        return gaussian
                   ? bounds::cmin_threshold_gaussian(config.delta, config.noise_level,
                                                     config.m, vectors, config.sparsity, mu0)
                   : bounds::cmin_threshold_bounded(config.noise_level, config.sparsity, mu0);
      }));
      chern.values.push_back(try_bound([&] {
        if (!gaussian) throw feasibility_error("chernoff bound needs gaussian noise");
        const double margin = 1.0 - (2.0 * config.sparsity - 1.0) * mu0;
        if (!(margin > 0.0)) throw feasibility_error("infeasible mu");
        return 2.0 * (std::sqrt(static_cast<double>(config.m)) + std::sqrt(vectors) + t) *
               config.noise_level / margin;
      }));
    }
    edges.push_back(std::move(tw));
    if (gaussian) edges.push_back(std::move(chern));
  } else if (a2 == SweepAxis::vectors) {
    // minimal d making the guarantee hold at the axis1 noise level
    SrpGrid::TheoryEdge tw{"d_tw_bound", {}};
    SrpGrid::TheoryEdge chern{"d_chernoff_bound", {}};
    const double t = bounds::t_from_delta(config.delta);
    const int d_cap = static_cast<int>(std::lround(grid2.back())) * 4;
    for (double v1 : grid1) {
      const double sigma = a1 == SweepAxis::sigma ? v1 : config.noise_level;
      std::optional<double> found;
      for (int d = 1; d <= d_cap; ++d) {
        const double c_min = std::sqrt(d * config.c_m);
        const auto threshold = try_bound([&] {
          return bounds::sigma_threshold_gaussian(config.delta, c_min, config.m, d,
                                                  config.sparsity, mu0);
        });
        if (threshold.has_value() && *threshold > sigma) {
          found = static_cast<double>(d);
          break;
        }
      }
      tw.values.push_back(found);
      chern.values.push_back(try_bound([&] {
        const auto d_thr = bounds::d_threshold_chernoff(config.c_m, sigma, config.m,
                                                        config.sparsity, mu0, t);
        return std::floor(d_thr.exact) + 1.0;
      }));
    }
    edges.push_back(std::move(tw));
    edges.push_back(std::move(chern));
  } else if (a2 == SweepAxis::measurements) {
    SrpGrid::TheoryEdge tw{gaussian ? "m_tw_bound" : "m_l2_bound", {}};
    for (double v1 : grid1) {
      const int sparsity =
          a1 == SweepAxis::sparsity ? static_cast<int>(std::lround(v1)) : config.sparsity;
      const int vectors =
          a1 == SweepAxis::vectors ? static_cast<int>(std::lround(v1)) : config.vectors;
      const double c_min = cmin_at(v1);
      std::optional<double> found;
      for (double v2 : grid2) {
        const int m = static_cast<int>(std::lround(v2));
        if (sparsity > m) continue;
        const double mu = mu_for(m);
        const auto threshold = try_bound([&]() -> double {
          return gaussian ? bounds::cmin_threshold_gaussian(config.delta, config.noise_level,
                                                            m, vectors, sparsity, mu)
                          : bounds::cmin_threshold_bounded(config.noise_level, sparsity, mu);
        });
        if (threshold.has_value() && *threshold < c_min) {
          found = v2;
          break;
        }
      }
      tw.values.push_back(found);
    }
    edges.push_back(std::move(tw));
  }
  return edges;
}

void check_grid_integral(SweepAxis axis, const std::vector<double>& grid) {
  if (axis == SweepAxis::sparsity || axis == SweepAxis::vectors ||
      axis == SweepAxis::measurements) {
    for (double v : grid) {
      if (std::abs(v - std::lround(v)) > 1e-9 || v < 1.0) {
        throw config_error(std::string(axis_name(axis)) +
                           " grid values must be positive integers");
      }
    }
  } else {
    for (double v : grid) {
      if (!(v > 0.0)) {
        throw config_error(std::string(axis_name(axis)) + " grid values must be positive");
      }
    }
  }
}

std::filesystem::path output_path(const ExperimentConfig& config, const std::string& file) {
  std::filesystem::path dir(config.output_dir);
  if (!dir.empty() && dir != ".") {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io_error("cannot create output directory " + dir.string());
  }
  return dir / file;
}

}  // namespace

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::epsilon: return "epsilon";
    case SweepAxis::sigma: return "sigma";
    case SweepAxis::c_min: return "c_min";
    case SweepAxis::sparsity: return "sparsity";
    case SweepAxis::vectors: return "vectors";
    case SweepAxis::measurements: return "measurements";
    case SweepAxis::dynamic_range: return "dynamic_range";
  }
  return "unknown";
}

SweepAxis axis_from_name(const std::string& name) {
  for (SweepAxis axis :
       {SweepAxis::epsilon, SweepAxis::sigma, SweepAxis::c_min, SweepAxis::sparsity,
        SweepAxis::vectors, SweepAxis::measurements, SweepAxis::dynamic_range}) {
    if (name == axis_name(axis)) return axis;
  }
  throw config_error("unknown sweep axis '" + name + "'");
}

bool axis_is_good_direction(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::c_min:
    case SweepAxis::vectors:
    case SweepAxis::measurements:
    case SweepAxis::dynamic_range:
      return true;
    case SweepAxis::epsilon:
    case SweepAxis::sigma:
    case SweepAxis::sparsity:
      return false;
  }
  return false;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw config_error("trials must be >= 1");
  if (!(delta > 0.0) || !(delta < 1.0)) throw config_error("delta must lie in (0, 1)");
  if (m < 1 || n < m) throw config_error("need 1 <= M <= N");
  if (sparsity < 1 || sparsity > n) throw config_error("need 1 <= sparsity <= N");
  if (vectors < 1) throw config_error("vectors must be >= 1");
  if (!run_somps && !run_sompt) throw config_error("no algorithm requested");
  if (matrix_source == MatrixSource::file && matrix_file.empty()) {
    throw config_error("matrix source 'file' requires a path");
  }

  if (kind == ExperimentKind::tw_validation) {
    if (tw_d_values.empty()) throw config_error("distribution validation needs d values");
    if (tw_samples < 10) throw config_error("distribution validation needs samples");
    if (noise_kind != dictionary::NoiseSpec::Kind::gaussian) {
      throw config_error("distribution validation is a gaussian-noise study");
    }
    return;
  }

  if (grid.empty()) throw config_error("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw config_error("grid must be strictly increasing");
  }
  check_grid_integral(axis, grid);

  const bool gaussian = noise_kind == dictionary::NoiseSpec::Kind::gaussian;
  auto check_axis_noise = [&](SweepAxis a) {
    if (a == SweepAxis::epsilon && gaussian) {
      throw config_error("epsilon sweep requires bounded noise");
    }
    if (a == SweepAxis::sigma && !gaussian) {
      throw config_error("sigma sweep requires gaussian noise");
    }
    if (a == SweepAxis::dynamic_range && !dynamic_range_signal) {
      throw config_error("dynamic_range sweep requires the dynamic-range signal model");
    }
  };
  check_axis_noise(axis);

  if (axis2.has_value()) {
    if (kind != ExperimentKind::srp_grid) {
      throw config_error("two sweep axes are only valid in preset-generated 2-D mode");
    }
    if (grid2.empty()) throw config_error("second sweep grid is empty");
    check_grid_integral(*axis2, grid2);
    check_axis_noise(*axis2);
    if (*axis2 == axis) throw config_error("the two sweep axes must differ");
  } else if (kind == ExperimentKind::srp_grid) {
    throw config_error("2-D mode requires a second axis");
  }

  if (run_sompt) {
    if (tau_rule == TauRule::bounded_epsilon && gaussian) {
      throw config_error("tau rule 'bounded-epsilon' requires bounded noise");
    }
    if ((tau_rule == TauRule::tw_quantile || tau_rule == TauRule::chernoff_quantile) &&
        !gaussian) {
      throw config_error("quantile tau rules require gaussian noise");
    }
    if (tau_rule == TauRule::explicit_value && !(tau_explicit > 0.0)) {
      throw config_error("explicit tau must be positive");
    }
  }
  if (dynamic_range_signal && !(c_min > 0.0 && c_min <= c_max)) {
    throw config_error("dynamic-range signal needs 0 < c_min <= c_max");
  }
  if (!dynamic_range_signal && !(c_min > 0.0) && axis != SweepAxis::c_min) {
    throw config_error("c_min must be positive");
  }
  if (!(noise_level > 0.0) && axis != SweepAxis::epsilon && axis != SweepAxis::sigma) {
    throw config_error("noise level must be positive");
  }
}

std::string ExperimentConfig::canonical_text() const {
  std::ostringstream out;
  out << "[experiment]\n";
  out << "name = " << name << "\n";
  out << "kind = "
      << (kind == ExperimentKind::srp_sweep
              ? "sweep"
              : kind == ExperimentKind::srp_grid ? "grid" : "tw-validation")
      << "\n";
  out << "matrix = " << matrix_source_name(matrix_source);
  if (matrix_source == MatrixSource::file) out << ":" << matrix_file;
  out << "\n";
  out << "m = " << m << "\n";
  out << "n = " << n << "\n";
  out << "algorithm = "
      << (run_somps && run_sompt ? "both" : run_somps ? "somps" : "sompt") << "\n";
  out << "sparsity = " << sparsity << "\n";
  out << "vectors = " << vectors << "\n";
  out << "signal = " << (dynamic_range_signal ? "dynamic_range" : "equal") << "\n";
  out << "c_min = " << fmt17(c_min) << "\n";
  out << "c_max = " << fmt17(c_max) << "\n";
  if (c_min_is_sqrt_d_cm) out << "c_m = " << fmt17(c_m) << "\n";
  out << "noise = " << noise_kind_name(noise_kind) << "\n";
  out << "noise_level = " << fmt17(noise_level) << "\n";
  if (kind == ExperimentKind::tw_validation) {
    out << "samples = " << tw_samples << "\n";
    out << "d_values =";
    for (int d : tw_d_values) out << " " << d;
    out << "\n";
  } else {
    out << "sweep = " << axis_name(axis) << "\n";
    out << "grid =";
    for (double v : grid) out << " " << fmt17(v);
    out << "\n";
    if (axis2) {
      out << "sweep2 = " << axis_name(*axis2) << "\n";
      out << "grid2 =";
      for (double v : grid2) out << " " << fmt17(v);
      out << "\n";
    }
  }
  out << "trials = " << trials << "\n";
  out << "seed = " << base_seed << "\n";
  out << "delta = " << fmt17(delta) << "\n";
  out << "sompt_rule = " << tau_rule_name(tau_rule) << "\n";
  if (tau_rule == TauRule::explicit_value) {
    out << "sompt_tau = " << fmt17(tau_explicit) << "\n";
  }
  out << "[design]\n";
  out << "matrix_seed = " << matrix_seed << "\n";
  out << "iters = " << design.iters << "\n";
  out << "gamma = " << fmt17(design.shrink) << "\n";
  out << "quantile = " << fmt17(design.shrink_quantile) << "\n";
  return out.str();
}

std::uint64_t ExperimentConfig::config_hash() const {
  // FNV-1a over the canonical echo
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

WilsonInterval wilson_interval(long successes, long trials) {
  if (trials < 1) throw domain_error("wilson_interval: trials must be positive");
  const double z = 1.959963984540054;
  const double nd = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

const dictionary::MeasurementMatrix& resolve_matrix(const ExperimentConfig& config, int m) {
  static std::map<std::string, dictionary::MeasurementMatrix> cache;
  static std::mutex mutex;

  std::ostringstream key;
  key << matrix_source_name(config.matrix_source) << "|" << m << "x" << config.n << "|"
      << config.matrix_seed;
  if (config.matrix_source == MatrixSource::designed) {
    key << "|" << config.design.iters << "|" << fmt17(config.design.shrink) << "|"
        << fmt17(config.design.shrink_quantile) << "|" << fmt17(config.design.improve_tol)
        << "|" << config.design.patience;
  }
  if (config.matrix_source == MatrixSource::file) key << "|" << config.matrix_file;

  std::scoped_lock lock(mutex);
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;

  dictionary::MeasurementMatrix matrix;
  switch (config.matrix_source) {
    case MatrixSource::designed:
      matrix = dictionary::design_low_coherence(m, config.n, config.design,
                                                config.matrix_seed);
      break;
    case MatrixSource::gaussian:
      matrix = dictionary::gaussian_matrix(m, config.n, config.matrix_seed);
      break;
    case MatrixSource::file:
      matrix = dictionary::measurement_matrix_from_file(config.matrix_file);
      if (matrix.matrix.rows() != m || matrix.matrix.cols() != config.n) {
        throw config_error("matrix file dimensions do not match the configured M, N");
      }
      break;
  }
  return cache.emplace(key.str(), std::move(matrix)).first->second;
}

std::vector<SrpCurve> run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.kind != ExperimentKind::srp_sweep) {
    throw config_error("run_experiment handles 1-D sweeps; use the grid/validation runners");
  }

  const bool track_mu = config.axis != SweepAxis::measurements;
  const double mu =
      track_mu ? resolve_matrix(config, config.m).coherence.mu
               : std::numeric_limits<double>::quiet_NaN();
  if (track_mu && !(mu < 1.0 / (2.0 * config.sparsity - 1.0))) {
    std::cerr << "warning: mu = " << mu << " is infeasible for L = " << config.sparsity
              << "; theory overlays are omitted\n";
  }

  std::vector<SrpCurve> curves;
  for (int pass = 0; pass < 2; ++pass) {
    const bool is_somps = pass == 0;
    if ((is_somps && !config.run_somps) || (!is_somps && !config.run_sompt)) continue;
    SrpCurve curve;
    curve.axis = axis_name(config.axis);
    curve.algorithm = is_somps ? "somps" : "sompt";
    curve.config_hash = config.config_hash();
    curve.base_seed = config.base_seed;
    curve.matrix_mu = mu;
    curves.push_back(std::move(curve));
  }

  double frobenius_overall = 0.0;
  std::vector<PointOutcome> outcomes;
  outcomes.reserve(config.grid.size());
  for (std::size_t g = 0; g < config.grid.size(); ++g) {
    const TrialSetup setup =
        resolve_setup(config, config.axis, config.grid[g], std::nullopt, 0.0);
    PointOutcome outcome =
        run_point(setup, config.run_somps, config.run_sompt, config.trials,
                  config.base_seed, static_cast<std::uint64_t>(g), config.threads);
    frobenius_overall = std::max(frobenius_overall, outcome.frobenius_max);
    outcomes.push_back(outcome);
  }

  const std::vector<Overlay> overlays =
      track_mu ? sweep_overlays(config, mu, frobenius_overall) : std::vector<Overlay>{};
  const bool bounded = config.noise_kind == dictionary::NoiseSpec::Kind::spectral_bounded;

  for (SrpCurve& curve : curves) {
    const bool is_somps = curve.algorithm == "somps";
    curve.overlays = overlays;
    for (std::size_t g = 0; g < config.grid.size(); ++g) {
      SrpPoint point;
      point.value = config.grid[g];
      point.trials = config.trials;
      point.successes =
          is_somps ? outcomes[g].somps_successes : outcomes[g].sompt_successes;
      point.srp = static_cast<double>(point.successes) / static_cast<double>(point.trials);
      const WilsonInterval w = wilson_interval(point.successes, point.trials);
      point.wilson_lo = w.lo;
      point.wilson_hi = w.hi;
      curve.points.push_back(point);
      if (bounded) curve.noise_frobenius_max.push_back(outcomes[g].frobenius_max);
    }
  }
  return curves;
}

std::vector<SrpGrid> run_grid_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.kind != ExperimentKind::srp_grid || !config.axis2.has_value()) {
    throw config_error("run_grid_experiment requires a preset-generated 2-D config");
  }

  const bool track_mu = config.axis != SweepAxis::measurements &&
                        *config.axis2 != SweepAxis::measurements;
  const double mu =
      track_mu ? resolve_matrix(config, config.m).coherence.mu
               : std::numeric_limits<double>::quiet_NaN();

  std::vector<SrpGrid> grids;
  for (int pass = 0; pass < 2; ++pass) {
    const bool is_somps = pass == 0;
    if ((is_somps && !config.run_somps) || (!is_somps && !config.run_sompt)) continue;
    SrpGrid grid;
    grid.axis1 = axis_name(config.axis);
    grid.axis2 = axis_name(*config.axis2);
    grid.algorithm = is_somps ? "somps" : "sompt";
    grid.grid1 = config.grid;
    grid.grid2 = config.grid2;
    grid.trials = config.trials;
    grid.config_hash = config.config_hash();
    grid.base_seed = config.base_seed;
    grid.matrix_mu = mu;
    grid.successes.assign(config.grid.size(), std::vector<long>(config.grid2.size(), 0));
    grids.push_back(std::move(grid));
  }

  for (std::size_t i1 = 0; i1 < config.grid.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < config.grid2.size(); ++i2) {
      const TrialSetup setup = resolve_setup(config, config.axis, config.grid[i1],
                                             config.axis2, config.grid2[i2]);
      const std::uint64_t point_index = i1 * config.grid2.size() + i2;
      const PointOutcome outcome =
          run_point(setup, config.run_somps, config.run_sompt, config.trials,
                    config.base_seed, point_index, config.threads);
      for (SrpGrid& grid : grids) {
        grid.successes[i1][i2] = grid.algorithm == "somps" ? outcome.somps_successes
                                                           : outcome.sompt_successes;
      }
    }
  }

  const auto theory = grid_theory(config, config.grid, config.grid2);
  for (SrpGrid& grid : grids) grid.theory = theory;
  return grids;
}

std::vector<TwValidationCurve> run_tw_validation(const ExperimentConfig& config) {
  config.validate();
  std::vector<TwValidationCurve> curves;
  for (std::size_t di = 0; di < config.tw_d_values.size(); ++di) {
    const int d = config.tw_d_values[di];
    const long samples = config.tw_samples;
    std::vector<double> norms(static_cast<std::size_t>(samples));
    const dictionary::NoiseSpec spec =
        dictionary::NoiseSpec::gaussian(config.noise_level, config.m, d);
    parallel_for(samples, config.threads, [&](long k) {
      const std::uint64_t seed = derive_seed(config.base_seed, di,
                                             static_cast<std::uint64_t>(k));
      norms[static_cast<std::size_t>(k)] =
          numerics::spectral_norm(dictionary::sample_noise(spec, seed));
    });
    std::sort(norms.begin(), norms.end());

    const tracy_widom::GaussianNormModel model{config.m, d, config.noise_level};
    TwValidationCurve curve;
    curve.d = d;
    curve.samples = samples;
    double gap = 0.0;
    for (long i = 0; i < samples; ++i) {
      const double theory = tracy_widom::spectral_norm_cdf(norms[static_cast<std::size_t>(i)],
                                                           model);
      const double hi = static_cast<double>(i + 1) / static_cast<double>(samples);
      const double lo = static_cast<double>(i) / static_cast<double>(samples);
      gap = std::max(gap, std::max(std::abs(hi - theory), std::abs(theory - lo)));
    }
    curve.sup_gap = gap;

    const long stride = std::max<long>(1, samples / 400);
    for (long i = 0; i < samples; i += stride) {
      curve.sample_points.push_back(norms[static_cast<std::size_t>(i)]);
      curve.empirical_cdf.push_back(static_cast<double>(i + 1) /
                                    static_cast<double>(samples));
      curve.theory_cdf.push_back(
          tracy_widom::spectral_norm_cdf(norms[static_cast<std::size_t>(i)], model));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::optional<double> empirical_guarantee_edge(const SrpCurve& curve, double target) {
  const bool good = axis_is_good_direction(axis_from_name(curve.axis));
  const auto& pts = curve.points;
  if (good) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      bool all = true;
      for (std::size_t j = k; j < pts.size(); ++j) {
        if (pts[j].srp < target) {
          all = false;
          break;
        }
      }
      if (all) return pts[k].value;
    }
    return std::nullopt;
  }
  std::optional<double> edge;
  for (const SrpPoint& p : pts) {
    if (p.srp >= target) {
      edge = p.value;
    } else {
      break;
    }
  }
  return edge;
}

std::optional<double> empirical_guarantee_edge(const SrpGrid& grid, std::size_t i1,
                                               double target) {
  SrpCurve slice;
  slice.axis = grid.axis2;
  for (std::size_t i2 = 0; i2 < grid.grid2.size(); ++i2) {
    SrpPoint p;
    p.value = grid.grid2[i2];
    p.trials = grid.trials;
    p.successes = grid.successes[i1][i2];
    p.srp = grid.srp(i1, i2);
    slice.points.push_back(p);
  }
  return empirical_guarantee_edge(slice, target);
}

// --- emission --------------------------------------------------------------

namespace {

void open_out(std::ofstream* out, const std::string& path) {
  out->open(path, std::ios::binary);
  if (!*out) throw io_error("cannot open " + path + " for writing");
}

}  // namespace

void emit_csv(const std::vector<SrpCurve>& curves, const std::string& path) {
  std::ofstream out;
  open_out(&out, path);
  char hash[32];
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const SrpCurve& curve = curves[c];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(curve.config_hash));
    out << "# sompkit-srp-curve\n";
    out << "# config_hash = " << hash << "\n";
    out << "# base_seed = " << curve.base_seed << "\n";
    out << "# matrix_mu = " << fmt17(curve.matrix_mu) << "\n";
    out << "# algorithm = " << curve.algorithm << "\n";
    for (const Overlay& overlay : curve.overlays) {
      out << "# overlay = " << overlay.method << " " << fmt17(overlay.value) << "\n";
    }
    if (!curve.noise_frobenius_max.empty()) {
      out << "# frobenius_max =";
      for (double v : curve.noise_frobenius_max) out << " " << fmt17(v);
      out << "\n";
    }
    out << "axis,value,trials,successes,srp,wilson_lo,wilson_hi,theory_threshold,"
           "theory_method\n";
    const std::string method = curve.overlays.empty() ? "none" : curve.overlays[0].method;
    const std::string threshold =
        curve.overlays.empty() ? "nan" : fmt17(curve.overlays[0].value);
    for (const SrpPoint& p : curve.points) {
      out << curve.axis << "," << fmt17(p.value) << "," << p.trials << "," << p.successes
          << "," << fmt17(p.srp) << "," << fmt17(p.wilson_lo) << "," << fmt17(p.wilson_hi)
          << "," << threshold << "," << method << "\n";
    }
    if (c + 1 < curves.size()) out << "\n";
  }
  if (!out) throw io_error("write failed for " + path);
}

std::vector<SrpCurve> parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<SrpCurve> curves;
  SrpCurve current;
  bool in_block = false;
  auto flush = [&]() {
    if (in_block) curves.push_back(current);
    current = SrpCurve{};
    in_block = false;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string key, eq;
      meta >> key;
      if (key == "config_hash") {
        meta >> eq;
        std::string hex;
        meta >> hex;
        current.config_hash = std::stoull(hex, nullptr, 16);
      } else if (key == "base_seed") {
        meta >> eq >> current.base_seed;
      } else if (key == "matrix_mu") {
        meta >> eq >> current.matrix_mu;
      } else if (key == "algorithm") {
        meta >> eq >> current.algorithm;
      } else if (key == "overlay") {
        Overlay overlay;
        meta >> eq >> overlay.method >> overlay.value;
        current.overlays.push_back(overlay);
      } else if (key == "frobenius_max") {
        meta >> eq;
        double v;
        while (meta >> v) current.noise_frobenius_max.push_back(v);
      }
      continue;
    }
    if (line.rfind("axis,", 0) == 0) {
      in_block = true;
      continue;
    }
    std::istringstream row(line);
    std::string token;
    SrpPoint p;
    std::getline(row, token, ',');
    current.axis = token;
    std::getline(row, token, ',');
    p.value = std::stod(token);
    std::getline(row, token, ',');
    p.trials = std::stol(token);
    std::getline(row, token, ',');
    p.successes = std::stol(token);
    std::getline(row, token, ',');
    p.srp = std::stod(token);
    std::getline(row, token, ',');
    p.wilson_lo = std::stod(token);
    std::getline(row, token, ',');
    p.wilson_hi = std::stod(token);
    current.points.push_back(p);
  }
  flush();
  return curves;
}

void emit_svg(const std::vector<SrpCurve>& curves, const std::string& title,
              const std::string& path) {
  svg::LinePlot plot;
  plot.title = title;
  plot.x_label = curves.empty() ? "value" : curves[0].axis;
  plot.y_label = "empirical SRP";
  plot.y_min = -0.02;
  plot.y_max = 1.05;
  const char* colors[] = {"#1f6fb2", "#d97706"};
  for (std::size_t c = 0; c < curves.size(); ++c) {
    svg::Series series;
    series.label = curves[c].algorithm;
    series.color = colors[c % 2];
    for (const SrpPoint& p : curves[c].points) {
      series.x.push_back(p.value);
      series.y.push_back(p.srp);
    }
    plot.series.push_back(std::move(series));
  }
  if (!curves.empty()) {
    const char* vcolors[] = {"#b22222", "#2e8b57", "#6a0dad"};
    for (std::size_t i = 0; i < curves[0].overlays.size(); ++i) {
      plot.vlines.push_back(
          {curves[0].overlays[i].method, curves[0].overlays[i].value, vcolors[i % 3]});
    }
    if (curves[0].overlays.empty()) {
      plot.notes.push_back("no theory overlay (no closed form on this axis, or mu infeasible)");
    }
  }
  plot.write(path);
}

void emit_grid_csv(const std::vector<SrpGrid>& grids, const std::string& path) {
  std::ofstream out;
  open_out(&out, path);
  char hash[32];
  for (std::size_t g = 0; g < grids.size(); ++g) {
    const SrpGrid& grid = grids[g];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(grid.config_hash));
    out << "# sompkit-srp-grid\n";
    out << "# config_hash = " << hash << "\n";
    out << "# base_seed = " << grid.base_seed << "\n";
    out << "# matrix_mu = " << fmt17(grid.matrix_mu) << "\n";
    out << "# algorithm = " << grid.algorithm << "\n";
    for (const auto& edge : grid.theory) {
      for (std::size_t i1 = 0; i1 < grid.grid1.size(); ++i1) {
        out << "# theory = " << edge.method << " " << fmt17(grid.grid1[i1]) << " "
            << (edge.values[i1] ? fmt17(*edge.values[i1]) : std::string("nan")) << "\n";
      }
    }
    out << "axis1,value1,axis2,value2,trials,successes,srp\n";
    for (std::size_t i1 = 0; i1 < grid.grid1.size(); ++i1) {
      for (std::size_t i2 = 0; i2 < grid.grid2.size(); ++i2) {
        out << grid.axis1 << "," << fmt17(grid.grid1[i1]) << "," << grid.axis2 << ","
            << fmt17(grid.grid2[i2]) << "," << grid.trials << "," << grid.successes[i1][i2]
            << "," << fmt17(grid.srp(i1, i2)) << "\n";
      }
    }
    if (g + 1 < grids.size()) out << "\n";
  }
  if (!out) throw io_error("write failed for " + path);
}

void emit_grid_svg(const SrpGrid& grid, const std::string& title, const std::string& path) {
  svg::ColormapPlot plot;
  plot.title = title + " (" + grid.algorithm + ")";
  plot.x_label = grid.axis1;
  plot.y_label = grid.axis2;
  plot.x_values = grid.grid1;
  plot.y_values = grid.grid2;
  plot.cells.assign(grid.grid1.size(), std::vector<double>(grid.grid2.size(), 0.0));
  for (std::size_t i1 = 0; i1 < grid.grid1.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < grid.grid2.size(); ++i2) {
      plot.cells[i1][i2] = grid.srp(i1, i2);
    }
  }
  const char* colors[] = {"#b22222", "#2e8b57"};
  for (std::size_t e = 0; e < grid.theory.size(); ++e) {
    svg::ColormapPlot::Overlay overlay;
    overlay.label = grid.theory[e].method;
    overlay.y_per_x = grid.theory[e].values;
    overlay.color = colors[e % 2];
    overlay.dashed = e > 0;
    plot.overlays.push_back(std::move(overlay));
  }
  plot.write(path);
}

void emit_edge_csv(const std::vector<SrpGrid>& grids, double target,
                   const std::string& path) {
  std::ofstream out;
  open_out(&out, path);
  out << "# sompkit-edge-curve\n";
  out << "# target = " << fmt17(target) << "\n";
  out << "axis,value,algorithm,empirical_edge,theory_edge,theory_method\n";
  for (const SrpGrid& grid : grids) {
    for (std::size_t i1 = 0; i1 < grid.grid1.size(); ++i1) {
      const auto edge = empirical_guarantee_edge(grid, i1, target);
      const auto theory = grid.theory.empty() ? std::nullopt : grid.theory[0].values[i1];
      out << grid.axis1 << "," << fmt17(grid.grid1[i1]) << "," << grid.algorithm << ","
          << (edge ? fmt17(*edge) : std::string("nan")) << ","
          << (theory ? fmt17(*theory) : std::string("nan")) << ","
          << (grid.theory.empty() ? "none" : grid.theory[0].method) << "\n";
    }
  }
  if (!out) throw io_error("write failed for " + path);
}

void emit_edge_svg(const std::vector<SrpGrid>& grids, double target,
                   const std::string& title, const std::string& path) {
  svg::LinePlot plot;
  plot.title = title;
  plot.x_label = grids.empty() ? "value" : grids[0].axis1;
  plot.y_label = grids.empty() ? "edge" : grids[0].axis2 + " guarantee edge";
  const char* colors[] = {"#1f6fb2", "#d97706"};
  for (std::size_t g = 0; g < grids.size(); ++g) {
    svg::Series series;
    series.label = grids[g].algorithm + " empirical";
    series.color = colors[g % 2];
    for (std::size_t i1 = 0; i1 < grids[g].grid1.size(); ++i1) {
      const auto edge = empirical_guarantee_edge(grids[g], i1, target);
      if (edge) {
        series.x.push_back(grids[g].grid1[i1]);
        series.y.push_back(*edge);
      }
    }
    plot.series.push_back(std::move(series));
  }
  if (!grids.empty() && !grids[0].theory.empty()) {
    svg::Series theory;
    theory.label = grids[0].theory[0].method;
    theory.color = "#b22222";
    theory.dashed = true;
    theory.markers = false;
    for (std::size_t i1 = 0; i1 < grids[0].grid1.size(); ++i1) {
      if (grids[0].theory[0].values[i1]) {
        theory.x.push_back(grids[0].grid1[i1]);
        theory.y.push_back(*grids[0].theory[0].values[i1]);
      }
    }
    plot.series.push_back(std::move(theory));
  }
  plot.write(path);
}

void emit_tw_csv(const std::vector<TwValidationCurve>& curves, const std::string& path) {
  std::ofstream out;
  open_out(&out, path);
  out << "# sompkit-tw-validation\n";
  for (const auto& curve : curves) {
    out << "# sup_gap = d" << curve.d << " " << fmt17(curve.sup_gap) << " samples "
        << curve.samples << "\n";
  }
  out << "d,x,empirical_cdf,tw_cdf\n";
  for (const auto& curve : curves) {
    for (std::size_t i = 0; i < curve.sample_points.size(); ++i) {
      out << curve.d << "," << fmt17(curve.sample_points[i]) << ","
          << fmt17(curve.empirical_cdf[i]) << "," << fmt17(curve.theory_cdf[i]) << "\n";
    }
  }
  if (!out) throw io_error("write failed for " + path);
}

void emit_tw_svg(const std::vector<TwValidationCurve>& curves, const std::string& title,
                 const std::string& path) {
  svg::LinePlot plot;
  plot.title = title;
  plot.x_label = "spectral norm";
  plot.y_label = "CDF";
  plot.y_min = 0.0;
  plot.y_max = 1.02;
  const char* colors[] = {"#1f6fb2", "#d97706", "#2e8b57"};
  for (std::size_t c = 0; c < curves.size(); ++c) {
    svg::Series empirical;
    empirical.label = "empirical d=" + std::to_string(curves[c].d);
    empirical.color = colors[c % 3];
    empirical.markers = false;
    empirical.x = curves[c].sample_points;
    empirical.y = curves[c].empirical_cdf;
    plot.series.push_back(std::move(empirical));
    svg::Series theory;
    theory.label = "tracy-widom d=" + std::to_string(curves[c].d);
    theory.color = colors[c % 3];
    theory.dashed = true;
    theory.markers = false;
    theory.x = curves[c].sample_points;
    theory.y = curves[c].theory_cdf;
    plot.series.push_back(std::move(theory));
  }
  plot.write(path);
}

std::vector<std::string> run_and_emit(const ExperimentConfig& config) {
  std::vector<std::string> written;
  auto record = [&](const std::filesystem::path& p) { written.push_back(p.string()); };

  switch (config.kind) {
    case ExperimentKind::srp_sweep: {
      const auto curves = run_experiment(config);
      const auto csv = output_path(config, config.name + ".csv");
      emit_csv(curves, csv.string());
      record(csv);
      const auto svg_path = output_path(config, config.name + ".svg");
      emit_svg(curves, config.name, svg_path.string());
      record(svg_path);
      break;
    }
    case ExperimentKind::srp_grid: {
      const auto grids = run_grid_experiment(config);
      const auto csv = output_path(config, config.name + ".csv");
      emit_grid_csv(grids, csv.string());
      record(csv);
      if (grids.size() == 1) {
        const auto svg_path = output_path(config, config.name + ".svg");
        emit_grid_svg(grids[0], config.name, svg_path.string());
        record(svg_path);
      } else {
        for (const SrpGrid& grid : grids) {
          const auto svg_path =
              output_path(config, config.name + "_" + grid.algorithm + "_map.svg");
          emit_grid_svg(grid, config.name, svg_path.string());
          record(svg_path);
        }
        const auto svg_path = output_path(config, config.name + ".svg");
        emit_edge_svg(grids, kEdgeTarget, config.name, svg_path.string());
        record(svg_path);
      }
      const auto edges = output_path(config, config.name + "_edges.csv");
      emit_edge_csv(grids, kEdgeTarget, edges.string());
      record(edges);
      break;
    }
    case ExperimentKind::tw_validation: {
      const auto curves = run_tw_validation(config);
      const auto csv = output_path(config, config.name + ".csv");
      emit_tw_csv(curves, csv.string());
      record(csv);
      const auto svg_path = output_path(config, config.name + ".svg");
      emit_tw_svg(curves, config.name, svg_path.string());
      record(svg_path);
      break;
    }
  }
  return written;
}

}  // namespace sompkit::harness
