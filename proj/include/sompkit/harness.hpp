#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sompkit/bounds.hpp"
#include "sompkit/dictionary.hpp"

namespace sompkit::harness {

enum class MatrixSource { designed, gaussian, file };
enum class SweepAxis { epsilon, sigma, c_min, sparsity, vectors, measurements, dynamic_range };
enum class TauRule { bounded_epsilon, tw_quantile, chernoff_quantile, explicit_value };
enum class ExperimentKind { srp_sweep, srp_grid, tw_validation };

const char* axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);
/// True when growing the axis makes recovery easier (c_min, d, M, the
/// dynamic-range ratio); false for noise levels and sparsity.
bool axis_is_good_direction(SweepAxis axis);

/// Full description of one experiment. User configs describe 1-D sweeps;
/// the 2-D grid and distribution-validation kinds are constructed by the
/// figure presets only.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::srp_sweep;
  std::string name = "experiment";

  MatrixSource matrix_source = MatrixSource::designed;
  std::string matrix_file;
  std::uint64_t matrix_seed = 0;
  dictionary::DesignParams design;
  int m = 100;
  int n = 200;

  bool run_somps = true;
  bool run_sompt = true;
  int sparsity = 4;
  int vectors = 4;

  bool dynamic_range_signal = false;
  double c_min = 2.0;
  double c_max = 2.0;
  /// When set, the row-norm floor tracks the vector count as
  /// c_min = sqrt(d * c_m) (equal-energy-per-vector model).
  bool c_min_is_sqrt_d_cm = false;
  double c_m = 1.0;

  dictionary::NoiseSpec::Kind noise_kind = dictionary::NoiseSpec::Kind::spectral_bounded;
  double noise_level = 1.0;

  SweepAxis axis = SweepAxis::epsilon;
  std::vector<double> grid;
  std::optional<SweepAxis> axis2;  // preset-generated 2-D mode only
  std::vector<double> grid2;

  std::vector<int> tw_d_values;  // distribution-validation mode
  long tw_samples = 10000;

  long trials = 1000;
  std::uint64_t base_seed = 1;
  double delta = 1e-3;
  TauRule tau_rule = TauRule::bounded_epsilon;
  double tau_explicit = 0.0;

  std::string output_dir = ".";
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
  std::string canonical_text() const;  ///< resolved key-value echo, also hashed
  std::uint64_t config_hash() const;
};

struct SrpPoint {
  double value = 0.0;
  long trials = 0;
  long successes = 0;
  double srp = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 0.0;
};

struct Overlay {
  std::string method;
  double value = 0.0;
};

struct SrpCurve {
  std::string axis;
  std::string algorithm;
  std::vector<SrpPoint> points;
  std::vector<Overlay> overlays;
  std::uint64_t config_hash = 0;
  std::uint64_t base_seed = 0;
  double matrix_mu = 0.0;
  /// Realized max Frobenius norm of the noise per grid point; only
  /// populated for spectral-bounded runs (comparison-bound diagnostics).
  std::vector<double> noise_frobenius_max;
};

struct SrpGrid {
  std::string axis1;
  std::string axis2;
  std::string algorithm;
  std::vector<double> grid1;
  std::vector<double> grid2;
  std::vector<std::vector<long>> successes;  // [i1][i2]
  long trials = 0;
  /// Per-axis1 theory threshold on axis2 (empty optional = infeasible).
  struct TheoryEdge {
    std::string method;
    std::vector<std::optional<double>> values;
  };
  std::vector<TheoryEdge> theory;
  std::uint64_t config_hash = 0;
  std::uint64_t base_seed = 0;
  double matrix_mu = 0.0;

  double srp(std::size_t i1, std::size_t i2) const {
    return static_cast<double>(successes[i1][i2]) / static_cast<double>(trials);
  }
};

struct TwValidationCurve {
  int d = 0;
  std::vector<double> sample_points;  // thinned, sorted
  std::vector<double> empirical_cdf;
  std::vector<double> theory_cdf;
  double sup_gap = 0.0;
  long samples = 0;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// 95% Wilson score interval for successes/trials.
WilsonInterval wilson_interval(long successes, long trials);

/// Runs a 1-D sweep; one curve per requested algorithm.
std::vector<SrpCurve> run_experiment(const ExperimentConfig& config);

/// Runs a preset-generated 2-D sweep; one grid per requested algorithm.
std::vector<SrpGrid> run_grid_experiment(const ExperimentConfig& config);

/// Distribution-validation run: empirical CDF of the noise spectral norm
/// against its Tracy-Widom approximation, one curve per d.
std::vector<TwValidationCurve> run_tw_validation(const ExperimentConfig& config);

/// Largest guaranteed prefix (noise-like axes) or smallest guaranteed
/// suffix (quality-like axes) of the sweep at the given SRP target;
/// empty when no grid value qualifies.
std::optional<double> empirical_guarantee_edge(const SrpCurve& curve, double target);

/// Same edge logic on a slice of a 2-D grid (row i1, along axis2).
std::optional<double> empirical_guarantee_edge(const SrpGrid& grid, std::size_t i1,
                                               double target);

/// CSV/SVG emitters. Multi-curve files stack one block per algorithm,
/// each with the documented header; metadata rides in '#' comment lines.
void emit_csv(const std::vector<SrpCurve>& curves, const std::string& path);
std::vector<SrpCurve> parse_csv(const std::string& path);
void emit_svg(const std::vector<SrpCurve>& curves, const std::string& title,
              const std::string& path);
void emit_grid_csv(const std::vector<SrpGrid>& grids, const std::string& path);
void emit_grid_svg(const SrpGrid& grid, const std::string& title, const std::string& path);
void emit_edge_csv(const std::vector<SrpGrid>& grids, double target,
                   const std::string& path);
void emit_edge_svg(const std::vector<SrpGrid>& grids, double target,
                   const std::string& title, const std::string& path);
void emit_tw_csv(const std::vector<TwValidationCurve>& curves, const std::string& path);
void emit_tw_svg(const std::vector<TwValidationCurve>& curves, const std::string& title,
                 const std::string& path);

/// Executes any experiment kind and writes <name>.csv / <name>.svg (and
/// <name>_edges.* for edge-style figures) under config.output_dir.
/// Returns the list of files written.
std::vector<std::string> run_and_emit(const ExperimentConfig& config);

/// Paper-style figure presets fig1..fig16 at desk-scale defaults.
ExperimentConfig figure_preset(const std::string& name);
std::vector<std::string> preset_names();

/// Parses the documented config-file grammar (1-D sweeps only).
ExperimentConfig config_from_file(const std::string& path);

/// Measurement matrix for a config (design results are cached per
/// process so repeated sweeps over M reuse the work).
const dictionary::MeasurementMatrix& resolve_matrix(const ExperimentConfig& config, int m);

}  // namespace sompkit::harness
