#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sompkit/config_file.hpp"
#include "sompkit/harness.hpp"

namespace harness = sompkit::harness;
namespace configfile = sompkit::configfile;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// small, fast base: gaussian 24x36 dictionary, tiny trial counts
harness::ExperimentConfig small_config() {
  harness::ExperimentConfig config;
  config.name = "unit";
  config.matrix_source = harness::MatrixSource::gaussian;
  config.matrix_seed = 5;
  config.m = 24;
  config.n = 36;
  config.sparsity = 2;
  config.vectors = 2;
  config.c_min = 2.0;
  config.c_max = 2.0;
  config.noise_kind = sompkit::dictionary::NoiseSpec::Kind::spectral_bounded;
  config.noise_level = 0.5;
  config.axis = harness::SweepAxis::epsilon;
  config.grid = {0.05, 0.2, 0.6, 1.2};
  config.trials = 60;
  config.base_seed = 13;
  config.tau_rule = harness::TauRule::bounded_epsilon;
  return config;
}

// pool-adjacent-violators fit, for the monotone-SRP sanity assertion
std::vector<double> isotonic_fit(std::vector<double> y, bool increasing) {
  if (!increasing) std::reverse(y.begin(), y.end());
  std::vector<double> level;
  std::vector<double> weight;
  for (double v : y) {
    level.push_back(v);
    weight.push_back(1.0);
    while (level.size() > 1 && level[level.size() - 2] > level.back()) {
      const double w = weight[weight.size() - 2] + weight.back();
      const double merged =
          (level[level.size() - 2] * weight[weight.size() - 2] +
           level.back() * weight.back()) / w;
      level.pop_back();
      weight.pop_back();
      level.back() = merged;
      weight.back() = w;
    }
  }
  std::vector<double> fit;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (double k = 0; k < weight[i]; ++k) fit.push_back(level[i]);
  }
  if (!increasing) std::reverse(fit.begin(), fit.end());
  return fit;
}

}  // namespace

TEST_CASE("config file: parsing, defaults, and typo rejection") {
  const std::string text = R"(
# comment
[experiment]
matrix = gaussian
m = 24
n = 36
sparsity = 2
vectors = 2
noise = bounded
noise_level = 0.5
sweep = epsilon
grid = 0.1:0.1:0.3
trials = 10
)";
  const std::string path = "unit_config_test.toml";
  {
    std::ofstream out(path);
    out << text;
  }
  const auto config = harness::config_from_file(path);
  CHECK(config.m == 24);
  CHECK(config.grid.size() == 3);
  CHECK(config.run_somps);
  CHECK(config.run_sompt);
  CHECK(config.tau_rule == harness::TauRule::bounded_epsilon);

  {
    std::ofstream out(path);
    out << text << "unknown_key = 1\n";
  }
  CHECK_THROWS_WITH_AS(harness::config_from_file(path), doctest::Contains("unknown_key"),
                       sompkit::config_error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(harness::config_from_file("missing_config.toml"), sompkit::config_error);
}

TEST_CASE("grid spec parsing") {
  CHECK(configfile::parse_grid("1,2,4") == std::vector<double>{1.0, 2.0, 4.0});
  const auto grid = configfile::parse_grid("0.1:0.1:0.5");
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == doctest::Approx(0.1));
  CHECK(grid.back() == doctest::Approx(0.5));
  CHECK_THROWS_AS(configfile::parse_grid("3,2,1"), sompkit::config_error);
  CHECK_THROWS_AS(configfile::parse_grid(""), sompkit::config_error);
}

TEST_CASE("config validation rejects inconsistent setups") {
  auto config = small_config();
  config.axis = harness::SweepAxis::sigma;  // sigma sweep needs gaussian noise
  CHECK_THROWS_AS(config.validate(), sompkit::config_error);

  config = small_config();
  config.trials = 0;
  CHECK_THROWS_AS(config.validate(), sompkit::config_error);

  config = small_config();
  config.axis2 = harness::SweepAxis::sparsity;  // 2-D only via presets
  config.grid2 = {1, 2};
  CHECK_THROWS_AS(config.validate(), sompkit::config_error);

  config = small_config();
  config.run_somps = false;
  config.run_sompt = false;
  CHECK_THROWS_AS(config.validate(), sompkit::config_error);
}

TEST_CASE("wilson interval basics") {
  const auto all = harness::wilson_interval(100, 100);
  CHECK(all.hi == doctest::Approx(1.0));
  CHECK(all.lo > 0.95);
  const auto none = harness::wilson_interval(0, 100);
  CHECK(none.lo == doctest::Approx(0.0));
  CHECK(none.hi < 0.05);
  const auto half = harness::wilson_interval(50, 100);
  CHECK(half.lo < 0.5);
  CHECK(half.hi > 0.5);
}

TEST_CASE("trivial experiment: noiseless-grade noise on an easy instance is all success") {
  auto config = small_config();
  config.trials = 1;
  config.noise_level = 1e-9;
  config.grid = {1e-10, 1e-9};
  config.c_min = 5.0;
  config.c_max = 5.0;
  const auto curves = harness::run_experiment(config);
  REQUIRE(curves.size() == 2);
  for (const auto& curve : curves) {
    for (const auto& point : curve.points) {
      CHECK(point.srp == 1.0);
    }
  }
}

TEST_CASE("experiment output is deterministic and CSV round-trips exactly") {
  const auto config = small_config();
  const auto first = harness::run_experiment(config);
  const auto second = harness::run_experiment(config);
  REQUIRE(first.size() == second.size());
  for (std::size_t c = 0; c < first.size(); ++c) {
    REQUIRE(first[c].points.size() == second[c].points.size());
    for (std::size_t g = 0; g < first[c].points.size(); ++g) {
      CHECK(first[c].points[g].successes == second[c].points[g].successes);
    }
  }

  harness::emit_csv(first, "unit_curve_test.csv");
  const auto parsed = harness::parse_csv("unit_curve_test.csv");
  REQUIRE(parsed.size() == first.size());
  for (std::size_t c = 0; c < first.size(); ++c) {
    CHECK(parsed[c].algorithm == first[c].algorithm);
    CHECK(parsed[c].axis == first[c].axis);
    CHECK(parsed[c].config_hash == first[c].config_hash);
    CHECK(parsed[c].matrix_mu == first[c].matrix_mu);
    REQUIRE(parsed[c].overlays.size() == first[c].overlays.size());
    for (std::size_t i = 0; i < first[c].overlays.size(); ++i) {
      CHECK(parsed[c].overlays[i].method == first[c].overlays[i].method);
      CHECK(parsed[c].overlays[i].value == first[c].overlays[i].value);
    }
    REQUIRE(parsed[c].points.size() == first[c].points.size());
    for (std::size_t g = 0; g < first[c].points.size(); ++g) {
      CHECK(parsed[c].points[g].value == first[c].points[g].value);
      CHECK(parsed[c].points[g].trials == first[c].points[g].trials);
      CHECK(parsed[c].points[g].successes == first[c].points[g].successes);
      CHECK(parsed[c].points[g].srp == first[c].points[g].srp);
      CHECK(parsed[c].points[g].wilson_lo == first[c].points[g].wilson_lo);
      CHECK(parsed[c].points[g].wilson_hi == first[c].points[g].wilson_hi);
    }
    CHECK(parsed[c].noise_frobenius_max == first[c].noise_frobenius_max);
  }
  std::filesystem::remove("unit_curve_test.csv");
}

TEST_CASE("parallel trials aggregate exactly like serial trials") {
  auto config = small_config();
  config.threads = 1;
  const auto serial = harness::run_experiment(config);
  config.threads = 4;
  const auto parallel = harness::run_experiment(config);
  for (std::size_t c = 0; c < serial.size(); ++c) {
    for (std::size_t g = 0; g < serial[c].points.size(); ++g) {
      CHECK(serial[c].points[g].successes == parallel[c].points[g].successes);
    }
  }
}

TEST_CASE("empirical guarantee edge semantics") {
  harness::SrpCurve curve;
  curve.axis = "epsilon";  // bad direction: prefix of successes
  auto add = [&](double value, double srp) {
    harness::SrpPoint p;
    p.value = value;
    p.srp = srp;
    p.trials = 100;
    p.successes = static_cast<long>(srp * 100);
    curve.points.push_back(p);
  };
  add(0.1, 1.0);
  add(0.2, 1.0);
  add(0.3, 0.9);
  add(0.4, 1.0);  // beyond a dip: must not extend the edge
  auto edge = harness::empirical_guarantee_edge(curve, 1.0);
  REQUIRE(edge.has_value());
  CHECK(*edge == doctest::Approx(0.2));

  curve.points.clear();
  add(0.1, 0.8);
  CHECK(!harness::empirical_guarantee_edge(curve, 1.0).has_value());

  harness::SrpCurve rising;
  rising.axis = "c_min";  // good direction: suffix of successes
  auto add_r = [&](double value, double srp) {
    harness::SrpPoint p;
    p.value = value;
    p.srp = srp;
    rising.points.push_back(p);
  };
  add_r(1.0, 0.2);
  add_r(2.0, 1.0);
  add_r(3.0, 0.9);
  add_r(4.0, 1.0);
  add_r(5.0, 1.0);
  edge = harness::empirical_guarantee_edge(rising, 1.0);
  REQUIRE(edge.has_value());
  CHECK(*edge == doctest::Approx(4.0));

  // SRP identically one: the edge is the extreme grid value
  for (auto& p : rising.points) p.srp = 1.0;
  CHECK(*harness::empirical_guarantee_edge(rising, 1.0) == doctest::Approx(1.0));
  for (auto& p : curve.points) p.srp = 1.0;
  CHECK(*harness::empirical_guarantee_edge(curve, 1.0) == doctest::Approx(0.1));
}

TEST_CASE("bounded sweep: SRP declines monotonically after isotonic smoothing") {
  auto config = small_config();
  config.grid = {0.05, 0.1, 0.2, 0.4, 0.8, 1.6, 3.2};
  config.trials = 150;
  const auto curves = harness::run_experiment(config);
  for (const auto& curve : curves) {
    std::vector<double> srp;
    for (const auto& p : curve.points) srp.push_back(p.srp);
    const auto fit = isotonic_fit(srp, false);
    for (std::size_t g = 0; g < srp.size(); ++g) {
      const double half =
          0.5 * (curve.points[g].wilson_hi - curve.points[g].wilson_lo);
      CAPTURE(g);
      CHECK(std::abs(fit[g] - srp[g]) <= 2.0 * half + 1e-12);
    }
  }
}

TEST_CASE("presets: parameters, unknown names, and the caption discrepancy") {
  const auto fig2 = harness::figure_preset("fig2");
  CHECK(fig2.axis == harness::SweepAxis::epsilon);
  CHECK(fig2.m == 100);
  CHECK(fig2.n == 200);
  CHECK(fig2.sparsity == 4);
  CHECK(fig2.vectors == 4);
  CHECK(fig2.c_min == 2.0);
  CHECK(fig2.noise_kind == sompkit::dictionary::NoiseSpec::Kind::spectral_bounded);
  CHECK(fig2.trials == 1000);

  const auto fig4 = harness::figure_preset("fig4");
  CHECK(fig4.axis == harness::SweepAxis::sigma);
  CHECK(fig4.noise_kind == sompkit::dictionary::NoiseSpec::Kind::gaussian);
  CHECK(fig4.delta == doctest::Approx(1e-3));

  const auto fig1 = harness::figure_preset("fig1");
  CHECK(fig1.kind == harness::ExperimentKind::tw_validation);
  CHECK(fig1.tw_d_values == std::vector<int>{2, 5, 10});

  // the published captions disagree on c_min between the two
  // measurement-sweep variants; both are honored verbatim
  CHECK(harness::figure_preset("fig12").c_min == 10.0);
  CHECK(harness::figure_preset("fig13").c_min == 2.0);

  const auto fig15 = harness::figure_preset("fig15");
  CHECK(fig15.dynamic_range_signal);
  CHECK(fig15.c_max == 4.0);
  CHECK(fig15.kind == harness::ExperimentKind::srp_grid);

  CHECK_THROWS_WITH_AS(harness::figure_preset("fig99"), doctest::Contains("fig16"),
                       sompkit::config_error);
  for (const auto& name : harness::preset_names()) {
    CHECK_NOTHROW(harness::figure_preset(name).validate());
  }
}

TEST_CASE("2-D grid run produces edges, theory, and stacked CSV") {
  auto config = small_config();
  config.kind = harness::ExperimentKind::srp_grid;
  config.axis = harness::SweepAxis::sparsity;
  config.grid = {1, 2, 3};
  config.axis2 = harness::SweepAxis::epsilon;
  config.grid2 = {0.05, 0.3, 1.0, 2.5};
  config.trials = 50;
  const auto grids = harness::run_grid_experiment(config);
  REQUIRE(grids.size() == 2);
  REQUIRE(grids[0].successes.size() == 3);
  REQUIRE(grids[0].successes[0].size() == 4);
  REQUIRE(!grids[0].theory.empty());

  harness::emit_grid_csv(grids, "unit_grid_test.csv");
  const std::string text = slurp("unit_grid_test.csv");
  CHECK(text.find("axis1,value1,axis2,value2,trials,successes,srp") != std::string::npos);
  CHECK(text.find("# algorithm = somps") != std::string::npos);
  CHECK(text.find("# algorithm = sompt") != std::string::npos);
  std::filesystem::remove("unit_grid_test.csv");

  harness::emit_edge_csv(grids, 1.0, "unit_edges_test.csv");
  const std::string edges = slurp("unit_edges_test.csv");
  CHECK(edges.find("axis,value,algorithm,empirical_edge,theory_edge,theory_method") !=
        std::string::npos);
  std::filesystem::remove("unit_edges_test.csv");
}

TEST_CASE("run_and_emit writes byte-identical artifacts on repeated runs") {
  auto config = small_config();
  config.grid = {0.1, 0.4, 1.0};
  config.trials = 40;
  config.name = "unit_det";
  config.output_dir = "unit_det_out_a";
  const auto first = harness::run_and_emit(config);
  config.output_dir = "unit_det_out_b";
  const auto second = harness::run_and_emit(config);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(slurp(first[i]) == slurp(second[i]));
  }
  // sanity on the svg: well-formed, self-contained
  const std::string svg = slurp("unit_det_out_a/unit_det.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  CHECK(svg.find("http://") == svg.find("http://www.w3.org/2000/svg"));
  CHECK(svg.find("nan") == std::string::npos);
  std::filesystem::remove_all("unit_det_out_a");
  std::filesystem::remove_all("unit_det_out_b");
}

TEST_CASE("tw validation runner reports a small sup gap at desk scale") {
  harness::ExperimentConfig config;
  config.kind = harness::ExperimentKind::tw_validation;
  config.name = "unit_tw";
  config.m = 60;
  config.noise_kind = sompkit::dictionary::NoiseSpec::Kind::gaussian;
  config.noise_level = 1.0;
  config.tw_d_values = {8};
  config.tw_samples = 2000;
  config.base_seed = 3;
  const auto curves = harness::run_tw_validation(config);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].sup_gap < 0.08);
  CHECK(curves[0].samples == 2000);
  REQUIRE(!curves[0].sample_points.empty());
}
