#include "resdil/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "resdil/dilution.hpp"
#include "resdil/errors.hpp"
#include "resdil/functionals.hpp"
#include "resdil/parallel.hpp"
#include "resdil/qec.hpp"
#include "resdil/rng.hpp"
#include "resdil/selftest.hpp"

namespace resdil {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr double kPi = std::numbers::pi;

// Fig. S2 / S3 noise. Index = pattern bits, most significant bit on qubit 1.
constexpr std::array<double, 4> kTwoQubitProbs{0.05, 0.03, 0.26, 0.66};
constexpr std::array<double, 8> kThreeQubitProbs{0.06, 0.03, 0.04, 0.01, 0.31, 0.42, 0.05, 0.08};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double parse_double(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw ValidationError("--" + key + ": not a finite number: '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, text.find(':') != std::string::npos ? ':' : ',')) {
    out.push_back(parse_double(key, item));
  }
  return out;
}

class Params {
 public:
  explicit Params(const RunConfig& config) : config_(config) {}

  double real(const std::string& key, double fallback) {
    const auto it = config_.parameters.find(key);
    const double v = it == config_.parameters.end() ? fallback : parse_double(key, it->second);
    used_.emplace_back(key, fmt(v));
    return v;
  }

  Range range(const std::string& key, Range fallback) {
    Range r = fallback;
    const auto it = config_.parameters.find(key);
    if (it != config_.parameters.end()) {
      const std::vector<double> v = parse_list(key, it->second);
      if (v.size() != 2) throw ValidationError("--" + key + " expects lo:hi");
      r = {v[0], v[1]};
    }
    r.validate();
    used_.emplace_back(key, fmt(r.lo) + ":" + fmt(r.hi));
    return r;
  }

  std::optional<std::string> raw(const std::string& key) const {
    const auto it = config_.parameters.find(key);
    if (it == config_.parameters.end()) return std::nullopt;
    return it->second;
  }

  void note(const std::string& key, const std::string& value) { used_.emplace_back(key, value); }

  /// Metadata header: version, command, grid, seed, then every parameter read.
  std::vector<std::pair<std::string, std::string>> header(const std::string& command) const {
    std::vector<std::pair<std::string, std::string>> meta{
        {"resdil", kVersion},
        {"command", command},
        {"grid", std::to_string(config_.grid_points)},
        {"seed", std::to_string(config_.seed)}};
    meta.insert(meta.end(), used_.begin(), used_.end());
    return meta;
  }

 private:
  const RunConfig& config_;
  std::vector<std::pair<std::string, std::string>> used_;
};

SweepOptions sweep_options(const RunConfig& config) {
  SweepOptions o;
  o.grid = config.grid_points;
  o.workers = config.workers;
  return o;
}

Table sweep_table(const SweepResult& s, const std::string& parameter,
                  std::vector<std::pair<std::string, std::string>> meta,
                  const std::string& lhs = "lhs", const std::string& rhs = "rhs") {
  Table t;
  t.metadata = std::move(meta);
  t.metadata.emplace_back("argmax_" + parameter, fmt(s.argmax_param));
  t.metadata.emplace_back("max_" + lhs, fmt(s.max_rate));
  t.metadata.emplace_back("skipped", std::to_string(s.skipped));
  t.columns = {parameter, lhs, rhs};
  for (const SweepPoint& p : s.points) t.rows.push_back({p.parameter, p.lhs, p.rhs});
  return t;
}

Table correlated_figure(std::span<const double> probs, const RunConfig& config,
                        const std::string& name) {
  Params params(config);
  const Range alphas = params.range("alpha-range", {0.0, kPi / 4});
  std::string listed;
  for (const double p : probs) listed += (listed.empty() ? "" : ":") + fmt(p);
  params.note("probs", listed);
  params.note("pattern_order", "binary index, most significant bit on qubit 1");
  const std::size_t n = probs.size() == 4 ? 2 : 3;
  const double singlets = ed_correlated_noise(n, std::nullopt, probs);
  const SweepResult s = sweep(
      [&](double a) {
        const double c = std::cos(a);
        return AdvantagePair{rate_ratio(ed_correlated_noise(n, a, probs), binary_entropy(c * c),
                                        name.c_str()),
                             singlets};
      },
      alphas, sweep_options(config));
  return sweep_table(s, "alpha", params.header("figure " + name), "diluted", "singlets");
}

Table figure_fig3(const RunConfig& config) {
  Params params(config);
  const double gamma = params.real("gamma", 0.9);
  const Range alphas = params.range("alpha-range", {0.0, kPi / 2});
  const SweepOptions options = sweep_options(config);
  const SweepResult pure = sweep(
      [&](double a) { return coherence_advantage(gamma, a, CoherenceFamily::kPure); }, alphas,
      options);
  const SweepResult mixed = sweep(
      [&](double a) { return coherence_advantage(gamma, a, CoherenceFamily::kMixed); }, alphas,
      options);
  const double limit = boundary_limit(
      [&](double a) { return coherence_advantage(gamma, a, CoherenceFamily::kMixed).lhs; }, 0.04,
      2.0);

  std::map<double, double> mixed_at;
  for (const SweepPoint& p : mixed.points) mixed_at[p.parameter] = p.lhs;
  Table t;
  t.metadata = params.header("figure fig3");
  t.metadata.emplace_back("argmax_alpha_pure", fmt(pure.argmax_param));
  t.metadata.emplace_back("max_pure", fmt(pure.max_rate));
  t.metadata.emplace_back("mixed_limit_alpha_to_0", fmt(limit));
  t.columns = {"alpha", "pure", "mixed", "no_dilution"};
  for (const SweepPoint& p : pure.points) {
    const auto it = mixed_at.find(p.parameter);
    if (it != mixed_at.end()) t.rows.push_back({p.parameter, p.lhs, it->second, p.rhs});
  }
  t.metadata.emplace_back("skipped", std::to_string(config.grid_points - t.rows.size()));
  return t;
}

Table figure_fig5(const RunConfig& config) {
  Params params(config);
  const Range temps = params.range("T-range", {0.05, 1.5});
  std::vector<double> ps{0.5, 0.9, 0.99};
  if (params.raw("p")) {
    ps = {params.real("p", 0.0)};
  } else {
    params.note("p", "0.5:0.9:0.99");
  }

  std::vector<SweepResult> curves;
  for (const double p : ps) curves.push_back(qmax_curve(p, temps, sweep_options(config)));
  Table t;
  t.metadata = params.header("figure fig5");
  t.columns = {"T"};
  for (const double p : ps) t.columns.push_back("qmax_p" + fmt(p));
  std::vector<std::map<double, double>> at(curves.size());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    for (const SweepPoint& pt : curves[c].points) at[c][pt.parameter] = pt.lhs;
  }
  for (const SweepPoint& pt : curves.front().points) {
    std::vector<double> row{pt.parameter};
    for (const auto& m : at) {
      const auto it = m.find(pt.parameter);
      if (it == m.end()) break;
      row.push_back(it->second);
    }
    if (row.size() == t.columns.size()) t.rows.push_back(std::move(row));
  }
  t.metadata.emplace_back("skipped", std::to_string(config.grid_points - t.rows.size()));
  return t;
}

Table figure_qec(const RunConfig& config) {
  Params params(config);
  const Range ps = params.range("p-range", {0.0, 0.5});
  const double alpha = params.real("alpha", 0.25);
  if (!(ps.lo >= 0.0 && ps.hi <= 1.0)) throw ValidationError("p-range must lie in [0, 1]");
  const std::size_t n = config.grid_points;
  const std::vector<std::vector<double>> rows = parallel_map(
      n,
      [&](std::size_t i) {
        const double p = i + 1 == n ? ps.hi
                                    : ps.lo + (ps.hi - ps.lo) * static_cast<double>(i) /
                                                  static_cast<double>(n - 1);
        const DensityMatrix nothing =
            apply(extend_id_tensor(phase_flip(p), 2, 1), singlet()).with_dims({2, 2});
        return std::vector<double>{p, ed_qec_phase_flip(p), ed_dil_phase_flip(p, alpha),
                                   hashing_rate(nothing, HashingSide::kA)};
      },
      config.workers);
  Table t;
  t.metadata = params.header("figure figQEC");
  t.columns = {"p", "qec", "dilution", "nothing"};
  t.rows = rows;
  return t;
}

PauliProbs parse_pauli(const std::string& text) {
  const std::vector<double> v = parse_list("pauli", text);
  if (v.size() != 4) throw ValidationError("--pauli expects four probabilities p0,p1,p2,p3");
  const PauliProbs p{v[0], v[1], v[2], v[3]};
  p.validate();
  return p;
}

}  // namespace

void RunConfig::validate() const {
  if (grid_points < 2) throw ValidationError("--grid must be at least 2");
  if (output_path.empty()) throw ValidationError("--out must not be empty");
}

std::string to_csv(const Table& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata) out += "# " + key + "=" + value + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + table.columns[i];
  }
  out += "\n";
  for (const std::vector<double>& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + fmt(row[i]);
    out += "\n";
  }
  return out;
}

void write_output(const std::string& text, const std::filesystem::path& path, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

Table run_figure(const std::string& name, const RunConfig& config) {
  config.validate();
  if (name == "fig2") {
    Params params(config);
    const double lambda = params.real("lambda", 0.5);
    const Range alphas = params.range("alpha-range", {0.0, kPi / 4});
    const SweepResult s = sweep([&](double a) { return entanglement_advantage(lambda, a); },
                                alphas, sweep_options(config));
    return sweep_table(s, "alpha", params.header("figure fig2"));
  }
  if (name == "fig3") return figure_fig3(config);
  if (name == "fig4") {
    Params params(config);
    const double temperature = params.real("T", 0.3);
    const double p = params.real("p", 0.9);
    const Range qs = params.range("q-range", {0.0, 1.0});
    const SweepResult s = sweep([&](double q) { return thermal_advantage(temperature, p, q); },
                                qs, sweep_options(config));
    Table t = sweep_table(s, "q", params.header("figure fig4"), "rate", "no_dilution");
    t.metadata.emplace_back("gibbs_excited_weight",
                            fmt(gibbs(Hamiltonian::unit_qubit(), temperature)(1, 1).real()));
    return t;
  }
  if (name == "fig5") return figure_fig5(config);
  if (name == "figS2") return correlated_figure(kTwoQubitProbs, config, name);
  if (name == "figS3") return correlated_figure(kThreeQubitProbs, config, name);
  if (name == "figQEC") return figure_qec(config);
  throw UnknownFigure("unknown figure '" + name +
                      "' (expected fig2, fig3, fig4, fig5, figS2, figS3 or figQEC)");
}

Table run_sweep(const std::string& spec, const RunConfig& config) {
  config.validate();
  Params params(config);
  const SweepOptions options = sweep_options(config);
  const std::string command = "sweep " + spec;
  if (spec == "entanglement") {
    const double lambda = params.real("lambda", 0.5);
    const Range r = params.range("alpha-range", {0.0, kPi / 4});
    return sweep_table(sweep([&](double a) { return entanglement_advantage(lambda, a); }, r,
                             options),
                       "alpha", params.header(command));
  }
  if (spec == "coherence-pure" || spec == "coherence-mixed") {
    const CoherenceFamily family =
        spec == "coherence-pure" ? CoherenceFamily::kPure : CoherenceFamily::kMixed;
    const double gamma = params.real("gamma", 0.9);
    const Range r = params.range("alpha-range", {0.0, kPi / 2});
    return sweep_table(
        sweep([&](double a) { return coherence_advantage(gamma, a, family); }, r, options),
        "alpha", params.header(command));
  }
  if (spec == "thermal") {
    const double temperature = params.real("T", 0.3);
    const double p = params.real("p", 0.9);
    const Range r = params.range("q-range", {0.0, 1.0});
    return sweep_table(
        sweep([&](double q) { return thermal_advantage(temperature, p, q); }, r, options), "q",
        params.header(command));
  }
  if (spec == "purity") {
    const double p = params.real("p", 0.5);
    const Range r = params.range("q-range", {0.0, 0.5});
    return sweep_table(purity_depolarizing_sweep(p, r, options), "q", params.header(command));
  }
  throw ValidationError("unknown rate spec '" + spec +
                        "' (expected entanglement, coherence-pure, coherence-mixed, thermal "
                        "or purity)");
}

Table run_qec_compare(const RunConfig& config) {
  config.validate();
  Params params(config);
  const double alpha = params.real("alpha", 0.25);
  const double u_grid = params.real("u-grid", 16);
  const double samples = params.real("samples", 0);
  if (u_grid < 8 || u_grid != std::floor(u_grid)) {
    throw ValidationError("--u-grid must be an integer >= 8");
  }
  if (samples < 0 || samples != std::floor(samples)) {
    throw ValidationError("--samples must be a non-negative integer");
  }

  std::vector<PauliProbs> probs;
  if (samples == 0) {
    const std::string text = params.raw("pauli").value_or("0.9,0,0,0.1");
    params.note("pauli", text);
    probs.push_back(parse_pauli(text));
  } else {
    std::mt19937_64 rng = named_stream(config.seed, "qec-compare");
    std::exponential_distribution<double> e(1.0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(samples); ++i) {
      std::array<double, 4> w{};
      for (double& x : w) x = e(rng);
      const double sum = w[0] + w[1] + w[2] + w[3];
      PauliProbs p{0.0, w[1] / sum, w[2] / sum, w[3] / sum};
      p.p0 = 1.0 - p.p1 - p.p2 - p.p3;
      probs.push_back(p);
    }
  }

  Table t;
  t.metadata = params.header("qec-compare");
  t.columns = {"p0", "p1", "p2", "p3", "qec", "dilution", "nothing", "theta", "phi", "lam"};
  for (const PauliProbs& p : probs) {
    const PauliComparison c =
        pauli_compare(p, static_cast<std::size_t>(u_grid), alpha, config.workers);
    t.rows.push_back({p.p0, p.p1, p.p2, p.p3, c.ed_qec_bound, c.ed_dil_bound,
                      c.ed_nothing_bound, c.best_angles[0], c.best_angles[1],
                      c.best_angles[2]});
  }
  return t;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resource conversion rates under noise, with and without dilution", "resdil"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");

  RunConfig config;
  std::string out_path = "-";
  const std::vector<std::pair<std::string, std::string>> parameter_flags{
      {"lambda", "Phase damping strength"},
      {"gamma", "Amplitude damping strength"},
      {"T", "Temperature (k = 1)"},
      {"p", "Noise probability"},
      {"alpha", "Dilution angle"},
      {"alpha-range", "lo:hi"},
      {"q-range", "lo:hi"},
      {"T-range", "lo:hi (fig5)"},
      {"p-range", "lo:hi (figQEC)"},
      {"pauli", "p0,p1,p2,p3 (qec-compare)"},
      {"u-grid", "Euler grid points per angle (qec-compare)"},
      {"samples", "Random Pauli vectors to compare (qec-compare)"},
  };
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& [name, help] : parameter_flags) {
    options[name] = app.add_option("--" + name, values[name], help);
  }
  app.add_option("--grid", config.grid_points, "Grid points per sweep")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();
  app.add_option("--workers", config.workers, "Worker threads, 0 = all cores");

  std::string figure_name;
  CLI::App* figure = app.add_subcommand("figure", "Reproduce a figure as CSV");
  figure->add_option("name", figure_name, "fig2|fig3|fig4|fig5|figS2|figS3|figQEC")->required();
  std::string spec;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep one advantage scenario");
  sweep_cmd->add_option("spec", spec, "entanglement|coherence-pure|coherence-mixed|thermal|purity")
      ->required();
  CLI::App* qec_cmd = app.add_subcommand("qec-compare", "QEC vs dilution vs nothing, Pauli noise");
  std::string corrupt;
  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in invariant suite");
  selftest->add_option("--corrupt", corrupt, "module/invariant forced to fail (test hook)");
  for (CLI::App* sub : {figure, sweep_cmd, qec_cmd, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  for (const auto& [name, option] : options) {
    if (option->count() > 0) config.parameters[name] = values[name];
  }
  config.output_path = out_path;

  try {
    if (selftest->parsed()) {
      config.command = Command::kSelftest;
      const SelftestReport report = run_selftest({1.0, corrupt});
      write_output(report.to_text(), config.output_path, out);
      return report.all_passed() ? kExitOk : kExitNumerical;
    }
    Table table;
    if (figure->parsed()) {
      config.command = Command::kFigure;
      table = run_figure(figure_name, config);
    } else if (sweep_cmd->parsed()) {
      config.command = Command::kSweep;
      table = run_sweep(spec, config);
    } else {
      config.command = Command::kQecCompare;
      table = run_qec_compare(config);
    }
    write_output(to_csv(table), config.output_path, out);
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace resdil
