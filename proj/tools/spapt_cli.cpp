// spapt: command-line harness for the SPA-PT simulation library.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 numeric failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spapt/channels.hpp"
#include "spapt/detection.hpp"
#include "spapt/errors.hpp"
#include "spapt/experiments.hpp"
#include "spapt/io.hpp"
#include "spapt/selftest.hpp"
#include "spapt/tomography.hpp"

namespace {

using namespace spapt;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t shots = 100000;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string out;  // empty: standard output

  ShotConfig shot_config() const { return ShotConfig{shots, seed}; }
};

void emit(const RunConfig& cfg, std::string_view text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
  } else {
    write_text(cfg.out, text);
  }
}

void add_common_flags(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--shots", cfg.shots, "Shots per measurement setting / trajectories")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", cfg.seed, "Root RNG seed");
  cmd.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd.add_option("--out", cfg.out, "Output path (default: standard output)");
}

Metadata config_metadata(const RunConfig& cfg) {
  return {{"shots", std::to_string(cfg.shots)},
          {"seed", std::to_string(cfg.seed)},
          {"version", std::string(kVersion)}};
}

struct PrepareArgs {
  std::string family;
  std::string kind = "phi+";
  std::optional<double> p;
  std::optional<double> alpha;
  std::string input;
};

double require_param(const std::optional<double>& value, const char* name, const std::string& family) {
  if (!value) throw UsageError("family '" + family + "' requires --" + name);
  return *value;
}

int cmd_prepare(const PrepareArgs& args, const RunConfig& cfg) {
  Metadata metadata = config_metadata(cfg);
  metadata["family"] = args.family;
  std::optional<DensityMatrix> rho;
  if (args.family == "bell") {
    rho = bell(parse_bell_kind(args.kind));
    metadata["kind"] = args.kind;
  } else if (args.family == "werner") {
    const double p = require_param(args.p, "p", args.family);
    rho = werner(p);
    metadata["p"] = format_number(p);
  } else if (args.family == "mems") {
    const double p = require_param(args.p, "p", args.family);
    rho = mems(p);
    metadata["p"] = format_number(p);
  } else if (args.family == "rho_family") {
    const double p = require_param(args.p, "p", args.family);
    const double alpha = require_param(args.alpha, "alpha", args.family);
    rho = family_rho(p, alpha);
    metadata["p"] = format_number(p);
    metadata["alpha"] = format_number(alpha);
  } else if (args.family == "file") {
    if (args.input.empty()) throw UsageError("family 'file' requires --in");
    StateFile loaded = read_state_file(args.input);
    for (const auto& [key, value] : loaded.metadata) metadata.try_emplace(key, value);
    metadata["family"] = loaded.metadata.count("family") ? loaded.metadata["family"] : "file";
    metadata["source"] = args.input;
    rho = loaded.state;
  } else {
    throw UsageError("unknown family '" + args.family +
                     "' (expected bell, werner, mems, rho_family or file)");
  }
  emit(cfg, serialize_state(*rho, metadata));
  return 0;
}

struct ApplyArgs {
  std::string state;
  std::string channel = "spa_pt";
  std::string mode = "exact";
  std::string state_out;
};

QuantumChannel channel_by_name(const std::string& name) {
  auto two_qubit = [](const QuantumChannel& a, const QuantumChannel& b) {
    return QuantumChannel(tensor(a.superoperator(), b.superoperator()));
  };
  const QuantumChannel id = identity_channel(2);
  if (name == "spa_pt") return spa_pt();
  if (name == "identity") return identity_channel(4);
  if (name == "id_spa_transpose") return two_qubit(id, QuantumChannel(spa_transpose()));
  if (name == "spa_transpose_id") return two_qubit(QuantumChannel(spa_transpose()), id);
  if (name == "spa_inversion_depolarize") {
    return two_qubit(QuantumChannel(spa_inversion()), depolarize());
  }
  if (name == "depolarize_id") return two_qubit(depolarize(), id);
  if (name == "id_depolarize") return two_qubit(id, depolarize());
  throw UsageError("unknown channel '" + name +
                   "' (expected spa_pt, identity, id_spa_transpose, spa_transpose_id, "
                   "spa_inversion_depolarize, depolarize_id or id_depolarize)");
}

int cmd_apply(const ApplyArgs& args, const RunConfig& cfg) {
  const StateFile input = read_state_file(args.state);
  const QuantumChannel channel = channel_by_name(args.channel);
  const DensityMatrix exact = apply(channel, input.state);

  Report report{"apply",
                {"channel", "mode", "min_eigenvalue", "eigenvalues", "fidelity_to_exact", "shots",
                 "seed", "version"},
                {}};
  DensityMatrix output = exact;
  Cell fidelity_cell;
  std::uint64_t shots = 0;
  if (args.mode == "trajectory") {
    if (args.channel != "spa_pt") throw UsageError("trajectory mode is only available for spa_pt");
    output = trajectory_spa_pt(input.state, cfg.shot_config()).state;
    fidelity_cell = fidelity(exact, output);
    shots = cfg.shots;
  } else if (args.mode != "exact") {
    throw UsageError("unknown mode '" + args.mode + "' (expected exact or trajectory)");
  }
  const auto spectrum = herm_eig(output.matrix()).eigenvalues;
  std::string eigenvalues;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    if (k > 0) eigenvalues += ' ';
    eigenvalues += format_number(spectrum[k]);
  }
  report.add_row({args.channel, args.mode, spectrum.front(), eigenvalues, fidelity_cell,
                  static_cast<double>(shots), static_cast<double>(cfg.seed), std::string(kVersion)});

  if (!args.state_out.empty()) {
    Metadata metadata = config_metadata(cfg);
    metadata["channel"] = args.channel;
    metadata["mode"] = args.mode;
    metadata["input"] = args.state;
    write_text(args.state_out, serialize_state(output, metadata));
  }
  emit(cfg, render(report, parse_format(cfg.format)));
  return 0;
}

int cmd_detect(const std::string& state_path, const std::string& method, const RunConfig& cfg) {
  const StateFile input = read_state_file(state_path);
  DetectionVerdict verdict;
  if (method == "ppt") {
    verdict = detect(input.state, Method::Ppt);
  } else if (method == "spa_spectrum") {
    verdict = detect(input.state, Method::SpaSpectrum);
  } else if (method == "f_hat_ideal") {
    verdict = detect(input.state, Method::FHat);
  } else if (method == "f_hat_sampled") {
    verdict = detect(sample_table(input.state, cfg.shot_config()));
  } else {
    throw UsageError("unknown method '" + method +
                     "' (expected ppt, spa_spectrum, f_hat_ideal or f_hat_sampled)");
  }
  Report report{"detect",
                {"method", "lambda_min", "threshold", "margin", "verdict", "shots", "seed",
                 "version"},
                {}};
  report.add_row({method, verdict.lambda_min, verdict.threshold, verdict.margin(),
                  std::string(to_string(verdict.verdict)), static_cast<double>(verdict.shots),
                  static_cast<double>(cfg.seed), std::string(kVersion)});
  emit(cfg, render(report, parse_format(cfg.format)));
  return 0;
}

int cmd_selftest(const RunConfig& cfg) {
  bool all_passed = true;
  for (const SuiteResult& suite : run_selftest(cfg.seed)) {
    std::cout << (suite.passed ? "PASS " : "FAIL ") << suite.name << " (" << suite.detail << ") "
              << format_number(suite.seconds) << " s\n";
    all_passed = all_passed && suite.passed;
  }
  std::cout << (all_passed ? "selftest passed\n" : "selftest FAILED\n");
  return all_passed ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SPA-PT simulation: measure-and-prepare partial transpose and entanglement detection"};
  app.require_subcommand(1);

  RunConfig cfg;

  PrepareArgs prepare_args;
  auto* prepare = app.add_subcommand("prepare", "Write a state file for a named state family");
  prepare->add_option("family", prepare_args.family, "bell | werner | mems | rho_family | file")
      ->required();
  prepare->add_option("--kind", prepare_args.kind, "Bell state: phi+ | phi- | psi+ | psi-");
  prepare->add_option("--p", prepare_args.p, "Mixing parameter in [0, 1]");
  prepare->add_option("--alpha", prepare_args.alpha, "Amplitude alpha in [0, 1] (rho_family)");
  prepare->add_option("--in", prepare_args.input, "Input state file (family 'file')");
  add_common_flags(*prepare, cfg);

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a channel to a state file");
  apply_cmd->add_option("--state", apply_args.state, "Input state file")->required();
  apply_cmd->add_option("--channel", apply_args.channel, "Channel name");
  apply_cmd->add_option("--mode", apply_args.mode, "exact | trajectory");
  apply_cmd->add_option("--state-out", apply_args.state_out, "Write the output state here");
  add_common_flags(*apply_cmd, cfg);

  std::string detect_state;
  std::string detect_method = "spa_spectrum";
  auto* detect_cmd = app.add_subcommand("detect", "Entanglement verdict for a state file");
  detect_cmd->add_option("--state", detect_state, "Input state file")->required();
  detect_cmd->add_option("--method", detect_method,
                         "ppt | spa_spectrum | f_hat_ideal | f_hat_sampled");
  add_common_flags(*detect_cmd, cfg);

  auto* table1 = app.add_subcommand("table1", "Minimum eigenvalues for the four Bell states");
  add_common_flags(*table1, cfg);

  auto* fig3 = app.add_subcommand("fig3", "Tangle / linear entropy / eigenvalue sweep");
  add_common_flags(*fig3, cfg);

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_option("--seed", cfg.seed, "Root RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*prepare) return cmd_prepare(prepare_args, cfg);
    if (*apply_cmd) return cmd_apply(apply_args, cfg);
    if (*detect_cmd) return cmd_detect(detect_state, detect_method, cfg);
    if (*table1) {
      emit(cfg, render(table1_report(run_table1(cfg.shot_config())), parse_format(cfg.format)));
      return 0;
    }
    if (*fig3) {
      const ShotConfig shots = cfg.shot_config();
      emit(cfg, render(fig3_report(run_fig3(shots), shots), parse_format(cfg.format)));
      return 0;
    }
    if (*selftest) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InvalidInput& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
