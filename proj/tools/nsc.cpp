// nsc: evaluate coupled entropies and uncertainties, reproduce the built-in
// figure sweeps as CSV, run the verification suites, and draw samples from
// the coupled distribution families.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 normalization error, 4 numerical failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsc/algebra.hpp"
#include "nsc/distributions.hpp"
#include "nsc/entropy.hpp"
#include "nsc/errors.hpp"
#include "nsc/escort.hpp"
#include "nsc/uncertainty.hpp"
#include "nsc/verification.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNormalizationError = 3;
constexpr int kExitNumericalError = 4;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }

// Probability input: one value per line, '#' starts a comment, blank lines
// ignored.
std::vector<double> read_probability_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<double> probs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    char* parse_end = nullptr;
    const double value = std::strtod(token.c_str(), &parse_end);
    if (parse_end == token.c_str() || *parse_end != '\0') {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number: " + token);
    }
    probs.push_back(value);
  }
  if (probs.empty()) throw std::runtime_error(path + ": no probabilities found");
  return probs;
}

void write_manifest(std::ostream& out, const std::string& command_line) {
  out << "# manifest: " << command_line << "\n";
  out << "# nsc version " << kVersion << "\n";
}

// ---------------------------------------------------------------------------

struct EntropyArgs {
  std::string input;
  std::string kind = "shannon";
  double alpha = 1.0;
  double kappa = 0.0;
  bool renormalize = false;
};

int run_entropy(const EntropyArgs& args) {
  std::vector<double> raw;
  try {
    raw = read_probability_file(args.input);
  } catch (const std::exception& e) {
    std::cerr << "nsc entropy: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    const nsc::DiscreteDistribution dist(raw, args.renormalize);
    const nsc::Coupling coupling(args.kappa, args.alpha);
    const nsc::EntropySpec spec{nsc::entropy_kind_from_string(args.kind), coupling};
    const nsc::Coupling metric =
        spec.kind == nsc::EntropyKind::shannon ? nsc::Coupling(0.0, args.alpha) : coupling;
    const double avg = nsc::coupled_average_uncertainty_discrete(dist, metric);
    const double entropy = nsc::entropy_discrete(dist, spec);
    std::cout << "kind,alpha,kappa,moment,average_uncertainty,entropy\n";
    std::cout << nsc::to_string(spec.kind) << ',' << fmt(args.alpha) << ',' << fmt(args.kappa)
              << ',' << fmt(spec.moment()) << ',' << fmt(avg) << ',' << fmt(entropy) << "\n";
    return kExitOk;
  } catch (const nsc::normalization_error& e) {
    std::cerr << "nsc entropy: " << e.what() << "\n";
    return kExitNormalizationError;
  } catch (const std::exception& e) {
    std::cerr << "nsc entropy: " << e.what() << "\n";
    return kExitInputError;
  }
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  int figure = 0;
  std::vector<double> sigmas;
  double kappa_step = 0.05;
  double kappa_max = 2.0;
  std::string output;
};

std::string sweep_manifest(const SweepArgs& args) {
  std::string m = "nsc sweep --figure " + std::to_string(args.figure);
  for (double s : args.sigmas) m += " --sigma " + fmt(s);
  if (args.figure == 3 || args.figure == 4) {
    m += " --kappa-step " + fmt(args.kappa_step);
    m += " --kappa-max " + fmt(args.kappa_max);
  }
  m += " --output " + args.output;
  return m;
}

void emit_figure1(std::ostream& out, const SweepArgs& args) {
  out << "alpha,kappa,sigma,x,density\n";
  const std::vector<double> exp_kappas = {-2.0 / 3.0, -0.5, -0.25, 0.0, 0.5, 1.0, 2.0};
  const std::vector<double> gauss_kappas = {0.0, 0.5, 1.0, 2.0};
  for (double sigma : args.sigmas) {
    for (double kappa : exp_kappas) {
      const nsc::CoupledDensityParams p(0.0, sigma, kappa, 1);
      for (int i = 0; i <= 100; ++i) {
        const double x = 5.0 * i / 100.0;
        out << "1," << fmt(kappa) << ',' << fmt(sigma) << ',' << fmt(x) << ','
            << fmt(nsc::density(p, x)) << "\n";
      }
    }
    for (double kappa : gauss_kappas) {
      const nsc::CoupledDensityParams p(0.0, sigma, kappa, 2);
      for (int i = 0; i <= 200; ++i) {
        const double x = -5.0 + 10.0 * i / 200.0;
        out << "2," << fmt(kappa) << ',' << fmt(sigma) << ',' << fmt(x) << ','
            << fmt(nsc::density(p, x)) << "\n";
      }
    }
  }
}

void emit_figure2(std::ostream& out, const SweepArgs& args) {
  out << "sigma,metric_kappa,dist_kappa,average_uncertainty\n";
  std::vector<double> dist_kappas;
  for (int i = 1; i <= 100; ++i) dist_kappas.push_back(i / 100.0);
  const std::vector<double> metric_kappas = {0.2, 0.4, 0.6, 0.8};
  for (double sigma : args.sigmas) {
    const auto rows = nsc::uncertainty_sweep(dist_kappas, metric_kappas, sigma);
    for (const auto& row : rows) {
      out << fmt(sigma) << ',' << fmt(row.metric_kappa) << ',' << fmt(row.dist_kappa) << ','
          << fmt(row.average_uncertainty) << "\n";
    }
  }
}

void emit_figure34(std::ostream& out, const SweepArgs& args) {
  const int alpha = args.figure == 3 ? 1 : 2;
  out << "alpha,sigma,kappa,kind,entropy\n";
  std::vector<double> kappas;
  for (int i = 0;; ++i) {
    const double kappa = i * args.kappa_step;
    if (kappa > args.kappa_max + 1e-12) break;
    kappas.push_back(kappa);
  }
  const std::vector<nsc::EntropyKind> kinds = {
      nsc::EntropyKind::shannon, nsc::EntropyKind::renyi, nsc::EntropyKind::tsallis,
      nsc::EntropyKind::normalized_tsallis, nsc::EntropyKind::coupled};
  const auto rows = nsc::entropy_sweep(alpha, args.sigmas, kappas, kinds);
  for (const auto& row : rows) {
    out << row.alpha << ',' << fmt(row.sigma) << ',' << fmt(row.kappa) << ','
        << nsc::to_string(row.kind) << ',' << fmt(row.entropy) << "\n";
  }
}

int run_sweep(SweepArgs args) {
  if (args.sigmas.empty()) {
    if (args.figure == 3 || args.figure == 4) {
      args.sigmas = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    } else {
      args.sigmas = {1.0};
    }
  }
  if (args.output.empty()) args.output = "fig" + std::to_string(args.figure) + ".csv";

  std::ofstream out(args.output, std::ios::binary);
  if (!out) {
    std::cerr << "nsc sweep: cannot open output file: " << args.output << "\n";
    return kExitInputError;
  }
  write_manifest(out, sweep_manifest(args));
  try {
    switch (args.figure) {
      case 1: emit_figure1(out, args); break;
      case 2: emit_figure2(out, args); break;
      case 3:
      case 4: emit_figure34(out, args); break;
      default:
        std::cerr << "nsc sweep: unknown figure " << args.figure << "\n";
        out.close();
        std::remove(args.output.c_str());
        return kExitInputError;
    }
  } catch (const std::exception& e) {
    out.close();
    std::remove(args.output.c_str());  // do not leave partial data behind
    std::cerr << "nsc sweep: " << e.what() << "\n";
    return kExitNumericalError;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_verify(const std::string& suite) {
  std::vector<nsc::CheckResult> results;
  try {
    if (suite == "algebra") results = nsc::verify_algebra();
    else if (suite == "theorem1") results = nsc::verify_theorem1();
    else if (suite == "lemma1") results = nsc::verify_lemma1();
    else if (suite == "lemma2") results = nsc::verify_lemma2();
    else if (suite == "closedforms") results = nsc::verify_closed_forms();
    else if (suite == "superstat") results = nsc::verify_superstatistics();
    else if (suite == "all") results = nsc::verify_all();
    else {
      std::cerr << "nsc verify: unknown suite: " << suite << "\n";
      return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "nsc verify: " << e.what() << "\n";
    return kExitNumericalError;
  }

  int passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (max err " << fmt(r.max_error)
              << ", tol " << fmt(r.tolerance) << ")";
    if (!r.note.empty()) std::cout << "  # " << r.note;
    std::cout << "\n";
    if (r.passed) ++passed;
  }
  std::cout << "verify: " << results.size() << " checks, " << passed << " passed\n";
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  double alpha = 1.0;
  double kappa = 0.0;
  double sigma = 1.0;
  double mu = 0.0;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int run_sample(const SampleArgs& args) {
  std::vector<double> values;
  try {
    const nsc::CoupledDensityParams params(args.mu, args.sigma, args.kappa,
                                           static_cast<int>(args.alpha));
    if (args.alpha != 1.0 && args.alpha != 2.0) {
      throw nsc::unsupported_parameters("sample: alpha must be 1 or 2");
    }
    values = nsc::sample(params, args.n, args.seed);
  } catch (const std::exception& e) {
    std::cerr << "nsc sample: " << e.what() << "\n";
    return kExitInputError;
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output, std::ios::binary);
    if (!file) {
      std::cerr << "nsc sample: cannot open output file: " << args.output << "\n";
      return kExitInputError;
    }
    out = &file;
  }

  std::string manifest = "nsc sample --alpha " + fmt(args.alpha) + " --kappa " + fmt(args.kappa) +
                         " --sigma " + fmt(args.sigma) + " --mu " + fmt(args.mu) + " --n " +
                         fmt(args.n) + " --seed " + fmt(args.seed);
  if (!args.output.empty()) manifest += " --output " + args.output;
  write_manifest(*out, manifest);
  *out << "x\n";
  for (double v : values) *out << fmt(v) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlinear statistical coupling toolkit"};
  app.require_subcommand(1);

  EntropyArgs entropy_args;
  auto* entropy_cmd = app.add_subcommand("entropy", "entropy of a probability file");
  entropy_cmd->add_option("--input", entropy_args.input, "probability file, one value per line")
      ->required();
  entropy_cmd->add_option("--kind", entropy_args.kind,
                          "shannon|renyi|tsallis|normalized-tsallis|coupled");
  entropy_cmd->add_option("--alpha", entropy_args.alpha, "stability index");
  entropy_cmd->add_option("--kappa", entropy_args.kappa, "coupling");
  entropy_cmd->add_flag("--renormalize", entropy_args.renormalize,
                        "rescale probabilities that do not sum to one");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "emit a named figure sweep as CSV");
  sweep_cmd->add_option("--figure", sweep_args.figure, "1: densities, 2: uncertainty vs coupling, "
                                                       "3: entropies alpha=1, 4: entropies alpha=2")
      ->required()
      ->check(CLI::Range(1, 4));
  sweep_cmd->add_option("--sigma", sweep_args.sigmas, "scale(s); repeatable");
  sweep_cmd->add_option("--kappa-step", sweep_args.kappa_step, "coupling grid step (figures 3, 4)");
  sweep_cmd->add_option("--kappa-max", sweep_args.kappa_max, "coupling grid end (figures 3, 4)");
  sweep_cmd->add_option("--output", sweep_args.output, "output CSV path");

  std::string verify_suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  verify_cmd->add_option("--suite", verify_suite,
                         "algebra|theorem1|lemma1|lemma2|closedforms|superstat|all");

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "draw samples from a coupled family");
  sample_cmd->add_option("--alpha", sample_args.alpha, "1 or 2")->required();
  sample_cmd->add_option("--kappa", sample_args.kappa, "coupling")->required();
  sample_cmd->add_option("--sigma", sample_args.sigma, "scale");
  sample_cmd->add_option("--mu", sample_args.mu, "location");
  sample_cmd->add_option("--n", sample_args.n, "sample count")->required();
  sample_cmd->add_option("--seed", sample_args.seed, "64-bit seed");
  sample_cmd->add_option("--output", sample_args.output, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (entropy_cmd->parsed()) return run_entropy(entropy_args);
  if (sweep_cmd->parsed()) return run_sweep(sweep_args);
  if (verify_cmd->parsed()) return run_verify(verify_suite);
  if (sample_cmd->parsed()) return run_sample(sample_args);
  return kExitInputError;
}
