// micpovm: build, check and exercise informationally complete POVMs.
//
// Exit status: 0 ok, 1 verification failed, 2 usage or construction error.
// Errors are reported on stderr as {"error": <name>, "message": <text>}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "micpovm/coherent.hpp"
#include "micpovm/error.hpp"
#include "micpovm/frame.hpp"
#include "micpovm/json_io.hpp"
#include "micpovm/povm.hpp"
#include "micpovm/random.hpp"
#include "micpovm/tolerances.hpp"
#include "micpovm/tomography.hpp"

using namespace micpovm;
using json::Json;

namespace {

struct Config {
  std::string tol_profile;
  std::optional<double> tol;

  std::string method = "random-coherent";
  int dim = 2;
  std::uint64_t seed = 0;
  std::string mode = "extremal";
  std::string side = "primal";
  std::string directions;
  std::string input;
  std::string out;

  std::string povm;
  std::string state;
  bool random_state = false;
  std::optional<int> rank;
  bool exact = false;
  std::optional<long long> shots;
  long long samples = 1000000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load(const std::string& path) { return json::parse(read_file(path)); }

void emit(const Json& j, const std::string& out) {
  const std::string text = json::dump(j) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::MalformedInput, "cannot write " + out);
  f << text;
}

void require_qubit(const Config& c) {
  if (c.dim != 2) {
    throw Error(ErrorKind::DimensionUnsupported, "method " + c.method + " is defined for --dim 2 only");
  }
}

std::vector<Direction> seeded_or_given_directions(const Config& c, int count) {
  if (!c.directions.empty()) return json::to_directions(load(c.directions));
  return sample_directions(count, c.seed);
}

// Frame operators for the EVR methods: --input operators, else coherent
// projectors along --directions or seeded random directions.
std::vector<HermitianOperator> frame_operators(const Config& c, const Tolerances& tol, PovmMeta& meta) {
  if (!c.input.empty()) return json::to_operators(load(c.input), tol);
  const auto dirs = seeded_or_given_directions(c, c.dim * c.dim);
  if (c.directions.empty()) meta.seed = c.seed;
  meta.directions = dirs;
  return coherent_projectors(dirs, c.dim);
}

Povm generate(const Config& c, const Tolerances& tol) {
  if (c.dim < 2) throw Error(ErrorKind::DimensionUnsupported, "--dim must be at least 2");
  const std::string& m = c.method;
  Povm p;
  PovmMeta extra;
  if (m == "tetrahedral") {
    require_qubit(c);
    p = preset_tetrahedral();
  } else if (m == "generic-qubit") {
    require_qubit(c);
    if (c.directions.empty()) {
      p = preset_generic_qubit(Direction(1, 0, 0), Direction(0, 1, 0), Direction(0, 0, 1));
    } else {
      const auto d = json::to_directions(load(c.directions));
      if (d.size() != 3) throw Error(ErrorKind::MalformedInput, "generic-qubit needs exactly 3 directions");
      p = preset_generic_qubit(d[0], d[1], d[2]);
    }
  } else if (m == "discrimination") {
    require_qubit(c);
    p = preset_discrimination();
  } else if (m == "random-coherent") {
    const auto dirs = sample_directions(c.dim * c.dim, c.seed);
    p = evr_primal_construct(coherent_frame(dirs, c.dim, tol), tol);
    extra.seed = c.seed;
    extra.directions = dirs;
  } else if (m == "cfs") {
    auto ops = frame_operators(c, tol, extra);
    p = cfs_construct(std::move(ops), std::nullopt, tol);
  } else if (m == "evr-primal" || m == "evr-dual") {
    auto ops = frame_operators(c, tol, extra);
    const OperatorFrame f = build_frame(std::move(ops), tol);
    p = m == "evr-primal" ? evr_primal_construct(f, tol) : evr_dual_construct(f, tol);
  } else if (m == "general") {
    std::vector<HermitianOperator> k;
    if (!c.input.empty()) {
      k = json::to_operators(load(c.input), tol);
    } else {
      Rng rng(c.seed);
      for (int n = 0; n < c.dim * c.dim; ++n) {
        ComplexMatrix g(c.dim, c.dim);
        for (int i = 0; i < c.dim; ++i)
          for (int j = 0; j < c.dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
        k.emplace_back(ComplexMatrix(0.5 * (g + g.adjoint())), tol);
      }
      extra.seed = c.seed;
    }
    p = general_construct(std::move(k), parse_mode(c.mode), parse_side(c.side), tol);
  } else {
    throw Error(ErrorKind::MalformedInput, "unknown method " + m);
  }
  if (!p.meta.seed) p.meta.seed = extra.seed;
  if (!p.meta.directions) p.meta.directions = extra.directions;
  p.meta.method = m;
  return p;
}

int cmd_generate(const Config& c, const Tolerances& tol) {
  emit(json::from_povm(generate(c, tol)), c.out);
  return 0;
}

int cmd_verify(const Config& c, const Tolerances& tol) {
  const Povm p = json::to_povm(load(c.povm), tol);
  const double t = c.tol.value_or(tol.verify);
  const PovmReport r = verify(p, t, tol);
  emit(json::from_report(r), c.out);
  return r.complete && r.positive ? 0 : 1;
}

int cmd_dual(const Config& c, const Tolerances& tol) {
  const Json j = load(c.input);
  std::vector<HermitianOperator> ops;
  if (j.is_object() && j.contains("elements")) {
    ops = json::to_povm(j, tol).elements;
  } else {
    ops = json::to_operators(j, tol);
  }
  emit(json::from_frame(build_frame(std::move(ops), tol)), c.out);
  return 0;
}

int cmd_tomo(const Config& c, const Tolerances& tol) {
  Povm p = json::to_povm(load(c.povm), tol);
  if (!p.duals) attach_duals(p, tol);
  if (!p.duals) throw Error(ErrorKind::MissingDuals, "POVM has no duals and is not a basis of d^2 operators");

  std::optional<DensityMatrix> rho;
  if (c.random_state) {
    rho = random_density(p.dim, c.rank, c.seed);
  } else if (!c.state.empty()) {
    rho = json::to_state(load(c.state), tol);
  } else {
    throw Error(ErrorKind::MalformedInput, "tomo needs --state FILE or --random-state");
  }
  if (c.exact && c.shots) throw Error(ErrorKind::MalformedInput, "--exact and --shots are exclusive");
  if (!c.exact && !c.shots) throw Error(ErrorKind::MalformedInput, "tomo needs --exact or --shots N");

  const TomographyResult r = run_tomography(*rho, p, c.exact ? std::nullopt : c.shots, c.seed, tol);
  Json out = json::from_result(r);
  if (c.random_state) out["seed"] = c.seed;
  emit(out, c.out);
  return 0;
}

int cmd_check_identity(const Config& c) {
  const double residual = resolution_of_identity_mc(c.dim, c.samples, c.seed);
  Json j = Json::object();
  j["dim"] = c.dim;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["residual"] = residual;
  emit(j, c.out);
  return 0;
}

void report_error(std::string_view name, const std::string& message) {
  Json j = Json::object();
  j["error"] = std::string(name);
  j["message"] = message;
  std::cerr << json::dump(j, -1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Construct, verify and exercise informationally complete POVMs"};
  app.require_subcommand(1);
  app.add_option("--tol-profile", c.tol_profile, "Tolerance profile: default, strict or loose");

  auto* gen = app.add_subcommand("generate", "Build a POVM and write it as JSON");
  gen->add_option("--method", c.method, "random-coherent | tetrahedral | generic-qubit | cfs | evr-primal | evr-dual | "
                                        "general | discrimination")
      ->check(CLI::IsMember({"random-coherent", "tetrahedral", "generic-qubit", "cfs", "evr-primal", "evr-dual",
                             "general", "discrimination"}));
  gen->add_option("--dim", c.dim, "Hilbert space dimension");
  gen->add_option("--seed", c.seed, "Random seed");
  gen->add_option("--mode", c.mode, "Normalization for general: extremal | closed_form");
  gen->add_option("--side", c.side, "Frame side for general: primal | dual");
  gen->add_option("--directions", c.directions, "Directions JSON file");
  gen->add_option("--input", c.input, "Operators JSON file");
  gen->add_option("--out", c.out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Check completeness, positivity, IC and SIC properties");
  ver->add_option("povm,--povm", c.povm, "POVM JSON file")->required();
  ver->add_option("--tol", c.tol, "Verification tolerance");
  ver->add_option("--out", c.out, "Output file (default stdout)");

  auto* dual = app.add_subcommand("dual", "Compute Gram matrix and dual frame of d^2 operators");
  dual->add_option("input,--input", c.input, "Operators or POVM JSON file")->required();
  dual->add_option("--out", c.out, "Output file (default stdout)");

  auto* tomo = app.add_subcommand("tomo", "Simulate measurement and linear-inversion reconstruction");
  tomo->add_option("--povm", c.povm, "POVM JSON file")->required();
  auto* state_opt = tomo->add_option("--state", c.state, "State JSON file");
  auto* random_opt = tomo->add_flag("--random-state", c.random_state, "Use a seeded random density matrix");
  state_opt->excludes(random_opt);
  tomo->add_option("--rank", c.rank, "Rank of the random state");
  tomo->add_option("--seed", c.seed, "Random seed");
  tomo->add_flag("--exact", c.exact, "Use exact probabilities");
  tomo->add_option("--shots", c.shots, "Number of simulated shots");
  tomo->add_option("--out", c.out, "Output file (default stdout)");

  auto* chk = app.add_subcommand("check-identity", "Monte Carlo resolution of identity by coherent states");
  chk->add_option("--dim", c.dim, "Hilbert space dimension");
  chk->add_option("--samples", c.samples, "Number of sampled directions");
  chk->add_option("--seed", c.seed, "Random seed");
  chk->add_option("--out", c.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return 2;
  }

  try {
    const Tolerances tol = c.tol_profile.empty() ? Tolerances::from_environment() : Tolerances::profile(c.tol_profile);
    if (*gen) return cmd_generate(c, tol);
    if (*ver) return cmd_verify(c, tol);
    if (*dual) return cmd_dual(c, tol);
    if (*tomo) return cmd_tomo(c, tol);
    if (*chk) return cmd_check_identity(c);
  } catch (const Error& e) {
    report_error(e.name(), e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error("NumericalError", e.what());
    return 2;
  }
  return 2;
}
