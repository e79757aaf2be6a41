// mpschain CLI: validate families, evaluate the limit state, emit reduced
// density matrices and entropies, and spot-check the double-trace identity.
// Output is JSON on stdout; exit codes are 0 (pass/success), 1 (computed
// failure), 2 (input error).

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "mpschain/json_io.hpp"
#include "mpschain/models.hpp"
#include "mpschain/random.hpp"

namespace {

using namespace mpschain;

struct GlobalOptions {
  double tol = kDefaultResidualTol;
  std::size_t cap = kDefaultAmplitudeCap;
  bool pretty = false;
};

void emit(const Json& j, const GlobalOptions& opts) {
  std::cout << dump_json(j, opts.pretty) << "\n";
}

int consistency_n_max(const MPSFamily& family) {
  return family.tail() == Tail::RepeatLast
             ? family.explicit_site_count() + 1
             : family.explicit_site_count() - 1;
}

// Runs both state-extension condition checks. A finite family with a
// single explicit site has no adjacent pair to check; that case reports a
// vacuous pass.
std::pair<bool, Json> run_validation(const MPSFamily& family, double tol) {
  const ConditionReport norm = check_normalization(family, tol);
  ConditionReport cons;
  const int n_max = consistency_n_max(family);
  if (n_max >= 1) {
    cons = check_consistency(family, n_max, tol);
  } else {
    cons.condition_name = "consistency";
    cons.pass = true;
    cons.tolerance = tol;
    cons.notes = "finite family with one site: no adjacent pairs to check";
  }
  const bool pass = norm.pass && cons.pass;
  Json j{{"pass", pass},
         {"reports", Json::array({to_json(norm), to_json(cons)})}};
  return {pass, j};
}

int cmd_validate(const std::string& family_path, const GlobalOptions& opts) {
  const MPSFamily family = family_from_json(load_json_file(family_path));
  const auto [pass, j] = run_validation(family, opts.tol);
  emit(j, opts);
  return pass ? 0 : 1;
}

int cmd_expect(const std::string& family_path,
               const std::string& observable_path, const std::string& method,
               bool timing, const GlobalOptions& opts) {
  const MPSFamily family = family_from_json(load_json_file(family_path));
  const LocalObservable x =
      observable_from_json(load_json_file(observable_path));

  if (method == "naive") {
    emit(to_json(evaluate_naive(family, x, opts.cap), timing), opts);
    return 0;
  }
  if (method == "transfer") {
    emit(to_json(evaluate_transfer(family, x), timing), opts);
    return 0;
  }
  const EvaluationReport naive = evaluate_naive(family, x, opts.cap);
  const EvaluationReport transfer = evaluate_transfer(family, x);
  const double discrepancy = std::abs(naive.value - transfer.value);
  emit(Json{{"naive", to_json(naive, timing)},
            {"transfer", to_json(transfer, timing)},
            {"discrepancy", discrepancy}},
       opts);
  return 0;
}

int cmd_rho(const std::string& family_path, int n_sites,
            const GlobalOptions& opts) {
  const MPSFamily family = family_from_json(load_json_file(family_path));
  if (!run_validation(family, opts.tol).first) {
    std::cerr << "warning: family fails the state-extension conditions; "
                 "rho may not describe a stable limit state\n";
  }
  const DensityMatrix rho =
      reduced_density_matrix(family, n_sites, opts.cap);
  emit(to_json(rho), opts);
  return 0;
}

int cmd_entropy(const std::string& family_path, int n_sites,
                const std::string& base, const GlobalOptions& opts) {
  const MPSFamily family = family_from_json(load_json_file(family_path));
  const DensityMatrix rho =
      reduced_density_matrix(family, n_sites, opts.cap);
  const EntropyBase b =
      base == "two" ? EntropyBase::Two : EntropyBase::Natural;
  emit(Json{{"n_sites", n_sites},
            {"base", base},
            {"entropy", von_neumann_entropy(rho, b)}},
       opts);
  return 0;
}

int cmd_identity_check(const std::string& family_path, int n, int k,
                       int samples, std::uint64_t seed,
                       const GlobalOptions& opts) {
  const MPSFamily family = family_from_json(load_json_file(family_path));
  Rng rng(seed);
  double max_abs = 0.0;
  double max_scaled = 0.0;
  for (int s = 0; s < samples; ++s) {
    const std::vector<int> left = random_tuple(rng, family.d(), n + k);
    const std::vector<int> right = random_tuple(rng, family.d(), n + k);
    const TraceIdentityCheck check =
        evaluate_trace_identity(family, n, k, left, right);
    max_abs = std::max(max_abs, check.deviation);
    max_scaled = std::max(max_scaled,
                          check.deviation / (1.0 + std::abs(check.lhs)));
  }
  const bool pass = max_scaled <= opts.tol;
  emit(Json{{"condition", "trace-identity"},
            {"n", n},
            {"k", k},
            {"samples", samples},
            {"seed", seed},
            {"tolerance", opts.tol},
            {"max_abs_deviation", max_abs},
            {"max_scaled_deviation", max_scaled},
            {"pass", pass}},
       opts);
  return pass ? 0 : 1;
}

int cmd_demo_ghz(const GlobalOptions& opts) {
  const MPSFamily ghz = ghz_family();
  Json doc;
  doc["family"] = to_json(ghz);
  doc["validation"] = run_validation(ghz, opts.tol).second;

  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;

  Json expectations = Json::array();
  for (const auto& [label, factor] :
       std::vector<std::pair<std::string, ComplexMatrix>>{{"Z", z},
                                                          {"X", x}}) {
    for (int n = 1; n <= 4; ++n) {
      const LocalObservable obs = LocalObservable::product(
          std::vector<ComplexMatrix>(static_cast<std::size_t>(n), factor));
      const Complex naive = evaluate_naive(ghz, obs, opts.cap).value;
      const Complex transfer = evaluate_transfer(ghz, obs).value;
      const Complex closed = ghz_expectation_closed_form(obs.factors());
      expectations.push_back(
          Json{{"observable", label + "^" + std::to_string(n)},
               {"n_sites", n},
               {"naive", Json::array({naive.real(), naive.imag()})},
               {"transfer", Json::array({transfer.real(), transfer.imag()})},
               {"closed_form", Json::array({closed.real(), closed.imag()})}});
    }
  }
  doc["expectations"] = expectations;

  Json rhos = Json::array();
  Json entropies = Json::array();
  for (int n = 2; n <= 4; ++n) {
    const DensityMatrix rho = reduced_density_matrix(ghz, n, opts.cap);
    rhos.push_back(to_json(rho));
    entropies.push_back(
        Json{{"n_sites", n},
             {"natural", von_neumann_entropy(rho, EntropyBase::Natural)},
             {"base_two", von_neumann_entropy(rho, EntropyBase::Two)}});
  }
  doc["density_matrices"] = rhos;
  doc["entropies"] = entropies;

  emit(doc, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Matrix product state families on spin chains: state-extension "
      "condition checks, expectation engines, reduced density matrices"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--tol", opts.tol, "Residual tolerance for checks");
  app.add_option("--cap", opts.cap, "Statevector amplitude cap");
  app.add_flag("--pretty", opts.pretty, "Indented JSON output");

  std::string family_path;
  std::string observable_path;
  std::string method = "both";
  std::string base = "natural";
  std::string demo_model;
  bool timing = false;
  int n_sites = 1;
  int ident_n = 1;
  int ident_k = 1;
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;

  CLI::App* validate =
      app.add_subcommand("validate", "Check both state-extension conditions");
  validate->add_option("family", family_path, "Family JSON file")->required();

  CLI::App* expect =
      app.add_subcommand("expect", "Evaluate the state on an observable");
  expect->add_option("family", family_path, "Family JSON file")->required();
  expect->add_option("observable", observable_path, "Observable JSON file")
      ->required();
  expect->add_option("--method", method, "naive | transfer | both")
      ->check(CLI::IsMember({"naive", "transfer", "both"}));
  expect->add_flag("--timing", timing, "Include elapsed_ms in reports");

  CLI::App* rho =
      app.add_subcommand("rho", "Reduced density matrix on sites [1, N]");
  rho->add_option("family", family_path, "Family JSON file")->required();
  rho->add_option("--n", n_sites, "Number of kept sites")->required();

  CLI::App* entropy =
      app.add_subcommand("entropy", "Von Neumann entropy of rho_[1,N]");
  entropy->add_option("family", family_path, "Family JSON file")->required();
  entropy->add_option("--n", n_sites, "Number of kept sites")->required();
  entropy->add_option("--base", base, "natural | two")
      ->check(CLI::IsMember({"natural", "two"}));

  CLI::App* ident = app.add_subcommand(
      "identity-check", "Sample the double-trace split identity");
  ident->add_option("family", family_path, "Family JSON file")->required();
  ident->add_option("--n", ident_n, "Split position")->required();
  ident->add_option("--k", ident_k, "Tail length")->required();
  ident->add_option("--samples", samples, "Number of sampled tuple pairs");
  ident->add_option("--seed", seed, "Sampling seed");

  CLI::App* demo = app.add_subcommand("demo", "Built-in model walkthrough");
  demo->add_option("model", demo_model, "Model name (ghz)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) {
      return cmd_validate(family_path, opts);
    }
    if (expect->parsed()) {
      return cmd_expect(family_path, observable_path, method, timing, opts);
    }
    if (rho->parsed()) {
      return cmd_rho(family_path, n_sites, opts);
    }
    if (entropy->parsed()) {
      return cmd_entropy(family_path, n_sites, base, opts);
    }
    if (ident->parsed()) {
      return cmd_identity_check(family_path, ident_n, ident_k, samples, seed,
                                opts);
    }
    if (demo->parsed()) {
      if (demo_model != "ghz") {
        std::cerr << "error: unknown demo model \"" << demo_model
                  << "\" (available: ghz)\n";
        return 2;
      }
      return cmd_demo_ghz(opts);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
