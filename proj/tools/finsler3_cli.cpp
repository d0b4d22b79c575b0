// finsler3: lengths, identity campaigns, delta-matrix export, equation
// solving and dimensional-reduction reports.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finsler3/core_algebra.hpp"
#include "finsler3/duffin_kemmer.hpp"
#include "finsler3/isometry.hpp"
#include "finsler3/json_io.hpp"
#include "finsler3/sampling.hpp"
#include "finsler3/verify.hpp"

namespace {

using namespace finsler3;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::string backend = "exact";
  std::string output;
  long bound = 9;
  bool timing = false;
};

/// Command name, echoed inputs, one entry per check, and result payload.
class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& inputs() { return doc_["inputs"]; }
  Json& result() { return doc_["result"]; }

  void check(const std::string& name, bool passed, const Json& counterexample = nullptr) {
    Json entry{{"name", name}, {"passed", passed}};
    if (!passed) entry["counterexample"] = counterexample.is_null() ? doc_["inputs"] : counterexample;
    doc_["checks"].push_back(std::move(entry));
    all_passed_ = all_passed_ && passed;
  }

  int emit(const GlobalOptions& opts, std::chrono::steady_clock::time_point start) {
    doc_["passed"] = all_passed_;
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (opts.timing) doc_["timing_ms"] = ms;
    if (opts.format == "json") {
      std::cout << doc_.dump(2) << '\n';
    } else {
      print_text(ms);
    }
    return all_passed_ ? kExitPass : kExitFail;
  }

 private:
  void print_text(double ms) const {
    std::cout << doc_["command"].get<std::string>() << '\n';
    if (doc_.contains("inputs")) std::cout << "  inputs: " << doc_["inputs"].dump() << '\n';
    if (doc_.contains("result"))
      for (const auto& [key, value] : doc_["result"].items()) {
        if (key == "basis") {
          std::cout << "  basis:\n";
          for (const auto& col : value) std::cout << "    " << col.dump() << '\n';
        } else {
          std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
      }
    if (doc_.contains("checks"))
      for (const auto& c : doc_["checks"]) {
        std::cout << "  [" << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>();
        if (c.contains("detail")) std::cout << "  " << c["detail"].get<std::string>();
        std::cout << '\n';
        if (c.contains("counterexample")) std::cout << "    counterexample: " << c["counterexample"].dump() << '\n';
      }
    std::cout << "  time: " << ms << " ms\n";
  }

  Json doc_;
  bool all_passed_ = true;
};

Backend parse_backend(const std::string& s) { return s == "float" ? Backend::Float : Backend::Exact; }

std::vector<Rational> parse_numbers(const std::vector<std::string>& raw, std::size_t expected, const char* what) {
  if (raw.size() != expected)
    throw UsageError(std::string(what) + ": expected " + std::to_string(expected) + " values, got " +
                     std::to_string(raw.size()));
  std::vector<Rational> out;
  for (const auto& s : raw) {
    try {
      out.push_back(parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(what) + ": " + e.what());
    }
  }
  return out;
}

template <class R>
NineVector<R> nine_from(const std::vector<Rational>& v) {
  NineVector<R> x;
  for (int a = 0; a < 9; ++a) x(a) = real_cast<ComplexOf<R>>(v[static_cast<std::size_t>(a)]);
  return x;
}

template <class R>
R positive_mass(const std::string& raw) {
  Rational m;
  try {
    m = parse_rational(raw);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--mass: ") + e.what());
  }
  if (m <= 0) throw UsageError("--mass must be positive");
  return real_cast<ComplexOf<R>>(m);
}

template <class R>
void fill_length(Report& rep, const std::vector<Rational>& raw) {
  const NineVector<R> x = nine_from<R>(raw);
  const R cubed = length_cubed(x);
  const R det = real(herm_from_components(x).determinant());
  rep.result()["length_cubed"] = encode(cubed);
  rep.result()["length"] = length(x);
  rep.result()["det"] = encode(det);
  bool agree;
  if constexpr (is_exact_v<R>) {
    agree = cubed == det;
  } else {
    agree = std::abs(cubed - det) <= 1e-10 * std::max(1.0, std::abs(det));
  }
  rep.check("determinant-cross-check", agree);
}

int cmd_length(const GlobalOptions& opts, const std::vector<std::string>& xs) {
  const auto start = std::chrono::steady_clock::now();
  const auto raw = parse_numbers(xs, 9, "--x");
  Report rep("length");
  rep.inputs() = {{"x", xs}, {"backend", opts.backend}};
  if (parse_backend(opts.backend) == Backend::Exact) {
    fill_length<Rational>(rep, raw);
  } else {
    fill_length<double>(rep, raw);
  }
  return rep.emit(opts, start);
}

int cmd_verify(const GlobalOptions& opts, const std::string& identity) {
  const auto start = std::chrono::steady_clock::now();
  CampaignConfig cfg;
  cfg.trials = opts.trials;
  cfg.seed = opts.seed;
  cfg.backend = parse_backend(opts.backend);
  cfg.bound = opts.bound;
  CampaignResult res;
  try {
    res = run_campaign(identity, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Report rep("verify");
  rep.inputs() = {{"identity", identity}, {"trials", opts.trials}, {"seed", opts.seed},
                  {"backend", to_string(res.backend)}, {"bound", opts.bound}};
  rep.result() = {{"passed", res.passed}, {"total", res.total}};
  rep.check(identity, res.ok(), res.counterexample.value_or(Json(nullptr)));
  return rep.emit(opts, start);
}

int cmd_delta(const GlobalOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::string path = opts.output.empty() ? "delta_matrices.json" : opts.output;
  const Json dump = delta_dump();
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << dump.dump(2) << '\n';
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
  }

  Report rep("delta");
  rep.inputs() = {{"output", path}, {"seed", opts.seed}};
  rep.result() = {{"matrices", 9}, {"rows", 12}, {"cols", 12}};

  // Check the file as written, not the in-memory family.
  std::ifstream in(path);
  const auto deltas = parse_delta_dump(Json::parse(in));
  bool entries_ok = true;
  for (const auto& d : deltas)
    for (int r = 0; r < 12; ++r)
      for (int c = 0; c < 12; ++c) {
        const auto& z = d(r, c);
        const bool unit = (abs2(z) == 1 && (z.real().is_zero() || z.imag().is_zero()));
        entries_ok = entries_ok && (z.is_zero() || unit);
      }
  rep.check("entries-in-{0,+-1,+-i}", entries_ok);

  Json bad = nullptr;
  constexpr int kReconstructionTrials = 100;
  for (int t = 0; t < kReconstructionTrials && bad.is_null(); ++t) {
    Sampler rng(opts.seed, static_cast<std::uint64_t>(t));
    const auto p = rng.integer_vector<Rational>(opts.bound);
    PhatMatrix<GaussianRational> sum = PhatMatrix<GaussianRational>::Zero();
    for (int a = 0; a < 9; ++a) sum += deltas[static_cast<std::size_t>(a)] * GaussianRational(p(a));
    if (sum != assemble_phat(p)) bad = Json{{"P", encode(p)}, {"trial", t}};
  }
  rep.check("reconstruction-100-momenta", bad.is_null(), bad);
  return rep.emit(opts, start);
}

template <class R>
void fill_solve(Report& rep, const std::vector<Rational>& raw, const std::string& mass_raw) {
  const Momentum9<R> p = nine_from<R>(raw);
  const MassShell<R> mass(positive_mass<R>(mass_raw));
  Json doc = solver_document(p, mass);
  const bool on_shell = doc["on_shell"].get<bool>();
  const std::size_t dim = doc["kernel_dimension"].get<std::size_t>();
  const double residual = doc["residual_max_abs"].get<double>();
  rep.result() = doc;
  rep.check("residual", is_exact_v<R> ? residual == 0.0 : residual <= 1e-9);
  rep.check("nonempty-iff-on-shell", on_shell == (dim > 0));
}

int cmd_solve(const GlobalOptions& opts, const std::vector<std::string>& momentum, const std::string& mass) {
  const auto start = std::chrono::steady_clock::now();
  const auto raw = parse_numbers(momentum, 9, "--momentum");
  Report rep("solve");
  rep.inputs() = {{"momentum", momentum}, {"mass", mass}, {"backend", opts.backend}};
  if (parse_backend(opts.backend) == Backend::Exact) {
    fill_solve<Rational>(rep, raw, mass);
  } else {
    fill_solve<double>(rep, raw, mass);
  }
  return rep.emit(opts, start);
}

template <class R>
void fill_reduce(Report& rep, const std::vector<Rational>& raw, const std::string& mass_raw) {
  Vector4<R> p;
  for (int k = 0; k < 4; ++k) p(k) = real_cast<ComplexOf<R>>(raw[static_cast<std::size_t>(k)]);
  const MassShell<R> mass(positive_mass<R>(mass_raw));
  const auto r = reduce_equation(p, mass);
  rep.result() = {{"momentum", encode(r.momentum)},
                  {"interval", encode(r.interval)},
                  {"mass_squared", encode(R(r.mass * r.mass))},
                  {"on_shell", r.on_shell},
                  {"dirac_solutions", r.dirac_dimension},
                  {"klein_gordon_solutions", r.scalar_dimension},
                  {"kernel_dimension", r.kernel_dimension}};
  rep.check("block-diagonal-momentum", r.block_diagonal);
  rep.check("decoupled", r.decoupled);
  rep.check("dirac-pair-system", r.dirac_block_matches);
  rep.check("klein-gordon-scalar", r.scalar_block_matches);
  rep.check("kernel-splits-4d", r.consistent);
}

int cmd_reduce(const GlobalOptions& opts, const std::vector<std::string>& p, const std::string& mass) {
  const auto start = std::chrono::steady_clock::now();
  const auto raw = parse_numbers(p, 4, "--p");
  Report rep("reduce");
  rep.inputs() = {{"p", p}, {"mass", mass}, {"backend", opts.backend}};
  if (parse_backend(opts.backend) == Backend::Exact) {
    fill_reduce<Rational>(rep, raw, mass);
  } else {
    fill_reduce<double>(rep, raw, mass);
  }
  return rep.emit(opts, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic-form algebra on 3x3 Hermitian matrices and a 12-component wave equation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "Campaign seed");
  app.add_option("--trials", opts.trials, "Number of randomized trials")->check(CLI::PositiveNumber);
  app.add_option("--backend", opts.backend, "Scalar backend")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--output", opts.output, "Output path (delta)");
  app.add_option("--bound", opts.bound, "Integer entries are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
  app.add_flag("--timing", opts.timing, "Include wall-clock timing in JSON reports");

  std::vector<std::string> x;
  auto* length = app.add_subcommand("length", "Cubic length |X|^3 and |X| of a 9-vector");
  length->add_option("--x", x, "Nine components X^0..X^8")->required()->expected(9);

  std::string identity;
  auto* verify = app.add_subcommand("verify", "Run an identity-verification campaign");
  verify->add_option("identity", identity, "Identity to verify")->required();

  app.add_subcommand("delta", "Write the nine 12x12 delta matrices as JSON");

  std::vector<std::string> momentum;
  std::string mass;
  auto* solve_cmd = app.add_subcommand("solve", "Kernel of P^A delta_A - M");
  solve_cmd->add_option("--momentum", momentum, "Nine momentum components P^0..P^8")->required()->expected(9);
  solve_cmd->add_option("--mass", mass, "Positive mass M")->required();

  std::vector<std::string> four;
  std::string reduce_mass;
  auto* reduce_cmd = app.add_subcommand("reduce", "Dirac / Klein-Gordon splitting at P^{3+i} = 0, P^8 = M");
  reduce_cmd->add_option("--p", four, "Four-momentum p^0..p^3")->required()->expected(4);
  reduce_cmd->add_option("--mass", reduce_mass, "Positive mass M")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*length) return cmd_length(opts, x);
    if (*verify) return cmd_verify(opts, identity);
    if (app.got_subcommand("delta")) return cmd_delta(opts);
    if (*solve_cmd) return cmd_solve(opts, momentum, mass);
    if (*reduce_cmd) return cmd_reduce(opts, four, reduce_mass);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
