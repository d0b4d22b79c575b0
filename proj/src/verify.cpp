#include "finsler3/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "finsler3/core_algebra.hpp"
#include "finsler3/duffin_kemmer.hpp"
#include "finsler3/isometry.hpp"
#include "finsler3/sampling.hpp"

namespace finsler3 {
namespace {

using Outcome = std::optional<Json>;

template <class R>
bool reals_match(const R& a, const R& b) {
  if constexpr (is_exact_v<R>) {
    return a == b;
  } else {
    return std::abs(a - b) <= 1e-10 * std::max({1.0, std::abs(a), std::abs(b)});
  }
}

template <class R>
NineVector<R> sample_vector(Sampler& rng, const CampaignConfig& cfg) {
  if constexpr (is_exact_v<R>) {
    return rng.integer_vector<R>(cfg.bound);
  } else {
    return rng.float_vector();
  }
}

template <class S>
SpinorMap<S> sample_sl3(Sampler& rng) {
  if constexpr (is_exact_v<S>) {
    return rng.transvection_product<S>(4, 2);
  } else {
    return rng.float_sl3();
  }
}

template <class S>
Matrix2<S> sample_sl2(Sampler& rng) {
  if constexpr (is_exact_v<S>) {
    return rng.exact_sl2(3);
  } else {
    return rng.float_sl2();
  }
}

template <class R>
Outcome trace_duality_pair(int a, int b) {
  using S = ComplexOf<R>;
  const auto& basis = lambda_basis<S>();
  const S tr = (basis.upper[a] * basis.lower[b]).trace();
  const S expected(a == b ? 2 : 0);
  if (approx_equal<S>(tr, expected)) return std::nullopt;
  return Json{{"A", a}, {"B", b}, {"trace", encode(tr)}, {"expected", encode(expected)}};
}

template <class R>
Outcome cubic_invariance_trial(Sampler& rng, const CampaignConfig& cfg) {
  using S = ComplexOf<R>;
  const SpinorMap<S> d = sample_sl3<S>(rng);
  const NineVector<R> x = sample_vector<R>(rng, cfg);
  const NineVector<R> image = induced_matrix(d) * x;
  const R before = length_cubed(x);
  const R after = length_cubed(image);
  const R det = real(herm_from_components(x).determinant());
  if (reals_match(before, after) && reals_match(before, det)) return std::nullopt;
  return Json{{"D", encode(d)}, {"X", encode(x)}, {"length_cubed", encode(before)},
              {"length_cubed_image", encode(after)}, {"det", encode(det)}};
}

template <class R>
Outcome sl2_blocks_trial(Sampler& rng, const CampaignConfig&) {
  using S = ComplexOf<R>;
  const Matrix2<S> d = sample_sl2<S>(rng);
  const auto tables = sl2_block_tables(d);
  const NineMap<R> l = induced_matrix(embed_sl2(d));
  bool ok = matrices_match(tables.lorentz, l.template block<4, 4>(0, 0), 1e-12) &&
            matrices_match(tables.majorana, l.template block<4, 4>(4, 4), 1e-12);
  NineMap<R> off_block = l;
  off_block.template block<4, 4>(0, 0).setZero();
  off_block.template block<4, 4>(4, 4).setZero();
  off_block(8, 8) -= R(1);
  ok = ok && matrices_match(off_block, NineMap<R>::Zero(), 1e-12);
  if (ok) return std::nullopt;
  return Json{{"d", encode(d)}, {"lorentz_table", encode(tables.lorentz)},
              {"majorana_table", encode(tables.majorana)}, {"induced", encode(l)}};
}

template <class R>
Outcome clifford_relations() {
  using S = ComplexOf<R>;
  const auto& gamma = majorana_gammas<S>();
  const Matrix4<R> g = minkowski_metric<R>();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4<S> anti = gamma[mu] * gamma[nu] + gamma[nu] * gamma[mu];
      const Matrix4<S> expected = Matrix4<S>::Identity() * S(R(2) * g(mu, nu));
      if (!matrices_match(anti, expected, 1e-12))
        return Json{{"mu", mu}, {"nu", nu}, {"anticommutator", encode(anti)}};
    }
  return std::nullopt;
}

template <class R>
Outcome reduction_4d_trial(Sampler& rng, const CampaignConfig& cfg) {
  const NineVector<R> x = sample_vector<R>(rng, cfg);
  const R nine = length_cubed(x);
  const R four = length_cubed_4d(reduce(x));
  if (reals_match(nine, four) && reduce(x).concatenate() == x) return std::nullopt;
  return Json{{"X", encode(x)}, {"length_cubed", encode(nine)}, {"length_cubed_4d", encode(four)}};
}

template <class R>
Outcome quartic_trial(Sampler& rng, const CampaignConfig& cfg) {
  const Momentum9<R> p = sample_vector<R>(rng, cfg);
  const bool linear = matrices_match(assemble_phat(p), combine_deltas(p));
  if (linear && quartic_identity_check(p)) return std::nullopt;
  return Json{{"P", encode(p)}, {"linearization", linear}, {"det", encode(length_cubed(p))}};
}

/// Exact: v == 0. Float: max|v| <= 1e-10 * scale, where scale bounds the
/// magnitude of the terms that were summed to produce v.
template <class Derived>
bool negligible(const Eigen::MatrixBase<Derived>& v, double scale) {
  using S = typename Derived::Scalar;
  if constexpr (is_exact_v<S>) {
    return v.isZero();
  } else {
    return v.cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, scale);
  }
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& v) {
  double out = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) out = std::max(out, std::abs(to_float(typename Derived::Scalar(v(k)))));
  return out;
}

template <class R>
Outcome equivalence_trial(Sampler& rng, const CampaignConfig& cfg) {
  using S = ComplexOf<R>;
  const long mass_num = rng.integer(1, 3);
  const Momentum9<Rational> exact_p = rng.on_shell_momentum(Rational(mass_num), 3);
  Momentum9<R> p;
  for (int a = 0; a < 9; ++a) p(a) = real_cast<S>(exact_p(a));
  const MassShell<R> mass{R(mass_num)};
  const double p_norm = 1.0 + max_abs(p.template cast<S>()) + to_double(mass.value());

  // Linear -> quadratic: every kernel column restricts to a solution.
  const auto basis = solve(p, mass);
  bool ok = !basis.empty();
  for (const auto& psi : basis) {
    const double size = p_norm * p_norm * std::max(1.0, max_abs(psi));
    const auto [up, low] = wave_equation_residual(p, mass, upper_spinor(psi), lower_spinor(psi));
    const XiVector<S> xi_gap = xi_part(psi) - xi_variables(p, upper_spinor(psi), mass);
    ok = ok && negligible(up, size) && negligible(low, size) && negligible(xi_gap, size);
  }

  // Quadratic -> linear: on shell any beta with i = P beta / M solves the pair.
  const Spinor3<S> beta = rng.integer_spinor<S>(cfg.bound);
  const Spinor3<S> i = herm_from_components(p) * beta / S(mass.value());
  const double size = p_norm * p_norm * p_norm * static_cast<double>(cfg.bound);
  const auto [up, low] = wave_equation_residual(p, mass, i, beta);
  const TwelveColumn<S> psi = expand_to_twelve(p, mass, i, beta);
  ok = ok && negligible(up, size) && negligible(low, size) && negligible(twelve_residual(p, mass, psi), size);
  if (ok) return std::nullopt;
  return Json{{"P", encode(p)}, {"mass", encode(mass.value())}, {"beta", encode(beta)},
              {"kernel_dimension", basis.size()}};
}

using Trial = std::function<Outcome(Sampler&, const CampaignConfig&)>;

CampaignResult run_trials(const std::string& name, const CampaignConfig& cfg, const Trial& trial) {
  CampaignResult result{name, cfg.backend, 0, 0, std::nullopt};
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Sampler rng(cfg.seed, t);
    ++result.total;
    if (auto bad = trial(rng, cfg)) {
      (*bad)["trial"] = t;
      (*bad)["seed"] = cfg.seed;
      result.counterexample = std::move(bad);
      return result;
    }
    ++result.passed;
  }
  return result;
}

template <class R>
CampaignResult run_backend(const std::string& identity, const CampaignConfig& cfg) {
  if (identity == "trace-duality") {
    CampaignResult result{identity, cfg.backend, 0, 0, std::nullopt};
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b) {
        ++result.total;
        if (auto bad = trace_duality_pair<R>(a, b)) {
          result.counterexample = std::move(bad);
          return result;
        }
        ++result.passed;
      }
    return result;
  }
  if (identity == "cubic-invariance") return run_trials(identity, cfg, cubic_invariance_trial<R>);
  if (identity == "sl2-blocks") return run_trials(identity, cfg, sl2_blocks_trial<R>);
  if (identity == "reduction-4d") {
    CampaignResult result = run_trials(identity, cfg, reduction_4d_trial<R>);
    if (!result.ok()) return result;
    ++result.total;
    if (auto bad = clifford_relations<R>()) {
      result.counterexample = std::move(bad);
      return result;
    }
    ++result.passed;
    return result;
  }
  if (identity == "quartic") return run_trials(identity, cfg, quartic_trial<R>);
  if (identity == "equivalence-4-20") return run_trials(identity, cfg, equivalence_trial<R>);
  throw std::invalid_argument("unknown identity '" + identity + "'");
}

CampaignResult run_symmetrized() {
  // Finite index space; always exact regardless of the requested backend.
  CampaignResult result{"symmetrized", Backend::Exact, 0, 0, std::nullopt};
  for (int a = 0; a < 9; ++a)
    for (int b = a; b < 9; ++b)
      for (int c = b; c < 9; ++c)
        for (int d = c; d < 9; ++d) {
          ++result.total;
          if (!symmetrized_relation_check(a, b, c, d)) {
            result.counterexample = Json{{"A", a}, {"B", b}, {"C", c}, {"D", d},
                                         {"lhs", encode(symmetrized_product(a, b, c, d))},
                                         {"rhs", encode(symmetrized_rhs(a, b, c, d))}};
            return result;
          }
          ++result.passed;
        }
  return result;
}

}  // namespace

std::string to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = {"trace-duality", "cubic-invariance", "sl2-blocks", "reduction-4d",
                                                 "quartic",       "symmetrized",      "equivalence-4-20"};
  return names;
}

CampaignResult run_campaign(const std::string& identity, const CampaignConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (identity == "symmetrized") return run_symmetrized();
  if (cfg.backend == Backend::Exact) return run_backend<Rational>(identity, cfg);
  return run_backend<double>(identity, cfg);
}

}  // namespace finsler3
