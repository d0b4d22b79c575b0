#pragma once

// Momentum-space wave equation of a free Finslerian 3-spinor particle.
//
//   P^{rs} beta_s = M i^r,   P_{rs} i^r = M^2 beta_s                   (quadratic form)
//   (P^A delta_A - M) Psi = 0,  Psi = (i, beta, xi_1..xi_6)            (linear form)
//
// P_{rs} is the cofactor matrix of P^{rs}, so that P^{rs} P_{ts} = det(P) delta^r_t.
// Under xi -> D xi with det D = 1 the momentum goes to D P D^+ and beta to
// (D^+)^{-1} beta: then P' beta' = D P beta, and adj(P') = (D^+)^{-1} adj(P) D^{-1},
// so both residuals transform covariantly.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "finsler3/core_algebra.hpp"
#include "finsler3/isometry.hpp"
#include "finsler3/nullspace.hpp"

namespace finsler3 {

template <class R>
using Momentum9 = NineVector<R>;
template <class S>
using TwelveColumn = Eigen::Matrix<S, 12, 1>;
template <class S>
using PhatMatrix = Eigen::Matrix<S, 12, 12>;
template <class S>
using XiVector = Eigen::Matrix<S, 6, 1>;

/// Positive mass M of the particle.
template <class R>
class MassShell {
 public:
  explicit MassShell(R mass) : mass_(std::move(mass)) {
    if (!(mass_ > R(0))) throw std::invalid_argument("MassShell: mass must be positive");
  }
  const R& value() const { return mass_; }

 private:
  R mass_;
};

/// C(r, s) = (-1)^{r+s} times the (r, s) minor.
template <class S>
Matrix3<S> cofactor_matrix(const Matrix3<S>& p) {
  Matrix3<S> c;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      const int s1 = (s + 1) % 3, s2 = (s + 2) % 3;
      // Cyclic index order absorbs the checkerboard sign.
      c(r, s) = p(r1, s1) * p(r2, s2) - p(r1, s2) * p(r2, s1);
    }
  return c;
}

template <class S>
Matrix3<S> inverse3(const Matrix3<S>& m) {
  const S det = m.determinant();
  if (is_zero<S>(det)) throw std::domain_error("inverse3: singular matrix");
  return cofactor_matrix(m).transpose() / det;
}

template <class S>
struct MomentumMatrix {
  Herm3<S> upper;       // P^{rs}
  Matrix3<S> cofactors;  // P_{rs}
  S det;                 // G_ABC P^A P^B P^C
};

template <class R>
MomentumMatrix<ComplexOf<R>> momentum_matrix(const Momentum9<R>& p) {
  using S = ComplexOf<R>;
  MomentumMatrix<S> m;
  m.upper = herm_from_components(p);
  m.cofactors = cofactor_matrix<S>(m.upper);
  m.det = S(length_cubed(p));
  return m;
}

/// (P beta - M i, P_{rs} i^r - M^2 beta); both vanish exactly on solutions.
template <class R>
std::pair<Spinor3<ComplexOf<R>>, Spinor3<ComplexOf<R>>> wave_equation_residual(
    const Momentum9<R>& p, const MassShell<R>& mass, const Spinor3<ComplexOf<R>>& i,
    const Spinor3<ComplexOf<R>>& beta) {
  using S = ComplexOf<R>;
  const auto m = momentum_matrix(p);
  const S mass_s(mass.value());
  return {m.upper * beta - mass_s * i, m.cofactors.transpose() * i - mass_s * mass_s * beta};
}

template <class R>
XiVector<ComplexOf<R>> xi_variables(const Momentum9<R>& p, const Spinor3<ComplexOf<R>>& i,
                                    const MassShell<R>& mass) {
  using S = ComplexOf<R>;
  const Herm3<S> m = herm_from_components(p);
  const S mass_s(mass.value());
  XiVector<S> xi;
  xi(0) = (m(1, 0) * i(0) - m(0, 0) * i(1)) / mass_s;
  xi(1) = (m(2, 0) * i(0) - m(0, 0) * i(2)) / mass_s;
  xi(2) = (m(2, 0) * i(1) - m(1, 0) * i(2)) / mass_s;
  xi(3) = (m(1, 1) * i(0) - m(0, 1) * i(1)) / mass_s;
  xi(4) = (m(2, 1) * i(0) - m(0, 1) * i(2)) / mass_s;
  xi(5) = (m(2, 1) * i(1) - m(1, 1) * i(2)) / mass_s;
  return xi;
}

/// The lower equation rewritten through the xi variables, minus M beta.
template <class R>
Spinor3<ComplexOf<R>> xi_equation_residual(const Momentum9<R>& p, const XiVector<ComplexOf<R>>& xi,
                                           const MassShell<R>& mass, const Spinor3<ComplexOf<R>>& beta) {
  using S = ComplexOf<R>;
  const Herm3<S> m = herm_from_components(p);
  const S mass_s(mass.value());
  Spinor3<S> out;
  out(0) = m(2, 2) * xi(3) - m(1, 2) * xi(4) + m(0, 2) * xi(5) - mass_s * beta(0);
  out(1) = -m(2, 2) * xi(0) + m(1, 2) * xi(1) - m(0, 2) * xi(2) - mass_s * beta(1);
  out(2) = -m(2, 0) * xi(3) + m(1, 0) * xi(4) - m(0, 0) * xi(5) - mass_s * beta(2);
  return out;
}

/// 12x12 block matrix with block rows [0 P 0 0; 0 0 P1 P2; P3 0 0 0; P4 0 0 0].
template <class R>
PhatMatrix<ComplexOf<R>> assemble_phat(const Momentum9<R>& p) {
  using S = ComplexOf<R>;
  const Herm3<S> m = herm_from_components(p);
  const S o(0);
  Matrix3<S> p1, p2, p3, p4;
  p1 << o, o, o,
        -m(2, 2), m(1, 2), -m(0, 2),
        o, o, o;
  p2 << m(2, 2), -m(1, 2), m(0, 2),
        o, o, o,
        -m(2, 0), m(1, 0), -m(0, 0);
  p3 << m(1, 0), -m(0, 0), o,
        m(2, 0), o, -m(0, 0),
        o, m(2, 0), -m(1, 0);
  p4 << m(1, 1), -m(0, 1), o,
        m(2, 1), o, -m(0, 1),
        o, m(2, 1), -m(1, 1);

  PhatMatrix<S> out = PhatMatrix<S>::Zero();
  out.template block<3, 3>(0, 3) = m;
  out.template block<3, 3>(3, 6) = p1;
  out.template block<3, 3>(3, 9) = p2;
  out.template block<3, 3>(6, 0) = p3;
  out.template block<3, 3>(9, 0) = p4;
  return out;
}

/// delta_A = assemble_phat(e_A); P-hat = P^A delta_A by linearity.
template <class S>
const std::array<PhatMatrix<S>, 9>& delta_family() {
  static const std::array<PhatMatrix<S>, 9> deltas = [] {
    std::array<PhatMatrix<S>, 9> out;
    for (int a = 0; a < 9; ++a) out[a] = assemble_phat<RealOf<S>>(Momentum9<RealOf<S>>::Unit(a));
    return out;
  }();
  return deltas;
}

/// P^A delta_A.
template <class R>
PhatMatrix<ComplexOf<R>> combine_deltas(const Momentum9<R>& p) {
  using S = ComplexOf<R>;
  const auto& deltas = delta_family<S>();
  PhatMatrix<S> out = PhatMatrix<S>::Zero();
  for (int a = 0; a < 9; ++a)
    if (p(a) != R(0)) out += deltas[a] * S(p(a));
  return out;
}

template <class S>
using SparsePhat = Eigen::SparseMatrix<S>;

template <class S>
SparsePhat<S> to_sparse(const PhatMatrix<S>& m) {
  SparsePhat<S> out(12, 12);
  std::vector<Eigen::Triplet<S>> entries;
  for (int c = 0; c < 12; ++c)
    for (int r = 0; r < 12; ++r)
      if (!is_zero<S>(m(r, c), 0.0)) entries.emplace_back(r, c, m(r, c));
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

/// Entrywise equality: exact, or |a - b| <= tol * max(1, max|b|) in floating point.
template <class A, class B>
bool matrices_match(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, double tol = 1e-10) {
  using S = typename A::Scalar;
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    const double scale = std::max(1.0, static_cast<double>(b.cwiseAbs().maxCoeff()));
    return static_cast<double>((a - b).cwiseAbs().maxCoeff()) <= tol * scale;
  }
}

/// P-hat^4 = det(P) P-hat.
template <class R>
bool quartic_identity_check(const Momentum9<R>& p) {
  using S = ComplexOf<R>;
  const SparsePhat<S> phat = to_sparse<S>(combine_deltas(p));
  const SparsePhat<S> square = phat * phat;
  const PhatMatrix<S> fourth = PhatMatrix<S>(square * square);
  const PhatMatrix<S> rhs = PhatMatrix<S>(phat) * S(length_cubed(p));
  return matrices_match(fourth, rhs);
}

/// Sum over all 24 orderings of delta_A delta_B delta_C delta_D (repeated
/// indices included, so orderings of equal indices are counted separately).
inline PhatMatrix<GaussianRational> symmetrized_product(int a, int b, int c, int d) {
  using S = GaussianRational;
  static const std::array<SparsePhat<S>, 9> sparse = [] {
    std::array<SparsePhat<S>, 9> out;
    for (int k = 0; k < 9; ++k) out[k] = to_sparse<S>(delta_family<S>()[k]);
    return out;
  }();
  const std::array<int, 4> idx = {a, b, c, d};
  for (int k : idx)
    if (k < 0 || k > 8) throw std::out_of_range("symmetrized_product: index out of range");
  std::array<int, 4> order = {0, 1, 2, 3};
  SparsePhat<S> sum(12, 12);
  do {
    SparsePhat<S> prod = sparse[idx[order[0]]] * sparse[idx[order[1]]];
    prod = prod * sparse[idx[order[2]]];
    prod = prod * sparse[idx[order[3]]];
    sum += prod;
  } while (std::next_permutation(order.begin(), order.end()));
  return PhatMatrix<S>(sum);
}

/// 6 {G_ABC delta_D + G_ABD delta_C + G_ACD delta_B + G_BCD delta_A}.
inline PhatMatrix<GaussianRational> symmetrized_rhs(int a, int b, int c, int d) {
  using S = GaussianRational;
  const auto& g = cubic_tensor();
  const auto& deltas = delta_family<S>();
  PhatMatrix<S> out = PhatMatrix<S>::Zero();
  const std::array<std::pair<std::array<int, 3>, int>, 4> terms = {{
      {{a, b, c}, d}, {{a, b, d}, c}, {{a, c, d}, b}, {{b, c, d}, a}}};
  for (const auto& [triple, free] : terms) {
    const Rational& coeff = g(triple[0], triple[1], triple[2]);
    if (!coeff.is_zero()) out += deltas[free] * S(coeff * 6);
  }
  return out;
}

inline bool symmetrized_relation_check(int a, int b, int c, int d) {
  return symmetrized_product(a, b, c, d) == symmetrized_rhs(a, b, c, d);
}

/// (i, beta) -> (i, beta, xi(i)).
template <class R>
TwelveColumn<ComplexOf<R>> expand_to_twelve(const Momentum9<R>& p, const MassShell<R>& mass,
                                            const Spinor3<ComplexOf<R>>& i,
                                            const Spinor3<ComplexOf<R>>& beta) {
  TwelveColumn<ComplexOf<R>> psi;
  psi << i, beta, xi_variables(p, i, mass);
  return psi;
}

template <class S>
Spinor3<S> upper_spinor(const TwelveColumn<S>& psi) {
  return psi.template head<3>();
}
template <class S>
Spinor3<S> lower_spinor(const TwelveColumn<S>& psi) {
  return psi.template segment<3>(3);
}
template <class S>
XiVector<S> xi_part(const TwelveColumn<S>& psi) {
  return psi.template tail<6>();
}

/// (P^A delta_A - M) Psi.
template <class R>
TwelveColumn<ComplexOf<R>> twelve_residual(const Momentum9<R>& p, const MassShell<R>& mass,
                                           const TwelveColumn<ComplexOf<R>>& psi) {
  using S = ComplexOf<R>;
  return combine_deltas(p) * psi - S(mass.value()) * psi;
}

/// Kernel basis of P^A delta_A - M. Empty off the mass shell det P = M^3.
template <class R>
std::vector<TwelveColumn<ComplexOf<R>>> solve(const Momentum9<R>& p, const MassShell<R>& mass) {
  using S = ComplexOf<R>;
  const PhatMatrix<S> op = combine_deltas(p) - S(mass.value()) * PhatMatrix<S>::Identity();
  return nullspace(op);
}

/// Image of a solution (i, beta) at momentum P under D in SL(3,C):
/// momentum L(D) P, spinors D i and (D^+)^{-1} beta.
template <class S>
struct TransportedSolution {
  Momentum9<RealOf<S>> momentum;
  Spinor3<S> i;
  Spinor3<S> beta;
};

template <class S>
TransportedSolution<S> covariant_transport(const SpinorMap<S>& d, const Momentum9<RealOf<S>>& p,
                                           const Spinor3<S>& i, const Spinor3<S>& beta) {
  if (!is_special(d)) throw std::invalid_argument("covariant_transport: det D != 1");
  return {components_from_herm(transform_herm(d, herm_from_components(p))), d * i,
          inverse3<S>(d.adjoint()) * beta};
}

/// How the 9-dimensional equation looks to a 4-dimensional observer with
/// P^{3+i} = 0 and P^8 = M.
template <class S>
struct ReductionReport {
  using R = RealOf<S>;
  Momentum9<R> momentum;
  R mass;
  R interval;              // g_mn p^m p^n
  bool block_diagonal;     // P = (2x2 Hermitian) (+) M
  bool decoupled;          // no couplings between (i1, i2, b1, b2) and (i3, b3)
  bool dirac_block_matches;  // coincides with p beta = M i and its cofactor companion
  bool scalar_block_matches;  // M (b3 - i3) = 0 and (p^2 - M^2) i3 = 0 after using i3 = b3
  bool on_shell;           // interval == M^2
  int dirac_dimension;     // solutions of the 2-spinor pair system
  int scalar_dimension;    // solutions of the scalar relation
  int kernel_dimension;    // kernel of P^A delta_A - M
  bool consistent;         // kernel = dirac + scalar, and nonempty iff on shell
};

template <class R>
ReductionReport<ComplexOf<R>> reduce_equation(const Vector4<R>& four_momentum, const MassShell<R>& mass) {
  using S = ComplexOf<R>;
  const R& m_r = mass.value();
  const S m(m_r);

  Momentum9<R> p = Momentum9<R>::Zero();
  p.template head<4>() = four_momentum;
  p(8) = m_r;

  ReductionReport<S> rep;
  rep.momentum = p;
  rep.mass = m_r;
  rep.interval = four_momentum(0) * four_momentum(0) - four_momentum(1) * four_momentum(1) -
                 four_momentum(2) * four_momentum(2) - four_momentum(3) * four_momentum(3);

  const auto mm = momentum_matrix(p);
  rep.block_diagonal = is_zero<S>(mm.upper(0, 2)) && is_zero<S>(mm.upper(1, 2)) && is_zero<S>(mm.upper(2, 0)) &&
                       is_zero<S>(mm.upper(2, 1)) && approx_equal<S>(mm.upper(2, 2), m);

  // Quadratic system as a 6x6 operator on (i, beta).
  Eigen::Matrix<S, 6, 6> w = Eigen::Matrix<S, 6, 6>::Zero();
  w.template block<3, 3>(0, 0) = -m * Matrix3<S>::Identity();
  w.template block<3, 3>(0, 3) = mm.upper;
  w.template block<3, 3>(3, 0) = mm.cofactors.transpose();
  w.template block<3, 3>(3, 3) = -m * m * Matrix3<S>::Identity();

  const std::array<int, 4> dirac_idx = {0, 1, 3, 4};
  const std::array<int, 2> scalar_idx = {2, 5};
  rep.decoupled = true;
  for (int r : dirac_idx)
    for (int c : scalar_idx) rep.decoupled = rep.decoupled && is_zero<S>(w(r, c)) && is_zero<S>(w(c, r));

  Matrix4<S> dirac_in_w;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) dirac_in_w(r, c) = w(dirac_idx[r], dirac_idx[c]);
  Matrix2<S> scalar_in_w;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) scalar_in_w(r, c) = w(scalar_idx[r], scalar_idx[c]);

  // Independent 2-spinor system: p^{ab} beta_b = M i^a, M cof(p)^T i = M^2 beta.
  Matrix2<S> p2;
  p2 << S(four_momentum(0) + four_momentum(3)), make_complex<S>(four_momentum(1), -four_momentum(2)),
      make_complex<S>(four_momentum(1), four_momentum(2)), S(four_momentum(0) - four_momentum(3));
  Matrix2<S> cof2;
  cof2 << p2(1, 1), -p2(1, 0), -p2(0, 1), p2(0, 0);
  Matrix4<S> dirac = Matrix4<S>::Zero();
  dirac.template block<2, 2>(0, 0) = -m * Matrix2<S>::Identity();
  dirac.template block<2, 2>(0, 2) = p2;
  dirac.template block<2, 2>(2, 0) = m * cof2.transpose();
  dirac.template block<2, 2>(2, 2) = -m * m * Matrix2<S>::Identity();
  rep.dirac_block_matches = matrices_match(dirac_in_w, dirac);

  // Scalar block: rows -M i3 + M b3 = 0 and det(p) i3 - M^2 b3 = 0.
  Matrix2<S> scalar;
  scalar << -m, m, S(rep.interval), -m * m;
  rep.scalar_block_matches = matrices_match(scalar_in_w, scalar);

  rep.on_shell = approx_equal<S>(S(rep.interval), m * m);
  rep.dirac_dimension = static_cast<int>(nullspace(dirac).size());
  rep.scalar_dimension = static_cast<int>(nullspace(scalar).size());
  rep.kernel_dimension = static_cast<int>(solve(p, mass).size());
  rep.consistent = rep.kernel_dimension == rep.dirac_dimension + rep.scalar_dimension &&
                   (rep.kernel_dimension > 0) == rep.on_shell;
  return rep;
}

}  // namespace finsler3
