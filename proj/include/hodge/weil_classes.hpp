#pragma once

// Linear-algebra models of the spaces W_x, W_K and W_F inside ∧^{2n} of a
// 4n-dimensional rational vector space F^n, where F is a definite quaternion
// algebra acting by left multiplication and K = Q(i) ⊂ F.

#include <string>
#include <vector>

#include "hodge/linalg.hpp"
#include "hodge/qalg.hpp"

namespace hodge::weil {

/// Largest exterior power dimension the module will build.
constexpr std::size_t kMaxExteriorDim = 12870;

struct HModel {
  int n = 1;
  qalg::AlgebraParams params;

  /// Throws std::invalid_argument unless 1 <= n <= 3.
  static HModel make(int n, const qalg::AlgebraParams& params);

  std::size_t dim() const { return static_cast<std::size_t>(4 * n); }
  /// Left multiplication by y on each of the n coordinates.
  SparseMatrix action(const qalg::QuatElem& y) const;
  /// mat(i)^2 = r, mat(j)^2 = s, mat(i) mat(j) = -mat(j) mat(i).
  bool relations_hold() const;
};

/// x = u + v i in K = Q(i) ⊂ F.
struct KElement {
  Rational u{0};
  Rational v{1};

  Rational trace() const { return 2 * u; }
  Rational norm(const qalg::AlgebraParams& p) const { return u * u - p.r * v * v; }
  qalg::QuatElem as_quat(const qalg::AlgebraParams& p) const { return {u, v, 0, 0, p}; }
  std::string to_string() const;
};

std::size_t exterior_dim(std::size_t n, std::size_t k);

/// Induced action v1 ∧ ... ∧ vk -> Mv1 ∧ ... ∧ Mvk in the lexicographic basis.
/// Throws std::length_error if the exterior power exceeds kMaxExteriorDim.
SparseMatrix exterior_action(const SparseMatrix& m, int k);

struct WeilPolynomial {
  Rational a;  // -(σ(x)^{2n} + σ̄(x)^{2n})
  Rational b;  // (σ(x) σ̄(x))^{2n}
};

/// Coefficients of (T - σ(x)^{2n})(T - σ̄(x)^{2n}) = T^2 + a T + b from trace and norm.
WeilPolynomial weil_polynomial(const Rational& trace, const Rational& norm, int n);

/// ker(X^2 + a X + b) with X the induced action of x on ∧^{2n}; throws if v = 0.
Subspace weil_kernel(const HModel& model, const KElement& x);

struct WeilSpace {
  Subspace space;
  std::vector<KElement> generators_used;
};

/// Intersects the kernels of the given generators, then of 1+i, 2+i, ... until the
/// dimension is unchanged for two consecutive additions (at most ladder_limit rungs).
/// Throws std::runtime_error if the dimension drops below 2.
WeilSpace weil_space(const HModel& model, std::vector<KElement> generators, int ladder_limit = 10);

struct QuaternionSpan {
  Subspace space;
  int rounds = 0;
};

/// Closure of W under the induced actions of 1, i, j, k, 1+i, 1+j, 1+k, i+j.
/// Throws std::runtime_error if it has not stabilized after max_rounds rounds.
QuaternionSpan quaternion_span(const HModel& model, const Subspace& wk, int max_rounds = 20);

struct WeilReport {
  int n = 1;
  qalg::AlgebraParams params;
  std::size_t ambient_dim = 0;
  std::size_t dim_wk = 0;
  std::size_t dim_wf = 0;
  std::vector<std::string> generators_used;
  int span_rounds = 0;
  bool wk_in_wf = false;
  bool wf_f_stable = false;  // the induced actions of i and j preserve W_F
};

WeilReport weil_report(int n, const qalg::AlgebraParams& params, int ladder_limit = 10);

}  // namespace hodge::weil
