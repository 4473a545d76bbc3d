#pragma once

// Definite quaternion algebras over Q, the quaternion group Q, the orders
// H_Z and M (Hurwitz integers), and the embedding F -> M_2(K).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hodge/linalg.hpp"

namespace hodge::qalg {

/// i^2 = r, j^2 = s with r, s < 0.
struct AlgebraParams {
  Rational r{-1};
  Rational s{-1};

  AlgebraParams() = default;
  AlgebraParams(Rational r_, Rational s_);

  static AlgebraParams hamilton() { return {}; }
  bool is_hamilton() const { return r == -1 && s == -1; }
  bool operator==(const AlgebraParams& o) const { return r == o.r && s == o.s; }
};

/// a + b i + c j + d k.
class QuatElem {
 public:
  QuatElem() = default;
  QuatElem(Rational a, Rational b, Rational c, Rational d, AlgebraParams p = {})
      : coords_{std::move(a), std::move(b), std::move(c), std::move(d)}, params_(std::move(p)) {}

  static QuatElem scalar(Rational a, AlgebraParams p = {}) { return {std::move(a), 0, 0, 0, std::move(p)}; }
  static QuatElem unit_i(AlgebraParams p = {}) { return {0, 1, 0, 0, std::move(p)}; }
  static QuatElem unit_j(AlgebraParams p = {}) { return {0, 0, 1, 0, std::move(p)}; }
  static QuatElem unit_k(AlgebraParams p = {}) { return {0, 0, 0, 1, std::move(p)}; }
  /// (1 + i + j + k)/2 in H_Q.
  static QuatElem zeta();

  const Rational& a() const { return coords_[0]; }
  const Rational& b() const { return coords_[1]; }
  const Rational& c() const { return coords_[2]; }
  const Rational& d() const { return coords_[3]; }
  const std::array<Rational, 4>& coords() const { return coords_; }
  const AlgebraParams& params() const { return params_; }

  QuatElem operator+(const QuatElem& o) const;
  QuatElem operator-(const QuatElem& o) const;
  QuatElem operator-() const;
  /// Throws std::invalid_argument on mismatched algebra parameters.
  QuatElem operator*(const QuatElem& o) const;
  QuatElem scaled(const Rational& t) const;

  QuatElem conj() const;
  Rational norm() const;   // x * conj(x) = a^2 - r b^2 - s c^2 + r s d^2
  Rational trace() const;  // x + conj(x) = 2a
  bool is_zero() const;

  bool operator==(const QuatElem& o) const { return params_ == o.params_ && coords_ == o.coords_; }
  bool operator!=(const QuatElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::array<Rational, 4> coords_{Rational(0), Rational(0), Rational(0), Rational(0)};
  AlgebraParams params_{};
};

/// Matrix of left multiplication by x in the basis (1, i, j, k); column t = x * e_t.
QMatrix left_mult_matrix(const QuatElem& x);

// ---------------------------------------------------------------------------
// The quaternion group Q = {±1, ±i, ±j, ±k}.

class GroupQElem {
 public:
  /// Index order: +1, -1, +i, -i, +j, -j, +k, -k.
  static constexpr int kOrder = 8;

  constexpr GroupQElem() = default;
  static GroupQElem from_index(int idx);
  static GroupQElem one() { return from_index(0); }
  static GroupQElem minus_one() { return from_index(1); }
  static GroupQElem i() { return from_index(2); }
  static GroupQElem j() { return from_index(4); }
  static GroupQElem k() { return from_index(6); }
  static std::array<GroupQElem, 8> all();

  /// Accepts 1, -1, i, -i, j, -j, k, -k (and a leading '+').
  static GroupQElem parse(const std::string& symbol);

  int index() const { return idx_; }
  bool negative() const { return idx_ % 2 == 1; }
  int unit() const { return idx_ / 2; }  // 0:1 1:i 2:j 3:k
  bool is_central() const { return unit() == 0; }

  GroupQElem operator*(GroupQElem o) const;
  GroupQElem operator-() const { return from_index(idx_ ^ 1); }
  GroupQElem inverse() const;
  QuatElem to_quat() const;

  std::string to_string() const;

  constexpr bool operator==(const GroupQElem& o) const { return idx_ == o.idx_; }
  constexpr bool operator!=(const GroupQElem& o) const { return idx_ != o.idx_; }
  constexpr bool operator<(const GroupQElem& o) const { return idx_ < o.idx_; }

 private:
  int idx_ = 0;
};

/// Subgroup generated by the given elements (sorted by index).
std::vector<GroupQElem> generated_subgroup(const std::vector<GroupQElem>& gens);

// ---------------------------------------------------------------------------
// Orders.

enum class OrderLabel { HZ, HurwitzM };

struct OrderLattice {
  OrderLabel label = OrderLabel::HZ;
  std::array<QuatElem, 4> basis;

  /// Z-span of (1, i, j, k) for the given algebra.
  static OrderLattice hz(const AlgebraParams& p = {});
  /// Z-span of (zeta, i, j, k); only defined for H_Q.
  static OrderLattice hurwitz();

  /// Coordinates of x in the basis, if x lies in the lattice.
  std::optional<std::array<Integer, 4>> coordinates(const QuatElem& x) const;
  bool contains(const QuatElem& x) const { return coordinates(x).has_value(); }
  /// Change-of-basis matrix whose columns are the basis vectors in (1, i, j, k).
  QMatrix basis_matrix() const;
};

struct HurwitzIndex {
  Integer index;             // |det| of the coordinates of (m, im, jm, km) in M
  Rational twice_norm_sq;    // 2 N(m)^2
  bool check = false;        // index == 2 N(m)^2
};

/// For m in M \ {0}: the index of H_Z m in M. Throws if m is not in M.
HurwitzIndex hurwitz_index_identity(const QuatElem& m);

// ---------------------------------------------------------------------------
// Characters of Q and the Wedderburn decomposition of Q[Q].

struct IrreducibleCharacter {
  int degree = 0;
  int frobenius_schur = 0;
  std::array<Rational, 8> values;  // indexed by GroupQElem::index()
  bool trivial_on_center = false;  // factors through Q/{±1}
};

struct WedderburnReport {
  std::vector<std::vector<GroupQElem>> conjugacy_classes;
  std::vector<IrreducibleCharacter> characters;  // 4 linear, then the 2-dimensional one
  bool orthonormal = false;
  int sum_of_squares = 0;
};

WedderburnReport group_ring_wedderburn();

// ---------------------------------------------------------------------------
// K = Q(sqrt r) and F -> M_2(K).

/// u + v sqrt(r).
struct KNumber {
  Rational u{0};
  Rational v{0};
  Rational r{-1};

  KNumber operator+(const KNumber& o) const;
  KNumber operator-(const KNumber& o) const;
  KNumber operator*(const KNumber& o) const;
  KNumber conj() const { return {u, -v, r}; }
  bool operator==(const KNumber& o) const { return u == o.u && v == o.v && r == o.r; }
};

using KMatrix2 = std::array<std::array<KNumber, 2>, 2>;

KMatrix2 multiply(const KMatrix2& a, const KMatrix2& b);

/// x = x_K + y_K j with x_K = a + b i, y_K = c + d i  |->  [[x_K, y_K], [s conj(y_K), conj(x_K)]].
KMatrix2 embed_in_m2k(const QuatElem& x);

}  // namespace hodge::qalg
