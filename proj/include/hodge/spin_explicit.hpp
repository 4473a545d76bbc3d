#pragma once

// Matrix model of the spin representation of so(7) on S = ∧R, R = <e1, e2, e3>,
// for the form Q = x7^2 + x1 x4 + x2 x5 + x3 x6, and the invariant line in ∧^4 S.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hodge/linalg.hpp"

namespace hodge::spin {

/// Symmetric 7x7 Gram matrix of the polarization: B(e_i, e_{i+3}) = 1/2, B(e7, e7) = 1.
QMatrix bilinear_form();

/// Spinor basis order: {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
constexpr int kSpinDim = 8;
/// Subset of {1,2,3} as a bitmask (bit t-1 for element t).
unsigned spinor_subset(int index);
std::string spinor_label(int index);
/// Twice the weight of e_I: +1 at position i if i in I, -1 otherwise.
std::array<int, 3> spinor_weight(int index);

/// The 21 basis elements e_a ∧ e_b (1 <= a < b <= 7) in lexicographic order.
std::vector<std::pair<int, int>> so7_basis();
/// (e_a ∧ e_b) . v = 2 B(b, v) e_a - 2 B(a, v) e_b on C^7 (column t = image of e_t).
QMatrix vector_action(int a, int b);
/// Coordinates of a 7x7 matrix in the so7_basis() images; throws if it is not in the span.
std::vector<Rational> so7_coordinates(const QMatrix& m);

struct SpinRep {
  std::vector<std::pair<int, int>> basis;
  std::vector<QMatrix> rho;          // rho[t] acts on S for basis[t]
  std::array<QMatrix, 7> clifford;   // gamma(e_1..e_7) on S
  Rational scale;                    // rho(a∧b) = scale * (gamma(a)gamma(b) - B(a,b))
  int parity_sign = 1;               // gamma(e7) = parity_sign * (-1)^{#I}
  int candidates_passing = 0;        // scalar assignments satisfying both constraints

  const QMatrix& of(int a, int b) const;
};

/// Searches the scalar normalizations; throws std::logic_error if none satisfies
/// the displayed e_i ∧ e7 formula together with bracket compatibility.
SpinRep build_spin_rep();

struct BracketCheck {
  std::pair<int, int> x, y;
  bool ok = false;
};
/// All 210 pairs x < y of basis elements (the bracket is antisymmetric).
std::vector<BracketCheck> check_brackets(const SpinRep& rep);

/// Basis monomials of ∧^k S as sorted index tuples, in lexicographic order.
std::vector<std::vector<int>> wedge_monomials(int k);
/// Derivation action of an operator on S extended to ∧^k S.
QMatrix wedge_derivation(const QMatrix& op, int k);
/// Derivation action on Sym^2 S (basis: pairs i <= j, lexicographic).
QMatrix sym2_derivation(const QMatrix& op);

/// The monomials of ∧^4 S of weight zero (positions in wedge_monomials(4)).
std::vector<std::vector<int>> weight_zero_basis();

struct InvariantReport {
  std::vector<std::vector<int>> monomials;  // weight-zero monomials
  std::vector<Rational> coefficients;       // normalized so the ∧^4 W coefficient is 2
  std::vector<Rational> full_vector;        // in wedge_monomials(4) coordinates
  std::size_t kernel_dim = 0;               // joint kernel of rho(e_i ∧ e7), i = 1..3
  bool annihilated_by_all = false;          // all 21 generators
};

/// Throws std::logic_error if the joint kernel is not one-dimensional.
InvariantReport so7_invariant(const SpinRep& rep);

/// Coefficient of e_{} ∧ e_{12} ∧ e_{13} ∧ e_{23}, the only monomial of ∧^4 W
/// with W = span(e_{}, e_{12}, e_{13}, e_{23}).
Rational project_even(const std::vector<Rational>& wedge4_vector);

struct PrintedTerm {
  std::vector<int> monomial;  // as printed
  Rational printed;
  bool weight_zero = false;
  Rational computed;          // coefficient of this monomial in the computed invariant
  bool matches = false;
};

struct PrintedComparison {
  std::vector<PrintedTerm> terms;
  std::vector<std::vector<int>> missing;  // computed support not among the printed monomials
  bool all_match = false;
};

/// Compares the computed invariant with the eight-term printed expression.
PrintedComparison compare_with_printed(const InvariantReport& inv);

struct WeightCrossCheck {
  bool spin_match = false;    // Cartan eigenvalues vs Freudenthal
  bool wedge4_match = false;  // 70 weights vs wedge_power of the Freudenthal multiset
  int wedge4_zero_model = 0;
  int wedge4_zero_engine = 0;
  std::size_t wedge2_invariants = 0;
  std::size_t sym2_invariants = 0;
};

WeightCrossCheck cross_check_weights(const SpinRep& rep);

std::string monomial_label(const std::vector<int>& m);

}  // namespace hodge::spin
