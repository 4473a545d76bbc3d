#include <doctest.h>

#include <algorithm>
#include <map>

#include "hodge/spin_explicit.hpp"

using namespace hodge;
using namespace hodge::spin;

namespace {

using Monomial = std::vector<int>;

// Sorts in place and returns the permutation sign, or 0 on a repeated index.
int sort_sign(Monomial& m) {
  int sign = 1;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (m[a] == m[b]) return 0;
      if (m[a] > m[b]) sign = -sign;
    }
  std::sort(m.begin(), m.end());
  return sign;
}

// Leibniz rule on a vector of ∧^k, keyed by monomial.
std::map<Monomial, Rational> derive(const QMatrix& op, const std::map<Monomial, Rational>& v) {
  std::map<Monomial, Rational> out;
  for (const auto& [mono, c] : v)
    for (std::size_t pos = 0; pos < mono.size(); ++pos)
      for (int r = 0; r < kSpinDim; ++r) {
        const Rational& entry = op(static_cast<std::size_t>(r), static_cast<std::size_t>(mono[pos]));
        if (is_zero(entry)) continue;
        Monomial m = mono;
        m[pos] = r;
        const int s = sort_sign(m);
        if (s != 0) out[m] += s * c * entry;
      }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

}  // namespace

TEST_CASE("Clifford relations") {
  const SpinRep rep = build_spin_rep();
  const QMatrix b = bilinear_form();
  const QMatrix id = QMatrix::identity(kSpinDim);
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t c = 0; c < 7; ++c)
      CHECK(rep.clifford[a] * rep.clifford[c] + rep.clifford[c] * rep.clifford[a] == id.scaled(2 * b(a, c)));
  CHECK(rep.candidates_passing == 1);
}

TEST_CASE("rho is a Lie algebra homomorphism") {
  const SpinRep rep = build_spin_rep();
  const auto basis = so7_basis();
  REQUIRE(basis.size() == 21);
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = x + 1; y < basis.size(); ++y) {
      const QMatrix vx = vector_action(basis[x].first, basis[x].second);
      const QMatrix vy = vector_action(basis[y].first, basis[y].second);
      const std::vector<Rational> c = so7_coordinates(commutator(vx, vy));
      QMatrix expected(kSpinDim, kSpinDim);
      for (std::size_t t = 0; t < c.size(); ++t) expected = expected + rep.rho[t].scaled(c[t]);
      CHECK(commutator(rep.rho[x], rep.rho[y]) == expected);
    }
  // vector_action preserves the form.
  const QMatrix b = bilinear_form();
  for (const auto& [p, q] : basis) {
    const QMatrix v = vector_action(p, q);
    CHECK(v.transpose() * b + b * v == QMatrix(7, 7));
  }
  std::size_t ok = 0;
  for (const auto& bc : check_brackets(rep)) ok += bc.ok ? 1 : 0;
  CHECK(ok == 210);
}

TEST_CASE("the invariant is killed by an independent Leibniz action") {
  const SpinRep rep = build_spin_rep();
  const InvariantReport inv = so7_invariant(rep);
  CHECK(inv.kernel_dim == 1);
  CHECK(inv.annihilated_by_all);
  const auto monos = wedge_monomials(4);
  REQUIRE(monos.size() == 70);
  std::map<Monomial, Rational> v;
  for (std::size_t t = 0; t < monos.size(); ++t)
    if (!is_zero(inv.full_vector[t])) v[monos[t]] = inv.full_vector[t];
  CHECK(!v.empty());
  for (const auto& rho : rep.rho) CHECK(derive(rho, v).empty());
  CHECK(project_even(inv.full_vector) == 2);
  // Library derivation agrees with the oracle on a sample generator.
  const QMatrix d = wedge_derivation(rep.rho[0], 4);
  const auto lhs = d * inv.full_vector;
  for (const auto& x : lhs) CHECK(is_zero(x));
}

TEST_CASE("weight-zero monomials counted by hand") {
  int zero = 0;
  for (const auto& m : wedge_monomials(4)) {
    std::array<int, 3> w{};
    for (int i : m)
      for (std::size_t t = 0; t < 3; ++t) w[t] += spinor_weight(i)[t];
    if (w == std::array<int, 3>{}) ++zero;
  }
  CHECK(static_cast<std::size_t>(zero) == weight_zero_basis().size());
  CHECK(zero == 8);
  const WeightCrossCheck wc = cross_check_weights(build_spin_rep());
  CHECK(wc.spin_match);
  CHECK(wc.wedge4_match);
  CHECK(wc.wedge4_zero_model == wc.wedge4_zero_engine);
  CHECK(wc.wedge2_invariants == 0);
  CHECK(wc.sym2_invariants == 1);
}

TEST_CASE("printed expression disagrees in exactly one place") {
  const InvariantReport inv = so7_invariant(build_spin_rep());
  const PrintedComparison cmp = compare_with_printed(inv);
  CHECK(cmp.terms.size() == 8);
  CHECK_FALSE(cmp.all_match);
  int mismatched = 0;
  for (const auto& t : cmp.terms)
    if (!t.matches) {
      ++mismatched;
      CHECK_FALSE(t.weight_zero);
      CHECK(is_zero(t.computed));
    }
  CHECK(mismatched == 1);
  REQUIRE(cmp.missing.size() == 1);
  CHECK(monomial_label(cmp.missing.front()) == "e{1}^e{3}^e{12}^e{23}");
}
