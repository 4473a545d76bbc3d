#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>

#include "hodge/lie_engine.hpp"

using namespace hodge::lie;

namespace {

// Weyl product formula for B_n in orthogonal coordinates (doubled weights).
mpq_class weyl_b(const Weight& doubled) {
  const std::size_t n = doubled.size();
  std::vector<mpq_class> l(n), rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    l[i] = mpq_class(doubled[i], 2);
    rho[i] = mpq_class(static_cast<long>(2 * (n - i) - 1), 2);
  }
  mpq_class num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    num *= l[i] + rho[i];
    den *= rho[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= (l[i] + rho[i] - l[j] - rho[j]) * (l[i] + rho[i] + l[j] + rho[j]);
      den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
  }
  return num / den;
}

// Same for D_n: roots e_i +- e_j only, rho = (n-1, ..., 0).
mpq_class weyl_d(const Weight& doubled) {
  const std::size_t n = doubled.size();
  mpq_class num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const mpq_class li = mpq_class(doubled[i], 2) + static_cast<long>(n - 1 - i);
      const mpq_class lj = mpq_class(doubled[j], 2) + static_cast<long>(n - 1 - j);
      const long ri = static_cast<long>(n - 1 - i), rj = static_cast<long>(n - 1 - j);
      num *= (li - lj) * (li + lj);
      den *= (ri - rj) * (ri + rj);
    }
  return num / den;
}

WeightMultiset spin_b3_by_hand() {
  WeightMultiset ms(3);
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) ms.add({a, b, c});
  return ms;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

TEST_CASE("Freudenthal multiplicities match the Weyl product formula") {
  const AlgebraType b3 = AlgebraType::parse("B3");
  for (const char* w : {"1 0 0", "1/2 1/2 1/2", "1 1 0", "1 1 1", "2 0 0", "3/2 1/2 1/2", "2 1 0", "2 2 1"}) {
    const Weight hw = parse_weight(w);
    CHECK(irrep_weights(b3, hw).total() == weyl_b(hw));
    CHECK(weyl_dim(b3, hw) == weyl_b(hw));
  }
  const AlgebraType d4 = AlgebraType::parse("D4");
  for (const char* w : {"1 0 0 0", "1/2 1/2 1/2 1/2", "1/2 1/2 1/2 -1/2", "1 1 0 0", "2 0 0 0", "1 1 1 1"}) {
    const Weight hw = parse_weight(w);
    CHECK(irrep_weights(d4, hw).total() == weyl_d(hw));
  }
  // sl_n: Sym^k of the standard has dimension C(n+k-1, k).
  const AlgebraType a3 = AlgebraType::parse("A3");
  for (int k = 1; k <= 4; ++k) CHECK(sym_power(atom(a3, "W"), k).total() == binom(3 + k, k));
}

TEST_CASE("weight multiplicities are Weyl-invariant") {
  const AlgebraType b3 = AlgebraType::parse("B3");
  const WeightMultiset ms = irrep_weights(b3, parse_weight("2 1 0"));
  for (const auto& [w, m] : ms.entries()) {
    CHECK(ms.multiplicity(dominant_representative(b3, w)) == m);
    for (int s = 0; s < simple_reflection_count(b3); ++s) CHECK(ms.multiplicity(simple_reflection(b3, w, s)) == m);
  }
}

TEST_CASE("spin atom and its exterior square by hand") {
  const AlgebraType b3 = AlgebraType::parse("so7");
  const WeightMultiset g = atom(b3, "Γ");
  CHECK(g == spin_b3_by_hand());
  WeightMultiset pairs(3);
  std::vector<Weight> ws;
  for (const auto& [w, m] : g.entries()) ws.push_back(w);
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = a + 1; b < ws.size(); ++b) pairs.add({ws[a][0] + ws[b][0], ws[a][1] + ws[b][1], ws[a][2] + ws[b][2]});
  CHECK(wedge_power(g, 2) == pairs);
  CHECK(dual(b3, g) == g);
  CHECK(restrict_d4_to_b3(atom(AlgebraType::parse("D4"), "G+")) == g);
}

TEST_CASE("decompositions of the low powers of Γ") {
  const AlgebraType b3 = AlgebraType::parse("B3");
  auto highest = [&](const std::string& expr) {
    std::vector<std::pair<std::string, std::int64_t>> out;
    for (const auto& c : decompose(b3, evaluate_expression(b3, expr))) out.emplace_back(weight_to_string(c.highest), c.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
  };
  using V = std::vector<std::pair<std::string, std::int64_t>>;
  CHECK(highest("wedge(2, Γ)") == V{{"(1,0,0)", 1}, {"(1,1,0)", 1}});
  CHECK(highest("sym(2, Γ)") == V{{"(0,0,0)", 1}, {"(1,1,1)", 1}});
  CHECK(highest("wedge(4, Γ)") == V{{"(0,0,0)", 1}, {"(1,0,0)", 1}, {"(1,1,1)", 1}, {"(2,0,0)", 1}});
}

TEST_CASE("invariant counts are additive over the Künneth splitting") {
  const AlgebraType b3 = AlgebraType::parse("B3");
  const WeightMultiset g = atom(b3, "G");
  for (int k : {2, 4, 6}) {
    std::int64_t sum = 0;
    for (int a = 0; a <= k; ++a)
      if (a <= 8 && k - a <= 8) sum += invariant_dim(b3, tensor(wedge_power(g, a), wedge_power(g, k - a)));
    CHECK(invariant_dim(b3, wedge_power(direct_sum(g, g), k)) == sum);
  }
  CHECK(invariant_dim(b3, evaluate_expression(b3, "wedge(2, G (+) G)")) == 1);
  CHECK(invariant_dim(b3, evaluate_expression(b3, "wedge(4, G (+) G)")) == 6);
  CHECK(invariant_dim(b3, evaluate_expression(b3, "(G (+) G) (x) (G (+) G)")) == 4);
  CHECK(invariant_dim(b3, evaluate_expression(b3, "wedge(2,G) (x) wedge(2,G)")) == 2);
  CHECK(invariant_dim(b3, evaluate_expression(b3, "wedge(3,G) (x) G")) == 1);
}

TEST_CASE("higher exterior powers of Γ + Γ") {
  const AlgebraType b3 = AlgebraType::parse("B3");
  const WeightMultiset w6 = evaluate_expression(b3, "wedge(6, G (+) G)");
  const WeightMultiset w8 = evaluate_expression(b3, "wedge(8, G (+) G)");
  CHECK(w6.total() == 8008);
  CHECK(w8.total() == 12870);
  CHECK(invariant_dim(b3, w6) == 6);
  CHECK(invariant_dim(b3, w8) == 16);
}

TEST_CASE("decompose then reconstruct is the identity") {
  const AlgebraType alg = AlgebraType::parse("B3+A1");
  for (const char* expr : {"wedge(2, G (x) V2)", "sym(3, V)", "wedge(3, G) (x) V2", "G (x) G (x) V2"}) {
    const WeightMultiset ms = evaluate_expression(alg, expr);
    const Decomposition d = decompose(alg, ms);
    CHECK(reconstruct(alg, d) == ms);
    std::int64_t dims = 0;
    for (const auto& c : d) dims += c.multiplicity * weyl_dim(alg, c.highest);
    CHECK(dims == ms.total());
  }
}

TEST_CASE("scenarios") {
  for (const auto& name : scenario_names())
    for (const auto& row : scenario_report(name)) CHECK_MESSAGE(row.pass, name << ": " << row.claim);
  CHECK_THROWS_AS(scenario_report("nosuch"), std::invalid_argument);
}

TEST_CASE("errors") {
  const AlgebraType b3 = AlgebraType::parse("B3");
  WeightMultiset lonely(3);
  lonely.add(parse_weight("1 0 0"));
  CHECK_THROWS_AS(decompose(b3, lonely), std::domain_error);
  CHECK_THROWS(AlgebraType::parse("E8"));
  CHECK_THROWS(evaluate_expression(b3, "wedge(2, G"));
  CHECK_THROWS(wedge_power(atom(b3, "G"), 9));
}
