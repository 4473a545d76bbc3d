#include <doctest.h>

#include <array>
#include <random>

#include "hodge/qalg.hpp"

using namespace hodge;
using namespace hodge::qalg;

namespace {

using Tuple = std::array<Rational, 4>;

// Hamilton product written out by hand.
Tuple hamilton(const Tuple& x, const Tuple& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3], x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1], x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

// Coordinates of a + bi + cj + dk in the basis (zeta, i, j, k).
Tuple in_hurwitz_basis(const Tuple& x) { return {2 * x[0], x[1] - x[0], x[2] - x[0], x[3] - x[0]}; }

QuatElem random_elem(std::mt19937& rng, const AlgebraParams& p) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::array<int, 4> c{};
  for (auto& x : c) x = d(rng);
  return {c[0], c[1], c[2], c[3], p};
}

}  // namespace

TEST_CASE("multiplication matches the Hamilton product") {
  std::mt19937 rng(21);
  for (int t = 0; t < 50; ++t) {
    const QuatElem x = random_elem(rng, {}), y = random_elem(rng, {});
    CHECK((x * y).coords() == hamilton(x.coords(), y.coords()));
    CHECK(x.norm() * y.norm() == (x * y).norm());
  }
}

TEST_CASE("general definite algebras: relations and multiplicative norm") {
  const AlgebraParams p(-2, -5);
  const QuatElem i = QuatElem::unit_i(p), j = QuatElem::unit_j(p), k = QuatElem::unit_k(p);
  CHECK(i * i == QuatElem::scalar(-2, p));
  CHECK(j * j == QuatElem::scalar(-5, p));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  std::mt19937 rng(22);
  for (int t = 0; t < 30; ++t) {
    const QuatElem x = random_elem(rng, p), y = random_elem(rng, p), z = random_elem(rng, p);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * x.conj() == QuatElem::scalar(x.norm(), p));
  }
  CHECK_THROWS(QuatElem::unit_i(p) * QuatElem::unit_i());
}

TEST_CASE("the group Q agrees with quaternion multiplication") {
  for (const auto& a : GroupQElem::all())
    for (const auto& b : GroupQElem::all()) CHECK((a * b).to_quat() == a.to_quat() * b.to_quat());
  CHECK(generated_subgroup({GroupQElem::i()}).size() == 4);
  CHECK(generated_subgroup({GroupQElem::i(), GroupQElem::j()}).size() == 8);
  CHECK(generated_subgroup({GroupQElem::minus_one()}).size() == 2);
  CHECK(GroupQElem::parse("-k") == -GroupQElem::k());
  CHECK_THROWS(GroupQElem::parse("q"));
}

TEST_CASE("Hurwitz index equals an independent determinant and 2 N(m)^2") {
  const QuatElem zeta = QuatElem::zeta();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 200; ++t) {
    std::array<int, 4> c{};
    for (auto& x : c) x = d(rng);
    if (c == std::array<int, 4>{}) continue;
    const QuatElem m = zeta.scaled(c[0]) + QuatElem(0, c[1], c[2], c[3]);
    QMatrix rows(0, 0);
    for (const Tuple& u : {Tuple{1, 0, 0, 0}, Tuple{0, 1, 0, 0}, Tuple{0, 0, 1, 0}, Tuple{0, 0, 0, 1}}) {
      const Tuple coords = in_hurwitz_basis(hamilton(u, m.coords()));
      rows.append_row({coords[0], coords[1], coords[2], coords[3]});
    }
    const Rational oracle = abs(determinant(rows));
    const HurwitzIndex hi = hurwitz_index_identity(m);
    CHECK(Rational(hi.index) == oracle);
    CHECK(oracle == 2 * m.norm() * m.norm());
    CHECK(hi.check);
    CHECK(hi.index != 1);
  }
  CHECK_THROWS(hurwitz_index_identity(QuatElem(Rational(1, 2), 0, 0, 0)));
}

TEST_CASE("orders: H_Z has index 2 in M") {
  const OrderLattice hz = OrderLattice::hz(), m = OrderLattice::hurwitz();
  CHECK(m.contains(QuatElem::zeta()));
  CHECK_FALSE(hz.contains(QuatElem::zeta()));
  for (const auto& b : hz.basis) CHECK(m.contains(b));
  CHECK(abs(determinant(m.basis_matrix())) == Rational(1, 2));
  // M is closed under multiplication.
  for (const auto& x : m.basis)
    for (const auto& y : m.basis) CHECK(m.contains(x * y));
}

TEST_CASE("Wedderburn data from characters") {
  const WedderburnReport w = group_ring_wedderburn();
  REQUIRE(w.characters.size() == 5);
  CHECK(w.conjugacy_classes.size() == 5);
  CHECK(w.sum_of_squares == 8);
  CHECK(w.orthonormal);
  for (const auto& chi : w.characters) {
    // Frobenius-Schur indicator recomputed: (1/8) sum chi(g^2).
    Rational fs = 0;
    for (const auto& g : GroupQElem::all()) fs += chi.values[static_cast<std::size_t>((g * g).index())];
    fs /= 8;
    CHECK(fs == chi.frobenius_schur);
    CHECK(chi.values[0] == chi.degree);
  }
  CHECK(w.characters.back().degree == 2);
  CHECK(w.characters.back().frobenius_schur == -1);
  CHECK_FALSE(w.characters.back().trivial_on_center);
}

TEST_CASE("embedding into M_2(K) is a ring homomorphism") {
  std::mt19937 rng(24);
  for (const AlgebraParams& p : {AlgebraParams(), AlgebraParams(-1, -3), AlgebraParams(-2, -7)}) {
    for (int t = 0; t < 20; ++t) {
      const QuatElem x = random_elem(rng, p), y = random_elem(rng, p);
      CHECK(embed_in_m2k(x * y) == multiply(embed_in_m2k(x), embed_in_m2k(y)));
    }
    // Determinant of the image is the reduced norm.
    const QuatElem x = random_elem(rng, p);
    const KMatrix2 e = embed_in_m2k(x);
    const KNumber det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    CHECK(det.u == x.norm());
    CHECK(det.v == 0);
  }
}
