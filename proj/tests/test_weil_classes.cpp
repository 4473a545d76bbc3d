#include <doctest.h>

#include <complex>
#include <random>

#include "hodge/weil_classes.hpp"

using namespace hodge;
using namespace hodge::weil;
using qalg::AlgebraParams;

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

QMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("induced action entries are minors") {
  std::mt19937 rng(41);
  for (int t = 0; t < 5; ++t) {
    const QMatrix m = random_matrix(rng, 5);
    for (std::size_t k : {1u, 2u, 3u}) {
      const QMatrix ext = exterior_action(SparseMatrix::from_dense(m), static_cast<int>(k)).to_dense();
      const auto subs = subsets(5, k);
      REQUIRE(ext.rows() == subs.size());
      CHECK(subs.size() == exterior_dim(5, k));
      for (std::size_t r = 0; r < subs.size(); ++r)
        for (std::size_t c = 0; c < subs.size(); ++c) {
          QMatrix minor(k, k);
          for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(subs[r][a], subs[c][b]);
          CHECK(ext(r, c) == determinant(minor));
        }
    }
  }
}

TEST_CASE("induced action is functorial") {
  std::mt19937 rng(42);
  for (std::size_t n : {4u, 6u})
    for (int t = 0; t < 20; ++t) {
      const SparseMatrix a = SparseMatrix::from_dense(random_matrix(rng, n));
      const SparseMatrix b = SparseMatrix::from_dense(random_matrix(rng, n));
      const int k = static_cast<int>(n / 2);
      CHECK(exterior_action(a * b, k) == exterior_action(a, k) * exterior_action(b, k));
    }
  CHECK(exterior_action(SparseMatrix::identity(8), 4) == SparseMatrix::identity(70));
}

TEST_CASE("Weil polynomial agrees with complex powers") {
  for (int n : {1, 2, 3})
    for (const auto& [u, v, r] : std::vector<std::tuple<int, int, int>>{{0, 1, -1}, {1, 1, -1}, {2, -1, -1}, {1, 1, -3}, {3, 2, -2}}) {
      const std::complex<double> sigma(u, v * std::sqrt(static_cast<double>(-r)));
      const std::complex<double> p = std::pow(sigma, 2 * n);
      const Rational trace = 2 * u, norm = u * u - r * v * v;
      const WeilPolynomial w = weil_polynomial(trace, norm, n);
      CHECK(w.a.get_d() == doctest::Approx(-2 * p.real()));
      CHECK(w.b.get_d() == doctest::Approx(std::norm(p)));
    }
}

TEST_CASE("quaternion models satisfy the defining relations") {
  for (const AlgebraParams& p : {AlgebraParams::hamilton(), AlgebraParams(-1, -3), AlgebraParams(-2, -5)})
    for (int n : {1, 2}) CHECK(HModel::make(n, p).relations_hold());
}

TEST_CASE("W_K is annihilated by the quadratic in the induced action") {
  const HModel model = HModel::make(2, AlgebraParams::hamilton());
  const KElement x{Rational(1), Rational(1)};
  const Subspace ker = weil_kernel(model, x);
  const SparseMatrix big = exterior_action(model.action(x.as_quat(model.params)), 4);
  const WeilPolynomial w = weil_polynomial(x.trace(), x.norm(model.params), 2);
  for (const auto& v : ker.basis()) {
    const SparseVector xv = big.apply(v);
    SparseVector total = big.apply(xv);
    sparse_axpy(total, w.a, xv);
    sparse_axpy(total, w.b, v);
    CHECK(total.empty());
  }
}

TEST_CASE("dimensions of W_K and W_F") {
  for (const AlgebraParams& p : {AlgebraParams::hamilton(), AlgebraParams(-1, -3)})
    for (int n : {1, 2}) {
      const WeilReport r = weil_report(n, p);
      CHECK(r.ambient_dim == exterior_dim(static_cast<std::size_t>(4 * n), static_cast<std::size_t>(2 * n)));
      CHECK(r.dim_wk == 2);
      CHECK(r.dim_wf == static_cast<std::size_t>(2 * n + 1));
      CHECK(r.wk_in_wf);
      CHECK(r.wf_f_stable);
    }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(HModel::make(0, AlgebraParams::hamilton()), std::invalid_argument);
  CHECK_THROWS_AS(HModel::make(4, AlgebraParams::hamilton()), std::invalid_argument);
  CHECK_THROWS_AS(exterior_action(SparseMatrix::identity(18), 9), std::length_error);
  const HModel model = HModel::make(1, AlgebraParams::hamilton());
  CHECK_THROWS(weil_kernel(model, KElement{Rational(3), Rational(0)}));
}
