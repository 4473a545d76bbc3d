#include <doctest.h>

#include <cmath>
#include <random>

#include "hodge/curve_model.hpp"

using namespace hodge;
using namespace hodge::curve;

namespace {

Poly random_poly(std::mt19937& rng, std::size_t nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-3, 3);
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Poly::Exponents e(nvars);
    for (auto& x : e) x = deg(rng);
    p = p + Poly::monomial(nvars, e, Gauss(coef(rng), coef(rng)));
  }
  return p;
}

Gauss evaluate(const Poly& f, const std::vector<Gauss>& at) {
  std::vector<Poly> images;
  for (const auto& a : at) images.push_back(Poly::constant(f.nvars(), a));
  return substitute(f, images).coefficient(Poly::Exponents(f.nvars(), 0));
}

long powmod(long b, long e, long p) {
  long r = 1;
  b %= p;
  for (; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Affine points of y^2 = x^5 - x plus one point at infinity, via Euler's criterion.
long curve_point_count(long p) {
  long n = 1;
  for (long x = 0; x < p; ++x) {
    const long f = ((powmod(x, 5, p) - x) % p + p) % p;
    n += f == 0 ? 1 : (powmod(f, (p - 1) / 2, p) == 1 ? 2 : 0);
  }
  return n;
}

}  // namespace

TEST_CASE("Gaussian rationals") {
  const Gauss a(Rational(1, 2), 3), b(-2, Rational(1, 3));
  CHECK((a / b) * b == a);
  CHECK(Gauss::unit().pow(4) == Gauss(1));
  CHECK(Gauss::unit().pow(-1) == Gauss(0, -1));
  CHECK(a * a.conj() == Gauss(a.re * a.re + a.im * a.im));
  CHECK(is_zero(a - a));
}

TEST_CASE("polynomial arithmetic agrees with evaluation") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    const Poly f = random_poly(rng, 3, 3, 4), g = random_poly(rng, 3, 3, 4);
    const std::vector<Gauss> at{Gauss(d(rng), d(rng)), Gauss(d(rng), d(rng)), Gauss(d(rng), d(rng))};
    CHECK(evaluate(f * g, at) == evaluate(f, at) * evaluate(g, at));
    CHECK(evaluate(f + g, at) == evaluate(f, at) + evaluate(g, at));
    CHECK(evaluate(f - f, at) == Gauss(0));
  }
  const Poly x = Poly::var(2, 0);
  CHECK(x.pow(-2) * x.pow(2) == Poly::constant(2, 1));
  CHECK_THROWS((x + Poly::constant(2, 1)).pow(-1));
}

TEST_CASE("pullbacks are ring homomorphisms modulo the curve") {
  std::mt19937 rng(52);
  const std::vector<CurveAuto> autos{CurveAuto::hyperelliptic(), CurveAuto::i_auto(), CurveAuto::j_auto()};
  for (int t = 0; t < 20; ++t) {
    const Poly f = random_poly(rng, 2, 3, 3), g = random_poly(rng, 2, 3, 3);
    for (const auto& a : autos) {
      CHECK(a.pullback(f * g) == reduce_on_curve(a.pullback(f) * a.pullback(g)));
      CHECK(a.pullback(f + g) == a.pullback(f) + a.pullback(g));
    }
  }
  CHECK(reduce_on_curve(curve_equation()).is_zero());
}

TEST_CASE("automorphisms form Q") {
  const CheckReport r = verify_curve_autos();
  CHECK(r.checks.size() == 7);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
  const CurveAuto i = CurveAuto::i_auto(), j = CurveAuto::j_auto(), h = CurveAuto::hyperelliptic();
  CHECK(i.after(i) == h);
  CHECK(j.after(j) == h);
  CHECK(i.after(j) == h.after(j.after(i)));
  CHECK(h.after(h) == CurveAuto::identity());
  const auto unit = equation_unit(j);
  REQUIRE(unit);
  CHECK(*unit == Poly::monomial(2, {-6, 0}, Gauss(-1)));
}

TEST_CASE("tricanonical model and the projective action") {
  for (const auto& c : verify_quadrics().checks) CHECK_MESSAGE(c.ok, c.name);
  // Each quadric vanishes at (1, x, x^2, x^3, y) on random curve points over Q(i) by direct substitution.
  const auto images = tricanonical_images();
  for (const auto& q : quadrics()) CHECK(reduce_on_curve(substitute(q, images)).is_zero());
  const CheckReport a = verify_p4_action();
  CHECK(a.checks.size() == 10);
  for (const auto& c : a.checks) CHECK_MESSAGE(c.ok, c.name << ": " << c.detail);
  const ProjAction act = ProjAction::standard();
  const auto four = proportional(act.i * act.i * act.i * act.i, GMatrix::identity(5));
  CHECK(four.has_value());
  CHECK(tricanonical_matrix(CurveAuto::i_auto()) == act.i.scaled(Gauss(0, -1)));
  CHECK(tricanonical_matrix(CurveAuto::j_auto()) == act.j.scaled(Gauss(0, -1)));
}

TEST_CASE("invariant quartics") {
  const QuarticReport q = verify_invariant_quartics();
  CHECK(q.all_proportional());
  CHECK(q.span_dim == 4);
  CHECK(q.span_stable);
  const ProjAction act = ProjAction::standard();
  for (const auto& f : quartics()) {
    CHECK(pullback(f, act.i) == f);
    CHECK(pullback(f, act.j) == f);
  }
}

TEST_CASE("finite-field locus and point counts") {
  for (int p : {13, 17, 29}) {
    const LocusReport l = finite_field_locus(p);
    CHECK(l.equal());
    CHECK(l.locus_is_curve);
    CHECK(l.locus_stable);
    CHECK(l.curve_in_both);
    CHECK(static_cast<long>(l.curve_points) == curve_point_count(p));
    // Weil bound for genus 2.
    CHECK(std::abs(static_cast<double>(l.curve_points) - (p + 1)) <= 4 * std::sqrt(static_cast<double>(p)));
    CHECK((l.sqrt_minus_one * l.sqrt_minus_one + 1) % p == 0);
    const long pts = static_cast<long>(p) * p * p * p + static_cast<long>(p) * p * p + p * p + p + 1;
    CHECK(static_cast<long>(l.points_enumerated) == pts);
  }
  CHECK_THROWS_AS(finite_field_locus(5), std::invalid_argument);
  CHECK_THROWS_AS(finite_field_locus(7), std::invalid_argument);
  CHECK_THROWS_AS(finite_field_locus(43), std::invalid_argument);
  CHECK_THROWS_AS(finite_field_locus(21), std::invalid_argument);
}

TEST_CASE("scroll numerology from Riemann-Roch") {
  for (int n = 2; n <= 6; ++n) {
    const ScrollNumerology s = scroll_numerology(n);
    const int g = (n - 1) * (n - 1), d = 2 * n + g - 1;
    CHECK(s.genus == g);
    CHECK(s.deg_H == d);
    CHECK(s.h0_H2 == 2 * d + 1 - g);
    CHECK(s.quadric_gap == 2 * n * (2 * n + 1) / 2 - (2 * d + 1 - g));
  }
  const ScrollNumerology four = scroll_numerology(4);
  CHECK(four.h0_H2 == 24);
  CHECK(four.quadric_gap == 12);
  CHECK_THROWS(scroll_numerology(1));
}
