#pragma once

// The genus-2 curve X : y^2 = x^5 - x with its automorphisms i, j generating
// the quaternion group, the tricanonical model X ⊂ P^4 cut out by four
// quadrics, the induced projective action and the invariant quartics.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hodge/linalg.hpp"

namespace hodge::curve {

/// a + b i with a, b rational; i^2 = -1.
struct Gauss {
  Rational re{0};
  Rational im{0};

  Gauss() = default;
  Gauss(int a) : re(a) {}
  Gauss(Rational a, Rational b = 0) : re(std::move(a)), im(std::move(b)) {}
  static Gauss unit() { return {0, 1}; }

  Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
  Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
  Gauss operator-() const { return {-re, -im}; }
  Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Gauss operator/(const Gauss& o) const;
  Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
  Gauss& operator-=(const Gauss& o) { return *this = *this - o; }
  Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gauss& o) const { return !(*this == o); }

  Gauss conj() const { return {re, -im}; }
  Gauss pow(int e) const;
  std::string to_string() const;
};

inline bool is_zero(const Gauss& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
inline std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << z.to_string(); }

using GMatrix = Matrix<Gauss>;

/// Laurent polynomial in a fixed number of variables over Q(i), stored as a
/// sorted map from exponent vectors to nonzero coefficients.
class Poly {
 public:
  using Exponents = std::vector<int>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Gauss& c);
  static Poly var(std::size_t nvars, std::size_t k);
  static Poly monomial(std::size_t nvars, Exponents e, const Gauss& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Gauss>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Gauss coefficient(const Exponents& e) const;
  /// Smallest exponent of variable k over all terms (0 for the zero polynomial).
  int min_exponent(std::size_t k) const;
  int max_exponent(std::size_t k) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const { return scaled(Gauss(-1)); }
  Poly operator*(const Poly& o) const;
  Poly scaled(const Gauss& c) const;
  /// Negative powers are allowed for monomials only.
  Poly pow(int e) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, const Gauss& c);

  std::size_t nvars_;
  std::map<Exponents, Gauss> terms_;
};

/// f(images[0], ..., images[n-1]). Throws std::domain_error if a negative
/// power meets a non-monomial image.
Poly substitute(const Poly& f, const std::vector<Poly>& images);

// ---- The curve, in variables (x, y) ----

Poly cx();
Poly cy();
/// y^2 - x^5 + x.
Poly curve_equation();
/// Normal form modulo the curve: y-degree at most 1, via y^2 -> x^5 - x.
Poly reduce_on_curve(const Poly& f);
std::string curve_string(const Poly& f);

/// (x, y) -> (x_image, y_image), both in reduced form.
struct CurveAuto {
  std::string name;
  Poly x_image;
  Poly y_image;

  static CurveAuto identity();
  static CurveAuto hyperelliptic();  // (x, -y)
  static CurveAuto i_auto();         // (-x, i y)
  static CurveAuto j_auto();         // (1/x, i y / x^3)

  /// Pullback f -> f(x_image, y_image), reduced on the curve.
  Poly pullback(const Poly& f) const;
  /// (this ∘ inner)(P) = this(inner(P)).
  CurveAuto after(const CurveAuto& inner) const;
  bool operator==(const CurveAuto& o) const { return x_image == o.x_image && y_image == o.y_image; }
};

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_ok() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Equation pulled back equals unit * equation for a Laurent monomial unit;
/// returns the unit, or nullopt if not of that form.
std::optional<Poly> equation_unit(const CurveAuto& g);

/// Ideal preservation, i^2 = j^2 = (x, -y), i∘j = (x, -y)∘j∘i, group of order 8.
CheckReport verify_curve_autos();

// ---- The tricanonical model, in variables x0..x4 ----

/// Q0 = x4^2 + x0 x1 - x2 x3, Q1 = x0 x2 - x1^2, Q2 = x0 x3 - x1 x2, Q3 = x1 x3 - x2^2.
std::vector<Poly> quadrics();
/// Q0^2, Q2^2, Q1 Q3, Q1^2 + Q3^2.
std::vector<Poly> quartics();
std::vector<std::string> quartic_names();
/// (x0, ..., x4) -> (1, x, x^2, x^3, y).
std::vector<Poly> tricanonical_images();

/// Each quadric vanishes on (1, x, x^2, x^3, y) modulo the curve equation.
CheckReport verify_quadrics();

/// Projective action on P^4; coordinates transform as x -> A x.
struct ProjAction {
  GMatrix i;  // diag(1, -1, 1, -1, i)
  GMatrix j;  // (x3, x2, x1, x0, i x4)
  static ProjAction standard();
};

/// P -> P(A x).
Poly pullback(const Poly& p, const GMatrix& a);
/// Some c != 0 with a = c b, if one exists.
std::optional<Gauss> proportional(const GMatrix& a, const GMatrix& b);
std::optional<Gauss> proportional(const Poly& a, const Poly& b);
/// Coordinates over Q(i) of target in the span of the given polynomials.
std::optional<std::vector<Gauss>> span_coordinates(const std::vector<Poly>& basis, const Poly& target);

/// Matrix on <1, x, x^2, x^3, y> of f -> g^*(f y^-3 dx^3) / (y^-3 dx^3), column
/// t the image of the t-th basis function. Needs x_image free of y and y_image
/// a monomial; throws std::domain_error otherwise.
GMatrix tricanonical_matrix(const CurveAuto& g);

/// Projective relations, quadric-span stability, agreement with the curve pullback.
CheckReport verify_p4_action();

struct QuarticScalar {
  std::string quartic;
  std::string element;  // "1", "i" or "j"
  std::optional<Gauss> lambda;
};

struct QuarticReport {
  std::vector<QuarticScalar> scalars;
  std::size_t span_dim = 0;
  bool span_stable = false;
  bool all_proportional() const;
};

QuarticReport verify_invariant_quartics();

struct LocusReport {
  int p = 0;
  Integer sqrt_minus_one;             // the image of i in F_p
  std::uint64_t points_enumerated = 0;
  std::uint64_t quadric_zeros = 0;
  std::uint64_t quartic_zeros = 0;
  std::uint64_t mismatches = 0;       // points in exactly one of the two loci
  std::uint64_t curve_points = 0;     // affine solutions plus the point at infinity
  bool curve_in_both = false;
  bool locus_is_curve = false;        // quadric zeros are exactly the curve points
  bool locus_stable = false;          // preserved by the reductions of i and j
  bool equal() const { return mismatches == 0 && quadric_zeros == quartic_zeros; }
  static constexpr const char* status = "EVIDENCE";
};

/// Exhaustive comparison over P^4(F_p). Requires p prime, p ≡ 1 mod 4,
/// p <= 41 and p != 5; throws std::invalid_argument otherwise.
LocusReport finite_field_locus(int p);

struct ScrollNumerology {
  int n = 0;
  int genus = 0;
  int h0_H = 0;
  int h0_H2 = 0;
  int sym2_dim = 0;
  int quadric_gap = 0;
  int scroll_dim = 0;
  int scroll_deg = 0;
  int deg_H = 0;  // from Riemann-Roch with h^1(H) = 0
};

/// Throws std::invalid_argument for n < 2.
ScrollNumerology scroll_numerology(int n);

}  // namespace hodge::curve
