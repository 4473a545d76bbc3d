#include "hodge/curve_model.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace hodge::curve {

// ---- Gauss ----

Gauss Gauss::operator/(const Gauss& o) const {
  const Rational n = o.re * o.re + o.im * o.im;
  if (sgn(n) == 0) throw std::domain_error("Gauss: division by zero");
  const Gauss num = *this * o.conj();
  return {num.re / n, num.im / n};
}

Gauss Gauss::pow(int e) const {
  Gauss base = e < 0 ? Gauss(1) / *this : *this;
  Gauss out(1);
  for (int t = 0; t < std::abs(e); ++t) out *= base;
  return out;
}

std::string Gauss::to_string() const {
  const bool has_re = sgn(re) != 0, has_im = sgn(im) != 0;
  if (!has_im) return re.get_str();
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = im.get_str() + "i";
  if (!has_re) return imag;
  return re.get_str() + (sgn(im) > 0 ? "+" : "") + imag;
}

// ---- Poly ----

Poly Poly::constant(std::size_t nvars, const Gauss& c) { return monomial(nvars, Exponents(nvars, 0), c); }

Poly Poly::var(std::size_t nvars, std::size_t k) {
  Exponents e(nvars, 0);
  e.at(k) = 1;
  return monomial(nvars, std::move(e), Gauss(1));
}

Poly Poly::monomial(std::size_t nvars, Exponents e, const Gauss& c) {
  if (e.size() != nvars) throw std::invalid_argument("Poly::monomial: exponent length mismatch");
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Gauss& c) {
  if (hodge::curve::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (hodge::curve::is_zero(it->second)) terms_.erase(it);
}

Gauss Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gauss(0) : it->second;
}

int Poly::min_exponent(std::size_t k) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first.at(k);
  for (const auto& [e, c] : terms_) m = std::min(m, e[k]);
  return m;
}

int Poly::max_exponent(std::size_t k) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first.at(k);
  for (const auto& [e, c] : terms_) m = std::max(m, e[k]);
  return m;
}

Poly Poly::operator+(const Poly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly s = *this;
  for (const auto& [e, c] : o.terms_) s.add_term(e, c);
  return s;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly p(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  return p;
}

Poly Poly::scaled(const Gauss& c) const {
  Poly s(nvars_);
  for (const auto& [e, a] : terms_) s.add_term(e, a * c);
  return s;
}

Poly Poly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw std::domain_error("Poly::pow: negative power of a non-monomial");
    const auto& [ex, c] = *terms_.begin();
    Exponents ne(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) ne[k] = ex[k] * e;
    return monomial(nvars_, ne, c.pow(e));
  }
  Poly out = constant(nvars_, Gauss(1));
  for (int t = 0; t < e; ++t) out = out * *this;
  return out;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw std::invalid_argument("Poly::to_string: wrong number of names");
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, Gauss>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int v : a.first) da += v;
    for (int v : b.first) db += v;
    return da > db;
  });
  for (const auto& [e, c] : ts) {
    std::string mon;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += names[k];
      if (e[k] != 1) mon += "^" + std::to_string(e[k]);
    }
    std::string coef = c.to_string();
    const bool compound = sgn(c.re) != 0 && sgn(c.im) != 0;
    if (compound) coef = "(" + coef + ")";
    bool negative = !compound && coef.front() == '-';
    if (negative) coef.erase(0, 1);
    std::string term;
    if (mon.empty()) term = coef;
    else if (coef == "1") term = mon;
    else term = coef + "*" + mon;
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  if (images.size() != f.nvars()) throw std::invalid_argument("substitute: wrong number of images");
  if (images.empty()) return f;
  const std::size_t target = images.front().nvars();
  Poly out(target);
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term = term * images[k].pow(e[k]);
    out = out + term;
  }
  return out;
}

// ---- Curve ----

Poly cx() { return Poly::var(2, 0); }
Poly cy() { return Poly::var(2, 1); }

Poly curve_equation() { return cy().pow(2) - cx().pow(5) + cx(); }

Poly reduce_on_curve(const Poly& f) {
  if (f.nvars() != 2) throw std::invalid_argument("reduce_on_curve: expects a polynomial in x, y");
  if (f.min_exponent(1) < 0) throw std::domain_error("reduce_on_curve: negative power of y");
  const Poly y2 = cx().pow(5) - cx();
  Poly cur = f;
  while (cur.max_exponent(1) >= 2) {
    Poly next(2);
    for (const auto& [e, c] : cur.terms()) {
      if (e[1] < 2) {
        next = next + Poly::monomial(2, e, c);
        continue;
      }
      next = next + Poly::monomial(2, {e[0], e[1] - 2}, c) * y2;
    }
    cur = next;
  }
  return cur;
}

std::string curve_string(const Poly& f) { return f.to_string({"x", "y"}); }

CurveAuto CurveAuto::identity() { return {"1", cx(), cy()}; }
CurveAuto CurveAuto::hyperelliptic() { return {"-1", cx(), -cy()}; }
CurveAuto CurveAuto::i_auto() { return {"i", -cx(), cy().scaled(Gauss::unit())}; }
CurveAuto CurveAuto::j_auto() {
  return {"j", cx().pow(-1), (cy() * cx().pow(-3)).scaled(Gauss::unit())};
}

Poly CurveAuto::pullback(const Poly& f) const { return reduce_on_curve(substitute(f, {x_image, y_image})); }

CurveAuto CurveAuto::after(const CurveAuto& inner) const {
  return {name + "*" + inner.name, inner.pullback(x_image), inner.pullback(y_image)};
}

bool CheckReport::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::optional<Poly> equation_unit(const CurveAuto& g) {
  const Poly f = curve_equation();
  const Poly s = substitute(f, {g.x_image, g.y_image});
  // The y^2 coefficient of the equation is 1, so the unit is the y^2 part of s.
  Poly unit(2);
  for (const auto& [e, c] : s.terms())
    if (e[1] == 2) unit = unit + Poly::monomial(2, {e[0], 0}, c);
  if (!unit.is_monomial()) return std::nullopt;
  if (unit * f != s) return std::nullopt;
  return unit;
}

namespace {

std::vector<CurveAuto> closure(const std::vector<CurveAuto>& gens) {
  std::vector<CurveAuto> elems{CurveAuto::identity()};
  for (std::size_t t = 0; t < elems.size() && elems.size() <= 64; ++t)
    for (const auto& g : gens) {
      CurveAuto h = g.after(elems[t]);
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(std::move(h));
    }
  return elems;
}

std::string auto_string(const CurveAuto& g) {
  return "(" + curve_string(g.x_image) + ", " + curve_string(g.y_image) + ")";
}

}  // namespace

CheckReport verify_curve_autos() {
  CheckReport rep;
  const CurveAuto id = CurveAuto::identity(), h = CurveAuto::hyperelliptic();
  const CurveAuto i = CurveAuto::i_auto(), j = CurveAuto::j_auto();

  for (const auto& g : {i, j}) {
    const auto unit = equation_unit(g);
    const Poly s = substitute(curve_equation(), {g.x_image, g.y_image});
    const int clear = std::max(0, -s.min_exponent(0));
    std::string detail = unit ? "pullback of the equation = " + curve_string(*unit) + " * (y^2 - x^5 + x)" : "no unit";
    if (unit) detail += "; cleared by x^" + std::to_string(clear);
    rep.add(g.name + " preserves the curve", unit.has_value() && reduce_on_curve(s).is_zero(), detail);
  }
  const CurveAuto ii = i.after(i), jj = j.after(j);
  rep.add("i^2 = (x, -y)", ii == h, auto_string(ii));
  rep.add("j^2 = (x, -y)", jj == h, auto_string(jj));
  const CurveAuto ij = i.after(j), hji = h.after(j.after(i));
  rep.add("i*j = (x, -y)*j*i", ij == hji, auto_string(ij) + " vs " + auto_string(hji));
  rep.add("i^4 = 1", ii.after(ii) == id);

  const auto group = closure({i, j});
  std::size_t involutions = 0;
  bool h_is_involution = false;
  for (const auto& g : group)
    if (!(g == id) && g.after(g) == id) {
      ++involutions;
      h_is_involution = h_is_involution || g == h;
    }
  rep.add("<i, j> has order 8 with a unique involution (x, -y)",
          group.size() == 8 && involutions == 1 && h_is_involution,
          "order " + std::to_string(group.size()) + ", involutions " + std::to_string(involutions));
  return rep;
}

// ---- Tricanonical model ----

namespace {

Poly px(std::size_t k) { return Poly::var(5, k); }

const std::vector<std::string>& p4_names() {
  static const std::vector<std::string> names{"x0", "x1", "x2", "x3", "x4"};
  return names;
}

}  // namespace

std::vector<Poly> quadrics() {
  return {px(4).pow(2) + px(0) * px(1) - px(2) * px(3), px(0) * px(2) - px(1).pow(2),
          px(0) * px(3) - px(1) * px(2), px(1) * px(3) - px(2).pow(2)};
}

std::vector<Poly> quartics() {
  const auto q = quadrics();
  return {q[0] * q[0], q[2] * q[2], q[1] * q[3], q[1] * q[1] + q[3] * q[3]};
}

std::vector<std::string> quartic_names() { return {"Q0^2", "Q2^2", "Q1*Q3", "Q1^2+Q3^2"}; }

std::vector<Poly> tricanonical_images() { return {Poly::constant(2, 1), cx(), cx().pow(2), cx().pow(3), cy()}; }

CheckReport verify_quadrics() {
  CheckReport rep;
  const auto qs = quadrics();
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const Poly s = substitute(qs[k], tricanonical_images());
    const Poly r = reduce_on_curve(s);
    rep.add("Q" + std::to_string(k) + " vanishes on the curve", r.is_zero(), curve_string(s) + " -> " + curve_string(r));
  }
  return rep;
}

ProjAction ProjAction::standard() {
  ProjAction a{GMatrix(5, 5), GMatrix(5, 5)};
  const Gauss i = Gauss::unit();
  a.i(0, 0) = 1;
  a.i(1, 1) = -1;
  a.i(2, 2) = 1;
  a.i(3, 3) = -1;
  a.i(4, 4) = i;
  a.j(0, 3) = 1;
  a.j(1, 2) = 1;
  a.j(2, 1) = 1;
  a.j(3, 0) = 1;
  a.j(4, 4) = i;
  return a;
}

Poly pullback(const Poly& p, const GMatrix& a) {
  if (a.rows() != p.nvars() || a.cols() != p.nvars()) throw std::invalid_argument("pullback: shape mismatch");
  std::vector<Poly> images;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    Poly img(p.nvars());
    for (std::size_t l = 0; l < a.cols(); ++l) img = img + Poly::var(p.nvars(), l).scaled(a(k, l));
    images.push_back(std::move(img));
  }
  return substitute(p, images);
}

std::optional<Gauss> proportional(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const auto& bd = b.data();
  auto it = std::find_if(bd.begin(), bd.end(), [](const Gauss& z) { return !is_zero(z); });
  if (it == bd.end()) return std::nullopt;
  const Gauss c = a.data()[static_cast<std::size_t>(it - bd.begin())] / *it;
  if (is_zero(c) || !(a == b.scaled(c))) return std::nullopt;
  return c;
}

std::optional<Gauss> proportional(const Poly& a, const Poly& b) {
  if (b.is_zero() || a.nvars() != b.nvars()) return std::nullopt;
  const auto& [e, cb] = *b.terms().begin();
  const Gauss c = a.coefficient(e) / cb;
  if (is_zero(c) || a != b.scaled(c)) return std::nullopt;
  return c;
}

std::optional<std::vector<Gauss>> span_coordinates(const std::vector<Poly>& basis, const Poly& target) {
  std::map<Poly::Exponents, std::size_t> index;
  for (const auto& b : basis)
    for (const auto& [e, c] : b.terms()) index.emplace(e, 0);
  for (const auto& [e, c] : target.terms()) index.emplace(e, 0);
  std::size_t r = 0;
  for (auto& [e, slot] : index) slot = r++;

  GMatrix m(index.size(), basis.size() + 1);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [e, c] : basis[k].terms()) m(index.at(e), k) = c;
  for (const auto& [e, c] : target.terms()) m(index.at(e), basis.size()) = c;

  const auto ech = row_reduce(m);
  std::vector<Gauss> coords(basis.size(), Gauss(0));
  for (std::size_t row = 0; row < ech.pivots.size(); ++row) {
    if (ech.pivots[row] == basis.size()) return std::nullopt;
    coords[ech.pivots[row]] = ech.reduced(row, basis.size());
  }
  return coords;
}

namespace {

Poly d_dx(const Poly& f) {
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[0] == 0) continue;
    Poly::Exponents ne = e;
    --ne[0];
    out = out + Poly::monomial(f.nvars(), ne, c * Gauss(e[0]));
  }
  return out;
}

}  // namespace

GMatrix tricanonical_matrix(const CurveAuto& g) {
  if (g.x_image.min_exponent(1) != 0 || g.x_image.max_exponent(1) != 0)
    throw std::domain_error("tricanonical_matrix: x image depends on y");
  if (!g.y_image.is_monomial() || g.y_image.max_exponent(1) != 1)
    throw std::domain_error("tricanonical_matrix: y image is not a monomial multiple of y");
  // g^*(y^-3 dx^3) = (y / g_y)^3 (g_x')^3 * (y^-3 dx^3).
  const Poly factor = g.y_image.pow(-3) * cy().pow(3) * d_dx(g.x_image).pow(3);
  const auto basis = tricanonical_images();
  GMatrix m(5, 5);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const Poly img = reduce_on_curve(g.pullback(basis[t]) * factor);
    for (const auto& [e, c] : img.terms()) {
      std::size_t s = 5;
      if (e[1] == 1 && e[0] == 0) s = 4;
      else if (e[1] == 0 && e[0] >= 0 && e[0] <= 3) s = static_cast<std::size_t>(e[0]);
      if (s == 5) throw std::domain_error("tricanonical_matrix: image leaves <1, x, x^2, x^3, y>");
      m(s, t) = c;
    }
  }
  return m;
}

namespace {

std::string matrix_string(const GMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).to_string();
  }
  return s + "]";
}

std::string scalar_string(const std::optional<Gauss>& c) { return c ? "scalar " + c->to_string() : "not proportional"; }

}  // namespace

CheckReport verify_p4_action() {
  CheckReport rep;
  const ProjAction a = ProjAction::standard();
  const GMatrix one = GMatrix::identity(5);
  const GMatrix i2 = a.i * a.i, j2 = a.j * a.j;
  const GMatrix i_inv = i2 * a.i, j_inv = j2 * a.j;  // inverses up to scalar, since i^4 ~ 1

  auto proj = [&](const std::string& name, const GMatrix& x, const GMatrix& y) {
    const auto c = proportional(x, y);
    rep.add(name, c.has_value(), scalar_string(c));
  };
  proj("i^4 ~ 1", i2 * i2, one);
  proj("j^4 ~ 1", j2 * j2, one);
  proj("i^2 ~ j^2", i2, j2);
  proj("i j i^-1 j^-1 ~ i^2", a.i * a.j * i_inv * j_inv, i2);
  rep.add("i^2 is not scalar", !proportional(i2, one).has_value(), matrix_string(i2));

  // Projective closure of <i, j>.
  std::vector<GMatrix> elems{one};
  for (std::size_t t = 0; t < elems.size() && elems.size() <= 64; ++t)
    for (const auto* g : {&a.i, &a.j}) {
      const GMatrix h = *g * elems[t];
      const bool seen = std::any_of(elems.begin(), elems.end(), [&](const GMatrix& e) { return proportional(h, e).has_value(); });
      if (!seen) elems.push_back(h);
    }
  rep.add("<i, j> modulo scalars has order 8", elems.size() == 8, "order " + std::to_string(elems.size()));

  const auto qs = quadrics();
  for (const auto& [name, m] : {std::pair{"i", &a.i}, std::pair{"j", &a.j}}) {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      const Poly pb = pullback(qs[k], *m);
      const auto coords = span_coordinates(qs, pb);
      ok = ok && coords.has_value();
      if (!detail.empty()) detail += "; ";
      detail += "Q" + std::to_string(k) + " -> " + (coords ? pb.to_string(p4_names()) : "outside the span");
    }
    rep.add(std::string(name) + " preserves the quadric span", ok, detail);
  }

  for (const auto& [g, m] : {std::pair{CurveAuto::i_auto(), &a.i}, std::pair{CurveAuto::j_auto(), &a.j}}) {
    const GMatrix t = tricanonical_matrix(g);
    const auto c = proportional(t, *m);
    rep.add(g.name + " on <1, x, x^2, x^3, y> agrees with the P^4 action", c.has_value(),
            scalar_string(c) + ", matrix " + matrix_string(t));
  }
  return rep;
}

bool QuarticReport::all_proportional() const {
  return std::all_of(scalars.begin(), scalars.end(), [](const QuarticScalar& s) { return s.lambda.has_value(); });
}

QuarticReport verify_invariant_quartics() {
  QuarticReport rep;
  const ProjAction a = ProjAction::standard();
  const auto ps = quartics();
  const auto names = quartic_names();
  const GMatrix one = GMatrix::identity(5);
  rep.span_stable = true;
  for (std::size_t k = 0; k < ps.size(); ++k)
    for (const auto& [name, m] : {std::pair{"1", &one}, std::pair{"i", &a.i}, std::pair{"j", &a.j}}) {
      const Poly pb = pullback(ps[k], *m);
      rep.scalars.push_back({names[k], name, proportional(pb, ps[k])});
      rep.span_stable = rep.span_stable && span_coordinates(ps, pb).has_value();
    }

  std::map<Poly::Exponents, std::size_t> index;
  for (const auto& p : ps)
    for (const auto& [e, c] : p.terms()) index.emplace(e, index.size());
  GMatrix m(ps.size(), index.size());
  for (std::size_t k = 0; k < ps.size(); ++k)
    for (const auto& [e, c] : ps[k].terms()) m(k, index.at(e)) = c;
  rep.span_dim = rank(m);
  return rep;
}

// ---- Finite fields ----

namespace {

using Point = std::array<std::int64_t, 5>;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

LocusReport finite_field_locus(int p) {
  if (!is_prime(p) || p % 4 != 1 || p > 41 || p == 5)
    throw std::invalid_argument("finite_field_locus: need a prime p ≡ 1 mod 4 with p <= 41 and p != 5");
  const std::int64_t P = p;
  auto mod = [P](std::int64_t v) { return ((v % P) + P) % P; };

  std::int64_t s = 2;
  while (mod(s * s + 1) != 0) ++s;

  LocusReport rep;
  rep.p = p;
  rep.sqrt_minus_one = Integer(static_cast<long>(s));

  auto quad = [&](const Point& x) {
    return std::array<std::int64_t, 4>{mod(x[4] * x[4] + x[0] * x[1] - x[2] * x[3]), mod(x[0] * x[2] - x[1] * x[1]),
                                       mod(x[0] * x[3] - x[1] * x[2]), mod(x[1] * x[3] - x[2] * x[2])};
  };

  std::set<Point> zeros;
  Point x{};
  // Normalized representatives: first nonzero coordinate equal to 1.
  for (int lead = 0; lead < 5; ++lead) {
    std::int64_t count = 1;
    for (int t = lead + 1; t < 5; ++t) count *= P;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      x.fill(0);
      x[lead] = 1;
      std::int64_t rest = idx;
      for (int t = 4; t > lead; --t) {
        x[t] = rest % P;
        rest /= P;
      }
      ++rep.points_enumerated;
      const auto q = quad(x);
      const bool z2 = q[0] == 0 && q[1] == 0 && q[2] == 0 && q[3] == 0;
      const bool z4 = mod(q[0] * q[0]) == 0 && mod(q[2] * q[2]) == 0 && mod(q[1] * q[3]) == 0 &&
                      mod(q[1] * q[1] + q[3] * q[3]) == 0;
      if (z2) {
        ++rep.quadric_zeros;
        zeros.insert(x);
      }
      if (z4) ++rep.quartic_zeros;
      if (z2 != z4) ++rep.mismatches;
    }
  }

  std::set<Point> curve;
  for (std::int64_t a = 0; a < P; ++a) {
    const std::int64_t rhs = mod(mod(mod(a * a) * mod(a * a)) * a - a);
    for (std::int64_t b = 0; b < P; ++b)
      if (mod(b * b) == rhs) curve.insert(Point{1, a, mod(a * a), mod(a * a * a), b});
  }
  curve.insert(Point{0, 0, 0, 1, 0});
  rep.curve_points = curve.size();

  rep.curve_in_both = std::all_of(curve.begin(), curve.end(), [&](const Point& c) {
    const auto q = quad(c);
    return q[0] == 0 && q[1] == 0 && q[2] == 0 && q[3] == 0;
  });
  rep.locus_is_curve = zeros == curve;

  auto normalize = [&](Point v) {
    std::size_t lead = 0;
    while (lead < 5 && v[lead] == 0) ++lead;
    if (lead == 5) return v;
    // Inverse by Fermat.
    std::int64_t inv = 1, base = v[lead], e = P - 2;
    while (e) {
      if (e & 1) inv = mod(inv * base);
      base = mod(base * base);
      e >>= 1;
    }
    for (auto& c : v) c = mod(c * inv);
    return v;
  };
  auto act_i = [&](const Point& v) { return normalize({v[0], mod(-v[1]), v[2], mod(-v[3]), mod(s * v[4])}); };
  auto act_j = [&](const Point& v) { return normalize({v[3], v[2], v[1], v[0], mod(s * v[4])}); };
  rep.locus_stable = std::all_of(zeros.begin(), zeros.end(),
                                 [&](const Point& v) { return zeros.count(act_i(v)) && zeros.count(act_j(v)); });
  return rep;
}

ScrollNumerology scroll_numerology(int n) {
  if (n < 2) throw std::invalid_argument("scroll_numerology: n must be at least 2");
  ScrollNumerology s;
  s.n = n;
  s.genus = (n - 1) * (n - 1);
  s.h0_H = 2 * n;
  s.deg_H = s.h0_H + s.genus - 1;
  // 2H has degree above 2g - 2, so Riemann-Roch is exact.
  s.h0_H2 = 2 * s.deg_H - s.genus + 1;
  s.sym2_dim = s.h0_H * (s.h0_H + 1) / 2;
  s.quadric_gap = s.sym2_dim - s.h0_H2;
  s.scroll_dim = n;
  s.scroll_deg = n;
  return s;
}

}  // namespace hodge::curve
