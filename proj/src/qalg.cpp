#include "hodge/qalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hodge::qalg {

AlgebraParams::AlgebraParams(Rational r_, Rational s_) : r(std::move(r_)), s(std::move(s_)) {
  r.canonicalize();
  s.canonicalize();
  if (sgn(r) >= 0 || sgn(s) >= 0) throw std::invalid_argument("AlgebraParams: r and s must be negative");
}

QuatElem QuatElem::zeta() { return {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}; }

QuatElem QuatElem::operator+(const QuatElem& o) const {
  if (!(params_ == o.params_)) throw std::invalid_argument("QuatElem: mismatched algebra parameters");
  return {a() + o.a(), b() + o.b(), c() + o.c(), d() + o.d(), params_};
}

QuatElem QuatElem::operator-(const QuatElem& o) const { return *this + (-o); }

QuatElem QuatElem::operator-() const { return {-a(), -b(), -c(), -d(), params_}; }

QuatElem QuatElem::operator*(const QuatElem& o) const {
  if (!(params_ == o.params_)) throw std::invalid_argument("QuatElem: mismatched algebra parameters");
  const Rational& r = params_.r;
  const Rational& s = params_.s;
  // i^2 = r, j^2 = s, k^2 = -rs, ij = k, ik = r j, jk = -s i (and the negatives reversed).
  Rational e0 = a() * o.a() + r * b() * o.b() + s * c() * o.c() - r * s * d() * o.d();
  Rational e1 = a() * o.b() + b() * o.a() - s * c() * o.d() + s * d() * o.c();
  Rational e2 = a() * o.c() + c() * o.a() + r * b() * o.d() - r * d() * o.b();
  Rational e3 = a() * o.d() + d() * o.a() + b() * o.c() - c() * o.b();
  return {e0, e1, e2, e3, params_};
}

QuatElem QuatElem::scaled(const Rational& t) const { return {t * a(), t * b(), t * c(), t * d(), params_}; }

QuatElem QuatElem::conj() const { return {a(), -b(), -c(), -d(), params_}; }

Rational QuatElem::norm() const {
  const Rational& r = params_.r;
  const Rational& s = params_.s;
  return a() * a() - r * b() * b() - s * c() * c() + r * s * d() * d();
}

Rational QuatElem::trace() const { return 2 * a(); }

bool QuatElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return hodge::is_zero(x); });
}

std::string QuatElem::to_string() const {
  std::ostringstream os;
  os << a() << (sgn(b()) < 0 ? " - " : " + ") << abs(b()) << "i" << (sgn(c()) < 0 ? " - " : " + ") << abs(c())
     << "j" << (sgn(d()) < 0 ? " - " : " + ") << abs(d()) << "k";
  return os.str();
}

QMatrix left_mult_matrix(const QuatElem& x) {
  const auto& p = x.params();
  const std::array<QuatElem, 4> basis{QuatElem::scalar(1, p), QuatElem::unit_i(p), QuatElem::unit_j(p),
                                      QuatElem::unit_k(p)};
  QMatrix m(4, 4);
  for (std::size_t t = 0; t < 4; ++t) {
    const QuatElem img = x * basis[t];
    for (std::size_t row = 0; row < 4; ++row) m(row, t) = img.coords()[row];
  }
  return m;
}

// ---------------------------------------------------------------------------

GroupQElem GroupQElem::from_index(int idx) {
  if (idx < 0 || idx >= kOrder) throw std::out_of_range("GroupQElem: index out of range");
  GroupQElem g;
  g.idx_ = idx;
  return g;
}

std::array<GroupQElem, 8> GroupQElem::all() {
  std::array<GroupQElem, 8> out;
  for (int t = 0; t < kOrder; ++t) out[t] = from_index(t);
  return out;
}

GroupQElem GroupQElem::parse(const std::string& symbol) {
  std::string s = symbol;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  int unit;
  if (s == "1")
    unit = 0;
  else if (s == "i")
    unit = 1;
  else if (s == "j")
    unit = 2;
  else if (s == "k")
    unit = 3;
  else
    throw std::invalid_argument("GroupQElem: unknown symbol '" + symbol + "'");
  return from_index(2 * unit + (neg ? 1 : 0));
}

GroupQElem GroupQElem::operator*(GroupQElem o) const {
  // unit products as (sign, unit) for rows 1,i,j,k times columns 1,i,j,k
  static constexpr int kTable[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  const auto& e = kTable[unit()][o.unit()];
  const int sign = (negative() ? 1 : 0) ^ (o.negative() ? 1 : 0) ^ e[0];
  return from_index(2 * e[1] + sign);
}

GroupQElem GroupQElem::inverse() const { return is_central() ? *this : -*this; }

QuatElem GroupQElem::to_quat() const {
  std::array<Rational, 4> c{0, 0, 0, 0};
  c[unit()] = negative() ? -1 : 1;
  return {c[0], c[1], c[2], c[3]};
}

std::string GroupQElem::to_string() const {
  static const char* kNames[4] = {"1", "i", "j", "k"};
  return std::string(negative() ? "-" : "") + kNames[unit()];
}

std::vector<GroupQElem> generated_subgroup(const std::vector<GroupQElem>& gens) {
  std::set<GroupQElem> members{GroupQElem::one()};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<GroupQElem> current(members.begin(), members.end());
    for (const auto& a : current)
      for (const auto& g : gens) grew |= members.insert(a * g).second;
  }
  return {members.begin(), members.end()};
}

// ---------------------------------------------------------------------------

OrderLattice OrderLattice::hz(const AlgebraParams& p) {
  return {OrderLabel::HZ, {QuatElem::scalar(1, p), QuatElem::unit_i(p), QuatElem::unit_j(p), QuatElem::unit_k(p)}};
}

OrderLattice OrderLattice::hurwitz() {
  return {OrderLabel::HurwitzM, {QuatElem::zeta(), QuatElem::unit_i(), QuatElem::unit_j(), QuatElem::unit_k()}};
}

QMatrix OrderLattice::basis_matrix() const {
  QMatrix m(4, 4);
  for (std::size_t t = 0; t < 4; ++t)
    for (std::size_t row = 0; row < 4; ++row) m(row, t) = basis[t].coords()[row];
  return m;
}

std::optional<std::array<Integer, 4>> OrderLattice::coordinates(const QuatElem& x) const {
  if (!(x.params() == basis[0].params())) throw std::invalid_argument("OrderLattice: mismatched algebra parameters");
  const auto inv = inverse(basis_matrix());
  const std::vector<Rational> xs(x.coords().begin(), x.coords().end());
  const auto coeffs = (*inv) * xs;
  std::array<Integer, 4> out;
  for (std::size_t t = 0; t < 4; ++t) {
    Rational c = coeffs[t];
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    out[t] = c.get_num();
  }
  return out;
}

HurwitzIndex hurwitz_index_identity(const QuatElem& m) {
  if (!m.params().is_hamilton()) throw std::invalid_argument("hurwitz_index_identity: requires r = s = -1");
  if (m.is_zero()) throw std::invalid_argument("hurwitz_index_identity: m must be nonzero");
  const auto M = OrderLattice::hurwitz();
  if (!M.contains(m)) throw std::invalid_argument("hurwitz_index_identity: m is not in M");

  const std::array<QuatElem, 4> images{m, QuatElem::unit_i() * m, QuatElem::unit_j() * m, QuatElem::unit_k() * m};
  ZMatrix coords(4, 4);
  for (std::size_t t = 0; t < 4; ++t) {
    const auto c = M.coordinates(images[t]);
    if (!c) throw std::logic_error("hurwitz_index_identity: M is not closed under left H_Z action");
    for (std::size_t row = 0; row < 4; ++row) coords(row, t) = (*c)[row];
  }
  HurwitzIndex out;
  out.index = abs(determinant(coords));
  const Rational n = m.norm();
  out.twice_norm_sq = 2 * n * n;
  out.check = Rational(out.index) == out.twice_norm_sq;
  return out;
}

// ---------------------------------------------------------------------------

WedderburnReport group_ring_wedderburn() {
  WedderburnReport rep;
  const auto elems = GroupQElem::all();

  // Conjugacy classes.
  std::vector<bool> seen(8, false);
  for (const auto& g : elems) {
    if (seen[g.index()]) continue;
    std::set<GroupQElem> cls;
    for (const auto& h : elems) cls.insert(h * g * h.inverse());
    for (const auto& c : cls) seen[c.index()] = true;
    rep.conjugacy_classes.emplace_back(cls.begin(), cls.end());
  }

  // Linear characters: homomorphisms to the 4th roots of unity, written as
  // exponents mod 4, determined by the images of i and j.
  auto word_exponent = [](GroupQElem g, int ei, int ej) {
    // Express g as a word in i, j: 1, -1 = i^2, i, -i = i^3, j, -j = j^3, k = ij, -k = ji.
    static constexpr int kWords[8][2] = {{0, 0}, {2, 0}, {1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {1, 3}};
    const auto& w = kWords[g.index()];
    return (w[0] * ei + w[1] * ej) % 4;
  };
  for (int ei = 0; ei < 4; ++ei)
    for (int ej = 0; ej < 4; ++ej) {
      bool hom = true;
      for (const auto& a : elems)
        for (const auto& b : elems)
          if ((word_exponent(a, ei, ej) + word_exponent(b, ei, ej)) % 4 != word_exponent(a * b, ei, ej)) hom = false;
      if (!hom) continue;
      IrreducibleCharacter chi;
      chi.degree = 1;
      bool real = true;
      for (const auto& g : elems) {
        const int e = word_exponent(g, ei, ej);
        if (e % 2 != 0) real = false;
        chi.values[g.index()] = e == 0 ? 1 : -1;
      }
      if (!real) throw std::logic_error("group_ring_wedderburn: unexpected non-real linear character");
      rep.characters.push_back(chi);
    }

  // The remaining irreducible character from the regular character:
  // reg = sum_chi chi(1) chi, with one class left over.
  const std::size_t n_classes = rep.conjugacy_classes.size();
  if (rep.characters.size() + 1 != n_classes)
    throw std::logic_error("group_ring_wedderburn: expected exactly one nonlinear character");
  int rest = 8;
  for (const auto& chi : rep.characters) rest -= chi.degree * chi.degree;
  int degree = 1;
  while (degree * degree < rest) ++degree;
  if (degree * degree != rest) throw std::logic_error("group_ring_wedderburn: remaining degree is not a square");
  IrreducibleCharacter last;
  last.degree = degree;
  for (const auto& g : elems) {
    Rational reg = g == GroupQElem::one() ? 8 : 0;
    for (const auto& chi : rep.characters) reg -= chi.degree * chi.values[g.index()];
    last.values[g.index()] = reg / degree;
  }
  rep.characters.push_back(last);

  // Frobenius-Schur indicators, central triviality, orthonormality.
  for (auto& chi : rep.characters) {
    Rational fs = 0;
    for (const auto& g : elems) fs += chi.values[(g * g).index()];
    fs /= 8;
    fs.canonicalize();
    chi.frobenius_schur = static_cast<int>(fs.get_num().get_si());
    chi.trivial_on_center = chi.values[GroupQElem::minus_one().index()] == chi.values[0];
  }
  rep.orthonormal = true;
  for (std::size_t x = 0; x < rep.characters.size(); ++x)
    for (std::size_t y = 0; y < rep.characters.size(); ++y) {
      Rational ip = 0;
      for (const auto& g : elems) ip += rep.characters[x].values[g.index()] * rep.characters[y].values[g.index()];
      ip /= 8;
      if (ip != (x == y ? 1 : 0)) rep.orthonormal = false;
    }
  rep.sum_of_squares = 0;
  for (const auto& chi : rep.characters) rep.sum_of_squares += chi.degree * chi.degree;
  return rep;
}

// ---------------------------------------------------------------------------

KNumber KNumber::operator+(const KNumber& o) const { return {u + o.u, v + o.v, r}; }
KNumber KNumber::operator-(const KNumber& o) const { return {u - o.u, v - o.v, r}; }
KNumber KNumber::operator*(const KNumber& o) const {
  if (r != o.r) throw std::invalid_argument("KNumber: mismatched fields");
  return {u * o.u + r * v * o.v, u * o.v + v * o.u, r};
}

KMatrix2 multiply(const KMatrix2& a, const KMatrix2& b) {
  KMatrix2 out;
  const Rational& r = a[0][0].r;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) out[x][y] = (a[x][0] * b[0][y]) + (a[x][1] * b[1][y]);
  for (auto& row : out)
    for (auto& e : row) e.r = r;
  return out;
}

KMatrix2 embed_in_m2k(const QuatElem& x) {
  const Rational& r = x.params().r;
  const Rational& s = x.params().s;
  const KNumber xk{x.a(), x.b(), r};
  const KNumber yk{x.c(), x.d(), r};
  const KNumber sk{s, 0, r};
  return KMatrix2{{{xk, yk}, {sk * yk.conj(), xk.conj()}}};
}

}  // namespace hodge::qalg
