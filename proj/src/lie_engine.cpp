#include "hodge/lie_engine.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hodge::lie {

namespace {

using Frac = boost::rational<std::int64_t>;

// ---------------------------------------------------------------------------
// Per-factor root data. All vectors are doubled, in stored coordinates.

Weight to_full(const SimpleFactor& f, const Weight& x) {
  Weight full = x;
  if (f.family == Family::A) full.push_back(0);
  return full;
}

Weight from_full(const SimpleFactor& f, Weight full) {
  if (f.family != Family::A) return full;
  const int last = full.back();
  full.pop_back();
  for (auto& v : full) v -= last;
  return full;
}

Frac inner(const SimpleFactor& f, const Weight& x, const Weight& y) {
  const Weight fx = to_full(f, x), fy = to_full(f, y);
  std::int64_t dot = 0;
  for (std::size_t t = 0; t < fx.size(); ++t) dot += static_cast<std::int64_t>(fx[t]) * fy[t];
  if (f.family != Family::A) return Frac(dot);
  std::int64_t sx = 0, sy = 0;
  for (std::size_t t = 0; t < fx.size(); ++t) {
    sx += fx[t];
    sy += fy[t];
  }
  return Frac(dot) - Frac(sx * sy, static_cast<std::int64_t>(fx.size()));
}

std::vector<Weight> positive_roots(const SimpleFactor& f) {
  std::vector<Weight> roots;
  const int n = f.family == Family::A ? f.rank + 1 : f.rank;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight r(n, 0);
      r[i] = 2;
      r[j] = -2;
      roots.push_back(f.family == Family::A ? from_full(f, r) : r);
      if (f.family != Family::A) {
        r[j] = 2;
        roots.push_back(r);
      }
    }
  if (f.family == Family::B)
    for (int i = 0; i < n; ++i) {
      Weight r(n, 0);
      r[i] = 2;
      roots.push_back(r);
    }
  return roots;
}

Weight rho(const SimpleFactor& f) {
  Weight r(f.rank);
  for (int i = 0; i < f.rank; ++i) {
    switch (f.family) {
      case Family::A: r[i] = 2 * (f.rank - i); break;
      case Family::B: r[i] = 2 * (f.rank - i) - 1; break;
      case Family::D: r[i] = 2 * (f.rank - 1 - i); break;
    }
  }
  return r;
}

bool factor_dominant(const SimpleFactor& f, const Weight& x) {
  const int n = static_cast<int>(x.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (f.family == Family::D && i == n - 2) break;
    if (x[i] < x[i + 1]) return false;
  }
  switch (f.family) {
    case Family::A:
    case Family::B: return x[n - 1] >= 0;
    case Family::D: return n < 2 || x[n - 2] >= std::abs(x[n - 1]);
  }
  return false;
}

Weight factor_dominant_rep(const SimpleFactor& f, const Weight& x) {
  if (f.family == Family::A) {
    Weight full = to_full(f, x);
    std::sort(full.begin(), full.end(), std::greater<>());
    return from_full(f, full);
  }
  Weight y = x;
  int negatives = 0;
  bool has_zero = false;
  for (auto& v : y) {
    if (v < 0) ++negatives;
    if (v == 0) has_zero = true;
    v = std::abs(v);
  }
  std::sort(y.begin(), y.end(), std::greater<>());
  if (f.family == Family::D && !has_zero && negatives % 2 == 1) y.back() = -y.back();
  return y;
}

Weight factor_reflect(const SimpleFactor& f, const Weight& x, int idx) {
  const int r = f.rank;
  if (f.family == Family::A) {
    Weight full = to_full(f, x);
    std::swap(full[idx], full[idx + 1]);
    return from_full(f, full);
  }
  Weight y = x;
  if (idx < r - 1) {
    std::swap(y[idx], y[idx + 1]);
  } else if (f.family == Family::B) {
    y[r - 1] = -y[r - 1];
  } else {
    const int a = y[r - 2];
    y[r - 2] = -y[r - 1];
    y[r - 1] = -a;
  }
  return y;
}

Weight add_scaled(const Weight& a, const Weight& b, int k) {
  Weight s = a;
  for (std::size_t t = 0; t < s.size(); ++t) s[t] += k * b[t];
  return s;
}

Weight slice(const Weight& w, int off, int len) { return Weight(w.begin() + off, w.begin() + off + len); }

std::vector<Weight> factor_orbit(const SimpleFactor& f, const Weight& x) {
  std::set<Weight> seen{x};
  std::queue<Weight> q;
  q.push(x);
  while (!q.empty()) {
    const Weight cur = q.front();
    q.pop();
    for (int i = 0; i < f.rank; ++i) {
      Weight nxt = factor_reflect(f, cur, i);
      if (seen.insert(nxt).second) q.push(std::move(nxt));
    }
  }
  return {seen.begin(), seen.end()};
}

// Freudenthal's recursion over the dominant weights of one simple factor.
std::map<Weight, std::int64_t> factor_irrep(const SimpleFactor& f, const Weight& lambda) {
  if (!factor_dominant(f, lambda)) throw std::invalid_argument("irrep_weights: highest weight is not dominant");
  const auto roots = positive_roots(f);
  const Weight rh = rho(f);

  std::set<Weight> dominant{lambda};
  std::queue<Weight> q;
  q.push(lambda);
  while (!q.empty()) {
    const Weight mu = q.front();
    q.pop();
    for (const auto& a : roots) {
      Weight nu = add_scaled(mu, a, -1);
      if (factor_dominant(f, nu) && dominant.insert(nu).second) q.push(std::move(nu));
    }
  }

  auto norm_shift = [&](const Weight& w) {
    const Weight s = add_scaled(w, rh, 1);
    return inner(f, s, s);
  };
  std::vector<Weight> order(dominant.begin(), dominant.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return norm_shift(a) > norm_shift(b); });

  const Frac top = norm_shift(lambda);
  std::map<Weight, std::int64_t> mult;
  mult[lambda] = 1;
  for (const auto& mu : order) {
    if (mu == lambda) continue;
    Frac sum(0);
    for (const auto& a : roots)
      for (int k = 1;; ++k) {
        const Weight up = add_scaled(mu, a, k);
        const Weight rep = factor_dominant_rep(f, up);
        if (!dominant.count(rep)) break;
        const auto it = mult.find(rep);
        if (it == mult.end()) throw std::logic_error("irrep_weights: dominant weights processed out of order");
        sum += Frac(it->second) * inner(f, up, a);
      }
    const Frac m = Frac(2) * sum / (top - norm_shift(mu));
    if (m.denominator() != 1 || m.numerator() < 0) throw std::logic_error("irrep_weights: non-integral multiplicity");
    if (m.numerator() > 0) mult[mu] = m.numerator();
  }

  std::map<Weight, std::int64_t> all;
  for (const auto& [mu, m] : mult)
    for (const auto& w : factor_orbit(f, mu)) all[w] += m;
  return all;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

WeightMultiset power(const WeightMultiset& ms, int k, bool exterior) {
  if (k < 0) throw std::invalid_argument("power: negative degree");
  if (exterior && k > ms.total()) throw std::invalid_argument("wedge_power: degree exceeds dimension");
  std::vector<std::map<Weight, std::int64_t>> dp(k + 1);
  dp[0][Weight(ms.coords(), 0)] = 1;
  for (const auto& [w, m] : ms.entries()) {
    std::vector<std::map<Weight, std::int64_t>> next(k + 1);
    for (int c = 0; c <= k; ++c)
      for (const auto& [sum, cnt] : dp[c]) {
        const int top = exterior ? static_cast<int>(std::min<std::int64_t>(m, k - c)) : k - c;
        for (int j = 0; j <= top; ++j) {
          const std::int64_t ways = exterior ? binomial(m, j) : binomial(m + j - 1, j);
          next[c + j][add_scaled(sum, w, j)] += cnt * ways;
        }
      }
    dp = std::move(next);
  }
  WeightMultiset out(ms.coords());
  for (const auto& [w, m] : dp[k]) out.add(w, m);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string SimpleFactor::to_string() const {
  const char c = family == Family::A ? 'A' : family == Family::B ? 'B' : 'D';
  return std::string(1, c) + std::to_string(rank);
}

AlgebraType AlgebraType::parse(const std::string& text) {
  std::string s;
  for (std::size_t t = 0; t < text.size(); ++t) {
    if (text.compare(t, 3, "⊕") == 0) {
      s += '+';
      t += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[t]))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(text[t])));
    }
  }
  AlgebraType alg;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, '+')) {
    SimpleFactor f;
    int n = 0;
    try {
      if (part.rfind("so", 0) == 0) {
        n = std::stoi(part.substr(2));
        if (n < 4) throw std::invalid_argument("");
        f = n % 2 ? SimpleFactor{Family::B, (n - 1) / 2} : SimpleFactor{Family::D, n / 2};
      } else if (part.rfind("sl", 0) == 0) {
        n = std::stoi(part.substr(2));
        f = {Family::A, n - 1};
      } else if (!part.empty() && (part[0] == 'a' || part[0] == 'b' || part[0] == 'd')) {
        n = std::stoi(part.substr(1));
        f = {part[0] == 'a' ? Family::A : part[0] == 'b' ? Family::B : Family::D, n};
      } else {
        throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("AlgebraType::parse: cannot read factor '" + part + "'");
    }
    if (f.rank < 1 || (f.family == Family::D && f.rank < 2))
      throw std::invalid_argument("AlgebraType::parse: rank too small in '" + part + "'");
    alg.factors.push_back(f);
  }
  if (alg.factors.empty()) throw std::invalid_argument("AlgebraType::parse: empty algebra");
  return alg;
}

int AlgebraType::total_coords() const {
  int n = 0;
  for (const auto& f : factors) n += f.coords();
  return n;
}

int AlgebraType::offset(std::size_t factor) const {
  int n = 0;
  for (std::size_t t = 0; t < factor; ++t) n += factors[t].coords();
  return n;
}

std::string AlgebraType::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < factors.size(); ++t) s += (t ? "+" : "") + factors[t].to_string();
  return s;
}

Weight parse_weight(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  Weight w;
  std::string tok;
  while (is >> tok) {
    const auto slash = tok.find('/');
    const int num = std::stoi(tok.substr(0, slash));
    const int den = slash == std::string::npos ? 1 : std::stoi(tok.substr(slash + 1));
    if (den != 1 && den != 2) throw std::invalid_argument("parse_weight: only integral or half-integral coordinates");
    w.push_back(den == 1 ? 2 * num : num);
  }
  return w;
}

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += ",";
    s += w[t] % 2 == 0 ? std::to_string(w[t] / 2) : std::to_string(w[t]) + "/2";
  }
  return s + ")";
}

bool is_dominant(const AlgebraType& alg, const Weight& w) {
  if (static_cast<int>(w.size()) != alg.total_coords()) throw std::invalid_argument("is_dominant: wrong length");
  for (std::size_t f = 0; f < alg.factors.size(); ++f)
    if (!factor_dominant(alg.factors[f], slice(w, alg.offset(f), alg.factors[f].coords()))) return false;
  return true;
}

Weight dominant_representative(const AlgebraType& alg, const Weight& w) {
  Weight out;
  for (std::size_t f = 0; f < alg.factors.size(); ++f) {
    const Weight part = factor_dominant_rep(alg.factors[f], slice(w, alg.offset(f), alg.factors[f].coords()));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int simple_reflection_count(const AlgebraType& alg) { return alg.total_coords(); }

Weight simple_reflection(const AlgebraType& alg, const Weight& w, int index) {
  for (std::size_t f = 0; f < alg.factors.size(); ++f) {
    const int off = alg.offset(f), len = alg.factors[f].coords();
    if (index < len) {
      const Weight part = factor_reflect(alg.factors[f], slice(w, off, len), index);
      Weight out = w;
      std::copy(part.begin(), part.end(), out.begin() + off);
      return out;
    }
    index -= len;
  }
  throw std::out_of_range("simple_reflection: index out of range");
}

// ---------------------------------------------------------------------------

void WeightMultiset::add(const Weight& w, std::int64_t mult) {
  if (static_cast<int>(w.size()) != coords_) throw std::invalid_argument("WeightMultiset::add: wrong weight length");
  if (mult == 0) return;
  auto& m = entries_[w];
  m += mult;
  if (m < 0) throw std::domain_error("WeightMultiset::add: negative multiplicity");
  if (m == 0) entries_.erase(w);
}

std::int64_t WeightMultiset::multiplicity(const Weight& w) const {
  const auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::total() const {
  std::int64_t n = 0;
  for (const auto& [w, m] : entries_) n += m;
  return n;
}

WeightMultiset irrep_weights(const AlgebraType& alg, const Weight& highest) {
  if (!is_dominant(alg, highest)) throw std::invalid_argument("irrep_weights: highest weight is not dominant");
  WeightMultiset out(alg.total_coords());
  out.add(Weight(alg.total_coords(), 0));
  for (std::size_t f = 0; f < alg.factors.size(); ++f) {
    const int off = alg.offset(f), len = alg.factors[f].coords();
    const auto part = factor_irrep(alg.factors[f], slice(highest, off, len));
    WeightMultiset next(alg.total_coords());
    for (const auto& [w, m] : out.entries())
      for (const auto& [v, n] : part) {
        Weight x = w;
        std::copy(v.begin(), v.end(), x.begin() + off);
        next.add(x, m * n);
      }
    out = std::move(next);
  }
  return out;
}

std::int64_t weyl_dim(const AlgebraType& alg, const Weight& highest) {
  if (!is_dominant(alg, highest)) throw std::invalid_argument("weyl_dim: highest weight is not dominant");
  Frac d(1);
  for (std::size_t f = 0; f < alg.factors.size(); ++f) {
    const SimpleFactor& sf = alg.factors[f];
    const Weight lam = slice(highest, alg.offset(f), sf.coords());
    const Weight rh = rho(sf);
    const Weight shifted = add_scaled(lam, rh, 1);
    for (const auto& a : positive_roots(sf)) d *= inner(sf, shifted, a) / inner(sf, rh, a);
  }
  if (d.denominator() != 1) throw std::logic_error("weyl_dim: non-integral dimension");
  return d.numerator();
}

WeightMultiset wedge_power(const WeightMultiset& ms, int k) { return power(ms, k, true); }

WeightMultiset sym_power(const WeightMultiset& ms, int k) { return power(ms, k, false); }

WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.coords() != b.coords()) throw std::invalid_argument("tensor: weight lengths differ");
  WeightMultiset out(a.coords());
  for (const auto& [w, m] : a.entries())
    for (const auto& [v, n] : b.entries()) out.add(add_scaled(w, v, 1), m * n);
  return out;
}

WeightMultiset direct_sum(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.coords() != b.coords()) throw std::invalid_argument("direct_sum: weight lengths differ");
  WeightMultiset out = a;
  for (const auto& [w, m] : b.entries()) out.add(w, m);
  return out;
}

WeightMultiset dual(const AlgebraType& alg, const WeightMultiset& ms) {
  if (ms.coords() != alg.total_coords()) throw std::invalid_argument("dual: weight length does not match algebra");
  WeightMultiset out(ms.coords());
  for (const auto& [w, m] : ms.entries()) {
    Weight neg = w;
    for (auto& v : neg) v = -v;
    out.add(neg, m);
  }
  return out;
}

WeightMultiset restrict_coords(const WeightMultiset& ms, const std::vector<int>& source_coords) {
  WeightMultiset out(static_cast<int>(source_coords.size()));
  for (const auto& [w, m] : ms.entries()) {
    Weight x;
    for (int c : source_coords) {
      if (c < 0 || c >= ms.coords()) throw std::out_of_range("restrict_coords: coordinate out of range");
      x.push_back(w[c]);
    }
    out.add(x, m);
  }
  return out;
}

WeightMultiset restrict_d4_to_b3(const WeightMultiset& ms) {
  if (ms.coords() != 4) throw std::invalid_argument("restrict_d4_to_b3: expected 4 coordinates");
  return restrict_coords(ms, {0, 1, 2});
}

Decomposition decompose(const AlgebraType& alg, const WeightMultiset& ms) {
  if (ms.coords() != alg.total_coords()) throw std::invalid_argument("decompose: weight length does not match algebra");
  std::map<Weight, std::int64_t> rem = ms.entries();
  Decomposition out;
  while (!rem.empty()) {
    const auto [top, mult] = *rem.rbegin();
    if (!is_dominant(alg, top)) throw std::domain_error("decompose: not a representation (top weight not dominant)");
    const WeightMultiset irrep = irrep_weights(alg, top);
    for (const auto& [w, m] : irrep.entries()) {
      auto it = rem.find(w);
      if (it == rem.end() || it->second < m * mult) throw std::domain_error("decompose: not a representation");
      it->second -= m * mult;
      if (it->second == 0) rem.erase(it);
    }
    out.push_back({top, mult});
  }
  return out;
}

WeightMultiset reconstruct(const AlgebraType& alg, const Decomposition& d) {
  WeightMultiset out(alg.total_coords());
  for (const auto& c : d) {
    const WeightMultiset irrep = irrep_weights(alg, c.highest);
    for (const auto& [w, m] : irrep.entries()) out.add(w, m * c.multiplicity);
  }
  return out;
}

std::int64_t invariant_dim(const AlgebraType& alg, const WeightMultiset& ms) {
  const Weight zero(alg.total_coords(), 0);
  for (const auto& c : decompose(alg, ms))
    if (c.highest == zero) return c.multiplicity;
  return 0;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t find_factor(const AlgebraType& alg, std::initializer_list<Family> families, int rank = 0) {
  for (std::size_t f = 0; f < alg.factors.size(); ++f)
    for (Family fam : families)
      if (alg.factors[f].family == fam && (rank == 0 || alg.factors[f].rank == rank)) return f;
  return alg.factors.size();
}

WeightMultiset factor_atom(const AlgebraType& alg, std::size_t f, const Weight& highest) {
  Weight full(alg.total_coords(), 0);
  std::copy(highest.begin(), highest.end(), full.begin() + alg.offset(f));
  return irrep_weights(alg, full);
}

}  // namespace

WeightMultiset atom(const AlgebraType& alg, const std::string& raw) {
  std::string name = raw;
  if (name.rfind("Γ", 0) == 0) name = "G" + name.substr(std::string("Γ").size());
  auto missing = [&]() { return std::invalid_argument("atom: '" + raw + "' is not available for " + alg.to_string()); };

  if (name == "G" || name == "G+" || name == "G-") {
    const bool any = name == "G";
    std::size_t f = any ? find_factor(alg, {Family::B}) : alg.factors.size();
    if (f < alg.factors.size()) return factor_atom(alg, f, Weight(alg.factors[f].rank, 1));
    f = find_factor(alg, {Family::D});
    if (f == alg.factors.size()) throw missing();
    Weight plus(alg.factors[f].rank, 1), minus = plus;
    minus.back() = -1;
    if (name == "G+") return factor_atom(alg, f, plus);
    if (name == "G-") return factor_atom(alg, f, minus);
    return direct_sum(factor_atom(alg, f, plus), factor_atom(alg, f, minus));
  }
  if (name == "V") {
    const std::size_t f = find_factor(alg, {Family::B, Family::D});
    if (f == alg.factors.size()) throw missing();
    Weight hw(alg.factors[f].rank, 0);
    hw[0] = 2;
    return factor_atom(alg, f, hw);
  }
  if (name == "W" || name == "W*" || name == "V2") {
    const std::size_t f = name == "V2" ? find_factor(alg, {Family::A}, 1) : find_factor(alg, {Family::A});
    if (f == alg.factors.size()) throw missing();
    Weight hw(alg.factors[f].rank, 0);
    hw[0] = 2;
    const WeightMultiset w = factor_atom(alg, f, hw);
    return name == "W*" ? dual(alg, w) : w;
  }
  throw std::invalid_argument("atom: unknown representation '" + raw + "'");
}

namespace {

class ExprParser {
 public:
  ExprParser(const AlgebraType& alg, std::string text) : alg_(alg), s_(normalize(std::move(text))) {}

  WeightMultiset parse() {
    WeightMultiset r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  static std::string normalize(std::string in) {
    const std::pair<const char*, const char*> subs[] = {{"Γ", "G"}, {"⊕", "(+)"}, {"⊗", "(x)"}, {"∧", "wedge"}};
    for (const auto& [from, to] : subs)
      for (std::size_t p = in.find(from); p != std::string::npos; p = in.find(from, p + std::string(to).size()))
        in.replace(p, std::string(from).size(), to);
    return in;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("evaluate_expression: " + why + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }

  WeightMultiset sum() {
    WeightMultiset r = product();
    while (accept("(+)")) r = direct_sum(r, product());
    return r;
  }
  WeightMultiset product() {
    WeightMultiset r = primary();
    while (accept("(x)")) r = tensor(r, primary());
    return r;
  }
  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  WeightMultiset primary() {
    skip();
    for (const char* fn : {"wedge", "sym"}) {
      if (accept(std::string(fn) + "(")) {
        const int k = integer();
        expect(",");
        WeightMultiset inner = sum();
        expect(")");
        return std::string(fn) == "wedge" ? wedge_power(inner, k) : sym_power(inner, k);
      }
    }
    if (accept("dual(")) {
      WeightMultiset inner = sum();
      expect(")");
      return dual(alg_, inner);
    }
    if (s_.compare(pos_, 3, "(+)") != 0 && s_.compare(pos_, 3, "(x)") != 0 && accept("(")) {
      WeightMultiset inner = sum();
      expect(")");
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-' || s_[pos_] == '*')) ++pos_;
    if (start == pos_) fail("expected a representation");
    return atom(alg_, s_.substr(start, pos_ - start));
  }

  const AlgebraType& alg_;
  std::string s_;
  std::size_t pos_ = 0;
};

ScenarioRow row(std::string claim, std::int64_t expected, std::int64_t computed) {
  return {std::move(claim), std::to_string(expected), std::to_string(computed), expected == computed};
}

}  // namespace

WeightMultiset evaluate_expression(const AlgebraType& alg, const std::string& expr) {
  return ExprParser(alg, expr).parse();
}

std::vector<std::string> scenario_names() {
  return {"so7_hodge", "so8_hodge", "weil_4fold", "selfproduct_weil", "gl2_summand", "spin_sl2_invariants"};
}

std::vector<ScenarioRow> scenario_report(const std::string& name) {
  std::vector<ScenarioRow> rows;
  if (name == "so7_hodge" || name == "so8_hodge") {
    const bool b3 = name == "so7_hodge";
    const AlgebraType alg = AlgebraType::parse(b3 ? "B3" : "D4");
    const std::string sym = b3 ? "G" : "G+";
    const WeightMultiset g = atom(alg, sym);
    const WeightMultiset gg = direct_sum(g, g);
    const std::int64_t expected[] = {1, b3 ? 6 : 1, b3 ? 6 : 1, b3 ? 16 : 10};
    for (int p = 1; p <= 4; ++p)
      rows.push_back(row("invariants in wedge^" + std::to_string(2 * p) + "(" + sym + " (+) " + sym + ") under " + alg.to_string(),
                         expected[p - 1], invariant_dim(alg, wedge_power(gg, 2 * p))));
    if (!b3) rows.push_back(row("middle invariants = 1 + (2n+1) with n = 4", 1 + 9, invariant_dim(alg, wedge_power(gg, 8))));
  } else if (name == "weil_4fold") {
    const AlgebraType alg = AlgebraType::parse("A3");
    const WeightMultiset e = evaluate_expression(alg, "W (+) W*");
    rows.push_back(row("invariants in wedge^4(W (+) W*) under A3", 3, invariant_dim(alg, wedge_power(e, 4))));
  } else if (name == "selfproduct_weil") {
    const AlgebraType alg = AlgebraType::parse("A3");
    const WeightMultiset e = evaluate_expression(alg, "W (+) W* (+) W (+) W*");
    rows.push_back(row("invariants in wedge^2((W (+) W*)^2) under A3", 4, invariant_dim(alg, wedge_power(e, 2))));
  } else if (name == "gl2_summand") {
    const AlgebraType alg = AlgebraType::parse("A1");
    const WeightMultiset v2 = atom(alg, "V2");
    for (int n = 1; n <= 4; ++n) {
      WeightMultiset sum(1);
      for (int t = 0; t < 2 * n; ++t) sum = direct_sum(sum, v2);
      std::int64_t mult = 0;
      for (const auto& c : decompose(alg, wedge_power(sum, 2 * n)))
        if (c.highest == Weight{4 * n}) mult = c.multiplicity;
      rows.push_back(row("multiplicity of the " + std::to_string(2 * n + 1) + "-dim irrep in wedge^" +
                             std::to_string(2 * n) + "(V2^" + std::to_string(2 * n) + ")",
                         1, mult));
    }
  } else if (name == "spin_sl2_invariants") {
    const AlgebraType alg = AlgebraType::parse("B3+A1");
    const WeightMultiset e = wedge_power(evaluate_expression(alg, "G (x) V2"), 4);
    std::map<int, std::int64_t> content;  // A1 highest weight (actual) -> multiplicity
    for (const auto& c : decompose(alg, e))
      if (c.highest[0] == 0 && c.highest[1] == 0 && c.highest[2] == 0) content[c.highest[3] / 2] += c.multiplicity;
    std::string got;
    for (auto it = content.rbegin(); it != content.rend(); ++it) {
      if (!got.empty()) got += " + ";
      got += std::to_string(it->first + 1) + (it->second > 1 ? "x" + std::to_string(it->second) : "");
    }
    const bool ok = content == std::map<int, std::int64_t>{{4, 1}, {0, 1}};
    rows.push_back({"sl2 content of the B3-invariant part of wedge^4(G (x) V2) (dims)", "5 + 1", got, ok});
  } else {
    throw std::invalid_argument("scenario_report: unknown scenario '" + name + "'");
  }
  return rows;
}

}  // namespace hodge::lie
