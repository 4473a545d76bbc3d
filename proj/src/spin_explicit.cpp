#include "hodge/spin_explicit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hodge/lie_engine.hpp"

namespace hodge::spin {

namespace {

constexpr std::array<unsigned, 8> kMasks{0U, 1U, 2U, 4U, 3U, 5U, 6U, 7U};

int index_of_mask(unsigned mask) {
  for (int t = 0; t < kSpinDim; ++t)
    if (kMasks[t] == mask) return t;
  throw std::logic_error("index_of_mask: bad subset");
}

int popcount_below(unsigned mask, int element) {
  int n = 0;
  for (int j = 1; j < element; ++j)
    if (mask & (1U << (j - 1))) ++n;
  return n;
}

QMatrix wedge_op(int i) {
  QMatrix m(kSpinDim, kSpinDim);
  const unsigned bit = 1U << (i - 1);
  for (int t = 0; t < kSpinDim; ++t) {
    const unsigned s = kMasks[t];
    if (s & bit) continue;
    m(index_of_mask(s | bit), t) = popcount_below(s, i) % 2 ? -1 : 1;
  }
  return m;
}

QMatrix contract_op(int i) {
  QMatrix m(kSpinDim, kSpinDim);
  const unsigned bit = 1U << (i - 1);
  for (int t = 0; t < kSpinDim; ++t) {
    const unsigned s = kMasks[t];
    if (!(s & bit)) continue;
    m(index_of_mask(s & ~bit), t) = popcount_below(s, i) % 2 ? -1 : 1;
  }
  return m;
}

QMatrix parity_op() {
  QMatrix m(kSpinDim, kSpinDim);
  for (int t = 0; t < kSpinDim; ++t) m(t, t) = __builtin_popcount(kMasks[t]) % 2 ? -1 : 1;
  return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix combine(const std::vector<QMatrix>& mats, const std::vector<Rational>& coeffs) {
  QMatrix out(mats.front().rows(), mats.front().cols());
  for (std::size_t t = 0; t < mats.size(); ++t)
    if (!is_zero(coeffs[t])) out = out + mats[t].scaled(coeffs[t]);
  return out;
}

// Sorts m in place and returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& m) {
  int sign = 1;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (m[a] == m[b]) return 0;
      if (m[a] > m[b]) sign = -sign;
    }
  std::sort(m.begin(), m.end());
  return sign;
}

std::map<std::vector<int>, std::size_t> monomial_index(int k) {
  std::map<std::vector<int>, std::size_t> idx;
  const auto mons = wedge_monomials(k);
  for (std::size_t t = 0; t < mons.size(); ++t) idx[mons[t]] = t;
  return idx;
}

std::array<int, 3> monomial_weight(const std::vector<int>& m) {
  std::array<int, 3> w{0, 0, 0};
  for (int s : m) {
    const auto sw = spinor_weight(s);
    for (int t = 0; t < 3; ++t) w[t] += sw[t];
  }
  return w;
}

std::size_t joint_kernel_dim(const std::vector<QMatrix>& ops) {
  QMatrix stacked(0, 0);
  for (const auto& op : ops)
    for (std::size_t r = 0; r < op.rows(); ++r) stacked.append_row(op.row(r));
  return nullspace(stacked).rows();
}

struct Candidate {
  Rational scale;
  int parity_sign;
};

SpinRep assemble(const Candidate& c) {
  SpinRep rep;
  rep.basis = so7_basis();
  rep.scale = c.scale;
  rep.parity_sign = c.parity_sign;
  for (int i = 1; i <= 3; ++i) {
    rep.clifford[i - 1] = wedge_op(i);
    rep.clifford[i + 2] = contract_op(i);
  }
  rep.clifford[6] = parity_op().scaled(Rational(c.parity_sign));
  const QMatrix b = bilinear_form();
  const QMatrix id = QMatrix::identity(kSpinDim);
  for (const auto& [a, bb] : rep.basis)
    rep.rho.push_back((rep.clifford[a - 1] * rep.clifford[bb - 1] - id.scaled(b(a - 1, bb - 1))).scaled(c.scale));
  return rep;
}

bool clifford_relations_hold(const SpinRep& rep) {
  const QMatrix b = bilinear_form();
  const QMatrix id = QMatrix::identity(kSpinDim);
  for (int u = 0; u < 7; ++u)
    for (int v = 0; v < 7; ++v) {
      const QMatrix anti = rep.clifford[u] * rep.clifford[v] + rep.clifford[v] * rep.clifford[u];
      if (!(anti == id.scaled(2 * b(u, v)))) return false;
    }
  return true;
}

bool displayed_formula_holds(const SpinRep& rep) {
  const QMatrix par = parity_op();
  for (int i = 1; i <= 3; ++i)
    if (!(rep.of(i, 7) == wedge_op(i) * par)) return false;
  return true;
}

bool bracket_ok(const SpinRep& rep, std::size_t x, std::size_t y) {
  const auto [xa, xb] = rep.basis[x];
  const auto [ya, yb] = rep.basis[y];
  const auto coeffs = so7_coordinates(commutator(vector_action(xa, xb), vector_action(ya, yb)));
  return commutator(rep.rho[x], rep.rho[y]) == combine(rep.rho, coeffs);
}

bool all_brackets_ok(const SpinRep& rep) {
  for (std::size_t x = 0; x < rep.basis.size(); ++x)
    for (std::size_t y = x + 1; y < rep.basis.size(); ++y)
      if (!bracket_ok(rep, x, y)) return false;
  return true;
}

// The eight terms of the printed invariant, in printed order.
const std::array<std::pair<std::array<int, 4>, int>, 8> kPrinted{{
    {{0, 4, 5, 6}, 2}, {{0, 3, 4, 7}, -1}, {{0, 2, 5, 7}, 1}, {{0, 1, 6, 7}, -1},
    {{2, 3, 4, 5}, 1}, {{1, 3, 4, 5}, -1}, {{1, 2, 5, 6}, 1}, {{1, 2, 3, 7}, 2}}};

const std::vector<int> kEvenMonomial{0, 4, 5, 6};

}  // namespace

QMatrix bilinear_form() {
  QMatrix b(7, 7);
  for (int i = 0; i < 3; ++i) {
    b(i, i + 3) = Rational(1, 2);
    b(i + 3, i) = Rational(1, 2);
  }
  b(6, 6) = 1;
  return b;
}

unsigned spinor_subset(int index) {
  if (index < 0 || index >= kSpinDim) throw std::out_of_range("spinor_subset: index out of range");
  return kMasks[index];
}

std::string spinor_label(int index) {
  const unsigned s = spinor_subset(index);
  std::string out = "e{";
  for (int t = 1; t <= 3; ++t)
    if (s & (1U << (t - 1))) out += std::to_string(t);
  return out + "}";
}

std::array<int, 3> spinor_weight(int index) {
  const unsigned s = spinor_subset(index);
  std::array<int, 3> w{};
  for (int t = 0; t < 3; ++t) w[t] = (s & (1U << t)) ? 1 : -1;
  return w;
}

std::vector<std::pair<int, int>> so7_basis() {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) out.emplace_back(a, b);
  return out;
}

QMatrix vector_action(int a, int b) {
  const QMatrix form = bilinear_form();
  QMatrix m(7, 7);
  for (int t = 0; t < 7; ++t) {
    m(a - 1, t) += 2 * form(b - 1, t);
    m(b - 1, t) -= 2 * form(a - 1, t);
  }
  return m;
}

std::vector<Rational> so7_coordinates(const QMatrix& m) {
  QMatrix rows(0, 0);
  for (const auto& [a, b] : so7_basis()) {
    const QMatrix v = vector_action(a, b);
    rows.append_row(v.data());
  }
  const auto c = coordinates_in(rows, m.data());
  if (!c) throw std::invalid_argument("so7_coordinates: matrix does not preserve the form");
  return *c;
}

const QMatrix& SpinRep::of(int a, int b) const {
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (basis[t] == std::make_pair(a, b)) return rho[t];
  throw std::out_of_range("SpinRep::of: not a basis pair (need a < b)");
}

SpinRep build_spin_rep() {
  std::vector<Candidate> passing;
  for (int parity : {1, -1})
    for (const Rational& scale : {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2)}) {
      const SpinRep rep = assemble({scale, parity});
      if (!clifford_relations_hold(rep)) throw std::logic_error("build_spin_rep: Clifford relations fail");
      if (displayed_formula_holds(rep) && all_brackets_ok(rep)) passing.push_back({scale, parity});
    }
  if (passing.empty()) throw std::logic_error("build_spin_rep: no normalization satisfies both constraints");
  SpinRep rep = assemble(passing.front());
  rep.candidates_passing = static_cast<int>(passing.size());
  return rep;
}

std::vector<BracketCheck> check_brackets(const SpinRep& rep) {
  std::vector<BracketCheck> out;
  for (std::size_t x = 0; x < rep.basis.size(); ++x)
    for (std::size_t y = x + 1; y < rep.basis.size(); ++y) out.push_back({rep.basis[x], rep.basis[y], bracket_ok(rep, x, y)});
  return out;
}

std::vector<std::vector<int>> wedge_monomials(int k) {
  if (k < 0 || k > kSpinDim) throw std::invalid_argument("wedge_monomials: degree out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int t = start; t < kSpinDim; ++t) {
      cur.push_back(t);
      self(self, t + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

QMatrix wedge_derivation(const QMatrix& op, int k) {
  const auto mons = wedge_monomials(k);
  const auto idx = monomial_index(k);
  QMatrix out(mons.size(), mons.size());
  for (std::size_t col = 0; col < mons.size(); ++col)
    for (int slot = 0; slot < k; ++slot)
      for (int r = 0; r < kSpinDim; ++r) {
        const Rational& a = op(r, mons[col][slot]);
        if (is_zero(a)) continue;
        std::vector<int> m = mons[col];
        m[slot] = r;
        const int sign = sort_with_sign(m);
        if (sign == 0) continue;
        out(idx.at(m), col) += sign * a;
      }
  return out;
}

QMatrix sym2_derivation(const QMatrix& op) {
  std::vector<std::pair<int, int>> mons;
  std::map<std::pair<int, int>, std::size_t> idx;
  for (int i = 0; i < kSpinDim; ++i)
    for (int j = i; j < kSpinDim; ++j) {
      idx[{i, j}] = mons.size();
      mons.emplace_back(i, j);
    }
  auto key = [](int a, int b) { return a <= b ? std::make_pair(a, b) : std::make_pair(b, a); };
  QMatrix out(mons.size(), mons.size());
  for (std::size_t col = 0; col < mons.size(); ++col) {
    const auto [i, j] = mons[col];
    for (int r = 0; r < kSpinDim; ++r) {
      if (!is_zero(op(r, i))) out(idx.at(key(r, j)), col) += op(r, i);
      if (!is_zero(op(r, j))) out(idx.at(key(i, r)), col) += op(r, j);
    }
  }
  return out;
}

std::vector<std::vector<int>> weight_zero_basis() {
  std::vector<std::vector<int>> out;
  for (const auto& m : wedge_monomials(4))
    if (monomial_weight(m) == std::array<int, 3>{0, 0, 0}) out.push_back(m);
  return out;
}

InvariantReport so7_invariant(const SpinRep& rep) {
  InvariantReport inv;
  inv.monomials = weight_zero_basis();
  const auto idx = monomial_index(4);
  std::vector<std::size_t> cols;
  for (const auto& m : inv.monomials) cols.push_back(idx.at(m));

  QMatrix stacked(0, 0);
  for (int i = 1; i <= 3; ++i) {
    const QMatrix d = wedge_derivation(rep.of(i, 7), 4);
    for (std::size_t r = 0; r < d.rows(); ++r) {
      std::vector<Rational> row;
      for (std::size_t c : cols) row.push_back(d(r, c));
      stacked.append_row(row);
    }
  }
  const QMatrix ker = nullspace(stacked);
  inv.kernel_dim = ker.rows();
  if (inv.kernel_dim != 1)
    throw std::logic_error("so7_invariant: joint kernel has dimension " + std::to_string(inv.kernel_dim));

  std::vector<Rational> v = ker.row(0);
  // Scale so the ∧^4 W coefficient is 2; if it vanishes, scale the first nonzero entry to 1.
  const auto even_pos = static_cast<std::size_t>(
      std::find(inv.monomials.begin(), inv.monomials.end(), kEvenMonomial) - inv.monomials.begin());
  std::size_t pivot = even_pos;
  Rational target = 2;
  if (is_zero(v[pivot])) {
    pivot = 0;
    while (is_zero(v[pivot])) ++pivot;
    target = 1;
  }
  const Rational factor = target / v[pivot];
  for (auto& x : v) x *= factor;
  inv.coefficients = v;

  inv.full_vector.assign(idx.size(), Rational(0));
  for (std::size_t t = 0; t < cols.size(); ++t) inv.full_vector[cols[t]] = v[t];

  inv.annihilated_by_all = true;
  for (const auto& r : rep.rho) {
    const auto image = wedge_derivation(r, 4) * inv.full_vector;
    for (const auto& x : image) inv.annihilated_by_all = inv.annihilated_by_all && is_zero(x);
  }
  return inv;
}

Rational project_even(const std::vector<Rational>& wedge4_vector) {
  const auto idx = monomial_index(4);
  if (wedge4_vector.size() != idx.size()) throw std::invalid_argument("project_even: expected 70 coordinates");
  return wedge4_vector[idx.at(kEvenMonomial)];
}

PrintedComparison compare_with_printed(const InvariantReport& inv) {
  PrintedComparison cmp;
  const auto idx = monomial_index(4);
  std::vector<std::vector<int>> printed_set;
  cmp.all_match = true;
  for (const auto& [mon, coeff] : kPrinted) {
    PrintedTerm t;
    t.monomial.assign(mon.begin(), mon.end());
    t.printed = coeff;
    t.weight_zero = monomial_weight(t.monomial) == std::array<int, 3>{0, 0, 0};
    t.computed = inv.full_vector.at(idx.at(t.monomial));
    t.matches = t.computed == t.printed;
    cmp.all_match = cmp.all_match && t.matches;
    printed_set.push_back(t.monomial);
    cmp.terms.push_back(std::move(t));
  }
  for (std::size_t t = 0; t < inv.monomials.size(); ++t)
    if (!is_zero(inv.coefficients[t]) &&
        std::find(printed_set.begin(), printed_set.end(), inv.monomials[t]) == printed_set.end())
      cmp.missing.push_back(inv.monomials[t]);
  cmp.all_match = cmp.all_match && cmp.missing.empty();
  return cmp;
}

WeightCrossCheck cross_check_weights(const SpinRep& rep) {
  WeightCrossCheck out;
  const lie::AlgebraType b3 = lie::AlgebraType::parse("B3");
  const lie::WeightMultiset engine_spin = lie::irrep_weights(b3, {1, 1, 1});

  lie::WeightMultiset model_spin(3);
  std::vector<std::array<int, 3>> eig(kSpinDim);
  bool diagonal = true;
  for (int i = 1; i <= 3; ++i) {
    const QMatrix& h = rep.of(i, i + 3);
    for (int r = 0; r < kSpinDim; ++r)
      for (int c = 0; c < kSpinDim; ++c) {
        if (r == c) {
          const Rational twice = 2 * h(r, r);
          if (twice.get_den() != 1) diagonal = false;
          eig[r][i - 1] = static_cast<int>(twice.get_num().get_si());
        } else if (!is_zero(h(r, c))) {
          diagonal = false;
        }
      }
  }
  for (int r = 0; r < kSpinDim; ++r) model_spin.add({eig[r][0], eig[r][1], eig[r][2]});
  out.spin_match = diagonal && model_spin == engine_spin;

  lie::WeightMultiset model4(3);
  for (const auto& m : wedge_monomials(4)) {
    lie::Weight w(3, 0);
    for (int s : m)
      for (int t = 0; t < 3; ++t) w[t] += eig[s][t];
    model4.add(w);
  }
  const lie::WeightMultiset engine4 = lie::wedge_power(engine_spin, 4);
  out.wedge4_match = model4 == engine4;
  out.wedge4_zero_model = static_cast<int>(model4.multiplicity({0, 0, 0}));
  out.wedge4_zero_engine = static_cast<int>(engine4.multiplicity({0, 0, 0}));

  std::vector<QMatrix> w2, s2;
  for (const auto& r : rep.rho) {
    w2.push_back(wedge_derivation(r, 2));
    s2.push_back(sym2_derivation(r));
  }
  out.wedge2_invariants = joint_kernel_dim(w2);
  out.sym2_invariants = joint_kernel_dim(s2);
  return out;
}

std::string monomial_label(const std::vector<int>& m) {
  std::string s;
  for (std::size_t t = 0; t < m.size(); ++t) s += (t ? "^" : "") + spinor_label(m[t]);
  return s;
}

}  // namespace hodge::spin
