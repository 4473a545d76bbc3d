#include "hodge/weil_classes.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace hodge::weil {

namespace {

using qalg::QuatElem;

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int t = start; t <= n - (k - static_cast<int>(cur.size())); ++t) {
      cur.push_back(t);
      self(self, t + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Expands M e_{i1} ∧ ... ∧ M e_{ik} into sorted monomials.
void expand(const SparseMatrix& m, const std::vector<int>& cols, std::size_t pos, std::vector<int>& rows,
            std::uint64_t used, const Rational& coeff, std::map<std::vector<int>, Rational>& acc) {
  if (pos == cols.size()) {
    std::vector<int> sorted = rows;
    int sign = 1;
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b)
        if (sorted[a] > sorted[b]) sign = -sign;
    std::sort(sorted.begin(), sorted.end());
    acc[sorted] += sign * coeff;
    return;
  }
  for (const auto& [r, val] : m.column(cols[pos])) {
    if (used & (std::uint64_t{1} << r)) continue;
    rows.push_back(static_cast<int>(r));
    expand(m, cols, pos + 1, rows, used | (std::uint64_t{1} << r), coeff * val, acc);
    rows.pop_back();
  }
}

SparseMatrix polynomial_in(const SparseMatrix& x, const WeilPolynomial& f) {
  return x * x + x.scaled(f.a) + SparseMatrix::identity(x.rows()).scaled(f.b);
}

}  // namespace

HModel HModel::make(int n, const qalg::AlgebraParams& params) {
  if (n < 1 || n > 3) throw std::invalid_argument("HModel::make: n must be between 1 and 3");
  return {n, params};
}

SparseMatrix HModel::action(const QuatElem& y) const {
  if (!(y.params() == params)) throw std::invalid_argument("HModel::action: element from a different algebra");
  const QMatrix block = qalg::left_mult_matrix(y);
  QMatrix full(dim(), dim());
  for (int c = 0; c < n; ++c)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t s = 0; s < 4; ++s) full(4 * c + r, 4 * c + s) = block(r, s);
  return SparseMatrix::from_dense(full);
}

bool HModel::relations_hold() const {
  const SparseMatrix mi = action(QuatElem::unit_i(params));
  const SparseMatrix mj = action(QuatElem::unit_j(params));
  const SparseMatrix id = SparseMatrix::identity(dim());
  return mi * mi == id.scaled(params.r) && mj * mj == id.scaled(params.s) && mi * mj == (mj * mi).scaled(-1);
}

std::string KElement::to_string() const {
  std::string s = u.get_str();
  s += sgn(v) < 0 ? "-" : "+";
  const Rational av = abs(v);
  if (av != 1) s += av.get_str();
  return s + "i";
}

std::size_t exterior_dim(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

SparseMatrix exterior_action(const SparseMatrix& m, int k) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exterior_action: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (k < 0 || k > n) throw std::invalid_argument("exterior_action: degree out of range");
  if (n > 64 || exterior_dim(n, k) > kMaxExteriorDim)
    throw std::length_error("exterior_action: exterior power too large");
  const auto mons = subsets(n, k);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t t = 0; t < mons.size(); ++t) index[mons[t]] = t;

  SparseMatrix out(mons.size(), mons.size());
  for (std::size_t col = 0; col < mons.size(); ++col) {
    std::map<std::vector<int>, Rational> acc;
    std::vector<int> rows;
    expand(m, mons[col], 0, rows, 0, Rational(1), acc);
    SparseVector v;
    for (const auto& [mon, c] : acc)
      if (!is_zero(c)) v.emplace_back(index.at(mon), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.column(col) = std::move(v);
  }
  return out;
}

WeilPolynomial weil_polynomial(const Rational& trace, const Rational& norm, int n) {
  // Power sums p_m of the two conjugates.
  Rational p_prev = 2, p_cur = trace;
  for (int m = 2; m <= 2 * n; ++m) {
    Rational next = trace * p_cur - norm * p_prev;
    p_prev = p_cur;
    p_cur = next;
  }
  Rational b = 1;
  for (int m = 0; m < 2 * n; ++m) b *= norm;
  return {-p_cur, b};
}

Subspace weil_kernel(const HModel& model, const KElement& x) {
  if (is_zero(x.v)) throw std::invalid_argument("weil_kernel: x must not be rational");
  const SparseMatrix ext = exterior_action(model.action(x.as_quat(model.params)), 2 * model.n);
  const WeilPolynomial f = weil_polynomial(x.trace(), x.norm(model.params), model.n);
  return Subspace::span(ext.rows(), sparse_kernel(polynomial_in(ext, f)));
}

WeilSpace weil_space(const HModel& model, std::vector<KElement> generators, int ladder_limit) {
  bool have_irrational = false;
  for (const auto& g : generators) have_irrational = have_irrational || !is_zero(g.v);
  if (!have_irrational) throw std::invalid_argument("weil_space: need a non-rational generator");

  WeilSpace ws;
  bool first = true;
  auto add = [&](const KElement& x) {
    const Subspace k = weil_kernel(model, x);
    ws.space = first ? k : ws.space.intersect(k);
    first = false;
    ws.generators_used.push_back(x);
  };
  for (const auto& g : generators)
    if (!is_zero(g.v)) add(g);

  int stable = 0;
  for (int rung = 1; rung <= ladder_limit && stable < 2; ++rung) {
    const std::size_t before = ws.space.dim();
    add(KElement{Rational(rung), Rational(1)});
    stable = ws.space.dim() == before ? stable + 1 : 0;
  }
  if (ws.space.dim() < 2)
    throw std::runtime_error("weil_space: dimension " + std::to_string(ws.space.dim()) + " is below 2");
  return ws;
}

QuaternionSpan quaternion_span(const HModel& model, const Subspace& wk, int max_rounds) {
  const auto& p = model.params;
  const std::vector<QuatElem> translates{
      QuatElem::scalar(1, p),          QuatElem::unit_i(p),       QuatElem::unit_j(p),
      QuatElem::unit_k(p),             QuatElem{1, 1, 0, 0, p},   QuatElem{1, 0, 1, 0, p},
      QuatElem{1, 0, 0, 1, p},         QuatElem{0, 1, 1, 0, p}};
  std::vector<SparseMatrix> ops;
  for (const auto& y : translates) ops.push_back(exterior_action(model.action(y), 2 * model.n));

  QuaternionSpan qs{wk, 0};
  while (true) {
    if (qs.rounds >= max_rounds) throw std::runtime_error("quaternion_span: no stabilization within the round limit");
    ++qs.rounds;
    bool grew = false;
    const std::vector<SparseVector> current = qs.space.basis();
    for (const auto& op : ops)
      for (const auto& v : current) grew = qs.space.insert(op.apply(v)) || grew;
    if (!grew) break;
  }
  return qs;
}

WeilReport weil_report(int n, const qalg::AlgebraParams& params, int ladder_limit) {
  const HModel model = HModel::make(n, params);
  if (!model.relations_hold()) throw std::logic_error("weil_report: quaternion action is not a representation");
  WeilReport rep;
  rep.n = n;
  rep.params = params;
  rep.ambient_dim = exterior_dim(model.dim(), 2 * n);

  const WeilSpace wk = weil_space(model, {KElement{Rational(0), Rational(1)}}, ladder_limit);
  rep.dim_wk = wk.space.dim();
  for (const auto& g : wk.generators_used) rep.generators_used.push_back(g.to_string());

  const QuaternionSpan wf = quaternion_span(model, wk.space);
  rep.dim_wf = wf.space.dim();
  rep.span_rounds = wf.rounds;
  rep.wk_in_wf = wf.space.contains(wk.space);
  rep.wf_f_stable = true;
  for (const auto& y : {qalg::QuatElem::unit_i(params), qalg::QuatElem::unit_j(params)}) {
    const Subspace image = wf.space.image_under(exterior_action(model.action(y), 2 * n));
    rep.wf_f_stable = rep.wf_f_stable && image == wf.space;
  }
  return rep;
}

}  // namespace hodge::weil
