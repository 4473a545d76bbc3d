#include "hodge/linalg.hpp"

namespace hodge {

namespace {

const Rational* find_entry(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it == v.end() || it->first != index) return nullptr;
  return &it->second;
}

}  // namespace

void sparse_axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rational s = iy->second + a * ix->second;
      if (!is_zero(s)) out.emplace_back(iy->first, std::move(s));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) v.emplace_back(i, dense[i]);
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t dim) {
  std::vector<Rational> d(dim, Rational(0));
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const QMatrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j) m.columns_[j] = to_sparse(d.col(j));
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) sparse_axpy(out, x, columns_.at(j));
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("SparseMatrix: product shape mismatch");
  SparseMatrix p(rows_, o.cols());
  for (std::size_t j = 0; j < o.cols(); ++j) p.columns_[j] = apply(o.columns_[j]);
  return p;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw std::invalid_argument("SparseMatrix: shape mismatch");
  SparseMatrix s = *this;
  for (std::size_t j = 0; j < cols(); ++j) sparse_axpy(s.columns_[j], Rational(1), o.columns_[j]);
  return s;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix s(rows_, cols());
  if (is_zero(c)) return s;
  s.columns_ = columns_;
  for (auto& col : s.columns_)
    for (auto& e : col) e.second *= c;
  return s;
}

QMatrix SparseMatrix::to_dense() const {
  QMatrix d(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, x] : columns_[j]) d(i, j) = x;
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::vector<SparseVector> sparse_kernel(const SparseMatrix& m) {
  // Transpose into rows, row-reduce, read off the free columns.
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.column(j)) rows[i].emplace_back(j, x);
  Subspace row_space(m.cols());
  for (const auto& r : rows) row_space.insert(r);

  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& r : row_space.basis()) is_pivot[r.front().first] = true;

  std::vector<SparseVector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (const auto& r : row_space.basis())
      if (const Rational* c = find_entry(r, f)) v.emplace_back(r.front().first, -*c);
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

SparseVector Subspace::reduce(SparseVector v) const {
  for (const auto& [pivot, idx] : pivot_row_) {
    if (v.empty() || pivot > v.back().first) break;
    if (const Rational* c = find_entry(v, pivot)) {
      const Rational f = -*c;
      sparse_axpy(v, f, rows_[idx]);
    }
  }
  return v;
}

bool Subspace::insert(const SparseVector& v_in) {
  for (const auto& e : v_in)
    if (e.first >= ambient_) throw std::out_of_range("Subspace::insert: index outside ambient space");
  SparseVector v = reduce(v_in);
  if (v.empty()) return false;
  const Rational lead = v.front().second;
  for (auto& e : v) e.second /= lead;
  const std::size_t pivot = v.front().first;
  for (auto& r : rows_)
    if (const Rational* c = find_entry(r, pivot)) {
      const Rational f = -*c;
      sparse_axpy(r, f, v);
    }
  pivot_row_[pivot] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const SparseVector& r) { return contains(r); });
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  const std::size_t k = rows_.size();
  SparseMatrix stacked(ambient_, k + other.rows_.size());
  for (std::size_t a = 0; a < k; ++a) stacked.column(a) = rows_[a];
  for (std::size_t b = 0; b < other.rows_.size(); ++b) {
    SparseVector neg = other.rows_[b];
    for (auto& e : neg) e.second = -e.second;
    stacked.column(k + b) = std::move(neg);
  }
  Subspace out(ambient_);
  for (const auto& coeffs : sparse_kernel(stacked)) {
    SparseVector v;
    for (const auto& [idx, c] : coeffs)
      if (idx < k) sparse_axpy(v, c, rows_[idx]);
    out.insert(v);
  }
  return out;
}

Subspace Subspace::image_under(const SparseMatrix& m) const {
  if (m.cols() != ambient_) throw std::invalid_argument("Subspace::image_under: shape mismatch");
  Subspace out(m.rows());
  for (const auto& r : rows_) out.insert(m.apply(r));
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && dim() == o.dim() && contains(o);
}

}  // namespace hodge
