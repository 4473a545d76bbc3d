#include "hodge/smith.hpp"

#include <utility>

namespace hodge {

namespace {

void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[a] += f * row[b]
void add_row(ZMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += f * m(b, j);
}

void add_col(ZMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += f * m(i, b);
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& input) {
  ZMatrix d = input;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  ZMatrix left = ZMatrix::identity(rows);
  ZMatrix right = ZMatrix::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (is_zero(d(i, j))) continue;
          Integer a = abs(d(i, j));
          if (!found || a < best) {
            best = a;
            pr = i;
            pc = j;
            found = true;
          }
        }
      if (!found) break;
      swap_rows(d, t, pr);
      swap_rows(left, t, pr);
      swap_cols(d, t, pc);
      swap_cols(right, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(d(i, t))) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, -q);
        add_row(left, i, t, -q);
        if (!is_zero(d(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(d(t, j))) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, -q);
        add_col(right, j, t, -q);
        if (!is_zero(d(t, j))) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
            add_row(d, t, i, Integer(1));
            add_row(left, t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) {
        d(t, j) = -d(t, j);
      }
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }

  SmithForm out{d, left, right, {}};
  for (std::size_t t = 0; t < steps; ++t)
    if (!is_zero(d(t, t))) out.divisors.push_back(d(t, t));
  return out;
}

ZMatrix saturate(const ZMatrix& m) {
  // m = left^-1 * D * right^-1, so the row span of m sits in the span of the
  // first r rows of right^-1, and those rows extend to a basis of Z^n.
  const SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.divisors.size();
  const auto inv = inverse(to_rational(snf.right));
  if (!inv) throw std::logic_error("saturate: singular transform");
  const ZMatrix right_inv = to_integer(*inv);
  ZMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = right_inv(i, j);
  return out;
}

bool is_saturated(const ZMatrix& m) {
  for (const auto& d : elementary_divisors(m))
    if (d != 1) return false;
  return true;
}

ZMatrix integer_kernel(const ZMatrix& m) {
  const QMatrix ker = nullspace(to_rational(m));
  if (ker.rows() == 0) return ZMatrix(0, m.cols());
  // Clear denominators row by row, then saturate.
  ZMatrix scaled(ker.rows(), ker.cols());
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      Rational x = ker(i, j);
      x.canonicalize();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      Rational x = ker(i, j) * Rational(l);
      x.canonicalize();
      scaled(i, j) = x.get_num();
    }
  }
  return saturate(scaled);
}

}  // namespace hodge
