#pragma once

#include "hodge/linalg.hpp"

namespace hodge {

/// left * input * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries d_1 | d_2 | ... positive.
struct SmithForm {
  ZMatrix diagonal;
  ZMatrix left;
  ZMatrix right;
  std::vector<Integer> divisors;  // nonzero diagonal entries
};

SmithForm smith_normal_form(const ZMatrix& m);

inline std::vector<Integer> elementary_divisors(const ZMatrix& m) { return smith_normal_form(m).divisors; }

/// Row basis of (Q-row-span of m) ∩ Z^n. The rows of m need not be independent.
ZMatrix saturate(const ZMatrix& m);

/// True when the row lattice of m is a direct summand of Z^n (all elementary divisors 1).
bool is_saturated(const ZMatrix& m);

/// Integer basis (rows) of {x in Z^n : m x = 0}; always saturated.
ZMatrix integer_kernel(const ZMatrix& m);

}  // namespace hodge
