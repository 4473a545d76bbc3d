#pragma once

// Weight-multiset calculus for sums of classical Lie algebras of types A, B, D.
//
// Weights are stored as integer vectors holding twice the actual coordinates,
// which is exact for the integral and half-integral weights that occur. An
// A_{n-1} factor stores n-1 coordinates: the representative of a weight modulo
// the all-ones vector whose n-th coordinate is 0.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hodge::lie {

enum class Family { A, B, D };

struct SimpleFactor {
  Family family = Family::B;
  int rank = 1;

  /// Number of stored weight coordinates (equal to the rank).
  int coords() const { return rank; }
  std::string to_string() const;
  bool operator==(const SimpleFactor& o) const { return family == o.family && rank == o.rank; }
};

struct AlgebraType {
  std::vector<SimpleFactor> factors;

  /// "B3", "D4", "A3+A1", "so7", "so8", "sl4", "sl2", "so7+sl2"; also accepts "⊕" as separator.
  static AlgebraType parse(const std::string& text);
  static AlgebraType simple(Family f, int rank) { return {{SimpleFactor{f, rank}}}; }

  int total_coords() const;
  int offset(std::size_t factor) const;
  std::string to_string() const;
  bool operator==(const AlgebraType& o) const { return factors == o.factors; }
};

using Weight = std::vector<int>;  // doubled coordinates

/// Parses space/comma separated rationals such as "1/2 1/2 1/2" into a doubled weight.
Weight parse_weight(const std::string& text);
std::string weight_to_string(const Weight& w);

bool is_dominant(const AlgebraType& alg, const Weight& w);
Weight dominant_representative(const AlgebraType& alg, const Weight& w);
int simple_reflection_count(const AlgebraType& alg);
Weight simple_reflection(const AlgebraType& alg, const Weight& w, int index);

class WeightMultiset {
 public:
  WeightMultiset() = default;
  explicit WeightMultiset(int coords) : coords_(coords) {}

  void add(const Weight& w, std::int64_t mult = 1);
  std::int64_t multiplicity(const Weight& w) const;
  std::int64_t total() const;
  int coords() const { return coords_; }
  const std::map<Weight, std::int64_t>& entries() const { return entries_; }

  bool operator==(const WeightMultiset& o) const { return coords_ == o.coords_ && entries_ == o.entries_; }

 private:
  int coords_ = 0;
  std::map<Weight, std::int64_t> entries_;  // multiplicities are positive
};

/// Freudenthal multiplicities; throws std::invalid_argument for non-dominant highest weights.
WeightMultiset irrep_weights(const AlgebraType& alg, const Weight& highest);
std::int64_t weyl_dim(const AlgebraType& alg, const Weight& highest);

WeightMultiset wedge_power(const WeightMultiset& ms, int k);  // throws if k > total
WeightMultiset sym_power(const WeightMultiset& ms, int k);
WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset direct_sum(const WeightMultiset& a, const WeightMultiset& b);
WeightMultiset dual(const AlgebraType& alg, const WeightMultiset& ms);
/// New weight t-th coordinate = old coordinate source_coords[t] (coordinates not listed are dropped).
WeightMultiset restrict_coords(const WeightMultiset& ms, const std::vector<int>& source_coords);
/// so(8) -> so(7) by dropping the last coordinate.
WeightMultiset restrict_d4_to_b3(const WeightMultiset& ms);

struct Constituent {
  Weight highest;
  std::int64_t multiplicity = 0;
};
using Decomposition = std::vector<Constituent>;

/// Strips the lexicographically largest weight repeatedly; throws std::domain_error
/// ("not a representation") if a multiplicity would go negative.
Decomposition decompose(const AlgebraType& alg, const WeightMultiset& ms);
WeightMultiset reconstruct(const AlgebraType& alg, const Decomposition& d);
std::int64_t invariant_dim(const AlgebraType& alg, const WeightMultiset& ms);

/// Named representations: "G"/"Γ" (spin; for D_n the sum of both half-spins),
/// "G+"/"Γ+", "G-"/"Γ-", "V" (standard of B/D), "W", "W*", "V2" (standard of A_1).
/// Placed in the first factor of a suitable family, zero elsewhere.
WeightMultiset atom(const AlgebraType& alg, const std::string& name);

/// wedge(k, X), sym(k, X), dual(X), X (+) Y, X (x) Y, parentheses, atoms.
WeightMultiset evaluate_expression(const AlgebraType& alg, const std::string& expr);

struct ScenarioRow {
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<std::string> scenario_names();
/// Throws std::invalid_argument for unknown names.
std::vector<ScenarioRow> scenario_report(const std::string& name);

}  // namespace hodge::lie
