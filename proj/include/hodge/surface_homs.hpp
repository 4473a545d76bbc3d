#pragma once

// Homomorphisms pi_1(genus g surface) -> Q, the free-group moves acting on
// them by precomposition, normalization to the standard homomorphism, and
// exhaustive orbit enumeration at small genus.

#include <cstdint>
#include <string>
#include <vector>

#include "hodge/qalg.hpp"

namespace hodge::homs {

using qalg::GroupQElem;

/// Generator indices: 1..g are alpha_1..alpha_g, g+1..2g are beta_1..beta_g.
struct Letter {
  int gen = 1;
  int exp = 1;  // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

/// A freely reduced word in the free group F_{2g}.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord gen(int g, int exp = 1) { return FreeWord({Letter{g, exp}}); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  /// Replaces generator t by images[t-1] (and its inverse for negative exponents).
  FreeWord substitute(const std::vector<FreeWord>& images) const;
  /// Strips matching first/last letters x ... x^-1.
  FreeWord cyclically_reduced() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return !(*this == o); }

  std::string to_string(int genus) const;

 private:
  std::vector<Letter> letters_;
};

inline int alpha(int m) { return m; }
inline int beta(int genus, int m) { return genus + m; }

FreeWord commutator(const FreeWord& a, const FreeWord& b);
/// R = [a_1, b_1] ... [a_g, b_g].
FreeWord surface_relator(int genus);
bool are_conjugate(const FreeWord& u, const FreeWord& v);

/// Images of alpha_1..alpha_g, beta_1..beta_g.
struct HomTuple {
  int genus = 1;
  std::vector<GroupQElem> images;

  /// alpha_{g-1} -> i, alpha_g -> j, everything else -> 1.
  static HomTuple standard(int genus);
  /// 2g whitespace- or comma-separated symbols from {1,-1,i,-i,j,-j,k,-k}.
  static HomTuple parse(int genus, const std::string& text);
  static HomTuple decode(int genus, std::uint64_t code);

  GroupQElem alpha_image(int m) const { return images.at(m - 1); }
  GroupQElem beta_image(int m) const { return images.at(genus + m - 1); }

  std::uint64_t encode() const;
  std::string to_string() const;

  bool operator==(const HomTuple& o) const { return genus == o.genus && images == o.images; }
};

/// Throws std::out_of_range for generators beyond 2g.
GroupQElem eval_word(const HomTuple& h, const FreeWord& w);

struct HomClass {
  bool valid = false;       // R evaluates to +1
  bool surjective = false;  // the images generate Q
};

HomClass classify_hom(const HomTuple& h);

enum class MoveKind { Psi, BetaTwist, AlphaSlide, BetaSlide, Conj };

/// An element of A_g stored as the images of the 2g generators.
struct Move {
  MoveKind kind = MoveKind::Conj;
  int param = 0;  // k for Psi, m for the handle moves, generator index for Conj by a generator
  int genus = 1;
  std::vector<FreeWord> images;
  std::string label;

  static Move psi(int genus, int k);
  static Move beta_twist(int genus, int m);   // beta_m -> beta_m alpha_m^2
  static Move alpha_slide(int genus, int m);  // alpha_m -> alpha_m beta_m
  static Move beta_slide(int genus, int m);   // beta_m -> beta_m alpha_m
  static Move conjugation(int genus, const FreeWord& w);  // gamma -> w gamma w^-1

  /// The move applied to the relator R.
  FreeWord image_of_relator() const;
};

/// Every move in the fixed move set for genus g: Psi(1..g-1), the three
/// handle moves for each m, and conjugation by each generator.
std::vector<Move> move_set(int genus);

/// (h o move)(gamma) = h(move(gamma)).
HomTuple apply_move(const HomTuple& h, const Move& m);
HomTuple apply_moves(HomTuple h, const std::vector<Move>& moves);

/// Symbolic check that the move sends R to a conjugate of R.
bool maps_relator_to_conjugate(const Move& m);
/// psi_k(R) == alpha_{k+1} R alpha_{k+1}^-1 after free reduction.
bool verify_psi_in_ag(int genus, int k);

/// h(alpha_{g-1}) = i, h(alpha_g) = j, all other images central.
bool has_intermediate_shape(const HomTuple& h);

struct NormalizeResult {
  bool reached = false;
  bool used_search = false;
  std::vector<Move> moves;
  std::size_t nodes_explored = 0;
};

/// Throws std::invalid_argument unless h is valid and surjective.
NormalizeResult normalize_hom(const HomTuple& h, std::size_t node_budget = 1'000'000);

struct SurjectionReport {
  int genus = 1;
  std::uint64_t tuples_scanned = 0;
  std::uint64_t valid = 0;
  std::uint64_t surjective = 0;
  std::vector<std::size_t> orbit_sizes;  // descending
  std::size_t standard_orbit_size = 0;
  bool standard_orbit_has_all_intermediate = false;
  bool moves_preserve_surjections = false;  // every move maps valid surjections to valid surjections
};

/// Exhaustive over all 8^{2g} tuples; genus must be at most 3.
SurjectionReport enumerate_surjections(int genus);

struct GenusNumerology {
  int genus_tilde = 0;  // 8g - 7
  int genus_hat = 0;    // 4g - 3
  int prym_dim = 0;     // 4(g - 1)
  int moduli_dim = 0;   // n(n - 1)/2 for dim A = 2n
};

GenusNumerology genus_numerology(int genus, int n);

}  // namespace hodge::homs
