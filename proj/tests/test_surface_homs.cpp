#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "hodge/surface_homs.hpp"

using namespace hodge;
using namespace hodge::homs;

namespace {

using Unit = std::array<int, 4>;

// Index order +1, -1, +i, -i, +j, -j, +k, -k as integer quaternions.
Unit unit_of(int idx) {
  Unit u{0, 0, 0, 0};
  u[static_cast<std::size_t>(idx / 2)] = idx % 2 ? -1 : 1;
  return u;
}

Unit mul(const Unit& x, const Unit& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3], x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1], x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

Unit inv(const Unit& x) { return {x[0], -x[1], -x[2], -x[3]}; }

std::size_t generated_size(const std::vector<Unit>& gens) {
  std::set<Unit> s{{1, 0, 0, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<Unit>(s.begin(), s.end()))
      for (const auto& g : gens) grew = s.insert(mul(a, g)).second || grew;
  }
  return s.size();
}

struct Counts {
  std::uint64_t valid = 0, surjective = 0;
};

// Brute force over all 8^4 genus-2 tuples.
Counts brute_genus2() {
  Counts c;
  for (int a1 = 0; a1 < 8; ++a1)
    for (int a2 = 0; a2 < 8; ++a2)
      for (int b1 = 0; b1 < 8; ++b1)
        for (int b2 = 0; b2 < 8; ++b2) {
          const Unit x1 = unit_of(a1), x2 = unit_of(a2), y1 = unit_of(b1), y2 = unit_of(b2);
          const Unit c1 = mul(mul(x1, y1), mul(inv(x1), inv(y1)));
          const Unit c2 = mul(mul(x2, y2), mul(inv(x2), inv(y2)));
          if (mul(c1, c2) != Unit{1, 0, 0, 0}) continue;
          ++c.valid;
          if (generated_size({x1, x2, y1, y2}) == 8) ++c.surjective;
        }
  return c;
}

HomTuple random_valid_surjection(std::mt19937& rng, int genus) {
  std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << (6 * genus)) - 1);
  while (true) {
    const HomTuple h = HomTuple::decode(genus, d(rng));
    const HomClass c = classify_hom(h);
    if (c.valid && c.surjective) return h;
  }
}

}  // namespace

TEST_CASE("free words reduce and invert") {
  const FreeWord a = FreeWord::gen(1), b = FreeWord::gen(2);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).size() == 2);
  CHECK(commutator(a, b).size() == 4);
  CHECK(commutator(a, a).empty());
  CHECK(surface_relator(3).size() == 12);
  const FreeWord r = surface_relator(2);
  CHECK(are_conjugate(r, b * r * b.inverse()));
  CHECK_FALSE(are_conjugate(r, r * r));
}

TEST_CASE("psi moves lie in A_g for g <= 5") {
  for (int g = 2; g <= 5; ++g)
    for (int k = 1; k < g; ++k) CHECK(verify_psi_in_ag(g, k));
  for (int g = 2; g <= 4; ++g)
    for (const Move& m : move_set(g)) CHECK(maps_relator_to_conjugate(m));
}

TEST_CASE("tuple encoding round-trips") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << 18) - 1);
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t code = d(rng);
    CHECK(HomTuple::decode(3, code).encode() == code);
  }
  CHECK(HomTuple::parse(2, "i, k 1 -1") == HomTuple::decode(2, HomTuple::parse(2, "i k 1 -1").encode()));
  CHECK_THROWS(HomTuple::parse(2, "i k 1"));
}

TEST_CASE("enumeration agrees with a brute-force count") {
  const Counts oracle = brute_genus2();
  CHECK(oracle.valid == 2176);
  const SurjectionReport r = enumerate_surjections(2);
  CHECK(r.valid == oracle.valid);
  CHECK(r.surjective == oracle.surjective);
  CHECK(r.tuples_scanned == 4096);
  CHECK(r.moves_preserve_surjections);
  CHECK(enumerate_surjections(1).surjective == 0);
  CHECK_THROWS(enumerate_surjections(4));
}

TEST_CASE("moves preserve validity and surjectivity") {
  std::mt19937 rng(32);
  for (int g : {2, 3}) {
    const auto moves = move_set(g);
    for (int t = 0; t < 40; ++t) {
      const HomTuple h = random_valid_surjection(rng, g);
      const Move& m = moves[static_cast<std::size_t>(t) % moves.size()];
      const HomClass c = classify_hom(apply_move(h, m));
      CHECK(c.valid);
      CHECK(c.surjective);
      // Precomposition: (h o m)(gamma) = h(m(gamma)).
      for (int gen = 1; gen <= 2 * g; ++gen)
        CHECK(eval_word(apply_move(h, m), FreeWord::gen(gen)) == eval_word(h, m.images[static_cast<std::size_t>(gen - 1)]));
    }
  }
}

TEST_CASE("normalization") {
  for (int g : {2, 3}) {
    const HomTuple s = HomTuple::standard(g);
    CHECK(has_intermediate_shape(s));
    const NormalizeResult r = normalize_hom(s);
    CHECK(r.reached);
    CHECK(r.moves.empty());
  }
  std::mt19937 rng(33);
  for (int t = 0; t < 10; ++t) {
    const HomTuple h = random_valid_surjection(rng, 2);
    const NormalizeResult r = normalize_hom(h);
    REQUIRE(r.reached);
    CHECK(apply_moves(h, r.moves) == HomTuple::standard(2));
  }
  CHECK_THROWS_AS(normalize_hom(HomTuple::parse(2, "i i 1 1")), std::invalid_argument);
}

TEST_CASE("genus numerology") {
  const GenusNumerology n = genus_numerology(3, 4);
  CHECK(n.genus_tilde == 17);
  CHECK(n.genus_hat == 9);
  CHECK(n.prym_dim == 8);
  CHECK(n.moduli_dim == 6);
}
