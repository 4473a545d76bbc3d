#include <doctest.h>

#include "hodge/cover_homology.hpp"
#include "hodge/smith.hpp"

using namespace hodge;
using namespace hodge::cover;
using homs::HomTuple;
using qalg::GroupQElem;

namespace {

Integer trace(const ZMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

TEST_CASE("graph of the standard cover") {
  for (int g : {2, 3}) {
    const CoverGraph graph = build_cover_graph(HomTuple::standard(g));
    CHECK(graph.connected());
    CHECK(graph.edge_count() == static_cast<std::size_t>(8 * g));
    CHECK(graph.first_betti() == 8 * g - 7);
    for (const auto& e : graph.edges) CHECK(e.to == (GroupQElem::from_index(e.from) * HomTuple::standard(g).alpha_image(e.generator)).index());
  }
}

TEST_CASE("deck action on H_1 has the character (g-1) regular + trivial") {
  for (int g : {2, 3}) {
    const CoverGraph graph = build_cover_graph(HomTuple::standard(g));
    const DeckHomology dh = h1_with_deck_action(graph);
    CHECK(dh.h1.rank() == static_cast<std::size_t>(8 * g - 7));
    for (const auto& q : GroupQElem::all()) {
      // Lefschetz: a free action on a graph has H_1 - H_0 = (g - 1) * regular.
      const Integer expected = q == GroupQElem::one() ? Integer(8 * (g - 1) + 1) : Integer(1);
      CHECK(trace(dh.action[static_cast<std::size_t>(q.index())]) == expected);
      for (const auto& r : GroupQElem::all())
        CHECK(dh.action[static_cast<std::size_t>(q.index())] * dh.action[static_cast<std::size_t>(r.index())] ==
              dh.action[static_cast<std::size_t>((q * r).index())]);
    }
    const IntLattice minus = minus_part(dh);
    CHECK(minus.rank() == static_cast<std::size_t>(4 * (g - 1)));
    CHECK(minus.saturated());
  }
}

TEST_CASE("chains: deck action commutes with the boundary") {
  const CoverGraph graph = build_cover_graph(HomTuple::standard(2));
  const DeckHomology dh = h1_with_deck_action(graph);
  for (std::size_t r = 0; r < dh.h1.rank(); ++r) {
    const Chain c = dh.h1.basis.row(r);
    for (const auto& q : GroupQElem::all()) {
      const Chain moved = act_on_chain(graph, q, c);
      for (const auto& b : boundary(graph, moved)) CHECK(b == 0);
      CHECK(dh.chain_of(dh.coordinates(graph, moved)) == moved);
    }
  }
}

TEST_CASE("the certified cycle and basis of V_-") {
  const CycleCReport c = check_cycle_c_and_basis();
  CHECK(c.terms_are_edges);
  CHECK(c.boundary_zero);
  CHECK(c.zeta_integral);
  CHECK(c.is_basis);
  CHECK(abs(c.determinant_in_minus_part) == 1);
  CHECK(c.structure_constants_match);
  CHECK(c.minus_rank == 4);
  for (const auto& d : c.minus_divisors) CHECK(d == 1);
}

TEST_CASE("Prym lattice models") {
  for (int g : {2, 3}) {
    const PrymLatticeModel p = prym_lattice_model(g, HomTuple::standard(g));
    CHECK(p.rank == static_cast<std::size_t>(8 * (g - 1)));
    CHECK(p.module_type == module_type_string(g));
    CHECK(p.is_homomorphism);
    CHECK(p.minus_one_is_minus_identity);
    CHECK(p.a_block_unimodular);
    CHECK(p.a_block_isotropic);
    CHECK(p.module_structure_verified);
    // Symplectic, recomputed here.
    for (const auto& rho : p.rho) CHECK(rho.transpose() * p.symplectic * rho == p.symplectic);
    const auto& i = p.a_block[static_cast<std::size_t>(GroupQElem::i().index())];
    CHECK(i * i == -ZMatrix::identity(i.rows()));
  }
  CHECK(module_type_string(2) == "M ⊕ M");
  CHECK(module_type_string(3) == "(M ⊕ H_Z)^2");
}

TEST_CASE("non-standard input is normalized first") {
  const PrymLatticeModel p = prym_lattice_model(3, HomTuple::parse(3, "1 1 i j k -1"));
  CHECK(p.normalization_moves > 0);
  CHECK(p.module_structure_verified);
  CHECK(p.preserves_form);
}

TEST_CASE("errors") {
  // Alpha images inside <i> give a disconnected graph.
  const CoverGraph graph = build_cover_graph(HomTuple::parse(2, "i i 1 1"));
  CHECK_FALSE(graph.connected());
  CHECK_THROWS_AS(h1_with_deck_action(graph), std::invalid_argument);
  CHECK_THROWS(build_cover_graph(HomTuple::parse(2, "i 1 j 1")));
  CHECK_THROWS(prym_lattice_model(4, HomTuple::standard(4)));
}
