#pragma once

// The 8-sheeted covering graph of a wedge of g circles determined by a
// homomorphism to Q, its integral first homology with the deck action, the
// anti-invariant part, and the block lattice model of the Prym.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hodge/linalg.hpp"
#include "hodge/surface_homs.hpp"

namespace hodge::cover {

using qalg::GroupQElem;

/// Oriented edge from -> from * h(alpha_m); vertices are GroupQElem indices.
struct Edge {
  int generator = 1;
  int from = 0;
  int to = 0;
};

struct CoverGraph {
  int genus = 1;
  std::vector<Edge> edges;  // edge (m, q) sits at position (m - 1) * 8 + q

  std::size_t vertex_count() const { return 8; }
  std::size_t edge_count() const { return edges.size(); }
  std::size_t edge_index(int generator, int from) const { return static_cast<std::size_t>((generator - 1) * 8 + from); }
  bool connected() const;
  int first_betti() const { return static_cast<int>(edge_count()) - 8 + 1; }

  /// Edges joining x to y as (edge index, +1 forward / -1 reversed).
  std::vector<std::pair<std::size_t, int>> edges_between(GroupQElem x, GroupQElem y) const;
};

/// Throws std::invalid_argument if h does not satisfy the surface relation.
CoverGraph build_cover_graph(const homs::HomTuple& h);

/// Integer chains on edges.
using Chain = std::vector<Integer>;

std::array<Integer, 8> boundary(const CoverGraph& g, const Chain& c);
/// Left multiplication by q on vertices, extended to edges and chains.
Chain act_on_chain(const CoverGraph& g, GroupQElem q, const Chain& c);

/// A lattice given by basis rows inside Z^ambient.
struct IntLattice {
  std::size_t ambient = 0;
  ZMatrix basis;

  std::size_t rank() const { return basis.rows(); }
  std::vector<Integer> elementary_divisors() const;
  bool saturated() const;
};

struct DeckHomology {
  IntLattice h1;                  // fundamental cycles as edge chains
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> cotree_edges;  // coordinates of a cycle = its values here
  std::array<ZMatrix, 8> action;  // action[q.index()] acts on column coordinate vectors

  /// Coordinates of a cycle in the fundamental-cycle basis; throws if c is not a cycle.
  std::vector<Integer> coordinates(const CoverGraph& g, const Chain& c) const;
  Chain chain_of(const std::vector<Integer>& coords) const;
};

/// Spanning tree by BFS from vertex +1; throws std::invalid_argument if the graph is disconnected.
DeckHomology h1_with_deck_action(const CoverGraph& g);

/// ker(action(-1) + I), saturated, in H_1 coordinates.
IntLattice minus_part(const DeckHomology& dh);

struct CycleCReport {
  bool terms_are_edges = false;
  bool boundary_zero = false;
  bool zeta_integral = false;
  Integer determinant_in_minus_part;  // of (c, ic, jc, zeta c) in a basis of V_-
  bool is_basis = false;
  bool structure_constants_match = false;  // i, j act as on M in the basis (1, i, j, zeta)
  std::size_t minus_rank = 0;
  std::vector<Integer> minus_divisors;
};

/// For the standard genus-2 homomorphism.
CycleCReport check_cycle_c_and_basis();

struct PrymLatticeModel {
  int genus = 2;
  std::size_t rank = 0;                 // 8(g - 1)
  std::array<ZMatrix, 8> a_block;       // action on the anti-invariant cycles
  std::array<QMatrix, 8> rho;           // diag(A, tA^-1)
  QMatrix symplectic;                   // [[0, I], [-I, 0]]
  std::string module_type;              // e.g. "M ⊕ M", "(M ⊕ H_Z)^2"
  std::size_t normalization_moves = 0;  // moves used to bring h to the standard form

  bool is_homomorphism = false;      // rho(a) rho(b) = rho(ab) for all 64 pairs
  bool preserves_form = false;       // t rho(q) J rho(q) = J
  bool minus_one_is_minus_identity = false;
  bool a_block_unimodular = false;
  bool a_block_isotropic = false;    // J vanishes on the A-block coordinates
  bool module_structure_verified = false;
  Integer basis_determinant;         // certified basis in V_- coordinates
};

/// Requires g in {2, 3} and h valid and surjective.
PrymLatticeModel prym_lattice_model(int genus, const homs::HomTuple& h);

/// "(M ⊕ H_Z^{g-2})^2" specialised to the given genus.
std::string module_type_string(int genus);

}  // namespace hodge::cover
