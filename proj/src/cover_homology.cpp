#include "hodge/cover_homology.hpp"

#include <queue>
#include <stdexcept>

#include "hodge/smith.hpp"

namespace hodge::cover {

namespace {

GroupQElem vtx(int idx) { return GroupQElem::from_index(idx); }

// The eight terms of the anti-invariant cycle built on the last two handles.
const std::array<std::pair<const char*, const char*>, 8> kCycleTerms{{
    {"1", "i"}, {"i", "-k"}, {"-k", "-j"}, {"-j", "1"}, {"-i", "-1"}, {"-1", "j"}, {"j", "k"}, {"k", "-i"}}};

ZMatrix zero_matrix_like(std::size_t n) { return ZMatrix(n, n); }

}  // namespace

bool CoverGraph::connected() const {
  std::array<std::vector<int>, 8> adj;
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::array<bool, 8> seen{};
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == 8;
}

std::vector<std::pair<std::size_t, int>> CoverGraph::edges_between(GroupQElem x, GroupQElem y) const {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t t = 0; t < edges.size(); ++t) {
    if (edges[t].from == x.index() && edges[t].to == y.index()) out.emplace_back(t, 1);
    else if (edges[t].from == y.index() && edges[t].to == x.index()) out.emplace_back(t, -1);
  }
  return out;
}

CoverGraph build_cover_graph(const homs::HomTuple& h) {
  if (!homs::classify_hom(h).valid) throw std::invalid_argument("build_cover_graph: homomorphism is not valid");
  CoverGraph g;
  g.genus = h.genus;
  for (int m = 1; m <= h.genus; ++m)
    for (int q = 0; q < 8; ++q) g.edges.push_back({m, q, (vtx(q) * h.alpha_image(m)).index()});
  return g;
}

std::array<Integer, 8> boundary(const CoverGraph& g, const Chain& c) {
  if (c.size() != g.edge_count()) throw std::invalid_argument("boundary: chain length mismatch");
  std::array<Integer, 8> b;
  for (auto& x : b) x = 0;
  for (std::size_t t = 0; t < c.size(); ++t) {
    b[g.edges[t].to] += c[t];
    b[g.edges[t].from] -= c[t];
  }
  return b;
}

Chain act_on_chain(const CoverGraph& g, GroupQElem q, const Chain& c) {
  if (c.size() != g.edge_count()) throw std::invalid_argument("act_on_chain: chain length mismatch");
  Chain out(c.size(), Integer(0));
  for (std::size_t t = 0; t < c.size(); ++t) {
    const Edge& e = g.edges[t];
    out[g.edge_index(e.generator, (q * vtx(e.from)).index())] += c[t];
  }
  return out;
}

std::vector<Integer> IntLattice::elementary_divisors() const { return hodge::elementary_divisors(basis); }

bool IntLattice::saturated() const { return is_saturated(basis); }

std::vector<Integer> DeckHomology::coordinates(const CoverGraph& g, const Chain& c) const {
  for (const auto& x : boundary(g, c))
    if (!is_zero(x)) throw std::invalid_argument("DeckHomology::coordinates: chain is not a cycle");
  std::vector<Integer> coords;
  coords.reserve(cotree_edges.size());
  for (std::size_t e : cotree_edges) coords.push_back(c[e]);
  return coords;
}

Chain DeckHomology::chain_of(const std::vector<Integer>& coords) const {
  if (coords.size() != h1.rank()) throw std::invalid_argument("DeckHomology::chain_of: wrong coordinate count");
  Chain c(h1.ambient, Integer(0));
  for (std::size_t r = 0; r < coords.size(); ++r)
    for (std::size_t t = 0; t < h1.ambient; ++t) c[t] += coords[r] * h1.basis(r, t);
  return c;
}

DeckHomology h1_with_deck_action(const CoverGraph& g) {
  if (!g.connected()) throw std::invalid_argument("h1_with_deck_action: cover graph is disconnected");
  const std::size_t ne = g.edge_count();

  // path[v] = tree chain from +1 to v.
  std::array<std::optional<Chain>, 8> path;
  std::vector<bool> in_tree(ne, false);
  path[0] = Chain(ne, Integer(0));
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (std::size_t t = 0; t < ne; ++t) {
      const Edge& e = g.edges[t];
      int w = -1, sign = 0;
      if (e.from == v) {
        w = e.to;
        sign = 1;
      } else if (e.to == v) {
        w = e.from;
        sign = -1;
      }
      if (w < 0 || path[w]) continue;
      Chain p = *path[v];
      p[t] += sign;
      path[w] = std::move(p);
      in_tree[t] = true;
      frontier.push(w);
    }
  }

  DeckHomology dh;
  dh.h1.ambient = ne;
  for (std::size_t t = 0; t < ne; ++t) {
    if (in_tree[t]) {
      dh.tree_edges.push_back(t);
      continue;
    }
    dh.cotree_edges.push_back(t);
    Chain z(ne, Integer(0));
    for (std::size_t s = 0; s < ne; ++s) z[s] = (*path[g.edges[t].from])[s] - (*path[g.edges[t].to])[s];
    z[t] += 1;
    dh.h1.basis.append_row(z);
  }

  const std::size_t r = dh.cotree_edges.size();
  for (const auto& q : GroupQElem::all()) {
    ZMatrix m = zero_matrix_like(r);
    for (std::size_t col = 0; col < r; ++col) {
      const auto coords = dh.coordinates(g, act_on_chain(g, q, dh.h1.basis.row(col)));
      for (std::size_t row = 0; row < r; ++row) m(row, col) = coords[row];
    }
    dh.action[q.index()] = std::move(m);
  }
  return dh;
}

IntLattice minus_part(const DeckHomology& dh) {
  const ZMatrix& minus = dh.action[GroupQElem::minus_one().index()];
  const ZMatrix op = minus + ZMatrix::identity(minus.rows());
  return {minus.rows(), integer_kernel(op)};
}

// ---------------------------------------------------------------------------

namespace {

// Matrix of left multiplication by x on the lattice with the given basis
// (columns = coordinates of x * b_t).
QMatrix left_mult_in_basis(const qalg::QuatElem& x, const std::vector<qalg::QuatElem>& basis) {
  QMatrix rows(0, 0);
  for (const auto& b : basis) rows.append_row(std::vector<Rational>(b.coords().begin(), b.coords().end()));
  QMatrix out(basis.size(), basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    const auto prod = x * basis[t];
    const auto c = coordinates_in(rows, std::vector<Rational>(prod.coords().begin(), prod.coords().end()));
    if (!c) throw std::logic_error("left_mult_in_basis: product left the span");
    for (std::size_t s = 0; s < basis.size(); ++s) out(s, t) = (*c)[s];
  }
  return out;
}

std::vector<qalg::QuatElem> hurwitz_basis_one_i_j_zeta() {
  return {qalg::QuatElem::scalar(1), qalg::QuatElem::unit_i(), qalg::QuatElem::unit_j(), qalg::QuatElem::zeta()};
}

std::vector<qalg::QuatElem> hz_basis() {
  return {qalg::QuatElem::scalar(1), qalg::QuatElem::unit_i(), qalg::QuatElem::unit_j(), qalg::QuatElem::unit_k()};
}

struct CertifiedBasis {
  bool terms_are_edges = true;
  bool boundary_zero = true;
  bool zeta_integral = true;
  std::vector<std::vector<Integer>> vectors;  // H_1 coordinates
};

// (c, ic, jc, zeta c) followed by (t, it, jt, kt) for every torus handle,
// where t is the difference of the loops at +1 and -1.
CertifiedBasis certified_basis(const CoverGraph& g, const DeckHomology& dh) {
  CertifiedBasis cb;
  const std::size_t ne = g.edge_count();
  Chain c(ne, Integer(0));
  for (const auto& [x, y] : kCycleTerms) {
    const auto hits = g.edges_between(GroupQElem::parse(x), GroupQElem::parse(y));
    if (hits.size() != 1) {
      cb.terms_are_edges = false;
      continue;
    }
    c[hits.front().first] += hits.front().second;
  }
  for (const auto& x : boundary(g, c)) cb.boundary_zero = cb.boundary_zero && is_zero(x);
  if (!cb.terms_are_edges || !cb.boundary_zero) return cb;

  const Chain ic = act_on_chain(g, GroupQElem::i(), c);
  const Chain jc = act_on_chain(g, GroupQElem::j(), c);
  const Chain kc = act_on_chain(g, GroupQElem::k(), c);
  Chain zc(ne);
  for (std::size_t t = 0; t < ne; ++t) {
    const Integer sum = c[t] + ic[t] + jc[t] + kc[t];
    if (mpz_even_p(sum.get_mpz_t()) == 0) cb.zeta_integral = false;
    zc[t] = sum / 2;
  }
  if (!cb.zeta_integral) return cb;
  for (const Chain* ch : std::array<const Chain*, 4>{&c, &ic, &jc, &zc}) cb.vectors.push_back(dh.coordinates(g, *ch));

  for (int m = 1; m <= g.genus - 2; ++m) {
    Chain t(ne, Integer(0));
    t[g.edge_index(m, GroupQElem::one().index())] += 1;
    t[g.edge_index(m, GroupQElem::minus_one().index())] -= 1;
    for (const auto& q : {GroupQElem::one(), GroupQElem::i(), GroupQElem::j(), GroupQElem::k()})
      cb.vectors.push_back(dh.coordinates(g, act_on_chain(g, q, t)));
  }
  return cb;
}

// Coordinates of the basis vectors in the V_- basis; empty if some vector lies outside V_-.
std::optional<ZMatrix> in_lattice_coordinates(const IntLattice& lat, const std::vector<std::vector<Integer>>& vecs) {
  const QMatrix lb = to_rational(lat.basis);
  QMatrix out(vecs.size(), lat.rank());
  for (std::size_t r = 0; r < vecs.size(); ++r) {
    std::vector<Rational> v(vecs[r].begin(), vecs[r].end());
    const auto c = coordinates_in(lb, v);
    if (!c) return std::nullopt;
    for (std::size_t s = 0; s < c->size(); ++s) out(r, s) = (*c)[s];
  }
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t s = 0; s < out.cols(); ++s)
      if (out(r, s).get_den() != 1) return std::nullopt;
  return to_integer(out);
}

// Action matrices in the certified basis (columns = images of basis vectors).
std::optional<ZMatrix> action_in_basis(const ZMatrix& action, const std::vector<std::vector<Integer>>& vecs) {
  QMatrix rows(0, 0);
  for (const auto& v : vecs) rows.append_row(std::vector<Rational>(v.begin(), v.end()));
  QMatrix out(vecs.size(), vecs.size());
  for (std::size_t t = 0; t < vecs.size(); ++t) {
    const auto img = action * vecs[t];
    const auto c = coordinates_in(rows, std::vector<Rational>(img.begin(), img.end()));
    if (!c) return std::nullopt;
    for (std::size_t s = 0; s < vecs.size(); ++s) out(s, t) = (*c)[s];
  }
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t s = 0; s < out.cols(); ++s)
      if (out(r, s).get_den() != 1) return std::nullopt;
  return to_integer(out);
}

// i and j act on the c-part as on M and on each torus part as on H_Z, with no mixing.
bool module_structure_matches(const std::array<ZMatrix, 8>& a) {
  const auto m_basis = hurwitz_basis_one_i_j_zeta();
  const auto hz = hz_basis();
  for (const auto& q : {GroupQElem::i(), GroupQElem::j()}) {
    const ZMatrix& mat = a[q.index()];
    const std::size_t n = mat.rows();
    QMatrix expected(n, n);
    const QMatrix lm = left_mult_in_basis(q.to_quat(), m_basis);
    const QMatrix lh = left_mult_in_basis(q.to_quat(), hz);
    for (std::size_t blk = 0; blk * 4 < n; ++blk)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) expected(blk * 4 + r, blk * 4 + s) = blk == 0 ? lm(r, s) : lh(r, s);
    if (!(to_rational(mat) == expected)) return false;
  }
  return true;
}

}  // namespace

CycleCReport check_cycle_c_and_basis() {
  const CoverGraph g = build_cover_graph(homs::HomTuple::standard(2));
  const DeckHomology dh = h1_with_deck_action(g);
  const IntLattice vm = minus_part(dh);
  CycleCReport rep;
  rep.minus_rank = vm.rank();
  rep.minus_divisors = vm.elementary_divisors();

  const CertifiedBasis cb = certified_basis(g, dh);
  rep.terms_are_edges = cb.terms_are_edges;
  rep.boundary_zero = cb.boundary_zero;
  rep.zeta_integral = cb.zeta_integral;
  if (cb.vectors.size() != 4 || vm.rank() != 4) return rep;

  const auto coords = in_lattice_coordinates(vm, cb.vectors);
  if (!coords) return rep;
  rep.determinant_in_minus_part = determinant(*coords);
  rep.is_basis = abs(rep.determinant_in_minus_part) == 1;

  std::array<ZMatrix, 8> a;
  for (const auto& q : GroupQElem::all()) {
    const auto m = action_in_basis(dh.action[q.index()], cb.vectors);
    if (!m) return rep;
    a[q.index()] = *m;
  }
  rep.structure_constants_match = module_structure_matches(a);
  return rep;
}

std::string module_type_string(int genus) {
  if (genus < 2) throw std::invalid_argument("module_type_string: genus must be at least 2");
  if (genus == 2) return "M ⊕ M";
  if (genus == 3) return "(M ⊕ H_Z)^2";
  return "(M ⊕ H_Z^" + std::to_string(genus - 2) + ")^2";
}

PrymLatticeModel prym_lattice_model(int genus, const homs::HomTuple& h) {
  if (genus != 2 && genus != 3) throw std::invalid_argument("prym_lattice_model: genus must be 2 or 3");
  if (h.genus != genus) throw std::invalid_argument("prym_lattice_model: homomorphism has the wrong genus");
  const auto cls = homs::classify_hom(h);
  if (!cls.valid || !cls.surjective)
    throw std::invalid_argument("prym_lattice_model: homomorphism must be valid and surjective");

  PrymLatticeModel model;
  model.genus = genus;
  model.module_type = module_type_string(genus);
  const auto norm = homs::normalize_hom(h);
  if (!norm.reached) throw std::runtime_error("prym_lattice_model: could not bring the homomorphism to standard form");
  model.normalization_moves = norm.moves.size();

  const CoverGraph g = build_cover_graph(homs::HomTuple::standard(genus));
  const DeckHomology dh = h1_with_deck_action(g);
  const IntLattice vm = minus_part(dh);
  const CertifiedBasis cb = certified_basis(g, dh);
  const std::size_t n = 4 * static_cast<std::size_t>(genus - 1);
  if (vm.rank() != n || cb.vectors.size() != n)
    throw std::logic_error("prym_lattice_model: anti-invariant rank does not match 4(g-1)");

  const auto coords = in_lattice_coordinates(vm, cb.vectors);
  if (!coords) throw std::logic_error("prym_lattice_model: certified vectors are not in the anti-invariant part");
  model.basis_determinant = determinant(*coords);

  model.a_block_unimodular = true;
  for (const auto& q : GroupQElem::all()) {
    const auto m = action_in_basis(dh.action[q.index()], cb.vectors);
    if (!m) throw std::logic_error("prym_lattice_model: action is not integral in the certified basis");
    model.a_block[q.index()] = *m;
    model.a_block_unimodular = model.a_block_unimodular && abs(determinant(*m)) == 1;
  }
  model.module_structure_verified = abs(model.basis_determinant) == 1 && module_structure_matches(model.a_block);

  model.rank = 2 * n;
  model.symplectic = QMatrix(2 * n, 2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    model.symplectic(t, n + t) = 1;
    model.symplectic(n + t, t) = -1;
  }
  for (const auto& q : GroupQElem::all()) {
    const QMatrix a = to_rational(model.a_block[q.index()]);
    const auto inv = inverse(a);
    if (!inv) throw std::logic_error("prym_lattice_model: singular action block");
    const QMatrix b = inv->transpose();
    QMatrix rho(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        rho(r, s) = a(r, s);
        rho(n + r, n + s) = b(r, s);
      }
    model.rho[q.index()] = std::move(rho);
  }

  model.is_homomorphism = true;
  model.preserves_form = true;
  for (const auto& x : GroupQElem::all()) {
    const QMatrix& rx = model.rho[x.index()];
    model.preserves_form = model.preserves_form && rx.transpose() * model.symplectic * rx == model.symplectic;
    for (const auto& y : GroupQElem::all())
      model.is_homomorphism = model.is_homomorphism && rx * model.rho[y.index()] == model.rho[(x * y).index()];
  }
  model.minus_one_is_minus_identity =
      model.rho[GroupQElem::minus_one().index()] == -QMatrix::identity(2 * n);

  model.a_block_isotropic = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) model.a_block_isotropic = model.a_block_isotropic && is_zero(model.symplectic(r, s));
  return model;
}

}  // namespace hodge::cover
