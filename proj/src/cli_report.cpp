#include "hodge/cli_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hodge/cover_homology.hpp"
#include "hodge/curve_model.hpp"
#include "hodge/lie_engine.hpp"
#include "hodge/qalg.hpp"
#include "hodge/spin_explicit.hpp"
#include "hodge/surface_homs.hpp"
#include "hodge/weil_classes.hpp"

namespace hodge::report {

std::string status_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Evidence: return "EVIDENCE";
    case Status::Flagged: return "FLAGGED";
  }
  return "FAIL";
}

Status parse_status(const std::string& s) {
  for (Status t : {Status::Pass, Status::Fail, Status::Evidence, Status::Flagged})
    if (status_string(t) == s) return t;
  throw std::invalid_argument("unknown status: " + s);
}

bool ClaimRecord::operator==(const ClaimRecord& o) const {
  return claim_id == o.claim_id && module == o.module && check == o.check && topic == o.topic &&
         expected == o.expected && computed == o.computed && status == o.status;
}

// ---- Budgets ----

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v <= 0) throw std::invalid_argument("config: " + key + " needs a positive integer");
  return v;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_long(key, trim(item))));
  if (out.empty()) throw std::invalid_argument("config: " + key + " is empty");
  return out;
}

// Primes the finite-field locus comparison accepts.
bool usable_prime(int p) {
  if (p < 13 || p > 41 || p % 4 != 1) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t scaled(std::size_t v, double f) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(v) * f)));
}

}  // namespace

Budgets Budgets::from_config_text(const std::string& text) {
  Budgets b;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "homs.node_budget") b.node_budget = static_cast<std::size_t>(parse_long(key, value));
    else if (key == "homs.max_enumeration_genus") {
      b.max_enumeration_genus = static_cast<int>(parse_long(key, value));
      if (b.max_enumeration_genus < 2 || b.max_enumeration_genus > 3)
        throw std::invalid_argument("config: homs.max_enumeration_genus must be 2 or 3");
    } else if (key == "weil.ladder_limit") b.ladder_limit = static_cast<int>(parse_long(key, value));
    else if (key == "weil.span_rounds") b.span_rounds = static_cast<int>(parse_long(key, value));
    else if (key == "curve.primes") {
      b.primes = parse_int_list(key, value);
      for (int p : b.primes)
        if (!usable_prime(p))
          throw std::invalid_argument("config: curve.primes needs primes p = 1 mod 4 with 13 <= p <= 41, got " +
                                      std::to_string(p));
    }
    else throw std::invalid_argument("config: unknown key " + key);
  }
  return b;
}

Budgets Budgets::from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_config_text(ss.str());
}

void Budgets::scale(double factor) {
  if (!(factor > 0) || !std::isfinite(factor)) throw std::invalid_argument("budget scale must be positive");
  node_budget = scaled(node_budget, factor);
  ladder_limit = static_cast<int>(scaled(static_cast<std::size_t>(ladder_limit), factor));
  span_rounds = static_cast<int>(scaled(static_cast<std::size_t>(span_rounds), factor));
}

void Budgets::apply_environment() {
  const char* env = std::getenv("HODGE_BUDGET_SCALE");
  if (!env || !*env) return;
  std::size_t used = 0;
  double f = 0;
  try {
    f = std::stod(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size()) throw std::invalid_argument("HODGE_BUDGET_SCALE is not a number");
  scale(f);
}

// ---- Claim helpers ----

namespace {

class Recorder {
 public:
  Recorder(std::string module, int section) : module_(std::move(module)), section_(section) {}

  void add(std::string check, std::string topic, std::string expected, std::string computed, Status status) {
    char id[32];
    std::snprintf(id, sizeof id, "section%d.claim%02d", section_, ++count_);
    out_.push_back({id, module_, std::move(check), std::move(topic), std::move(expected), std::move(computed), status});
  }
  void add(std::string check, std::string topic, std::string expected, std::string computed, bool ok) {
    add(std::move(check), std::move(topic), std::move(expected), std::move(computed), ok ? Status::Pass : Status::Fail);
  }
  std::vector<ClaimRecord> take() { return std::move(out_); }

 private:
  std::string module_;
  int section_;
  int count_ = 0;
  std::vector<ClaimRecord> out_;
};

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(const Integer& v) { return v.get_str(); }

// ---- qalg ----

std::vector<ClaimRecord> qalg_claims(const Budgets&, int section) {
  using namespace qalg;
  Recorder rec("qalg", section);

  {
    std::size_t total = 0, good = 0;
    Integer min_index = -1;
    const QuatElem zeta = QuatElem::zeta();
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        for (int c = -3; c <= 3; ++c)
          for (int d = -3; d <= 3; ++d) {
            if (!a && !b && !c && !d) continue;
            const QuatElem m = zeta.scaled(a) + QuatElem(0, b, c, d);
            const HurwitzIndex hi = hurwitz_index_identity(m);
            ++total;
            if (hi.check) ++good;
            if (min_index < 0 || hi.index < min_index) min_index = hi.index;
          }
    rec.add("nonfree", "index of H_Z m in M equals 2 N(m)^2 on the coefficient box [-3,3]^4",
            str(total) + "/" + str(total), str(good) + "/" + str(total), good == total);
    rec.add("nonfree", "no H_Z m equals M, so M is not a free H_Z-module", "min index >= 2",
            "min index = " + str(min_index), min_index >= 2);
  }

  {
    const WedderburnReport w = group_ring_wedderburn();
    std::string got;
    for (const auto& chi : w.characters) {
      if (!got.empty()) got += " ";
      got += "(" + std::to_string(chi.degree) + "," + (chi.frobenius_schur > 0 ? "+" : "") +
             std::to_string(chi.frobenius_schur) + ")";
    }
    const std::string want = "(1,+1) (1,+1) (1,+1) (1,+1) (2,-1)";
    rec.add("wedderburn", "Q[Q] = Q^4 + H_Q: degrees and Frobenius-Schur indicators", want, got,
            got == want && w.orthonormal && w.sum_of_squares == 8);
  }

  {
    std::mt19937 rng(20240607);
    std::uniform_int_distribution<int> coef(-5, 5);
    auto random_elem = [&](const AlgebraParams& p) {
      std::array<int, 4> c{};
      for (auto& x : c) x = coef(rng);
      return QuatElem(c[0], c[1], c[2], c[3], p);
    };
    auto add_k = [](const KMatrix2& a, const KMatrix2& b) {
      KMatrix2 s = a;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) s[r][c] = a[r][c] + b[r][c];
      return s;
    };
    std::size_t mult = 0, add = 0, pairs = 0;
    bool unit_ok = true, injective = true;
    for (const AlgebraParams& p : {AlgebraParams::hamilton(), AlgebraParams(-1, -3)}) {
      for (int t = 0; t < 20; ++t) {
        const QuatElem x = random_elem(p), y = random_elem(p);
        ++pairs;
        if (embed_in_m2k(x * y) == multiply(embed_in_m2k(x), embed_in_m2k(y))) ++mult;
        if (embed_in_m2k(x + y) == add_k(embed_in_m2k(x), embed_in_m2k(y))) ++add;
      }
      const KMatrix2 one = embed_in_m2k(QuatElem::scalar(1, p));
      const KNumber k1{1, 0, p.r}, k0{0, 0, p.r};
      unit_ok = unit_ok && one[0][0] == k1 && one[1][1] == k1 && one[0][1] == k0 && one[1][0] == k0;
      QMatrix images;
      for (const QuatElem& e : {QuatElem::scalar(1, p), QuatElem::unit_i(p), QuatElem::unit_j(p), QuatElem::unit_k(p)}) {
        const KMatrix2 m = embed_in_m2k(e);
        std::vector<Rational> row;
        for (const auto& r : m)
          for (const auto& z : r) {
            row.push_back(z.u);
            row.push_back(z.v);
          }
        images.append_row(row);
      }
      injective = injective && rank(images) == 4;
    }
    const std::string want = "multiplicative " + str(pairs) + "/" + str(pairs) + ", additive " + str(pairs) + "/" +
                             str(pairs) + ", unital, injective";
    const std::string got = "multiplicative " + str(mult) + "/" + str(pairs) + ", additive " + str(add) + "/" +
                            str(pairs) + (unit_ok ? ", unital" : ", not unital") +
                            (injective ? ", injective" : ", not injective");
    rec.add("embed", "F -> M_2(K) is an injective ring homomorphism (params (-1,-1) and (-1,-3))", want, got,
            want == got);
  }
  return rec.take();
}

// ---- surface_homs ----

std::string orbit_string(const homs::SurjectionReport& r) {
  std::string s = str(r.orbit_sizes.size()) + " orbit(s), sizes";
  for (auto o : r.orbit_sizes) s += " " + str(o);
  return s;
}

std::vector<ClaimRecord> homs_claims(const Budgets& budgets, int section) {
  using namespace homs;
  Recorder rec("surface_homs", section);

  {
    std::size_t total = 0, ok = 0;
    for (int g = 2; g <= 5; ++g)
      for (int k = 1; k < g; ++k) {
        ++total;
        if (verify_psi_in_ag(g, k)) ++ok;
      }
    rec.add("verify-psi", "psi_k(R) = alpha_{k+1} R alpha_{k+1}^-1 for all k, g <= 5", str(total) + "/" + str(total),
            str(ok) + "/" + str(total), ok == total);
  }
  {
    std::size_t total = 0, ok = 0;
    for (int g = 2; g <= 4; ++g)
      for (const Move& m : move_set(g)) {
        ++total;
        if (maps_relator_to_conjugate(m)) ++ok;
      }
    rec.add("verify-psi", "every move of the move set sends R to a conjugate of R (g <= 4)",
            str(total) + "/" + str(total), str(ok) + "/" + str(total), ok == total);
  }
  for (int g : {2, 3}) {
    std::size_t total = 0, reached = 0, searched = 0;
    const int free_slots = 2 * g - 2;
    for (int mask = 0; mask < (1 << free_slots); ++mask) {
      HomTuple h = HomTuple::standard(g);
      int bit = 0;
      for (int slot = 0; slot < 2 * g; ++slot) {
        if (slot == g - 2 || slot == g - 1) continue;
        h.images[static_cast<std::size_t>(slot)] = (mask >> bit++) & 1 ? GroupQElem::minus_one() : GroupQElem::one();
      }
      ++total;
      const NormalizeResult r = normalize_hom(h, budgets.node_budget);
      if (r.reached && apply_moves(h, r.moves) == HomTuple::standard(g)) ++reached;
      if (r.used_search) ++searched;
    }
    rec.add("normalize", "normalization reaches the standard homomorphism from every intermediate shape, g = " +
                             std::to_string(g),
            str(total) + "/" + str(total), str(reached) + "/" + str(total) + " (search used " + str(searched) + ")",
            reached == total);
  }
  {
    const HomTuple h = HomTuple::parse(2, "i,k,1,1");
    const NormalizeResult r = normalize_hom(h, budgets.node_budget);
    const bool ok = r.reached && apply_moves(h, r.moves) == HomTuple::standard(2);
    rec.add("normalize", "search certificate: a move sequence carries (i,k,1,1) to the standard homomorphism",
            "reached, verified by replay",
            ok ? "reached in " + str(r.moves.size()) + " moves, verified by replay" : "not reached", ok);
  }
  {
    const SurjectionReport r = enumerate_surjections(1);
    rec.add("enumerate", "genus 1: no surjection onto Q satisfies the relation", "0", str(r.surjective),
            r.surjective == 0);
  }
  for (int g = 2; g <= budgets.max_enumeration_genus; ++g) {
    const SurjectionReport r = enumerate_surjections(g);
    // Frobenius: #{R = 1} = |G|^{2g-1} sum over irreducibles of dim^{2-2g}.
    std::uint64_t valid = 0;
    for (std::uint64_t dim : {1, 1, 1, 1, 2}) {
      std::uint64_t term = 8;
      for (int t = 0; t < 2 * g - 2; ++t) term *= 8 / dim;
      valid += term;
    }
    // Moebius inversion over the subgroup lattice of Q: mu = 1 at Q, -1 at each
    // cyclic subgroup of order 4, 2 at the centre, 0 at the trivial group.
    std::uint64_t pow4 = 1, pow2 = 1;
    for (int t = 0; t < 2 * g; ++t) {
      pow4 *= 4;
      pow2 *= 2;
    }
    const std::uint64_t surjective = valid - 3 * pow4 + 2 * pow2;
    const std::string want = std::to_string(valid) + " valid, " + std::to_string(surjective) + " surjective";
    const std::string got = std::to_string(r.valid) + " valid, " + std::to_string(r.surjective) + " surjective";
    rec.add("enumerate", "genus " + std::to_string(g) + ": homomorphism counts by exhaustive enumeration", want, got,
            want == got);
    const bool one = r.orbit_sizes.size() == 1 && r.moves_preserve_surjections;
    rec.add("enumerate", "genus " + std::to_string(g) + ": surjections form a single orbit under the move set",
            "1 orbit(s), sizes " + std::to_string(surjective), orbit_string(r),
            one ? Status::Evidence : Status::Fail);
  }
  return rec.take();
}

// ---- cover_homology ----

std::vector<ClaimRecord> cover_claims(const Budgets&, int section) {
  using namespace cover;
  Recorder rec("cover_homology", section);
  const homs::HomTuple h = homs::HomTuple::standard(2);
  const CoverGraph g = build_cover_graph(h);
  const DeckHomology dh = h1_with_deck_action(g);
  rec.add("prym", "genus 2 standard cover: rank H_1 of the quotient graph", "9", str(dh.h1.rank()), dh.h1.rank() == 9);

  const CycleCReport c = check_cycle_c_and_basis();
  bool divisors_one = std::all_of(c.minus_divisors.begin(), c.minus_divisors.end(), [](const Integer& d) { return d == 1; });
  rec.add("prym", "anti-invariant part V_- has rank 4 and is saturated", "rank 4, saturated",
          "rank " + str(c.minus_rank) + (divisors_one ? ", saturated" : ", not saturated"),
          c.minus_rank == 4 && divisors_one);
  rec.add("prym", "the cycle c is a cycle on the edges of the graph", "terms are edges, boundary 0",
          std::string(c.terms_are_edges ? "terms are edges" : "terms not edges") +
              (c.boundary_zero ? ", boundary 0" : ", boundary nonzero"),
          c.terms_are_edges && c.boundary_zero);
  rec.add("prym", "{c, ic, jc, zeta c} is a Z-basis of V_-", "det +-1",
          "det " + str(c.determinant_in_minus_part) + (c.zeta_integral ? ", zeta c integral" : ", zeta c not integral"),
          c.is_basis && c.zeta_integral && abs(c.determinant_in_minus_part) == 1);
  rec.add("prym", "i and j act on that basis as on M in the basis (1, i, j, zeta)", "match",
          c.structure_constants_match ? "match" : "mismatch", c.structure_constants_match);

  for (int genus : {2, 3}) {
    const PrymLatticeModel p = prym_lattice_model(genus, homs::HomTuple::standard(genus));
    const bool structure = p.module_structure_verified && p.is_homomorphism && p.minus_one_is_minus_identity &&
                           p.a_block_unimodular;
    rec.add("prym", "genus " + std::to_string(genus) + ": anti-invariant lattice as a module",
            module_type_string(genus) + ", rank " + str(static_cast<std::size_t>(8 * (genus - 1))),
            p.module_type + ", rank " + str(p.rank) + (structure ? "" : " (structure check failed)"),
            structure && p.module_type == module_type_string(genus) && p.rank == static_cast<std::size_t>(8 * (genus - 1)));
    rec.add("prym", "genus " + std::to_string(genus) + ": every rho(q) preserves the symplectic form",
            "8/8 symplectic, A-block isotropic",
            std::string(p.preserves_form ? "8/8 symplectic" : "not symplectic") +
                (p.a_block_isotropic ? ", A-block isotropic" : ", A-block not isotropic"),
            p.preserves_form && p.a_block_isotropic);
  }
  return rec.take();
}

// ---- lie_engine ----

std::string decomposition_string(const lie::AlgebraType& alg, lie::Decomposition d) {
  std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return a.highest > b.highest; });
  std::string names, dims;
  std::int64_t total = 0;
  for (const auto& c : d) {
    const std::int64_t dim = lie::weyl_dim(alg, c.highest);
    for (std::int64_t t = 0; t < c.multiplicity; ++t) {
      if (!names.empty()) {
        names += " + ";
        dims += " + ";
      }
      names += lie::weight_to_string(c.highest);
      dims += std::to_string(dim);
      total += dim;
    }
  }
  return names + " [" + std::to_string(total) + " = " + dims + "]";
}

std::vector<ClaimRecord> lie_claims(const Budgets&, int section) {
  using namespace lie;
  Recorder rec("lie_engine", section);
  const AlgebraType b3 = AlgebraType::parse("B3");

  struct Dec {
    std::string expr, topic;
    std::vector<std::string> highest;
  };
  const std::vector<Dec> decs{
      {"wedge(2, G)", "wedge^2 Γ = wedge^2 V + V", {"1 1 0", "1 0 0"}},
      {"sym(2, G)", "Sym^2 Γ = wedge^3 V + C", {"1 1 1", "0 0 0"}},
      {"wedge(4, G)", "wedge^4 Γ = wedge^3 V + (S^2 V)_0 + V + C", {"2 0 0", "1 1 1", "1 0 0", "0 0 0"}},
  };
  for (const auto& d : decs) {
    Decomposition want;
    for (const auto& h : d.highest) want.push_back({parse_weight(h), 1});
    const Decomposition got = decompose(b3, evaluate_expression(b3, d.expr));
    const std::string ws = decomposition_string(b3, want), gs = decomposition_string(b3, got);
    rec.add("decompose", d.topic + " under so(7)", ws, gs, ws == gs);
  }

  struct Inv {
    std::string expr, topic;
    std::int64_t expected;
  };
  const std::vector<Inv> invs{
      {"wedge(2, G (+) G)", "dim B^1 = 1: invariants in wedge^2(Γ + Γ)", 1},
      {"wedge(4, G (+) G)", "dim B^2 = 6: invariants in wedge^4(Γ + Γ)", 6},
      {"(G (+) G) (x) (G (+) G)", "invariants in (Γ + Γ) (x) (Γ + Γ)", 4},
      {"wedge(2, G) (x) wedge(2, G)", "invariants in wedge^2 Γ (x) wedge^2 Γ", 2},
      {"wedge(3, G) (x) G", "invariants in wedge^3 Γ (x) Γ", 1},
      {"wedge(6, G (+) G)", "invariants in wedge^6(Γ + Γ) (8008 weights)", 6},
      {"wedge(8, G (+) G)", "invariants in wedge^8(Γ + Γ) (12870 weights)", 16},
  };
  for (const auto& inv : invs) {
    const std::int64_t got = invariant_dim(b3, evaluate_expression(b3, inv.expr));
    rec.add("invariants", inv.topic, std::to_string(inv.expected), std::to_string(got), got == inv.expected);
  }

  for (const auto& name : scenario_names())
    for (const auto& row : scenario_report(name))
      rec.add("scenario:" + name, row.claim, row.expected, row.computed, row.pass);
  return rec.take();
}

// ---- spin_explicit ----

std::vector<ClaimRecord> spin_claims(const Budgets&, int section) {
  using namespace spin;
  Recorder rec("spin_explicit", section);
  const SpinRep rep = build_spin_rep();
  rec.add("invariant", "Clifford model normalization is unique among the tested scalars", "1 candidate",
          str(static_cast<std::size_t>(rep.candidates_passing)) + " candidate(s), scale " + rep.scale.get_str() +
              ", parity sign " + std::to_string(rep.parity_sign),
          rep.candidates_passing == 1);

  const auto brackets = check_brackets(rep);
  const auto ok = static_cast<std::size_t>(std::count_if(brackets.begin(), brackets.end(), [](const BracketCheck& b) { return b.ok; }));
  rec.add("check-bracket", "rho is a Lie algebra map on all pairs of basis elements",
          str(brackets.size()) + "/" + str(brackets.size()), str(ok) + "/" + str(brackets.size()), ok == brackets.size() && ok == 210);

  const InvariantReport inv = so7_invariant(rep);
  rec.add("invariant", "weight-zero subspace of wedge^4 Γ", "8", str(inv.monomials.size()), inv.monomials.size() == 8);
  rec.add("invariant", "the so(7)-invariant line in wedge^4 Γ", "dimension 1, killed by all 21 generators",
          "dimension " + str(inv.kernel_dim) + (inv.annihilated_by_all ? ", killed by all 21 generators" : ", not invariant"),
          inv.kernel_dim == 1 && inv.annihilated_by_all);

  const PrintedComparison cmp = compare_with_printed(inv);
  const bool ends = cmp.terms.size() == 8 && cmp.terms.front().matches && cmp.terms.back().matches &&
                    cmp.terms.front().computed == 2 && cmp.terms.back().computed == 2;
  rec.add("invariant", "normalized invariant: first and last coefficients", "2, 2",
          cmp.terms.empty() ? "none" : cmp.terms.front().computed.get_str() + ", " + cmp.terms.back().computed.get_str(), ends);
  const Rational proj = project_even(inv.full_vector);
  rec.add("invariant", "coefficient of the wedge^4 W monomial e_{} e_12 e_13 e_23", "2 (nonzero)", proj.get_str(), proj == 2);

  std::size_t matching = 0;
  std::string mismatch;
  for (std::size_t t = 0; t < cmp.terms.size(); ++t) {
    const PrintedTerm& term = cmp.terms[t];
    if (term.matches) {
      ++matching;
      continue;
    }
    if (!mismatch.empty()) mismatch += "; ";
    mismatch += "term " + str(t + 1) + " " + monomial_label(term.monomial) +
                (term.weight_zero ? " has coefficient " + term.computed.get_str() : " is not of weight zero");
  }
  for (const auto& m : cmp.missing) {
    Rational c;
    const auto all = wedge_monomials(4);
    const auto pos = static_cast<std::size_t>(std::find(all.begin(), all.end(), m) - all.begin());
    if (pos < inv.full_vector.size()) c = inv.full_vector[pos];
    mismatch += "; computed support has " + monomial_label(m) + " with coefficient " + c.get_str();
  }
  const Status printed_status = cmp.all_match ? Status::Pass : (matching + 1 == cmp.terms.size() ? Status::Flagged : Status::Fail);
  rec.add("invariant", "agreement with the eight-term printed invariant", "8/8 terms",
          str(matching) + "/" + str(cmp.terms.size()) + " terms" + (mismatch.empty() ? "" : "; " + mismatch),
          printed_status);

  const WeightCrossCheck wc = cross_check_weights(rep);
  const bool wc_ok = wc.spin_match && wc.wedge4_match && wc.wedge4_zero_model == wc.wedge4_zero_engine &&
                     wc.wedge2_invariants == 0 && wc.sym2_invariants == 1;
  rec.add("invariant", "matrix model agrees with the weight engine (weights, wedge^2 and Sym^2 invariants)",
          "weights match, zero weights 8/8, invariants 0 and 1",
          std::string(wc.spin_match && wc.wedge4_match ? "weights match" : "weights differ") + ", zero weights " +
              std::to_string(wc.wedge4_zero_model) + "/" + std::to_string(wc.wedge4_zero_engine) + ", invariants " +
              str(wc.wedge2_invariants) + " and " + str(wc.sym2_invariants),
          wc_ok);
  return rec.take();
}

// ---- weil_classes ----

std::vector<ClaimRecord> weil_claims(const Budgets& budgets, int section) {
  using namespace weil;
  Recorder rec("weil_classes", section);
  for (int n : {1, 2})
    for (const qalg::AlgebraParams& p : {qalg::AlgebraParams::hamilton(), qalg::AlgebraParams(-1, -3)}) {
      const HModel model = HModel::make(n, p);
      const WeilSpace wk = weil_space(model, {KElement{Rational(0), Rational(1)}}, budgets.ladder_limit);
      const QuaternionSpan wf = quaternion_span(model, wk.space, budgets.span_rounds);
      bool stable = true;
      for (const auto& y : {qalg::QuatElem::unit_i(p), qalg::QuatElem::unit_j(p)})
        stable = stable && wf.space.image_under(exterior_action(model.action(y), 2 * n)) == wf.space;
      const bool contains = wf.space.contains(wk.space);
      const std::string topic = "n = " + std::to_string(n) + ", F = (" + p.r.get_str() + "," + p.s.get_str() +
                                "): dim W_K and dim W_F";
      const std::string want = "2, " + std::to_string(2 * n + 1) + ", W_K in W_F, F-stable";
      const std::string got = str(wk.space.dim()) + ", " + str(wf.space.dim()) +
                              (contains ? ", W_K in W_F" : ", W_K not in W_F") + (stable ? ", F-stable" : ", not F-stable");
      rec.add("report", topic, want, got, want == got);
    }
  return rec.take();
}

// ---- curve_model ----

std::string failed_names(const curve::CheckReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.ok) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

void add_checks(Recorder& rec, const std::string& check, const std::string& topic, const curve::CheckReport& r) {
  const std::size_t ok = static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const curve::Check& c) { return c.ok; }));
  std::string got = str(ok) + "/" + str(r.checks.size());
  if (ok != r.checks.size()) got += "; failing: " + failed_names(r);
  rec.add(check, topic, str(r.checks.size()) + "/" + str(r.checks.size()), got, r.all_ok());
}

std::vector<ClaimRecord> curve_claims(const Budgets& budgets, int section) {
  using namespace curve;
  Recorder rec("curve_model", section);
  add_checks(rec, "autos", "i, j preserve y^2 = x^5 - x and generate Q with -1 = (x, -y)", verify_curve_autos());
  add_checks(rec, "quadrics", "Q0..Q3 vanish on (1, x, x^2, x^3, y)", verify_quadrics());
  add_checks(rec, "action", "P^4 action: projective Q relations, quadric span stable, matches the curve pullback",
             verify_p4_action());

  const QuarticReport q = verify_invariant_quartics();
  std::string scalars;
  bool all_one = true;
  for (const auto& s : q.scalars) {
    if (s.element == std::string("1")) continue;
    if (!scalars.empty()) scalars += ", ";
    scalars += s.element + "*" + s.quartic + " = " + (s.lambda ? s.lambda->to_string() : "?") + "*" + s.quartic;
    all_one = all_one && s.lambda && *s.lambda == curve::Gauss(1);
  }
  rec.add("quartics", "the four quartics are eigenvectors of i and j and span a 4-dimensional space",
          "proportional, span 4",
          std::string(q.all_proportional() ? "proportional" : "not proportional") + ", span " + str(q.span_dim),
          q.all_proportional() && q.span_dim == 4 && q.span_stable);
  rec.add("quartics", "eigenvalues of i and j on the quartics", "all 1 (recorded)", all_one ? "all 1" : scalars,
          q.all_proportional());

  for (int p : budgets.primes) {
    const LocusReport l = finite_field_locus(p);
    const bool ok = l.equal() && l.curve_in_both && l.locus_is_curve && l.locus_stable;
    rec.add("locus", "common zeros of the quartics equal those of the quadrics over F_" + std::to_string(p),
            "equal point sets",
            std::string(l.equal() ? "equal" : "different") + ": " + std::to_string(l.quadric_zeros) + " and " +
                std::to_string(l.quartic_zeros) + " of " + std::to_string(l.points_enumerated) + " points; curve has " +
                std::to_string(l.curve_points) + (l.locus_is_curve ? ", equal to the locus" : ", not the locus") +
                (l.locus_stable ? ", Q-stable" : ", not Q-stable"),
            ok ? Status::Evidence : Status::Fail);
  }

  const ScrollNumerology s = scroll_numerology(4);
  std::ostringstream got;
  got << "(" << s.genus << ", " << s.h0_H << ", " << s.h0_H2 << ", " << s.sym2_dim << ", " << s.quadric_gap << ", "
      << s.scroll_dim << ", " << s.scroll_deg << ")";
  rec.add("numerology", "n = 4: (genus, h0(H), h0(2H), dim Sym^2, quadric gap, scroll dim, scroll degree)",
          "(9, 8, 24, 36, 12, 4, 4)", got.str(), got.str() == "(9, 8, 24, 36, 12, 4, 4)");
  return rec.take();
}

using ModuleRunner = std::function<std::vector<ClaimRecord>(const Budgets&, int)>;

const std::vector<std::pair<std::string, ModuleRunner>>& registry() {
  static const std::vector<std::pair<std::string, ModuleRunner>> reg{
      {"qalg", qalg_claims},          {"surface_homs", homs_claims}, {"cover_homology", cover_claims},
      {"lie_engine", lie_claims},     {"spin_explicit", spin_claims}, {"weil_classes", weil_claims},
      {"curve_model", curve_claims},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, run] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<ClaimRecord> run_module(const std::string& module, const Budgets& budgets) {
  const auto& reg = registry();
  for (std::size_t t = 0; t < reg.size(); ++t)
    if (reg[t].first == module) return reg[t].second(budgets, static_cast<int>(t + 1));
  throw std::invalid_argument("unknown module: " + module);
}

std::vector<ClaimRecord> run_suite(const std::optional<std::string>& module, const Budgets& budgets) {
  std::vector<ClaimRecord> out;
  if (module) out = run_module(*module, budgets);
  else
    for (const auto& name : module_names()) {
      auto part = run_module(name, budgets);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end(), [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; });
  return out;
}

std::vector<ClaimRecord> run_check(const std::string& module, const std::string& check, const Budgets& budgets) {
  std::vector<ClaimRecord> out;
  for (auto& r : run_module(module, budgets))
    if (r.check == check) out.push_back(std::move(r));
  if (out.empty()) throw std::invalid_argument("unknown check " + check + " for module " + module);
  return out;
}

std::string emit_json(const std::vector<ClaimRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["module"] = r.module;
    j["check"] = r.check;
    j["topic"] = r.topic;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["status"] = status_string(r.status);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<ClaimRecord> parse_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("parse_json: expected an array");
  std::vector<ClaimRecord> out;
  for (const auto& j : arr)
    out.push_back({j.at("claim_id").get<std::string>(), j.at("module").get<std::string>(),
                   j.at("check").get<std::string>(), j.at("topic").get<std::string>(),
                   j.at("expected").get<std::string>(), j.at("computed").get<std::string>(),
                   parse_status(j.at("status").get<std::string>())});
  return out;
}

std::string emit_markdown(const std::vector<ClaimRecord>& records) {
  auto cell = [](std::string s) {
    std::string out;
    for (char c : s) {
      if (c == '|') out += "\\|";
      else if (c == '\n') out += ' ';
      else out += c;
    }
    return out;
  };
  std::vector<ClaimRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(), [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim_id < b.claim_id; });
  std::string md = "| claim_id | module | topic | expected | computed | status |\n|---|---|---|---|---|---|\n";
  for (const auto& r : sorted)
    md += "| " + cell(r.claim_id) + " | " + cell(r.module) + " | " + cell(r.topic) + " | " + cell(r.expected) + " | " +
          cell(r.computed) + " | " + status_string(r.status) + " |\n";
  return md;
}

int exit_code(const std::vector<ClaimRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.status == Status::Fail; }) ? 1 : 0;
}

}  // namespace hodge::report
