#include "hodge/surface_homs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hodge::homs {

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.gen < 1 || (l.exp != 1 && l.exp != -1)) throw std::invalid_argument("FreeWord: malformed letter");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(std::move(all));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back({it->gen, -it->exp});
  return FreeWord(std::move(inv));
}

FreeWord FreeWord::substitute(const std::vector<FreeWord>& images) const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (l.gen > static_cast<int>(images.size())) throw std::out_of_range("FreeWord::substitute: generator out of range");
    const FreeWord& img = l.exp == 1 ? images[l.gen - 1] : images[l.gen - 1].inverse();
    out.insert(out.end(), img.letters_.begin(), img.letters_.end());
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].gen == letters_[hi - 1].gen && letters_[lo].exp == -letters_[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<Letter>(letters_.begin() + lo, letters_.begin() + hi));
}

int FreeWord::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

std::string FreeWord::to_string(int genus) const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    const auto& l = letters_[t];
    if (t) os << ' ';
    if (l.gen <= genus)
      os << 'a' << l.gen;
    else
      os << 'b' << (l.gen - genus);
    if (l.exp == -1) os << "^-1";
  }
  return os.str();
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeWord surface_relator(int genus) {
  if (genus < 1) throw std::invalid_argument("surface_relator: genus must be positive");
  FreeWord r;
  for (int m = 1; m <= genus; ++m) r = r * commutator(FreeWord::gen(alpha(m)), FreeWord::gen(beta(genus, m)));
  return r;
}

bool are_conjugate(const FreeWord& u, const FreeWord& v) {
  const auto cu = u.cyclically_reduced().letters();
  const auto cv = v.cyclically_reduced().letters();
  if (cu.size() != cv.size()) return false;
  if (cu.empty()) return true;
  for (std::size_t shift = 0; shift < cu.size(); ++shift) {
    bool same = true;
    for (std::size_t t = 0; t < cu.size() && same; ++t) same = cu[(t + shift) % cu.size()] == cv[t];
    if (same) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

HomTuple HomTuple::standard(int genus) {
  if (genus < 2) throw std::invalid_argument("HomTuple::standard: genus must be at least 2");
  HomTuple h{genus, std::vector<GroupQElem>(2 * genus, GroupQElem::one())};
  h.images[genus - 2] = GroupQElem::i();
  h.images[genus - 1] = GroupQElem::j();
  return h;
}

HomTuple HomTuple::parse(int genus, const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  HomTuple h{genus, {}};
  std::string tok;
  while (is >> tok) h.images.push_back(GroupQElem::parse(tok));
  if (static_cast<int>(h.images.size()) != 2 * genus)
    throw std::invalid_argument("HomTuple::parse: expected " + std::to_string(2 * genus) + " symbols");
  return h;
}

HomTuple HomTuple::decode(int genus, std::uint64_t code) {
  HomTuple h{genus, std::vector<GroupQElem>(2 * genus)};
  for (int t = 0; t < 2 * genus; ++t) {
    h.images[t] = GroupQElem::from_index(static_cast<int>(code & 7U));
    code >>= 3;
  }
  return h;
}

std::uint64_t HomTuple::encode() const {
  std::uint64_t code = 0;
  for (int t = 2 * genus - 1; t >= 0; --t) code = (code << 3) | static_cast<std::uint64_t>(images[t].index());
  return code;
}

std::string HomTuple::to_string() const {
  std::string s;
  for (std::size_t t = 0; t < images.size(); ++t) s += (t ? " " : "") + images[t].to_string();
  return s;
}

GroupQElem eval_word(const HomTuple& h, const FreeWord& w) {
  GroupQElem acc = GroupQElem::one();
  for (const auto& l : w.letters()) {
    if (l.gen > 2 * h.genus) throw std::out_of_range("eval_word: generator index out of range");
    const GroupQElem g = h.images[l.gen - 1];
    acc = acc * (l.exp == 1 ? g : g.inverse());
  }
  return acc;
}

HomClass classify_hom(const HomTuple& h) {
  HomClass c;
  c.valid = eval_word(h, surface_relator(h.genus)) == GroupQElem::one();
  c.surjective = qalg::generated_subgroup(h.images).size() == 8;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<FreeWord> identity_images(int genus) {
  std::vector<FreeWord> imgs;
  for (int t = 1; t <= 2 * genus; ++t) imgs.push_back(FreeWord::gen(t));
  return imgs;
}

void check_handle(int genus, int m) {
  if (m < 1 || m > genus) throw std::invalid_argument("Move: handle index out of range");
}

}  // namespace

Move Move::psi(int genus, int k) {
  if (k < 1 || k > genus - 1) throw std::invalid_argument("Move::psi: need 1 <= k <= g-1");
  const FreeWord ak = FreeWord::gen(alpha(k));
  const FreeWord bk = FreeWord::gen(beta(genus, k));
  const FreeWord a1 = FreeWord::gen(alpha(k + 1));
  const FreeWord b1 = FreeWord::gen(beta(genus, k + 1));
  Move mv{MoveKind::Psi, k, genus, identity_images(genus), "PSI(" + std::to_string(k) + ")"};
  for (int m = 1; m <= genus; ++m) {
    if (m == k || m == k + 1) continue;
    mv.images[alpha(m) - 1] = a1 * FreeWord::gen(alpha(m)) * a1.inverse();
    mv.images[beta(genus, m) - 1] = a1 * FreeWord::gen(beta(genus, m)) * a1.inverse();
  }
  mv.images[alpha(k) - 1] = a1 * ak;
  mv.images[beta(genus, k) - 1] = bk;
  mv.images[alpha(k + 1) - 1] = bk * a1 * bk.inverse();
  mv.images[beta(genus, k + 1) - 1] = a1 * b1 * a1.inverse() * bk.inverse();
  return mv;
}

Move Move::beta_twist(int genus, int m) {
  check_handle(genus, m);
  Move mv{MoveKind::BetaTwist, m, genus, identity_images(genus), "BETA_TWIST(" + std::to_string(m) + ")"};
  const FreeWord a = FreeWord::gen(alpha(m));
  mv.images[beta(genus, m) - 1] = FreeWord::gen(beta(genus, m)) * a * a;
  return mv;
}

Move Move::alpha_slide(int genus, int m) {
  check_handle(genus, m);
  Move mv{MoveKind::AlphaSlide, m, genus, identity_images(genus), "ALPHA_SLIDE(" + std::to_string(m) + ")"};
  mv.images[alpha(m) - 1] = FreeWord::gen(alpha(m)) * FreeWord::gen(beta(genus, m));
  return mv;
}

Move Move::beta_slide(int genus, int m) {
  check_handle(genus, m);
  Move mv{MoveKind::BetaSlide, m, genus, identity_images(genus), "BETA_SLIDE(" + std::to_string(m) + ")"};
  mv.images[beta(genus, m) - 1] = FreeWord::gen(beta(genus, m)) * FreeWord::gen(alpha(m));
  return mv;
}

Move Move::conjugation(int genus, const FreeWord& w) {
  if (w.max_generator() > 2 * genus) throw std::invalid_argument("Move::conjugation: word outside F_2g");
  Move mv{MoveKind::Conj, 0, genus, identity_images(genus), "CONJ(" + w.to_string(genus) + ")"};
  if (w.size() == 1) mv.param = w.letters().front().gen;
  for (auto& img : mv.images) img = w * img * w.inverse();
  return mv;
}

FreeWord Move::image_of_relator() const { return surface_relator(genus).substitute(images); }

std::vector<Move> move_set(int genus) {
  std::vector<Move> moves;
  for (int k = 1; k <= genus - 1; ++k) moves.push_back(Move::psi(genus, k));
  for (int m = 1; m <= genus; ++m) {
    moves.push_back(Move::beta_twist(genus, m));
    moves.push_back(Move::alpha_slide(genus, m));
    moves.push_back(Move::beta_slide(genus, m));
  }
  for (int t = 1; t <= 2 * genus; ++t) moves.push_back(Move::conjugation(genus, FreeWord::gen(t)));
  return moves;
}

HomTuple apply_move(const HomTuple& h, const Move& m) {
  if (m.genus != h.genus) throw std::invalid_argument("apply_move: genus mismatch");
  HomTuple out{h.genus, std::vector<GroupQElem>(h.images.size())};
  for (std::size_t t = 0; t < h.images.size(); ++t) out.images[t] = eval_word(h, m.images[t]);
  return out;
}

HomTuple apply_moves(HomTuple h, const std::vector<Move>& moves) {
  for (const auto& m : moves) h = apply_move(h, m);
  return h;
}

bool maps_relator_to_conjugate(const Move& m) { return are_conjugate(m.image_of_relator(), surface_relator(m.genus)); }

bool verify_psi_in_ag(int genus, int k) {
  const Move psi = Move::psi(genus, k);
  const FreeWord a = FreeWord::gen(alpha(k + 1));
  return psi.image_of_relator() == a * surface_relator(genus) * a.inverse();
}

bool has_intermediate_shape(const HomTuple& h) {
  const int g = h.genus;
  if (g < 2) return false;
  if (h.alpha_image(g - 1) != GroupQElem::i() || h.alpha_image(g) != GroupQElem::j()) return false;
  for (int m = 1; m <= g - 2; ++m)
    if (!h.alpha_image(m).is_central()) return false;
  for (int m = 1; m <= g; ++m)
    if (!h.beta_image(m).is_central()) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// The explicit reduction for a homomorphism of intermediate shape.
std::vector<Move> phase_one_moves(HomTuple h) {
  const int g = h.genus;
  std::vector<Move> moves;
  auto step = [&](const Move& m) {
    h = apply_move(h, m);
    moves.push_back(m);
  };
  const GroupQElem minus = GroupQElem::minus_one();
  const GroupQElem plus = GroupQElem::one();

  if (h.beta_image(g) == minus) step(Move::beta_twist(g, g));
  if (h.beta_image(g - 1) == minus) step(Move::beta_twist(g, g - 1));

  for (int m = 1; m <= g - 2; ++m) {
    if (h.beta_image(m) == minus && h.alpha_image(m) == plus) step(Move::alpha_slide(g, m));
    if (h.beta_image(m) == minus) step(Move::beta_slide(g, m));
  }

  bool any_negative = false;
  for (int m = 1; m <= g - 2; ++m) any_negative |= h.alpha_image(m) == minus;
  if (any_negative) {
    const int top = g - 2;
    // Make every alpha_m (m <= g-2) equal to -1, then clear them pairwise
    // from the bottom, and finally flip alpha_{g-2} with psi_{g-2}^2.
    if (h.alpha_image(top) == plus) {
      step(Move::psi(g, top));
      step(Move::psi(g, top));
    }
    for (int m = top - 1; m >= 1; --m)
      if (h.alpha_image(m) == plus) step(Move::psi(g, m));
    for (int m = 1; m <= top - 1; ++m) step(Move::psi(g, m));
    step(Move::psi(g, top));
    step(Move::psi(g, top));
  }
  return moves;
}

}  // namespace

NormalizeResult normalize_hom(const HomTuple& h, std::size_t node_budget) {
  const HomClass cls = classify_hom(h);
  if (!cls.valid) throw std::invalid_argument("normalize_hom: homomorphism does not satisfy the surface relation");
  if (!cls.surjective) throw std::invalid_argument("normalize_hom: homomorphism is not surjective");
  const HomTuple target = HomTuple::standard(h.genus);

  NormalizeResult res;
  if (h == target) {
    res.reached = true;
    return res;
  }
  if (has_intermediate_shape(h)) {
    res.moves = phase_one_moves(h);
    res.reached = apply_moves(h, res.moves) == target;
    if (!res.reached) throw std::logic_error("normalize_hom: explicit reduction did not reach the standard hom");
    return res;
  }

  // Breadth-first search over the move set.
  res.used_search = true;
  const auto moves = move_set(h.genus);
  struct Parent {
    std::uint64_t from;
    std::size_t move;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  std::queue<std::uint64_t> frontier;
  const std::uint64_t start = h.encode();
  const std::uint64_t goal = target.encode();
  parent.emplace(start, Parent{start, moves.size()});
  frontier.push(start);
  bool found = false;
  while (!frontier.empty() && !found) {
    const std::uint64_t cur = frontier.front();
    frontier.pop();
    ++res.nodes_explored;
    if (res.nodes_explored > node_budget) break;
    const HomTuple ch = HomTuple::decode(h.genus, cur);
    for (std::size_t mi = 0; mi < moves.size(); ++mi) {
      const std::uint64_t nxt = apply_move(ch, moves[mi]).encode();
      if (parent.count(nxt)) continue;
      parent.emplace(nxt, Parent{cur, mi});
      if (nxt == goal) {
        found = true;
        break;
      }
      frontier.push(nxt);
    }
  }
  if (!found) return res;

  std::vector<Move> path;
  for (std::uint64_t cur = goal; cur != start;) {
    const Parent& p = parent.at(cur);
    path.push_back(moves[p.move]);
    cur = p.from;
  }
  std::reverse(path.begin(), path.end());
  res.moves = std::move(path);
  res.reached = apply_moves(h, res.moves) == target;
  if (!res.reached) throw std::logic_error("normalize_hom: search path does not replay to the standard hom");
  return res;
}

// ---------------------------------------------------------------------------

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SurjectionReport enumerate_surjections(int genus) {
  if (genus < 1) throw std::invalid_argument("enumerate_surjections: genus must be positive");
  if (genus > 3) throw std::invalid_argument("enumerate_surjections: genus too large for exhaustive enumeration");
  SurjectionReport rep;
  rep.genus = genus;
  const std::uint64_t total = std::uint64_t{1} << (6 * genus);
  rep.tuples_scanned = total;

  std::vector<char> is_surj(total, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    const HomClass c = classify_hom(HomTuple::decode(genus, code));
    if (!c.valid) continue;
    ++rep.valid;
    if (c.surjective) {
      ++rep.surjective;
      is_surj[code] = 1;
    }
  }
  rep.moves_preserve_surjections = true;
  if (rep.surjective == 0) return rep;

  const auto moves = move_set(genus);
  DisjointSets sets(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!is_surj[code]) continue;
    const HomTuple h = HomTuple::decode(genus, code);
    for (const auto& m : moves) {
      const std::uint64_t img = apply_move(h, m).encode();
      if (!is_surj[img]) rep.moves_preserve_surjections = false;
      sets.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(img));
    }
  }

  std::unordered_map<std::uint32_t, std::size_t> sizes;
  for (std::uint64_t code = 0; code < total; ++code)
    if (is_surj[code]) ++sizes[sets.find(static_cast<std::uint32_t>(code))];
  for (const auto& [root, n] : sizes) rep.orbit_sizes.push_back(n);
  std::sort(rep.orbit_sizes.rbegin(), rep.orbit_sizes.rend());

  if (genus >= 2) {
    const std::uint32_t std_root = sets.find(static_cast<std::uint32_t>(HomTuple::standard(genus).encode()));
    rep.standard_orbit_size = sizes[std_root];
    rep.standard_orbit_has_all_intermediate = true;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!is_surj[code]) continue;
      const HomTuple h = HomTuple::decode(genus, code);
      if (has_intermediate_shape(h) && sets.find(static_cast<std::uint32_t>(code)) != std_root)
        rep.standard_orbit_has_all_intermediate = false;
    }
  }
  return rep;
}

GenusNumerology genus_numerology(int genus, int n) {
  if (genus < 2) throw std::invalid_argument("genus_numerology: genus must be at least 2");
  if (n < 1) throw std::invalid_argument("genus_numerology: n must be positive");
  return {8 * genus - 7, 4 * genus - 3, 4 * (genus - 1), n * (n - 1) / 2};
}

}  // namespace hodge::homs
