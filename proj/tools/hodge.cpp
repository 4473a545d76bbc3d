// hodge: command-line front end. Every command prints JSON, except
// `report --format markdown`.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hodge/cli_report.hpp"
#include "hodge/cover_homology.hpp"
#include "hodge/curve_model.hpp"
#include "hodge/lie_engine.hpp"
#include "hodge/spin_explicit.hpp"
#include "hodge/surface_homs.hpp"
#include "hodge/weil_classes.hpp"

using Json = nlohmann::ordered_json;
using namespace hodge;

namespace {

Json records_json(const std::vector<report::ClaimRecord>& records) { return Json::parse(report::emit_json(records)); }

std::vector<std::string> integers(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json checks_json(const curve::CheckReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) arr.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"all_ok", r.all_ok()}, {"checks", arr}};
}

Json homs_enumerate(int genus) {
  const homs::SurjectionReport r = homs::enumerate_surjections(genus);
  return {{"genus", r.genus},
          {"tuples_scanned", r.tuples_scanned},
          {"valid", r.valid},
          {"surjective", r.surjective},
          {"orbit_count", r.orbit_sizes.size()},
          {"orbit_sizes", r.orbit_sizes},
          {"standard_orbit_size", r.standard_orbit_size},
          {"standard_orbit_has_all_intermediate", r.standard_orbit_has_all_intermediate},
          {"moves_preserve_surjections", r.moves_preserve_surjections},
          {"status", r.orbit_sizes.size() == 1 ? "EVIDENCE" : "FAIL"}};
}

Json homs_normalize(int genus, const std::string& tuple, std::size_t budget) {
  const homs::HomTuple h = homs::HomTuple::parse(genus, tuple);
  const homs::NormalizeResult r = homs::normalize_hom(h, budget);
  Json moves = Json::array();
  for (const auto& m : r.moves) moves.push_back(m.label);
  const homs::HomTuple end = homs::apply_moves(h, r.moves);
  return {{"input", h.to_string()},   {"reached", r.reached},        {"used_search", r.used_search},
          {"nodes_explored", r.nodes_explored}, {"moves", moves}, {"result", end.to_string()},
          {"replay_matches_standard", end == homs::HomTuple::standard(genus)}};
}

Json homs_verify_psi(int genus) {
  Json psi = Json::array();
  for (int k = 1; k < genus; ++k) psi.push_back({{"k", k}, {"in_Ag", homs::verify_psi_in_ag(genus, k)}});
  Json moves = Json::array();
  for (const auto& m : homs::move_set(genus))
    moves.push_back({{"move", m.label}, {"relator_to_conjugate", homs::maps_relator_to_conjugate(m)}});
  return {{"genus", genus}, {"psi", psi}, {"moves", moves}};
}

Json prym_report(int genus, const std::optional<std::string>& tuple) {
  const homs::HomTuple h = tuple ? homs::HomTuple::parse(genus, *tuple) : homs::HomTuple::standard(genus);
  cover::CoverGraph g = cover::build_cover_graph(h);
  // The graph only sees the alpha images; if they miss part of Q, use the
  // normalized homomorphism, as the lattice model does.
  const bool normalized = !g.connected();
  if (normalized) {
    const homs::NormalizeResult r = homs::normalize_hom(h);
    if (!r.reached) throw std::runtime_error("prym: normalization did not reach the standard homomorphism");
    g = cover::build_cover_graph(homs::apply_moves(h, r.moves));
  }
  const cover::DeckHomology dh = cover::h1_with_deck_action(g);
  const cover::IntLattice minus = cover::minus_part(dh);
  Json out{{"genus", genus},
           {"hom", h.to_string()},
           {"graph_from_normalized_hom", normalized},
           {"h1_rank", dh.h1.rank()},
           {"minus_rank", minus.rank()},
           {"minus_elementary_divisors", integers(minus.elementary_divisors())},
           {"minus_saturated", minus.saturated()}};
  if (genus == 2 || genus == 3) {
    const cover::PrymLatticeModel p = cover::prym_lattice_model(genus, h);
    out["prym_rank"] = p.rank;
    out["module_type"] = p.module_type;
    out["expected_module_type"] = cover::module_type_string(genus);
    out["normalization_moves"] = p.normalization_moves;
    out["basis_determinant"] = p.basis_determinant.get_str();
    out["is_homomorphism"] = p.is_homomorphism;
    out["preserves_form"] = p.preserves_form;
    out["minus_one_is_minus_identity"] = p.minus_one_is_minus_identity;
    out["a_block_unimodular"] = p.a_block_unimodular;
    out["a_block_isotropic"] = p.a_block_isotropic;
    out["module_structure_verified"] = p.module_structure_verified;
  }
  return out;
}

Json lie_decompose(const std::string& alg_text, const std::string& expr) {
  const lie::AlgebraType alg = lie::AlgebraType::parse(alg_text);
  const lie::WeightMultiset ms = lie::evaluate_expression(alg, expr);
  Json weights = Json::array();
  for (const auto& [w, m] : ms.entries()) weights.push_back({{"weight", lie::weight_to_string(w)}, {"mult", m}});
  Json dec = Json::array();
  for (const auto& c : lie::decompose(alg, ms))
    dec.push_back({{"highest", lie::weight_to_string(c.highest)},
                   {"mult", c.multiplicity},
                   {"dim", lie::weyl_dim(alg, c.highest)}});
  return {{"algebra", alg.to_string()}, {"expression", expr},     {"dim", ms.total()},
          {"weights", weights},         {"decomposition", dec}, {"invariant_dim", lie::invariant_dim(alg, ms)}};
}

Json lie_scenario(const std::string& name) {
  Json rows = Json::array();
  for (const auto& r : lie::scenario_report(name))
    rows.push_back({{"claim", r.claim}, {"expected", r.expected}, {"computed", r.computed}, {"status", r.pass ? "PASS" : "FAIL"}});
  return {{"scenario", name}, {"rows", rows}};
}

Json spin_invariant() {
  const spin::SpinRep rep = spin::build_spin_rep();
  const spin::InvariantReport inv = spin::so7_invariant(rep);
  Json terms = Json::array();
  for (std::size_t t = 0; t < inv.monomials.size(); ++t)
    terms.push_back({{"monomial", spin::monomial_label(inv.monomials[t])}, {"coefficient", inv.coefficients[t].get_str()}});
  const spin::PrintedComparison cmp = spin::compare_with_printed(inv);
  Json printed = Json::array();
  for (const auto& p : cmp.terms)
    printed.push_back({{"monomial", spin::monomial_label(p.monomial)},
                       {"printed", p.printed.get_str()},
                       {"weight_zero", p.weight_zero},
                       {"computed", p.computed.get_str()},
                       {"matches", p.matches}});
  Json missing = Json::array();
  for (const auto& m : cmp.missing) missing.push_back(spin::monomial_label(m));
  return {{"weight_zero_dim", inv.monomials.size()},
          {"kernel_dim", inv.kernel_dim},
          {"annihilated_by_all", inv.annihilated_by_all},
          {"terms", terms},
          {"wedge4_W_coefficient", spin::project_even(inv.full_vector).get_str()},
          {"printed_comparison", printed},
          {"missing_from_printed", missing},
          {"status", cmp.all_match ? "PASS" : "FLAGGED"}};
}

Json spin_brackets() {
  const spin::SpinRep rep = spin::build_spin_rep();
  Json rows = Json::array();
  bool all = true;
  for (const auto& b : spin::check_brackets(rep)) {
    all = all && b.ok;
    const auto label = [](const std::pair<int, int>& p) {
      return "e" + std::to_string(p.first) + "^e" + std::to_string(p.second);
    };
    rows.push_back({{"x", label(b.x)}, {"y", label(b.y)}, {"status", b.ok ? "PASS" : "FAIL"}});
  }
  return {{"pairs", rows.size()}, {"all_pass", all}, {"results", rows}};
}

qalg::AlgebraParams parse_params(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--params expects r,s");
  return {Rational(text.substr(0, comma)), Rational(text.substr(comma + 1))};
}

Json weil_json(int n, const std::string& params, int ladder_limit) {
  const weil::WeilReport r = weil::weil_report(n, parse_params(params), ladder_limit);
  return {{"n", r.n},
          {"params", r.params.r.get_str() + "," + r.params.s.get_str()},
          {"ambient_dim", r.ambient_dim},
          {"dim_WK", r.dim_wk},
          {"dim_WF", r.dim_wf},
          {"generators_used", r.generators_used},
          {"span_rounds", r.span_rounds},
          {"WK_in_WF", r.wk_in_wf},
          {"WF_F_stable", r.wf_f_stable}};
}

Json curve_json(const std::string& check, int p, int n) {
  if (check == "autos") return checks_json(curve::verify_curve_autos());
  if (check == "quadrics") return checks_json(curve::verify_quadrics());
  if (check == "action") return checks_json(curve::verify_p4_action());
  if (check == "quartics") {
    const curve::QuarticReport q = curve::verify_invariant_quartics();
    Json rows = Json::array();
    for (const auto& s : q.scalars)
      rows.push_back({{"quartic", s.quartic}, {"element", s.element}, {"lambda", s.lambda ? s.lambda->to_string() : "none"}});
    return {{"span_dim", q.span_dim}, {"span_stable", q.span_stable}, {"all_proportional", q.all_proportional()}, {"scalars", rows}};
  }
  if (check == "locus") {
    const curve::LocusReport l = curve::finite_field_locus(p);
    return {{"p", l.p},
            {"sqrt_minus_one", l.sqrt_minus_one.get_str()},
            {"points_enumerated", l.points_enumerated},
            {"quadric_zeros", l.quadric_zeros},
            {"quartic_zeros", l.quartic_zeros},
            {"mismatches", l.mismatches},
            {"curve_points", l.curve_points},
            {"curve_in_both", l.curve_in_both},
            {"locus_is_curve", l.locus_is_curve},
            {"locus_stable", l.locus_stable},
            {"equal", l.equal()},
            {"status", l.equal() ? curve::LocusReport::status : "FAIL"}};
  }
  const curve::ScrollNumerology s = curve::scroll_numerology(n);
  return {{"n", s.n},           {"genus", s.genus},           {"h0_H", s.h0_H},
          {"h0_H2", s.h0_H2},   {"sym2_dim", s.sym2_dim},     {"quadric_gap", s.quadric_gap},
          {"scroll_dim", s.scroll_dim}, {"scroll_deg", s.scroll_deg}, {"deg_H", s.deg_H}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for quaternionic covers and Hodge classes of abelian varieties"};
  app.require_subcommand(1);

  auto* qalg_cmd = app.add_subcommand("qalg", "quaternion algebra checks");
  std::optional<std::string> qalg_check;
  qalg_cmd->add_option("--check", qalg_check, "nonfree, wedderburn or embed")
      ->check(CLI::IsMember({"nonfree", "wedderburn", "embed"}));

  auto* homs_cmd = app.add_subcommand("homs", "homomorphisms from surface groups onto Q");
  int homs_genus = 2;
  std::optional<std::string> normalize_tuple;
  std::size_t node_budget = 1'000'000;
  homs_cmd->add_option("--genus", homs_genus, "genus g")->check(CLI::Range(1, 5));
  auto* enumerate_flag = homs_cmd->add_flag("--enumerate", "exhaustive enumeration (g <= 3)");
  auto* normalize_opt = homs_cmd->add_option("--normalize", normalize_tuple, "2g images, e.g. i,k,1,1");
  auto* psi_flag = homs_cmd->add_flag("--verify-psi", "check the moves against the surface relation");
  homs_cmd->add_option("--node-budget", node_budget, "search node cap for --normalize");
  enumerate_flag->excludes(normalize_opt)->excludes(psi_flag);
  normalize_opt->excludes(psi_flag);

  auto* prym_cmd = app.add_subcommand("prym", "homology of the quaternionic cover");
  int prym_genus = 2;
  std::optional<std::string> prym_hom;
  prym_cmd->add_option("--genus", prym_genus, "genus g")->check(CLI::Range(2, 3));
  prym_cmd->add_option("--hom", prym_hom, "2g images; defaults to the standard homomorphism");
  prym_cmd->add_flag("--report", "print the lattice report (default)");

  auto* lie_cmd = app.add_subcommand("lie", "weight multisets and decompositions");
  std::optional<std::string> scenario;
  std::vector<std::string> decompose_args;
  auto* scen_opt = lie_cmd->add_option("--scenario", scenario, "scenario name");
  auto* dec_opt = lie_cmd->add_option("--decompose", decompose_args, "ALGEBRA EXPRESSION")->expected(2);
  scen_opt->excludes(dec_opt);

  auto* spin_cmd = app.add_subcommand("spin", "explicit spin representation of so(7)");
  auto* inv_flag = spin_cmd->add_flag("--invariant", "weight-zero monomials and invariant coefficients");
  auto* bracket_flag = spin_cmd->add_flag("--check-bracket", "bracket compatibility per pair");
  inv_flag->excludes(bracket_flag);

  auto* weil_cmd = app.add_subcommand("weil", "Weil and quaternion classes");
  int weil_n = 1;
  std::string weil_params = "-1,-1";
  int ladder_limit = 10;
  weil_cmd->add_option("--n", weil_n, "half the dimension, 1 or 2")->check(CLI::IsMember({1, 2}));
  weil_cmd->add_option("--params", weil_params, "r,s with i^2 = r, j^2 = s");
  weil_cmd->add_option("--ladder-limit", ladder_limit, "extra generators for W_K")->check(CLI::PositiveNumber);
  weil_cmd->add_flag("--report", "print the report (default)");

  auto* curve_cmd = app.add_subcommand("curve", "the genus-2 curve y^2 = x^5 - x");
  std::string curve_check = "autos";
  int prime = 13, scroll_n = 4;
  curve_cmd->add_option("--check", curve_check, "autos, quadrics, action, quartics, locus or numerology")
      ->check(CLI::IsMember({"autos", "quadrics", "action", "quartics", "locus", "numerology"}));
  curve_cmd->add_option("--p", prime, "prime for --check locus");
  curve_cmd->add_option("--n", scroll_n, "n for --check numerology");

  auto* report_cmd = app.add_subcommand("report", "run the claim registry");
  std::optional<std::string> module, config;
  std::string format = "json";
  report_cmd->add_option("--module", module, "restrict to one module")->check(CLI::IsMember(report::module_names()));
  report_cmd->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  report_cmd->add_option("--config", config, "key=value budget file");

  CLI11_PARSE(app, argc, argv);

  try {
    report::Budgets budgets = config ? report::Budgets::from_config_file(*config) : report::Budgets{};
    budgets.apply_environment();

    Json out;
    if (*qalg_cmd) {
      const auto records = qalg_check ? report::run_check("qalg", *qalg_check, budgets) : report::run_module("qalg", budgets);
      std::cout << records_json(records).dump(2) << "\n";
      return report::exit_code(records);
    } else if (*homs_cmd) {
      if (*normalize_opt) out = homs_normalize(homs_genus, *normalize_tuple, node_budget);
      else if (*psi_flag) out = homs_verify_psi(homs_genus);
      else {
        if (homs_genus > 3) throw std::invalid_argument("--enumerate supports g <= 3");
        out = homs_enumerate(homs_genus);
      }
    } else if (*prym_cmd) {
      out = prym_report(prym_genus, prym_hom);
    } else if (*lie_cmd) {
      if (scenario) out = lie_scenario(*scenario);
      else if (decompose_args.size() == 2) out = lie_decompose(decompose_args[0], decompose_args[1]);
      else {
        out = Json::array();
        for (const auto& name : lie::scenario_names()) out.push_back(lie_scenario(name));
      }
    } else if (*spin_cmd) {
      out = *bracket_flag ? spin_brackets() : spin_invariant();
    } else if (*weil_cmd) {
      out = weil_json(weil_n, weil_params, ladder_limit);
    } else if (*curve_cmd) {
      out = curve_json(curve_check, prime, scroll_n);
    } else if (*report_cmd) {
      const auto records = report::run_suite(module, budgets);
      std::cout << (format == "markdown" ? report::emit_markdown(records) : report::emit_json(records));
      return report::exit_code(records);
    }
    std::cout << out.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
