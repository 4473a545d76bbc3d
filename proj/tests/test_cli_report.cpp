#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hodge/cli_report.hpp"

using namespace hodge::report;

namespace {

const std::vector<ClaimRecord>& full_suite() {
  static const std::vector<ClaimRecord> records = run_suite();
  return records;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

struct EnvGuard {
  ~EnvGuard() { unsetenv("HODGE_BUDGET_SCALE"); }
};

}  // namespace

TEST_CASE("status strings round-trip") {
  for (Status s : {Status::Pass, Status::Fail, Status::Evidence, Status::Flagged}) CHECK(parse_status(status_string(s)) == s);
  CHECK(status_string(Status::Flagged) == "FLAGGED");
  CHECK_THROWS_AS(parse_status("MAYBE"), std::invalid_argument);
}

TEST_CASE("full suite: ids, order and statuses") {
  const auto& recs = full_suite();
  REQUIRE(!recs.empty());
  std::set<std::string> ids, modules;
  for (const auto& r : recs) {
    CHECK(ids.insert(r.claim_id).second);
    modules.insert(r.module);
    CHECK_MESSAGE(r.status != Status::Fail, r.claim_id << " " << r.topic << ": " << r.computed);
    const auto it = std::find(module_names().begin(), module_names().end(), r.module);
    REQUIRE(it != module_names().end());
    const std::string prefix = "section" + std::to_string(it - module_names().begin() + 1) + ".claim";
    CHECK(r.claim_id.rfind(prefix, 0) == 0);
  }
  CHECK(std::is_sorted(recs.begin(), recs.end(), [](const auto& a, const auto& b) { return a.claim_id < b.claim_id; }));
  CHECK(modules.size() == 7);
  CHECK(exit_code(recs) == 0);
  const auto flagged = std::count_if(recs.begin(), recs.end(), [](const auto& r) { return r.status == Status::Flagged; });
  CHECK(flagged >= 1);
  for (const auto& r : recs)
    if (r.status == Status::Flagged) CHECK(r.module == "spin_explicit");
}

TEST_CASE("module runs are subsets of the full suite and deterministic") {
  const auto& recs = full_suite();
  for (const char* m : {"qalg", "lie_engine", "spin_explicit"}) {
    const auto one = run_suite(std::string(m));
    CHECK(emit_json(one) == emit_json(run_suite(std::string(m))));
    for (const auto& r : one) CHECK(std::find(recs.begin(), recs.end(), r) != recs.end());
  }
  const auto lie = run_module("lie_engine");
  CHECK(std::any_of(lie.begin(), lie.end(), [](const auto& r) { return r.topic.find("dim B^2 = 6") != std::string::npos && r.status == Status::Pass; }));
  const auto wed = run_check("qalg", "wedderburn");
  REQUIRE(wed.size() == 1);
  CHECK(wed.front().computed == "(1,+1) (1,+1) (1,+1) (1,+1) (2,-1)");
  CHECK_THROWS_AS(run_module("nosuch"), std::invalid_argument);
  CHECK_THROWS(run_check("qalg", "nosuch"));
}

TEST_CASE("JSON schema and round-trip") {
  const auto& recs = full_suite();
  const std::string text = emit_json(recs);
  CHECK(parse_json(text) == recs);
  const auto doc = nlohmann::ordered_json::parse(text);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == recs.size());
  const std::vector<std::string> keys{"claim_id", "module", "check", "topic", "expected", "computed", "status"};
  for (const auto& row : doc) {
    std::vector<std::string> got;
    for (const auto& [k, v] : row.items()) {
      got.push_back(k);
      CHECK(v.is_string());
    }
    CHECK(got == keys);
  }
  CHECK_THROWS(parse_json("[{\"claim_id\": 3}]"));
  CHECK_THROWS(parse_json("not json"));
}

TEST_CASE("markdown table") {
  const auto recs = run_suite(std::string("qalg"));
  const std::string md = emit_markdown(recs);
  CHECK(count_lines(md) == recs.size() + 2);
  std::istringstream in(md);
  std::string header;
  std::getline(in, header);
  CHECK(std::count(header.begin(), header.end(), '|') == 7);
}

TEST_CASE("exit code") {
  ClaimRecord r{"section1.claim01", "qalg", "x", "t", "1", "1", Status::Pass};
  std::vector<ClaimRecord> v{r};
  CHECK(exit_code(v) == 0);
  v.back().status = Status::Evidence;
  CHECK(exit_code(v) == 0);
  v.back().status = Status::Flagged;
  CHECK(exit_code(v) == 0);
  v.back().status = Status::Fail;
  CHECK(exit_code(v) != 0);
}

TEST_CASE("budget configuration") {
  const Budgets b = Budgets::from_config_text(
      "# tighter run\nhoms.node_budget = 5000\nhoms.max_enumeration_genus = 2\nweil.ladder_limit=4\n"
      "weil.span_rounds = 7\ncurve.primes = 13, 29\n");
  CHECK(b.node_budget == 5000);
  CHECK(b.max_enumeration_genus == 2);
  CHECK(b.ladder_limit == 4);
  CHECK(b.span_rounds == 7);
  CHECK(b.primes == std::vector<int>{13, 29});
  CHECK_THROWS_AS(Budgets::from_config_text("unknown.key = 1"), std::invalid_argument);
  CHECK_THROWS_AS(Budgets::from_config_text("homs.max_enumeration_genus = 4"), std::invalid_argument);
  CHECK_THROWS_AS(Budgets::from_config_text("curve.primes = 7"), std::invalid_argument);
  CHECK_THROWS_AS(Budgets::from_config_text("weil.ladder_limit = ten"), std::invalid_argument);
  CHECK_THROWS(Budgets::from_config_file("/nonexistent/hodge.cfg"));

  Budgets s;
  s.scale(0.5);
  CHECK(s.node_budget == 500'000);
  CHECK(s.ladder_limit == 5);
  CHECK(s.span_rounds == 10);
  Budgets tiny;
  tiny.scale(1e-9);
  CHECK(tiny.ladder_limit >= 1);

  EnvGuard guard;
  setenv("HODGE_BUDGET_SCALE", "2", 1);
  Budgets e;
  e.apply_environment();
  CHECK(e.node_budget == 2'000'000);
  setenv("HODGE_BUDGET_SCALE", "-1", 1);
  CHECK_THROWS(e.apply_environment());
  setenv("HODGE_BUDGET_SCALE", "abc", 1);
  CHECK_THROWS(e.apply_environment());
}
