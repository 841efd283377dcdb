#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sqdepth/verify.hpp"

using namespace sqd;

namespace {

VerifyOptions small_options() {
  VerifyOptions opt;
  opt.n_max_depth = 8;
  opt.n_max_sdepth = 7;
  opt.n_max_ideal = 6;
  opt.n_max_lemma = 10;
  opt.k_max = 2;
  return opt;
}

const ClaimCheck* find(const std::vector<ClaimCheck>& checks, const std::string& id,
                       int n, int k, int i = -1) {
  for (const auto& c : checks)
    if (c.claim_id == id && c.n == n && c.k == k && c.i == i) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("the closed-form depth values pass on a small grid") {
  auto checks = verify_path_theorems(small_options());
  CHECK(all_pass(checks));
  const auto* c = find(checks, "path-depth", 7, 1);
  REQUIRE(c != nullptr);
  CHECK(c->expected == "=3");
  CHECK(c->observed == "3");
  const auto* d = find(checks, "path-depth", 6, 2);
  REQUIRE(d != nullptr);
  CHECK(d->observed == "2");
  const auto* s = find(checks, "path-sdepth", 5, 2);
  REQUIRE(s != nullptr);
  CHECK(s->observed == "1");
}

TEST_CASE("cycle claims: equality cases and open windows") {
  auto checks = verify_cycle_results(small_options());
  CHECK(all_pass(checks));
  const auto* eq = find(checks, "cycle-depth", 8, 2);  // 8 mod 5 = 3 >= k+1
  REQUIRE(eq != nullptr);
  CHECK(eq->expected == "=2");
  const auto* window = find(checks, "cycle-depth", 7, 2);  // 7 mod 5 = 2: open case
  REQUIRE(window != nullptr);
  CHECK(window->expected == "[1,2]");
  const auto* complete = find(checks, "cycle-depth", 5, 2);  // n <= 2k+1
  REQUIRE(complete != nullptr);
  CHECK(complete->expected == "=1");
}

TEST_CASE("ideal and pair bounds hold on a small grid") {
  auto checks = verify_ideal_bounds(small_options());
  CHECK(all_pass(checks));
  const auto* p = find(checks, "ideal-sdepth-path", 6, 1);
  REQUIRE(p != nullptr);
  CHECK(p->expected == ">=3");
  const auto* h = find(checks, "herzog-path", 6, 1);
  REQUIRE(h != nullptr);
  CHECK(h->observed == "true");
  const auto* pair = find(checks, "pair-sdepth", 5, 2);
  REQUIRE(pair != nullptr);
  CHECK(pair->expected == ">=2");
}

TEST_CASE("structural lemmas hold and carry the i parameter") {
  auto checks = verify_structural_lemmas(small_options());
  CHECK(all_pass(checks));
  CHECK(find(checks, "lemma-path-quotient-A", 9, 2) != nullptr);
  CHECK(find(checks, "lemma-path-colon", 9, 2, 0) != nullptr);
  CHECK(find(checks, "lemma-path-colon", 9, 2, 1) != nullptr);
  CHECK(find(checks, "lemma-path-colon-veronese", 6, 2) != nullptr);
  CHECK(find(checks, "lemma-path-colon-f", 7, 2, 1) != nullptr);
  CHECK(find(checks, "lemma-cycle-quotient-A", 8, 2) != nullptr);
  CHECK(find(checks, "lemma-cycle-colon-window", 8, 2, 0) != nullptr);
  // k = 1 has no structural claims.
  for (const auto& c : checks) CHECK(c.k >= 2);
}

TEST_CASE("witness monomials achieve the minimum in every congruence class") {
  auto checks = witness_upper_bounds(small_options());
  CHECK(all_pass(checks));
  const auto* w = find(checks, "witness-mis", 10, 2);  // 10 mod 5 = 0
  REQUIRE(w != nullptr);
  const auto* m = find(checks, "mmis-path", 7, 1);
  REQUIRE(m != nullptr);
  CHECK(m->observed == "3");
}

TEST_CASE("run_verifier filters and sorts canonically") {
  auto opt = small_options();
  opt.claims = {"path-depth", "mmis-path"};
  auto checks = run_verifier(opt);
  CHECK(!checks.empty());
  for (const auto& c : checks)
    CHECK((c.claim_id == "path-depth" || c.claim_id == "mmis-path"));
  CHECK(std::is_sorted(checks.begin(), checks.end(),
                       [](const ClaimCheck& a, const ClaimCheck& b) {
                         return std::tie(a.claim_id, a.n, a.k, a.i) <
                                std::tie(b.claim_id, b.n, b.k, b.i);
                       }));
  CHECK(all_pass(checks));
}

TEST_CASE("a tight poset cap turns sdepth claims into skips, not failures") {
  auto opt = small_options();
  opt.poset_cap = 32;  // allows n <= 5 only
  opt.claims = {"path-sdepth"};
  auto checks = run_verifier(opt);
  CHECK(all_pass(checks));
  bool saw_skip = false;
  for (const auto& c : checks)
    if (c.status == ClaimStatus::skipped) {
      saw_skip = true;
      CHECK(c.reason == "poset cap exceeded");
    }
  CHECK(saw_skip);
}

TEST_CASE("reports are deterministic and well formed") {
  auto opt = small_options();
  opt.claims = {"path-depth"};
  auto checks = run_verifier(opt);
  CHECK(report_json(checks) == report_json(checks));
  CHECK(report_json(run_verifier(opt)) == report_json(checks));

  auto csv = report_csv(checks);
  CHECK(csv.rfind("claim_id,n,k,i,expected,observed,status\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(checks.size()) + 1);

  auto table = report_table(checks);
  CHECK(table.find("== path-depth ==") != std::string::npos);
}

TEST_CASE("all_pass tolerates skips but not failures") {
  ClaimCheck skip;
  skip.status = ClaimStatus::skipped;
  ClaimCheck fail;
  fail.status = ClaimStatus::fail;
  CHECK(all_pass({skip}));
  CHECK_FALSE(all_pass({skip, fail}));
  CHECK(all_pass({}));
}
