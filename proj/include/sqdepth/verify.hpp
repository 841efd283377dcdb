#ifndef SQDEPTH_VERIFY_HPP
#define SQDEPTH_VERIFY_HPP

#include <string>
#include <vector>

#include "sqdepth/exactrank.hpp"
#include "sqdepth/sdepth.hpp"

namespace sqd {

enum class ClaimStatus { pass, fail, skipped };

struct ClaimCheck {
  std::string claim_id;
  int n = 0;
  int k = 0;
  int i = -1;  // -1 when the claim has no i parameter
  std::string expected;
  std::string observed;
  ClaimStatus status = ClaimStatus::skipped;
  std::string reason;  // populated for skipped checks
};

struct VerifyOptions {
  int n_max_depth = 12;   // depth grids
  int n_max_sdepth = 10;  // quotient sdepth grids
  int n_max_ideal = 9;    // ideal/pair sdepth grids (the binding cost)
  int n_max_lemma = 14;   // structural lemmas and witnesses
  int k_max = 4;
  FieldChoice field = FieldChoice::q();
  std::size_t poset_cap = kDefaultPosetCap;
  std::vector<std::string> claims;  // empty = run everything
};

// Closed forms and bounds for S/I(P_n^k) on the (n, k) grid.
std::vector<ClaimCheck> verify_path_theorems(const VerifyOptions& opt);
// Congruence-case equalities and two-sided bounds for S/I(C_n^k).
std::vector<ClaimCheck> verify_cycle_results(const VerifyOptions& opt);
// Lower bounds for sdepth of I(P), I(C), the pair I(C)/I(P), and the
// sdepth(I) >= sdepth(S/I) comparison on both families.
std::vector<ClaimCheck> verify_ideal_bounds(const VerifyOptions& opt);
// Quotient/colon ideal identities and renumbering isomorphisms, checked at
// the level of minimal generating sets.
std::vector<ClaimCheck> verify_structural_lemmas(const VerifyOptions& opt);
// The explicit witness monomials are maximal independent sets of the
// predicted size, and the exhaustive MMIS value matches.
std::vector<ClaimCheck> witness_upper_bounds(const VerifyOptions& opt);

// All of the above, filtered by opt.claims and sorted canonically by
// (claim_id, n, k, i).
std::vector<ClaimCheck> run_verifier(const VerifyOptions& opt);

bool all_pass(const std::vector<ClaimCheck>& checks);

std::string report_json(const std::vector<ClaimCheck>& checks);
std::string report_csv(const std::vector<ClaimCheck>& checks);
std::string report_table(const std::vector<ClaimCheck>& checks);

}  // namespace sqd

#endif
