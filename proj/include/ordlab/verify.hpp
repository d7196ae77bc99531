#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ordlab {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct VerifyOptions {
  std::map<std::string, std::string> params;
  std::uint64_t seed = kDefaultSeed;
};

enum class Verdict { Pass, Fail, Skipped };

struct VerifyReport {
  std::string lemma_id;
  std::vector<std::pair<std::string, std::string>> params;  // resolved values
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t instances = 0;  // checked instances
  std::uint64_t filtered = 0;   // hypothesis-vacuous or budget-skipped instances
  Verdict verdict = Verdict::Pass;
  std::string counterexample;   // replayable description on Fail
  std::string reason;           // on Skipped
};

// Brute-force lemma verification.  Known ids:
//   fund-below    psn(a) < n implies a < b[n]
//   fund-reach    psn(a) < n implies b =>_n a
//   count-nmk     enumeration count equals the closed-form tower
//   hardy-mono    h_a increasing; h monotone along =>_b descents
//   hardy-tower   h_{w^2*2am}(x) >= m-fold tow_a(x+1)
//   natsum-split  exactly (b(+)a)-large sets split at h^A_a(min A)
//   go-max        GO(a, alpha) dominates every candidate below alpha
//   psn-F         psn(F(alpha)) against the tower bound
//   psn-F-go      the same bound through GO
//   estimation    decreasing psn-bounded labellings force F(alpha)-smallness
//   l3-cases      estimating functions for L3 colors 1/2, cardinality for 0
//   lk-hom        L_k recursion coherence under the G projection
//   ks-psn        psn(KS^A(mu;a)) <= a, and KS/Hardy consistency
//   rk-mech       R_k homogeneity transfers to the KS-image set
//   selfcheck-fail deliberately false claim; exercises counterexample output
VerifyReport verify(const std::string& lemma_id, const VerifyOptions& opts = {});

std::vector<std::string> verify_lemma_ids();

// One line, tab-separated: report <lemma> <instances> <key=value ...>
std::string serialize(const VerifyReport& report);

}  // namespace ordlab
