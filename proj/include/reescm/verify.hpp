#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "reescm/families.hpp"
#include "reescm/groebner.hpp"
#include "reescm/instance.hpp"
#include "reescm/squarefree.hpp"

namespace reescm {

using Json = nlohmann::ordered_json;

// Stage verdicts. Budget and Cap are resource failures, Refuted is a
// mathematical counterexample, Blocked means a prerequisite did not hold.
enum class Verdict { True, False, Skipped, Budget, Cap, Blocked };

std::string to_string(Verdict v);
Json verdict_json(Verdict v);

enum ExitCode { kExitVerified = 0, kExitRefuted = 2, kExitResources = 3 };

// Exit code for a list of verdicts: any False wins, then any resource
// failure, otherwise 0.
int exit_code_for(const std::vector<Verdict>& verdicts);

struct VerifyOptions {
  std::uint32_t characteristic = 0;  // 0 = QQ
  Budget budget;
  bool skip_oracle = false;
  unsigned jobs = 1;
  std::size_t vertex_cap = 24;
  FamilyOptions families;
};

struct VerifyResult {
  Json report;  // "timings" holds the only non-deterministic values
  int exit_code = 0;
  Verdict final_verdict = Verdict::Blocked;
};

VerifyResult run_verify(const Instance& inst, const VerifyOptions& opts);

// in(K) as given by the families, and its Alexander dual.
MonomialIdeal dual_of_initial_ideal(const Instance& inst, const RingPtr& ring);
// Intersection of the duals of the nonempty families, one at a time.
MonomialIdeal dual_by_components(const Instance& inst, const RingPtr& ring);

// Square-free intersection: minimal unions.
std::vector<Face> intersect_supports(const std::vector<Face>& a, const std::vector<Face>& b);

// One staircase case: closed-form dual vs transversal dual, regularity and
// linearity.
struct StaircaseResult {
  int m, n, l;
  bool equal = false;
  bool linear = false;
  int regularity = 0;
  int expected = 0;
  std::size_t generators = 0;
  bool ok() const { return equal && linear && regularity == expected; }
};
StaircaseResult run_staircase(int m, int n, int l, const SquarefreeOptions& opts = {});
Json staircase_json(const StaircaseResult& r);

// Random square-free ideals: involution, transversals vs brute force,
// Terai, ER vs Reisner, QQ vs GF(p) Betti tables.
struct RandomSuiteOptions {
  std::size_t count = 200;
  int max_vars = 8;
  std::uint64_t seed = 20240601;
  std::uint32_t prime = 101;
  unsigned jobs = 1;
};
struct RandomSuiteResult {
  std::size_t cases = 0;
  std::size_t involution_fail = 0;
  std::size_t transversal_fail = 0;
  std::size_t terai_fail = 0;
  std::size_t er_reisner_fail = 0;
  std::size_t field_disagree = 0;
  std::size_t cm_count = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return involution_fail + transversal_fail + terai_fail + er_reisner_fail + field_disagree == 0;
  }
};
std::vector<std::vector<Face>> random_squarefree_ideals(const RandomSuiteOptions& opts);
RandomSuiteResult run_random_suite(const RandomSuiteOptions& opts);
Json random_suite_json(const RandomSuiteResult& r, const RandomSuiteOptions& opts);

Json betti_json(const BettiTable& t);

// Smallest ring whose variables cover every x[i,j], y[i,j], z[i,j] in text.
RingPtr ring_for_text(const std::string& text);

// h-family names for dump: hX, hY, hg, hf, hU, hW, hW_pv, hV, hV_kw, hH,
// hI, hI_kw, hE; returns 1..13 or 0.
int parse_initial_family(const std::string& name);
std::string initial_family_tag(int number);

}  // namespace reescm
