#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reescm/verify.hpp"

using namespace reescm;

namespace {
Json without_timings(Json j) {
  j.erase("timings");
  return j;
}

const Json& stage(const VerifyResult& r, const char* name) { return r.report["stages"][name]; }
}  // namespace

TEST_CASE("report on (2,2,2,2,2,2)") {
  auto inst = build_instance(2, 2, 2, 2, 2, 2);
  auto res = run_verify(inst, {});
  CHECK(res.exit_code == 0);
  CHECK(res.report["schema"] == 1);
  CHECK(res.report["field"] == "QQ");
  CHECK(stage(res, "final_cm_verdict")["verdict"] == true);
  CHECK(stage(res, "gb_membership")["verdict"] == true);
  CHECK(stage(res, "buchberger_ok")["verdict"] == true);
  CHECK(stage(res, "initial_ideal_match")["verdict"] == true);
  CHECK(stage(res, "dual_degree")["degrees"] == Json::array({5}));
  CHECK(stage(res, "dual_regularity")["value"] == 5);
  CHECK(stage(res, "eagon_reiner_cm")["verdict"] == true);
  CHECK(stage(res, "reisner_cm")["verdict"] == true);
  const auto& log = stage(res, "buchberger_ok")["log"];
  CHECK(log.contains("pairs_processed"));
  CHECK(log.contains("zero_reductions"));
  CHECK(log.contains("basis_size"));
  CHECK(stage(res, "gb_membership")["oracle_log"]["trace"].size() > 0);
  // flags verbatim
  Json flags = assumption_flags(inst, {});
  CHECK(res.report["assumption_flags"] == flags);
}

TEST_CASE("dual degree and the variant expression") {
  auto res = run_verify(build_instance(2, 3, 2, 2, 2, 2), {});
  const auto& d = stage(res, "dual_degree");
  // 6 - 1 + 2 - 1 + 2 - 1
  CHECK(d["expected"] == 7);
  CHECK(d["degrees"] == Json::array({7}));
  CHECK(d["matches_stated"] == true);
  // 1 + 2*2 - 1 + 2 - 1
  CHECK(d["variant"] == 5);
  CHECK(d["matches_variant"] == false);
  CHECK(stage(res, "dual_regularity")["value"] == 7);
  CHECK(res.exit_code == 0);
}

TEST_CASE("forced budget exhaustion") {
  VerifyOptions o;
  o.budget.max_pairs = 1;
  auto res = run_verify(build_instance(2, 2, 2, 2, 2, 2), o);
  CHECK(stage(res, "buchberger_ok")["verdict"] == "not verified (budget)");
  CHECK(stage(res, "final_cm_verdict")["verdict"] == "not verified (budget)");
  CHECK(res.exit_code == 3);
  CHECK(res.final_verdict == Verdict::Budget);
}

TEST_CASE("skipping the oracle") {
  VerifyOptions o;
  o.skip_oracle = true;
  auto res = run_verify(build_instance(2, 3, 2, 3, 2, 2), o);
  CHECK(stage(res, "gb_membership")["verdict"] == "skipped");
  CHECK(stage(res, "final_cm_verdict")["verdict"] == true);
  CHECK(res.report["instance"]["swapped"] == true);
  CHECK(res.report["notices"].size() >= 1);
  CHECK(res.exit_code == 0);
}

TEST_CASE("reports are deterministic apart from timings") {
  auto inst = build_instance(2, 3, 2, 2, 2, 3);
  VerifyOptions a, b;
  b.jobs = 3;
  auto ra = run_verify(inst, a), rb = run_verify(inst, b), rc = run_verify(inst, a);
  CHECK(without_timings(ra.report).dump() == without_timings(rc.report).dump());
  CHECK(without_timings(ra.report).dump() == without_timings(rb.report).dump());
}

TEST_CASE("prime field run") {
  VerifyOptions o;
  o.characteristic = 32003;
  auto res = run_verify(build_instance(2, 3, 2, 2, 2, 2), o);
  CHECK(res.report["field"] == "GF(32003)");
  CHECK(stage(res, "final_cm_verdict")["verdict"] == true);
  CHECK(stage(res, "reisner_cm")["field"] == "GF(32003)");
}

TEST_CASE("unsettled regime is never reported as false") {
  VerifyOptions o;
  o.characteristic = 32003;
  auto res = run_verify(build_instance(3, 3, 3, 3, 3, 3), o);
  CHECK(stage(res, "gb_membership")["verdict"] == true);
  CHECK(stage(res, "buchberger_ok")["verdict"] == false);
  CHECK(stage(res, "final_cm_verdict")["verdict"] == "not verified");
  CHECK(res.exit_code == 2);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for({Verdict::True, Verdict::True}) == 0);
  CHECK(exit_code_for({Verdict::True, Verdict::Budget}) == 3);
  CHECK(exit_code_for({Verdict::Cap, Verdict::False}) == 2);
  CHECK(exit_code_for({}) == 0);
}

TEST_CASE("family dumps re-parse") {
  auto inst = build_instance(2, 3, 2, 3, 2, 3);
  auto r = inst.ring();
  for (auto tag : kAllTags)
    for (const auto& e : family_generators<Rationals>(inst, tag, r))
      CHECK(parse_polynomial<Rationals>(e.value.to_string(), r) == e.value);
  auto in = initial_families(inst, r);
  CHECK(parse_monomial_ideal(in.to_string(), ring_for_text(in.to_string())).to_string() == in.to_string());
  for (int k = 1; k <= 13; ++k) CHECK(parse_initial_family(initial_family_tag(k)) == k);
  CHECK(parse_initial_family("nope") == 0);
}

TEST_CASE("dual of the initial ideal") {
  for (auto v : std::vector<std::array<int, 6>>{{2, 2, 2, 2, 2, 2}, {2, 3, 2, 2, 2, 2}}) {
    auto inst = build_instance(v[0], v[1], v[2], v[3], v[4], v[5]);
    auto r = inst.ring();
    auto D = dual_of_initial_ideal(inst, r);
    const unsigned expect = static_cast<unsigned>(v[0] * v[1] - 1 + v[3] - (v[2] - 1) + v[5] - (v[4] - 1));
    for (const auto& g : D.generators()) CHECK(g.degree() == expect);
    CHECK(alexander_dual(D) == initial_families(inst, r));
    CHECK(dual_by_components(inst, r) == D);
  }
}

TEST_CASE("random suite") {
  RandomSuiteOptions o;
  o.count = 50;
  auto a = run_random_suite(o);
  CHECK(a.ok());
  CHECK(a.cases == 50);
  CHECK(random_squarefree_ideals(o) == random_squarefree_ideals(o));
  o.seed += 1;
  CHECK(random_squarefree_ideals(o) != random_squarefree_ideals(RandomSuiteOptions{50}));
}

TEST_CASE("ring for exchanged text") {
  auto r = ring_for_text("x[1,3]*y[2,1]\nz[1,1]");
  CHECK(r->rows() == 2);
  CHECK(r->cols() == 3);
  CHECK_FALSE(r->has_aux());
  CHECK(ring_for_text("t*x[1,1]")->has_aux());
}

TEST_CASE("betti json rows") {
  auto t = betti_numbers(std::vector<Face>{1, 2});
  auto j = betti_json(t);
  CHECK(j["betti"] == Json::parse(R"([{"i":0,"j":1,"rank":2},{"i":1,"j":2,"rank":1}])"));
  CHECK(j["regularity"] == 1);
}
