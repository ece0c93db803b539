#include "reescm/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>

#include "reescm/rees.hpp"

namespace reescm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Skipped: return "skipped";
    case Verdict::Budget: return "not verified (budget)";
    case Verdict::Cap: return "not verified (cap)";
    case Verdict::Blocked: return "not verified";
  }
  return "?";
}

Json verdict_json(Verdict v) {
  if (v == Verdict::True) return true;
  if (v == Verdict::False) return false;
  return to_string(v);
}

int exit_code_for(const std::vector<Verdict>& verdicts) {
  if (std::find(verdicts.begin(), verdicts.end(), Verdict::False) != verdicts.end()) return kExitRefuted;
  for (auto v : verdicts)
    if (v == Verdict::Budget || v == Verdict::Cap || v == Verdict::Blocked) return kExitResources;
  return kExitVerified;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Monomial> monomials_of(const std::vector<Face>& faces) {
  std::vector<Monomial> out;
  for (Face f : faces) {
    Monomial m;
    for (Face r = f; r; r &= r - 1) m.set(static_cast<std::size_t>(std::countr_zero(r)), 1);
    out.push_back(m);
  }
  return out;
}

Json monomial_list(const std::vector<Monomial>& ms, const Ring& ring, std::size_t limit = 32) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ms.size() && i < limit; ++i) out.push_back(ms[i].to_string(ring));
  return out;
}

// keeps at most `limit` points, always the last
Json trace_json(const std::vector<GbTracePoint>& trace, std::size_t limit = 64) {
  Json out = Json::array();
  if (trace.empty()) return out;
  const std::size_t step = std::max<std::size_t>(1, (trace.size() + limit - 1) / limit);
  for (std::size_t i = 0; i < trace.size(); ++i)
    if (i % step == 0 || i + 1 == trace.size())
      out.push_back({trace[i].pairs_processed, trace[i].zero_reductions, trace[i].basis_size});
  return out;
}

template <class K>
VerifyResult verify_over(const Instance& inst, const VerifyOptions& opts, const K& field) {
  VerifyResult res;
  Json& rep = res.report;
  Json timings = Json::object();
  const auto t_all = Clock::now();
  const RingPtr ring = inst.ring();

  rep["schema"] = 1;
  rep["command"] = "verify";
  rep["instance"] = {{"input", std::vector<int>(inst.input, inst.input + 6)},
                     {"normalized", {inst.m, inst.n, inst.s1, inst.t1, inst.s2, inst.t2}},
                     {"label", inst.label()},
                     {"swapped", inst.swapped}};
  rep["field"] = field.name();
  rep["options"] = {{"max_pairs", opts.budget.max_pairs},
                    {"max_terms", opts.budget.max_terms},
                    {"max_basis", opts.budget.max_basis},
                    {"skip_oracle", opts.skip_oracle},
                    {"vertex_cap", opts.vertex_cap},
                    {"u_literal_second_sum", opts.families.u_literal_second_sum},
                    {"v_sign", opts.families.v_sign},
                    {"h_literal_range", opts.families.h_literal_range}};
  rep["assumption_flags"] = assumption_flags(inst, opts.families);
  rep["notices"] = inst.notices;
  Json stages = Json::object();

  // families
  auto t0 = Clock::now();
  std::vector<Polynomial<K>> basis;
  std::vector<FamilyTag> basis_tags;
  {
    Json st;
    Json counts = Json::object();
    try {
      for (auto tag : kAllTags)
        counts[to_string(tag)] = family_generators<K>(inst, tag, ring, field, opts.families).size();
      for (auto& e : candidate_basis<K>(inst, ring, field, opts.families)) {
        basis.push_back(std::move(e.value));
        basis_tags.push_back(e.tag);
      }
      const MonomialIdeal fam = initial_families(inst, ring);
      bool square_free = true, in_family = true;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& lm = basis[i].lead_monomial();
        square_free = square_free && lm.is_square_free();
        in_family = in_family && fam.contains(lm);
      }
      st["verdict"] = true;
      st["counts"] = counts;
      st["candidate_size"] = basis.size();
      st["square_free_leads"] = square_free;
      st["leads_in_families"] = in_family;
    } catch (const std::exception& e) {
      st["verdict"] = to_string(Verdict::Blocked);
      st["error"] = e.what();
    }
    stages["family_counts"] = st;
  }
  timings["families"] = seconds_since(t0);

  // oracle membership
  t0 = Clock::now();
  Verdict membership = Verdict::Skipped;
  std::optional<MonomialIdeal> oracle_initial;
  {
    Json st;
    if (opts.skip_oracle) {
      st["verdict"] = to_string(Verdict::Skipped);
    } else if (basis.empty()) {
      membership = Verdict::Blocked;
      st["verdict"] = to_string(membership);
      st["error"] = "no candidate basis";
    } else {
      GbStats stats;
      try {
        auto K_ideal = rees_ideal_oracle(inst, ring, field, opts.budget, &stats);
        const auto& gb = K_ideal.groebner_basis(TermOrder::BlockLex);
        std::size_t members = 0;
        Json non_members = Json::array();
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (reduce(basis[i], gb, TermOrder::BlockLex, opts.budget.max_terms).is_zero())
            ++members;
          else if (non_members.size() < 16)
            non_members.push_back({{"family", to_string(basis_tags[i])},
                                   {"lead", basis[i].lead_monomial().to_string(*ring)}});
        }
        membership = members == basis.size() ? Verdict::True : Verdict::False;
        st["verdict"] = verdict_json(membership);
        st["checked"] = basis.size();
        st["members"] = members;
        st["non_members"] = non_members;
        if (!gb.empty()) oracle_initial = initial_ideal(gb);
      } catch (const BudgetExceeded& e) {
        membership = Verdict::Budget;
        st["verdict"] = to_string(membership);
        st["error"] = e.what();
      }
      st["oracle_log"] = {{"pairs_processed", stats.pairs_processed},
                          {"zero_reductions", stats.zero_reductions},
                          {"basis_size", stats.trace.empty() ? 0 : stats.trace.back().basis_size},
                          {"trace", trace_json(stats.trace)}};
    }
    stages["gb_membership"] = st;
  }
  timings["gb_membership"] = seconds_since(t0);

  // Buchberger criterion on the candidate
  t0 = Clock::now();
  Verdict buchberger_ok = Verdict::Blocked;
  {
    Json st;
    if (basis.empty()) {
      st["verdict"] = to_string(buchberger_ok);
      st["error"] = "no candidate basis";
    } else {
      try {
        auto cert = is_groebner_basis(basis, TermOrder::BlockLex, opts.jobs, 8, opts.budget.max_terms,
                                      opts.budget.max_pairs);
        buchberger_ok = cert.is_basis ? Verdict::True : Verdict::False;
        st["verdict"] = verdict_json(buchberger_ok);
        st["log"] = {{"pairs_processed", cert.pairs_checked},
                     {"zero_reductions", cert.pairs_checked - cert.failure_count},
                     {"basis_size", basis.size()},
                     {"skipped_coprime", cert.pairs_skipped_coprime}};
        Json fails = Json::array();
        for (const auto& f : cert.failures)
          fails.push_back({{"pair", {to_string(basis_tags[f.i]), to_string(basis_tags[f.j])}},
                           {"remainder_lead", f.remainder.lead_monomial().to_string(*ring)}});
        st["failures"] = fails;
      } catch (const BudgetExceeded& e) {
        buchberger_ok = Verdict::Budget;
        st["verdict"] = to_string(buchberger_ok);
        st["error"] = e.what();
      }
    }
    stages["buchberger_ok"] = st;
  }
  timings["buchberger"] = seconds_since(t0);

  // in(G) vs the families
  t0 = Clock::now();
  Verdict match = Verdict::Blocked;
  const MonomialIdeal fam = initial_families(inst, ring);
  {
    Json st;
    if (basis.empty()) {
      st["verdict"] = to_string(match);
    } else {
      const MonomialIdeal inG = initial_ideal(basis);
      match = inG == fam ? Verdict::True : Verdict::False;
      std::vector<Monomial> missing, extra;
      for (const auto& g : fam.generators())
        if (std::find(inG.generators().begin(), inG.generators().end(), g) == inG.generators().end())
          missing.push_back(g);
      for (const auto& g : inG.generators())
        if (std::find(fam.generators().begin(), fam.generators().end(), g) == fam.generators().end())
          extra.push_back(g);
      st["verdict"] = verdict_json(match);
      st["in_G_size"] = inG.size();
      st["families_size"] = fam.size();
      Json per = Json::object();
      for (int k = 1; k <= 13; ++k) per[family_name(k)] = initial_family(inst, k, ring).size();
      st["family_sizes"] = per;
      st["only_in_families"] = monomial_list(missing, *ring);
      st["only_in_G"] = monomial_list(extra, *ring);
      if (oracle_initial) st["families_equal_oracle"] = *oracle_initial == fam;
    }
    stages["initial_ideal_match"] = st;
  }
  timings["initial_ideal"] = seconds_since(t0);

  // dual, regularity, CM
  t0 = Clock::now();
  Verdict degree_ok = Verdict::Blocked, reg_ok = Verdict::Blocked, linear = Verdict::Blocked;
  Verdict er = Verdict::Blocked, reisner = Verdict::Blocked;
  SquarefreeOptions sq;
  sq.field.characteristic = opts.characteristic;
  sq.vertex_cap = opts.vertex_cap;
  sq.jobs = opts.jobs;
  {
    const int stated = inst.dual_degree();
    const int variant = inst.dual_degree_variant();
    Json deg, regj, lin, erj, rj;
    deg["expected"] = stated;
    deg["variant"] = variant;
    regj["expected"] = stated;
    try {
      const auto gens = supports(fam);
      Face used = 0;
      for (Face g : gens) used |= g;
      if (static_cast<std::size_t>(std::popcount(used)) > opts.vertex_cap)
        throw VertexCapExceeded(static_cast<std::size_t>(std::popcount(used)), opts.vertex_cap);
      const auto dual = minimal_transversals(gens);
      std::set<int> degrees;
      for (Face d : dual) degrees.insert(std::popcount(d));
      degree_ok = degrees.size() == 1 && *degrees.begin() == stated ? Verdict::True : Verdict::False;
      deg["verdict"] = verdict_json(degree_ok);
      deg["degrees"] = std::vector<int>(degrees.begin(), degrees.end());
      deg["generators"] = dual.size();
      deg["vertices"] = std::popcount(used);
      deg["matches_stated"] = degrees.size() == 1 && *degrees.begin() == stated;
      deg["matches_variant"] = degrees.size() == 1 && *degrees.begin() == variant;

      const auto t_betti = Clock::now();
      const BettiTable table = betti_numbers(dual, sq);
      timings["dual_betti"] = seconds_since(t_betti);
      const int reg = table.regularity();
      reg_ok = reg == stated ? Verdict::True : Verdict::False;
      regj["verdict"] = verdict_json(reg_ok);
      regj["value"] = reg;
      regj["matches_variant"] = reg == variant;
      regj["betti"] = betti_json(table)["betti"];
      linear = has_linear_resolution(table) ? Verdict::True : Verdict::False;
      lin["verdict"] = verdict_json(linear);
      er = linear;
      erj["verdict"] = verdict_json(er);
      erj["field"] = table.field;

      const auto t_reisner = Clock::now();
      reisner = reisner_cm(gens, sq) ? Verdict::True : Verdict::False;
      timings["reisner"] = seconds_since(t_reisner);
      rj["verdict"] = verdict_json(reisner);
      rj["field"] = table.field;
      rj["agrees_with_eagon_reiner"] = er == reisner;
    } catch (const std::exception& e) {
      // vertex or lattice cap
      for (Verdict* v : {&degree_ok, &reg_ok, &linear, &er, &reisner})
        if (*v == Verdict::Blocked) *v = Verdict::Cap;
      for (auto* j : {&deg, &regj, &lin, &erj, &rj})
        if (!j->contains("verdict")) {
          (*j)["verdict"] = to_string(Verdict::Cap);
          (*j)["error"] = e.what();
        }
    }
    stages["dual_degree"] = deg;
    stages["dual_regularity"] = regj;
    stages["dual_linear"] = lin;
    stages["eagon_reiner_cm"] = erj;
    stages["reisner_cm"] = rj;
  }
  timings["dual"] = seconds_since(t0);

  // the chain: in(K) = in(G) CM by Eagon-Reiner, hence K CM
  Verdict final = Verdict::True;
  std::vector<std::string> blocked;
  for (auto [name, v] : {std::pair<const char*, Verdict>{"buchberger_ok", buchberger_ok},
                         {"initial_ideal_match", match},
                         {"dual_linear", linear}}) {
    if (v == Verdict::True) continue;
    blocked.push_back(name);
    if (final == Verdict::True)
      final = v == Verdict::Budget ? Verdict::Budget : v == Verdict::Cap ? Verdict::Cap : Verdict::Blocked;
  }
  if (membership == Verdict::False) {
    blocked.push_back("gb_membership");
    if (final == Verdict::True) final = Verdict::Blocked;
  }
  Json fin;
  fin["verdict"] = verdict_json(final);
  if (final == Verdict::True)
    fin["conclusion"] =
        "G is a Groebner basis with in(G) = in(K); the dual of in(K) has a linear resolution, so "
        "in(K) is Cohen-Macaulay (Eagon-Reiner) and therefore K is Cohen-Macaulay";
  else
    fin["failed_prerequisites"] = blocked;
  stages["final_cm_verdict"] = fin;
  res.final_verdict = final;

  rep["stages"] = stages;
  std::vector<Verdict> all{buchberger_ok, match, degree_ok, reg_ok, linear, er, reisner};
  if (membership != Verdict::Skipped) all.push_back(membership);
  if (er != reisner && er != Verdict::Cap) all.push_back(Verdict::False);
  res.exit_code = exit_code_for(all);
  rep["exit_code"] = res.exit_code;
  timings["total"] = seconds_since(t_all);
  timings["jobs"] = opts.jobs;
  rep["timings"] = timings;
  return res;
}

}  // namespace

VerifyResult run_verify(const Instance& inst, const VerifyOptions& opts) {
  if (opts.characteristic == 0) return verify_over(inst, opts, Rationals{});
  return verify_over(inst, opts, PrimeField(opts.characteristic));
}

MonomialIdeal dual_of_initial_ideal(const Instance& inst, const RingPtr& ring) {
  return alexander_dual(initial_families(inst, ring));
}

std::vector<Face> intersect_supports(const std::vector<Face>& a, const std::vector<Face>& b) {
  std::vector<Face> out;
  out.reserve(a.size() * b.size());
  for (Face x : a)
    for (Face y : b) out.push_back(x | y);
  return minimal_sets(std::move(out));
}

MonomialIdeal dual_by_components(const Instance& inst, const RingPtr& ring) {
  std::optional<std::vector<Face>> acc;
  for (int k = 1; k <= 13; ++k) {
    auto fam = initial_family(inst, k, ring);
    if (fam.empty()) continue;
    auto d = minimal_transversals(supports(MonomialIdeal(ring, fam)));
    acc = acc ? intersect_supports(*acc, d) : d;
  }
  if (!acc) throw std::invalid_argument("no nonempty family");
  return MonomialIdeal(ring, monomials_of(*acc));
}

StaircaseResult run_staircase(int m, int n, int l, const SquarefreeOptions& opts) {
  StaircaseResult r{m, n, l};
  const RingPtr ring = make_ring(m, n, false);
  const auto I = staircase_ideal(ring, m, n, l);
  const auto D = alexander_dual(I);
  const auto C = staircase_dual_closed_form(ring, m, n, l);
  r.equal = D == C;
  r.generators = D.size();
  const auto table = betti_numbers(D, opts);
  r.linear = has_linear_resolution(table);
  r.regularity = table.regularity();
  r.expected = n - (m - 2);
  return r;
}

Json staircase_json(const StaircaseResult& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"l", r.l},
          {"closed_form_equals_dual", r.equal},
          {"dual_generators", r.generators},
          {"regularity", r.regularity},
          {"expected_regularity", r.expected},
          {"linear", r.linear},
          {"ok", r.ok()}};
}

std::vector<std::vector<Face>> random_squarefree_ideals(const RandomSuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<std::vector<Face>> out;
  for (std::size_t c = 0; c < opts.count; ++c) {
    const int nv = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_vars));
    const Face all = (Face{1} << nv) - 1;
    const int k = 1 + static_cast<int>(rng() % 7);
    // per-ideal density so both sparse and dense generators show up
    const int density = 1 + static_cast<int>(rng() % 3);
    std::vector<Face> gens;
    for (int g = 0; g < k; ++g) {
      Face f = 0;
      while (f == 0) {
        f = rng() & all;
        for (int d = 1; d < density; ++d) f &= rng() | rng();
        f &= all;
      }
      gens.push_back(f);
    }
    out.push_back(minimal_sets(gens));
  }
  return out;
}

namespace {

std::vector<Face> brute_force_dual(const std::vector<Face>& gens) {
  Face V = 0;
  for (Face g : gens) V |= g;
  std::vector<Face> hits;
  for (Face T = V;; T = (T - 1) & V) {
    if (std::all_of(gens.begin(), gens.end(), [&](Face g) { return (g & T) != 0; })) hits.push_back(T);
    if (T == 0) break;
  }
  return minimal_sets(hits);
}

std::string faces_text(const std::vector<Face>& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

}  // namespace

RandomSuiteResult run_random_suite(const RandomSuiteOptions& opts) {
  RandomSuiteResult r;
  SquarefreeOptions qq;
  qq.jobs = opts.jobs;
  SquarefreeOptions fp = qq;
  fp.field.characteristic = opts.prime;
  for (const auto& I : random_squarefree_ideals(opts)) {
    ++r.cases;
    const auto D = minimal_transversals(I);
    auto note = [&](const std::string& what) {
      if (r.failures.size() < 32) r.failures.push_back(what + " " + faces_text(I));
    };
    if (minimal_transversals(D) != I) {
      ++r.involution_fail;
      note("involution");
    }
    if (brute_force_dual(I) != D) {
      ++r.transversal_fail;
      note("transversals");
    }
    const auto bI = betti_numbers(I, qq);
    const auto bD = betti_numbers(D, qq);
    if (bD.regularity() != bI.projdim() + 1) {
      ++r.terai_fail;
      note("terai");
    }
    const bool er = has_linear_resolution(bD);
    const bool rs = reisner_cm(I, qq);
    if (er != rs) {
      ++r.er_reisner_fail;
      note("er_vs_reisner");
    }
    if (er) ++r.cm_count;
    if (betti_numbers(I, fp).entries != bI.entries) {
      ++r.field_disagree;
      note("field");
    }
  }
  return r;
}

Json random_suite_json(const RandomSuiteResult& r, const RandomSuiteOptions& opts) {
  return {{"schema", 1},
          {"command", "random-suite"},
          {"seed", opts.seed},
          {"count", opts.count},
          {"max_vars", opts.max_vars},
          {"prime", opts.prime},
          {"cases", r.cases},
          {"cohen_macaulay", r.cm_count},
          {"involution_failures", r.involution_fail},
          {"transversal_failures", r.transversal_fail},
          {"terai_failures", r.terai_fail},
          {"er_reisner_disagreements", r.er_reisner_fail},
          {"field_disagreements", r.field_disagree},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

Json betti_json(const BettiTable& t) {
  Json rows = Json::array();
  for (const auto& e : t.list()) rows.push_back({{"i", e.i}, {"j", e.j}, {"rank", e.rank}});
  return {{"schema", 1},
          {"field", t.field},
          {"betti", rows},
          {"regularity", t.regularity()},
          {"projdim", t.projdim()},
          {"linear", has_linear_resolution(t)}};
}

RingPtr ring_for_text(const std::string& text) {
  static const std::regex var(R"(([xyz])\s*\[\s*(\d+)\s*,\s*(\d+)\s*\])");
  static const std::regex aux(R"((^|[^A-Za-z_])t([^A-Za-z_\[]|$))");
  int m = 1, n = 1;
  for (std::sregex_iterator it(text.begin(), text.end(), var), end; it != end; ++it) {
    m = std::max(m, std::stoi((*it)[2]));
    n = std::max(n, std::stoi((*it)[3]));
  }
  return make_ring(m, n, std::regex_search(text, aux));
}

namespace {
const char* const kInitialTags[] = {"",   "hX", "hY",    "hg", "hf",    "hU", "hW",
                                    "hW_pv", "hV", "hV_kw", "hH", "hI", "hI_kw", "hE"};
}

int parse_initial_family(const std::string& name) {
  for (int k = 1; k <= 13; ++k)
    if (name == kInitialTags[k]) return k;
  return 0;
}

std::string initial_family_tag(int number) {
  if (number < 1 || number > 13) throw std::out_of_range("family number out of range");
  return kInitialTags[number];
}

}  // namespace reescm
