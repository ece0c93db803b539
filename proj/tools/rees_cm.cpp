// rees-cm: verification driver.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "reescm/families.hpp"
#include "reescm/instance.hpp"
#include "reescm/squarefree.hpp"
#include "reescm/verify.hpp"

using namespace reescm;

namespace {

struct Common {
  std::vector<int> instance{2, 2, 2, 2, 2, 2};
  std::string field = "QQ";
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  std::string output;
  int v_sign = -1;
  bool h_literal = false;
  bool u_literal = false;
  std::size_t vertex_cap = 24;
};

std::uint32_t parse_field(const std::string& f) {
  if (f == "QQ" || f == "Q" || f == "0") return 0;
  std::string digits = f;
  if (f.rfind("GF(", 0) == 0 && f.back() == ')') digits = f.substr(3, f.size() - 4);
  const auto p = static_cast<std::uint32_t>(std::stoul(digits));
  PrimeField check(p);  // throws unless prime
  return p;
}

Instance instance_of(const Common& c) {
  if (c.instance.size() != 6) throw std::invalid_argument("--instance takes six integers");
  const auto& v = c.instance;
  return build_instance(v[0], v[1], v[2], v[3], v[4], v[5]);
}

FamilyOptions family_options(const Common& c) {
  FamilyOptions o;
  o.v_sign = c.v_sign;
  o.h_literal_range = c.h_literal;
  o.u_literal_second_sum = c.u_literal;
  return o;
}

SquarefreeOptions squarefree_options(const Common& c) {
  SquarefreeOptions o;
  o.field.characteristic = parse_field(c.field);
  o.jobs = c.jobs;
  o.vertex_cap = c.vertex_cap;
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw std::runtime_error("cannot write " + c.output);
  out << text;
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void summary(const Json& rep) {
  std::cerr << "instance " << rep["instance"]["label"].get<std::string>() << " over "
            << rep["field"].get<std::string>() << "\n";
  for (const auto& [name, st] : rep["stages"].items()) {
    if (!st.contains("verdict")) continue;
    std::cerr << "  " << name << ": " << (st["verdict"].is_string() ? st["verdict"].get<std::string>()
                                                                    : st["verdict"].dump())
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay verification for Rees algebras of sums of determinantal ideals"};
  app.set_config("--config", "", "TOML config file; keys mirror the long flags");
  app.require_subcommand(1);
  Common c;
  app.add_option("--jobs", c.jobs, "worker threads")->envname("REES_CM_JOBS")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "seed for random suites")->capture_default_str();
  app.add_option("--output,-o", c.output, "write the report here instead of stdout");

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance,-i", c.instance, "m n s1 t1 s2 t2")->expected(6)->capture_default_str();
  };
  auto add_family_flags = [&](CLI::App* sub) {
    sub->add_option("--v-sign", c.v_sign, "sign of the y*f summands of V")->check(CLI::IsMember({-1, 1}));
    sub->add_flag("--h-literal-range", c.h_literal, "H corrections over c = k..j");
    sub->add_flag("--u-literal", c.u_literal, "U second sum with m-indexed ranges");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "QQ or a prime p")->capture_default_str();
  };

  VerifyOptions vopts;
  std::size_t budget = vopts.budget.max_pairs;
  auto* verify = app.add_subcommand("verify", "run the full pipeline on one instance");
  add_instance(verify);
  add_field(verify);
  add_family_flags(verify);
  verify->add_option("--budget", budget, "cap on S-pairs (oracle and certification)")->capture_default_str();
  verify->add_option("--max-terms", vopts.budget.max_terms, "cap on polynomial size")->capture_default_str();
  verify->add_option("--max-basis", vopts.budget.max_basis, "cap on oracle basis size")->capture_default_str();
  verify->add_flag("--skip-oracle", vopts.skip_oracle, "skip oracle membership");
  verify->add_option("--vertex-cap", c.vertex_cap, "cap on vertices for homology")->capture_default_str();

  std::string family;
  auto* dump = app.add_subcommand("dump", "print a family, one element per line");
  add_instance(dump);
  add_field(dump);
  add_family_flags(dump);
  dump->add_option("--family,-f", family, "polynomial tag (g, f, U, ...) or h-family (hX, hU, ...)")->required();

  std::vector<int> stair;
  bool stair_all = false;
  auto* staircase = app.add_subcommand("staircase", "closed-form dual of a staircase ideal");
  staircase->add_option("mnl", stair, "m n l")->expected(3);
  staircase->add_flag("--all", stair_all, "2 <= m <= 3, m <= n <= 5, 1 <= l < m");
  add_field(staircase);

  std::string input;
  bool use_instance = false, components = false, as_json = false;
  auto* dual = app.add_subcommand("dual", "Alexander dual of a square-free monomial ideal");
  dual->add_option("--input", input, "one generator per line; - for stdin");
  add_instance(dual);
  dual->add_flag("--of-instance", use_instance, "dual of the initial ideal of the instance");
  dual->add_flag("--components", components, "also intersect the family duals and compare");
  dual->add_flag("--json", as_json, "JSON instead of one generator per line");

  bool betti_dual = false;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers as {i, j, rank}");
  betti->add_option("--input", input, "one generator per line; - for stdin");
  add_instance(betti);
  betti->add_flag("--of-instance", use_instance, "use the initial ideal of the instance");
  betti->add_flag("--dual", betti_dual, "take the Alexander dual first");
  betti->add_option("--vertex-cap", c.vertex_cap, "cap on vertices")->capture_default_str();
  add_field(betti);

  RandomSuiteOptions ropts;
  auto* random = app.add_subcommand("random-suite", "duality checks on random square-free ideals");
  random->add_option("--count", ropts.count)->capture_default_str();
  random->add_option("--max-vars", ropts.max_vars)->check(CLI::Range(1, 16))->capture_default_str();
  random->add_option("--prime", ropts.prime, "comparison field for Betti tables")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      vopts.budget.max_pairs = budget;
      vopts.characteristic = parse_field(c.field);
      vopts.jobs = c.jobs;
      vopts.vertex_cap = c.vertex_cap;
      vopts.families = family_options(c);
      const Instance inst = instance_of(c);
      auto res = run_verify(inst, vopts);
      emit_json(c, res.report);
      summary(res.report);
      return res.exit_code;
    }
    if (*dump) {
      const Instance inst = instance_of(c);
      for (const auto& n : inst.notices) std::cerr << "notice: " << n << "\n";
      const RingPtr ring = inst.ring();
      std::string out;
      if (int k = parse_initial_family(family)) {
        const MonomialIdeal fam(ring, initial_family(inst, k, ring));
        for (const auto& m : fam.generators()) out += m.to_string(*ring) + "\n";
      } else if (auto tag = parse_family_tag(family)) {
        auto print = [&](const auto& field) {
          for (const auto& e : family_generators(inst, *tag, ring, field, family_options(c)))
            out += e.value.to_string() + "\n";
        };
        const auto p = parse_field(c.field);
        if (p == 0)
          print(Rationals{});
        else
          print(PrimeField(p));
      } else {
        std::cerr << "unknown family tag '" << family << "'\n";
        return 1;
      }
      emit(c, out);
      return 0;
    }
    if (*staircase) {
      const auto sq = squarefree_options(c);
      Json rep{{"schema", 1}, {"command", "staircase"}, {"field", sq.field.name()}};
      Json cases = Json::array();
      bool ok = true;
      auto one = [&](int m, int n, int l) {
        auto r = run_staircase(m, n, l, sq);
        ok = ok && r.ok();
        cases.push_back(staircase_json(r));
      };
      if (stair_all) {
        for (int m = 2; m <= 3; ++m)
          for (int n = m; n <= 5; ++n)
            for (int l = 1; l < m; ++l) one(m, n, l);
      } else if (stair.size() == 3) {
        one(stair[0], stair[1], stair[2]);
      } else {
        std::cerr << "staircase needs m n l or --all\n";
        return 1;
      }
      rep["cases"] = cases;
      rep["ok"] = ok;
      emit_json(c, rep);
      return ok ? kExitVerified : kExitRefuted;
    }
    if (*dual || *betti) {
      RingPtr ring;
      std::optional<MonomialIdeal> I;
      if (use_instance) {
        const Instance inst = instance_of(c);
        ring = inst.ring();
        I = initial_families(inst, ring);
      } else if (!input.empty()) {
        const std::string text = read_input(input);
        ring = ring_for_text(text);
        I = parse_monomial_ideal(text, ring);
      } else {
        std::cerr << "give --input or --of-instance\n";
        return 1;
      }
      const auto sq = squarefree_options(c);
      if (*dual) {
        const auto D = alexander_dual(*I);
        int code = 0;
        Json rep{{"schema", 1}, {"command", "dual"}, {"generators", Json::array()}};
        for (const auto& g : D.generators()) rep["generators"].push_back(g.to_string(*ring));
        if (components) {
          const Instance inst = instance_of(c);
          const bool same = dual_by_components(inst, ring) == D;
          rep["components_agree"] = same;
          if (!same) code = kExitRefuted;
          std::cerr << "component intersection " << (same ? "agrees" : "DISAGREES") << "\n";
        }
        if (as_json)
          emit_json(c, rep);
        else
          emit(c, D.to_string());
        return code;
      }
      const auto table = betti_numbers(betti_dual ? alexander_dual(*I) : *I, sq);
      Json rep = betti_json(table);
      rep["command"] = "betti";
      emit_json(c, rep);
      return 0;
    }
    if (*random) {
      ropts.seed = c.seed;
      ropts.jobs = c.jobs;
      auto r = run_random_suite(ropts);
      emit_json(c, random_suite_json(r, ropts));
      return r.ok() ? kExitVerified : kExitRefuted;
    }
  } catch (const VertexCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResources;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResources;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
