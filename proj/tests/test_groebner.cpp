#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reescm/groebner.hpp"
#include "reescm/matrix.hpp"

using namespace reescm;

namespace {
using P = Polynomial<Rationals>;
P parse(const std::string& s, const RingPtr& r) { return parse_polynomial<Rationals>(s, r); }

std::vector<P> minors_2x3(const RingPtr& r) {
  return {parse("x[1,1]*x[2,2] - x[1,2]*x[2,1]", r), parse("x[1,1]*x[2,3] - x[1,3]*x[2,1]", r),
          parse("x[1,2]*x[2,3] - x[1,3]*x[2,2]", r)};
}

// monic, sorted by decreasing lead
std::vector<P> normalized(std::vector<P> v) {
  for (auto& p : v) p = p.monic();
  std::sort(v.begin(), v.end(), [](const P& a, const P& b) { return a.lead_monomial() > b.lead_monomial(); });
  return v;
}
}  // namespace

TEST_CASE("s-polynomials") {
  auto r = make_ring(2, 3);
  auto f = parse("x[1,1]*y[1,1] - 1", r);
  CHECK(s_polynomial(f, f).is_zero());
  CHECK_THROWS(s_polynomial(f, P(r)));
  auto a = parse("x[1,1] + y[1,1]", r), b = parse("x[2,2] + y[2,2]", r);
  CHECK(reduce(s_polynomial(a, b), {a, b}).is_zero());
  auto m = minors_2x3(r);
  CHECK(reduce(s_polynomial(m[0], m[1]), m).is_zero());
}

TEST_CASE("reduce is a normal form and idempotent") {
  auto r = make_ring(2, 2);
  std::vector<P> G{parse("x[1,1] - y[1,1]", r), parse("x[2,2]*y[1,1] - 1", r)};
  auto f = parse("x[1,1]*x[2,2] + x[2,1]", r);
  auto h = reduce(f, G);
  CHECK(h == parse("x[2,1] + 1", r));
  CHECK(reduce(h, G) == h);
}

TEST_CASE("buchberger small cases") {
  auto r = make_ring(2, 3);
  CHECK(buchberger(std::vector<P>{parse("x[1,1]", r)}) == std::vector<P>{parse("x[1,1]", r)});
  auto m = minors_2x3(r);
  auto gb = buchberger(m);
  CHECK(gb == normalized(m));
  // ideal (x^2, xy - 1) contains x
  auto g2 = buchberger(std::vector<P>{parse("x[1,1]^2", r), parse("x[1,1]*y[1,1] - 1", r)});
  CHECK(g2 == std::vector<P>{parse("1", r)});
}

TEST_CASE("buchberger budget is explicit") {
  auto r = make_ring(2, 3);
  Budget b;
  b.max_pairs = 0;
  CHECK_THROWS_AS(buchberger(minors_2x3(r), TermOrder::BlockLex, b), BudgetExceeded);
  CHECK_THROWS_AS(is_groebner_basis(minors_2x3(r), TermOrder::BlockLex, 1, 16, 1000, 0), BudgetExceeded);
}

TEST_CASE("buchberger log") {
  auto r = make_ring(2, 3);
  GbStats st;
  buchberger(minors_2x3(r), TermOrder::BlockLex, {}, &st);
  REQUIRE_FALSE(st.trace.empty());
  CHECK(st.trace.back().basis_size == 3);
  CHECK(st.zero_reductions <= st.pairs_processed);
}

TEST_CASE("groebner basis certification") {
  auto r = make_ring(2, 3);
  CHECK(is_groebner_basis(std::vector<P>{parse("x[1,1]", r), parse("y[1,1]", r)}).is_basis);
  auto bad = is_groebner_basis(std::vector<P>{parse("x[1,1]*y[1,1] - 1", r), parse("x[1,1]", r)});
  CHECK_FALSE(bad.is_basis);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].remainder.lead_monomial().is_one());
  CHECK(is_groebner_basis(minors_2x3(r), TermOrder::BlockLex, 3).is_basis);
}

TEST_CASE("initial ideals") {
  auto r = make_ring(2, 3);
  auto in1 = initial_ideal(std::vector<P>{parse("x[1,1]^2 + y[1,1]", r)});
  CHECK(in1 == parse_monomial_ideal("x[1,1]^2", r));
  auto in2 = initial_ideal(minors_2x3(r), TermOrder::BlockLex, true);
  CHECK(in2 == parse_monomial_ideal("x[1,2]*x[2,1]\nx[1,3]*x[2,1]\nx[1,3]*x[2,2]", r));
  CHECK_THROWS_AS(initial_ideal(std::vector<P>{parse("x[1,1]*y[1,1] - 1", r), parse("x[1,1]", r)},
                                TermOrder::BlockLex, true),
                  NotGroebnerBasis);
  // independent of the basis handed in
  auto gb = buchberger(minors_2x3(r));
  auto extra = gb;
  extra.push_back(gb[0] * parse("x[1,1]", r));
  CHECK(initial_ideal(extra) == initial_ideal(gb));
}

TEST_CASE("elimination of t") {
  auto r = make_ring(2, 2);
  Ideal<Rationals> I(r, {}, {parse("t - x[1,1]", r), parse("t*y[1,1] - 1", r)});
  auto J = eliminate(I, 1);
  REQUIRE(J.generators().size() == 1);
  CHECK(J.generators()[0].monic() == parse("x[1,1]*y[1,1] - 1", r));
  Ideal<Rationals> single(r, {}, {parse("t*x[1,1] - y[1,1]", r)});
  CHECK(eliminate(single, 1).generators().empty());
  CHECK_THROWS(eliminate(I, 2));
  // elimination generators are members of the original ideal
  for (const auto& g : J.generators()) CHECK(ideal_membership(g, I, TermOrder::Elimination));
}

TEST_CASE("membership") {
  auto r = make_ring(2, 2);
  Ideal<Rationals> I(r, {}, {parse("x[1,1]^2", r)});
  CHECK(ideal_membership(parse("x[1,1]^2", r), I));
  CHECK_FALSE(ideal_membership(parse("x[1,1]", r), I));
}

TEST_CASE("prime field buchberger agrees on the minors") {
  auto r = make_ring(2, 3);
  PrimeField f(32003);
  std::vector<Polynomial<PrimeField>> m;
  for (const char* s : {"x[1,1]*x[2,2] - x[1,2]*x[2,1]", "x[1,1]*x[2,3] - x[1,3]*x[2,1]",
                        "x[1,2]*x[2,3] - x[1,3]*x[2,2]"})
    m.push_back(parse_polynomial(s, r, f));
  CHECK(buchberger(m).size() == 3);
  CHECK(is_groebner_basis(m).is_basis);
}
