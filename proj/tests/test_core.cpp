#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reescm/field.hpp"
#include "reescm/matrix.hpp"
#include "reescm/monomial.hpp"
#include "reescm/monomial_ideal.hpp"
#include "reescm/polynomial.hpp"
#include "reescm/ring.hpp"

using namespace reescm;

namespace {
using P = Polynomial<Rationals>;
P parse(const std::string& s, const RingPtr& r) { return parse_polynomial<Rationals>(s, r); }
std::size_t slot(const RingPtr& r, Variable v) { return r->index_of(v); }
}  // namespace

TEST_CASE("ring enumeration realizes the block order") {
  auto r = make_ring(2, 3);
  CHECK(r->size() == 19);
  CHECK(r->variable(0) == Variable::t());
  CHECK(r->variable(1) == Variable::z(1, 1));
  // z11 > z12 > z21
  CHECK(slot(r, Variable::z(1, 2)) < slot(r, Variable::z(2, 1)));
  // x13 > x12 > x11 > x23
  CHECK(slot(r, Variable::x(1, 3)) < slot(r, Variable::x(1, 2)));
  CHECK(slot(r, Variable::x(1, 1)) < slot(r, Variable::x(2, 3)));
  // every z above every x above every y
  CHECK(slot(r, Variable::z(2, 3)) < slot(r, Variable::x(1, 3)));
  CHECK(slot(r, Variable::x(2, 1)) < slot(r, Variable::y(1, 3)));
  CHECK_THROWS_AS(r->index_of(Variable::x(3, 1)), std::out_of_range);
  CHECK_THROWS(make_ring(4, 6));  // 73 variables
}

TEST_CASE("variable text form") {
  CHECK(to_string(Variable::x(1, 2)) == "x[1,2]");
  auto v = parse_variable("z[2,3]");
  REQUIRE(v);
  CHECK(*v == Variable::z(2, 3));
  CHECK_FALSE(parse_variable("w[1,1]"));
}

TEST_CASE("monomial arithmetic") {
  auto r = make_ring(2, 2);
  Monomial a = Monomial::variable(slot(r, Variable::x(1, 1)), 2);
  Monomial b = Monomial::variable(slot(r, Variable::y(1, 1)));
  Monomial ab = a * b;
  CHECK(ab.degree() == 3);
  CHECK(a.divides(ab));
  CHECK_FALSE(ab.divides(a));
  CHECK(ab / a == b);
  CHECK(a.lcm(b) == ab);
  CHECK(a.gcd(b).is_one());
  CHECK(a.coprime(b));
  CHECK_FALSE(a.is_square_free());
  CHECK(b.is_square_free());
  // lex: x11 > y11
  CHECK(Monomial::variable(slot(r, Variable::x(1, 1))) > b);
}

TEST_CASE("rational and prime fields") {
  Rationals q;
  CHECK(q.div(q.from_int(3), q.from_int(6)) == mpq_class(1, 2));
  CHECK_THROWS_AS(q.inv(q.zero()), DivisionByZero);
  PrimeField f(101);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK_THROWS(PrimeField(100));
  CHECK(f.from_rational(mpq_class(1, 2)) == f.inv(2));
}

TEST_CASE("polynomial canonical form and arithmetic") {
  auto r = make_ring(2, 2);
  auto p = parse("x[1,1] + y[1,1]", r);
  auto q = parse("x[1,1] - y[1,1]", r);
  CHECK(p * q == parse("x[1,1]^2 - y[1,1]^2", r));
  CHECK((p - p).is_zero());
  CHECK(p.lead_monomial() == Monomial::variable(slot(r, Variable::x(1, 1))));
  auto s = parse("2*y[1,1] + 4*x[1,1]", r);
  CHECK(s.monic() == parse("x[1,1] + 1/2*y[1,1]", r));
  CHECK(P::constant(r, {}, mpq_class(0)).is_zero());
}

TEST_CASE("polynomial text round-trip") {
  auto r = make_ring(2, 3);
  for (const char* text : {"z[1,1]*x[2,2] - z[1,2]*x[2,1] - z[2,1]*y[1,2] + z[2,2]*y[1,1]",
                           "-3/4*t*x[1,3]^2 + 7", "x[2,1]"}) {
    auto p = parse(text, r);
    CHECK(parse(p.to_string(), r) == p);
  }
  CHECK_THROWS(parse("x[1,1] +* y", r));
  CHECK_THROWS(parse("x[9,9]", r));
}

TEST_CASE("determinant by expansion") {
  auto r = make_ring(2, 3, false);
  auto X = PolyMatrix<Rationals>::of_variables(r, {}, VariableFamily::X, 1, 2, {1, 2});
  CHECK(X.determinant() == parse("x[1,1]*x[2,2] - x[1,2]*x[2,1]", r));
  auto Y = PolyMatrix<Rationals>::of_variables(r, {}, VariableFamily::Y, 1, 2, {1, 2, 3});
  CHECK_THROWS_AS(Y.determinant(), NotSquare);
}

TEST_CASE("monomial ideals minimalize") {
  auto r = make_ring(2, 2);
  auto I = parse_monomial_ideal("x[1,1]*x[2,2]\nx[1,1]\nx[1,1]\n", r);
  CHECK(I.size() == 1);
  CHECK(I.contains(Monomial::variable(slot(r, Variable::x(1, 1)), 3)));
  CHECK(I.is_square_free());
  CHECK(parse_monomial_ideal(I.to_string(), r) == I);
}
