#include <hilb/errors.hpp>
#include <hilb/linalg.hpp>
#include <hilb/polynomial.hpp>

#include <doctest.h>

#include <random>

using namespace hilb;

namespace {

const MultiGrading kBigrading = MultiGrading::from_degrees({{1, 2}, {2, 1}, {3, -3}});

RingPtr xyz(MonomialOrder o = MonomialOrder::grevlex()) {
  return Ring::make({"x", "y", "z"}, MultiGrading::standard(3), std::move(o));
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  std::vector<int> e(n);
  for (auto& x : e) x = d(rng);
  return Monomial(e);
}

}  // namespace

TEST_CASE("parse examples") {
  const auto r = xyz();
  const Polynomial f = parse_polynomial("y^3 - x^3*z", r);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(mono({0, 3, 0})) == 1);
  CHECK(f.coefficient(mono({3, 0, 1})) == -1);
  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("(x+y)^2 - x^2 - 2*x*y", r) == parse_polynomial("y^2", r));
  CHECK(parse_polynomial("3/4*x - -x", r).coefficient(mono({1, 0, 0})) == make_rational(7, 4));
  CHECK(parse_polynomial("(x)^(2)", r) == parse_polynomial("x*x", r));
  CHECK(parse_polynomial("-(x - 1)^0", r) == Polynomial::constant(r, -1));
}

TEST_CASE("parse errors") {
  const auto r = xyz();
  CHECK_THROWS_AS(parse_polynomial("x^-1", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + ", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^2^3", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("w + x", r), InputError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r), InputError);
  try {
    parse_polynomial("x + * y", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(Ring::make({"x", "x"}), InputError);
  CHECK_THROWS_AS(Ring::make({"1x"}), InputError);
  CHECK_THROWS_AS(Ring::make({""}), InputError);
  CHECK_THROWS_AS(Ring::make({"x", "y"}, MultiGrading::standard(3)), InputError);
  CHECK_THROWS_AS(MultiGrading::from_degrees({{1, 2}, {1}}), InputError);
  CHECK(Ring::make({"x_1", "Y2"})->nvars() == 2);
}

TEST_CASE("multidegree") {
  CHECK(multidegree(mono({1, 0, 0}), kBigrading) == MultiDegree{1, 2});
  CHECK(multidegree(mono({0, 0, 0}), kBigrading) == MultiDegree{0, 0});
  CHECK(multidegree(mono({0, 3, 0}), kBigrading) == MultiDegree{6, 3});
  CHECK(multidegree(mono({3, 0, 1}), kBigrading) == MultiDegree{6, 3});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Monomial a = random_monomial(rng, 3, 5), b = random_monomial(rng, 3, 5);
    CHECK(multidegree(a * b, kBigrading) == multidegree(a, kBigrading) + multidegree(b, kBigrading));
  }
}

TEST_CASE("monomial order examples") {
  const auto grevlex = MonomialOrder::grevlex();
  const auto lex = MonomialOrder::lex();
  const Monomial m = mono({2, 1, 3});
  CHECK(grevlex.compare(m, m) == std::strong_ordering::equal);
  CHECK(lex.compare(mono({1, 0}), mono({0, 100})) == std::strong_ordering::greater);
  CHECK(grevlex.compare(mono({2, 1, 0}), mono({1, 2, 0})) == std::strong_ordering::greater);
  // Degree first, then the smaller last exponent wins.
  CHECK(grevlex.greater(mono({0, 0, 2}), mono({1, 0, 0})));
  CHECK(grevlex.greater(mono({0, 2, 0}), mono({1, 0, 1})));
  CHECK(lex.greater(mono({1, 0, 1}), mono({0, 2, 0})));
  const auto w = MonomialOrder::weighted({1, 2, 3});
  CHECK(w.greater(mono({0, 0, 1}), mono({2, 0, 0})));
  CHECK_THROWS(MonomialOrder::weighted({1, 0, 1}));
}

TEST_CASE("monomial orders are multiplicative total orders with 1 minimal") {
  std::mt19937_64 rng(5);
  for (const auto& o : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::weighted({2, 1, 3}),
                        MonomialOrder::weighted({1, 1, 1}, MonomialOrder::Kind::Lex)}) {
    for (int i = 0; i < 300; ++i) {
      const Monomial a = random_monomial(rng, 3, 3), b = random_monomial(rng, 3, 3), c = random_monomial(rng, 3, 3);
      const auto ab = o.compare(a, b);
      CHECK(o.compare(b, a) == 0 <=> ab);
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
      CHECK(o.compare(a * c, b * c) == ab);
      if (!a.is_one()) CHECK(o.greater(a, Monomial(3)));
    }
  }
}

TEST_CASE("is_homogeneous") {
  const auto r = Ring::make({"x", "y", "z"}, kBigrading);
  const auto h = is_homogeneous(parse_polynomial("y^3 - x^3*z", r));
  REQUIRE(h.has_value());
  CHECK(*h->degree == MultiDegree{6, 3});
  const auto s = xyz();
  CHECK(*is_homogeneous(parse_polynomial("x + y", s))->degree == MultiDegree{1});
  CHECK_FALSE(is_homogeneous(parse_polynomial("x + y^2", s)).has_value());
  CHECK(is_homogeneous(Polynomial(s))->is_any());
}

TEST_CASE("heft vectors") {
  CHECK_FALSE(heft_check(MultiGrading::from_degrees({{2}, {1}, {-3}})).has_value());
  const auto h = heft_check(kBigrading);
  REQUIRE(h.has_value());
  CHECK(*h == MultiDegree{1, 0});
  CHECK(*heft_check(MultiGrading::standard(3)) == MultiDegree{1});
  CHECK_FALSE(heft_check(MultiGrading::from_degrees({{1, 0}, {-1, 0}, {0, 1}})).has_value());
  // Needs a heft outside the small search box.
  const MultiGrading skew = MultiGrading::from_degrees({{1, -9}, {-9, 82}});
  const auto hs = heft_check(skew);
  REQUIRE(hs.has_value());
  for (const auto& d : skew.degrees) CHECK(dot(*hs, d) > 0);
}

TEST_CASE("graded pieces are finite and complete under a heft") {
  const MultiDegree heft{1, 0};
  // Brute force over a box that certainly contains every monomial of the degree.
  for (long a = 0; a <= 8; ++a) {
    for (long b = -6; b <= 8; ++b) {
      const MultiDegree e{a, b};
      const auto listed = monomials_of_degree(kBigrading, heft, e);
      std::vector<Monomial> brute;
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j)
          for (int k = 0; k <= 8; ++k)
            if (multidegree(mono({i, j, k}), kBigrading) == e) brute.push_back(mono({i, j, k}));
      CHECK(listed == brute);
    }
  }
  CHECK(monomials_of_degree(kBigrading, heft, {6, 3}) == std::vector<Monomial>{mono({0, 3, 0}), mono({3, 0, 1})});
  CHECK_THROWS_AS(monomials_of_degree(kBigrading, {0, 1}, {1, 1}), NoHeftError);
}

TEST_CASE("arithmetic") {
  const auto r = xyz();
  const Polynomial x = Polynomial::variable(r, "x"), y = Polynomial::variable(r, 1);
  CHECK((x + y) * (x - y) == parse_polynomial("x^2 - y^2", r));
  CHECK((x + y).pow(3).size() == 4);
  CHECK((x - x).is_zero());
  CHECK(parse_polynomial("2*x^2 + 4", r).monic() == parse_polynomial("x^2 + 2", r));
  CHECK(parse_polynomial("x^3*y + y", r).derivative(0) == parse_polynomial("3*x^2*y", r));
  const RationalVector pt{2, 3, 5};
  CHECK(parse_polynomial("x*y - 1/2*z", r).evaluate(pt) == make_rational(7, 2));
  const std::vector<Polynomial> images{y, x, parse_polynomial("z + 1", r)};
  CHECK(parse_polynomial("x*z", r).substitute(images) == parse_polynomial("y*z + y", r));
  CHECK(parse_polynomial("x^2*y", r).leading_monomial() == mono({2, 1, 0}));
  CHECK_THROWS(Polynomial::variable(r, "w"));
}

TEST_CASE("printing and round trip") {
  const auto r = xyz();
  CHECK(parse_polynomial("y^3 - x^3*z", r).to_string() == "-x^3*z + y^3");
  CHECK(parse_polynomial("3/2*x^2*y", r).to_string() == "3/2*x^2*y");
  CHECK(Polynomial(r).to_string() == "0");
  CHECK(parse_polynomial("-1 + x", r).to_string() == "x - 1");
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-20, 20), d(1, 6);
  for (const auto& ring : {xyz(), xyz(MonomialOrder::lex())}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<Term> terms;
      for (int k = 0; k < 5; ++k) terms.push_back({random_monomial(rng, 3, 4), make_rational(c(rng), d(rng))});
      const Polynomial f(ring, terms);
      CHECK(parse_polynomial(f.to_string(), ring) == f);
    }
  }
}

TEST_CASE("in_ring maps by variable name") {
  const auto r = xyz();
  const auto zyx = Ring::make({"z", "y", "x", "w"});
  const Polynomial f = parse_polynomial("x^2*z - y", r);
  CHECK(f.in_ring(zyx) == parse_polynomial("x^2*z - y", zyx));
  CHECK_THROWS_AS(parse_polynomial("w", zyx).in_ring(r), InputError);
}

TEST_CASE("exponent overflow is detected") {
  const Monomial big = Monomial::variable(1, 0, std::numeric_limits<int>::max());
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
