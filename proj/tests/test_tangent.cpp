#include <hilb/errors.hpp>
#include <hilb/tangent.hpp>
#include <hilb/verify.hpp>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace hilb;

namespace {

RingPtr standard() { return Ring::make({"x", "y", "z"}); }

// Plane partitions of n as weakly decreasing 2D arrays of positive parts.
std::size_t count_plane_partitions(std::size_t n) {
  std::size_t count = 0;
  // Fill cells row by row; each part is bounded by its upper and left neighbours.
  std::vector<std::vector<long>> grid;
  std::function<void(std::size_t, std::size_t, long)> place = [&](std::size_t row, std::size_t col, long left) {
    if (left == 0) {
      ++count;
      return;
    }
    const long above = row == 0 ? left : (col < grid[row - 1].size() ? grid[row - 1][col] : 0);
    const long before = col == 0 ? left : grid[row][col - 1];
    const long cap = std::min({left, above, before});
    for (long v = cap; v >= 1; --v) {
      grid[row].push_back(v);
      place(row, col + 1, left - v);
      grid[row].pop_back();
    }
    // End this row and start a new one (rows must be non-empty).
    if (col > 0) {
      grid.emplace_back();
      place(row + 1, 0, left);
      grid.pop_back();
    }
  };
  grid.emplace_back();
  place(0, 0, static_cast<long>(n));
  return count;
}

Ideal two_points(const RingPtr& r) { return Ideal::parse(r, {"x^2 - x", "y", "z"}); }

}  // namespace

TEST_CASE("plane partition oracle") {
  const std::vector<std::size_t> expected{1, 3, 6, 13, 24, 48};
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(count_plane_partitions(n) == expected[n - 1]);
    CHECK(enumerate_staircases(n).size() == count_plane_partitions(n));
  }
}

TEST_CASE("monomial ideal enumeration") {
  const auto one = enumerate_monomial_ideals(1);
  REQUIRE(one.size() == 1);
  CHECK(ideal_equal(one[0], Ideal::parse(one[0].ring, {"x", "y", "z"})));
  const auto two = enumerate_monomial_ideals(2);
  REQUIRE(two.size() == 3);
  for (const auto& I : two) CHECK(standard_monomials(buchberger(I)).colength() == 2);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ideals = enumerate_monomial_ideals(n);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      CHECK(ideals[i].all_monomial());
      CHECK(standard_monomials(buchberger(ideals[i])).colength() == n);
      for (std::size_t j = i + 1; j < ideals.size(); ++j) CHECK_FALSE(ideal_equal(ideals[i], ideals[j]));
    }
    CHECK(enumerate_staircases(n) == enumerate_staircases(n));
  }
}

TEST_CASE("graded solver examples") {
  const auto R = counterexample_ring();
  CHECK(hom_dim_graded(Ideal::parse(standard(), {"x", "y", "z"})).summary.total == 3);
  const auto m = hom_dim_graded(Ideal::parse(R, {"x", "y", "z"}));
  CHECK(m.summary.total == 3);
  CHECK(weight_marginal(m.summary, 1) == std::map<long, std::size_t>{{-2, 1}, {-1, 1}, {3, 1}});
  CHECK(m.summary.per_bidegree == std::map<MultiDegree, std::size_t>{{{-1, -2}, 1}, {{-2, -1}, 1}, {{-3, 3}, 1}});

  const auto I = counterexample_ideal(R);
  const auto res = hom_dim_graded(I);
  CHECK(res.summary.total == 99);
  CHECK(res.summary.torus_row == 1);
  const auto marginal = weight_marginal(res.summary, 1);
  CHECK(marginal.at(0) == 1);
  std::size_t sum = 0;
  for (const auto& [w, d] : marginal) sum += d;
  CHECK(sum == 99);
  CHECK_THROWS_AS(hom_dim_graded(Ideal::parse(R, {"x + y", "z"})), NotHomogeneousError);
  CHECK_THROWS_AS(hom_dim_graded(Ideal::parse(R, {"x", "y"})), InfiniteQuotientError);
}

TEST_CASE("total dimension does not depend on the grading") {
  const auto a = hom_dim_graded(counterexample_ideal(counterexample_ring(torus_bigrading())));
  const auto b = hom_dim_graded(counterexample_ideal(counterexample_ring(nonnegative_bigrading())));
  CHECK(a.summary.total == 99);
  CHECK(b.summary.total == 99);
  CHECK(a.summary.per_bidegree != b.summary.per_bidegree);
  const auto lex = hom_dim_graded(counterexample_ideal(counterexample_ring(torus_bigrading(), MonomialOrder::lex())));
  CHECK(lex.summary.per_bidegree == a.summary.per_bidegree);
}

TEST_CASE("ungraded solver agrees with the graded one") {
  CHECK(hom_dim_ungraded(counterexample_ideal(counterexample_ring())) == 99);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& I : enumerate_monomial_ideals(n)) CHECK(hom_dim_ungraded(I) == hom_dim_graded(I).summary.total);
  }
  const auto r = standard();
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2 - y*z", "y^2 - x*z", "z^3"}, {"x^2", "y^2", "z^2"}, {"x*y", "y*z", "x*z", "x^2 - y^2", "x^2 - z^2"}}) {
    const Ideal I = Ideal::parse(r, gens);
    CHECK(hom_dim_ungraded(I) == hom_dim_graded(I).summary.total);
  }
}

TEST_CASE("generating-set independence") {
  const auto R = counterexample_ring();
  const Ideal I = counterexample_ideal(R);
  CHECK(hom_dim_graded(I, {.use_min_gens = false}).summary.per_bidegree == hom_dim_graded(I).summary.per_bidegree);
  Ideal padded = Ideal(R, min_gens(I));
  padded.generators.push_back(parse_polynomial("x", R) * I.generators.back());
  padded.generators.push_back(parse_polynomial("2*x^4", R));
  CHECK(hom_dim_graded(padded).summary.total == 99);
  CHECK(hom_dim_graded(padded, {.use_min_gens = false}).summary.total == 99);
  CHECK(hom_dim_ungraded(padded) == 99);
}

TEST_CASE("taylor oracle") {
  const auto r = standard();
  CHECK(hom_dim_taylor(Ideal::parse(r, {"x", "y", "z"})) == 3);
  CHECK(hom_dim_taylor(Ideal::parse(r, {"x^2", "y", "z"})) == 6);
  CHECK_THROWS_AS(hom_dim_taylor(Ideal::parse(r, {"x", "y"})), InfiniteQuotientError);
  CHECK_THROWS_AS(hom_dim_taylor(Ideal::parse(r, {"x - y", "z", "y^2"})), InputError);
  CHECK(hom_dim_taylor(Ideal::parse(r, {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"})) == 18);
}

TEST_CASE("parity scan") {
  const auto one = parity_scan(1);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0].graded_dim == 3);
  const auto two = parity_scan(2);
  for (const auto& row : two.rows) {
    if (row.n == 2) CHECK(row.graded_dim == 6);
  }
  const auto five = parity_scan(5);
  CHECK(five.rows.size() == 47);
  CHECK(five.ideals_per_n == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 6}, {4, 13}, {5, 24}});
  CHECK(five.all_ok);
  for (const auto& row : five.rows) {
    CHECK(row.agree);
    CHECK(row.graded_dim == row.taylor_dim);
    CHECK(row.graded_dim % 2 == row.n % 2);
  }
}

TEST_CASE("hom element check") {
  const auto R = counterexample_ring();
  const Ideal m = Ideal::parse(R, {"x", "y", "z"});
  CHECK(hom_element_check(m, {{{0}, {0}, {0}}, std::nullopt}));
  CHECK(hom_element_check(m, {{{1}, {0}, {0}}, std::nullopt}));
  CHECK(hom_element_check(m, {{{1}, {0}, {0}}, MultiDegree{-1, -2}}));
  CHECK_THROWS_AS(hom_element_check(m, {{{1}, {0}, {0}}, MultiDegree{0, 0}}), std::invalid_argument);

  // For (x^2, y, z): x^2 -> 1 is not a hom (x * (x^2 -> 1) forces x -> ... ).
  const auto r = standard();
  const Ideal fat = Ideal::parse(r, {"x^2", "y", "z"});
  CHECK(hom_element_check(fat, {{{0, 1}, {0, 0}, {0, 0}}, std::nullopt}));
  CHECK(hom_element_check(fat, {{{1, 0}, {0, 0}, {0, 0}}, std::nullopt}));
  const Ideal cusp = Ideal::parse(r, {"x^2", "x*y", "y^2", "z"});
  const auto qb = standard_monomials(buchberger(cusp));
  // x^2 -> 1 alone violates y*(x^2) = x*(x*y).
  RationalVector one(qb.colength()), zero(qb.colength());
  one[qb.index.at(Monomial(3))] = 1;
  CHECK_FALSE(hom_element_check(cusp, {{one, zero, zero, zero}, std::nullopt}));
}

TEST_CASE("weight-0 tangent vector of the counterexample") {
  const auto R = counterexample_ring();
  const Ideal I = counterexample_ideal(R);
  const auto res = hom_dim_graded(I, {.want_basis = true});
  REQUIRE(res.basis.count({0, 0}) == 1);
  const auto& zero_weight = res.basis.at({0, 0});
  REQUIRE(zero_weight.size() == 1);
  const HomAssignment& a = zero_weight[0];
  CHECK(hom_element_check(I, a));

  const Polynomial binomial = parse_polynomial("y^3 - x^3*z", R);
  const auto it = std::find(I.generators.begin(), I.generators.end(), binomial);
  REQUIRE(it != I.generators.end());
  const std::size_t k = static_cast<std::size_t>(it - I.generators.begin());
  const Polynomial image = res.quotient.element(a.images[k]);
  const Polynomial target = normal_form(parse_polynomial("x^3*z", R), res.quotient.gb);
  REQUIRE_FALSE(image.is_zero());
  CHECK(image.is_monomial());
  CHECK(image.leading_monomial() == target.leading_monomial());
  // The other nine generators go to zero.
  for (std::size_t i = 0; i < I.generators.size(); ++i) {
    if (i != k) CHECK(res.quotient.element(a.images[i]).is_zero());
  }
}

TEST_CASE("every basis vector is a homomorphism") {
  const auto R = counterexample_ring();
  const Ideal I = counterexample_ideal(R);
  const auto res = hom_dim_graded(I, {.want_basis = true});
  std::size_t count = 0;
  for (const auto& [d, list] : res.basis) {
    CHECK(list.size() == res.summary.per_bidegree.at(d));
    for (const auto& a : list) {
      CHECK(hom_element_check(I, a));
      ++count;
    }
  }
  CHECK(count == 99);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& J : enumerate_monomial_ideals(n)) {
      for (const auto& [d, list] : hom_dim_graded(J, {.want_basis = true}).basis) {
        for (const auto& a : list) CHECK(hom_element_check(J, a));
      }
    }
  }
}

TEST_CASE("smooth points and additivity") {
  const auto r = standard();
  const std::vector<std::vector<Rational>> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Ideal acc(r, {Polynomial::constant(r, 1)});
  for (std::size_t k = 0; k < pts.size(); ++k) {
    acc = ideal_product(acc, point_ideal(r, pts[k]));
    CHECK(tangent_dimension(acc) == 3 * (k + 1));
    CHECK(standard_monomials(buchberger(acc)).colength() == k + 1);
  }
  CHECK(tangent_dimension(two_points(r)) == 6);

  const Ideal I = counterexample_ideal(r);
  const Ideal J = ideal_product(I, point_ideal(r, {1, 0, 0}));
  CHECK(standard_monomials(buchberger(J)).colength() == 25);
  CHECK(tangent_dimension(J) == 102);

  const Ideal sq = Ideal::parse(r, {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"});
  const Ideal moved = ideal_product(sq, point_ideal(r, {0, 2, -1}));
  CHECK(tangent_dimension(moved) == hom_dim_taylor(sq) + 3);
}

TEST_CASE("verification reports") {
  const auto r = standard();
  const auto sq = verify_ideal(Ideal::parse(r, {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"}));
  CHECK(sq.colength == 4);
  CHECK(sq.tangent_total == 18);
  CHECK_FALSE(sq.parity_violation);
  const auto two = verify_ideal(two_points(r));
  CHECK(two.tangent_total == 6);
  CHECK_FALSE(two.parity_violation);
  CHECK_FALSE(two.graded);
  CHECK(two.weight_marginal.empty());
  CHECK_THROWS_AS(verify_ideal(Ideal(r, {})), DegenerateIdealError);
  CHECK_THROWS_AS(verify_ideal(Ideal::parse(r, {"x", "x - 1"})), DegenerateIdealError);

  const auto v = verify_counterexample();
  CHECK(v.failures.empty());
  CHECK(v.report.colength == 24);
  CHECK(v.report.tangent_total == 99);
  CHECK(v.report.torus_weight0_dim == 1);
  CHECK(v.report.parity_violation);
  CHECK(v.report.min_gen_count == 8);
  const auto lex = verify_counterexample(MonomialOrder::lex());
  CHECK(lex.failures.empty());
  CHECK(lex.report.per_bidegree == v.report.per_bidegree);
}
