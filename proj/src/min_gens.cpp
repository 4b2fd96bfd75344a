#include <hilb/errors.hpp>
#include <hilb/groebner.hpp>
#include <hilb/linalg.hpp>

#include <algorithm>
#include <map>

namespace hilb {

namespace {

RationalVector coordinates(const Polynomial& p, const std::map<Monomial, std::size_t>& index) {
  RationalVector v(index.size());
  for (const auto& t : p.terms()) v[index.at(t.monomial)] = t.coefficient;
  return v;
}

}  // namespace

std::vector<Polynomial> min_gens(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring;
  const MultiGrading& grading = ring->grading();
  const auto heft = heft_check(grading);
  if (!heft) throw NoHeftError("min_gens: the grading admits no heft vector");

  struct Graded {
    Polynomial poly;
    MultiDegree degree;
  };
  std::vector<Graded> input;
  for (const auto& g : ideal.generators) {
    auto h = is_homogeneous(g, grading);
    if (!h) throw NotHomogeneousError("min_gens: generator " + g.to_string() + " is not homogeneous");
    input.push_back({g, *h->degree});
  }
  // Heft-degree first, then the degree vector itself; stable within a degree.
  std::stable_sort(input.begin(), input.end(), [&](const Graded& a, const Graded& b) {
    const long ha = dot(*heft, a.degree), hb = dot(*heft, b.degree);
    if (ha != hb) return ha < hb;
    return a.degree < b.degree;
  });

  std::vector<Graded> kept;
  std::size_t i = 0;
  while (i < input.size()) {
    const MultiDegree e = input[i].degree;
    std::size_t end = i;
    while (end < input.size() && input[end].degree == e) ++end;

    const auto basis = monomials_of_degree(grading, *heft, e);
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);

    RowSpace span(basis.size());
    for (const auto& g : kept) {
      if (g.degree == e) continue;
      for (const auto& mu : monomials_of_degree(grading, *heft, e - g.degree)) {
        span.insert(coordinates(g.poly.times(mu, 1), index));
      }
    }
    for (std::size_t k = i; k < end; ++k) {
      if (span.insert(coordinates(input[k].poly, index))) kept.push_back(input[k]);
    }
    i = end;
  }

  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (auto& g : kept) out.push_back(std::move(g.poly));
  return out;
}

}  // namespace hilb
