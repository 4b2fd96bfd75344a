#include <hilb/errors.hpp>
#include <hilb/grading.hpp>
#include <hilb/rational.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hilb {

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multidegree length mismatch");
  MultiDegree r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multidegree length mismatch");
  MultiDegree r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

MultiGrading MultiGrading::standard(std::size_t nvars) {
  MultiGrading g;
  g.rows = 1;
  g.degrees.assign(nvars, MultiDegree{1});
  return g;
}

MultiGrading MultiGrading::from_degrees(std::vector<MultiDegree> degrees) {
  MultiGrading g;
  g.rows = degrees.empty() ? 1 : degrees.front().size();
  if (g.rows == 0) throw InputError("grading: degree vectors must be nonempty");
  for (const auto& d : degrees) {
    if (d.size() != g.rows) throw InputError("grading: all degree vectors must have the same length");
  }
  g.degrees = std::move(degrees);
  return g;
}

MultiDegree multidegree(const Monomial& m, const MultiGrading& g) {
  if (m.size() != g.nvars()) throw std::invalid_argument("multidegree: arity mismatch");
  MultiDegree d(g.rows, 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    for (std::size_t r = 0; r < g.rows; ++r) d[r] += static_cast<long>(m[v]) * g.degrees[v][r];
  }
  return d;
}

long dot(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

bool is_heft(const MultiGrading& g, const MultiDegree& h) {
  return std::all_of(g.degrees.begin(), g.degrees.end(), [&](const MultiDegree& d) { return dot(h, d) > 0; });
}

struct Inequality {
  std::vector<Rational> coeffs;  // coeffs . h >= rhs
  Rational rhs;
  bool operator==(const Inequality&) const = default;
};

std::optional<MultiDegree> fourier_motzkin_heft(const MultiGrading& g) {
  const std::size_t r = g.rows;
  std::vector<std::vector<Inequality>> stages(r + 1);
  for (const auto& d : g.degrees) {
    Inequality q;
    for (long x : d) q.coeffs.emplace_back(x);
    q.rhs = 1;
    stages[r].push_back(std::move(q));
  }
  for (std::size_t k = r; k-- > 0;) {
    const auto& cur = stages[k + 1];
    std::vector<Inequality> next;
    std::vector<const Inequality*> pos, neg;
    for (const auto& q : cur) {
      const int s = sgn(q.coeffs[k]);
      if (s > 0) pos.push_back(&q);
      else if (s < 0) neg.push_back(&q);
      else next.push_back(q);
    }
    for (const auto* p : pos) {
      for (const auto* n : neg) {
        const Rational a = p->coeffs[k];
        const Rational b = -n->coeffs[k];
        Inequality c;
        c.coeffs.resize(r);
        for (std::size_t j = 0; j < r; ++j) c.coeffs[j] = p->coeffs[j] / a + n->coeffs[j] / b;
        c.coeffs[k] = 0;
        c.rhs = p->rhs / a + n->rhs / b;
        if (std::find(next.begin(), next.end(), c) == next.end()) next.push_back(std::move(c));
      }
    }
    stages[k] = std::move(next);
  }
  for (const auto& q : stages[0]) {
    if (sgn(q.rhs) > 0) return std::nullopt;
  }

  std::vector<Rational> h(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::optional<Rational> lower, upper;
    for (const auto& q : stages[k + 1]) {
      Rational bound = q.rhs;
      for (std::size_t j = 0; j < k; ++j) bound -= q.coeffs[j] * h[j];
      const int s = sgn(q.coeffs[k]);
      if (s == 0) continue;
      Rational v = bound / q.coeffs[k];
      if (s > 0) {
        if (!lower || v > *lower) lower = v;
      } else {
        if (!upper || v < *upper) upper = v;
      }
    }
    if (lower) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), lower->get_num_mpz_t(), lower->get_den_mpz_t());
      h[k] = (!upper || Rational(c) <= *upper) ? Rational(c) : *lower;
    } else if (upper) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), upper->get_num_mpz_t(), upper->get_den_mpz_t());
      h[k] = Rational(f);
    } else {
      h[k] = 0;
    }
  }

  Integer scale = 1;
  for (const auto& q : h) scale = lcm(scale, Integer(q.get_den()));
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& q : h) {
    Integer v = Integer(q.get_num()) * (scale / q.get_den());
    content = gcd(content, v);
    ints.push_back(v);
  }
  MultiDegree out;
  for (auto& v : ints) {
    if (content != 0) v /= content;
    if (!v.fits_slong_p()) throw std::overflow_error("heft vector entry exceeds machine range");
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace

std::optional<MultiDegree> heft_check(const MultiGrading& g) {
  const std::size_t r = g.rows;
  if (g.degrees.empty()) return MultiDegree(r, 0);
  if (r <= 4) {
    constexpr long bound = 3;
    std::vector<MultiDegree> candidates;
    MultiDegree cur(r, -bound);
    while (true) {
      candidates.push_back(cur);
      std::size_t i = r;
      while (i-- > 0) {
        if (cur[i] < bound) {
          ++cur[i];
          break;
        }
        cur[i] = -bound;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    auto l1 = [](const MultiDegree& v) {
      long s = 0;
      for (long x : v) s += std::abs(x);
      return s;
    };
    std::stable_sort(candidates.begin(), candidates.end(), [&](const MultiDegree& a, const MultiDegree& b) {
      const long la = l1(a), lb = l1(b);
      if (la != lb) return la < lb;
      return a > b;
    });
    for (const auto& h : candidates) {
      if (l1(h) != 0 && is_heft(g, h)) return h;
    }
  }
  auto h = fourier_motzkin_heft(g);
  if (h && !is_heft(g, *h)) throw std::logic_error("heft_check: elimination produced an invalid witness");
  return h;
}

std::vector<Monomial> monomials_of_degree(const MultiGrading& g, const MultiDegree& heft, const MultiDegree& e) {
  if (e.size() != g.rows) throw std::invalid_argument("monomials_of_degree: degree length mismatch");
  const long budget = dot(heft, e);
  std::vector<Monomial> out;
  if (budget < 0) return out;
  const std::size_t n = g.nvars();
  std::vector<long> weight(n);
  for (std::size_t v = 0; v < n; ++v) {
    weight[v] = dot(heft, g.degrees[v]);
    if (weight[v] <= 0) throw NoHeftError("monomials_of_degree: supplied vector is not a heft vector");
  }
  std::vector<int> exps(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t v, long remaining) {
    if (v == n) {
      if (remaining != 0) return;
      Monomial m(exps);
      if (multidegree(m, g) == e) out.push_back(std::move(m));
      return;
    }
    for (long a = 0; a * weight[v] <= remaining; ++a) {
      exps[v] = static_cast<int>(a);
      rec(v + 1, remaining - a * weight[v]);
    }
    exps[v] = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hilb
