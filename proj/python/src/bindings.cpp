#include <hilb/errors.hpp>
#include <hilb/quiver.hpp>
#include <hilb/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace hilb;

namespace {

using IntMatrix = std::vector<std::vector<long>>;

MonomialOrder order_of(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw InputError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

Ideal make_ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                 const std::optional<std::vector<MultiDegree>>& degrees, const std::string& order) {
  const MultiGrading g = degrees ? MultiGrading::from_degrees(*degrees) : MultiGrading::standard(vars.size());
  return Ideal::parse(Ring::make(vars, g, order_of(order)), gens);
}

std::vector<std::string> to_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

QuiverRep make_rep(const IntMatrix& x, const IntMatrix& y, const IntMatrix& z) {
  QuiverRep r;
  r.n = x.size();
  r.x = RationalMatrix::from_rows(x);
  r.y = RationalMatrix::from_rows(y);
  r.z = RationalMatrix::from_rows(z);
  r.v = RationalVector(r.n);
  if (r.n > 0) r.v[0] = 1;
  r.validate();
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tangent spaces of Hilbert schemes of points";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InfiniteQuotientError>(m, "InfiniteQuotientError", PyExc_ValueError);
  py::register_exception<NotHomogeneousError>(m, "NotHomogeneousError", PyExc_ValueError);
  py::register_exception<NoHeftError>(m, "NoHeftError", PyExc_ValueError);

  m.def("verify_counterexample",
        [](const std::string& order) { return to_json(verify_counterexample(order_of(order)).report).dump(); },
        py::arg("order") = "grevlex");

  m.def("verify",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::optional<std::vector<MultiDegree>> degrees, const std::string& order,
           std::optional<std::size_t> torus_row) {
          return to_json(verify_ideal(make_ideal(vars, gens, degrees, order), torus_row)).dump();
        },
        py::arg("vars"), py::arg("generators"), py::arg("degrees") = py::none(), py::arg("order") = "grevlex",
        py::arg("torus_row") = py::none());

  m.def("tangent_dimension",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::optional<std::vector<MultiDegree>> degrees) {
          return tangent_dimension(make_ideal(vars, gens, degrees, "grevlex"));
        },
        py::arg("vars"), py::arg("generators"), py::arg("degrees") = py::none());

  m.def("groebner_basis",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens, const std::string& order) {
          return to_strings(buchberger(make_ideal(vars, gens, std::nullopt, order)).elements());
        },
        py::arg("vars"), py::arg("generators"), py::arg("order") = "grevlex");

  m.def("min_gens",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::optional<std::vector<MultiDegree>> degrees) {
          return to_strings(min_gens(make_ideal(vars, gens, degrees, "grevlex")));
        },
        py::arg("vars"), py::arg("generators"), py::arg("degrees") = py::none());

  m.def("colength",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens, const std::string& order) {
          return standard_monomials(buchberger(make_ideal(vars, gens, std::nullopt, order))).colength();
        },
        py::arg("vars"), py::arg("generators"), py::arg("order") = "grevlex");

  m.def("parity_scan", [](std::size_t n_max) { return to_json(parity_scan(n_max)).dump(); }, py::arg("max_n"));

  m.def("superpotential",
        [](const IntMatrix& x, const IntMatrix& y, const IntMatrix& z) {
          return to_string(superpotential(make_rep(x, y, z)));
        },
        py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("commuting",
        [](const IntMatrix& x, const IntMatrix& y, const IntMatrix& z) {
          return pairwise_commute(make_rep(x, y, z));
        },
        py::arg("x"), py::arg("y"), py::arg("z"));

  m.def("theory_checks",
        [](std::size_t random_cases, std::uint64_t seed) { return to_json(run_theory_checks(random_cases, seed)).dump(); },
        py::arg("random_cases") = 25, py::arg("seed") = 20231028);
}
