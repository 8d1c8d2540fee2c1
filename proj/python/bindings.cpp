#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssbchoice/aggregation.hpp"
#include "ssbchoice/axiom_lab.hpp"
#include "ssbchoice/io.hpp"
#include "ssbchoice/lottery_solver.hpp"
#include "ssbchoice/ssb.hpp"

namespace py = pybind11;
using namespace ssbchoice;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(r.get_str()));
}

Rational rational(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

py::list matrix_rows(const SSBMatrix& phi) {
  py::list rows;
  for (std::size_t a = 0; a < phi.size(); ++a) {
    py::list row;
    for (std::size_t b = 0; b < phi.size(); ++b) row.append(fraction(phi(a, b)));
    rows.append(row);
  }
  return rows;
}

Universe default_universe(std::size_t m, const std::optional<std::vector<std::string>>& names) {
  if (names) {
    if (names->size() != m) throw std::invalid_argument("alternative names do not match the matrix size");
    return Universe(*names);
  }
  std::vector<std::string> generated;
  for (std::size_t a = 0; a < m; ++a) generated.push_back(m <= 26 ? std::string(1, char('a' + a)) : "x" + std::to_string(a));
  return Universe(std::move(generated));
}

SSBMatrix to_ssb(const py::sequence& rows, const std::optional<std::vector<std::string>>& names) {
  const auto m = py::len(rows);
  std::vector<Rational> entries;
  for (const auto& row : rows) {
    const auto seq = row.cast<py::sequence>();
    if (py::len(seq) != m) throw std::invalid_argument("matrix must be square");
    for (const auto& v : seq) entries.push_back(rational(v));
  }
  return SSBMatrix(default_universe(m, names), std::move(entries));
}

Lottery to_lottery(const Universe& u, const py::sequence& probs) {
  std::vector<Rational> values;
  for (const auto& v : probs) values.push_back(rational(v));
  return Lottery(u, std::move(values));
}

SWFHandle rule(const std::string& name) {
  if (name == "pairwise") return swf::pairwise_utilitarian();
  if (name == "majority") return swf::majority_margins();
  if (name == "approval") return swf::approval();
  if (name == "relative") return swf::relative_utilitarian();
  if (name == "constant") return swf::constant_zero();
  throw std::invalid_argument("unknown rule '" + name + "'");
}

AltSet among_set(const Universe& u, const std::optional<std::vector<std::string>>& among) {
  return among ? make_alt_set(u, *among) : u.all();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact SSB aggregation and maximal lotteries";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EnumerationBoundExceeded>(m, "EnumerationBoundExceeded", PyExc_RuntimeError);

  py::class_<Profile>(m, "Profile")
      .def_property_readonly("alternatives", [](const Profile& p) { return p.universe().names(); })
      .def("__len__", &Profile::size)
      .def("render", [](const Profile& p) { return render_ballots(p); })
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__repr__", [](const Profile& p) {
        return "<Profile " + std::to_string(p.size()) + " agents over " + std::to_string(p.universe().size()) +
               " alternatives>";
      });

  m.def("parse_ballots", [](const std::string& text) { return parse_ballots(text); }, py::arg("text"));

  m.def(
      "aggregate", [](const Profile& p, const std::string& name) { return matrix_rows(rule(name)(p)); },
      py::arg("profile"), py::arg("rule") = "pairwise",
      "Collective SSB matrix as rows of Fractions.");

  m.def(
      "evaluate",
      [](const py::sequence& phi, const py::sequence& p, const py::sequence& q) {
        const auto matrix = to_ssb(phi, std::nullopt);
        return fraction(evaluate(matrix, to_lottery(matrix.universe(), p), to_lottery(matrix.universe(), q)));
      },
      py::arg("matrix"), py::arg("p"), py::arg("q"));

  m.def(
      "maximal_lottery",
      [](const py::sequence& phi, std::optional<std::vector<std::string>> names,
         std::optional<std::vector<std::string>> among) {
        const auto matrix = to_ssb(phi, names);
        const auto cert = maximal_lottery(matrix, among_set(matrix.universe(), among));
        py::dict out;
        out["lottery"] = fractions(cert.lottery.probs());
        out["slacks"] = fractions(cert.slack);
        return out;
      },
      py::arg("matrix"), py::arg("alternatives") = py::none(), py::arg("among") = py::none());

  m.def(
      "maximal_set",
      [](const py::sequence& phi, std::size_t bound) {
        const auto matrix = to_ssb(phi, std::nullopt);
        const auto set = maximal_set(matrix, matrix.universe().all(), bound);
        py::list vertices;
        for (const auto& v : set.vertices) vertices.append(fractions(v.probs()));
        return py::make_tuple(vertices, set.unique);
      },
      py::arg("matrix"), py::arg("bound") = 8, "(extreme maximal lotteries, unique flag).");

  m.def(
      "cycle_witness",
      [](const py::sequence& phi, unsigned jobs) -> py::object {
        const auto matrix = to_ssb(phi, std::nullopt);
        py::gil_scoped_release release;
        const auto cycle = cycle_witness(matrix, jobs);
        py::gil_scoped_acquire acquire;
        if (!cycle) return py::none();
        const auto& [p, q, r] = *cycle;
        return py::make_tuple(fractions(p.probs()), fractions(q.probs()), fractions(r.probs()));
      },
      py::arg("matrix"), py::arg("jobs") = 1);

  m.def(
      "budget",
      [](const std::string& ballots, const std::string& proposals) {
        const auto profile = parse_ballots(ballots);
        const auto table = parse_proposals(proposals);
        const auto cert = maximal_lottery(pairwise_utilitarian(profile), profile.universe().all());
        const auto shares = budget_allocation(table, cert.lottery);
        py::dict out;
        for (std::size_t i = 0; i < shares.size(); ++i) out[py::str(table.items()[i])] = fraction(shares[i]);
        return out;
      },
      py::arg("ballots"), py::arg("proposals"), "Budget item -> exact share of the maximal lottery.");

  m.def(
      "check_iia",
      [](const Profile& lhs, const Profile& rhs, const std::vector<std::string>& among, const std::string& name) {
        const auto v = check_iia(rule(name), lhs, rhs, make_alt_set(lhs.universe(), among));
        return py::make_tuple(v.pass, v.vacuous, v.detail);
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("among"), py::arg("rule") = "pairwise");

  m.def(
      "audit_domain",
      [](const std::string& kind, std::size_t size) {
        const auto u = default_universe(size, std::nullopt);
        DomainDescription domain = kind == "full-pc"         ? full_pc_domain(u)
                                   : kind == "transitive-pc" ? transitive_pc_domain(u)
                                   : kind == "dichotomous"   ? dichotomous_domain(u)
                                                             : throw std::invalid_argument("unknown domain '" + kind + "'");
        py::dict out;
        for (const auto& r : audit_richness(domain, {Richness::R1, Richness::R2, Richness::R3, Richness::R4, Richness::R5}))
          out[to_string(r.condition)] = py::make_tuple(r.pass, r.witness);
        return out;
      },
      py::arg("kind"), py::arg("m"), "Condition name -> (pass, witness).");
}
