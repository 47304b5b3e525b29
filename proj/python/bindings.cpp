#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bigrass/bigrassmannian.hpp"
#include "bigrass/cells.hpp"
#include "bigrass/fulton.hpp"
#include "bigrass/hecke.hpp"
#include "bigrass/homology.hpp"
#include "bigrass/io.hpp"
#include "bigrass/tetrahedron.hpp"

namespace py = pybind11;
using namespace bigrass;

namespace {

// Accept a Permutation, a one-line sequence, or a string in either syntax.
Permutation coerce(const py::handle& obj, std::optional<int> rank = std::nullopt) {
  if (py::isinstance<Permutation>(obj)) return obj.cast<Permutation>();
  if (py::isinstance<py::str>(obj)) return parse_permutation(obj.cast<std::string>(), rank);
  return Permutation(obj.cast<std::vector<int>>());
}

py::tuple point(const GradedSimple& g) { return py::make_tuple(g.i(), g.j(), g.shift); }

}  // namespace

PYBIND11_MODULE(_bigrass, m) {
  m.doc() = "Bigrassmannian permutations, the penultimate KL cell of S_n and socles of Verma cokernels.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::overflow_error& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::vector<int>& word) { return Permutation(word); }), py::arg("one_line"))
      .def_static("parse", &parse_permutation, py::arg("text"), py::arg("rank") = py::none(),
                  "Parse \"5,2,4,1,3\", \"s1 s2 s1\" (needs rank) or \"e\" (needs rank).")
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("longest", &Permutation::longest, py::arg("n"))
      .def_static("from_word", [](int n, const std::vector<int>& gens) { return Permutation::from_word(n, gens); },
                  py::arg("n"), py::arg("generators"))
      .def_property_readonly("rank", &Permutation::rank)
      .def("one_line", &Permutation::one_line)
      .def("inverse", &Permutation::inverse)
      .def("__call__", [](const Permutation& w, int i) {
        if (i < 1 || i > w.rank()) throw py::index_error("position out of range");
        return w(i);
      })
      .def("__len__", &Permutation::rank)
      .def("__mul__", &compose)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", &Permutation::hash)
      .def("__str__", &format_one_line)
      .def("__repr__", [](const Permutation& w) { return "Permutation([" + format_one_line(w) + "])"; });

  m.def("length", [](const py::object& w) { return length(coerce(w)); }, py::arg("w"));
  m.def("descents", [](const py::object& w, const std::string& side) {
        if (side != "left" && side != "right") throw py::value_error("side must be 'left' or 'right'");
        return descents(coerce(w), side == "left" ? Side::left : Side::right);
      },
      py::arg("w"), py::arg("side") = "right");
  m.def("reduced_word", [](const py::object& w) { return reduced_word(coerce(w)); }, py::arg("w"));
  m.def("format_word", [](const py::object& w) { return format_word(coerce(w)); }, py::arg("w"));
  m.def("bruhat_leq", [](const py::object& u, const py::object& w) { return bruhat_leq(coerce(u), coerce(w)); },
        py::arg("u"), py::arg("w"));
  m.def("is_bigrassmannian", [](const py::object& w) { return is_bigrassmannian(coerce(w)); }, py::arg("w"));

  m.def("essential_set", [](const py::object& w) {
        std::vector<py::tuple> out;
        for (const auto& e : essential_set(coerce(w))) out.push_back(py::make_tuple(e.row, e.col, e.corank));
        return out;
      },
      py::arg("w"), "Essential set as (row, column, co-rank) triples.");

  m.def("socle_graded", [](const py::object& w, const py::object& v) {
        const auto top = coerce(w);
        const auto socle = v.is_none() ? socle_graded(top) : socle_between(coerce(v, top.rank()), top);
        std::vector<py::tuple> out;
        for (const auto& g : socle) out.push_back(point(g));
        return out;
      },
      py::arg("w"), py::arg("v") = py::none(),
      "Graded socle of D_e/D_w (or D_v/D_w) as (i, j, shift) triples.");

  m.def("kl_polynomial", [](const py::object& x, const py::object& w) {
        return kl_polynomial(coerce(x), coerce(w)).to_string();
      },
      py::arg("x"), py::arg("w"), "p_{x,w} from the Hecke algebra, as a string such as \"v^5 + v^3\".");
  m.def("mu", [](const py::object& x, const py::object& y) { return mu(coerce(x), coerce(y)); }, py::arg("x"),
        py::arg("y"));
  m.def("closed_form_p", [](int n, int i, int j) { return closed_form_p(n, i, j).to_string(); }, py::arg("n"),
        py::arg("i"), py::arg("j"));

  m.def("penultimate_cell", [](int n) {
        std::vector<py::dict> out;
        for (const auto& c : penultimate_cell(n)) {
          py::dict d;
          d["i"] = c.i;
          d["j"] = c.j;
          d["perm"] = c.perm;
          out.push_back(d);
        }
        return out;
      },
      py::arg("n"));

  m.def("enumerate_bigrassmannian", &enumerate_bigrassmannian, py::arg("n"));
  m.def("b_element", [](int n, int i, int j, int k) { return b_element({n, i, j, k}); }, py::arg("n"), py::arg("i"),
        py::arg("j"), py::arg("k"));
  m.def("triple_of", [](const py::object& w) {
        const auto t = triple_of(coerce(w));
        return py::make_tuple(t.i, t.j, t.k);
      },
      py::arg("w"));

  m.def("ext1_dimension", [](const py::object& x, const py::object& y, const std::vector<int>& walls) {
        const auto a = coerce(x);
        const auto b = coerce(y, a.rank());
        if (walls.empty()) return ext1_dimension(a, b);
        return ext1_dimension_singular(a, b, WallSet(a.rank(), walls));
      },
      py::arg("x"), py::arg("y"), py::arg("walls") = std::vector<int>{});

  m.def("tetrahedron_json", [](int n, const py::object& w) {
        std::optional<Permutation> highlight;
        if (!w.is_none()) highlight = coerce(w, n);
        return tetrahedron_json(build_tetrahedron(n, highlight)).dump();
      },
      py::arg("n"), py::arg("w") = py::none());
}
