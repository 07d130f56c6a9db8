#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyvec/flag_cohomology.hpp"

namespace py = pybind11;
using namespace polyvec;

namespace {

Weight to_weight(const RootSystem& rs, const std::vector<std::int64_t>& coords) {
  if (static_cast<int>(coords.size()) != rs.rank())
    throw std::invalid_argument("weight must have rank " +
                                std::to_string(rs.rank()) + " coordinates");
  return Weight(coords);
}

py::tuple weight_tuple(const Weight& w) {
  py::tuple t(w.rank());
  for (int i = 0; i < w.rank(); ++i) t[i] = w[i];
  return t;
}

py::int_ big_int(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(s.c_str(), nullptr, 10));
}

py::dict character_dict(const CharacterElt& c) {
  py::dict d;
  for (const auto& [w, coeff] : c.sorted_terms()) d[weight_tuple(w)] = coeff;
  return d;
}

py::dict decomposition_dict(const Decomposition& d) {
  py::dict out;
  for (const auto& [w, m] : d.parts()) out[weight_tuple(w)] = m;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character computations for simple Lie groups and "
            "flag-variety polyvector fields";

  py::register_exception<FeasibilityError>(m, "FeasibilityError");
  py::register_exception<OverflowError>(m, "IntegerOverflowError");

  py::class_<RootSystem>(m, "RootSystem")
      .def_static(
          "build",
          [](const std::string& type, int rank) {
            if (type.size() != 1)
              throw std::invalid_argument("type label must be one letter A-G");
            return RootSystem::build(type[0], rank);
          },
          py::arg("type"), py::arg("rank"))
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("type",
                             [](const RootSystem& rs) {
                               return std::string(1, rs.type_label());
                             })
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rho",
                             [](const RootSystem& rs) { return weight_tuple(rs.rho()); })
      .def_property_readonly("w0_word", [](const RootSystem& rs) { return rs.w0_word(); })
      .def_property_readonly("positive_roots",
                             [](const RootSystem& rs) {
                               py::list out;
                               for (const auto& b : rs.positive_roots())
                                 out.append(weight_tuple(b));
                               return out;
                             })
      .def("cartan",
           [](const RootSystem& rs, int i, int j) { return rs.cartan(i, j); })
      .def("simple_reflection",
           [](const RootSystem& rs, int i, const std::vector<std::int64_t>& w) {
             return weight_tuple(rs.simple_reflection(i, to_weight(rs, w)));
           })
      .def("dot_action",
           [](const RootSystem& rs, const std::vector<int>& word,
              const std::vector<std::int64_t>& w) {
             return weight_tuple(rs.dot_act(word, to_weight(rs, w)));
           })
      .def("dominance_leq",
           [](const RootSystem& rs, const std::vector<std::int64_t>& lo,
              const std::vector<std::int64_t>& hi) {
             return rs.dominance_leq(to_weight(rs, lo), to_weight(rs, hi));
           })
      .def("dual_weight",
           [](const RootSystem& rs, const std::vector<std::int64_t>& w) {
             return weight_tuple(rs.dual(to_weight(rs, w)));
           })
      .def("dominant_below",
           [](const RootSystem& rs, const std::vector<std::int64_t>& mu) {
             py::list out;
             for (const auto& w : rs.dominant_below(to_weight(rs, mu)))
               out.append(weight_tuple(w));
             return out;
           })
      .def("__repr__",
           [](const RootSystem& rs) { return "RootSystem(" + rs.name() + ")"; });

  m.def("irreducible_character",
        [](const RootSystem& rs, const std::vector<std::int64_t>& lambda) {
          return character_dict(irreducible_character(rs, to_weight(rs, lambda)));
        },
        py::arg("rs"), py::arg("highest_weight"),
        "Weight multiplicities of V(lambda) as {coords: multiplicity}");

  m.def("rho_character",
        [](const RootSystem& rs) { return character_dict(rho_character(rs)); });

  m.def("freudenthal_character",
        [](const RootSystem& rs, const std::vector<std::int64_t>& lambda) {
          return character_dict(freudenthal_character(rs, to_weight(rs, lambda)));
        });

  m.def("weyl_dimension",
        [](const RootSystem& rs, const std::vector<std::int64_t>& lambda) {
          return big_int(weyl_dimension(rs, to_weight(rs, lambda)));
        });

  m.def("tensor_character",
        [](const RootSystem& rs, const std::vector<std::int64_t>& lambda,
           const std::vector<std::int64_t>& mu) {
          return character_dict(
              tensor_character(rs, to_weight(rs, lambda), to_weight(rs, mu)));
        });

  m.def("decompose_tensor",
        [](const RootSystem& rs, const std::vector<std::int64_t>& lambda,
           const std::vector<std::int64_t>& mu) {
          return decomposition_dict(decompose(
              rs, tensor_character(rs, to_weight(rs, lambda), to_weight(rs, mu))));
        },
        py::arg("rs"), py::arg("lambda_"), py::arg("mu"),
        "Irreducible multiplicities of V(lambda) (x) V(mu)");

  m.def("euler_characteristic",
        [](const RootSystem& rs, const py::dict& character) {
          CharacterElt ch(rs.rank());
          for (const auto& item : character) {
            auto coords = item.first.cast<std::vector<std::int64_t>>();
            ch.add_term(to_weight(rs, coords), item.second.cast<std::int64_t>());
          }
          return character_dict(euler_characteristic(rs, ch));
        },
        py::arg("rs"), py::arg("character"),
        "chi_T of L(M) from ch(M) given as {coords: multiplicity}");

  m.def("polyvector_euler_decomposition",
        [](const RootSystem& rs, bool force) {
          return decomposition_dict(polyvector_euler_decomposition(rs, force));
        },
        py::arg("rs"), py::arg("force") = false);

  m.def("bwb_line_bundle",
        [](const RootSystem& rs, const std::vector<std::int64_t>& lambda)
            -> py::object {
          const BwbResult r = bwb_line_bundle(rs, to_weight(rs, lambda));
          if (r.vanishes) return py::none();
          return py::make_tuple(r.degree, weight_tuple(r.dual_highest_weight));
        },
        py::arg("rs"), py::arg("weight"),
        "None if all cohomology vanishes, else (degree, dual highest weight)");

  m.def("verify_kostant",
        [](const RootSystem& rs, bool force) {
          const KostantReport k = verify_kostant(rs, force);
          py::dict out;
          out["conjecture_holds"] = k.conjecture_holds;
          out["multiplicities"] = decomposition_dict(k.multiplicities);
          py::list cex;
          for (const auto& w : k.counterexamples) cex.append(weight_tuple(w));
          out["counterexamples"] = cex;
          return out;
        },
        py::arg("rs"), py::arg("force") = false);

  m.def("wahl_h0", [](const RootSystem& rs) {
    return decomposition_dict(wahl_h0(rs));
  });

  m.def("top_polyvector_check",
        [](const RootSystem& rs) { return top_polyvector_check(rs); });
}
