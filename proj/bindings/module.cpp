// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plp/corpus.hpp"
#include "plp/document.hpp"
#include "plp/exchange.hpp"
#include "plp/formulas.hpp"
#include "plp/gorenstein.hpp"
#include "plp/lattice_path.hpp"
#include "plp/monomial_ideal.hpp"
#include "plp/oracles.hpp"
#include "plp/plp_spec.hpp"
#include "plp/sorting.hpp"

namespace py = pybind11;

namespace {

std::vector<int> subset_to_list(plp::Subset s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (s >> i & 1u) out.push_back(i + 1);
  return out;
}

plp::BaseSet make_base_set(const std::vector<plp::ExponentVector>& vectors) {
  if (vectors.empty()) throw plp::InputError("base set: empty vector set");
  return plp::BaseSet(static_cast<int>(vectors.front().size()), vectors);
}

}  // namespace

PYBIND11_MODULE(_plp, m) {
  m.doc() = "pruned lattice path polymatroids: exchange checks, depth/Ass formulas, oracles";

  py::register_exception<plp::InputError>(m, "InputError");
  py::register_exception<plp::ResourceError>(m, "ResourceError");

  py::class_<plp::PlpSpec>(m, "PlpSpec")
      .def(py::init<int, int, std::vector<int>, std::vector<int>, std::vector<int>,
                    std::vector<int>>(),
           py::arg("n"), py::arg("d"), py::arg("a"), py::arg("b"), py::arg("alpha"),
           py::arg("beta"))
      .def_property_readonly("n", &plp::PlpSpec::n)
      .def_property_readonly("d", &plp::PlpSpec::d)
      .def_property_readonly("a", &plp::PlpSpec::lower)
      .def_property_readonly("b", &plp::PlpSpec::upper)
      .def_property_readonly("alpha", &plp::PlpSpec::prefix_min)
      .def_property_readonly("beta", &plp::PlpSpec::prefix_max)
      .def("__repr__", [](const plp::PlpSpec& s) { return plp::print_spec(s); });

  m.def("parse_spec", [](const std::string& text) {
    auto doc = plp::parse_document(text);
    if (doc.is_plp()) return doc.plp();
    if (doc.is_transversal()) return plp::transversal_to_lp(doc.transversal());
    throw plp::InputError("expected a plp or transversal document");
  });
  m.def("print_spec", &plp::print_spec);

  m.def("generate_bases", [](const plp::PlpSpec& spec) {
    return plp::generate_bases(spec).vectors();
  });
  m.def("power_spec", &plp::power_spec, py::arg("spec"), py::arg("k"));
  m.def("split_power_generator", &plp::split_power_generator, py::arg("spec"), py::arg("u"),
        py::arg("k"));
  m.def("classify", [](const plp::PlpSpec& spec) {
    std::vector<std::string> tags;
    for (auto f : plp::classify(spec).tags) tags.push_back(plp::to_string(f));
    return tags;
  });

  m.def("is_base_set", [](const std::vector<plp::ExponentVector>& vectors) {
    return plp::is_base_set(make_base_set(vectors));
  });
  m.def("check_exchange",
        [](const std::vector<plp::ExponentVector>& vectors, const std::string& kind) {
          auto result = plp::check_exchange(make_base_set(vectors),
                                            plp::exchange_kind_from_string(kind));
          return result.holds;
        });
  m.def("is_sortable", [](const std::vector<plp::ExponentVector>& vectors) {
    return plp::is_sortable(make_base_set(vectors)).sortable;
  });
  m.def("sort_pair", &plp::sort_pair);
  m.def("sign_sequence", &plp::sign_sequence);
  m.def("is_plp_representable",
        [](const std::vector<plp::ExponentVector>& vectors, bool up_to_permutation) {
          auto r = plp::is_plp_representable(make_base_set(vectors), up_to_permutation);
          return py::make_tuple(r.representable, r.witness_permutation);
        },
        py::arg("vectors"), py::arg("up_to_permutation") = false);

  m.def("depth", [](const plp::PlpSpec& spec) { return plp::depth_formula(spec).depth; });
  m.def("dstab", &plp::dstab_formula);
  m.def("astab", &plp::astab_formula);
  m.def("ass", [](const plp::PlpSpec& spec) {
    std::vector<std::vector<int>> out;
    for (auto s : plp::ass_formula(spec).supports()) out.push_back(subset_to_list(s));
    return out;
  });
  m.def("ass_infinity", [](const plp::PlpSpec& spec) {
    std::vector<std::vector<int>> out;
    for (auto s : plp::ass_infinity(spec).supports()) out.push_back(subset_to_list(s));
    return out;
  });
  m.def("decompose", [](const plp::PlpSpec& spec) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& c : plp::primary_decomposition(spec))
      out.push_back({subset_to_list(c.support), c.exponent});
    return out;
  });
  m.def("ass_oracle", [](const std::vector<plp::ExponentVector>& gens) {
    auto ideal = plp::MonomialIdeal::from_generators(
        gens.empty() ? 0 : static_cast<int>(gens.front().size()), gens);
    std::vector<std::vector<int>> out;
    for (auto s : plp::ass_bruteforce(ideal)) out.push_back(subset_to_list(s));
    return out;
  });
  m.def("depth_oracle", [](const std::vector<plp::ExponentVector>& gens) {
    auto ideal = plp::MonomialIdeal::from_generators(
        gens.empty() ? 0 : static_cast<int>(gens.front().size()), gens);
    return plp::linear_quotient_depth(ideal, plp::MonomialOrder::kLex).depth;
  });

  m.def("gorenstein", [](const plp::PlpSpec& spec) {
    auto splp = plp::as_splp(spec);
    if (!splp) throw plp::InputError("gorenstein: the spec is not of SPLP shape");
    auto r = plp::gorenstein_criterion(*splp);
    return py::make_tuple(r.gorenstein, r.ratio);
  });
  m.def("h_vector", [](const std::vector<plp::ExponentVector>& vectors) {
    return plp::h_vector(make_base_set(vectors));
  });

  m.def("verify", [](std::uint64_t seed, int count, int max_n, int max_d) {
    auto outcome = plp::verify_random_corpus(seed, count, max_n, max_d);
    return py::make_tuple(outcome.specs_checked, outcome.mismatches, outcome.report);
  });
}
