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

#ifndef PLP_DOCUMENT_HPP_
#define PLP_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <variant>

#include "plp/base_set.hpp"
#include "plp/core.hpp"
#include "plp/lattice_path.hpp"
#include "plp/plp_spec.hpp"

namespace plp {

// A parsed input document. Line-oriented format, '#' comments:
//
//   polymatroid plp          polymatroid bases      polymatroid transversal
//   n 5                      n 2                    n 8
//   d 5                      base 1 1               factor 1 3
//   a 0 0 0 0 0                                     factor 1 6
//   b 2 2 3 5 5
//   alpha 0 0 0 2 5
//   beta  4 4 4 4 5
struct SpecDocument {
  std::variant<PlpSpec, BaseSet, TransversalPresentation> payload;
  std::optional<std::string> name;

  bool is_plp() const { return payload.index() == 0; }
  bool is_bases() const { return payload.index() == 1; }
  bool is_transversal() const { return payload.index() == 2; }

  const PlpSpec& plp() const { return std::get<PlpSpec>(payload); }
  const BaseSet& bases() const { return std::get<BaseSet>(payload); }
  const TransversalPresentation& transversal() const {
    return std::get<TransversalPresentation>(payload);
  }
};

// Parses a document; syntax and semantic errors carry the line number.
SpecDocument parse_document(const std::string& text);
SpecDocument load_document(const std::string& path);

std::string print_document(const SpecDocument& doc);
std::string print_spec(const PlpSpec& spec);
std::string print_bases(const BaseSet& b);
std::string print_transversal(const TransversalPresentation& t);

}  // namespace plp

#endif  // PLP_DOCUMENT_HPP_
