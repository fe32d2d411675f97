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

#include "plp/core.hpp"

#include <sstream>

namespace plp {

std::string subset_to_string(Subset a) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (a >> i & 1u) {
      if (!first) out << ',';
      out << i + 1;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

std::string vector_to_string(const ExponentVector& u) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out << ',';
    out << u[i];
  }
  out << ')';
  return out.str();
}

}  // namespace plp
