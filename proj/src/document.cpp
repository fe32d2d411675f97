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

#include "plp/document.hpp"

#include <fstream>
#include <sstream>

namespace plp {
namespace {

struct Line {
  int number = 0;
  std::string keyword;
  std::vector<std::string> args;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    if (!(ls >> line.keyword)) continue;
    std::string tok;
    while (ls >> tok) line.args.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(line.number, "expected an integer, got '" + tok + "'");
  }
}

std::vector<int> parse_ints(const Line& line, std::size_t expected) {
  if (line.args.size() != expected)
    fail(line.number, "'" + line.keyword + "' expects " + std::to_string(expected) + " values");
  std::vector<int> out;
  out.reserve(expected);
  for (const auto& tok : line.args) out.push_back(parse_int(line, tok));
  return out;
}

}  // namespace

SpecDocument parse_document(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw InputError("line 1: empty document");
  const Line& head = lines.front();
  if (head.keyword != "polymatroid" || head.args.size() != 1)
    fail(head.number, "expected header 'polymatroid plp|bases|transversal'");
  const std::string kind = head.args[0];

  std::optional<std::string> name;
  int n = -1, d = -1;
  std::vector<int> a, b, alpha, beta;
  std::vector<ExponentVector> base_rows;
  std::vector<std::pair<int, int>> factors;

  for (std::size_t t = 1; t < lines.size(); ++t) {
    const Line& line = lines[t];
    if (line.keyword == "name") {
      std::string joined;
      for (const auto& tok : line.args) joined += (joined.empty() ? "" : " ") + tok;
      name = joined;
    } else if (line.keyword == "n") {
      n = parse_ints(line, 1)[0];
      if (n < 1) fail(line.number, "n must be positive");
    } else if (line.keyword == "d" && kind == "plp") {
      d = parse_ints(line, 1)[0];
    } else if (kind == "plp" &&
               (line.keyword == "a" || line.keyword == "b" || line.keyword == "alpha" ||
                line.keyword == "beta")) {
      if (n < 1) fail(line.number, "'n' must come before the bound vectors");
      auto vals = parse_ints(line, static_cast<std::size_t>(n));
      if (line.keyword == "a") a = vals;
      else if (line.keyword == "b") b = vals;
      else if (line.keyword == "alpha") alpha = vals;
      else beta = vals;
    } else if (kind == "bases" && line.keyword == "base") {
      if (n < 1) fail(line.number, "'n' must come before 'base' lines");
      auto vals = parse_ints(line, static_cast<std::size_t>(n));
      for (int v : vals)
        if (v < 0) fail(line.number, "base entries must be non-negative");
      base_rows.push_back(std::move(vals));
    } else if (kind == "transversal" && line.keyword == "factor") {
      auto vals = parse_ints(line, 2);
      factors.emplace_back(vals[0], vals[1]);
    } else {
      fail(line.number, "unexpected keyword '" + line.keyword + "' for kind '" + kind + "'");
    }
  }

  const int tail = lines.back().number;
  try {
    if (kind == "plp") {
      if (n < 1) fail(tail, "missing 'n'");
      if (d < 0) fail(tail, "missing 'd'");
      if (a.empty() || b.empty() || alpha.empty() || beta.empty())
        fail(tail, "plp documents need all of a, b, alpha, beta");
      return SpecDocument{PlpSpec(n, d, a, b, alpha, beta), name};
    }
    if (kind == "bases") {
      if (n < 1) fail(tail, "missing 'n'");
      if (base_rows.empty()) fail(tail, "no 'base' lines");
      return SpecDocument{BaseSet(n, base_rows), name};
    }
    if (kind == "transversal") {
      if (n < 1) fail(tail, "missing 'n'");
      if (factors.empty()) fail(tail, "no 'factor' lines");
      TransversalPresentation t{n, factors};
      for (const auto& [s, e] : factors)
        if (s < 1 || s > e || e > n) fail(tail, "factor interval out of range");
      return SpecDocument{t, name};
    }
  } catch (const InputError& err) {
    // Re-tag semantic errors from the value constructors with a line anchor.
    std::string what = err.what();
    if (what.rfind("line ", 0) == 0) throw;
    fail(tail, what);
  }
  fail(head.number, "unknown document kind '" + kind + "'");
}

SpecDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const InputError& err) {
    throw InputError(path + ": " + err.what());
  }
}

namespace {

void print_row(std::ostringstream& out, const char* key, const std::vector<int>& v) {
  out << key;
  for (int x : v) out << ' ' << x;
  out << '\n';
}

}  // namespace

std::string print_spec(const PlpSpec& spec) {
  std::ostringstream out;
  out << "polymatroid plp\n";
  out << "n " << spec.n() << '\n';
  out << "d " << spec.d() << '\n';
  print_row(out, "a", spec.lower());
  print_row(out, "b", spec.upper());
  print_row(out, "alpha", spec.prefix_min());
  print_row(out, "beta", spec.prefix_max());
  return out.str();
}

std::string print_bases(const BaseSet& b) {
  std::ostringstream out;
  out << "polymatroid bases\n";
  out << "n " << b.ground_size() << '\n';
  for (const auto& u : b.vectors()) print_row(out, "base", u);
  return out.str();
}

std::string print_transversal(const TransversalPresentation& t) {
  std::ostringstream out;
  out << "polymatroid transversal\n";
  out << "n " << t.n << '\n';
  for (const auto& [s, e] : t.factors) out << "factor " << s << ' ' << e << '\n';
  return out.str();
}

std::string print_document(const SpecDocument& doc) {
  std::string body;
  if (doc.is_plp()) body = print_spec(doc.plp());
  else if (doc.is_bases()) body = print_bases(doc.bases());
  else body = print_transversal(doc.transversal());
  if (doc.name) {
    auto pos = body.find('\n');
    body.insert(pos + 1, "name " + *doc.name + "\n");
  }
  return body;
}

}  // namespace plp
