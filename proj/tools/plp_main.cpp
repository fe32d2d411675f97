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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "plp/corpus.hpp"
#include "plp/document.hpp"
#include "plp/exchange.hpp"
#include "plp/formulas.hpp"
#include "plp/gorenstein.hpp"
#include "plp/lattice_path.hpp"
#include "plp/monomial_ideal.hpp"
#include "plp/oracles.hpp"
#include "plp/plp_spec.hpp"
#include "plp/rank.hpp"
#include "plp/sorting.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string file;
  std::string kind = "two_sided";
  int power = 1;
  int max_power = 8;
  bool empirical = false;
  std::int64_t max_bases = plp::kDefaultMaxBases;
  int max_subsets = plp::kDefaultSubsetBound;
  // verify
  std::string corpus = "random";
  int n = 5;
  int d = 5;
  int count = 100;
  std::uint64_t seed = 1;
};

plp::BaseSet bases_of(const plp::SpecDocument& doc, std::int64_t max_bases) {
  if (doc.is_bases()) return doc.bases();
  if (doc.is_plp()) return plp::generate_bases(doc.plp(), max_bases);
  return plp::generate_bases(plp::transversal_to_lp(doc.transversal()), max_bases);
}

plp::PlpSpec spec_of(const plp::SpecDocument& doc) {
  if (doc.is_plp()) return doc.plp();
  if (doc.is_transversal()) return plp::transversal_to_lp(doc.transversal());
  throw plp::InputError("this subcommand needs a plp or transversal document");
}

int run_bases(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  std::cout << plp::print_bases(bases_of(doc, opt.max_bases));
  return kExitOk;
}

int run_check_exchange(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  plp::BaseSet b = bases_of(doc, opt.max_bases);
  auto kind = plp::exchange_kind_from_string(opt.kind);
  if (kind != plp::ExchangeKind::kSymmetric && !plp::is_base_set(b)) {
    std::cout << "not a base set (symmetric exchange fails)\n";
    return kExitOk;
  }
  auto result = plp::check_exchange(b, kind);
  std::cout << plp::to_string(kind) << ": " << (result.holds ? "true" : "false") << '\n';
  if (result.counterexample) {
    const auto& w = *result.counterexample;
    std::cout << "counterexample: u=" << plp::vector_to_string(w.u)
              << " v=" << plp::vector_to_string(w.v) << " i=" << w.index << '\n';
  }
  return kExitOk;
}

int run_classify(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  auto normalized = plp::normalize(spec_of(doc));
  if (plp::modulus(normalized.shift) > 0)
    std::cout << "shift " << plp::vector_to_string(normalized.shift) << '\n';
  auto cls = plp::classify(normalized.spec);
  std::cout << "families:";
  for (auto family : cls.tags) {
    std::cout << ' ' << plp::to_string(family);
    if (family == plp::Family::kLeft) std::cout << "(k=" << cls.left_k << ')';
    if (family == plp::Family::kRight) std::cout << "(k=" << cls.right_k << ')';
  }
  std::cout << '\n';
  return kExitOk;
}

plp::PlpSpec powered_spec(const plp::SpecDocument& doc, int power) {
  plp::PlpSpec spec = spec_of(doc);
  return power <= 1 ? spec : plp::power_spec(spec, power);
}

int run_depth(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  auto report = plp::depth_formula(powered_spec(doc, opt.power), opt.max_bases);
  std::cout << "depth " << report.depth << "  (family " << plp::to_string(report.family);
  if (report.argmax) std::cout << ", max N = " << report.max_slack;
  std::cout << ")\n";
  return kExitOk;
}

void check_subset_guard(const plp::PlpSpec& spec, const Options& opt) {
  if (spec.n() > opt.max_subsets)
    throw plp::ResourceError("ground set larger than --max-subsets");
}

int run_ass(const Options& opt, bool at_infinity) {
  auto doc = plp::load_document(opt.file);
  check_subset_guard(spec_of(doc), opt);
  plp::AssReport report = at_infinity ? plp::ass_infinity(powered_spec(doc, 1))
                                      : plp::ass_formula(powered_spec(doc, opt.power));
  for (const auto& entry : report.entries)
    std::cout << plp::subset_to_string(entry.support) << "  (clause " << entry.clause << ")\n";
  return kExitOk;
}

int run_stab(const Options& opt, bool depth_kind) {
  auto doc = plp::load_document(opt.file);
  plp::PlpSpec spec = spec_of(doc);
  try {
    int value = depth_kind ? plp::dstab_formula(spec) : plp::astab_formula(spec);
    std::cout << (depth_kind ? "dstab " : "astab ") << value << '\n';
    return kExitOk;
  } catch (const plp::InputError&) {
    if (!opt.empirical) throw;
  }
  // Bounded oracle sweep for families without a closed form.
  std::vector<int> depths;
  std::vector<std::set<plp::Subset>> asses;
  for (int m = 1; m <= opt.max_power; ++m) {
    plp::MonomialIdeal ideal = plp::MonomialIdeal::from_base_set(
        plp::generate_bases(plp::power_spec(spec, m), opt.max_bases));
    if (depth_kind)
      depths.push_back(plp::linear_quotient_depth(ideal, plp::MonomialOrder::kLex).depth);
    else
      asses.push_back(plp::ass_bruteforce(ideal));
  }
  int stable = opt.max_power;
  for (int m = opt.max_power - 1; m >= 1; --m) {
    bool same = depth_kind ? depths[m - 1] == depths[opt.max_power - 1]
                           : asses[m - 1] == asses[opt.max_power - 1];
    if (!same) break;
    stable = m;
  }
  std::cout << (depth_kind ? "dstab " : "astab ") << stable << "  (empirical, powers up to "
            << opt.max_power << ")\n";
  return kExitOk;
}

int run_decompose(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  plp::PlpSpec spec = powered_spec(doc, opt.power);
  check_subset_guard(spec, opt);
  auto comps = plp::primary_decomposition(spec, opt.max_bases);
  for (const auto& comp : comps) std::cout << plp::to_string(comp) << '\n';
  return kExitOk;
}

int run_gorenstein(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  auto normalized = plp::normalize(spec_of(doc));
  auto splp = plp::as_splp(normalized.spec);
  if (!splp) throw plp::InputError("gorenstein: the spec is not of SPLP shape");
  auto result = plp::gorenstein_criterion(*splp);
  std::cout << "gorenstein: " << (result.gorenstein ? "true" : "false");
  if (result.gorenstein) std::cout << "  (common ratio " << result.ratio << ')';
  std::cout << '\n';
  return kExitOk;
}

int run_to_transversal(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  std::cout << plp::print_transversal(plp::lp_to_transversal(spec_of(doc)));
  return kExitOk;
}

int run_to_lp(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  if (!doc.is_transversal())
    throw plp::InputError("to-lp: expected a transversal document");
  std::cout << plp::print_spec(plp::transversal_to_lp(doc.transversal()));
  return kExitOk;
}

int run_power(const Options& opt) {
  auto doc = plp::load_document(opt.file);
  std::cout << plp::print_spec(plp::power_spec(spec_of(doc), opt.power));
  return kExitOk;
}

int run_verify(const Options& opt) {
  if (opt.corpus != "random")
    throw plp::InputError("verify: unknown corpus '" + opt.corpus + "'");
  auto outcome = plp::verify_random_corpus(opt.seed, opt.count, opt.n, opt.d);
  std::cout << outcome.report;
  std::cout << "verified " << outcome.specs_checked << " specs, " << outcome.mismatches
            << " mismatches (seed " << opt.seed << ")\n";
  return outcome.mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pruned lattice path polymatroid toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&opt](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "input document")->required();
  };
  auto add_guards = [&opt](CLI::App* cmd) {
    cmd->add_option("--max-bases", opt.max_bases, "base enumeration guard");
    cmd->add_option("--max-subsets", opt.max_subsets, "subset enumeration guard");
  };

  auto* c_bases = app.add_subcommand("bases", "enumerate the base set");
  add_file(c_bases);
  add_guards(c_bases);

  auto* c_check = app.add_subcommand("check-exchange", "exchange property checks");
  add_file(c_check);
  add_guards(c_check);
  c_check->add_option("--kind", opt.kind,
                      "symmetric|strong|left_strong|right_strong|two_sided");

  auto* c_classify = app.add_subcommand("classify", "family classification");
  add_file(c_classify);

  auto* c_depth = app.add_subcommand("depth", "depth of S/I by the family formula");
  add_file(c_depth);
  add_guards(c_depth);
  c_depth->add_option("--power", opt.power, "evaluate on I^k");

  auto* c_ass = app.add_subcommand("ass", "associated primes by the family formula");
  add_file(c_ass);
  add_guards(c_ass);
  c_ass->add_option("--power", opt.power, "evaluate on I^k");

  auto* c_assinf = app.add_subcommand("ass-inf", "stable associated primes of large powers");
  add_file(c_assinf);
  add_guards(c_assinf);

  auto* c_astab = app.add_subcommand("astab", "power where Ass stabilizes");
  add_file(c_astab);
  c_astab->add_flag("--empirical", opt.empirical, "oracle sweep when no closed form applies");
  c_astab->add_option("--max-power", opt.max_power, "sweep bound for --empirical");
  add_guards(c_astab);

  auto* c_dstab = app.add_subcommand("dstab", "power where depth stabilizes");
  add_file(c_dstab);
  c_dstab->add_flag("--empirical", opt.empirical, "oracle sweep when no closed form applies");
  c_dstab->add_option("--max-power", opt.max_power, "sweep bound for --empirical");
  add_guards(c_dstab);

  auto* c_dec = app.add_subcommand("decompose", "irredundant primary decomposition");
  add_file(c_dec);
  c_dec->add_option("--power", opt.power, "decompose I^k");
  add_guards(c_dec);

  auto* c_gor = app.add_subcommand("gorenstein", "Gorenstein criterion for SPLP shapes");
  add_file(c_gor);

  auto* c_tot = app.add_subcommand("to-transversal", "interval-prime product of an LP spec");
  add_file(c_tot);

  auto* c_tolp = app.add_subcommand("to-lp", "LP spec of a transversal presentation");
  add_file(c_tolp);

  auto* c_pow = app.add_subcommand("power", "scale a spec to its k-th power");
  add_file(c_pow);
  c_pow->add_option("-k,--k", opt.power, "exponent")->required();

  auto* c_verify = app.add_subcommand("verify", "formula-vs-oracle verification driver");
  c_verify->add_option("--corpus", opt.corpus, "corpus kind (random)");
  c_verify->add_option("--n", opt.n, "max ground set size");
  c_verify->add_option("--d", opt.d, "max rank");
  c_verify->add_option("--seed", opt.seed, "random seed");
  c_verify->add_option("--count", opt.count, "number of specs");
  add_guards(c_verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_bases->parsed()) return run_bases(opt);
    if (c_check->parsed()) return run_check_exchange(opt);
    if (c_classify->parsed()) return run_classify(opt);
    if (c_depth->parsed()) return run_depth(opt);
    if (c_ass->parsed()) return run_ass(opt, false);
    if (c_assinf->parsed()) return run_ass(opt, true);
    if (c_astab->parsed()) return run_stab(opt, false);
    if (c_dstab->parsed()) return run_stab(opt, true);
    if (c_dec->parsed()) return run_decompose(opt);
    if (c_gor->parsed()) return run_gorenstein(opt);
    if (c_tot->parsed()) return run_to_transversal(opt);
    if (c_tolp->parsed()) return run_to_lp(opt);
    if (c_pow->parsed()) return run_power(opt);
    if (c_verify->parsed()) return run_verify(opt);
  } catch (const plp::ResourceError& err) {
    std::cerr << "resource guard: " << err.what() << '\n';
    return kExitResource;
  } catch (const plp::InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
