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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "polylat/error.hpp"
#include "polylat/genlattice.hpp"
#include "polylat/graphs.hpp"
#include "polylat/io.hpp"
#include "polylat/minors.hpp"
#include "polylat/posets.hpp"
#include "polylat/verify.hpp"

namespace polylat::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kPolymatroid, kGraph, kPoset, kGenLattice };

Format format_of(const std::string& path) {
  auto ends_with = [&](const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".pm")) return Format::kPolymatroid;
  if (ends_with(".g")) return Format::kGraph;
  if (ends_with(".pos")) return Format::kPoset;
  if (ends_with(".gl")) return Format::kGenLattice;
  throw UsageError(path + ": unknown file type (expected .pm, .g, .pos or .gl)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Polymatroid load_polymatroid(const std::string& path) {
  if (format_of(path) != Format::kPolymatroid) throw UsageError(path + ": expected a .pm file");
  return parse_polymatroid(read_file(path));
}

// A genlattice read from any format, with the ground labeling that ground
// indexed minor operations refer to.
struct LoadedGenLattice {
  GenLattice gl;
  std::map<std::string, ElementId> labeling;
};

LoadedGenLattice load_genlattice(const std::string& path) {
  const std::string text = read_file(path);
  switch (format_of(path)) {
    case Format::kGenLattice: {
      GenLattice gl = parse_genlattice(text);
      std::map<std::string, ElementId> labeling;
      for (ElementId g : gl.gens()) labeling.emplace(gl.lattice().label(g), g);
      return {std::move(gl), std::move(labeling)};
    }
    case Format::kPolymatroid: {
      const Polymatroid p = parse_polymatroid(text);
      if (auto bad = validate(p); !bad.empty()) {
        throw InvariantError("not a polymatroid: " + describe(bad.front(), p.ground()));
      }
      FlatsGenLattice fg = flats_genlattice(p);
      std::map<std::string, ElementId> labeling;
      for (std::size_t e = 0; e < p.size(); ++e) labeling.emplace(p.ground().label(e), fg.theta.assign()[e]);
      return {fg.gl(), std::move(labeling)};
    }
    case Format::kGraph: {
      GraphFlatsLattice flats = graph_flats(parse_graph(text));
      std::map<std::string, ElementId> labeling;
      for (std::size_t e = 0; e < flats.simple.edge_count(); ++e) {
        const auto atom = flats.gl.lattice().find(component_partition(flats.simple, singleton(e)).to_string());
        labeling.emplace("e" + std::to_string(e + 1), *atom);
      }
      return {std::move(flats.gl), std::move(labeling)};
    }
    case Format::kPoset: {
      const Poset p = parse_poset(text);
      IdealLattice il = ideal_lattice(p);
      auto labeling = principal_labeling(p, il);
      return {std::move(il.gl), std::move(labeling)};
    }
  }
  throw UsageError(path + ": unsupported input");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("POLYLAT_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("POLYLAT_SEED is not an unsigned integer: ") + env);
  }
}

std::string flat_kind(bool is_gen) { return is_gen ? " generator" : ""; }

int cmd_validate(const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  switch (format_of(path)) {
    case Format::kPolymatroid: {
      const Polymatroid p = parse_polymatroid(text);
      const auto violations = validate(p);
      for (const auto& v : violations) out << "violation: " << describe(v, p.ground()) << "\n";
      if (!violations.empty()) return kExitFailed;
      break;
    }
    case Format::kGraph:
      parse_graph(text);
      break;
    case Format::kPoset:
      parse_poset(text);
      break;
    case Format::kGenLattice:
      parse_genlattice(text);
      break;
  }
  out << "valid\n";
  return kExitOk;
}

int cmd_closure(const std::string& path, const std::optional<std::string>& set, std::ostream& out) {
  const Polymatroid p = load_polymatroid(path);
  if (set) {
    const SubsetMask x = p.ground().parse(*set);
    out << p.ground().format(closure(p, x)) << "\n";
    return kExitOk;
  }
  const ClosureTable table = closure_table(p);
  for (SubsetMask x : subset_iter(p.ground())) {
    out << "cl " << p.ground().format(x) << " = " << p.ground().format(table(x)) << "\n";
  }
  return kExitOk;
}

int cmd_flats(const std::string& path, std::ostream& out) {
  const LoadedGenLattice loaded = load_genlattice(path);
  const FinLattice& l = loaded.gl.lattice();
  for (ElementId x = 0; x < l.size(); ++x) out << l.label(x) << flat_kind(loaded.gl.is_gen(x)) << "\n";
  out << "flats=" << l.size() << " generators=" << loaded.gl.gens().size() << "\n";
  return kExitOk;
}

int cmd_diagram(const std::string& path, bool hasse, bool graph, std::ostream& out) {
  if (graph) {
    if (format_of(path) != Format::kGraph) throw UsageError("--graph needs a .g file");
    out << graph_dot(parse_graph(read_file(path)));
    return kExitOk;
  }
  const LoadedGenLattice loaded = load_genlattice(path);
  out << (hasse ? hasse_dot(loaded.gl.lattice()) : diagram_dot(loaded.gl));
  return kExitOk;
}

int cmd_minor(const std::string& path, const std::vector<std::string>& op_texts, std::ostream& out) {
  const LoadedGenLattice loaded = load_genlattice(path);
  std::vector<MinorOp> ops;
  for (const auto& text : op_texts) ops.push_back(parse_minor_op(text));
  const MinorHandle h = minor_normal_form(loaded.gl, ops, loaded.labeling);
  out << "# minor " << to_string(h, loaded.gl.lattice()) << "\n";
  out << print_genlattice(materialize(loaded.gl, h).gl);
  return kExitOk;
}

int cmd_enumerate(const std::string& path, bool count_only, std::ostream& out) {
  const LoadedGenLattice loaded = load_genlattice(path);
  if (!count_only) {
    for_each_minor(loaded.gl, [&](const MinorHandle& h) { out << to_string(h, loaded.gl.lattice()) << "\n"; });
  }
  out << "count=" << count_minors(loaded.gl) << "\n";
  return kExitOk;
}

int cmd_realize(const std::string& path, std::ostream& out) {
  out << print_polymatroid(realize(load_genlattice(path).gl));
  return kExitOk;
}

std::string format_ms(double ms, bool timing) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", timing ? ms : 0.0);
  return buf;
}

// Checks one theorem on the instance in `path`.
int verify_file(const std::string& theorem, const std::string& path, bool timing, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_file(path);
  const Format format = format_of(path);
  auto need = [&](Format f, const char* ext) {
    if (format != f) throw UsageError("theorem " + theorem + " needs a " + ext + " file");
  };
  BijectionCheck c;
  if (theorem == "graph-minors") {
    need(Format::kGraph, ".g");
    c = verify_graph_minor_bijection(parse_graph(text));
  } else if (theorem == "order-minors") {
    need(Format::kPoset, ".pos");
    c = verify_order_minor_bijection(parse_poset(text));
  } else if (theorem == "parallel-pairs" || theorem == "closure-theorem" || theorem == "minor-closure" ||
             theorem == "submod-equiv") {
    need(Format::kPolymatroid, ".pm");
    const Polymatroid p = parse_polymatroid(text);
    if (theorem == "submod-equiv") {
      c = verify_submodularity_equivalence(p);
    } else if (auto bad = validate(p); !bad.empty()) {
      throw InvariantError("not a polymatroid: " + describe(bad.front(), p.ground()));
    } else if (theorem == "parallel-pairs") {
      c = verify_parallel_pairs_bijection(p);
    } else if (theorem == "closure-theorem") {
      c = verify_closure_theorem(p);
      if (c.verdict) c = verify_closure_theorem(flats_genlattice(p).theta);
    } else {
      c = verify_minor_closure(p);
    }
  } else if (theorem == "geometric-minors" || theorem == "realization" || theorem == "weighting" ||
             theorem == "distr-no-paras") {
    const GenLattice gl = load_genlattice(path).gl;
    if (theorem == "geometric-minors") {
      c = verify_geometric_minors(gl);
    } else if (theorem == "realization") {
      c = verify_realization(gl);
    } else if (theorem == "weighting") {
      c = verify_weighting(gl.lattice());
    } else {
      const Verdict paras = check_distr_no_paras(gl.lattice());
      const bool distributive = is_distributive(gl.lattice()).holds;
      c = {distributive ? 1u : 0u, paras.holds ? 1u : 0u, {}};
      if (distributive && !paras) c.verdict = Verdict::fail(paras.witness);
    }
  } else {
    throw UsageError("unknown theorem id '" + theorem + "'");
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const char* status = c.verdict ? "pass" : "fail";
  out << "theorem=" << theorem << " instance=" << path << " status=" << status << " lhs=" << c.lhs
      << " rhs=" << c.rhs << " ms=" << format_ms(ms, timing) << "\n";
  if (!c.verdict) out << "witness: " << c.verdict.witness << "\n";
  out << c.lhs << " = " << c.rhs << " " << status << "\n";
  return c.verdict ? kExitOk : kExitFailed;
}

int cmd_verify(const std::string& theorem, const std::optional<std::string>& path, SuiteOptions options,
               bool timing, std::ostream& out) {
  if (path) return verify_file(theorem, *path, timing, out);
  if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end()) {
    throw UsageError("unknown theorem id '" + theorem + "'");
  }
  auto reports = run_suite(theorem, options);
  bool all = true;
  for (auto& r : reports) {
    if (!timing) r.ms = 0;
    out << format_report_line(r) << "\n";
    all = all && r.pass;
  }
  out << format_summary(reports) << "\n";
  return all ? kExitOk : kExitFailed;
}

int cmd_random(const std::string& kind, std::uint64_t seed, std::size_t size, std::ostream& out) {
  static const std::map<std::string, std::pair<InstanceKind, std::size_t>> kinds = {
      {"polymatroid", {InstanceKind::kPolymatroid, 4}}, {"lattice", {InstanceKind::kLattice, 16}},
      {"genlattice", {InstanceKind::kGenLattice, 16}},  {"poset", {InstanceKind::kPoset, 5}},
      {"graph", {InstanceKind::kGraph, 5}}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw UsageError("unknown instance kind '" + kind + "'");
  const Instance instance = random_instance({seed, it->second.first, size ? size : it->second.second});
  if (auto* p = std::get_if<Polymatroid>(&instance)) out << print_polymatroid(*p);
  if (auto* l = std::get_if<FinLattice>(&instance)) out << print_genlattice(GenLattice(*l, join_irreducibles(*l)));
  if (auto* gl = std::get_if<GenLattice>(&instance)) out << print_genlattice(*gl);
  if (auto* p = std::get_if<Poset>(&instance)) out << print_poset(*p);
  if (auto* g = std::get_if<LabeledGraph>(&instance)) out << print_graph(*g);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with polymatroids and generator-enriched lattices", "polylat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file;
  std::optional<std::string> set;
  std::vector<std::string> ops;
  std::string theorem;
  std::optional<std::string> verify_path;
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t jobs = 1;
  std::size_t size = 0;
  bool hasse = false;
  bool graph = false;
  bool count_only = false;
  bool no_time = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a file; for .pm files check the polymatroid axioms");
  validate_cmd->add_option("file", file, "Input file")->required();

  auto* closure_cmd = app.add_subcommand("closure", "Closure table of a polymatroid");
  closure_cmd->add_option("file", file, "Polymatroid (.pm)")->required();
  closure_cmd->add_option("--set", set, "Print only the closure of this set, e.g. {1,2}");

  auto* flats_cmd = app.add_subcommand("flats", "Elements of the generator-enriched lattice of flats");
  flats_cmd->add_option("file", file, "Input file")->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "Graphviz diagram of the genlattice");
  diagram_cmd->add_option("file", file, "Input file")->required();
  diagram_cmd->add_flag("--hasse", hasse, "Draw only the Hasse diagram");
  diagram_cmd->add_flag("--graph", graph, "Draw the graph itself (.g input)");

  auto* minor_cmd = app.add_subcommand("minor", "Apply deletions and contractions");
  minor_cmd->add_option("file", file, "Input file")->required();
  minor_cmd->add_option("--op", ops,
                        "delete:a,b  contract:a  restrict:a,b  (generators by element label), "
                        "the same with -ground (ground labels), delete-at:x  contract-at:x")
      ->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate-minors", "List every minor as <kept | apex>");
  enumerate_cmd->add_option("file", file, "Input file")->required();
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the number of minors");

  auto* realize_cmd = app.add_subcommand("realize", "Integer polymatroid realizing a genlattice");
  realize_cmd->add_option("file", file, "Input file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem on a file or on seeded random instances");
  verify_cmd->add_option("theorem", theorem, "Theorem id")->required();
  verify_cmd->add_option("file", verify_path, "Instance file; random instances when omitted");
  verify_cmd->add_option("--seed", seed, "First seed (default: $POLYLAT_SEED or 1)");
  verify_cmd->add_option("--count", count, "Number of random instances")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--size", size, "Instance size bound (0: theorem default)");
  verify_cmd->add_flag("--no-time", no_time, "Print ms=0.000 for reproducible output");

  auto* random_cmd = app.add_subcommand("random", "Print a seeded random instance");
  random_cmd->add_option("kind", kind, "polymatroid, lattice, genlattice, poset or graph")->required();
  random_cmd->add_option("--seed", seed, "Seed (default: $POLYLAT_SEED or 1)");
  random_cmd->add_option("--size", size, "Size bound (0: default for the kind)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const bool seed_given = (verify_cmd->parsed() && verify_cmd->count("--seed") > 0) ||
                            (random_cmd->parsed() && random_cmd->count("--seed") > 0);
    if (!seed_given) seed = default_seed();
    if (validate_cmd->parsed()) return cmd_validate(file, out);
    if (closure_cmd->parsed()) return cmd_closure(file, set, out);
    if (flats_cmd->parsed()) return cmd_flats(file, out);
    if (diagram_cmd->parsed()) return cmd_diagram(file, hasse, graph, out);
    if (minor_cmd->parsed()) return cmd_minor(file, ops, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(file, count_only, out);
    if (realize_cmd->parsed()) return cmd_realize(file, out);
    if (verify_cmd->parsed()) return cmd_verify(theorem, verify_path, {seed, count, jobs, size}, !no_time, out);
    if (random_cmd->parsed()) return cmd_random(kind, seed, size, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << (verify_path ? *verify_path : file) << ": " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace polylat::cli
