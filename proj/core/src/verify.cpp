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

#include "polylat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "polylat/error.hpp"
#include "polylat/minors.hpp"

namespace polylat {
namespace {

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Union closure of random nonempty subsets of {1..u}. A target size is
// drawn first and subsets are added until the family reaches it, skipping
// any subset that would push it past max_elements. Returns the lattice and
// the ids of the accepted subsets.
std::pair<FinLattice, std::vector<ElementId>> union_closure_lattice(Rng& rng, std::size_t max_elements,
                                                                    std::size_t max_sets) {
  if (max_elements == 0) throw InvariantError("a lattice needs at least one element");
  constexpr std::size_t kTries = 64;
  const std::size_t u = draw(rng, 2, 6);
  const std::size_t target = draw(rng, std::min<std::size_t>(2, max_elements), max_elements);
  std::set<SubsetMask> family{0};
  std::vector<SubsetMask> chosen;
  for (std::size_t a = 0; a < kTries && family.size() < target && chosen.size() < max_sets; ++a) {
    const auto s = static_cast<SubsetMask>(draw(rng, 1, (std::size_t{1} << u) - 1));
    std::set<SubsetMask> next = family;
    for (SubsetMask f : family) next.insert(f | s);
    if (next.size() > max_elements || next.size() == family.size()) continue;
    family = std::move(next);
    chosen.push_back(s);
  }
  const GroundSet ground = GroundSet::numbered(u);
  const std::vector<SubsetMask> sets(family.begin(), family.end());
  std::map<SubsetMask, ElementId> index;
  std::vector<std::string> labels;
  for (SubsetMask s : sets) {
    index.emplace(s, static_cast<ElementId>(labels.size()));
    labels.push_back(ground.format(s));
  }
  const std::size_t m = sets.size();
  std::vector<ElementId> join(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) join[a * m + b] = index.at(sets[a] | sets[b]);
  FinLattice l = FinLattice::from_join_table(std::move(labels), std::move(join));
  std::vector<ElementId> ids;
  for (SubsetMask s : chosen) ids.push_back(*l.find(ground.format(s)));
  return {std::move(l), std::move(ids)};
}

std::vector<Rational> as_rationals(const std::vector<std::int64_t>& xs) {
  return {xs.begin(), xs.end()};
}

StrongSurjection random_surjection_instance(Rng& rng, std::size_t max_ground) {
  const std::size_t n = draw(rng, 1, max_ground);
  GenLattice gl = random_genlattice(rng, 16, draw(rng, (n + 1) / 2, n));
  return random_surjection(rng, gl, n);
}

std::vector<std::string> labels_of(const GroundSet& ground, SubsetMask x) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < ground.size(); ++e)
    if (contains(x, e)) out.push_back(ground.label(e));
  return out;
}

}  // namespace

FinLattice random_lattice(Rng& rng, std::size_t max_elements) {
  return union_closure_lattice(rng, max_elements, kMaxGroundSize).first;
}

GenLattice random_genlattice(Rng& rng, std::size_t max_elements, std::size_t max_gens) {
  auto [l, chosen] = union_closure_lattice(rng, max_elements, max_gens);
  std::vector<ElementId> gens = join_irreducibles(l);
  for (ElementId x = 1; x < l.size(); ++x) {
    if (gens.size() >= max_gens) break;
    if (std::find(gens.begin(), gens.end(), x) == gens.end() && coin(rng, 1.0 / 3)) gens.push_back(x);
  }
  return GenLattice(std::move(l), std::move(gens));
}

StrongSurjection random_surjection(Rng& rng, const GenLattice& gl, std::size_t n) {
  const auto& gens = gl.gens();
  if (n < gens.size()) {
    throw InvariantError("a surjection onto " + std::to_string(gens.size()) +
                         " generators needs at least that many ground elements");
  }
  std::vector<ElementId> assign(gens.begin(), gens.end());
  while (assign.size() < n) {
    if (gens.empty() || coin(rng, 0.25)) {
      assign.push_back(gl.lattice().bottom());
    } else {
      assign.push_back(gens[draw(rng, 0, gens.size() - 1)]);
    }
  }
  std::shuffle(assign.begin(), assign.end(), rng);
  return StrongSurjection(GroundSet::numbered(n), gl, std::move(assign));
}

Polymatroid random_polymatroid(Rng& rng, std::size_t max_ground) {
  if (max_ground == 0 || max_ground > kMaxGroundSize) {
    throw InvariantError("polymatroid size bound must be in 1.." + std::to_string(kMaxGroundSize));
  }
  const StrongSurjection t = random_surjection_instance(rng, max_ground);
  return compose_rank(t, as_rationals(submodular_weighting(t.target().lattice()).integer));
}

Poset random_poset(Rng& rng, std::size_t n) {
  if (n > kMaxGroundSize) throw InvariantError("posets are limited to " + std::to_string(kMaxGroundSize) + " elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, 0.5)) relations.emplace_back(i, j);
  // The Poset keeps the transitive closure; covers() is the reduction.
  return Poset(std::move(labels), relations);
}

LabeledGraph random_graph(Rng& rng, std::size_t n) {
  if (n == 0 || n > kMaxGroundSize) throw InvariantError("graph size bound must be in 1.." + std::to_string(kMaxGroundSize));
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng, 0.5)) edges.emplace_back(u, v);
  return LabeledGraph(std::move(names), std::move(edges));
}

Instance random_instance(const RandomSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.kind) {
    case InstanceKind::kPolymatroid:
      return random_polymatroid(rng, spec.max_size);
    case InstanceKind::kLattice:
      return random_lattice(rng, spec.max_size);
    case InstanceKind::kGenLattice:
      return random_genlattice(rng, spec.max_size, kMaxGroundSize);
    case InstanceKind::kPoset:
      return random_poset(rng, draw(rng, 0, spec.max_size));
    case InstanceKind::kGraph:
      if (spec.max_size == 0) throw InvariantError("graph size bound must be positive");
      return random_graph(rng, draw(rng, 1, spec.max_size));
  }
  throw InvariantError("unknown instance kind");
}

std::vector<ParallelClosedPair> enumerate_parallel_closed_pairs(const Polymatroid& p) {
  std::vector<ParallelClosedPair> out;
  const SubsetMask full = p.ground().full();
  for (SubsetMask f : closure_table(p).flats()) {
    const SubsetMask rest = full & ~f;
    const auto classes = parallel_classes(contract_set(p, f));
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << classes.size()); ++pick) {
      SubsetMask y = 0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        if ((pick >> c) & 1) y |= classes[c];
      out.push_back({f, expand(y, rest)});
    }
  }
  return out;
}

BijectionCheck verify_parallel_pairs_bijection(const Polymatroid& p) {
  const FlatsGenLattice fg = flats_genlattice(p);
  const GenLattice& gl = fg.gl();
  const GroundSet& ground = p.ground();
  const auto& assign = fg.theta.assign();
  std::map<std::string, ElementId> labeling;
  for (std::size_t e = 0; e < ground.size(); ++e) labeling.emplace(ground.label(e), assign[e]);

  std::map<SubsetMask, ElementId> id_of_flat;
  for (ElementId x = 0; x < gl.size(); ++x) id_of_flat.emplace(fg.flat[x], x);

  auto f = [&](const ParallelClosedPair& pair) {
    MinorBuilder b(gl, labeling);
    b.restrict_ground(labels_of(ground, pair.y | pair.f));
    b.contract_ground(labels_of(ground, pair.f));
    return b.handle();
  };
  auto g = [&](const MinorHandle& h) {
    ParallelClosedPair pair{fg.flat[h.apex], 0};
    for (std::size_t y = 0; y < ground.size(); ++y) {
      if (contains(pair.f, y)) continue;
      const ElementId above = gl.lattice().join(h.apex, assign[y]);
      if (std::binary_search(h.kept.begin(), h.kept.end(), above)) pair.y |= singleton(y);
    }
    return pair;
  };
  auto name = [&](const ParallelClosedPair& pair) {
    return "(" + ground.format(pair.f) + ", " + ground.format(pair.y) + ")";
  };

  const auto pairs = enumerate_parallel_closed_pairs(p);
  BijectionCheck out;
  out.lhs = pairs.size();
  out.rhs = count_minors(gl);
  std::set<MinorHandle> seen;
  for (const auto& pair : pairs) {
    const MinorHandle h = f(pair);
    if (h.apex != id_of_flat.at(pair.f)) {
      out.verdict = Verdict::fail("f moves the flat of " + name(pair));
      return out;
    }
    if (!seen.insert(h).second) {
      out.verdict = Verdict::fail("f is not injective at " + name(pair));
      return out;
    }
    if (g(h) != pair) {
      out.verdict = Verdict::fail("g(f" + name(pair) + ") = " + name(g(h)));
      return out;
    }
  }
  for_each_minor(gl, [&](const MinorHandle& h) {
    if (!out.verdict) return;
    if (f(g(h)) != h) {
      out.verdict = Verdict::fail("f(g(K)) differs for K = " + to_string(h, gl.lattice()));
    }
  });
  if (out.verdict && out.lhs != out.rhs) {
    out.verdict = Verdict::fail("counts differ");
  }
  return out;
}

BijectionCheck verify_closure_theorem(const Polymatroid& p) {
  const ClosureTable direct = closure_table(p);
  const ClosureTable via = closure_of_surjection(flats_genlattice(p).theta);
  BijectionCheck out{direct.flats().size(), via.flats().size(), {}};
  for (SubsetMask x : subset_iter(p.ground())) {
    if (direct(x) != via(x)) {
      out.verdict = Verdict::fail("closure of " + p.ground().format(x) + ": " +
                                  p.ground().format(direct(x)) + " vs " + p.ground().format(via(x)));
      break;
    }
  }
  return out;
}

BijectionCheck verify_closure_theorem(const StrongSurjection& t) {
  const Weighting w = submodular_weighting(t.target().lattice());
  const Polymatroid q = compose_rank(t, w.rational);
  const ClosureTable direct = closure_table(q);
  const ClosureTable via = closure_of_surjection(t);
  BijectionCheck out{direct.flats().size(), via.flats().size(), {}};
  if (const auto bad = validate(q); !bad.empty()) {
    out.verdict = Verdict::fail("composed rank is not a polymatroid: " + describe(bad.front(), q.ground()));
    return out;
  }
  for (SubsetMask x : subset_iter(q.ground())) {
    if (direct(x) != via(x)) {
      out.verdict = Verdict::fail("closure of " + q.ground().format(x) + ": " +
                                  q.ground().format(direct(x)) + " vs " + q.ground().format(via(x)));
      break;
    }
  }
  return out;
}

BijectionCheck verify_minor_closure(const Polymatroid& p) {
  const StrongSurjection theta = flats_genlattice(p).theta;
  const SubsetMask full = p.ground().full();
  BijectionCheck out;
  for (SubsetMask x : subset_iter(p.ground())) {
    const SubsetMask rest = full & ~x;
    const Polymatroid contracted = contract_set(p, x);
    const StrongSurjection theta_x = surjection_contract(theta, x);
    for_each_submask(rest, [&](SubsetMask y) {
      ++out.lhs;
      if (!out.verdict) return;
      const SubsetMask local = compress(y, rest);
      const ClosureTable lhs = closure_table(delete_set(contracted, local));
      const ClosureTable rhs = closure_of_surjection(surjection_delete(theta_x, local));
      if (lhs == rhs) {
        ++out.rhs;
      } else {
        out.verdict = Verdict::fail("X = " + p.ground().format(x) + ", Y = " + p.ground().format(y));
      }
    });
  }
  return out;
}

Verdict full_submodularity_check(const Polymatroid& p) {
  for (SubsetMask x : subset_iter(p.ground())) {
    for (SubsetMask y = x + 1; y < p.ground().subset_count(); ++y) {
      if (p.rank(x & y) + p.rank(x | y) > p.rank(x) + p.rank(y)) {
        return Verdict::fail("X = " + p.ground().format(x) + ", Y = " + p.ground().format(y));
      }
    }
  }
  return Verdict::pass();
}

BijectionCheck verify_submodularity_equivalence(const Polymatroid& table) {
  const auto violations = validate(table);
  const bool local = std::none_of(violations.begin(), violations.end(), [](const AxiomViolation& v) {
    return v.kind == AxiomViolation::Kind::kSubmodularity;
  });
  const Verdict full = full_submodularity_check(table);
  BijectionCheck out{local ? 1u : 0u, full.holds ? 1u : 0u, {}};
  if (local != full.holds) {
    out.verdict = Verdict::fail(local ? "local check accepts but " + full.witness
                                      : "local check rejects a submodular table");
  }
  return out;
}

Polymatroid random_rank_table(Rng& rng, std::size_t n) {
  if (n == 0 || n > kMaxGroundSize) throw InvariantError("table size must be in 1.." + std::to_string(kMaxGroundSize));
  if (coin(rng, 0.5)) {
    GenLattice gl = random_genlattice(rng, 16, draw(rng, 0, n));
    const StrongSurjection t = random_surjection(rng, gl, n);
    Polymatroid p = compose_rank(t, as_rationals(submodular_weighting(gl.lattice()).integer));
    if (!coin(rng, 0.5)) return p;
    std::vector<Rational> ranks = p.ranks();
    Rational& entry = ranks[draw(rng, 1, ranks.size() - 1)];
    entry = entry >= Rational(1) && coin(rng, 0.5) ? entry - Rational(1) : entry + Rational(1);
    return Polymatroid(p.ground(), std::move(ranks));
  }
  const GroundSet ground = GroundSet::numbered(n);
  std::vector<Rational> ranks{Rational(0)};
  for (std::size_t x = 1; x < ground.subset_count(); ++x) {
    ranks.emplace_back(static_cast<std::int64_t>(draw(rng, 0, 4)), static_cast<std::int64_t>(draw(rng, 1, 2)));
  }
  return Polymatroid(ground, std::move(ranks));
}

BijectionCheck verify_weighting(const FinLattice& l) {
  const Weighting w = submodular_weighting(l);
  const std::vector<Rational> scaled = as_rationals(w.integer);
  BijectionCheck out{l.size(), l.size(), {}};
  for (ElementId x = 0; x < l.size(); ++x) {
    if (w.rational[x] * Rational(w.scale) != scaled[x]) {
      out.verdict = Verdict::fail("integer weighting is not the scaled one at " + l.label(x));
      return out;
    }
  }
  for (const auto* table : {&w.rational, &scaled}) {
    const char* which = table == &scaled ? "integer" : "rational";
    if (Verdict v = check_strictly_order_preserving(l, *table); !v) {
      out.verdict = Verdict::fail(std::string(which) + " weighting not strictly order-preserving: " + v.witness);
      return out;
    }
    if (Verdict v = check_submodular(l, *table); !v) {
      out.verdict = Verdict::fail(std::string(which) + " weighting not submodular: " + v.witness);
      return out;
    }
  }
  return out;
}

BijectionCheck verify_realization(const GenLattice& gl) {
  const Polymatroid p = realize(gl);
  const FlatsGenLattice fg = flats_genlattice(p);
  BijectionCheck out{gl.size(), fg.gl().size(), {}};
  if (const auto bad = validate(p); !bad.empty()) {
    out.verdict = Verdict::fail("realization is not a polymatroid: " + describe(bad.front(), p.ground()));
  } else if (!std::all_of(p.ranks().begin(), p.ranks().end(), [](const Rational& r) { return r.is_integer(); })) {
    out.verdict = Verdict::fail("realization has a non-integer rank");
  } else if (!gl_isomorphic(fg.gl(), gl)) {
    out.verdict = Verdict::fail("flats genlattice is not isomorphic to the input");
  }
  return out;
}

BijectionCheck verify_geometric_minors(const GenLattice& gl) {
  BijectionCheck out;
  if (!gl.minimally_generated() || !is_geometric(gl.lattice())) {
    out.verdict = Verdict::fail("input is not a minimally generated geometric lattice");
    return out;
  }
  const FinLattice& l = gl.lattice();
  for_each_minor(gl, [&](const MinorHandle& h) {
    ++out.lhs;
    const Span s = materialize(gl, h);
    const bool covering = std::all_of(h.kept.begin(), h.kept.end(),
                                      [&](ElementId k) { return l.covers(h.apex, k); });
    const Verdict geometric = is_geometric(s.gl.lattice());
    if (covering && geometric && s.gl.minimally_generated()) {
      ++out.rhs;
    } else if (out.verdict) {
      out.verdict = Verdict::fail("minor " + to_string(h, l) + ": " +
                                  (!covering ? "a generator does not cover the apex"
                                   : !geometric ? geometric.witness
                                                : "not minimally generated"));
    }
  });
  return out;
}

std::string format_report_line(const VerificationReport& r) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.ms);
  std::string line = "theorem=" + r.theorem + " seed=" + std::to_string(r.seed) +
                     " status=" + (r.pass ? "pass" : "fail") + " lhs=" + std::to_string(r.lhs) +
                     " rhs=" + std::to_string(r.rhs) + " ms=" + ms;
  if (!r.pass) line += " witness=\"" + r.witness + "\"";
  return line;
}

std::string format_summary(const std::vector<VerificationReport>& reports) {
  std::size_t passed = 0;
  double total = 0;
  for (const auto& r : reports) {
    passed += r.pass ? 1 : 0;
    total += r.ms;
  }
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", total);
  std::string out = "summary";
  if (!reports.empty()) out += " theorem=" + reports.front().theorem;
  return out + " instances=" + std::to_string(reports.size()) + " passed=" + std::to_string(passed) +
         " failed=" + std::to_string(reports.size() - passed) + " ms=" + ms;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "closure-theorem", "graph-minors", "parallel-pairs", "order-minors", "geometric-minors",
      "submod-equiv",    "minor-closure", "weighting",     "realization",  "distr-no-paras"};
  return ids;
}

VerificationReport run_instance(const std::string& theorem, std::uint64_t seed, std::size_t size) {
  auto bound = [&](std::size_t fallback) { return size == 0 ? fallback : size; };
  VerificationReport r;
  r.theorem = theorem;
  r.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Rng rng(seed);
    BijectionCheck c;
    if (theorem == "closure-theorem") {
      const StrongSurjection t = random_surjection_instance(rng, bound(5));
      const Polymatroid p =
          compose_rank(t, as_rationals(submodular_weighting(t.target().lattice()).integer));
      r.instance = "surjection n=" + std::to_string(t.ground().size());
      c = verify_closure_theorem(t);
      if (c.verdict) c = verify_closure_theorem(p);
    } else if (theorem == "parallel-pairs" || theorem == "minor-closure") {
      const Polymatroid p = random_polymatroid(rng, bound(5));
      r.instance = "polymatroid n=" + std::to_string(p.size());
      c = theorem == "parallel-pairs" ? verify_parallel_pairs_bijection(p) : verify_minor_closure(p);
    } else if (theorem == "order-minors") {
      const Poset p = random_poset(rng, draw(rng, 0, bound(5)));
      r.instance = "poset n=" + std::to_string(p.size());
      c = verify_order_minor_bijection(p);
    } else if (theorem == "graph-minors" || theorem == "geometric-minors") {
      const LabeledGraph g = random_graph(rng, draw(rng, 1, bound(5)));
      r.instance = "graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
      c = theorem == "graph-minors" ? verify_graph_minor_bijection(g)
                                    : verify_geometric_minors(graph_flats(g).gl);
    } else if (theorem == "submod-equiv") {
      const Polymatroid table = random_rank_table(rng, bound(3));
      r.instance = "table n=" + std::to_string(table.size());
      c = verify_submodularity_equivalence(table);
    } else if (theorem == "weighting") {
      const FinLattice l = random_lattice(rng, bound(24));
      r.instance = "lattice m=" + std::to_string(l.size());
      c = verify_weighting(l);
    } else if (theorem == "realization") {
      const GenLattice gl = random_genlattice(rng, bound(16), 8);
      r.instance = "genlattice m=" + std::to_string(gl.size()) + " gens=" + std::to_string(gl.gens().size());
      c = verify_realization(gl);
    } else if (theorem == "distr-no-paras") {
      const FinLattice l = random_lattice(rng, bound(20));
      r.instance = "lattice m=" + std::to_string(l.size());
      const bool distributive = is_distributive(l).holds;
      const Verdict paras = check_distr_no_paras(l);
      c = {distributive ? 1u : 0u, paras.holds ? 1u : 0u, {}};
      if (distributive && !paras) c.verdict = Verdict::fail("distributive lattice with " + paras.witness);
    } else {
      throw InvariantError("unknown theorem id '" + theorem + "'");
    }
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    r.pass = c.verdict.holds;
    r.witness = c.verdict.witness;
  } catch (const InvariantError& e) {
    if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end()) throw;
    r.pass = false;
    r.witness = e.what();
  } catch (const Error& e) {
    r.pass = false;
    r.witness = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> run_suite(const std::string& theorem, const SuiteOptions& options) {
  if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end()) {
    throw InvariantError("unknown theorem id '" + theorem + "'");
  }
  std::vector<VerificationReport> reports(options.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.count; i = next++) {
      reports[i] = run_instance(theorem, options.first_seed + i, options.size);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(options.count, 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.seed < b.seed; });
  return reports;
}

}  // namespace polylat
