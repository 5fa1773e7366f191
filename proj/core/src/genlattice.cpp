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

#include "polylat/genlattice.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "polylat/error.hpp"

namespace polylat {

GenLattice::GenLattice(FinLattice lattice, std::vector<ElementId> gens)
    : lattice_(std::move(lattice)), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  is_gen_.assign(lattice_.size(), false);
  for (ElementId g : gens_) {
    if (g >= lattice_.size()) throw InvariantError("generator id out of range");
    if (g == lattice_.bottom()) {
      throw InvariantError("the bottom element " + lattice_.label(g) + " cannot be a generator");
    }
    is_gen_[g] = true;
  }
  std::vector<bool> reached(lattice_.size(), false);
  std::vector<ElementId> frontier{lattice_.bottom()};
  reached[lattice_.bottom()] = true;
  while (!frontier.empty()) {
    ElementId x = frontier.back();
    frontier.pop_back();
    for (ElementId g : gens_) {
      ElementId y = lattice_.join(x, g);
      if (!reached[y]) {
        reached[y] = true;
        frontier.push_back(y);
      }
    }
  }
  for (ElementId x = 0; x < lattice_.size(); ++x) {
    if (!reached[x]) {
      throw InvariantError("generators do not generate: " + lattice_.label(x) +
                           " is not a join of generators");
    }
  }
}

GenLattice GenLattice::from_labels(FinLattice lattice, const std::vector<std::string>& gen_labels) {
  std::vector<ElementId> gens;
  for (const auto& name : gen_labels) {
    auto id = lattice.find(name);
    if (!id) throw InvariantError("unknown generator '" + name + "'");
    gens.push_back(*id);
  }
  return GenLattice(std::move(lattice), std::move(gens));
}

bool GenLattice::minimally_generated() const { return gens_ == join_irreducibles(lattice_); }

StrongSurjection::StrongSurjection(GroundSet ground, GenLattice target, std::vector<ElementId> assign)
    : ground_(std::move(ground)), target_(std::move(target)), assign_(std::move(assign)) {
  if (assign_.size() != ground_.size()) {
    throw InvariantError("surjection assigns " + std::to_string(assign_.size()) +
                         " images for " + std::to_string(ground_.size()) + " elements");
  }
  const FinLattice& l = target_.lattice();
  std::vector<bool> hit(l.size(), false);
  for (std::size_t e = 0; e < assign_.size(); ++e) {
    ElementId x = assign_[e];
    if (x >= l.size() || (x != l.bottom() && !target_.is_gen(x))) {
      throw InvariantError("element " + ground_.label(e) +
                           " is sent to a non-generator, non-bottom element");
    }
    hit[x] = true;
  }
  for (ElementId g : target_.gens()) {
    if (!hit[g]) throw InvariantError("not surjective: generator " + l.label(g) + " is missed");
  }
}

StrongSurjection StrongSurjection::identity_on_generators(const GenLattice& gl) {
  const auto& gens = gl.gens();
  std::vector<std::string> labels;
  bool usable = true;
  for (ElementId g : gens) {
    labels.push_back(gl.lattice().label(g));
    usable = usable && is_valid_label(labels.back());
  }
  // Labels such as "{1,2}" cannot name ground elements; fall back to g1..gk.
  if (!usable) {
    for (std::size_t i = 0; i < gens.size(); ++i) labels[i] = "g" + std::to_string(i + 1);
  }
  return StrongSurjection(GroundSet(std::move(labels)), gl, gens);
}

ElementId StrongSurjection::operator()(SubsetMask x) const {
  const FinLattice& l = target_.lattice();
  ElementId acc = l.bottom();
  for (; x; x &= x - 1) acc = l.join(acc, assign_[std::countr_zero(x)]);
  return acc;
}

FlatsGenLattice flats_genlattice(const Polymatroid& p) {
  ClosureTable ct = closure_table(p);
  std::vector<SubsetMask> flats = ct.flats();
  FinLattice lattice = FinLattice::from_closed_sets(p.ground(), flats);
  std::unordered_map<SubsetMask, ElementId> id_of;
  std::vector<SubsetMask> flat(lattice.size());
  for (SubsetMask f : flats) {
    ElementId id = *lattice.find(p.ground().format(f));
    id_of[f] = id;
    flat[id] = f;
  }
  std::vector<ElementId> assign(p.size());
  std::vector<ElementId> gens;
  for (std::size_t e = 0; e < p.size(); ++e) {
    assign[e] = id_of.at(ct(singleton(e)));
    if (p.rank(singleton(e)) != 0) gens.push_back(assign[e]);
  }
  GenLattice gl(std::move(lattice), std::move(gens));
  return {StrongSurjection(p.ground(), std::move(gl), std::move(assign)), std::move(flat)};
}

Verdict is_strong_map(std::span<const ElementId> f, const GenLattice& src, const GenLattice& dst) {
  const FinLattice& l = src.lattice();
  const FinLattice& k = dst.lattice();
  if (f.size() != l.size()) return Verdict::fail("map is not total on the source lattice");
  for (ElementId x = 0; x < l.size(); ++x) {
    if (f[x] >= k.size()) return Verdict::fail("image of " + l.label(x) + " is out of range");
  }
  if (f[l.bottom()] != k.bottom()) return Verdict::fail("bottom is not sent to bottom");
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId y = x + 1; y < l.size(); ++y) {
      if (f[l.join(x, y)] != k.join(f[x], f[y])) {
        return Verdict::fail("join not preserved at (" + l.label(x) + ", " + l.label(y) + ")");
      }
    }
  }
  for (ElementId g : src.gens()) {
    if (f[g] != k.bottom() && !dst.is_gen(f[g])) {
      return Verdict::fail("generator " + l.label(g) + " is sent to non-generator " +
                           k.label(f[g]));
    }
  }
  return Verdict::pass();
}

bool is_injective(std::span<const ElementId> f) {
  std::vector<ElementId> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_surjective(std::span<const ElementId> f, const GenLattice& src, const GenLattice& dst) {
  std::vector<ElementId> image{f[src.lattice().bottom()]};
  for (ElementId g : src.gens()) image.push_back(f[g]);
  std::vector<ElementId> expected{dst.lattice().bottom()};
  expected.insert(expected.end(), dst.gens().begin(), dst.gens().end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::sort(expected.begin(), expected.end());
  return image == expected;
}

ClosureTable closure_of_surjection(const StrongSurjection& t) {
  const GroundSet& ground = t.ground();
  const FinLattice& l = t.target().lattice();
  std::vector<ElementId> theta(ground.subset_count(), l.bottom());
  std::vector<SubsetMask> phi(l.size(), 0);
  for (SubsetMask x = 1; x < ground.subset_count(); ++x) {
    theta[x] = l.join(theta[x & (x - 1)], t.assign()[std::countr_zero(x)]);
  }
  for (SubsetMask x : subset_iter(ground)) phi[theta[x]] |= x;
  ClosureTable out{ground, std::vector<SubsetMask>(ground.subset_count())};
  for (SubsetMask x : subset_iter(ground)) out.cl[x] = phi[theta[x]];
  return out;
}

Span span(const FinLattice& ambient, std::span<const ElementId> h, ElementId z) {
  for (ElementId x : h) {
    if (!ambient.less(z, x)) {
      throw InvariantError("span: generator " + ambient.label(x) + " is not above " +
                           ambient.label(z));
    }
  }
  std::vector<bool> in(ambient.size(), false);
  std::vector<ElementId> members{z};
  in[z] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId x : h) {
      ElementId y = ambient.join(members[i], x);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  FinLattice sub = FinLattice::join_subsemilattice(ambient, members);
  std::vector<ElementId> gens;
  for (ElementId x : h) {
    gens.push_back(static_cast<ElementId>(
        std::lower_bound(members.begin(), members.end(), x) - members.begin()));
  }
  return {GenLattice(std::move(sub), std::move(gens)), std::move(members)};
}

namespace {

// Re-targets images in the ambient lattice onto the span's ids.
StrongSurjection onto_span(GroundSet ground, const Span& s, const std::vector<ElementId>& images) {
  std::vector<ElementId> assign;
  for (ElementId x : images) {
    auto it = std::lower_bound(s.ambient_id.begin(), s.ambient_id.end(), x);
    assign.push_back(static_cast<ElementId>(it - s.ambient_id.begin()));
  }
  return StrongSurjection(std::move(ground), s.gl, std::move(assign));
}

std::vector<ElementId> distinct_except(std::vector<ElementId> xs, ElementId drop) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  xs.erase(std::remove(xs.begin(), xs.end(), drop), xs.end());
  return xs;
}

}  // namespace

StrongSurjection surjection_delete(const StrongSurjection& t, SubsetMask x) {
  const FinLattice& l = t.target().lattice();
  const SubsetMask keep = t.ground().full() & ~x;
  std::vector<ElementId> images;
  for (std::size_t e = 0; e < t.ground().size(); ++e) {
    if (contains(keep, e)) images.push_back(t(singleton(e)));
  }
  auto h = distinct_except(images, l.bottom());
  return onto_span(t.ground().restrict_to(keep), span(l, h, l.bottom()), images);
}

StrongSurjection surjection_contract(const StrongSurjection& t, SubsetMask x) {
  const FinLattice& l = t.target().lattice();
  const SubsetMask keep = t.ground().full() & ~x;
  const ElementId apex = t(x);
  std::vector<ElementId> images;
  for (std::size_t e = 0; e < t.ground().size(); ++e) {
    if (contains(keep, e)) images.push_back(t(x | singleton(e)));
  }
  auto h = distinct_except(images, apex);
  return onto_span(t.ground().restrict_to(keep), span(l, h, apex), images);
}

namespace {

// Order invariants preserved by any lattice isomorphism.
struct Signature {
  int height;
  std::size_t below;
  std::size_t above;
  std::size_t gens_below;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const GenLattice& gl) {
  const FinLattice& l = gl.lattice();
  std::vector<Signature> out(l.size(), Signature{0, 0, 0, 0});
  for (ElementId x = 0; x < l.size(); ++x) {
    out[x].height = l.height(x);
    for (ElementId y = 0; y < l.size(); ++y) {
      if (l.leq(y, x)) {
        ++out[x].below;
        if (gl.is_gen(y)) ++out[x].gens_below;
      }
      if (l.leq(x, y)) ++out[x].above;
    }
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const GenLattice& a, const GenLattice& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        img_(a.size(), kNone), pre_(b.size(), kNone), order_(a.gens()) {
    std::stable_sort(order_.begin(), order_.end(), [&](ElementId x, ElementId y) {
      return a.lattice().height(x) < a.lattice().height(y);
    });
  }

  std::optional<std::vector<ElementId>> run() {
    img_[a_.lattice().bottom()] = b_.lattice().bottom();
    pre_[b_.lattice().bottom()] = a_.lattice().bottom();
    mapped_.push_back(a_.lattice().bottom());
    if (search(0)) return img_;
    return std::nullopt;
  }

 private:
  static constexpr ElementId kNone = static_cast<ElementId>(-1);

  bool search(std::size_t depth) {
    if (depth == order_.size()) return mapped_.size() == a_.size() && verify();
    const ElementId g = order_[depth];
    for (ElementId h : b_.gens()) {
      if (pre_[h] != kNone && pre_[h] != g) continue;
      if (!(sig_a_[g] == sig_b_[h])) continue;
      const std::size_t trail_mark = trail_.size();
      const std::size_t mapped_mark = mapped_.size();
      if (extend(g, h) && search(depth + 1)) return true;
      undo(trail_mark, mapped_mark);
    }
    return false;
  }

  // Adds g -> h and propagates over the join-closed mapped set.
  bool extend(ElementId g, ElementId h) {
    const FinLattice& la = a_.lattice();
    const FinLattice& lb = b_.lattice();
    const std::size_t count = mapped_.size();
    for (std::size_t i = 0; i < count; ++i) {
      ElementId s = mapped_[i];
      ElementId x = la.join(s, g);
      ElementId y = lb.join(img_[s], h);
      if (img_[x] == kNone) {
        if (pre_[y] != kNone) return false;
        if (!(sig_a_[x] == sig_b_[y])) return false;
        img_[x] = y;
        pre_[y] = x;
        trail_.push_back(x);
        mapped_.push_back(x);
      } else if (img_[x] != y) {
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t mapped_mark) {
    while (trail_.size() > trail_mark) {
      ElementId x = trail_.back();
      trail_.pop_back();
      pre_[img_[x]] = kNone;
      img_[x] = kNone;
    }
    mapped_.resize(mapped_mark);
  }

  bool verify() const {
    const FinLattice& la = a_.lattice();
    const FinLattice& lb = b_.lattice();
    for (ElementId x = 0; x < la.size(); ++x) {
      if (a_.is_gen(x) != b_.is_gen(img_[x])) return false;
      for (ElementId y = x + 1; y < la.size(); ++y) {
        if (img_[la.join(x, y)] != lb.join(img_[x], img_[y])) return false;
      }
    }
    for (ElementId u = 0; u < lb.size(); ++u) {
      for (ElementId v = u + 1; v < lb.size(); ++v) {
        if (pre_[lb.join(u, v)] != la.join(pre_[u], pre_[v])) return false;
      }
    }
    return true;
  }

  const GenLattice& a_;
  const GenLattice& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<ElementId> img_, pre_;
  std::vector<ElementId> order_;
  std::vector<ElementId> mapped_;
  std::vector<ElementId> trail_;
};

}  // namespace

std::optional<std::vector<ElementId>> gl_isomorphic(const GenLattice& a, const GenLattice& b) {
  if (a.size() != b.size() || a.gens().size() != b.gens().size()) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

Polymatroid compose_rank(const StrongSurjection& t, std::span<const Rational> w) {
  const FinLattice& l = t.target().lattice();
  if (w.size() != l.size()) throw InvariantError("weighting has the wrong number of values");
  if (w[l.bottom()] != 0) throw InvariantError("weighting is not zero on the bottom");
  if (auto v = check_strictly_order_preserving(l, w); !v) throw InvariantError(v.witness);
  if (auto v = check_submodular(l, w); !v) throw InvariantError(v.witness);
  std::vector<Rational> ranks(t.ground().subset_count());
  std::vector<ElementId> theta(t.ground().subset_count(), l.bottom());
  for (SubsetMask x = 1; x < t.ground().subset_count(); ++x) {
    theta[x] = l.join(theta[x & (x - 1)], t.assign()[std::countr_zero(x)]);
    ranks[x] = w[theta[x]];
  }
  return Polymatroid(t.ground(), std::move(ranks));
}

Polymatroid realize(const GenLattice& gl) {
  Weighting w = submodular_weighting(gl.lattice());
  std::vector<Rational> integer(w.integer.begin(), w.integer.end());
  return compose_rank(StrongSurjection::identity_on_generators(gl), integer);
}

}  // namespace polylat
