#include "stone/hom_classifier.hpp"

#include "stone/error.hpp"
#include "stone/guard.hpp"

namespace stone {

namespace {

void require_hom_bounds(const Universe& y, const Universe& x, const char* what) {
  if (y.size() > kMaxHomUniverse || x.size() > kMaxHomUniverse) {
    throw CapacityError(std::string(what) + ": universes are limited to " + std::to_string(kMaxHomUniverse) +
                        " labels");
  }
}

}  // namespace

bool AtomAssignment::valid() const {
  if (images.size() != source.size()) return false;
  BitSet covered(target.size());
  for (const auto& img : images) {
    if (!(img.universe() == target) || covered.intersects(img.bits())) return false;
    covered |= img.bits();
  }
  return covered.all();
}

RingHomPS AtomAssignment::to_hom() const {
  if (!valid()) throw DomainError("atom images must be pairwise disjoint and cover the target");
  return RingHomPS(source, target, images);
}

AtomAssignment assignment_of(const RingHomPS& phi) { return {phi.source(), phi.target(), phi.atom_images()}; }

std::vector<RingHomPS> enumerate_homs(const Universe& y, const Universe& x) {
  require_hom_bounds(y, x, "enumerate_homs");
  std::vector<RingHomPS> out;
  for (const auto& f : all_functions(x, y)) out.push_back(induced_hom(f));
  return out;
}

SetFunction hom_to_function(const RingHomPS& phi) {
  const Universe& y = phi.source();
  const Universe& x = phi.target();
  require_hom_bounds(y, x, "hom_to_function");
  const auto subsets = y.all_subsets();
  std::vector<std::size_t> images;
  images.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    // phi^{-1}(m_x) = {B : x not in phi(B)}, compared against each m_y.
    std::vector<bool> pre;
    pre.reserve(subsets.size());
    for (const auto& b : subsets) pre.push_back(!phi(b).contains(i));
    std::optional<std::size_t> match;
    for (std::size_t j = 0; j < y.size() && !match; ++j) {
      bool same = true;
      for (std::size_t k = 0; k < subsets.size() && same; ++k) same = pre[k] == !subsets[k].contains(j);
      if (same) match = j;
    }
    if (!match) throw ConsistencyError("hom_to_function: preimage of m_" + x.label(i) + " is not a point ideal");
    images.push_back(*match);
  }
  SetFunction f(x, y, std::move(images));
  if (!(induced_hom(f) == phi)) throw ConsistencyError("hom_to_function: P(f) differs from the given hom");
  return f;
}

ImageCharacterization image_characterization_check(const RingHomPS& phi) {
  const Universe& y = phi.source();
  const Universe& x = phi.target();
  ImageCharacterization out;
  std::vector<SetElem> fin;
  for (std::size_t j = 0; j < y.size(); ++j) fin.push_back(y.singleton(j));
  out.condition = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<SetElem> gens = fin;
    for (const auto& b : y.all_subsets()) {
      if (!phi(b).contains(i)) gens.push_back(b);
    }
    if (!(ideal_generated(y, gens).carrier() == y.full_set())) out.condition = false;
  }
  try {
    out.induced = induced_hom(hom_to_function(phi)) == phi;
  } catch (const ConsistencyError&) {
    out.induced = false;
  }
  out.note = "Y is finite, so Fin(Y) = P(Y) and the condition always holds";
  return out;
}

Universe subsets_universe(const Universe& x) {
  std::vector<std::string> labels;
  for (const auto& s : x.all_subsets()) labels.push_back(s.to_string());
  return Universe(std::move(labels));
}

SetElem powerset_of(const SetElem& a, const Universe& subsets) {
  const Universe& x = a.universe();
  if (subsets.size() != (std::size_t{1} << x.size())) throw DomainError("powerset_of: universe of subsets has the wrong size");
  BitSet bits(subsets.size());
  const std::uint64_t m = a.mask();
  for (std::uint64_t s = m;; s = (s - 1) & m) {
    bits.set(s);
    if (s == 0) break;
  }
  return SetElem(subsets, std::move(bits));
}

PowersetMapReport powerset_map_report(const Universe& x) {
  if (x.size() > 4) throw CapacityError("powerset_map_report: at most 4 labels");
  const Universe pu = subsets_universe(x);
  PowersetMapReport r;
  const auto subsets = x.all_subsets();
  r.unital = powerset_of(x.full_set(), pu) == pu.full_set();
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      const SetElem pa = powerset_of(a, pu);
      const SetElem pb = powerset_of(b, pu);
      if (!(powerset_of(a * b, pu) == pa * pb)) r.multiplicative = false;
      if (!(powerset_of(a + b, pu) == pa + pb)) {
        r.additive = false;
        if (!r.counterexample) r.counterexample.emplace(a, b);
      }
    }
  }
  return r;
}

}  // namespace stone
