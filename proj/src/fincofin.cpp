#include "stone/fincofin.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "stone/error.hpp"

namespace stone {

namespace {

using Support = std::vector<std::uint64_t>;

Support sym_diff(const Support& a, const Support& b) {
  Support out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support meet(const Support& a, const Support& b) {
  Support out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support join(const Support& a, const Support& b) {
  Support out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support minus(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string render_support(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

FinCofElem::FinCofElem(Mode mode, std::vector<std::uint64_t> support) : mode_(mode), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

FinCofElem FinCofElem::fin(std::vector<std::uint64_t> members) { return FinCofElem(Mode::Finite, std::move(members)); }

FinCofElem FinCofElem::cofin(std::vector<std::uint64_t> missing) {
  return FinCofElem(Mode::Cofinite, std::move(missing));
}

bool FinCofElem::contains(std::uint64_t n) const {
  const bool listed = std::binary_search(support_.begin(), support_.end(), n);
  return is_finite() ? listed : !listed;
}

std::optional<std::uint64_t> FinCofElem::max_index() const {
  if (support_.empty()) return std::nullopt;
  return support_.back();
}

std::string FinCofElem::to_string() const { return (is_finite() ? "fin" : "cofin") + render_support(support_); }

FinCofElem FinCofElem::parse(std::string_view text) {
  Mode mode;
  if (text.rfind("fin", 0) == 0) {
    mode = Mode::Finite;
    text.remove_prefix(3);
  } else if (text.rfind("cofin", 0) == 0) {
    mode = Mode::Cofinite;
    text.remove_prefix(5);
  } else {
    throw DomainError("expected fin{...} or cofin{...}");
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw DomainError("finite-cofinite literal needs braces");
  }
  text = text.substr(1, text.size() - 2);
  Support s;
  while (!text.empty()) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc()) throw DomainError("finite-cofinite literal: expected a natural number");
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    s.push_back(v);
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    if (text.empty()) break;
    if (text.front() != ',') throw DomainError("finite-cofinite literal: expected ','");
    text.remove_prefix(1);
    if (text.empty()) throw DomainError("finite-cofinite literal: trailing ','");
  }
  return FinCofElem(mode, std::move(s));
}

std::ostream& operator<<(std::ostream& os, const FinCofElem& a) { return os << a.to_string(); }

FinCofElem fc_add(const FinCofElem& a, const FinCofElem& b) {
  const bool cofinite = a.is_finite() != b.is_finite();
  return FinCofElem(cofinite ? FinCofElem::Mode::Cofinite : FinCofElem::Mode::Finite,
                    sym_diff(a.support(), b.support()));
}

FinCofElem fc_mul(const FinCofElem& a, const FinCofElem& b) {
  using M = FinCofElem::Mode;
  if (a.is_finite() && b.is_finite()) return FinCofElem(M::Finite, meet(a.support(), b.support()));
  if (a.is_finite()) return FinCofElem(M::Finite, minus(a.support(), b.support()));
  if (b.is_finite()) return FinCofElem(M::Finite, minus(b.support(), a.support()));
  return FinCofElem(M::Cofinite, join(a.support(), b.support()));
}

bool is_in_fin(const FinCofElem& a) { return a.is_finite(); }

FinIdealEvidence fin_is_ideal_witness(std::span<const FinCofElem> sample) {
  FinIdealEvidence ev;
  ev.proper = !is_in_fin(FinCofElem::one());
  for (const auto& a : sample) {
    if (!is_in_fin(a)) continue;
    for (const auto& s : sample) {
      if (is_in_fin(s)) {
        ++ev.sums_checked;
        if (!is_in_fin(a + s)) ev.closed_under_addition = false;
      }
      ++ev.products_checked;
      if (!is_in_fin(s * a)) ev.absorbing = false;
    }
  }
  return ev;
}

std::uint64_t fin_not_principal_witness(const FinCofElem& a) {
  if (!a.is_finite()) throw DomainError("fin_not_principal_witness: generator must be finite");
  const std::uint64_t x = a.max_index() ? *a.max_index() + 1 : 0;
  // s * a is a subset of a for every s, and x is not in a.
  if (a.contains(x)) throw ConsistencyError("fin_not_principal_witness: chosen point lies in the generator");
  return x;
}

std::uint64_t SHom::point() const {
  if (kind_ != Kind::PointEval) throw DomainError("the Frechet quotient has no evaluation point");
  return point_;
}

std::uint8_t SHom::apply(const FinCofElem& a) const {
  if (kind_ == Kind::FrechetQuotient) return a.is_finite() ? 0 : 1;
  return a.contains(point_) ? 1 : 0;
}

std::string SHom::to_string() const {
  return kind_ == Kind::FrechetQuotient ? std::string("frechet") : "eval(" + std::to_string(point_) + ")";
}

SHom frechet_hom() { return SHom(SHom::Kind::FrechetQuotient, 0); }
SHom point_hom(std::uint64_t x) { return SHom(SHom::Kind::PointEval, x); }

std::optional<std::string> shom_violation(const SHom& h, const FinCofElem& a, const FinCofElem& b) {
  if (h(FinCofElem::zero()) != 0) return h.to_string() + " does not send 0 to 0";
  if (h(FinCofElem::one()) != 1) return h.to_string() + " does not send 1 to 1";
  if (h(a + b) != (h(a) ^ h(b))) return h.to_string() + " is not additive on " + a.to_string() + ", " + b.to_string();
  if (h(a * b) != (h(a) & h(b))) {
    return h.to_string() + " is not multiplicative on " + a.to_string() + ", " + b.to_string();
  }
  return std::nullopt;
}

NonInducedWitness non_induced_witness(std::uint64_t x) {
  NonInducedWitness w;
  w.element = FinCofElem::cofin({x});
  w.point = x;
  w.frechet_value = frechet_hom()(w.element);
  w.point_value = point_hom(x)(w.element);
  if (!w.separates()) throw ConsistencyError("non_induced_witness: cofin{x} failed to separate");
  return w;
}

std::string KernelClass::to_string() const {
  return family == Family::FinKernel ? std::string("Fin") : "m_" + std::to_string(point) + " n S";
}

KernelClass kernel_classify(const SHom& h) {
  KernelClass k{};
  if (h.kind() == SHom::Kind::FrechetQuotient) {
    k.family = KernelClass::Family::FinKernel;
    k.kernel_member = FinCofElem::fin({0});
    k.non_member = FinCofElem::cofin({0});
  } else {
    k.family = KernelClass::Family::PointKernel;
    k.point = h.point();
    k.kernel_member = FinCofElem::cofin({h.point()});
    k.non_member = FinCofElem::fin({h.point()});
  }
  k.quotient_is_field = h(FinCofElem::zero()) == 0 && h(FinCofElem::one()) == 1;
  if (h(k.kernel_member) != 0 || h(k.non_member) != 1) {
    throw ConsistencyError("kernel_classify: witnesses disagree with " + h.to_string());
  }
  return k;
}

ImageCondition image_condition(const SHom& h) {
  ImageCondition c;
  if (h.kind() == SHom::Kind::PointEval) {
    // fin{x} + cofin{x} = 1 with cofin{x} in the kernel.
    c.holds = true;
    c.witness = FinCofElem::fin({h.point()});
    if (h(FinCofElem::one() + *c.witness) != 0) throw ConsistencyError("image_condition: witness outside the kernel");
    c.note = "Fin + ker " + h.to_string() + " = S";
  } else {
    c.holds = false;
    c.note = "ker frechet = Fin, so Fin + ker = Fin does not contain 1";
  }
  return c;
}

std::vector<std::uint8_t> window(const FinCofElem& a, std::uint64_t bound) {
  std::vector<std::uint8_t> out(bound);
  for (std::uint64_t i = 0; i < bound; ++i) out[i] = a.contains(i) ? 1 : 0;
  return out;
}

}  // namespace stone
