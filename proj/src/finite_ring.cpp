#include "stone/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stone/detail/ring_impl.hpp"
#include "stone/error.hpp"
#include "stone/guard.hpp"

namespace stone {
namespace detail {
namespace {

class ZModImpl final : public RingImpl {
 public:
  explicit ZModImpl(std::uint64_t n) : RingImpl(RingKind::ZMod), n_(n) {
    descriptor_ = "Z/" + std::to_string(n);
  }

  std::uint64_t modulus() const { return n_; }

  std::uint64_t size() const override { return n_; }
  std::uint64_t zero() const override { return 0; }
  std::uint64_t one() const override { return 1 % n_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % n_);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n_);
  }
  std::uint64_t neg(std::uint64_t a) const override { return a == 0 ? 0 : n_ - a; }
  std::string render(std::uint64_t a) const override { return std::to_string(a); }

 private:
  std::uint64_t n_;
};

class ProductImpl final : public RingImpl {
 public:
  explicit ProductImpl(std::vector<Ring> factors) : RingImpl(RingKind::Product), factors_(std::move(factors)) {
    strides_.resize(factors_.size());
    std::uint64_t stride = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      strides_[i] = stride;
      const std::uint64_t s = factors_[i].size();
      if (stride > UINT64_MAX / s) throw CapacityError("product ring too large to index");
      stride *= s;
    }
    size_ = stride;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i != 0) descriptor_ += " x ";
      const bool wrap = factors_[i].kind() == RingKind::Product;
      descriptor_ += wrap ? "(" + factors_[i].descriptor() + ")" : factors_[i].descriptor();
    }
  }

  const std::vector<Ring>& factors() const { return factors_; }

  std::uint64_t component(std::uint64_t a, std::size_t i) const {
    return (a / strides_[i]) % factors_[i].size();
  }
  std::uint64_t compose_index(const std::vector<std::uint64_t>& parts) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) idx += parts[i] * strides_[i];
    return idx;
  }

  std::uint64_t size() const override { return size_; }
  std::uint64_t zero() const override { return map0([](const RingImpl& r) { return r.zero(); }); }
  std::uint64_t one() const override { return map0([](const RingImpl& r) { return r.one(); }); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    return map2(a, b, [](const RingImpl& r, std::uint64_t x, std::uint64_t y) { return r.add(x, y); });
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
    return map2(a, b, [](const RingImpl& r, std::uint64_t x, std::uint64_t y) { return r.mul(x, y); });
  }
  std::uint64_t neg(std::uint64_t a) const override {
    return map2(a, a, [](const RingImpl& r, std::uint64_t x, std::uint64_t) { return r.neg(x); });
  }
  std::string render(std::uint64_t a) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i != 0) out += ',';
      out += factors_[i].impl().render(component(a, i));
    }
    return out + ")";
  }

 private:
  template <class F>
  std::uint64_t map0(F f) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx += f(factors_[i].impl()) * strides_[i];
    return idx;
  }
  template <class F>
  std::uint64_t map2(std::uint64_t a, std::uint64_t b, F f) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      idx += f(factors_[i].impl(), component(a, i), component(b, i)) * strides_[i];
    }
    return idx;
  }

  std::vector<Ring> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

class PowerSetImpl final : public RingImpl {
 public:
  explicit PowerSetImpl(Universe u) : RingImpl(RingKind::PowerSet), universe_(std::move(u)) {
    if (universe_.size() > 63) throw CapacityError("power set ring: universe wider than 63 labels");
    full_ = (std::uint64_t{1} << universe_.size()) - 1;
    descriptor_ = "P" + universe_.full_set().to_string();
  }

  const Universe& universe() const { return universe_; }

  std::uint64_t size() const override { return full_ + 1; }
  std::uint64_t zero() const override { return 0; }
  std::uint64_t one() const override { return full_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override { return a & b; }
  std::uint64_t neg(std::uint64_t a) const override { return a; }
  std::string render(std::uint64_t a) const override { return universe_.from_mask(a).to_string(); }

 private:
  Universe universe_;
  std::uint64_t full_ = 0;
};

std::string quotient_descriptor(const Ring& base, const std::vector<RingElem>& generators) {
  std::string out = "Q(" + base.descriptor();
  for (const auto& g : generators) out += ", " + g.to_string();
  return out + ")";
}

// Cosets of an arbitrary enumerable base; representatives are the least
// index in each coset.
class GenericQuotientImpl final : public RingImpl {
 public:
  GenericQuotientImpl(Ring base, std::vector<RingElem> generators)
      : RingImpl(RingKind::Quotient), base_(std::move(base)), generators_(std::move(generators)) {
    descriptor_ = quotient_descriptor(base_, generators_);
    const Ideal ideal = Ideal::generated_by(base_, generators_);
    const auto members = ideal.members();
    const std::uint64_t n = base_.size();
    constexpr std::uint64_t kUnassigned = UINT64_MAX;
    class_of_.assign(n, kUnassigned);
    const auto& b = base_.impl();
    for (std::uint64_t r = 0; r < n; ++r) {
      if (class_of_[r] != kUnassigned) continue;
      const std::uint64_t cls = reps_.size();
      reps_.push_back(r);
      for (const auto& i : members) class_of_[b.add(r, i.index())] = cls;
    }
  }

  const Ring& base() const { return base_; }
  const std::vector<RingElem>& generators() const { return generators_; }
  std::uint64_t class_of(std::uint64_t base_index) const { return class_of_[base_index]; }
  std::uint64_t representative(std::uint64_t a) const { return reps_[a]; }

  std::uint64_t size() const override { return reps_.size(); }
  std::uint64_t zero() const override { return class_of_[base_.impl().zero()]; }
  std::uint64_t one() const override { return class_of_[base_.impl().one()]; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    return class_of_[base_.impl().add(reps_[a], reps_[b])];
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
    return class_of_[base_.impl().mul(reps_[a], reps_[b])];
  }
  std::uint64_t neg(std::uint64_t a) const override { return class_of_[base_.impl().neg(reps_[a])]; }
  std::string render(std::uint64_t a) const override { return "[" + base_.impl().render(reps_[a]) + "]"; }

 private:
  Ring base_;
  std::vector<RingElem> generators_;
  std::vector<std::uint64_t> class_of_;
  std::vector<std::uint64_t> reps_;
};

// P(X)/P(A) identified with P(A^c): the class of B is B n A^c, which is also
// its least-index representative. Indices compress the bits of A^c.
class PowerSetQuotientImpl final : public RingImpl {
 public:
  PowerSetQuotientImpl(Ring base, std::vector<RingElem> generators)
      : RingImpl(RingKind::Quotient), base_(std::move(base)), generators_(std::move(generators)) {
    descriptor_ = quotient_descriptor(base_, generators_);
    std::uint64_t carrier = 0;
    for (const auto& g : generators_) carrier |= g.index();
    const std::uint64_t keep = base_.impl().one() & ~carrier;
    for (std::size_t i = 0; i < 64; ++i) {
      if ((keep >> i) & 1U) positions_.push_back(i);
    }
    full_ = (std::uint64_t{1} << positions_.size()) - 1;
  }

  const Ring& base() const { return base_; }
  const std::vector<RingElem>& generators() const { return generators_; }
  std::uint64_t class_of(std::uint64_t base_mask) const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < positions_.size(); ++k) out |= ((base_mask >> positions_[k]) & 1U) << k;
    return out;
  }
  std::uint64_t representative(std::uint64_t a) const {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < positions_.size(); ++k) out |= ((a >> k) & 1U) << positions_[k];
    return out;
  }

  std::uint64_t size() const override { return full_ + 1; }
  std::uint64_t zero() const override { return 0; }
  std::uint64_t one() const override { return full_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override { return a & b; }
  std::uint64_t neg(std::uint64_t a) const override { return a; }
  std::string render(std::uint64_t a) const override { return "[" + base_.impl().render(representative(a)) + "]"; }

 private:
  Ring base_;
  std::vector<RingElem> generators_;
  std::vector<std::size_t> positions_;
  std::uint64_t full_ = 0;
};

class BooleanizationImpl final : public RingImpl {
 public:
  explicit BooleanizationImpl(Ring base) : RingImpl(RingKind::Booleanization), base_(std::move(base)) {
    descriptor_ = "B(" + base_.descriptor() + ")";
    for (const auto& e : idempotents(base_)) carrier_.push_back(e.index());
  }

  const Ring& base() const { return base_; }
  std::optional<std::uint64_t> lookup(std::uint64_t base_index) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), base_index);
    if (it == carrier_.end() || *it != base_index) return std::nullopt;
    return static_cast<std::uint64_t>(it - carrier_.begin());
  }
  std::uint64_t carrier(std::uint64_t a) const { return carrier_[a]; }

  std::uint64_t size() const override { return carrier_.size(); }
  std::uint64_t zero() const override { return index(base_.impl().zero()); }
  std::uint64_t one() const override { return index(base_.impl().one()); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
    const auto& r = base_.impl();
    const std::uint64_t e = carrier_[a];
    const std::uint64_t f = carrier_[b];
    const std::uint64_t ef = r.mul(e, f);
    return index(r.add(r.add(e, f), r.neg(r.add(ef, ef))));
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
    return index(base_.impl().mul(carrier_[a], carrier_[b]));
  }
  // Characteristic 2: every element is its own negative under (+).
  std::uint64_t neg(std::uint64_t a) const override { return a; }
  std::string render(std::uint64_t a) const override { return base_.impl().render(carrier_[a]); }

 private:
  std::uint64_t index(std::uint64_t base_index) const {
    if (auto i = lookup(base_index)) return *i;
    throw ConsistencyError("Booleanization: result is not an idempotent of the base ring");
  }

  Ring base_;
  std::vector<std::uint64_t> carrier_;
};

template <class T>
const T* as(const RingImpl& impl) {
  return dynamic_cast<const T*>(&impl);
}

void require_same_ring(const RingElem& a, const RingElem& b, const char* op) {
  if (!(a.ring() == b.ring())) {
    throw DomainError(std::string(op) + ": elements of different rings (" + a.ring().descriptor() + " vs " +
                      b.ring().descriptor() + ")");
  }
}

constexpr std::uint64_t kMaxValidatedSource = 4096;

}  // namespace
}  // namespace detail

using detail::as;

// ---------------------------------------------------------------------------
// Ring

Ring Ring::zmod(std::uint64_t n) {
  if (n == 0) throw DomainError("Z/n requires n >= 1");
  return Ring(std::make_shared<detail::ZModImpl>(n));
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.empty()) throw DomainError("product ring needs at least one factor");
  return Ring(std::make_shared<detail::ProductImpl>(std::move(factors)));
}

Ring Ring::power_set(Universe universe) { return Ring(std::make_shared<detail::PowerSetImpl>(std::move(universe))); }

Ring Ring::quotient(const Ring& base, std::span<const RingElem> generators) {
  std::vector<RingElem> gens(generators.begin(), generators.end());
  for (const auto& g : gens) {
    if (!(g.ring() == base)) throw DomainError("quotient: generator " + g.to_string() + " is not in " + base.descriptor());
  }
  if (base.kind() == RingKind::PowerSet) {
    return Ring(std::make_shared<detail::PowerSetQuotientImpl>(base, std::move(gens)));
  }
  require_enumerable(base.size(), "quotient");
  return Ring(std::make_shared<detail::GenericQuotientImpl>(base, std::move(gens)));
}

Ring Ring::booleanization(const Ring& base) { return Ring(std::make_shared<detail::BooleanizationImpl>(base)); }

RingKind Ring::kind() const { return impl_->kind(); }
std::uint64_t Ring::size() const { return impl_->size(); }
std::string Ring::descriptor() const { return impl_->descriptor(); }
RingElem Ring::zero() const { return RingElem(*this, impl_->zero()); }
RingElem Ring::one() const { return RingElem(*this, impl_->one()); }
RingElem Ring::element(std::uint64_t index) const { return RingElem(*this, index); }

RingElem Ring::from_integer(std::int64_t n) const {
  const bool negative = n < 0;
  auto k = static_cast<std::uint64_t>(negative ? -(n + 1) : n) + (negative ? 1 : 0);
  std::uint64_t acc = impl_->zero();
  std::uint64_t pow = impl_->one();
  while (k != 0) {
    if (k & 1U) acc = impl_->add(acc, pow);
    pow = impl_->add(pow, pow);
    k >>= 1U;
  }
  return RingElem(*this, negative ? impl_->neg(acc) : acc);
}

std::vector<RingElem> Ring::elements() const {
  require_enumerable(size(), "elements of " + descriptor());
  std::vector<RingElem> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.emplace_back(*this, i);
  return out;
}

std::uint64_t Ring::characteristic() const {
  const std::uint64_t zero = impl_->zero();
  const std::uint64_t one = impl_->one();
  std::uint64_t acc = one;
  std::uint64_t k = 1;
  while (acc != zero) {
    acc = impl_->add(acc, one);
    ++k;
  }
  return k;
}

std::uint64_t Ring::modulus() const {
  if (const auto* z = as<detail::ZModImpl>(*impl_)) return z->modulus();
  throw DomainError(descriptor() + " is not Z/n");
}

const std::vector<Ring>& Ring::factors() const {
  if (const auto* p = as<detail::ProductImpl>(*impl_)) return p->factors();
  throw DomainError(descriptor() + " is not a product ring");
}

const Universe& Ring::universe() const {
  if (const auto* p = as<detail::PowerSetImpl>(*impl_)) return p->universe();
  throw DomainError(descriptor() + " is not a power set ring");
}

const Ring& Ring::base() const {
  if (const auto* q = as<detail::GenericQuotientImpl>(*impl_)) return q->base();
  if (const auto* q = as<detail::PowerSetQuotientImpl>(*impl_)) return q->base();
  if (const auto* b = as<detail::BooleanizationImpl>(*impl_)) return b->base();
  throw DomainError(descriptor() + " has no base ring");
}

const std::vector<RingElem>& Ring::quotient_generators() const {
  if (const auto* q = as<detail::GenericQuotientImpl>(*impl_)) return q->generators();
  if (const auto* q = as<detail::PowerSetQuotientImpl>(*impl_)) return q->generators();
  throw DomainError(descriptor() + " is not a quotient ring");
}

RingElem Ring::tuple(const std::vector<RingElem>& components) const {
  const auto* p = as<detail::ProductImpl>(*impl_);
  if (p == nullptr) throw DomainError(descriptor() + " is not a product ring");
  if (components.size() != p->factors().size()) throw DomainError("tuple: wrong number of components");
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i].ring() == p->factors()[i])) throw DomainError("tuple: component in the wrong ring");
    parts.push_back(components[i].index());
  }
  return RingElem(*this, p->compose_index(parts));
}

RingElem Ring::component(const RingElem& e, std::size_t factor) const {
  const auto* p = as<detail::ProductImpl>(*impl_);
  if (p == nullptr) throw DomainError(descriptor() + " is not a product ring");
  if (!(e.ring() == *this)) throw DomainError("component: element of another ring");
  if (factor >= p->factors().size()) throw DomainError("component: factor index out of range");
  return RingElem(p->factors()[factor], p->component(e.index(), factor));
}

RingElem Ring::subset(const SetElem& s) const {
  if (!(s.universe() == universe())) throw DomainError("subset: set is not over " + descriptor());
  return RingElem(*this, s.mask());
}

SetElem Ring::as_subset(const RingElem& e) const {
  if (!(e.ring() == *this)) throw DomainError("as_subset: element of another ring");
  return universe().from_mask(e.index());
}

RingElem Ring::from_base(const RingElem& e) const {
  if (!(e.ring() == base())) throw DomainError("from_base: element is not in " + base().descriptor());
  if (const auto* q = as<detail::GenericQuotientImpl>(*impl_)) return RingElem(*this, q->class_of(e.index()));
  if (const auto* q = as<detail::PowerSetQuotientImpl>(*impl_)) return RingElem(*this, q->class_of(e.index()));
  const auto* b = as<detail::BooleanizationImpl>(*impl_);
  if (auto i = b->lookup(e.index())) return RingElem(*this, *i);
  throw DomainError(e.to_string() + " is not an idempotent of " + base().descriptor());
}

RingElem Ring::to_base(const RingElem& e) const {
  if (!(e.ring() == *this)) throw DomainError("to_base: element of another ring");
  if (const auto* q = as<detail::GenericQuotientImpl>(*impl_)) return RingElem(q->base(), q->representative(e.index()));
  if (const auto* q = as<detail::PowerSetQuotientImpl>(*impl_)) return RingElem(q->base(), q->representative(e.index()));
  if (const auto* b = as<detail::BooleanizationImpl>(*impl_)) return RingElem(b->base(), b->carrier(e.index()));
  throw DomainError(descriptor() + " has no base ring");
}

bool operator==(const Ring& a, const Ring& b) {
  return a.impl_ == b.impl_ || a.impl_->descriptor() == b.impl_->descriptor();
}

// ---------------------------------------------------------------------------
// RingElem

RingElem::RingElem(Ring ring, std::uint64_t index) : ring_(std::move(ring)), index_(index) {
  if (index_ >= ring_.size()) throw DomainError("element index out of range for " + ring_.descriptor());
}

bool RingElem::is_zero() const { return index_ == ring_.impl().zero(); }
bool RingElem::is_one() const { return index_ == ring_.impl().one(); }
bool RingElem::is_idempotent() const { return ring_.impl().mul(index_, index_) == index_; }
std::string RingElem::to_string() const { return ring_.impl().render(index_); }

RingElem operator+(const RingElem& a, const RingElem& b) {
  detail::require_same_ring(a, b, "+");
  return RingElem(a.ring_, a.ring_.impl().add(a.index_, b.index_));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  detail::require_same_ring(a, b, "-");
  const auto& r = a.ring_.impl();
  return RingElem(a.ring_, r.add(a.index_, r.neg(b.index_)));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  detail::require_same_ring(a, b, "*");
  return RingElem(a.ring_, a.ring_.impl().mul(a.index_, b.index_));
}

RingElem operator-(const RingElem& a) { return RingElem(a.ring_, a.ring_.impl().neg(a.index_)); }

bool operator==(const RingElem& a, const RingElem& b) { return a.index_ == b.index_ && a.ring_ == b.ring_; }

std::ostream& operator<<(std::ostream& os, const RingElem& e) { return os << e.to_string(); }

// ---------------------------------------------------------------------------
// Ideal

Ideal Ideal::generated_by(const Ring& ring, std::span<const RingElem> generators) {
  require_enumerable(ring.size(), "ideal generation in " + ring.descriptor());
  const auto& r = ring.impl();
  const std::uint64_t n = ring.size();
  BitSet members(n);
  std::vector<std::uint64_t> list{r.zero()};
  members.set(r.zero());
  // Multiples r*g generate the ideal as an additive group; fold each one in
  // by adjoining the cosets H + k*p until k*p falls back into H.
  for (const auto& g : generators) {
    if (!(g.ring() == ring)) throw DomainError("ideal generator " + g.to_string() + " is not in " + ring.descriptor());
    for (std::uint64_t s = 0; s < n; ++s) {
      const std::uint64_t p = r.mul(s, g.index());
      if (members.test(p)) continue;
      const std::size_t base_count = list.size();
      std::uint64_t kp = p;
      while (!members.test(kp)) {
        for (std::size_t i = 0; i < base_count; ++i) {
          const std::uint64_t x = r.add(list[i], kp);
          if (!members.test(x)) {
            members.set(x);
            list.push_back(x);
          }
        }
        kp = r.add(kp, p);
      }
    }
  }
  return Ideal(ring, std::move(members));
}

Ideal Ideal::zero(const Ring& ring) { return generated_by(ring, {}); }

Ideal Ideal::unit(const Ring& ring) {
  const RingElem one = ring.one();
  return generated_by(ring, std::span<const RingElem>(&one, 1));
}

bool Ideal::contains(const RingElem& e) const {
  if (!(e.ring() == ring_)) throw DomainError("Ideal::contains: element of another ring");
  return members_.test(e.index());
}

bool Ideal::is_proper() const { return !members_.test(ring_.impl().one()); }

std::vector<RingElem> Ideal::members() const {
  std::vector<RingElem> out;
  out.reserve(members_.count());
  for (auto i = members_.find_first(); i != BitSet::npos; i = members_.find_next(i)) out.emplace_back(ring_, i);
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& e : members()) {
    if (!first) out += ',';
    out += e.to_string();
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// RingHom

std::optional<std::string> hom_violation(const Ring& source, const Ring& target,
                                         std::span<const std::uint64_t> table) {
  if (table.size() != source.size()) return "table has " + std::to_string(table.size()) + " entries, expected " +
                                            std::to_string(source.size());
  for (std::uint64_t v : table) {
    if (v >= target.size()) return std::string("table entry outside the target ring");
  }
  if (source.size() > detail::kMaxValidatedSource) {
    throw CapacityError("hom validation: source " + source.descriptor() + " has more than " +
                        std::to_string(detail::kMaxValidatedSource) + " elements");
  }
  const auto& s = source.impl();
  const auto& t = target.impl();
  if (table[s.zero()] != t.zero()) return std::string("does not map 0 to 0");
  if (table[s.one()] != t.one()) return std::string("does not map 1 to 1");
  for (std::uint64_t a = 0; a < source.size(); ++a) {
    for (std::uint64_t b = a; b < source.size(); ++b) {
      if (table[s.add(a, b)] != t.add(table[a], table[b])) {
        return "not additive at " + s.render(a) + ", " + s.render(b);
      }
      if (table[s.mul(a, b)] != t.mul(table[a], table[b])) {
        return "not multiplicative at " + s.render(a) + ", " + s.render(b);
      }
    }
  }
  return std::nullopt;
}

RingHom::RingHom(Ring source, Ring target, std::vector<std::uint64_t> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (auto why = hom_violation(source_, target_, table_)) {
    throw DomainError("not a ring hom " + source_.descriptor() + " -> " + target_.descriptor() + ": " + *why);
  }
}

RingHom RingHom::identity(const Ring& ring) {
  std::vector<std::uint64_t> table(ring.size());
  std::iota(table.begin(), table.end(), std::uint64_t{0});
  return RingHom(ring, ring, std::move(table));
}

RingElem RingHom::operator()(const RingElem& e) const {
  if (!(e.ring() == source_)) throw DomainError("RingHom: argument not in " + source_.descriptor());
  return RingElem(target_, table_[e.index()]);
}

bool RingHom::is_injective() const {
  std::vector<std::uint64_t> sorted = table_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool RingHom::is_surjective() const {
  BitSet hit(target_.size());
  for (std::uint64_t v : table_) hit.set(v);
  return hit.all();
}

bool operator==(const RingHom& f, const RingHom& g) {
  return f.source_ == g.source_ && f.target_ == g.target_ && f.table_ == g.table_;
}

RingHom compose(const RingHom& after, const RingHom& before) {
  if (!(before.target() == after.source())) throw DomainError("compose: homs are not composable");
  std::vector<std::uint64_t> table(before.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = after.table()[before.table()[i]];
  return RingHom(before.source(), after.target(), std::move(table));
}

RingHom to_ring_hom(const RingHomPS& phi) {
  const Ring source = Ring::power_set(phi.source());
  const Ring target = Ring::power_set(phi.target());
  return RingHom::tabulate(source, target, [&](const RingElem& e) {
    return target.subset(phi(source.as_subset(e)));
  });
}

// ---------------------------------------------------------------------------
// Idempotents, Booleanization, localization, atoms

std::vector<RingElem> idempotents(const Ring& ring) {
  require_enumerable(ring.size(), "idempotents of " + ring.descriptor());
  std::vector<RingElem> out;
  const auto& r = ring.impl();
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    if (r.mul(i, i) == i) out.emplace_back(ring, i);
  }
  return out;
}

RingElem oplus(const RingElem& e, const RingElem& f) {
  const RingElem ef = e * f;
  return e + f - (ef + ef);
}

Ring booleanize(const Ring& ring) { return Ring::booleanization(ring); }

RingHom booleanize_hom(const RingHom& phi) {
  const Ring source = booleanize(phi.source());
  const Ring target = booleanize(phi.target());
  return RingHom::tabulate(source, target, [&](const RingElem& e) {
    return target.from_base(phi(source.to_base(e)));
  });
}

Localization localize_at_idempotent(const Ring& ring, const RingElem& e) {
  if (!(e.ring() == ring)) throw DomainError("localize_at_idempotent: element of another ring");
  if (!e.is_idempotent()) throw DomainError("localize_at_idempotent: " + e.to_string() + " is not idempotent");
  const RingElem complement = ring.one() - e;
  Ring local = Ring::quotient(ring, std::span<const RingElem>(&complement, 1));
  RingHom projection = RingHom::tabulate(ring, local, [&](const RingElem& r) { return local.from_base(r); });
  return Localization{std::move(local), std::move(projection)};
}

bool is_boolean(const Ring& ring) {
  require_enumerable(ring.size(), "is_boolean");
  const auto& r = ring.impl();
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    if (r.mul(i, i) != i) return false;
  }
  return true;
}

std::vector<RingElem> atoms(const Ring& ring) {
  if (!is_boolean(ring)) throw DomainError("atoms: " + ring.descriptor() + " is not a Boolean ring");
  std::vector<RingElem> out;
  if (ring.kind() == RingKind::PowerSet) {
    for (std::size_t i = 0; i < ring.universe().size(); ++i) out.emplace_back(ring, std::uint64_t{1} << i);
    return out;
  }
  const auto& r = ring.impl();
  const std::uint64_t zero = r.zero();
  for (std::uint64_t e = 0; e < ring.size(); ++e) {
    if (e == zero) continue;
    bool minimal = true;
    for (std::uint64_t f = 0; f < ring.size() && minimal; ++f) {
      const std::uint64_t ef = r.mul(e, f);
      minimal = ef == zero || ef == e;
    }
    if (minimal) out.emplace_back(ring, e);
  }
  return out;
}

}  // namespace stone
