#include "stone/powerset_ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "stone/error.hpp"
#include "stone/guard.hpp"

namespace stone {

struct Universe::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
};

namespace {

void require_same_universe(const SetElem& a, const SetElem& b, std::string_view op) {
  if (!(a.universe() == b.universe())) {
    throw DomainError(std::string(op) + ": operands belong to different universes");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Universe

Universe::Universe() : Universe(std::vector<std::string>{}) {}

Universe::Universe(std::vector<std::string> labels) {
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      throw DomainError("duplicate universe label '" + labels[i] + "'");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Universe Universe::numbered(std::size_t count, std::size_t first) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back(std::to_string(first + i));
  return Universe(std::move(labels));
}

std::size_t Universe::size() const { return data_->labels.size(); }

const std::string& Universe::label(std::size_t index) const { return data_->labels.at(index); }

const std::vector<std::string>& Universe::labels() const { return data_->labels; }

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("unknown label '" + std::string(label) + "'");
}

SetElem Universe::empty_set() const { return SetElem(*this, BitSet(size())); }

SetElem Universe::full_set() const {
  BitSet bits(size());
  bits.set();
  return SetElem(*this, std::move(bits));
}

SetElem Universe::singleton(std::size_t index) const {
  if (index >= size()) throw DomainError("singleton index out of range");
  BitSet bits(size());
  bits.set(index);
  return SetElem(*this, std::move(bits));
}

SetElem Universe::singleton(std::string_view label) const { return singleton(index_of(label)); }

SetElem Universe::subset(const std::vector<std::string>& labels) const {
  BitSet bits(size());
  for (const auto& l : labels) bits.set(index_of(l));
  return SetElem(*this, std::move(bits));
}

SetElem Universe::from_mask(std::uint64_t mask) const {
  if (size() > 64) throw CapacityError("from_mask: universe wider than 64 labels");
  BitSet bits(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if ((mask >> i) & 1U) bits.set(i);
  }
  if (size() < 64 && (mask >> size()) != 0) {
    throw DomainError("from_mask: mask has bits outside the universe");
  }
  return SetElem(*this, std::move(bits));
}

std::vector<SetElem> Universe::all_subsets() const {
  require_enumerable_power(size(), "all_subsets");
  const std::uint64_t n = std::uint64_t{1} << size();
  std::vector<SetElem> out;
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) out.push_back(from_mask(m));
  return out;
}

Universe Universe::restrict_to(const SetElem& subset) const {
  if (!(subset.universe() == *this)) throw DomainError("restrict_to: subset of another universe");
  std::vector<std::string> labels;
  for (std::size_t i : subset.indices()) labels.push_back(label(i));
  return Universe(std::move(labels));
}

bool operator==(const Universe& a, const Universe& b) {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

// ---------------------------------------------------------------------------
// SetElem

SetElem::SetElem(Universe universe, BitSet bits) : universe_(std::move(universe)), bits_(std::move(bits)) {
  if (bits_.size() != universe_.size()) {
    throw DomainError("SetElem: bit vector length does not match universe size");
  }
}

bool SetElem::contains(std::string_view label) const { return contains(universe_.index_of(label)); }

bool SetElem::is_subset_of(const SetElem& other) const {
  require_same_universe(*this, other, "is_subset_of");
  return bits_.is_subset_of(other.bits_);
}

SetElem SetElem::complement() const { return SetElem(universe_, ~bits_); }

std::vector<std::size_t> SetElem::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != BitSet::npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

std::uint64_t SetElem::mask() const {
  if (universe_.size() > 64) throw CapacityError("mask: universe wider than 64 labels");
  std::uint64_t m = 0;
  for (auto i = bits_.find_first(); i != BitSet::npos; i = bits_.find_next(i)) m |= std::uint64_t{1} << i;
  return m;
}

std::string SetElem::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i = bits_.find_first(); i != BitSet::npos; i = bits_.find_next(i)) {
    if (!first) out += ',';
    out += universe_.label(i);
    first = false;
  }
  out += '}';
  return out;
}

SetElem SetElem::parse(const Universe& universe, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw DomainError("set literal must be enclosed in braces: '" + std::string(text) + "'");
  }
  std::string_view body = trim(text.substr(1, text.size() - 2));
  BitSet bits(universe.size());
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.empty()) throw DomainError("empty label in set literal");
    bits.set(universe.index_of(item));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw DomainError("trailing comma in set literal");
  }
  return SetElem(universe, std::move(bits));
}

nlohmann::json SetElem::to_json() const {
  std::string bits(universe_.size(), '0');
  for (auto i = bits_.find_first(); i != BitSet::npos; i = bits_.find_next(i)) bits[i] = '1';
  return {{"universe", universe_.labels()}, {"bits", bits}};
}

SetElem SetElem::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("bits")) {
    throw DomainError("set JSON needs 'universe' and 'bits'");
  }
  Universe u(j.at("universe").get<std::vector<std::string>>());
  const auto bits_text = j.at("bits").get<std::string>();
  if (bits_text.size() != u.size()) throw DomainError("set JSON: bits length differs from universe size");
  BitSet bits(u.size());
  for (std::size_t i = 0; i < bits_text.size(); ++i) {
    if (bits_text[i] == '1') {
      bits.set(i);
    } else if (bits_text[i] != '0') {
      throw DomainError("set JSON: bits must be '0' or '1'");
    }
  }
  return SetElem(std::move(u), std::move(bits));
}

bool operator==(const SetElem& a, const SetElem& b) {
  return a.bits_ == b.bits_ && a.universe_ == b.universe_;
}

bool operator<(const SetElem& a, const SetElem& b) {
  if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
  // dynamic_bitset's operator< is lexicographic from the highest bit, which
  // coincides with mask order.
  return a.bits_ < b.bits_;
}

std::ostream& operator<<(std::ostream& os, const SetElem& s) { return os << s.to_string(); }

SetElem transfer(const SetElem& s, const Universe& target) {
  if (s.universe() == target) return s;
  BitSet bits(target.size());
  for (std::size_t i : s.indices()) bits.set(target.index_of(s.universe().label(i)));
  return SetElem(target, std::move(bits));
}

// ---------------------------------------------------------------------------
// Ring operations

SetElem ps_add(const SetElem& a, const SetElem& b) {
  require_same_universe(a, b, "ps_add");
  return SetElem(a.universe(), a.bits() ^ b.bits());
}

SetElem ps_mul(const SetElem& a, const SetElem& b) {
  require_same_universe(a, b, "ps_mul");
  return SetElem(a.universe(), a.bits() & b.bits());
}

SetElem ps_neg(const SetElem& a) { return a; }

SetElem ps_union(const SetElem& a, const SetElem& b) {
  require_same_universe(a, b, "ps_union");
  SetElem ring_form = ps_add(ps_add(a, b), ps_neg(ps_mul(a, b)));
  if (ring_form.bits() != (a.bits() | b.bits())) {
    throw ConsistencyError("ps_union: A+B-AB differs from the union");
  }
  return ring_form;
}

SetElem ps_diff(const SetElem& a, const SetElem& b) {
  require_same_universe(a, b, "ps_diff");
  SetElem ring_form = ps_add(a, ps_neg(ps_mul(a, b)));
  if (ring_form.bits() != (a.bits() - b.bits())) {
    throw ConsistencyError("ps_diff: A-AB differs from the set difference");
  }
  return ring_form;
}

SetElem ps_complement(const SetElem& a) {
  SetElem ring_form = ps_add(a.universe().full_set(), ps_neg(a));
  if (ring_form.bits() != ~a.bits()) throw ConsistencyError("ps_complement: 1-A differs from A^c");
  return ring_form;
}

// ---------------------------------------------------------------------------
// Characteristic functions

Z2Function operator+(const Z2Function& f, const Z2Function& g) {
  if (!(f.domain == g.domain)) throw DomainError("Z2Function +: different domains");
  Z2Function out{f.domain, f.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = (f.values[i] + g.values[i]) % 2;
  return out;
}

Z2Function operator*(const Z2Function& f, const Z2Function& g) {
  if (!(f.domain == g.domain)) throw DomainError("Z2Function *: different domains");
  Z2Function out{f.domain, f.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = f.values[i] * g.values[i];
  return out;
}

Z2Function char_iso(const SetElem& a) {
  Z2Function f{a.universe(), std::vector<std::uint8_t>(a.universe().size(), 0)};
  for (std::size_t i : a.indices()) f.values[i] = 1;
  return f;
}

SetElem char_inverse(const Z2Function& f) {
  if (f.values.size() != f.domain.size()) throw DomainError("char_inverse: value count differs from domain size");
  BitSet bits(f.domain.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] > 1) throw DomainError("char_inverse: value outside Z/2");
    if (f.values[i] == 1) bits.set(i);
  }
  return SetElem(f.domain, std::move(bits));
}

// ---------------------------------------------------------------------------
// SetFunction

SetFunction::SetFunction(Universe domain, Universe codomain, std::vector<std::size_t> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw DomainError("SetFunction: one image per domain label required");
  for (std::size_t y : images_) {
    if (y >= codomain_.size()) throw DomainError("SetFunction: image outside the codomain");
  }
}

SetFunction SetFunction::identity(const Universe& x) {
  std::vector<std::size_t> images(x.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return SetFunction(x, x, std::move(images));
}

SetFunction SetFunction::constant(const Universe& domain, const Universe& codomain, std::size_t target) {
  return SetFunction(domain, codomain, std::vector<std::size_t>(domain.size(), target));
}

SetElem SetFunction::preimage(const SetElem& a) const {
  if (!(a.universe() == codomain_)) throw DomainError("preimage: set is not over the codomain");
  BitSet bits(domain_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (a.contains(images_[x])) bits.set(x);
  }
  return SetElem(domain_, std::move(bits));
}

SetElem SetFunction::image(const SetElem& a) const {
  if (!(a.universe() == domain_)) throw DomainError("image: set is not over the domain");
  BitSet bits(codomain_.size());
  for (std::size_t x : a.indices()) bits.set(images_[x]);
  return SetElem(codomain_, std::move(bits));
}

bool SetFunction::is_injective() const {
  std::vector<bool> seen(codomain_.size(), false);
  for (std::size_t y : images_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool SetFunction::is_surjective() const { return image(domain_.full_set()).count() == codomain_.size(); }

std::string SetFunction::to_string() const {
  std::string out;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x != 0) out += ", ";
    out += domain_.label(x) + "->" + codomain_.label(images_[x]);
  }
  return out;
}

bool operator==(const SetFunction& f, const SetFunction& g) {
  return f.images_ == g.images_ && f.domain_ == g.domain_ && f.codomain_ == g.codomain_;
}

SetFunction compose(const SetFunction& g, const SetFunction& f) {
  if (!(f.codomain() == g.domain())) throw DomainError("compose: codomain of f is not the domain of g");
  std::vector<std::size_t> images(f.domain().size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = g(f(x));
  return SetFunction(f.domain(), g.codomain(), std::move(images));
}

std::vector<SetFunction> all_functions(const Universe& domain, const Universe& codomain) {
  const std::size_t n = domain.size();
  const std::size_t m = codomain.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && count > enumeration_limit() / m) {
      require_enumerable(enumeration_limit() + 1, "all_functions");
    }
    count *= m;
  }
  require_enumerable(count, "all_functions");
  std::vector<SetFunction> out;
  if (count == 0) return out;
  out.reserve(count);
  std::vector<std::size_t> images(n, 0);
  while (true) {
    out.emplace_back(domain, codomain, images);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++images[pos] < m) break;
      images[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

// ---------------------------------------------------------------------------
// RingHomPS

RingHomPS::RingHomPS(Universe source, Universe target, std::vector<SetElem> atom_images)
    : source_(std::move(source)), target_(std::move(target)), atom_images_(std::move(atom_images)) {
  if (atom_images_.size() != source_.size()) throw DomainError("RingHomPS: one image per source atom required");
  BitSet covered(target_.size());
  for (const auto& img : atom_images_) {
    if (!(img.universe() == target_)) throw DomainError("RingHomPS: atom image not over the target");
    if (covered.intersects(img.bits())) throw DomainError("RingHomPS: atom images overlap, not multiplicative");
    covered |= img.bits();
  }
  if (!covered.all()) throw DomainError("RingHomPS: atom images do not cover the target, not unital");
}

RingHomPS RingHomPS::identity(const Universe& x) {
  std::vector<SetElem> images;
  images.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) images.push_back(x.singleton(i));
  return RingHomPS(x, x, std::move(images));
}

SetElem RingHomPS::operator()(const SetElem& a) const {
  if (!(a.universe() == source_)) throw DomainError("RingHomPS: argument not over the source");
  BitSet bits(target_.size());
  for (std::size_t i : a.indices()) bits ^= atom_images_[i].bits();
  return SetElem(target_, std::move(bits));
}

std::vector<SetElem> RingHomPS::table() const {
  std::vector<SetElem> out;
  for (const auto& a : source_.all_subsets()) out.push_back((*this)(a));
  return out;
}

bool RingHomPS::is_injective() const {
  return std::none_of(atom_images_.begin(), atom_images_.end(), [](const SetElem& s) { return s.empty(); });
}

bool RingHomPS::is_surjective() const {
  // The image is spanned by the atom images; every target singleton must be
  // one of them.
  return std::all_of(atom_images_.begin(), atom_images_.end(), [](const SetElem& s) { return s.count() <= 1; });
}

bool operator==(const RingHomPS& f, const RingHomPS& g) {
  return f.source_ == g.source_ && f.target_ == g.target_ && f.atom_images_ == g.atom_images_;
}

RingHomPS compose(const RingHomPS& after, const RingHomPS& before) {
  if (!(before.target() == after.source())) throw DomainError("compose: homs are not composable");
  std::vector<SetElem> images;
  images.reserve(before.source().size());
  for (const auto& img : before.atom_images()) images.push_back(after(img));
  return RingHomPS(before.source(), after.target(), std::move(images));
}

RingHomPS induced_hom(const SetFunction& f) {
  std::vector<SetElem> images;
  images.reserve(f.codomain().size());
  for (std::size_t y = 0; y < f.codomain().size(); ++y) images.push_back(f.preimage(f.codomain().singleton(y)));
  return RingHomPS(f.codomain(), f.domain(), std::move(images));
}

// ---------------------------------------------------------------------------
// Ideals

PSIdeal::PSIdeal(Universe universe, std::vector<SetElem> generators)
    : carrier_(universe.empty_set()), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!(g.universe() == universe)) throw DomainError("PSIdeal: generator from another universe");
    carrier_ = SetElem(universe, carrier_.bits() | g.bits());
  }
}

bool PSIdeal::contains(const SetElem& a) const { return a.is_subset_of(carrier_); }

std::vector<SetElem> PSIdeal::members() const {
  require_enumerable_power(carrier_.count(), "PSIdeal::members");
  const auto idx = carrier_.indices();
  std::vector<SetElem> out;
  const std::uint64_t n = std::uint64_t{1} << idx.size();
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) {
    BitSet bits(universe().size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if ((m >> k) & 1U) bits.set(idx[k]);
    }
    out.emplace_back(universe(), std::move(bits));
  }
  return out;
}

std::string PSIdeal::to_string() const { return "P(" + carrier_.to_string() + ")"; }

PSIdeal principal_ideal(const SetElem& a) { return PSIdeal(a.universe(), {a}); }

PSIdeal ideal_generated(const Universe& universe, std::span<const SetElem> generators) {
  return PSIdeal(universe, std::vector<SetElem>(generators.begin(), generators.end()));
}

PSQuotient quotient_by_subset(const SetElem& a) {
  const Universe& x = a.universe();
  const SetElem rest = a.complement();
  Universe q = x.restrict_to(rest);
  std::vector<SetElem> images;
  images.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    images.push_back(rest.contains(i) ? q.singleton(x.label(i)) : q.empty_set());
  }
  return PSQuotient{q, RingHomPS(x, q, std::move(images)), principal_ideal(a)};
}

PSIdeal point_maximal_ideal(const Universe& universe, std::string_view label) {
  return principal_ideal(universe.singleton(label).complement());
}

std::vector<PSIdeal> maximal_ideals(const Universe& universe) {
  std::vector<PSIdeal> out;
  out.reserve(universe.size());
  for (const auto& l : universe.labels()) out.push_back(point_maximal_ideal(universe, l));
  return out;
}

}  // namespace stone
