#include "stone/tensor.hpp"

#include <algorithm>

#include "stone/error.hpp"
#include "stone/guard.hpp"

namespace stone {

// ---------------------------------------------------------------------------
// F2Matrix

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitSet(cols)) {}

void F2Matrix::append_row(BitSet row) {
  if (row.size() != cols_) throw DomainError("F2Matrix: row width mismatch");
  rows_.push_back(std::move(row));
}

std::size_t F2Matrix::row_reduce() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_.size() && !rows_[pivot].test(c)) ++pivot;
    if (pivot == rows_.size()) continue;
    std::swap(rows_[rank], rows_[pivot]);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != rank && rows_[r].test(c)) rows_[r] ^= rows_[rank];
    }
    ++rank;
  }
  rows_.resize(rank);
  return rank;
}

bool F2Matrix::is_reduced_echelon() const {
  std::size_t last = 0;
  bool first = true;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto lead = rows_[r].find_first();
    if (lead == BitSet::npos) return false;
    if (!first && lead <= last) return false;
    for (std::size_t o = 0; o < rows_.size(); ++o) {
      if (o != r && rows_[o].test(lead)) return false;
    }
    last = lead;
    first = false;
  }
  return true;
}

std::vector<std::size_t> F2Matrix::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.find_first());
  return out;
}

BitSet F2Matrix::reduce(BitSet v) const {
  if (v.size() != cols_) throw DomainError("F2Matrix::reduce: width mismatch");
  for (const auto& row : rows_) {
    if (v.test(row.find_first())) v ^= row;
  }
  return v;
}

// ---------------------------------------------------------------------------
// AlgebraPresentation

AlgebraPresentation::AlgebraPresentation(Universe base, SetElem carrier)
    : base_(std::move(base)), carrier_(std::move(carrier)), basis_(carrier_.indices()) {
  if (!(carrier_.universe() == base_)) throw DomainError("AlgebraPresentation: carrier outside the base universe");
  for (const auto& g : generators()) {
    std::vector<SetElem> row;
    row.reserve(basis_.size());
    for (std::size_t a : basis_) row.push_back(act(g, base_.singleton(a)));
    action_.push_back(std::move(row));
  }
}

SetElem AlgebraPresentation::structure_map(const SetElem& r) const { return ps_mul(r, carrier_); }

SetElem AlgebraPresentation::act(const SetElem& r, const SetElem& m) const {
  if (!m.is_subset_of(carrier_)) throw DomainError("act: module element outside the carrier");
  return ps_mul(structure_map(r), m);
}

std::vector<SetElem> AlgebraPresentation::generators() const {
  std::vector<SetElem> out;
  out.reserve(base_.size() + 1);
  for (std::size_t i = 0; i < base_.size(); ++i) out.push_back(base_.singleton(i));
  out.push_back(base_.full_set());
  return out;
}

// ---------------------------------------------------------------------------
// TensorAlgebra

TensorAlgebra::TensorAlgebra(AlgebraPresentation left, AlgebraPresentation right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.base() == right_.base())) throw DomainError("tensor_product: base rings differ");
  for (std::size_t a : left_.basis()) {
    for (std::size_t b : right_.basis()) pairs_.emplace_back(a, b);
  }
  relations_ = F2Matrix(0, pairs_.size());
  const auto& la = left_.action_table();
  const auto& ra = right_.action_table();
  for (std::size_t g = 0; g < la.size(); ++g) {
    for (std::size_t i = 0; i < left_.basis().size(); ++i) {
      for (std::size_t j = 0; j < right_.basis().size(); ++j) {
        // (g.s) (x) t + s (x) (g.t) with s, t basis atoms.
        BitSet row(pairs_.size());
        for (std::size_t a : la[g][i].indices()) row.flip(column(a, right_.basis()[j]));
        for (std::size_t b : ra[g][j].indices()) row.flip(column(left_.basis()[i], b));
        if (row.any()) relations_.append_row(std::move(row));
      }
    }
  }
  relations_.row_reduce();
  BitSet pivot(pairs_.size());
  for (std::size_t c : relations_.pivot_columns()) pivot.set(c);
  for (std::size_t c = 0; c < pairs_.size(); ++c) {
    if (!pivot.test(c)) free_columns_.push_back(c);
  }
}

std::size_t TensorAlgebra::column(std::size_t left_atom, std::size_t right_atom) const {
  const auto& lb = left_.basis();
  const auto& rb = right_.basis();
  auto i = std::lower_bound(lb.begin(), lb.end(), left_atom);
  auto j = std::lower_bound(rb.begin(), rb.end(), right_atom);
  if (i == lb.end() || *i != left_atom || j == rb.end() || *j != right_atom) {
    throw DomainError("tensor: atom outside a carrier");
  }
  return static_cast<std::size_t>(i - lb.begin()) * rb.size() + static_cast<std::size_t>(j - rb.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> TensorAlgebra::basis() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(free_columns_.size());
  for (std::size_t c : free_columns_) out.push_back(pairs_[c]);
  return out;
}

std::string TensorAlgebra::render(const BitSet& v) const {
  const auto& u = left_.base();
  std::string out;
  for (auto c = v.find_first(); c != BitSet::npos; c = v.find_next(c)) {
    if (!out.empty()) out += " + ";
    out += "{" + u.label(pairs_[c].first) + "}(x){" + u.label(pairs_[c].second) + "}";
  }
  return out.empty() ? "0" : out;
}

BitSet TensorAlgebra::pure(const SetElem& s, const SetElem& t) const {
  if (!s.is_subset_of(left_.carrier()) || !t.is_subset_of(right_.carrier())) {
    throw DomainError("pure tensor: factor outside its carrier");
  }
  BitSet v(pairs_.size());
  for (std::size_t a : s.indices()) {
    for (std::size_t b : t.indices()) v.flip(column(a, b));
  }
  return reduce(std::move(v));
}

BitSet TensorAlgebra::multiply(const BitSet& u, const BitSet& v) const {
  // Basis pure tensors are idempotent and pairwise orthogonal.
  return reduce(u & v);
}

BitSet TensorAlgebra::unit() const { return pure(left_.carrier(), right_.carrier()); }

SetElem TensorAlgebra::canonical_image(const BitSet& v) const {
  const auto& u = left_.base();
  BitSet out(u.size());
  for (auto c = v.find_first(); c != BitSet::npos; c = v.find_next(c)) {
    if (pairs_[c].first == pairs_[c].second) out.flip(pairs_[c].first);
  }
  return SetElem(u, std::move(out));
}

TensorAlgebra::IsoEvidence TensorAlgebra::verify_canonical_iso() const {
  IsoEvidence ev;
  const auto& u = left_.base();
  const SetElem target = ps_mul(left_.carrier(), right_.carrier());

  ev.well_defined = true;
  for (std::size_t r = 0; r < relations_.rows(); ++r) {
    if (!canonical_image(relations_.row(r)).empty()) ev.well_defined = false;
  }

  std::vector<BitSet> basis_vectors;
  F2Matrix images(0, u.size());
  bool inside = true;
  for (std::size_t c : free_columns_) {
    BitSet e(pairs_.size());
    e.set(c);
    basis_vectors.push_back(e);
    SetElem img = canonical_image(e);
    if (!img.is_subset_of(target)) inside = false;
    images.append_row(img.bits());
  }
  const std::size_t rank = images.row_reduce();
  ev.injective = rank == free_columns_.size();
  ev.surjective = inside && rank == target.count();

  ev.multiplicative = true;
  for (const auto& x : basis_vectors) {
    for (const auto& y : basis_vectors) {
      if (!(canonical_image(multiply(x, y)) == ps_mul(canonical_image(x), canonical_image(y)))) {
        ev.multiplicative = false;
      }
    }
  }
  ev.unital = canonical_image(unit()) == target;
  return ev;
}

TensorAlgebra tensor_product(const AlgebraPresentation& m, const AlgebraPresentation& n) {
  return TensorAlgebra(m, n);
}

// ---------------------------------------------------------------------------
// Product decomposition, ideal extension, Fin quotients

ProductMap product_map(const SetElem& a, const SetElem& b) {
  if (!(a.universe() == b.universe())) throw DomainError("product_map: sets over different universes");
  const Universe& x = a.universe();
  const Universe ua = x.restrict_to(a);
  const Universe ub = x.restrict_to(b);
  const Universe uab = x.restrict_to(ps_union(a, b));
  const Ring pa = Ring::power_set(ua);
  const Ring pb = Ring::power_set(ub);
  const Ring source = Ring::power_set(uab);
  const Ring target = Ring::product({pa, pb});
  RingHom hom = RingHom::tabulate(source, target, [&](const RingElem& e) {
    const SetElem c = transfer(source.as_subset(e), x);
    return target.tuple({pa.subset(transfer(ps_mul(c, a), ua)), pb.subset(transfer(ps_mul(c, b), ub))});
  });
  ProductMap out{hom, hom.is_injective(), hom.is_surjective(), ps_mul(a, b).empty(), {}};
  if (!out.injective) throw ConsistencyError("product_map: C -> (C n A, C n B) failed to be injective");
  if (out.disjoint != out.surjective) throw ConsistencyError("product_map: surjectivity disagrees with disjointness");
  if (out.disjoint) {
    out.note = "A and B are disjoint: P(A u B) = P(A) x P(B)";
  } else {
    out.note = "A and B meet in " + ps_mul(a, b).to_string() + ": injective but not onto, " +
               std::to_string(source.size()) + " < " + std::to_string(target.size()) + " elements";
  }
  return out;
}

Ideal extend_ideal(const RingHom& phi, const Ideal& ideal) {
  if (!(ideal.ring() == phi.source())) throw DomainError("extend_ideal: ideal lives in another ring");
  std::vector<RingElem> images;
  for (const auto& m : ideal.members()) images.push_back(phi(m));
  return Ideal::generated_by(phi.target(), images);
}

FinQuotientTensor tensor_with_fin_quotient(const SetElem& a) {
  const Universe& x = a.universe();
  FinQuotientTensor out;

  // Fin(X) is generated by the singletons, which already give all of P(X).
  std::vector<SetElem> singletons;
  for (std::size_t i = 0; i < x.size(); ++i) singletons.push_back(x.singleton(i));
  const PSIdeal fin_x = ideal_generated(x, singletons);
  const PSQuotient q = quotient_by_subset(fin_x.carrier());
  out.fin_quotient_size = std::uint64_t{1} << q.ring.size();

  const AlgebraPresentation fin_side(x, fin_x.carrier().complement());
  const AlgebraPresentation a_side(x, a);
  out.tensor_dimension = tensor_product(fin_side, a_side).dimension();

  const Universe ua = x.restrict_to(a);
  const Ring pa = Ring::power_set(ua);
  std::vector<RingElem> gens;
  for (std::size_t i = 0; i < ua.size(); ++i) gens.push_back(pa.subset(ua.singleton(i)));
  out.rhs_size = Ring::quotient(pa, gens).size();

  out.note = "X is finite, so Fin(X) = P(X) and both sides are the zero algebra";
  if (!out.is_zero()) throw ConsistencyError("tensor_with_fin_quotient: expected the zero algebra");
  return out;
}

}  // namespace stone
