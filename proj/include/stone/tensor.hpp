#pragma once

// GF(2) linear algebra for tensor products of power set algebras over a
// common base P(X), plus the product decomposition of P(A u B) and ideal
// extension along a ring hom.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "stone/bits.hpp"
#include "stone/finite_ring.hpp"
#include "stone/powerset_ring.hpp"

namespace stone {

/// A dense bit matrix over GF(2).
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitSet& row(std::size_t r) const { return rows_[r]; }
  void append_row(BitSet row);

  /// Converts to reduced row echelon form in place, dropping zero rows.
  /// Returns the rank.
  std::size_t row_reduce();
  bool is_reduced_echelon() const;
  /// Leading column of each row. Meaningful after row_reduce().
  std::vector<std::size_t> pivot_columns() const;
  /// Eliminates every pivot column from `v`. Requires reduced echelon form.
  BitSet reduce(BitSet v) const;

  friend bool operator==(const F2Matrix& a, const F2Matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

 private:
  std::size_t cols_ = 0;
  std::vector<BitSet> rows_;
};

/// P(A) as an algebra over R = P(X) through B -> B n A. The basis is the
/// singletons of A.
class AlgebraPresentation {
 public:
  AlgebraPresentation(Universe base, SetElem carrier);

  const Universe& base() const { return base_; }
  const SetElem& carrier() const { return carrier_; }
  /// Base indices of the basis atoms, ascending.
  const std::vector<std::size_t>& basis() const { return basis_; }

  SetElem structure_map(const SetElem& r) const;
  /// r . m = (r n A) m.
  SetElem act(const SetElem& r, const SetElem& m) const;
  /// The singletons of X followed by 1 = X.
  std::vector<SetElem> generators() const;
  /// action_table()[g][k] = generators()[g] . {basis()[k]}.
  const std::vector<std::vector<SetElem>>& action_table() const { return action_; }

 private:
  Universe base_;
  SetElem carrier_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<SetElem>> action_;
};

/// M (x)_R N as a quotient of the GF(2) span of basis pairs by the
/// bilinearity relations (r.s) (x) t + s (x) (r.t).
class TensorAlgebra {
 public:
  TensorAlgebra(AlgebraPresentation left, AlgebraPresentation right);

  const AlgebraPresentation& left() const { return left_; }
  const AlgebraPresentation& right() const { return right_; }
  /// Number of basis pairs: |A| |B|.
  std::size_t ambient_dimension() const { return pairs_.size(); }
  std::size_t dimension() const { return free_columns_.size(); }
  const F2Matrix& relations() const { return relations_; }

  /// Basis pairs (left atom, right atom) that survive the quotient.
  std::vector<std::pair<std::size_t, std::size_t>> basis() const;
  /// "{a}(x){a} + ..." for a normal-form vector.
  std::string render(const BitSet& v) const;

  BitSet reduce(BitSet v) const { return relations_.reduce(std::move(v)); }
  /// Normal form of s (x) t.
  BitSet pure(const SetElem& s, const SetElem& t) const;
  BitSet multiply(const BitSet& u, const BitSet& v) const;
  BitSet unit() const;

  /// The canonical map s (x) t -> s n t into P(A n B), as a subset of X.
  SetElem canonical_image(const BitSet& v) const;

  struct IsoEvidence {
    bool well_defined = false;  // relations map to zero
    bool injective = false;
    bool surjective = false;
    bool multiplicative = false;
    bool unital = false;
    bool all() const { return well_defined && injective && surjective && multiplicative && unital; }
  };
  IsoEvidence verify_canonical_iso() const;

 private:
  std::size_t column(std::size_t left_atom, std::size_t right_atom) const;

  AlgebraPresentation left_;
  AlgebraPresentation right_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;  // base indices per column
  F2Matrix relations_;
  std::vector<std::size_t> free_columns_;
};

/// Throws DomainError when the two algebras have different base rings.
TensorAlgebra tensor_product(const AlgebraPresentation& m, const AlgebraPresentation& n);

/// C -> (C n A, C n B) from P(A u B) to P(A) x P(B).
struct ProductMap {
  RingHom hom;
  bool injective = false;
  bool surjective = false;
  bool disjoint = false;
  std::string note;
};

ProductMap product_map(const SetElem& a, const SetElem& b);

/// The ideal of T generated by phi(I).
Ideal extend_ideal(const RingHom& phi, const Ideal& ideal);

/// R/Fin(X) (x)_R P(A) against P(A)/Fin(A) for finite X, where Fin(X) = P(X)
/// and both sides vanish.
struct FinQuotientTensor {
  std::uint64_t fin_quotient_size = 0;  // |R/Fin(X)|
  std::size_t tensor_dimension = 0;     // dim of R/Fin(X) (x)_R P(A)
  std::uint64_t rhs_size = 0;           // |P(A)/Fin(A)|
  std::string note;
  bool is_zero() const { return fin_quotient_size == 1 && tensor_dimension == 0 && rhs_size == 1; }
};

FinQuotientTensor tensor_with_fin_quotient(const SetElem& a);

}  // namespace stone
