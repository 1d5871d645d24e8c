#pragma once

// The subring S of P(N) whose members are finite or cofinite. Elements store
// only a finite support, so every operation here is exact.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stone {

class FinCofElem {
 public:
  enum class Mode { Finite, Cofinite };

  /// The empty set, i.e. zero.
  FinCofElem() = default;
  FinCofElem(Mode mode, std::vector<std::uint64_t> support);

  static FinCofElem fin(std::vector<std::uint64_t> members);
  /// N minus `missing`.
  static FinCofElem cofin(std::vector<std::uint64_t> missing);
  static FinCofElem zero() { return {}; }
  static FinCofElem one() { return cofin({}); }

  Mode mode() const { return mode_; }
  bool is_finite() const { return mode_ == Mode::Finite; }
  /// Sorted and duplicate-free.
  const std::vector<std::uint64_t>& support() const { return support_; }
  bool contains(std::uint64_t n) const;
  /// Largest support index, or nullopt for an empty support.
  std::optional<std::uint64_t> max_index() const;

  /// `fin{1,2}` or `cofin{4}`.
  std::string to_string() const;
  /// Inverse of to_string. Throws DomainError on malformed text.
  static FinCofElem parse(std::string_view text);

  friend bool operator==(const FinCofElem& a, const FinCofElem& b) = default;

 private:
  Mode mode_ = Mode::Finite;
  std::vector<std::uint64_t> support_;
};

std::ostream& operator<<(std::ostream& os, const FinCofElem& a);

FinCofElem fc_add(const FinCofElem& a, const FinCofElem& b);
FinCofElem fc_mul(const FinCofElem& a, const FinCofElem& b);
inline FinCofElem fc_neg(const FinCofElem& a) { return a; }
inline FinCofElem operator+(const FinCofElem& a, const FinCofElem& b) { return fc_add(a, b); }
inline FinCofElem operator*(const FinCofElem& a, const FinCofElem& b) { return fc_mul(a, b); }

/// Membership in Fin = the finite members of S.
bool is_in_fin(const FinCofElem& a);

struct FinIdealEvidence {
  std::size_t sums_checked = 0;
  std::size_t products_checked = 0;
  bool closed_under_addition = true;
  bool absorbing = true;
  bool proper = true;  // 1 is not in Fin
  bool holds() const { return closed_under_addition && absorbing && proper; }
};

/// Checks a + b and s * a for every sampled a, b in Fin and s in `sample`.
FinIdealEvidence fin_is_ideal_witness(std::span<const FinCofElem> sample);

/// For a finite `a`, a point x with fin{x} outside the principal ideal (a):
/// every multiple of a is a subset of a. DomainError if `a` is cofinite.
std::uint64_t fin_not_principal_witness(const FinCofElem& a);

/// A hom S -> Z/2: evaluation at a point, or the quotient by Fin.
class SHom {
 public:
  enum class Kind { PointEval, FrechetQuotient };

  Kind kind() const { return kind_; }
  /// The evaluation point. DomainError for the Frechet quotient.
  std::uint64_t point() const;

  std::uint8_t apply(const FinCofElem& a) const;
  std::uint8_t operator()(const FinCofElem& a) const { return apply(a); }
  std::string to_string() const;

  friend SHom frechet_hom();
  friend SHom point_hom(std::uint64_t x);
  friend bool operator==(const SHom& a, const SHom& b) = default;

 private:
  SHom(Kind kind, std::uint64_t point) : kind_(kind), point_(point) {}
  Kind kind_;
  std::uint64_t point_;
};

SHom frechet_hom();
SHom point_hom(std::uint64_t x);

/// The first axiom of a unital ring hom that fails on the given elements.
std::optional<std::string> shom_violation(const SHom& h, const FinCofElem& a, const FinCofElem& b);

struct NonInducedWitness {
  FinCofElem element;  // cofin{x}
  std::uint64_t point = 0;
  std::uint8_t frechet_value = 0;
  std::uint8_t point_value = 0;
  bool separates() const { return frechet_value != point_value; }
};

/// An element on which the Frechet quotient and evaluation at x differ.
NonInducedWitness non_induced_witness(std::uint64_t x);

struct KernelClass {
  enum class Family { FinKernel, PointKernel };
  Family family;
  std::uint64_t point = 0;  // PointKernel only
  /// h(1) = 1 and h(0) = 0, so S/ker h is the two-element field.
  bool quotient_is_field = false;
  /// An element of the kernel and one outside it.
  FinCofElem kernel_member;
  FinCofElem non_member;
  std::string to_string() const;
};

KernelClass kernel_classify(const SHom& h);

/// Whether Fin + ker h = S, with the finite f making 1 - f a kernel member
/// when it does.
struct ImageCondition {
  bool holds = false;
  std::optional<FinCofElem> witness;
  std::string note;
};

ImageCondition image_condition(const SHom& h);

/// Membership of `a` on {0, ..., bound - 1}.
std::vector<std::uint8_t> window(const FinCofElem& a, std::uint64_t bound);

}  // namespace stone
