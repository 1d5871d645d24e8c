#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "stone/fincofin.hpp"
#include "stone/finite_ring.hpp"
#include "stone/powerset_ring.hpp"
#include "stone/spectrum.hpp"
#include "stone/tensor.hpp"

namespace stone::dsl {

/// One row of a theorem-check report.
struct AxiomRow {
  std::string axiom;
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed() const { return instances - passed; }
};

struct Report {
  std::string suite;
  std::vector<AxiomRow> rows;
  std::optional<std::string> counterexample;  // the first failure seen
  std::vector<std::string> notes;

  std::uint64_t instances() const;
  std::uint64_t passed() const;
  std::uint64_t failed() const { return instances() - passed(); }
  bool ok() const { return failed() == 0; }

  /// Adds one instance to `axiom`, recording `detail` if it is the first failure.
  void record(const std::string& axiom, bool pass, const std::string& detail = {});
  /// Appends every row of `other`, prefixing axioms with its suite name.
  void merge(const Report& other);

  std::string render() const;
  nlohmann::json to_json() const;
};

struct ElemList {
  Ring ring;
  std::vector<RingElem> items;
};
struct SpecValue {
  std::shared_ptr<const SpecSpace> space;
};
struct ClopenValue {
  std::shared_ptr<const SpecSpace> space;
  std::vector<PointSet> clopens;
};
struct PointSetValue {
  std::shared_ptr<const SpecSpace> space;
  PointSet points = 0;
};
struct HomList {
  std::vector<RingHomPS> homs;
};
struct TensorValue {
  std::shared_ptr<const TensorAlgebra> algebra;
};
struct Value;
struct TupleValue {
  std::vector<Value> items;
};

struct Value {
  using Data = std::variant<SetElem, FinCofElem, std::uint64_t, RingElem, Ring, ElemList, Ideal, SpecValue, ClopenValue,
                            PointSetValue, HomList, TensorValue, bool, Report, TupleValue>;
  Data data;

  /// "set", "ring", "number", ...
  std::string type_name() const;
  /// Deterministic text; multi-line for spectra, hom lists and reports.
  std::string render() const;
  nlohmann::json to_json() const;
};

}  // namespace stone::dsl
