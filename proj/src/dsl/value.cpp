#include "stone/dsl/value.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "stone/error.hpp"
#include "stone/hom_classifier.hpp"

namespace stone::dsl {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::string render_list(const std::vector<RingElem>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i].to_string();
  }
  return out + "}";
}

nlohmann::json string_list(const std::vector<RingElem>& items) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : items) out.push_back(e.to_string());
  return out;
}

std::string render_spec(const SpecSpace& s) {
  std::ostringstream os;
  os << "Spec(" << s.ring().descriptor() << "): " << s.size() << (s.size() == 1 ? " point" : " points") << '\n';
  for (const auto& p : s.points()) {
    os << "  " << p.name << " = {";
    const auto members = p.member_strings();
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
    os << "}\n";
  }
  os << "opens:";
  for (std::size_t i = 0; i < s.opens().size(); ++i) os << (i ? ", " : " ") << s.to_string(s.opens()[i]);
  return os.str();
}

std::string render_hom(const RingHomPS& h) {
  std::string out;
  const auto& y = h.source();
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) out += ", ";
    out += "{" + y.label(i) + "}->" + h.atom_images()[i].to_string();
  }
  return out.empty() ? "(empty source)" : out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

std::uint64_t Report::instances() const {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.instances;
  return n;
}

std::uint64_t Report::passed() const {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.passed;
  return n;
}

void Report::record(const std::string& axiom, bool pass, const std::string& detail) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const AxiomRow& r) { return r.axiom == axiom; });
  if (it == rows.end()) {
    rows.push_back(AxiomRow{axiom, 0, 0});
    it = rows.end() - 1;
  }
  ++it->instances;
  if (pass) {
    ++it->passed;
  } else if (!counterexample) {
    counterexample = axiom + (detail.empty() ? std::string() : ": " + detail);
  }
}

void Report::merge(const Report& other) {
  for (const auto& r : other.rows) rows.push_back(AxiomRow{other.suite + "." + r.axiom, r.instances, r.passed});
  if (!counterexample && other.counterexample) counterexample = other.suite + "." + *other.counterexample;
  for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
}

std::string Report::render() const {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.axiom.size());
  std::ostringstream os;
  os << "suite " << suite << '\n';
  os << std::left << std::setw(static_cast<int>(width)) << "axiom" << std::right << std::setw(11) << "instances"
     << std::setw(8) << "passed" << std::setw(8) << "failed" << '\n';
  auto line = [&](const std::string& name, std::uint64_t n, std::uint64_t p) {
    os << std::left << std::setw(static_cast<int>(width)) << name << std::right << std::setw(11) << n << std::setw(8)
       << p << std::setw(8) << (n - p) << "  " << (n == p ? "PASS" : "FAIL") << '\n';
  };
  for (const auto& r : rows) line(r.axiom, r.instances, r.passed);
  line("total", instances(), passed());
  if (counterexample) os << "counterexample: " << *counterexample << '\n';
  for (const auto& n : notes) os << "note: " << n << '\n';
  std::string out = os.str();
  out.pop_back();
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["instances"] = instances();
  j["passed"] = passed();
  j["failed"] = failed();
  if (counterexample) j["counterexample"] = *counterexample;
  j["axioms"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["axioms"].push_back({{"axiom", r.axiom}, {"instances", r.instances}, {"passed", r.passed}, {"failed", r.failed()}});
  }
  j["notes"] = notes;
  return j;
}

// ---------------------------------------------------------------------------
// Value

std::string Value::type_name() const {
  return std::visit(Overloaded{
                        [](const SetElem&) { return "set"; },
                        [](const FinCofElem&) { return "finite-cofinite set"; },
                        [](std::uint64_t) { return "number"; },
                        [](const RingElem&) { return "ring element"; },
                        [](const Ring&) { return "ring"; },
                        [](const ElemList&) { return "element list"; },
                        [](const Ideal&) { return "ideal"; },
                        [](const SpecValue&) { return "spectrum"; },
                        [](const ClopenValue&) { return "clopen algebra"; },
                        [](const PointSetValue&) { return "point set"; },
                        [](const HomList&) { return "hom list"; },
                        [](const TensorValue&) { return "tensor algebra"; },
                        [](bool) { return "truth value"; },
                        [](const Report&) { return "report"; },
                        [](const TupleValue&) { return "tuple"; },
                    },
                    data);
}

std::string Value::render() const {
  return std::visit(
      Overloaded{
          [](const SetElem& s) { return s.to_string(); },
          [](const FinCofElem& a) { return a.to_string(); },
          [](std::uint64_t n) { return std::to_string(n); },
          [](const RingElem& e) { return e.to_string(); },
          [](const Ring& r) { return r.descriptor(); },
          [](const ElemList& l) { return render_list(l.items); },
          [](const Ideal& i) { return i.to_string(); },
          [](const SpecValue& s) { return render_spec(*s.space); },
          [](const ClopenValue& c) {
            std::string out = std::to_string(c.clopens.size()) + (c.clopens.size() == 1 ? " clopen" : " clopens");
            for (auto s : c.clopens) out += "\n  " + c.space->to_string(s);
            return out;
          },
          [](const PointSetValue& p) { return p.space->to_string(p.points); },
          [](const HomList& h) {
            std::string out = std::to_string(h.homs.size()) + (h.homs.size() == 1 ? " hom" : " homs");
            for (const auto& phi : h.homs) {
              std::string f;
              try {
                f = hom_to_function(phi).to_string();
              } catch (const Error& e) {
                f = std::string("not induced: ") + e.what();
              }
              out += "\n  " + render_hom(phi) + "   P(f) for f = " + (f.empty() ? "(empty)" : f);
            }
            return out;
          },
          [](const TensorValue& t) {
            const auto& a = *t.algebra;
            std::string out = "P(" + a.left().carrier().to_string() + ") (x) P(" + a.right().carrier().to_string() +
                              "): dimension " + std::to_string(a.dimension());
            std::string basis;
            for (auto [l, r] : a.basis()) {
              if (!basis.empty()) basis += ", ";
              basis += "{" + a.left().base().label(l) + "}(x){" + a.left().base().label(r) + "}";
            }
            out += "\n  basis: " + (basis.empty() ? std::string("(none)") : basis);
            out += "\n  canonical map onto P(" + ps_mul(a.left().carrier(), a.right().carrier()).to_string() +
                   "): " + (a.verify_canonical_iso().all() ? "isomorphism" : "NOT an isomorphism");
            return out;
          },
          [](bool b) { return std::string(b ? "true" : "false"); },
          [](const Report& r) { return r.render(); },
          [](const TupleValue& t) {
            std::string out = "(";
            for (std::size_t i = 0; i < t.items.size(); ++i) out += (i ? ", " : "") + t.items[i].render();
            return out + ")";
          },
      },
      data);
}

nlohmann::json Value::to_json() const {
  nlohmann::json j = std::visit(
      Overloaded{
          [](const SetElem& s) { return s.to_json(); },
          [](const FinCofElem& a) {
            return nlohmann::json{{"mode", a.is_finite() ? "finite" : "cofinite"}, {"support", a.support()}};
          },
          [](std::uint64_t n) { return nlohmann::json{{"value", n}}; },
          [](const RingElem& e) { return nlohmann::json{{"ring", e.ring().descriptor()}, {"index", e.index()}}; },
          [](const Ring& r) { return nlohmann::json{{"ring", r.descriptor()}, {"size", r.size()}}; },
          [](const ElemList& l) { return nlohmann::json{{"ring", l.ring.descriptor()}, {"items", string_list(l.items)}}; },
          [](const Ideal& i) {
            return nlohmann::json{{"ring", i.ring().descriptor()}, {"members", string_list(i.members())}};
          },
          [](const SpecValue& s) { return spec_to_json(*s.space); },
          [](const ClopenValue& c) {
            nlohmann::json list = nlohmann::json::array();
            for (auto s : c.clopens) list.push_back(c.space->to_string(s));
            return nlohmann::json{{"ring", c.space->ring().descriptor()}, {"clopens", list}};
          },
          [](const PointSetValue& p) {
            return nlohmann::json{{"ring", p.space->ring().descriptor()}, {"points", p.space->to_string(p.points)}};
          },
          [](const HomList& h) {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& phi : h.homs) {
              nlohmann::json images = nlohmann::json::object();
              for (std::size_t i = 0; i < phi.source().size(); ++i) {
                images[phi.source().label(i)] = phi.atom_images()[i].to_string();
              }
              list.push_back({{"atom_images", images}, {"function", hom_to_function(phi).to_string()}});
            }
            return nlohmann::json{{"homs", list}};
          },
          [](const TensorValue& t) {
            const auto& a = *t.algebra;
            return nlohmann::json{{"left", a.left().carrier().to_string()},
                                  {"right", a.right().carrier().to_string()},
                                  {"dimension", a.dimension()},
                                  {"canonical_iso", a.verify_canonical_iso().all()}};
          },
          [](bool b) { return nlohmann::json{{"value", b}}; },
          [](const Report& r) { return r.to_json(); },
          [](const TupleValue& t) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& v : t.items) items.push_back(v.to_json());
            return nlohmann::json{{"items", items}};
          },
      },
      data);
  if (!std::holds_alternative<Report>(data)) {
    j["type"] = type_name();
    j["text"] = render();
  }
  return j;
}

}  // namespace stone::dsl
