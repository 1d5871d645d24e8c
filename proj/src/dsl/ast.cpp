#include "stone/dsl/ast.hpp"

namespace stone::dsl {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

bool equal_ptr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

bool equal_list(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal_ptr(a[i], b[i])) return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// 0 let, 1 additive, 2 multiplicative, 3 complement, 4 atom.
int precedence(const Expr& e) {
  return std::visit(Overloaded{
                        [](const Let&) { return 0; },
                        [](const Binary& b) { return (b.op == '*' || b.op == '&') ? 2 : 1; },
                        [](const Complement&) { return 3; },
                        [](const auto&) { return 4; },
                    },
                    e.node);
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

}  // namespace

bool equal(const ElemLit& a, const ElemLit& b) {
  if (a.value.index() != b.value.index()) return false;
  if (auto* t = std::get_if<ElemLit::Tuple>(&a.value)) {
    const auto& u = std::get<ElemLit::Tuple>(b.value);
    if (t->items.size() != u.items.size()) return false;
    for (std::size_t i = 0; i < t->items.size(); ++i) {
      if (!equal(t->items[i], u.items[i])) return false;
    }
    return true;
  }
  if (auto* n = std::get_if<std::uint64_t>(&a.value)) return *n == std::get<std::uint64_t>(b.value);
  return std::get<std::vector<std::string>>(a.value) == std::get<std::vector<std::string>>(b.value);
}

bool equal(const RingDesc& a, const RingDesc& b) {
  if (a.kind != b.kind || a.modulus != b.modulus || a.labels != b.labels) return false;
  if (a.children.size() != b.children.size() || a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equal(a.children[i], b.children[i])) return false;
  }
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    if (!equal(a.generators[i], b.generators[i])) return false;
  }
  return true;
}

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const SetLiteral& x) { return x.labels == std::get<SetLiteral>(b.node).labels; },
          [&](const FinCofLiteral& x) {
            const auto& y = std::get<FinCofLiteral>(b.node);
            return x.cofinite == y.cofinite && x.support == y.support;
          },
          [&](const NumberLit& x) { return x.value == std::get<NumberLit>(b.node).value; },
          [&](const Var& x) { return x.name == std::get<Var>(b.node).name; },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(b.node);
            return x.op == y.op && equal_ptr(x.left, y.left) && equal_ptr(x.right, y.right);
          },
          [&](const Complement& x) { return equal_ptr(x.operand, std::get<Complement>(b.node).operand); },
          [&](const Call& x) {
            const auto& y = std::get<Call>(b.node);
            return x.name == y.name && equal_list(x.args, y.args);
          },
          [&](const Over& x) {
            const auto& y = std::get<Over>(b.node);
            return equal_ptr(x.algebra, y.algebra) && equal_ptr(x.base, y.base);
          },
          [&](const TupleExpr& x) { return equal_list(x.items, std::get<TupleExpr>(b.node).items); },
          [&](const RingLiteral& x) { return equal(x.ring, std::get<RingLiteral>(b.node).ring); },
          [&](const Let& x) {
            const auto& y = std::get<Let>(b.node);
            return x.name == y.name && equal_ptr(x.value, y.value) && equal_ptr(x.body, y.body);
          },
          [&](const Check& x) {
            const auto& y = std::get<Check>(b.node);
            if (x.suite != y.suite || x.flags.size() != y.flags.size()) return false;
            for (std::size_t i = 0; i < x.flags.size(); ++i) {
              if (x.flags[i].first != y.flags[i].first || !equal_ptr(x.flags[i].second, y.flags[i].second)) {
                return false;
              }
            }
            return true;
          },
      },
      a.node);
}

std::string print(const ElemLit& e) {
  return std::visit(Overloaded{
                        [](std::uint64_t n) { return std::to_string(n); },
                        [](const std::vector<std::string>& labels) { return "{" + join(labels, ",") + "}"; },
                        [](const ElemLit::Tuple& t) {
                          std::vector<std::string> parts;
                          for (const auto& item : t.items) parts.push_back(print(item));
                          return "(" + join(parts, ", ") + ")";
                        },
                    },
                    e.value);
}

std::string print(const RingDesc& r) {
  switch (r.kind) {
    case RingDesc::Kind::ZMod: return "Z/" + std::to_string(r.modulus);
    case RingDesc::Kind::PowerSet: return "P{" + join(r.labels, ",") + "}";
    case RingDesc::Kind::Booleanization: return "B(" + print(r.children.at(0)) + ")";
    case RingDesc::Kind::Quotient: {
      std::string out = "Q(" + print(r.children.at(0));
      for (const auto& g : r.generators) out += ", " + print(g);
      return out + ")";
    }
    case RingDesc::Kind::Product: {
      std::vector<std::string> parts;
      for (const auto& f : r.children) {
        parts.push_back(f.kind == RingDesc::Kind::Product ? "(" + print(f) + ")" : print(f));
      }
      return join(parts, " x ");
    }
  }
  return {};
}

std::string print(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const SetLiteral& x) { return "{" + join(x.labels, ",") + "}"; },
          [](const FinCofLiteral& x) {
            std::vector<std::string> parts;
            for (auto v : x.support) parts.push_back(std::to_string(v));
            return std::string(x.cofinite ? "cofin" : "fin") + "{" + join(parts, ",") + "}";
          },
          [](const NumberLit& x) { return std::to_string(x.value); },
          [](const Var& x) { return x.name; },
          [&](const Binary& x) {
            const int p = precedence(e);
            const std::string op = std::string(1, x.op);
            return wrap(*x.left, precedence(*x.left) < p) + " " + op + " " + wrap(*x.right, precedence(*x.right) <= p);
          },
          [](const Complement& x) { return wrap(*x.operand, precedence(*x.operand) < 3) + "^c"; },
          [](const Call& x) {
            std::vector<std::string> parts;
            for (const auto& a : x.args) parts.push_back(print(*a));
            return x.name + "(" + join(parts, ", ") + ")";
          },
          [](const Over& x) { return print(*x.algebra) + " over " + print(*x.base); },
          [](const TupleExpr& x) {
            std::vector<std::string> parts;
            for (const auto& a : x.items) parts.push_back(print(*a));
            return "(" + join(parts, ", ") + (parts.size() == 1 ? ",)" : ")");
          },
          [](const RingLiteral& x) { return print(x.ring); },
          [](const Let& x) {
            std::string out = "let " + x.name + " = " + print(*x.value);
            if (x.body) out += " in " + print(*x.body);
            return out;
          },
          [](const Check& x) {
            std::string out = "check " + x.suite;
            for (const auto& [name, value] : x.flags) out += " --" + name + " " + print(*value);
            return out;
          },
      },
      e.node);
}

}  // namespace stone::dsl
