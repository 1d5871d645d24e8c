#pragma once

#include <random>
#include <string>
#include <vector>

#include "stone/dsl/ast.hpp"
#include "stone/powerset_ring.hpp"

namespace gen {

using namespace stone;
using namespace stone::dsl;

// ---------------------------------------------------------------------------
// Random ASTs for the round-trip property.

class AstGen {
 public:
  explicit AstGen(std::uint64_t seed) : rng_(seed) {}

  ExprPtr program() {
    switch (pick(8)) {
      case 0: return check();
      case 1: {
        Let l{ident(), expr(3), nullptr};
        return make_expr(std::move(l));
      }
      default: return expr(4);
    }
  }

 private:
  std::size_t pick(std::size_t n) { return rng_() % n; }

  std::string ident() {
    static const std::vector<std::string> names{"u", "v", "w", "foo", "x1", "A", "set_2"};
    return names[pick(names.size())];
  }

  std::string label() {
    static const std::vector<std::string> labels{"a", "b", "c", "1", "2", "10", "Z", "fin", "x", "in"};
    return labels[pick(labels.size())];
  }

  std::vector<std::string> labels() {
    std::vector<std::string> out(pick(4));
    for (auto& l : out) l = label();
    return out;
  }

  std::uint64_t number() {
    switch (pick(4)) {
      case 0: return 0;
      case 1: return ~std::uint64_t{0};
      default: return pick(100);
    }
  }

  ElemLit elem(int depth) {
    switch (depth > 0 ? pick(3) : pick(2)) {
      case 0: return ElemLit{number()};
      case 1: return ElemLit{labels()};
      default: {
        ElemLit::Tuple t;
        const std::size_t n = 1 + pick(3);
        for (std::size_t i = 0; i < n; ++i) t.items.push_back(elem(depth - 1));
        return ElemLit{std::move(t)};
      }
    }
  }

  RingDesc ring(int depth) {
    RingDesc r;
    switch (depth > 0 ? pick(5) : pick(2)) {
      case 0:
        r.kind = RingDesc::Kind::ZMod;
        r.modulus = 1 + pick(60);
        break;
      case 1:
        r.kind = RingDesc::Kind::PowerSet;
        r.labels = labels();
        break;
      case 2:
        r.kind = RingDesc::Kind::Quotient;
        r.children.push_back(ring(depth - 1));
        for (std::size_t i = pick(3); i > 0; --i) r.generators.push_back(elem(2));
        break;
      case 3:
        r.kind = RingDesc::Kind::Booleanization;
        r.children.push_back(ring(depth - 1));
        break;
      default:
        r.kind = RingDesc::Kind::Product;
        for (std::size_t i = 2 + pick(2); i > 0; --i) r.children.push_back(ring(depth - 1));
        break;
    }
    return r;
  }

  ExprPtr expr(int depth, bool in_call = false) {
    const std::size_t choices = depth > 0 ? 12 : 5;
    switch (pick(choices)) {
      case 0: return make_expr(SetLiteral{labels()});
      case 1: {
        FinCofLiteral f{pick(2) == 1, {}};
        for (std::size_t i = pick(4); i > 0; --i) f.support.push_back(number());
        return make_expr(std::move(f));
      }
      case 2: return make_expr(NumberLit{number()});
      case 3: return make_expr(Var{ident()});
      case 4: return make_expr(RingLiteral{ring(depth)});
      case 5:
      case 6: {
        static const char ops[] = {'+', '-', '*', '|', '&', '\\'};
        return make_expr(Binary{ops[pick(6)], expr(depth - 1), expr(depth - 1)});
      }
      case 7: return make_expr(Complement{expr(depth - 1)});
      case 8: {
        static const std::vector<std::string> fns{"spec", "tensor", "f", "D"};
        Call c{fns[pick(fns.size())], {}};
        for (std::size_t i = pick(4); i > 0; --i) {
          if (pick(4) == 0) {
            c.args.push_back(make_expr(Over{expr(depth - 1, true), expr(depth - 1, true)}));
          } else {
            c.args.push_back(expr(depth - 1));
          }
        }
        return make_expr(std::move(c));
      }
      case 9: {
        TupleExpr t;
        for (std::size_t i = pick(4); i > 0; --i) t.items.push_back(expr(depth - 1));
        return make_expr(std::move(t));
      }
      case 10:
        // A let inside an `over` operand would swallow the keyword.
        if (in_call) return make_expr(Var{ident()});
        return make_expr(Let{ident(), expr(depth - 1), expr(depth - 1)});
      default: return make_expr(Complement{make_expr(Complement{expr(depth - 1)})});
    }
  }

  ExprPtr check() {
    static const std::vector<std::string> suites{"stone", "sheaf", "all"};
    Check c{suites[pick(suites.size())], {}};
    static const std::vector<std::string> flags{"size", "seed", "ring"};
    for (std::size_t i = pick(3); i > 0; --i) c.flags.emplace_back(flags[pick(flags.size())], expr(2));
    return make_expr(std::move(c));
  }

  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Random set expressions for the differential test, paired with their value
// computed directly through powerset_ring.

struct SetCase {
  std::string source;
  SetElem value;
};

class SetGen {
 public:
  SetGen(std::uint64_t seed, Universe x) : rng_(seed), x_(std::move(x)) {}

  SetCase make(int depth) {
    const std::size_t choice = depth > 0 ? rng_() % 8 : 0;
    if (choice == 0) {
      std::vector<std::string> ls;
      for (const auto& l : x_.labels()) {
        if (rng_() % 3 == 0) ls.push_back(l);
      }
      std::string src = "{";
      for (std::size_t i = 0; i < ls.size(); ++i) src += (i ? "," : "") + ls[i];
      return {src + "}", x_.subset(ls)};
    }
    if (choice == 1) {
      SetCase a = make(depth - 1);
      return {"(" + a.source + ")^c", ps_complement(a.value)};
    }
    if (choice == 2) {
      SetCase v = make(depth - 1);
      SetCase body = make(depth - 1);
      // let t = v in (t op body)
      SetCase combined = combine("t", v.value, body);
      return {"(let t = " + v.source + " in " + combined.source + ")", combined.value};
    }
    SetCase a = make(depth - 1), b = make(depth - 1);
    static const char* ops[] = {"+", "-", "*", "&", "|", "\\"};
    const std::string op = ops[rng_() % 6];
    return {"(" + a.source + " " + op + " " + b.source + ")", apply(op, a.value, b.value)};
  }

 private:
  static SetElem apply(const std::string& op, const SetElem& a, const SetElem& b) {
    if (op == "+" || op == "-") return ps_add(a, b);
    if (op == "*" || op == "&") return ps_mul(a, b);
    if (op == "|") return ps_union(a, b);
    return ps_diff(a, b);
  }

  SetCase combine(const std::string& name, const SetElem& v, const SetCase& body) {
    static const char* ops[] = {"+", "*", "|", "\\"};
    const std::string op = ops[rng_() % 4];
    return {name + " " + op + " " + body.source, apply(op, v, body.value)};
  }

  std::mt19937_64 rng_;
  Universe x_;
};

}  // namespace gen
