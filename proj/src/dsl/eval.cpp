#include "stone/dsl/eval.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "stone/dsl/checks.hpp"
#include "stone/dsl/parser.hpp"
#include "stone/error.hpp"
#include "stone/hom_classifier.hpp"
#include "stone/scheme.hpp"

namespace stone::dsl {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Labels of set literals, and names of variables, reachable from `e`.
void collect(const Expr& e, std::set<std::string>& labels, std::set<std::string>& vars) {
  auto rec = [&](const ExprPtr& p) {
    if (p) collect(*p, labels, vars);
  };
  std::visit(Overloaded{
                 [&](const SetLiteral& x) { labels.insert(x.labels.begin(), x.labels.end()); },
                 [&](const Var& x) { vars.insert(x.name); },
                 [&](const Binary& x) {
                   rec(x.left);
                   rec(x.right);
                 },
                 [&](const Complement& x) { rec(x.operand); },
                 [&](const Call& x) {
                   for (const auto& a : x.args) rec(a);
                 },
                 [&](const Over& x) {
                   rec(x.algebra);
                   rec(x.base);
                 },
                 [&](const TupleExpr& x) {
                   for (const auto& a : x.items) rec(a);
                 },
                 [&](const Let& x) {
                   rec(x.value);
                   rec(x.body);
                 },
                 [&](const Check& x) {
                   for (const auto& f : x.flags) rec(f.second);
                 },
                 [](const auto&) {},
             },
             e.node);
}

SetElem literal_set(const Universe& u, const std::vector<std::string>& labels) {
  BitSet bits(u.size());
  for (const auto& l : labels) bits.set(u.index_of(l));
  return SetElem(u, std::move(bits));
}

std::string capacity_hint() { return " (raise the limit with the STONE_ENUM_LIMIT environment variable)"; }

class Evaluator {
 public:
  Evaluator(Env& env, Universe universe) : env_(env), universe_(std::move(universe)) {}

  Value eval(const Expr& e) {
    try {
      return dispatch(e);
    } catch (const DslError&) {
      throw;
    } catch (const CapacityError& err) {
      throw DslError(e.span, std::string(err.what()) + capacity_hint());
    } catch (const Error& err) {
      throw DslError(e.span, err.what());
    }
  }

 private:
  Value dispatch(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const SetLiteral& x) { return Value{literal_set(universe_, x.labels)}; },
            [&](const FinCofLiteral& x) {
              return Value{FinCofElem(x.cofinite ? FinCofElem::Mode::Cofinite : FinCofElem::Mode::Finite, x.support)};
            },
            [&](const NumberLit& x) { return Value{x.value}; },
            [&](const Var& x) { return lookup(x.name, e.span); },
            [&](const Binary& x) { return binary(x.op, eval(*x.left), eval(*x.right), e.span); },
            [&](const Complement& x) { return complement(eval(*x.operand), e.span); },
            [&](const Call& x) { return call(x, e.span); },
            [&](const Over&) -> Value {
              throw TypeError(e.span, "'over' is only allowed inside tensor(...) arguments");
            },
            [&](const TupleExpr& x) {
              TupleValue t;
              for (const auto& item : x.items) t.items.push_back(eval(*item));
              return Value{std::move(t)};
            },
            [&](const RingLiteral& x) { return Value{build_ring(x.ring)}; },
            [&](const Let& x) {
              Value v = eval(*x.value);
              if (!x.body) {
                env_.bindings.insert_or_assign(x.name, v);
                return v;
              }
              scopes_.emplace_back(x.name, std::move(v));
              Value out = eval(*x.body);
              scopes_.pop_back();
              return out;
            },
            [&](const Check& x) { return check(x, e.span); },
        },
        e.node);
  }

  Value lookup(const std::string& name, Span span) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    auto it = env_.bindings.find(name);
    if (it == env_.bindings.end()) throw TypeError(span, "unknown name '" + name + "'");
    if (auto* s = std::get_if<SetElem>(&it->second.data)) return Value{transfer(*s, universe_)};
    return it->second;
  }

  [[noreturn]] static void type_mismatch(char op, const Value& a, const Value& b, Span span) {
    throw TypeError(span, "operator '" + std::string(1, op) + "' does not apply to " + a.type_name() + " and " +
                              b.type_name());
  }

  Value binary(char op, const Value& a, const Value& b, Span span) {
    if (auto* x = std::get_if<SetElem>(&a.data)) {
      auto* y = std::get_if<SetElem>(&b.data);
      if (!y) type_mismatch(op, a, b, span);
      switch (op) {
        case '+':
        case '-': return Value{ps_add(*x, *y)};
        case '*':
        case '&': return Value{ps_mul(*x, *y)};
        case '|': return Value{ps_union(*x, *y)};
        case '\\': return Value{ps_diff(*x, *y)};
      }
    }
    if (auto* x = std::get_if<FinCofElem>(&a.data)) {
      auto* y = std::get_if<FinCofElem>(&b.data);
      if (!y) type_mismatch(op, a, b, span);
      switch (op) {
        case '+':
        case '-': return Value{*x + *y};
        case '*':
        case '&': return Value{*x * *y};
        case '|': return Value{*x + *y + *x * *y};
        case '\\': return Value{*x + *x * *y};
      }
    }
    const RingElem* ea = std::get_if<RingElem>(&a.data);
    const RingElem* eb = std::get_if<RingElem>(&b.data);
    if (ea || eb) {
      const Ring& ring = ea ? ea->ring() : eb->ring();
      const RingElem x = ea ? *ea : coerce(ring, a);
      const RingElem y = eb ? *eb : coerce(ring, b);
      if (!(x.ring() == y.ring())) {
        throw TypeError(span, "elements of " + x.ring().descriptor() + " and " + y.ring().descriptor() + " do not mix");
      }
      switch (op) {
        case '+': return Value{x + y};
        case '-': return Value{x - y};
        case '*':
        case '&': return Value{x * y};
        case '|': return Value{x + y - x * y};
        case '\\': return Value{x - x * y};
      }
    }
    auto* na = std::get_if<std::uint64_t>(&a.data);
    auto* nb = std::get_if<std::uint64_t>(&b.data);
    if (na && nb) {
      std::uint64_t r = 0;
      switch (op) {
        case '+':
          if (__builtin_add_overflow(*na, *nb, &r)) throw TypeError(span, "integer overflow");
          return Value{r};
        case '*':
          if (__builtin_mul_overflow(*na, *nb, &r)) throw TypeError(span, "integer overflow");
          return Value{r};
        case '-':
          if (*nb > *na) throw TypeError(span, "negative result; numbers are natural");
          return Value{*na - *nb};
        default: break;
      }
    }
    type_mismatch(op, a, b, span);
  }

  Value complement(const Value& v, Span span) {
    if (auto* s = std::get_if<SetElem>(&v.data)) return Value{ps_complement(*s)};
    if (auto* f = std::get_if<FinCofElem>(&v.data)) return Value{FinCofElem::one() + *f};
    if (auto* e = std::get_if<RingElem>(&v.data)) return Value{e->ring().one() - *e};
    throw TypeError(span, "'^c' does not apply to a " + v.type_name());
  }

  // Argument helpers.
  const Ring& ring_arg(const Value& v, const Call& c, std::size_t i, Span span) {
    if (auto* r = std::get_if<Ring>(&v.data)) return *r;
    throw TypeError(span, c.name + ": argument " + std::to_string(i + 1) + " must be a ring, got " + v.type_name());
  }

  void arity(const Call& c, std::size_t lo, std::size_t hi, Span span) {
    if (c.args.size() < lo || c.args.size() > hi) {
      const std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      throw TypeError(span, c.name + " takes " + want + " arguments, got " + std::to_string(c.args.size()));
    }
  }

  std::shared_ptr<const SpecSpace> spec_of(const Value& v, const Call& c, Span span) {
    if (auto* s = std::get_if<SpecValue>(&v.data)) return s->space;
    if (auto* r = std::get_if<Ring>(&v.data)) return std::make_shared<const SpecSpace>(spec(*r));
    throw TypeError(span, c.name + ": expected a ring or a spectrum, got " + v.type_name());
  }

  AlgebraPresentation algebra_arg(const Expr& arg, const Call& c) {
    if (auto* over = std::get_if<Over>(&arg.node)) {
      const Value base = eval(*over->base);
      const Ring* r = std::get_if<Ring>(&base.data);
      if (!r || r->kind() != RingKind::PowerSet) throw TypeError(over->base->span, c.name + ": base must be P{...}");
      const Universe& x = r->universe();
      const Value alg = eval(*over->algebra);
      if (auto* ar = std::get_if<Ring>(&alg.data); ar && ar->kind() == RingKind::PowerSet) {
        return AlgebraPresentation(x, transfer(ar->universe().full_set(), x));
      }
      if (auto* s = std::get_if<SetElem>(&alg.data)) return AlgebraPresentation(x, transfer(*s, x));
      throw TypeError(over->algebra->span, c.name + ": algebra must be P{...} or a set");
    }
    const Value v = eval(arg);
    if (auto* s = std::get_if<SetElem>(&v.data)) return AlgebraPresentation(s->universe(), *s);
    throw TypeError(arg.span, c.name + ": expected 'P{...} over P{...}' or a set, got " + v.type_name());
  }

  Value call(const Call& c, Span span) {
    const std::string& n = c.name;
    if (n == "tensor") {
      arity(c, 2, 2, span);
      auto t = std::make_shared<const TensorAlgebra>(tensor_product(algebra_arg(*c.args[0], c), algebra_arg(*c.args[1], c)));
      return Value{TensorValue{t}};
    }
    std::vector<Value> args;
    for (const auto& a : c.args) args.push_back(eval(*a));
    if (n == "spec") {
      arity(c, 1, 1, span);
      return Value{SpecValue{spec_of(args[0], c, span)}};
    }
    if (n == "clop") {
      arity(c, 1, 1, span);
      auto s = spec_of(args[0], c, span);
      return Value{ClopenValue{s, clop(*s).clopens()}};
    }
    if (n == "booleanize") {
      arity(c, 1, 1, span);
      return Value{booleanize(ring_arg(args[0], c, 0, span))};
    }
    if (n == "idempotents" || n == "elements" || n == "atoms") {
      arity(c, 1, 1, span);
      const Ring& r = ring_arg(args[0], c, 0, span);
      std::vector<RingElem> items = n == "idempotents" ? idempotents(r) : n == "elements" ? r.elements() : atoms(r);
      return Value{ElemList{r, std::move(items)}};
    }
    if (n == "size") {
      arity(c, 1, 1, span);
      return Value{ring_arg(args[0], c, 0, span).size()};
    }
    if (n == "is_boolean") {
      arity(c, 1, 1, span);
      return Value{is_boolean(ring_arg(args[0], c, 0, span))};
    }
    if (n == "elem") {
      arity(c, 2, 2, span);
      return Value{coerce(ring_arg(args[0], c, 0, span), args[1])};
    }
    if (n == "D") {
      arity(c, 1, 2, span);
      RingElem e = args.size() == 2 ? coerce(ring_arg(args[1], c, 1, span), args[0]) : element_arg(args[0], c, span);
      auto s = std::make_shared<const SpecSpace>(spec(e.ring()));
      return Value{PointSetValue{s, d_locus(e, *s)}};
    }
    if (n == "quotient" || n == "ideal") {
      if (args.empty()) arity(c, 1, 1, span);
      const Ring& r = ring_arg(args[0], c, 0, span);
      std::vector<RingElem> gens;
      for (std::size_t i = 1; i < args.size(); ++i) gens.push_back(coerce(r, args[i]));
      if (n == "quotient") return Value{Ring::quotient(r, gens)};
      return Value{Ideal::generated_by(r, gens)};
    }
    if (n == "homs") {
      arity(c, 2, 2, span);
      const Ring& y = ring_arg(args[0], c, 0, span);
      const Ring& x = ring_arg(args[1], c, 1, span);
      if (y.kind() != RingKind::PowerSet || x.kind() != RingKind::PowerSet) {
        throw TypeError(span, "homs: both arguments must be power set rings P{...}");
      }
      return Value{HomList{enumerate_homs(y.universe(), x.universe())}};
    }
    if (n == "stalk") {
      arity(c, 2, 2, span);
      const Ring& r = ring_arg(args[0], c, 0, span);
      if (r.kind() != RingKind::PowerSet) throw TypeError(span, "stalk: the space must be given as P{...}");
      const SetElem* s = std::get_if<SetElem>(&args[1].data);
      if (!s || s->count() != 1) throw TypeError(span, "stalk: the point must be a singleton set {x}");
      const std::string& label = s->universe().label(s->indices().front());
      const Stalk st = stalk(r.universe(), label);
      if (!st.is_field) throw ConsistencyError("stalk at " + label + " is not a field");
      return Value{st.ring};
    }
    if (n == "frechet") {
      arity(c, 1, 1, span);
      return Value{std::uint64_t{frechet_hom()(fincof_arg(args[0], c, span))}};
    }
    if (n == "point") {
      arity(c, 2, 2, span);
      auto* x = std::get_if<std::uint64_t>(&args[0].data);
      if (!x) throw TypeError(span, "point: first argument must be a number");
      return Value{std::uint64_t{point_hom(*x)(fincof_arg(args[1], c, span))}};
    }
    throw TypeError(span, "unknown function '" + n + "'");
  }

  RingElem element_arg(const Value& v, const Call& c, Span span) {
    if (auto* e = std::get_if<RingElem>(&v.data)) return *e;
    throw TypeError(span, c.name + ": expected a ring element (write elem(R, x) or " + c.name + "(x, R))");
  }

  FinCofElem fincof_arg(const Value& v, const Call& c, Span span) {
    if (auto* f = std::get_if<FinCofElem>(&v.data)) return *f;
    throw TypeError(span, c.name + ": expected fin{...} or cofin{...}, got " + v.type_name());
  }

  Value check(const Check& x, Span span) {
    CheckOptions opt;
    for (const auto& [name, expr] : x.flags) {
      const Value v = eval(*expr);
      if (name == "size" || name == "seed") {
        auto* num = std::get_if<std::uint64_t>(&v.data);
        if (!num) throw TypeError(expr->span, "--" + name + " needs a number");
        if (name == "size") opt.size = *num;
        else opt.seed = *num;
      } else if (name == "ring") {
        auto* r = std::get_if<Ring>(&v.data);
        if (!r) throw TypeError(expr->span, "--ring needs a ring");
        opt.ring = *r;
      } else {
        throw TypeError(span, "unknown check flag --" + name);
      }
    }
    return Value{run_check(x.suite, opt)};
  }

  Env& env_;
  Universe universe_;
  std::vector<std::pair<std::string, Value>> scopes_;
};

}  // namespace

std::vector<std::string> natural_sort(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    const bool na = is_numeral(a);
    const bool nb = is_numeral(b);
    if (na != nb) return na;
    if (na) {
      const auto ta = a.substr(std::min(a.find_first_not_of('0'), a.size() - 1));
      const auto tb = b.substr(std::min(b.find_first_not_of('0'), b.size() - 1));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
    }
    return a < b;
  });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

Universe infer_universe(const Expr& e, const Env& env) {
  if (env.universe) return *env.universe;
  std::set<std::string> labels;
  std::set<std::string> vars;
  collect(e, labels, vars);
  for (const auto& v : vars) {
    auto it = env.bindings.find(v);
    if (it == env.bindings.end()) continue;
    if (auto* s = std::get_if<SetElem>(&it->second.data)) {
      for (std::size_t i : s->indices()) labels.insert(s->universe().label(i));
    }
  }
  return Universe(natural_sort({labels.begin(), labels.end()}));
}

Ring build_ring(const RingDesc& d) {
  switch (d.kind) {
    case RingDesc::Kind::ZMod: return Ring::zmod(d.modulus);
    case RingDesc::Kind::PowerSet: {
      const Universe u(d.labels);
      return Ring::power_set(u);
    }
    case RingDesc::Kind::Booleanization: return Ring::booleanization(build_ring(d.children.at(0)));
    case RingDesc::Kind::Quotient: {
      const Ring base = build_ring(d.children.at(0));
      std::vector<RingElem> gens;
      for (const auto& g : d.generators) gens.push_back(coerce(base, g));
      return Ring::quotient(base, gens);
    }
    case RingDesc::Kind::Product: {
      std::vector<Ring> factors;
      for (const auto& f : d.children) factors.push_back(build_ring(f));
      return Ring::product(std::move(factors));
    }
  }
  throw DomainError("unknown ring descriptor");
}

RingElem coerce(const Ring& ring, const ElemLit& lit) {
  if (ring.kind() == RingKind::Quotient || ring.kind() == RingKind::Booleanization) {
    return ring.from_base(coerce(ring.base(), lit));
  }
  if (auto* n = std::get_if<std::uint64_t>(&lit.value)) {
    if (*n > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("integer too large");
    return ring.from_integer(static_cast<std::int64_t>(*n));
  }
  if (auto* labels = std::get_if<std::vector<std::string>>(&lit.value)) {
    if (ring.kind() != RingKind::PowerSet) throw DomainError("a set literal names an element of a power set ring only");
    return ring.subset(literal_set(ring.universe(), *labels));
  }
  const auto& t = std::get<ElemLit::Tuple>(lit.value);
  if (ring.kind() != RingKind::Product) throw DomainError("a tuple names an element of a product ring only");
  if (t.items.size() != ring.factors().size()) {
    throw DomainError("tuple has " + std::to_string(t.items.size()) + " components, " + ring.descriptor() + " has " +
                      std::to_string(ring.factors().size()) + " factors");
  }
  std::vector<RingElem> parts;
  for (std::size_t i = 0; i < t.items.size(); ++i) parts.push_back(coerce(ring.factors()[i], t.items[i]));
  return ring.tuple(parts);
}

RingElem coerce(const Ring& ring, const Value& v) {
  if (auto* e = std::get_if<RingElem>(&v.data)) {
    if (e->ring() == ring) return *e;
    if ((ring.kind() == RingKind::Quotient || ring.kind() == RingKind::Booleanization) && e->ring() == ring.base()) {
      return ring.from_base(*e);
    }
    throw DomainError("element of " + e->ring().descriptor() + " used in " + ring.descriptor());
  }
  if (ring.kind() == RingKind::Quotient || ring.kind() == RingKind::Booleanization) {
    return ring.from_base(coerce(ring.base(), v));
  }
  if (auto* n = std::get_if<std::uint64_t>(&v.data)) return coerce(ring, ElemLit{*n});
  if (auto* s = std::get_if<SetElem>(&v.data)) {
    if (ring.kind() != RingKind::PowerSet) throw DomainError("a set names an element of a power set ring only");
    return ring.subset(transfer(*s, ring.universe()));
  }
  if (auto* t = std::get_if<TupleValue>(&v.data)) {
    if (ring.kind() != RingKind::Product) throw DomainError("a tuple names an element of a product ring only");
    if (t->items.size() != ring.factors().size()) {
      throw DomainError("tuple has " + std::to_string(t->items.size()) + " components, " + ring.descriptor() +
                        " has " + std::to_string(ring.factors().size()) + " factors");
    }
    std::vector<RingElem> parts;
    for (std::size_t i = 0; i < t->items.size(); ++i) parts.push_back(coerce(ring.factors()[i], t->items[i]));
    return ring.tuple(parts);
  }
  throw DomainError("a " + v.type_name() + " does not name an element of " + ring.descriptor());
}

Value eval(const Expr& e, Env& env) {
  Evaluator ev(env, infer_universe(e, env));
  return ev.eval(e);
}

Value evaluate(std::string_view source, Env& env) { return eval(*parse(source), env); }

}  // namespace stone::dsl
