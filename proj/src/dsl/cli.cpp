#include "stone/dsl/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "stone/dsl/checks.hpp"
#include "stone/dsl/eval.hpp"
#include "stone/error.hpp"
#include "stone/guard.hpp"

namespace stone::dsl {

namespace {

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Ring eval_ring(const std::string& text, Env& env) {
  const Value v = evaluate(text, env);
  if (const auto* r = std::get_if<Ring>(&v.data)) return *r;
  throw TypeError(Span{0, text.size()}, "expected a ring, got a " + v.type_name());
}

void print(std::ostream& out, const Value& v, bool json) {
  if (json) {
    out << v.to_json().dump(2) << '\n';
  } else {
    out << v.render() << '\n';
  }
}

int status_of(const Value& v) {
  if (const auto* r = std::get_if<Report>(&v.data)) return r->ok() ? kExitOk : kExitCheckFailed;
  return kExitOk;
}

// Runs `body`, turning library and DSL errors into exit status 2.
template <class F>
int guarded(const std::string& source, std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const DslError& e) {
    err << describe(e, source) << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

const std::string& grammar_help() {
  static const std::string text =
      "expressions:\n"
      "  sets        {a,b}  A + B  A * B  A | B  A \\ B  A & B  A^c   (- is ring subtraction, same as +)\n"
      "  S           fin{1,2}  cofin{3}  frechet(a)  point(n, a)\n"
      "  rings       Z/n  P{a,b}  Q(R, g, ...)  B(R)  R x R\n"
      "  elements    elem(R, lit)  idempotents(R)  elements(R)  atoms(R)  size(R)  is_boolean(R)\n"
      "  ideals      ideal(R, g, ...)  quotient(R, g, ...)\n"
      "  spectra     spec(R)  clop(spec(R))  D(e)  D(lit, R)  booleanize(R)\n"
      "  tensor      tensor(P{..} over P{..}, P{..} over P{..})  tensor(A, B)\n"
      "  homs        homs(P{Y}, P{X})  stalk(P{X}, {x})\n"
      "  binding     let x = expr in expr   let x = expr\n"
      "  checks      check <suite> [--size n] [--seed s] [--ring R]\n"
      "suites: ";
  static const std::string full = [] {
    std::string s = text;
    const auto& names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
    return s + "\n";
  }();
  return full;
}

int repl(std::istream& in, std::ostream& out) {
  Env env;
  std::string line;
  out << "stone> " << std::flush;
  while (std::getline(in, line)) {
    if (line == ":quit" || line == ":q") break;
    if (line == ":help") {
      out << grammar_help();
    } else if (line.rfind(":universe", 0) == 0) {
      const auto labels = split_labels(line.substr(9));
      if (labels.empty()) {
        env.universe.reset();
        out << "universe: inferred\n";
      } else {
        env.universe = Universe(labels);
        out << "universe: " << env.universe->full_set().to_string() << '\n';
      }
    } else if (line.find_first_not_of(' ') != std::string::npos) {
      guarded(line, out, [&] {
        out << evaluate(line, env).render() << '\n';
        return kExitOk;
      });
    }
    out << "stone> " << std::flush;
  }
  out << '\n';
  return kExitOk;
}

int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  load_enumeration_limit_from_env();

  CLI::App app{"Stone duality toolkit", "stone"};
  app.require_subcommand(1);

  auto* repl_cmd = app.add_subcommand("repl", "interactive evaluator");

  std::string expr;
  std::string universe;
  bool json = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
  eval_cmd->add_option("expr", expr, "expression")->required();
  eval_cmd->add_option("--universe", universe, "comma-separated universe labels");
  eval_cmd->add_flag("--json", json, "print JSON");

  std::string ring_text;
  auto* spec_cmd = app.add_subcommand("spec", "print the spectrum of a ring");
  spec_cmd->add_option("ring", ring_text, "ring expression")->required();
  spec_cmd->add_flag("--json", json, "print JSON");

  std::string suite;
  CheckOptions opt;
  std::string check_ring;
  auto* check_cmd = app.add_subcommand("check", "run a check suite");
  check_cmd->add_option("suite", suite, "suite name")->required();
  check_cmd->add_option("--size", opt.size, "largest universe size");
  check_cmd->add_option("--seed", opt.seed, "random seed");
  check_cmd->add_option("--ring", check_ring, "restrict ring suites to this ring");
  check_cmd->add_flag("--json", json, "print JSON");

  std::string scheme_verb;
  std::size_t scheme_size = 3;
  auto* scheme_cmd = app.add_subcommand("scheme", "structure sheaf, eta and functor checks");
  scheme_cmd->add_option("verb", scheme_verb, "check")->required()->check(CLI::IsMember({"check"}));
  scheme_cmd->add_option("size", scheme_size, "largest universe size")->required();

  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "write the JSON of a value to a file");
  export_cmd->add_option("expr", expr, "expression")->required();
  export_cmd->add_option("--out", out_path, "output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << grammar_help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help() << grammar_help();
    return kExitUsage;
  }

  if (*repl_cmd) return repl(in, out);

  if (*eval_cmd) {
    return guarded(expr, err, [&] {
      Env env;
      if (!universe.empty()) env.universe = Universe(split_labels(universe));
      const Value v = evaluate(expr, env);
      print(out, v, json);
      return status_of(v);
    });
  }

  if (*spec_cmd) {
    return guarded(ring_text, err, [&] {
      Env env;
      const Ring r = eval_ring(ring_text, env);
      print(out, Value{SpecValue{std::make_shared<const SpecSpace>(spec(r))}}, json);
      return kExitOk;
    });
  }

  if (*check_cmd) {
    return guarded(check_ring, err, [&] {
      if (!check_ring.empty()) {
        Env env;
        opt.ring = eval_ring(check_ring, env);
      }
      const Report r = run_check(suite, opt);
      print(out, Value{r}, json);
      return r.ok() ? kExitOk : kExitCheckFailed;
    });
  }

  if (*scheme_cmd) {
    return guarded("", err, [&] {
      CheckOptions o;
      o.size = scheme_size;
      Report r{"scheme", {}, {}, {}};
      for (const char* s : {"sheaf", "eta", "functor"}) r.merge(run_check(s, o));
      print(out, Value{r}, false);
      return r.ok() ? kExitOk : kExitCheckFailed;
    });
  }

  if (*export_cmd) {
    return guarded(expr, err, [&] {
      Env env;
      const Value v = evaluate(expr, env);
      std::ofstream file(out_path);
      if (!file) throw DomainError("cannot open " + out_path + " for writing");
      file << v.to_json().dump(2) << '\n';
      out << "wrote " << v.type_name() << " to " << out_path << '\n';
      return kExitOk;
    });
  }
  return kExitUsage;
}

int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return cli(args, out, err, std::cin);
}

}  // namespace stone::dsl
