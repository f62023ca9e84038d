#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperfact/hyperfact.hpp"

namespace hyperfact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // selftest found a failing check
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct Options {
  std::string field;
  std::string poly;
  std::string root;
  std::string factors;
  std::string svg;
  bool json = false;
  std::size_t max_degree = kDefaultEnumerationDegree;
  std::uint64_t seed = 20190725;
  std::size_t trials = 100;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline FieldKind field_of(const Options& o) {
  if (o.field == "tropical") return FieldKind::tropical;
  if (o.field == "sign") return FieldKind::sign;
  throw UsageError("--field must be 'tropical' or 'sign'");
}

inline void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

inline SignValue parse_sign_root(const std::string& text) {
  if (text == "1" || text == "+1") return SignValue::plus;
  if (text == "0") return SignValue::zero;
  if (text == "-1") return SignValue::minus;
  throw ParseError(1, "sign root must be -1, 0 or 1");
}

template <Hyperfield F>
std::vector<Polynomial<F>> parse_factor_list(const std::string& text) {
  std::vector<Polynomial<F>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      try {
        out.push_back(parse_polynomial<F>(piece));
      } catch (const ParseError& e) {
        throw ParseError(start + e.column(), e.reason());
      }
    }
    start = end + 1;
  }
  if (out.empty()) throw UsageError("--factors needs at least one polynomial");
  return out;
}

template <Hyperfield F>
Json poly_json(const Polynomial<F>& p) {
  Json j = to_json(p);
  j["text"] = format_polynomial(p);
  return j;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string show_root(SignValue a) { return to_string(a); }
inline std::string show_root(const TropValue& a) { return a.str(); }

// Emits either the JSON document or the text lines.
struct Output {
  std::ostream& out;
  bool json;

  void emit(const Json& j, const std::string& text) const {
    if (json)
      out << j.dump(2) << "\n";
    else
      out << text;
  }
};

inline int cmd_roots(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  Json roots = Json::array();
  std::string text;
  if (field_of(o) == FieldKind::tropical) {
    for (const RootLocus& r : roots_with_multiplicities(parse_polynomial<TropicalField>(o.poly))) {
      roots.push_back({{"root", r.root.str()}, {"multiplicity", r.multiplicity}, {"start", r.start}});
      text += r.root.str() + " x" + std::to_string(r.multiplicity) + "\n";
    }
  } else {
    const SignPoly p = parse_polynomial<SignField>(o.poly);
    if (p.deg() == 0) throw Error(ErrorKind::ConstantPolynomial, "constant polynomial has no roots");
    for (SignValue a : kSignValues) {
      const std::size_t m = multiplicity_sign(p, a, o.max_degree);
      if (m == 0) continue;
      roots.push_back({{"root", to_int(a)}, {"multiplicity", m}});
      text += to_string(a) + " x" + std::to_string(m) + "\n";
    }
  }
  w.emit(Json{{"field", o.field}, {"roots", roots}}, text);
  return kExitOk;
}

inline int cmd_factor(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  if (field_of(o) != FieldKind::tropical)
    throw UsageError("factor is the tropical factorization; use 'factorizations' over the sign hyperfield");
  const TropicalFactorization f = factor(parse_polynomial<TropicalField>(o.poly));
  std::vector<std::string> factors;
  Json roots = Json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    factors.push_back(format_polynomial(f.factors[i]));
    roots.push_back(f.roots[i].str());
  }
  Json j{{"field", o.field}, {"unit", f.unit.str()}, {"roots", roots}, {"factors", factors}};
  std::string text = f.unit.str();
  for (const std::string& s : factors) text += " * (" + s + ")";
  w.emit(j, text + "\n");
  return kExitOk;
}

inline int cmd_divide(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  require(o.root, "--root");
  auto report = [&](const auto& p, const auto& root, const auto& q) {
    Json j{{"field", o.field}, {"dividend", poly_json(p)}, {"root", show_root(root)}, {"quotient", poly_json(q)}};
    w.emit(j, format_polynomial(q) + "\n");
  };
  if (field_of(o) == FieldKind::tropical) {
    const TropPoly p = parse_polynomial<TropicalField>(o.poly);
    const TropValue a = TropValue::parse(o.root);
    report(p, a, divide(p, a));
  } else {
    const SignPoly p = parse_polynomial<SignField>(o.poly);
    const SignValue a = parse_sign_root(o.root);
    report(p, a, divide_sign(p, a));
  }
  return kExitOk;
}

inline int cmd_quotients(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  require(o.root, "--root");
  if (field_of(o) == FieldKind::tropical) {
    const TropPoly p = parse_polynomial<TropicalField>(o.poly);
    const TropValue a = TropValue::parse(o.root);
    if (!is_root(p, a)) throw Error(ErrorKind::NotARoot, a.str() + " is not a root of the dividend");
    const auto hull = quotient_hull(p, a);
    if (!hull) throw Error(ErrorKind::InternalInvariantViolated, "a root without quotients");
    std::vector<std::string> lower;
    std::vector<std::string> upper;
    for (const TropValue& v : hull->lower) lower.push_back(v.str());
    for (const TropValue& v : hull->upper) upper.push_back(v.str());
    Json j{{"field", o.field}, {"lower", lower}, {"upper", upper}, {"unique", hull->is_single_point()}};
    w.emit(j, "lower [" + join(lower, ", ") + "]\nupper [" + join(upper, ", ") + "]\n");
  } else {
    const SignPoly p = parse_polynomial<SignField>(o.poly);
    const SignValue a = parse_sign_root(o.root);
    Json list = Json::array();
    std::string text;
    for (const SignPoly& q : all_quotients_sign(p, a, o.max_degree)) {
      list.push_back(format_polynomial(q));
      text += format_polynomial(q) + "\n";
    }
    w.emit(Json{{"field", o.field}, {"root", to_int(a)}, {"quotients", list}}, text);
  }
  return kExitOk;
}

inline int cmd_check_product(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  require(o.factors, "--factors");
  auto check = [&]<Hyperfield F>(std::type_identity<F>) {
    const Polynomial<F> p = parse_polynomial<F>(o.poly);
    const auto factors = parse_factor_list<F>(o.factors);
    const bool member = in_product(p, std::span<const Polynomial<F>>(factors));
    std::vector<std::string> shown;
    for (const auto& q : factors) shown.push_back(format_polynomial(q));
    w.emit(Json{{"field", o.field}, {"poly", format_polynomial(p)}, {"factors", shown}, {"member", member}},
           member ? "true\n" : "false\n");
  };
  if (field_of(o) == FieldKind::tropical)
    check(std::type_identity<TropicalField>{});
  else
    check(std::type_identity<SignField>{});
  return kExitOk;
}

inline int cmd_irreducible(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  bool irreducible;
  if (field_of(o) == FieldKind::tropical) {
    const TropPoly p = parse_polynomial<TropicalField>(o.poly);
    if (p.deg() == 0) throw Error(ErrorKind::ConstantPolynomial, "units are neither reducible nor irreducible");
    irreducible = p.deg() == 1;
  } else {
    irreducible = is_irreducible_sign(parse_polynomial<SignField>(o.poly), o.max_degree);
  }
  w.emit(Json{{"field", o.field}, {"poly", o.poly}, {"irreducible", irreducible}},
         irreducible ? "true\n" : "false\n");
  return kExitOk;
}

inline int cmd_factorizations(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  if (field_of(o) != FieldKind::sign)
    throw UsageError("tropical factorizations are unique; use 'factor'");
  Json list = Json::array();
  std::string text;
  for (const SignFactorization& f : all_factorizations_sign(parse_polynomial<SignField>(o.poly), o.max_degree)) {
    list.push_back(to_json(f));
    std::vector<std::string> names;
    for (const SignPoly& q : f.factors) names.push_back(format_polynomial(q));
    text += "{" + join(names, ", ") + "} unit " + to_string(f.unit) + " witness " + f.witness_nesting + "\n";
  }
  w.emit(list, text);
  return kExitOk;
}

inline int cmd_newton(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  if (field_of(o) != FieldKind::tropical) throw UsageError("newton needs --field tropical");
  const NewtonPolygon poly = newton_polygon(parse_polynomial<TropicalField>(o.poly));
  if (!o.svg.empty()) {
    std::ofstream file(o.svg, std::ios::binary);
    if (!file) throw UsageError("cannot write " + o.svg);
    file << render_newton_svg(poly);
  }
  std::vector<std::string> vertices;
  for (const NewtonVertex& v : poly.vertices)
    vertices.push_back("(" + std::to_string(v.index) + "," + to_string(v.height) + ")");
  std::vector<std::string> slopes;
  for (const Rational& s : poly.slopes) slopes.push_back(to_string(s));
  w.emit(to_json(poly), "vertices " + join(vertices, " ") + "\nslopes " + join(slopes, " ") + "\nzero roots " +
                            std::to_string(poly.zero_root_multiplicity) + "\n");
  return kExitOk;
}

inline int cmd_multiplicity(const Options& o, const Output& w) {
  require(o.poly, "--poly");
  require(o.root, "--root");
  std::size_t m = 0;
  std::string root;
  if (field_of(o) == FieldKind::tropical) {
    const TropValue a = TropValue::parse(o.root);
    root = a.str();
    for (const RootLocus& r : roots_with_multiplicities(parse_polynomial<TropicalField>(o.poly)))
      if (r.root == a) m = r.multiplicity;
  } else {
    const SignValue a = parse_sign_root(o.root);
    root = to_string(a);
    m = multiplicity_sign(parse_polynomial<SignField>(o.poly), a, o.max_degree);
  }
  w.emit(Json{{"field", o.field}, {"root", root}, {"multiplicity", m}}, std::to_string(m) + "\n");
  return kExitOk;
}

inline int cmd_selftest(const Options& o, const Output& w) {
  Json checks = Json::array();
  std::string text;
  bool all = true;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    checks.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
    text += (ok ? "pass " : "FAIL ") + name + ": " + detail + "\n";
  };

  const AxiomReport axioms = check_sign_axioms();
  record("sign hyperfield axioms", axioms.passed(),
         std::to_string(axioms.triples) + " triples, " + std::to_string(axioms.failure_count()) + " failures");

  const DivisionSweepReport sweep = sweep_sign_division(std::min<std::size_t>(8, o.max_degree));
  record("sign division sweep", sweep.passed(),
         "degree <= " + std::to_string(sweep.max_degree) + ", " + std::to_string(sweep.cases) + " cases" +
             (sweep.passed() ? "" : ", first failure " + sweep.failures.front()));

  std::vector<std::string> names;
  for (const SignPoly& q : classify_irreducibles(std::min<std::size_t>(4, o.max_degree)))
    names.push_back(format_polynomial(q));
  const std::vector<std::string> expected{"T-1", "T", "T+1", "T^2+1"};
  record("monic sign irreducibles up to degree 4", names == expected, join(names, ", "));

  for (Morphism m : {Morphism::sign, Morphism::valuation}) {
    const PushforwardReport r = check_pushforward_lemma(o.trials, o.seed, m);
    record("pushforward of factorizations (" + std::string(to_string(m)) + ")", r.passed(),
           std::to_string(r.trials) + " trials, seed " + std::to_string(r.seed) + ", " +
               std::to_string(r.failures.size()) + " failures");
  }
  w.emit(Json{{"passed", all}, {"checks", checks}}, text);
  return all ? kExitOk : kExitFailure;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization of polynomials over the tropical and sign hyperfields", "hyperfact"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<int(const Options&, const detail::Output&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& about, Handler h, bool field_free = false) {
    CLI::App* sub = app.add_subcommand(name, about);
    if (!field_free) {
      sub->add_option("--field", o.field, "tropical or sign")->check(CLI::IsMember({"tropical", "sign"}));
      sub->add_option("--poly", o.poly, "polynomial, e.g. \"T^2-T+1\" or \"[1,0,1,0]\"");
      sub->add_option("--root", o.root, "root: -1, 0, 1 over sign; a log coordinate or 'zero' over tropical");
      sub->add_option("--factors", o.factors, "semicolon-separated factor polynomials");
      sub->add_option("--svg", o.svg, "write the Newton polygon as SVG");
    }
    sub->add_flag("--json", o.json, "print JSON");
    sub->add_option("--max-degree", o.max_degree, "enumeration bound for sign searches (at most 12)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--trials", o.trials, "random trials per morphism");
    commands.emplace_back(sub, std::move(h));
  };
  command("roots", "roots with multiplicities", detail::cmd_roots);
  command("factor", "tropical factorization into linear factors", detail::cmd_factor);
  command("divide", "quotient by T - a for a root a", detail::cmd_divide);
  command("quotients", "all quotients by T - a", detail::cmd_quotients);
  command("check-product", "membership of --poly in the product of --factors", detail::cmd_check_product);
  command("irreducible", "irreducibility test", detail::cmd_irreducible);
  command("factorizations", "all factorizations into monic sign irreducibles", detail::cmd_factorizations);
  command("newton", "Newton polygon of a tropical polynomial", detail::cmd_newton);
  command("multiplicity", "multiplicity of a root", detail::cmd_multiplicity);
  command("selftest", "exhaustive and randomized self-checks", detail::cmd_selftest, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const detail::Output writer{out, o.json};
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (o.json) out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
    err << "error: " << kind << ": " << message << "\n";
    return code;
  };
  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, writer);
    } catch (const UsageError& e) {
      return fail(kExitUsage, "UsageError", e.what());
    } catch (const ParseError& e) {
      return fail(kExitUsage, "ParseError", e.what());
    } catch (const Error& e) {
      return fail(e.kind() == ErrorKind::Parse ? kExitUsage : kExitDomain, std::string(to_string(e.kind())), e.what());
    }
  }
  return kExitUsage;
}

}  // namespace hyperfact::cli
