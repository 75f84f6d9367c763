#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "eval.hpp"
#include "frobdiff/disjointness.hpp"
#include "frobdiff/geometry.hpp"
#include "frobdiff/primitive.hpp"
#include "frobdiff/reduction.hpp"

namespace frobdiff::cli {

namespace {

using json = nlohmann::json;

struct Result {
  std::string status = "ok";
  std::vector<std::string> lines;
  json value;
  json witness;
};

Result single(std::string text, std::string status = "ok") {
  Result r;
  r.status = std::move(status);
  r.value = text;
  r.lines.push_back(std::move(text));
  return r;
}

struct Options {
  std::string session_path;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> n;
  unsigned max_degree = 3;
  bool json = false;
};

Session load(const Options& o) {
  if (!o.session_path.empty()) {
    if (o.p) throw Error(ErrorCode::UsageError, "--p conflicts with --session");
    std::ifstream in(o.session_path, std::ios::binary);
    if (!in) throw Error(ErrorCode::UsageError, "cannot read session file " + o.session_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str(), o.n);
  }
  return default_session(o.p.value_or(2), o.n.value_or(1));
}

// Does the expression mention jets, looking through bindings?
bool mentions_jets(const Expr& e, const Session& s, int depth = 0) {
  if (e.kind == Expr::Kind::Jet) return !(s.tower && s.tower->index_of("x") && e.value == 0);
  if (e.kind == Expr::Kind::Name && e.primes == 0 && depth < 64) {
    if (auto it = s.bindings.find(e.name); it != s.bindings.end()) return mentions_jets(*it->second, s, depth + 1);
  }
  for (const auto& a : e.args)
    if (mentions_jets(*a, s, depth)) return true;
  return false;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string show(const RatFunc& a, const Session& s) { return to_string(a, s.field); }
std::string show(const DiffPoly& f, const Session& s) { return to_string(f, s.field); }

// X0..Xt, Y0..Ys as used by annihilator polynomials
std::vector<std::string> annihilator_vars(std::size_t t, std::size_t s) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k <= t; ++k) out.push_back("X" + std::to_string(k));
  for (std::size_t k = 0; k <= s; ++k) out.push_back("Y" + std::to_string(k));
  return out;
}

std::string lambda_name(std::size_t k) { return jet_name(k, "L"); }

struct Command {
  CLI::App* app;
  std::function<Result(const Session&)> body;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Frobenius-twisted derivations", "frobdiff"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--session", o.session_path, "session file");
  app.add_option("--p", o.p, "characteristic when no session is given");
  app.add_option("--n", o.n, "Frobenius twist exponent");
  app.add_option("--max-degree", o.max_degree, "degree bound for candidate searches");
  app.add_flag("--json", o.json, "one JSON object per result");

  std::vector<Command> commands;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  std::string e1, e2;
  std::vector<std::string> many;
  unsigned k = 1;
  bool tower_flag = false;

  {
    auto* c = add("derive", "apply d (k times) to an element or differential polynomial");
    c->add_option("expr", e1)->required();
    c->add_option("--k", k, "number of applications");
    c->add_flag("--tower", tower_flag, "evaluate in the session tower");
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          auto e = parse_expr(e1);
                          if (tower_flag && !s.tower_d) throw Error(ErrorCode::UsageError, "the session has no [tower] section");
                          if (tower_flag) return single(to_string(s.tower_d->derive_iter(ev.tower(*e), k)));
                          if (mentions_jets(*e, s)) return single(show(delta_iter(*s.d, ev.diffpoly(*e), k), s));
                          return single(show(s.d->derive_iter(ev.field(*e), k), s));
                        }});
  }
  {
    auto* c = add("eval", "evaluate a differential polynomial at a field element");
    c->add_option("f", e1)->required();
    c->add_option("a", e2)->required();
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          auto f = ev.diffpoly(*parse_expr(e1));
                          return single(show(evaluate_at(*s.d, f, ev.field(*parse_expr(e2))), s));
                        }});
  }
  {
    auto* c = add("order", "order of a differential polynomial");
    c->add_option("f", e1)->required();
    commands.push_back({c, [&](const Session& s) {
                          return single(std::to_string(order(Evaluator(s).diffpoly(*parse_expr(e1)))));
                        }});
  }
  {
    auto* c = add("separant", "partial derivative in the leader");
    c->add_option("f", e1)->required();
    commands.push_back({c, [&](const Session& s) {
                          return single(show(separant(Evaluator(s).diffpoly(*parse_expr(e1))), s));
                        }});
  }

  std::string vars = "X";
  std::vector<std::string> at, jet_values;
  {
    auto* c = add("prolong", "generators of the twisted tangent ideal");
    c->add_option("--vars", vars, "comma separated ring variables");
    c->add_option("gens", many)->required();
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          auto names = split_list(vars);
                          std::vector<KPoly> gens;
                          for (const auto& g : many) gens.push_back(ev.kpoly(*parse_expr(g), names));
                          auto w = prolong(IdealGens::make(names, gens), *s.d);
                          Result r = single(to_string(w.ideal, s.field));
                          r.value = json::array();
                          for (const auto& g : w.ideal.gens)
                            r.value.push_back(to_string(g, s.field, [&](std::size_t j) { return w.ideal.vars.at(j); }));
                          return r;
                        }});
  }
  {
    auto* c = add("section-check", "does (a, d a) lie on W?");
    c->add_option("--vars", vars, "comma separated base variables");
    c->add_option("--at", at, "coordinates of the point")->required()->allow_extra_args(false);
    c->add_option("--jet", jet_values, "first jets (default: computed)")->allow_extra_args(false);
    c->add_option("gens", many)->required();
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          auto base = split_list(vars);
                          std::vector<KPoly> gens;
                          for (const auto& g : many) gens.push_back(ev.kpoly(*parse_expr(g), prolonged_names(base)));
                          auto w = IdealGens::make(prolonged_names(base), gens);
                          std::vector<RatFunc> point, js;
                          for (const auto& a : at) point.push_back(ev.field(*parse_expr(a)));
                          for (const auto& a : jet_values) js.push_back(ev.field(*parse_expr(a)));
                          bool ok = jet_values.empty()
                                        ? check_section(*s.d, w, std::span<const RatFunc>(point))
                                        : check_section(*s.d, w, std::span<const RatFunc>(point),
                                                        std::span<const RatFunc>(js));
                          return single(ok ? "true" : "false");
                        }});
  }

  std::string t_expr = "t";
  unsigned big_n = 1;
  {
    auto* c = add("combine", "single equation equivalent to f1 = ... = fm = 0");
    c->add_option("--t", t_expr, "element that is not a p-th power");
    c->add_option("--N", big_n, "Frobenius exponent with m < p^N");
    c->add_option("fs", many)->required();
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          std::vector<DiffPoly> fs;
                          for (const auto& f : many) fs.push_back(ev.diffpoly(*parse_expr(f)));
                          return single(show(combine_system(fs, ev.field(*parse_expr(t_expr)), big_n), s));
                        }});
  }
  {
    auto* c = add("eliminate", "p f + q g of lower order than f");
    c->add_option("f", e1)->required();
    c->add_option("g", e2)->required();
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          auto r = gcd_eliminate(s.field, ev.diffpoly(*parse_expr(e1)), ev.diffpoly(*parse_expr(e2)));
                          Result out;
                          out.lines = {"p = " + show(r.p, s), "q = " + show(r.q, s), "gtilde = " + show(r.gtilde, s)};
                          out.value = show(r.gtilde, s);
                          out.witness = {{"p", show(r.p, s)}, {"q", show(r.q, s)}};
                          if (!r.f_multiplier.is_one()) {
                            out.lines.push_back("f_multiplier = " + show(r.f_multiplier, s));
                            out.witness["f_multiplier"] = show(r.f_multiplier, s);
                          }
                          if (!r.g_multiplier.is_one()) {
                            out.lines.push_back("g_multiplier = " + show(r.g_multiplier, s));
                            out.witness["g_multiplier"] = show(r.g_multiplier, s);
                          }
                          return out;
                        }});
  }

  bool fractions = false;
  std::uint64_t cap = 1'000'000;
  {
    auto* c = add("wood-solve", "first a with f(a) = 0 and g(a) != 0");
    c->add_option("f", e1)->required();
    c->add_option("g", e2)->required();
    c->add_flag("--fractions", fractions, "also enumerate proper fractions");
    c->add_option("--cap", cap, "candidate budget");
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          SearchConfig config{o.max_degree, fractions, cap};
                          auto a = wood_solve(*s.d, ev.diffpoly(*parse_expr(e1)), ev.diffpoly(*parse_expr(e2)), config);
                          if (!a) return single("none", "none");
                          Result r = single(show(*a, s));
                          r.witness = show(*a, s);
                          return r;
                        }});
  }
  {
    auto* c = add("lambda0", "inverse Frobenius on p-th powers, zero elsewhere");
    c->add_option("a", e1)->required();
    commands.push_back({c, [&](const Session& s) {
                          return single(show(lambda0(Evaluator(s).field(*parse_expr(e1))), s));
                        }});
  }
  {
    auto* c = add("rewrite-l0", "equivalent l0-free branches (one per line)");
    c->add_option("formula", e1)->required();
    commands.push_back({c, [&](const Session& s) {
                          auto branches = lambda0_rewrite(*s.d, Evaluator(s).formula(parse_formula(e1)));
                          Result r;
                          r.value = json::array();
                          for (const auto& b : branches) {
                            r.lines.push_back(to_string(b, s.field));
                            r.value.push_back(r.lines.back());
                          }
                          if (branches.empty()) r.lines.push_back("false");
                          return r;
                        }});
  }
  {
    auto* c = add("compose-check", "does d o d obey the twisted Leibniz rule for twist 2n at (a, b)?");
    c->add_option("a", e1)->required();
    c->add_option("b", e2)->required();
    commands.push_back({c, [&](const Session& s) {
                          Evaluator ev(s);
                          auto op = compose(*s.d, *s.d);
                          bool ok = satisfies_twisted_leibniz(op, op.twist(), ev.field(*parse_expr(e1)),
                                                              ev.field(*parse_expr(e2)));
                          return single(ok ? "true" : "false");
                        }});
  }
  {
    auto* c = add("strict-witness", "is a a constant that is not a p-th power?");
    c->add_option("a", e1)->required();
    commands.push_back({c, [&](const Session& s) {
                          return single(to_string(strictness_witness(*s.d, Evaluator(s).field(*parse_expr(e1)))));
                        }});
  }

  std::string subfield;
  {
    auto* c = add("lindisj", "linear relations over K and over a subfield, for tower elements");
    c->add_option("--subfield", subfield, "exponents e_i of F = F_p(t_i^e_i), default p");
    c->add_option("elems", many)->required();
    commands.push_back({c, [&](const Session& s) {
                          if (!s.tower_d) throw Error(ErrorCode::UsageError, "lindisj needs a [tower] section");
                          Evaluator ev(s);
                          std::vector<TowerElem> elems;
                          for (const auto& e : many) elems.push_back(ev.tower(*parse_expr(e)));
                          SubfieldSpec sub = SubfieldSpec::pth_powers(s.field);
                          if (!subfield.empty()) {
                            sub.exponents.clear();
                            for (const auto& x : split_list(subfield)) sub.exponents.push_back(std::stoull(x));
                          }
                          auto rep = linear_disjointness_check(*s.tower_d, elems, sub);
                          Result r;
                          auto describe = [&](const std::string& over, const LinearRelation& rel) {
                            if (!rel.dependent) return over + ": independent";
                            std::vector<std::string> cs;
                            for (const auto& c : rel.witness) cs.push_back(show(c, s));
                            return over + ": dependent (" + join(cs, ", ") + ")";
                          };
                          r.lines = {describe("over K", rep.over_base), describe("over F", rep.over_subfield),
                                     std::string("constants: ") + (rep.all_constants ? "true" : "false")};
                          r.value = r.lines;
                          if (rep.over_base.dependent) {
                            r.witness = json::array();
                            for (const auto& c : rep.over_base.witness) r.witness.push_back(show(c, s));
                          }
                          return r;
                        }});
  }
  {
    auto* c = add("bop-validate", "check the [algebra] structure constants");
    commands.push_back({c, [&](const Session& s) {
                          if (!s.algebra_verdict) throw Error(ErrorCode::UsageError, "the session has no [algebra]");
                          if (s.algebra_verdict->ok) return single("ok");
                          return single("violation: " + s.algebra_verdict->violation, "violation");
                        }});
  }
  {
    auto* c = add("bop-apply", "components d_0 r, ..., d_d r of the B-operator");
    c->add_option("r", e1)->required();
    commands.push_back({c, [&](const Session& s) {
                          if (!s.algebra_verdict) throw Error(ErrorCode::UsageError, "the session has no [algebra]");
                          if (!s.bop)
                            throw Error(ErrorCode::NotValidated, "algebra rejected: " + s.algebra_verdict->violation);
                          Poly r = Evaluator(s).polynomial(*parse_expr(e1));
                          auto parts = bop_apply(*s.bop, r);
                          Result out;
                          out.value = json::object();
                          for (std::size_t i = 0; i < parts.size(); ++i) {
                            auto text = to_string(parts[i], s.field.generators);
                            out.lines.push_back(s.bop->algebra().names()[i] + ": " + text);
                            out.value[s.bop->algebra().names()[i]] = text;
                          }
                          bool constant = bop_constants(*s.bop, r);
                          out.lines.push_back(std::string("constant: ") + (constant ? "true" : "false"));
                          out.witness = constant;
                          return out;
                        }});
  }

  std::string u_expr = "0", v_expr = "1", lambda_expr;
  std::size_t t_idx = 0, s_idx = 0, i_idx = 0;
  // the helpers below are captured by reference, so they live at function scope
  auto* prim = add("primitive", "primitive element kit");
  prim->require_subcommand(1);
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* c = prim->add_subcommand(name, help);
    c->fallthrough();
    c->add_option("--u", u_expr, "u in u + L v");
    c->add_option("--v", v_expr, "v in u + L v");
    return c;
  };
  auto context = [&](const Session& s) {
    Evaluator ev(s);
    return UVContext<FrobDerivation>{*s.d, ev.field(*parse_expr(u_expr)), ev.field(*parse_expr(v_expr))};
  };
  auto annihilator = [&](const Session& s) {
    auto g = Evaluator(s).kpoly(*parse_expr(e1), annihilator_vars(t_idx, s_idx));
    return AnnihilatorPoly::make(g, t_idx, s_idx);
  };
  auto shape_options = [&](CLI::App* c) {
    c->add_option("g", e1, "G in X0..Xt, Y0..Ys")->required();
    c->add_option("--t", t_idx, "highest L jet");
    c->add_option("--s", s_idx, "highest jet of u + L v");
  };

  auto* c = sub("expand", "formal jet k of u + L v");
  c->add_option("--k", k, "jet order");
  commands.push_back({c, [&](const Session& s) {
                        auto ctx = context(s);
                        return single(to_string(twisted_jet_expand(k, ctx), s.field, lambda_name));
                      }});

  c = sub("identity", "dG/dX_i + dG/dY_i * d^i(v) after substitution (expected 0)");
  shape_options(c);
  c->add_option("--i", i_idx, "index");
  commands.push_back({c, [&](const Session& s) {
                        auto ctx = context(s);
                        auto [lhs, zero] = partial_identity_check(annihilator(s), i_idx, ctx);
                        return single(to_string(lhs, s.field, lambda_name));
                      }});

  c = sub("recover", "v^(q^i) from the partials of G at a chosen L");
  shape_options(c);
  c->add_option("--i", i_idx, "index");
  c->add_option("--lambda", lambda_expr, "value of L")->required();
  commands.push_back({c, [&](const Session& s) {
                        auto ctx = context(s);
                        auto lam = Evaluator(s).field(*parse_expr(lambda_expr));
                        return single(show(recover_power(annihilator(s), i_idx, lam, ctx), s));
                      }});

  c = sub("find-lambda", "first L with some dG/dY_i nonzero");
  shape_options(c);
  commands.push_back({c, [&](const Session& s) {
                        auto ctx = context(s);
                        SearchConfig config{o.max_degree, false, 1'000'000};
                        auto choice = find_lambda(annihilator(s), ctx, config);
                        if (!choice) return single("none", "none");
                        Result r = single("L = " + show(choice->lambda, s) + ", i = " + std::to_string(choice->index));
                        r.value = show(choice->lambda, s);
                        r.witness = choice->index;
                        return r;
                      }});

  auto report_error = [&](const std::string& code, const std::string& message, int status) {
    if (o.json) {
      out << json{{"status", "error"}, {"value", code + ": " + message}, {"witness", nullptr}}.dump() << "\n";
    } else {
      err << "error: " << code << ": " << message << "\n";
    }
    return status;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what(), 2);
  }

  try {
    Session s = load(o);
    for (const auto& c : commands) {
      if (!c.app->parsed()) continue;
      Result r = c.body(s);
      if (o.json) {
        out << json{{"status", r.status}, {"value", r.value}, {"witness", r.witness}}.dump() << "\n";
      } else {
        for (const auto& line : r.lines) out << line << "\n";
      }
      return 0;
    }
    return report_error("UsageError", "no command given", 2);
  } catch (const Error& e) {
    bool usage = e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::UsageError ||
                 e.code() == ErrorCode::UnknownName;
    return report_error(std::string(error_code_name(e.code())), e.what(), usage ? 2 : 1);
  }
}

}  // namespace frobdiff::cli
