#include "k3/cli.hpp"

#include "k3/acceptance.hpp"
#include "k3/brauer.hpp"
#include "k3/hermite.hpp"
#include "k3/io.hpp"
#include "k3/lattice.hpp"
#include "k3/rank2.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

namespace k3::cli {

namespace {

using io::Json;
using io::to_json;

/// Raised for outcomes that are honest "unknown"s; carries the document.
struct InconclusiveResult {
  Json doc;
};

struct Globals {
  bool json = true;
  std::optional<long> bound;
  std::uint64_t seed = kDefaultSuiteSeed;
  double tol = kDefaultTolerance;
  bool plain_coeffs = false;
  std::string at;
};

struct Field {
  CLI::Option* option;
  std::string name;
  std::function<Json()> value;
};

class Parser {
 public:
  std::string& text(CLI::App* sub, const std::string& name, const std::string& help, bool required = true) {
    auto& slot = strings_.emplace_back(std::make_unique<std::string>());
    std::string* p = slot.get();
    auto* opt = sub->add_option("--" + name, *p, help);
    if (required) opt->required();
    fields_.push_back({opt, name, [p] { return Json(*p); }});
    return *p;
  }

  void flag(CLI::App* sub, const std::string& name, bool& target, const std::string& help) {
    auto* opt = sub->add_flag("--" + name, target, help);
    fields_.push_back({opt, name, [&target] { return Json(target); }});
  }

  template <typename T>
  void value(CLI::App* sub, const std::string& name, T& target, const std::string& help) {
    auto* opt = sub->add_option("--" + name, target, help);
    fields_.push_back({opt, name, [&target] { return Json(target); }});
  }

  template <typename T>
  void value(CLI::App* sub, const std::string& name, std::optional<T>& target, const std::string& help) {
    auto& slot = longs_.emplace_back(std::make_unique<T>());
    T* p = slot.get();
    auto* opt = sub->add_option("--" + name, *p, help);
    fields_.push_back({opt, name, [p] { return Json(*p); }});
    finalizers_.push_back([opt, p, &target] {
      if (opt->count() > 0) target = *p;
    });
  }

  /// Copies parsed values into optional targets.
  void finalize() const {
    for (const auto& f : finalizers_) f();
  }

  Json inputs() const {
    Json out = Json::object();
    for (const auto& f : fields_)
      if (f.option->count() > 0) out[f.name] = f.value();
    return out;
  }

 private:
  std::vector<std::unique_ptr<std::string>> strings_;
  std::vector<std::unique_ptr<long>> longs_;
  std::vector<Field> fields_;
  std::vector<std::function<void()>> finalizers_;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Integer positive(const std::string& text, const char* what) {
  const Integer v = parse_integer(text);
  if (v <= 0) throw InvalidInput(std::string(what) + " must be positive");
  return v;
}

long oracle_bound(const Globals& g) {
  if (!g.bound) return kDefaultOracleBound;
  if (*g.bound < 1) throw InvalidInput("--bound must be positive");
  return *g.bound;
}

std::uint64_t enumeration_bound(const Globals& g) {
  if (!g.bound) return kDefaultEnumerationBound;
  if (*g.bound < 1) throw InvalidInput("--bound must be positive");
  return static_cast<std::uint64_t>(*g.bound);
}

Json matrix_json(const Matrix<PolyX>& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json matrix_json(const Matrix<RatFunc>& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json complex_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json complex_list(const std::vector<std::complex<double>>& zs) {
  Json out = Json::array();
  for (const auto& z : zs) out.push_back(complex_json(z));
  return out;
}

Json vectors_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

GramLattice named_lattice(const std::string& name, const std::string& b, const std::string& c, const std::string& n) {
  const auto parsed = parse_lattice_name(name);
  if (!parsed) throw InvalidInput("unknown lattice name '" + name + "'");
  switch (*parsed) {
    case LatticeName::RANK1:
      if (n.empty()) throw InvalidInput("RANK1 needs --n");
      return standard_lattice(*parsed, parse_integer(n));
    case LatticeName::LAMBDA_BC:
    case LatticeName::GAMMA_BC:
      if (b.empty() || c.empty()) throw InvalidInput(to_string(*parsed) + " needs --b and --c");
      return standard_lattice(*parsed, parse_integer(b), parse_integer(c));
    default:
      return standard_lattice(*parsed);
  }
}

QuarticModel quartic_input(const std::string& coeffs, const Globals& g) {
  const auto parsed = io::parse_coefficients(coeffs);
  QuarticModel q = g.plain_coeffs ? QuarticModel::from_plain(parsed) : QuarticModel(parsed);
  if (!g.at.empty()) q = q.specialize(parse_rational(g.at));
  return q;
}

Json quartic_json(const QuarticModel& q) {
  Json a = Json::array();
  for (const auto& p : q.a) a.push_back(to_json(p));
  return a;
}

Json weierstrass_json(const WeierstrassModel& w) {
  const Poly disc = weierstrass_disc(w);
  return {{"g2", to_json(w.g2)},
          {"g3", to_json(w.g3)},
          {"disc", to_json(disc)},
          {"singular", disc.is_zero()},
          {"degrees", {{"g2", w.g2.degree().str()}, {"g3", w.g3.degree().str()}}},
          {"cubic", io::display(w.cubic())}};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice, Brauer class and genus one fibration computations for K3 surfaces.", "k3tool"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  Parser parser;
  parser.flag(&app, "json", g.json, "JSON output (the default and only format)");
  parser.value(&app, "bound", g.bound, "Entry bound for the GL(2,Z) oracle and order bound for form enumeration");
  parser.value(&app, "seed", g.seed, "Seed for the random instances of the suite");
  parser.value(&app, "tol", g.tol, "Residual tolerance of the trigonal oracle");
  parser.flag(&app, "plain-coeffs", g.plain_coeffs, "Read --coeffs as plain quartic coefficients");
  const std::string& at_text = parser.text(&app, "at", "Specialize t to this rational first", false);

  std::string command;
  std::function<Json()> action;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    auto* sub = group->add_subcommand(name, help);
    sub->fallthrough();
    sub->parse_complete_callback([&command, group, name] { command = group->get_name() + " " + name; });
    return sub;
  };

  // rank2 ------------------------------------------------------------------
  auto* rank2 = app.add_subcommand("rank2", "The lattices Lambda_{b,c} = (0, b, 2c) and Gamma_{b,c}");
  rank2->require_subcommand(1);
  rank2->fallthrough();
  {
    auto* s = leaf(rank2, "isom", "Is Lambda_{b,c} isometric to Lambda_{b,d}?");
    auto& b = parser.text(s, "b", "b");
    auto& c = parser.text(s, "c", "c");
    auto& d = parser.text(s, "d", "d");
    s->final_callback([&] {
      action = [&] {
        const auto p = Rank2Params::canonical(parse_integer(b), parse_integer(c));
        const auto q = Rank2Params::canonical(parse_integer(b), parse_integer(d));
        const auto r = lambda_isometric(p, q, {oracle_bound(g), enumeration_bound(g)});
        Json doc{{"verdict", lower(to_string(r.verdict))},
                 {"method", r.method},
                 {"canonical", {{"p", {to_json(p.b), to_json(p.c)}}, {"q", {to_json(q.b), to_json(q.c)}}}},
                 {"witness", r.witness ? to_json(*r.witness) : Json()}};
        if (r.verdict == Verdict::INCONCLUSIVE) throw InconclusiveResult{doc};
        return doc;
      };
    });
  }
  {
    auto* s = leaf(rank2, "cone", "Kahler cone, (-2)-curves and fibration classes of Y_{b,c}");
    auto& b = parser.text(s, "b", "b");
    auto& c = parser.text(s, "c", "c");
    s->final_callback([&] {
      action = [&] {
        const auto cone = kahler_cone({parse_integer(b), parse_integer(c)});
        return Json{{"covectors", vectors_json(cone.covectors)},
                    {"neg2_curves", vectors_json(cone.neg2_curves)},
                    {"fibrations", vectors_json(cone.fibrations)}};
      };
    });
  }
  {
    auto* s = leaf(rank2, "aut", "Orthogonal group of Lambda_{b,c} and automorphisms of Y_{b,c}");
    auto& b = parser.text(s, "b", "b");
    auto& c = parser.text(s, "c", "c");
    s->final_callback([&] {
      action = [&] {
        const auto r = automorphisms({parse_integer(b), parse_integer(c)});
        return Json{{"orthogonal_group", to_string(r.orthogonal_group)},
                    {"k3_automorphisms", to_string(r.k3_automorphisms)},
                    {"j", r.j ? to_json(*r.j) : Json()}};
      };
    });
  }
  {
    auto* s = leaf(rank2, "fm", "Fourier-Mukai partner classes among Lambda_{b,-a^2}");
    auto& b = parser.text(s, "b", "a prime b = 1 mod 4");
    s->final_callback([&] {
      action = [&] {
        const auto r = fm_partner_count(positive(b, "b"));
        Json members = Json::array();
        Json tally = Json::array();
        for (const auto& cls : r.classes) {
          members.push_back(to_json(cls.members));
          tally.push_back(cls.fibrations);
        }
        return Json{{"classes", r.class_count()},
                    {"class_members", members},
                    {"fibration_tally", tally},
                    {"fibration_total", r.fibration_total()}};
      };
    });
  }
  {
    auto* s = leaf(rank2, "census", "Isometry classes of Gamma_{b,c}, 0 <= c < b");
    auto& b = parser.text(s, "b", "an odd prime");
    s->final_callback([&] {
      action = [&] {
        Json classes = Json::array();
        for (const auto& cls : gamma_class_census(positive(b, "b"), enumeration_bound(g))) {
          classes.push_back(to_json(cls));
        }
        return Json{{"classes", classes}, {"class_count", classes.size()}};
      };
    });
  }
  {
    auto* s = leaf(rank2, "jacobian", "Do the two elliptic fibrations of Y_{b,c} have isomorphic Jacobians?");
    auto& b = parser.text(s, "b", "b");
    auto& c = parser.text(s, "c", "c");
    s->final_callback([&] {
      action = [&] {
        return Json{{"unique", jacobian_unique({parse_integer(b), parse_integer(c)}, enumeration_bound(g))}};
      };
    });
  }

  // brauer -----------------------------------------------------------------
  auto* brauer = app.add_subcommand("brauer", "Two-torsion Brauer classes and F2 censuses");
  brauer->require_subcommand(1);
  brauer->fallthrough();
  {
    auto* s = leaf(brauer, "census", "Class sizes of nonzero 2-torsion classes on a degree 2d K3");
    auto& d = parser.text(s, "d", "d");
    s->final_callback([&] {
      action = [&] {
        const auto r = brauer2_census(positive(d, "d"));
        Json doc{{"d", to_json(r.d)}, {"a0", r.a0}, {"a1_even", r.a1_even}, {"total", r.total()}};
        doc["a1_odd"] = r.a1_odd ? Json(*r.a1_odd) : Json();
        return doc;
      };
    });
  }
  {
    auto* s = leaf(brauer, "class", "Discriminant form of ker(alpha) for alpha = (a, lambda)");
    auto& d = parser.text(s, "d", "d");
    auto& a = parser.text(s, "a", "0 or 1");
    auto& lambda = parser.text(s, "lambda", "20 binary digits, basis U, U, E8(-1), E8(-1)");
    s->final_callback([&] {
      action = [&] {
        const Integer av = parse_integer(a);
        if (av != 0 && av != 1) throw InvalidInput("a must be 0 or 1");
        const BrauerElement e{positive(d, "d"), static_cast<int>(av), parse_lambda(lambda)};
        const auto cls = brauer2_class(e);
        const auto actual = brauer_kernel_form(e);
        const bool matches = actual.invariant_factors() == cls.group &&
                             disc_forms_isomorphic(actual, cls.predicted, enumeration_bound(g)).has_value();
        return Json{{"group", to_json(cls.group)},
                    {"even", cls.even ? Json(*cls.even) : Json()},
                    {"predicted_form", to_json(cls.predicted)},
                    {"kernel_form", to_json(actual)},
                    {"kernel_matches_prediction", matches},
                    {"primitive_embedding", primitive_embedding_exists(e)}};
      };
    });
  }
  {
    auto* s = leaf(brauer, "square", "Is x^2 = 1 - 4d mod 16d solvable?");
    auto& d = parser.text(s, "d", "d");
    s->final_callback([&] {
      action = [&] {
        const auto x = square_solvable(positive(d, "d"));
        return Json{{"solvable", x.has_value()}, {"witness", x ? to_json(*x) : Json()}};
      };
    });
  }
  {
    auto* s = leaf(brauer, "rank", "n = 2(1 + b2(Y) - b0(C)) - rho");
    auto& b2 = parser.text(s, "b2", "second Betti number of the base");
    auto& b0 = parser.text(s, "b0", "components of the branch curve");
    auto& rho = parser.text(s, "rho", "Picard rank of the cover");
    s->final_callback([&] {
      action = [&] {
        return Json{{"n", to_json(brauer_rank({parse_integer(b2), parse_integer(b0), parse_integer(rho)}))}};
      };
    });
  }
  {
    auto* s = leaf(brauer, "zeros", "Zeros of the mod 2 form of an even lattice");
    auto& name = parser.text(s, "lattice", "lattice name");
    auto& b = parser.text(s, "b", "b for LAMBDA_BC / GAMMA_BC", false);
    auto& c = parser.text(s, "c", "c for LAMBDA_BC / GAMMA_BC", false);
    auto& n = parser.text(s, "n", "n for RANK1", false);
    s->final_callback([&] {
      action = [&] {
        const auto f = F2Form::from_gram(named_lattice(name, b, c, n));
        return Json{{"dimension", f.dimension()}, {"zeros", count_f2_zeros(f)}};
      };
    });
  }

  // fib --------------------------------------------------------------------
  auto* fib = app.add_subcommand("fib", "Quartic genus one models w^2 = a0 v^4 + 4a1 v^3 + 6a2 v^2 + 4a3 v + a4");
  fib->require_subcommand(1);
  fib->fallthrough();
  const std::string coeffs_help = "a0;a1;a2;a3;a4, each a coefficient list in t (\"1,0,2\" = 2t^2 + 1)";
  {
    auto* s = leaf(fib, "jacobian", "Hermite's Jacobian y^2 = 4x^3 - g2 x - g3");
    auto& coeffs = parser.text(s, "coeffs", coeffs_help);
    s->final_callback([&] {
      action = [&] {
        const auto q = quartic_input(coeffs, g);
        return Json{{"a", quartic_json(q)}, {"jacobian", weierstrass_json(hermite_jacobian(q))}};
      };
    });
  }
  {
    auto* s = leaf(fib, "conic", "The conic bundle matrix M and its determinant");
    auto& coeffs = parser.text(s, "coeffs", coeffs_help);
    s->final_callback([&] {
      action = [&] {
        const auto q = quartic_input(coeffs, g);
        const auto c = conic_matrix(q);
        const auto w = hermite_jacobian(q);
        return Json{{"a", quartic_json(q)},
                    {"matrix", matrix_json(c.m)},
                    {"det", to_json(c.det)},
                    {"det_text", io::display(c.det)},
                    {"cubic", io::display(w.cubic())},
                    {"identity_verified", c.identity_verified},
                    {"identity_plus_g3", c.identity_plus_g3}};
      };
    });
  }
  {
    auto* s = leaf(fib, "resolvent", "Trigonal resolvent with a numerical root oracle");
    auto& coeffs = parser.text(s, "coeffs", coeffs_help);
    s->final_callback([&] {
      action = [&] {
        const auto q = quartic_input(coeffs, g);
        const auto r = trigonal_resolvent(q, g.tol);
        Json doc{{"a", quartic_json(q)},
                 {"jacobian", weierstrass_json(r.cubic)},
                 {"passed", r.passed},
                 {"numerical",
                  {{"quartic_roots", complex_list(r.quartic_roots)},
                   {"pairings", complex_list(r.pairings)},
                   {"cubic_roots", complex_list(r.cubic_roots)},
                   {"alpha", complex_json(r.alpha)},
                   {"beta", complex_json(r.beta)},
                   {"residual", r.residual},
                   {"tolerance", r.tolerance}}}};
        if (!r.passed) throw InconclusiveResult{doc};
        return doc;
      };
    });
  }
  {
    auto* s = leaf(fib, "diag", "Diagonalize M over Q(x) and read off the quaternion symbol");
    auto& coeffs = parser.text(s, "coeffs", coeffs_help);
    s->final_callback([&] {
      action = [&] {
        const auto q = quartic_input(coeffs, g);
        const auto dz = diagonalize_conic(q);
        const auto sym = quaternion_symbol(dz.d);
        Json d = Json::array();
        for (const auto& f : dz.d) d.push_back(to_json(f));
        return Json{{"a", quartic_json(q)},
                    {"P", matrix_json(dz.p)},
                    {"D", d},
                    {"symbol", {to_json(sym.first), to_json(sym.second)}},
                    {"identity_verified", dz.identity_verified}};
      };
    });
  }
  {
    auto* s = leaf(fib, "numerics", "Genus, Euler number and theta data of the curve C for a given d");
    auto& d = parser.text(s, "d", "d");
    s->final_callback([&] {
      action = [&] {
        const auto f = fibration_numerics(parse_integer(d));
        return Json{{"d", to_json(f.d)},
                    {"genus", to_json(f.genus)},
                    {"euler", to_json(f.euler)},
                    {"theta_dim", to_json(f.theta_dim)},
                    {"theta_parity", f.theta_parity},
                    {"canonical_degree", to_json(f.canonical_degree)},
                    {"twice_theta_degree", to_json(f.twice_theta_degree)}};
      };
    });
  }

  // lattice ----------------------------------------------------------------
  auto* lattice = app.add_subcommand("lattice", "Named lattices and their discriminant forms");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  {
    auto* s = leaf(lattice, "show", "Gram matrix, invariants and discriminant form");
    auto& name = parser.text(s, "name", "U, E8_MINUS_1, LAMBDA_K3, LAMBDA_PRIME, RANK1, LAMBDA_BC, GAMMA_BC, GAMMA");
    auto& b = parser.text(s, "b", "b for LAMBDA_BC / GAMMA_BC", false);
    auto& c = parser.text(s, "c", "c for LAMBDA_BC / GAMMA_BC", false);
    auto& n = parser.text(s, "n", "n for RANK1", false);
    s->final_callback([&] {
      action = [&] {
        const auto l = named_lattice(name, b, c, n);
        Json doc{{"lattice", to_json(l)},
                 {"even", l.is_even()},
                 {"determinant", to_json(l.determinant())},
                 {"signature", to_json(l.signature())}};
        doc["discriminant_form"] = l.is_even() && l.is_nondegenerate() ? to_json(discriminant_form(l)) : Json();
        return doc;
      };
    });
  }
  {
    auto* s = leaf(lattice, "isotropic", "Isotropic subgroups of the discriminant form");
    auto& name = parser.text(s, "name", "lattice name");
    auto& b = parser.text(s, "b", "b for LAMBDA_BC / GAMMA_BC", false);
    auto& c = parser.text(s, "c", "c for LAMBDA_BC / GAMMA_BC", false);
    auto& n = parser.text(s, "n", "n for RANK1", false);
    s->final_callback([&] {
      action = [&] {
        const auto form = discriminant_form(named_lattice(name, b, c, n));
        Json subs = Json::array();
        for (const auto& sub : isotropic_subgroups(form, enumeration_bound(g))) {
          Json gens = Json::array();
          for (const auto& v : sub.generators) gens.push_back(to_json(v));
          subs.push_back({{"generators", gens}, {"order", to_json(sub.order)}, {"maximal", sub.maximal}});
        }
        return Json{{"discriminant_form", to_json(form)}, {"subgroups", subs}};
      };
    });
  }

  // suite ------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "Run the acceptance checks");
  suite->fallthrough();
  std::string suite_name;
  suite->add_option("name", suite_name, "fast or full")->required()->check(CLI::IsMember({"fast", "full"}));
  bool suite_failed = false;
  suite->final_callback([&] {
    command = "suite";
    action = [&] {
      const auto results = run_suite({suite_name == "full", g.seed});
      Json criteria = Json::array();
      for (const auto& r : results) {
        criteria.push_back(
            {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"expected", r.expected}, {"computed", r.computed}});
        err << format_line(r) << " [" << r.seconds << " s]\n";
        suite_failed = suite_failed || !r.passed;
      }
      return Json{{"suite", suite_name}, {"criteria", criteria}, {"passed", !suite_failed}};
    };
  });

  auto emit = [&](Json doc, int code) {
    doc["command"] = command;
    doc["inputs"] = parser.inputs();
    out << doc.dump(2) << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    parser.finalize();
    g.at = at_text;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return emit(Json{{"error", e.what()}}, kExitInvalid);
  }
  if (!action) {
    err << "no command given\n";
    return emit(Json{{"error", "no command given"}}, kExitInvalid);
  }

  try {
    Json doc = action();
    return emit(std::move(doc), suite_failed ? kExitSuiteFailed : kExitOk);
  } catch (const InconclusiveResult& r) {
    return emit(r.doc, kExitInconclusive);
  } catch (const Inconclusive& e) {
    err << e.what() << "\n";
    return emit(Json{{"verdict", "inconclusive"}, {"error", e.what()}}, kExitInconclusive);
  } catch (const InvalidInput& e) {
    err << e.what() << "\n";
    return emit(Json{{"error", e.what()}}, kExitInvalid);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return emit(Json{{"error", std::string("internal error: ") + e.what()}}, kExitInvalid);
  }
}

}  // namespace k3::cli
