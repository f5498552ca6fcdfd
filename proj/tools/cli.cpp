#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zi/zi.hpp"

namespace zi::cli {
namespace {

using nlohmann::json;

std::string str(const GaussInt& a) { return to_string(a); }

json gauss_list(const std::vector<GaussInt>& v) {
  json arr = json::array();
  for (const auto& g : v) arr.push_back(str(g));
  return arr;
}

std::string join(const std::vector<GaussInt>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + str(v[k]);
  return s;
}

json triple_json(const TripleZi& t) { return json::array({str(t.alpha), str(t.beta), str(t.gamma)}); }

std::string triple_text(const TripleZi& t) { return str(t.alpha) + " " + str(t.beta) + " " + str(t.gamma); }

json witness_json(const GpWitness& w) {
  json j{{"element", str(w.element)}, {"z", w.z}, {"primitive", w.primitive}};
  j["tau"] = w.tau ? json(str(*w.tau)) : json(nullptr);
  return j;
}

std::string factorization_text(const Factorization& f) {
  std::string s = str(f.unit);
  for (const auto& pp : f.factors) {
    s += " * (" + str(pp.prime) + ")";
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s;
}

json class_json(const TriangleClass& c) {
  json comps = json::array();
  for (const auto& rt : c.complements)
    comps.push_back({{"corner", point_to_json(rt.corner)},
                     {"hypotenuse_ends", json::array({point_to_json(rt.p), point_to_json(rt.q)})},
                     {"legs", json::array({rt.leg_x, rt.leg_y})},
                     {"hypotenuse", rt.hypotenuse}});
  return {{"type", to_string(c.type)},
          {"right_angled", c.right_angled},
          {"box", json::array({point_to_json(c.box_min), point_to_json(c.box_max)})},
          {"complements", comps}};
}

void class_text(std::ostream& out, const TriangleClass& c) {
  out << to_string(c.type) << (c.right_angled ? " right-angled" : "") << '\n';
  for (const auto& rt : c.complements)
    out << "complement legs " << rt.leg_x << "," << rt.leg_y << " hypotenuse " << rt.hypotenuse << " corner "
        << to_string(rt.corner) << '\n';
}

json row_json(const CensusRow& r) {
  json j{{"n", r.n},         {"kappa", r.kappa},       {"eta_sum", r.eta_sum},
         {"delta", r.delta}, {"delta_sq", r.delta_sq}, {"ratio_half", r.ratio_half}};
  j["prachar_bound"] = r.prachar_bound ? json(*r.prachar_bound) : json(nullptr);
  return j;
}

json summary_json(const CensusSummary& s) {
  json j{{"n_from", s.n_from},
         {"n_to", s.n_to},
         {"max_ratio_half", s.max_ratio_half},
         {"argmax_ratio_half", s.argmax_ratio_half},
         {"max_ratio_one", s.max_ratio_one},
         {"argmax_ratio_one", s.argmax_ratio_one},
         {"kappa_matches_eta_sum", s.kappa_matches_eta_sum},
         {"kappa_below_delta_sq", s.kappa_below_delta_sq},
         {"max_ratio_half_top_decade", s.max_ratio_half_top_decade}};
  j["max_ratio_half_before_top_decade"] =
      s.max_ratio_half_before_top_decade ? json(*s.max_ratio_half_before_top_decade) : json(nullptr);
  j["running_max_flat_in_top_decade"] =
      s.running_max_flat_in_top_decade ? json(*s.running_max_flat_in_top_decade) : json(nullptr);
  return j;
}

// CLI11 reads a bare "-i" as a short flag.
std::vector<std::string> protect_negative_i(std::vector<std::string> args) {
  for (auto& a : args)
    if (a == "-i") a = "-1i";
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  bool json_flag = false;
  bool csv_flag = false;
  std::function<int()> action;

  CLI::App app{"Gaussian integers, Pythagorean triples and Diophantine figures", "zi"};
  app.require_subcommand(1);
  app.add_flag("--json", json_flag, "JSON output");
  app.add_flag("--csv", csv_flag, "CSV output (census range)");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  const auto json_out = [&] { return cfg.format == OutputFormat::Json; };
  const auto emit = [&](const json& j) { out << j.dump() << '\n'; };

  // ---- gauss -------------------------------------------------------------
  auto* gauss = group("gauss", "arithmetic in Z[i]");
  std::string ga, gb, gc;

  auto* g_norm = leaf(gauss, "norm", "norm re^2 + im^2");
  g_norm->add_option("alpha", ga)->required();
  g_norm->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      json_out() ? emit({{"input", str(a)}, {"norm", norm(a)}}) : void(out << norm(a) << '\n');
      return kOk;
    };
  });

  auto* g_parity = leaf(gauss, "parity", "parity and residue mod 1+i");
  g_parity->add_option("alpha", ga)->required();
  g_parity->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      if (json_out())
        emit({{"input", str(a)},
              {"parity", to_string(parity_of(a))},
              {"residue_mod_one_plus_i", residue_mod_one_plus_i(a)},
              {"norm_parity", to_string(parity_by_norm(a))}});
      else
        out << to_string(parity_of(a)) << '\n';
      return kOk;
    };
  });

  auto* g_assoc = leaf(gauss, "associates", "the four associates and the canonical one");
  g_assoc->add_option("alpha", ga)->required();
  g_assoc->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      auto as = units_and_associates(a);
      std::vector<GaussInt> v(as.begin(), as.end());
      auto cf = canonical_associate(a);
      if (json_out())
        emit({{"associates", gauss_list(v)}, {"canonical", str(cf.canonical)}, {"unit", str(cf.unit)}});
      else
        out << join(v) << "\ncanonical " << str(cf.canonical) << " unit " << str(cf.unit) << '\n';
      return kOk;
    };
  });

  auto* g_gcd = leaf(gauss, "gcd", "canonical gcd of two elements");
  g_gcd->add_option("alpha", ga)->required();
  g_gcd->add_option("beta", gb)->required();
  g_gcd->callback([&] {
    action = [&] {
      auto g = gcd(parse_gauss(ga), parse_gauss(gb));
      json_out() ? emit({{"gcd", str(g)}, {"unit", g.is_unit()}}) : void(out << str(g) << '\n');
      return kOk;
    };
  });

  auto* g_gcd3 = leaf(gauss, "gcd3", "canonical gcd of three elements, with the gcd of their norms");
  g_gcd3->add_option("alpha", ga)->required();
  g_gcd3->add_option("beta", gb)->required();
  g_gcd3->add_option("gamma", gc)->required();
  g_gcd3->callback([&] {
    action = [&] {
      TripleZi t{parse_gauss(ga), parse_gauss(gb), parse_gauss(gc)};
      auto g = gcd3(t.alpha, t.beta, t.gamma);
      auto np = norm_primitivity(t);
      if (json_out())
        emit({{"gcd", str(g)}, {"unit", g.is_unit()}, {"norm_gcd", np.norm_gcd}});
      else
        out << str(g) << "\nnorm gcd " << np.norm_gcd << '\n';
      return kOk;
    };
  });

  auto* g_divmod = leaf(gauss, "divmod", "Euclidean division alpha = q beta + r");
  g_divmod->add_option("alpha", ga)->required();
  g_divmod->add_option("beta", gb)->required();
  g_divmod->callback([&] {
    action = [&] {
      auto [q, r] = euclid_divmod(parse_gauss(ga), parse_gauss(gb));
      json_out() ? emit({{"quotient", str(q)}, {"remainder", str(r)}}) : void(out << str(q) << ' ' << str(r) << '\n');
      return kOk;
    };
  });

  auto* g_classify = leaf(gauss, "classify", "prime classification (exit 1 unless prime)");
  g_classify->add_option("alpha", ga)->required();
  g_classify->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      auto c = classify(a);
      json_out() ? emit({{"input", str(a)}, {"class", to_string(c)}, {"prime", is_gaussian_prime(a)}})
                 : void(out << to_string(c) << '\n');
      return is_gaussian_prime(a) ? kOk : kNegative;
    };
  });

  Int gp_prime = 0;
  auto* g_twosq = leaf(gauss, "twosq", "p = a^2 + b^2 for a prime p = 1 mod 4");
  g_twosq->add_option("p", gp_prime)->required();
  g_twosq->callback([&] {
    action = [&] {
      auto [a, b] = sum_two_squares(gp_prime);
      json_out() ? emit({{"p", gp_prime}, {"odd", a}, {"even", b}}) : void(out << a << ' ' << b << '\n');
      return kOk;
    };
  });

  auto* g_factor = leaf(gauss, "factor", "factorization into canonical Gaussian primes");
  g_factor->add_option("alpha", ga)->required();
  g_factor->callback([&] {
    action = [&] {
      auto f = factorize(parse_gauss(ga));
      if (json_out()) {
        json fs = json::array();
        for (const auto& pp : f.factors) fs.push_back({{"prime", str(pp.prime)}, {"exponent", pp.exponent}});
        emit({{"unit", str(f.unit)}, {"factors", fs}});
      } else {
        out << factorization_text(f) << '\n';
      }
      return kOk;
    };
  });

  auto* g_sqrt = leaf(gauss, "sqrt", "square roots in Z[i] (exit 1 if none)");
  g_sqrt->add_option("alpha", ga)->required();
  g_sqrt->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      auto r = square_radical(a);
      if (json_out()) {
        json j{{"input", str(a)}, {"solutions", gauss_list(r.solutions)}, {"via_formula", r.via_formula}};
        j["hypotenuse"] = r.hypotenuse ? json(*r.hypotenuse) : json(nullptr);
        if (a.im != 0 && r.hypotenuse) {
          auto d = radical_display_params(a.re, a.im);
          j["display"] = {{"n_plus_l", d.n_plus_l},
                          {"l_minus_n", d.l_minus_n},
                          {"n_plus_l_square", d.n_plus_l_square},
                          {"l_minus_n_square", d.l_minus_n_square}};
        }
        emit(j);
      } else {
        out << (r.solvable() ? join(r.solutions) : std::string("none")) << '\n';
      }
      return r.solvable() ? kOk : kNegative;
    };
  });

  // ---- gp ----------------------------------------------------------------
  auto* gp = group("gp", "Gauss-Pythagorean integers");
  Int bound = 0;

  auto* gp_check = leaf(gp, "check", "membership witness, norm root and tau (exit 1 if not GP)");
  gp_check->add_option("alpha", ga)->required();
  gp_check->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      auto w = is_gp(a);
      if (json_out()) {
        emit(w ? json{{"gp", true}, {"witness", witness_json(*w)}} : json{{"gp", false}});
      } else if (w) {
        out << "gp z=" << w->z << (w->primitive ? " primitive" : "")
            << " tau=" << (w->tau ? str(*w->tau) : std::string("none")) << '\n';
      } else {
        out << "not gp\n";
      }
      return w ? kOk : kNegative;
    };
  });

  auto* gp_prime_cmd = leaf(gp, "prime", "GP-primality of a GP element (exit 1 if decomposable)");
  gp_prime_cmd->add_option("alpha", ga)->required();
  gp_prime_cmd->callback([&] {
    action = [&] {
      auto a = parse_gauss(ga);
      bool p = is_gp_prime(a);
      json_out() ? emit({{"input", str(a)}, {"gp_prime", p}}) : void(out << (p ? "gp-prime" : "not gp-prime") << '\n');
      return p ? kOk : kNegative;
    };
  });

  auto* gp_family = leaf(gp, "family", "the GP-prime (t + s i)^2 attached to a prime p = 1 mod 4");
  gp_family->add_option("p", gp_prime)->required();
  gp_family->callback([&] {
    action = [&] {
      auto g = gp_prime_from_rational_prime(gp_prime);
      json_out() ? emit({{"p", gp_prime}, {"gp_prime", str(g)}}) : void(out << str(g) << '\n');
      return kOk;
    };
  });

  auto* gp_list = leaf(gp, "list", "all GP elements up to a norm bound");
  bound = 10000;
  gp_list->add_option("--bound", bound, "norm bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  gp_list->callback([&] {
    action = [&] {
      auto ws = gp_stream(bound);
      if (json_out()) {
        json arr = json::array();
        for (const auto& w : ws) arr.push_back(witness_json(w));
        emit(arr);
      } else {
        for (const auto& w : ws) out << str(w.element) << ' ' << w.z << '\n';
      }
      return ws.empty() ? kNegative : kOk;
    };
  });

  // ---- triple ------------------------------------------------------------
  auto* triple = group("triple", "Pythagorean triples in Z[i]");
  bool primitive_only = false;
  Int norm_bound = 10000;
  Int coord_bound = 6;

  auto* t_gen = leaf(triple, "gen", "primitive triple from generators lambda, mu");
  t_gen->add_option("lambda", ga)->required();
  t_gen->add_option("mu", gb)->required();
  t_gen->callback([&] {
    action = [&] {
      auto t = gen_primitive_triple({parse_gauss(ga), parse_gauss(gb)});
      json_out() ? emit({{"triple", triple_json(t)}}) : void(out << triple_text(t) << '\n');
      return kOk;
    };
  });

  auto* t_check = leaf(triple, "check", "Pythagorean and primitivity status (exit 1 if not Pythagorean)");
  t_check->add_option("alpha", ga)->required();
  t_check->add_option("beta", gb)->required();
  t_check->add_option("gamma", gc)->required();
  t_check->callback([&] {
    action = [&] {
      TripleZi t{parse_gauss(ga), parse_gauss(gb), parse_gauss(gc)};
      auto np = norm_primitivity(t);
      if (json_out())
        emit({{"pythagorean", t.pythagorean()}, {"primitive", np.gauss_primitive}, {"norm_gcd", np.norm_gcd}});
      else
        out << (t.pythagorean() ? "pythagorean" : "not pythagorean") << ' '
            << (np.gauss_primitive ? "primitive" : "not primitive") << " norm_gcd=" << np.norm_gcd << '\n';
      return t.pythagorean() ? kOk : kNegative;
    };
  });

  auto* t_enum = leaf(triple, "enumerate", "triples with component norms up to a bound, one per class");
  t_enum->add_option("--bound", norm_bound, "component norm bound")->check(CLI::NonNegativeNumber)->capture_default_str();
  t_enum->add_flag("--primitive", primitive_only, "primitive triples only");
  t_enum->callback([&] {
    action = [&] {
      auto ts = enumerate_pythagorean_triples(norm_bound, primitive_only);
      if (json_out()) {
        json arr = json::array();
        for (const auto& t : ts) arr.push_back(triple_json(t));
        emit(arr);
      } else {
        for (const auto& t : ts) out << triple_text(t) << '\n';
      }
      return ts.empty() ? kNegative : kOk;
    };
  });

  auto* t_fermat = leaf(triple, "fermat4", "search x^4 + y^4 = z^4 in a coordinate box (exit 1 if none)");
  t_fermat->add_option("--bound", coord_bound, "coordinate bound")->check(CLI::PositiveNumber)->capture_default_str();
  t_fermat->callback([&] {
    action = [&] {
      auto sols = fermat_quartic_search(coord_bound);
      if (json_out()) {
        json arr = json::array();
        for (const auto& t : sols) arr.push_back(triple_json(t));
        emit({{"bound", coord_bound}, {"solutions", arr}});
      } else if (sols.empty()) {
        out << "no solutions with coordinates in [-" << coord_bound << "," << coord_bound << "]\n";
      } else {
        for (const auto& t : sols) out << triple_text(t) << '\n';
      }
      return sols.empty() ? kNegative : kOk;
    };
  });

  auto* t_identity = leaf(triple, "identity", "check N(k^2 + t^2) = N(k)^2 + N(t)^2 + 2 Re((k conj t)^2)");
  t_identity->add_option("kappa", ga)->required();
  t_identity->add_option("tau", gb)->required();
  t_identity->callback([&] {
    action = [&] {
      bool ok = norm_sum_identity_check(parse_gauss(ga), parse_gauss(gb));
      json_out() ? emit({{"holds", ok}}) : void(out << (ok ? "holds" : "fails") << '\n');
      return ok ? kOk : kNegative;
    };
  });

  // ---- figure ------------------------------------------------------------
  auto* figure = group("figure", "Diophantine figures in the lattice plane");
  std::string fig_path;
  std::string out_path;
  std::vector<std::size_t> path_idx;
  Int radius = 50;
  Int p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0;

  auto* f_check = leaf(figure, "check", "all pairwise distances integral? (exit 1 if not)");
  f_check->add_option("file", fig_path)->required();
  f_check->callback([&] {
    action = [&] {
      Figure f = read_figure_file(fig_path);
      auto r = is_diophantine(f);
      if (json_out()) {
        json j{{"diophantine", r.diophantine}};
        if (r.violation)
          j["violation"] = json::array({point_to_json(f.vertices[r.violation->first]),
                                        point_to_json(f.vertices[r.violation->second])});
        emit(j);
      } else if (r.diophantine) {
        out << "diophantine\n";
      } else {
        const auto& a = f.vertices[r.violation->first];
        const auto& b = f.vertices[r.violation->second];
        out << "not diophantine: " << to_string(a) << "-" << to_string(b) << " squared distance " << dist2(a, b)
            << '\n';
      }
      return r.diophantine ? kOk : kNegative;
    };
  });

  auto* f_path = leaf(figure, "path", "length of a closed path given as vertex indices");
  f_path->add_option("file", fig_path)->required();
  f_path->add_option("indices", path_idx, "vertex indices, first == last")->required();
  f_path->callback([&] {
    action = [&] {
      Int len = closed_path_length(read_figure_file(fig_path), path_idx);
      json_out() ? emit({{"length", len}, {"even", len % 2 == 0}}) : void(out << len << '\n');
      return kOk;
    };
  });

  auto* f_classify = leaf(figure, "classify", "enveloping-rectangle type of a 3-vertex figure");
  f_classify->add_option("file", fig_path)->required();
  f_classify->callback([&] {
    action = [&] {
      Figure f = read_figure_file(fig_path);
      if (f.size() != 3) throw DomainError("classify needs a figure with exactly 3 vertices");
      auto c = classify_triangle(f.vertices[0], f.vertices[1], f.vertices[2]);
      json_out() ? emit(class_json(c)) : class_text(out, c);
      return kOk;
    };
  });

  auto* f_type4 = leaf(figure, "type4", "type-4 triangle from parameters a b c d");
  f_type4->add_option("a", p1)->required();
  f_type4->add_option("b", p2)->required();
  f_type4->add_option("c", p3)->required();
  f_type4->add_option("d", p4)->required();
  f_type4->callback([&] {
    action = [&] {
      auto t = type4_construct(p1, p2, p3, p4);
      auto c = classify_triangle(t.a, t.b, t.c);
      if (json_out()) {
        emit({{"vertices", json::array({point_to_json(t.a), point_to_json(t.b), point_to_json(t.c)})},
              {"sides", {{"AB", t.ab}, {"BC", t.bc}, {"AC", t.ac}}},
              {"classification", class_json(c)}});
      } else {
        out << "A=" << to_string(t.a) << " B=" << to_string(t.b) << " C=" << to_string(t.c) << '\n'
            << "AB=" << t.ab << " BC=" << t.bc << " AC=" << t.ac << '\n';
        class_text(out, c);
      }
      return kOk;
    };
  });

  auto* f_complete = leaf(figure, "complete", "third vertices X for A=(0,0), B=(b1,b2), |BX|=a, |AX|=b, |AB|=c");
  f_complete->add_option("b1", p1)->required();
  f_complete->add_option("b2", p2)->required();
  f_complete->add_option("a", p3)->required();
  f_complete->add_option("b", p4)->required();
  f_complete->add_option("c", p5)->required();
  f_complete->callback([&] {
    action = [&] {
      const LatticePoint bpt{p1, p2};
      auto line = completion_line(bpt, p3, p4, p5);
      auto pts = complete_triangle(bpt, p3, p4, p5);
      if (json_out()) {
        json j{{"solvable", line.solvable}, {"rhs", line.rhs}};
        if (line.solvable) {
          j["base"] = point_to_json(*line.base);
          j["direction"] = json::array({line.direction->dx, line.direction->dy});
        }
        json arr = json::array();
        for (const auto& p : pts) arr.push_back(point_to_json(p));
        j["points"] = arr;
        emit(j);
      } else {
        out << "line " << 2 * p1 << "*x1 + " << 2 * p2 << "*x2 = " << line.rhs
            << (line.solvable ? "" : " (no integer solutions)") << '\n';
        for (const auto& p : pts) out << to_string(p) << '\n';
      }
      return pts.empty() ? kNegative : kOk;
    };
  });

  auto* f_extend = leaf(figure, "extend", "lattice points extending a figure within a radius (exit 1 if none)");
  f_extend->add_option("file", fig_path)->required();
  f_extend->add_option("--radius", radius, "search radius around the bounding box")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  f_extend->callback([&] {
    action = [&] {
      auto pts = erdos_extend(read_figure_file(fig_path), radius);
      if (json_out()) {
        json arr = json::array();
        for (const auto& p : pts) arr.push_back(point_to_json(p));
        emit({{"radius", radius}, {"points", arr}});
      } else if (pts.empty()) {
        out << "no extension within radius " << radius << '\n';
      } else {
        for (const auto& p : pts) out << to_string(p) << '\n';
      }
      return pts.empty() ? kNegative : kOk;
    };
  });

  auto* f_fan = leaf(figure, "fan", "figure of all Pythagorean triangles with leg n");
  f_fan->add_option("n", p1)->required()->check(CLI::PositiveNumber);
  f_fan->add_option("--out", out_path, "also write the figure JSON to this file");
  f_fan->callback([&] {
    action = [&] {
      Figure f = cathetus_fan(p1);
      if (!out_path.empty()) write_figure_file(out_path, f);
      emit(figure_to_json(f));
      return kOk;
    };
  });

  // ---- census ------------------------------------------------------------
  auto* census = group("census", "counting functions");
  Int cn = 0, cn_to = 0;
  bool brute = false;

  auto* c_kappa = leaf(census, "kappa", "Pythagorean triangles with leg n");
  c_kappa->add_option("n", cn)->required()->check(CLI::NonNegativeNumber);
  c_kappa->add_flag("--brute", brute, "use the factor-pair scan instead of the closed form");
  c_kappa->callback([&] {
    action = [&] {
      Int k = brute ? kappa_bruteforce(cn) : kappa_closed_form(cn);
      json_out() ? emit({{"n", cn}, {"kappa", k}}) : void(out << k << '\n');
      return kOk;
    };
  });

  auto* c_eta = leaf(census, "eta", "primitive Pythagorean triangles with leg d");
  c_eta->add_option("d", cn)->required()->check(CLI::PositiveNumber);
  c_eta->callback([&] {
    action = [&] {
      Int e = eta(cn);
      json_out() ? emit({{"d", cn}, {"eta", e}}) : void(out << e << '\n');
      return kOk;
    };
  });

  auto* c_delta = leaf(census, "delta", "number of divisors");
  c_delta->add_option("n", cn)->required()->check(CLI::PositiveNumber);
  c_delta->callback([&] {
    action = [&] {
      Int d = delta(cn);
      json_out() ? emit({{"n", cn}, {"delta", d}}) : void(out << d << '\n');
      return kOk;
    };
  });

  auto* c_chi = leaf(census, "chi", "Pythagorean triangles with hypotenuse l");
  c_chi->add_option("l", cn)->required()->check(CLI::PositiveNumber);
  c_chi->add_flag("--brute", brute, "use direct search instead of the factorization formula");
  c_chi->callback([&] {
    action = [&] {
      Int c = brute ? chi_bruteforce(cn) : chi(cn);
      json_out() ? emit({{"l", cn}, {"chi", c}}) : void(out << c << '\n');
      return kOk;
    };
  });

  auto* c_range = leaf(census, "range", "census rows for n in [from, to]");
  c_range->add_option("from", cn)->required()->check(CLI::PositiveNumber);
  c_range->add_option("to", cn_to)->required()->check(CLI::PositiveNumber);
  c_range->callback([&] {
    action = [&] {
      auto rep = census_range(cn, cn_to);
      if (cfg.format == OutputFormat::Json) {
        json rows = json::array();
        for (const auto& r : rep.rows) rows.push_back(row_json(r));
        emit({{"rows", rows}, {"summary", summary_json(rep.summary)}});
      } else {
        write_csv(out, rep.rows);
        if (cfg.format == OutputFormat::Plain) {
          const auto& s = rep.summary;
          out << "# max kappa/sqrt(n) " << format_fixed6(s.max_ratio_half) << " at n=" << s.argmax_ratio_half << '\n'
              << "# max kappa/n " << format_fixed6(s.max_ratio_one) << " at n=" << s.argmax_ratio_one << '\n'
              << "# kappa == eta_sum: " << (s.kappa_matches_eta_sum ? "yes" : "no")
              << ", kappa < delta^2: " << (s.kappa_below_delta_sq ? "yes" : "no") << '\n';
          if (s.running_max_flat_in_top_decade)
            out << "# running max of kappa/sqrt(n) flat over top decade: "
                << (*s.running_max_flat_in_top_decade ? "yes" : "no") << '\n';
        }
      }
      return kOk;
    };
  });

  std::vector<std::string> args = protect_negative_i(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (json_flag && csv_flag) {
    err << "--json and --csv are mutually exclusive\n";
    return kUsage;
  }
  cfg.format = json_flag ? OutputFormat::Json : csv_flag ? OutputFormat::Csv : OutputFormat::Plain;
  if (!action) {
    err << app.help();
    return kUsage;
  }
  try {
    return action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace zi::cli
