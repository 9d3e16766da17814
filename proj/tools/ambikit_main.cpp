// ambikit command line tool.
//
// Exit codes: 0 = predicate true / success, 1 = predicate false, 2 = usage
// or input error.  All structured output is JSON on stdout (or the -o file);
// `pulse grid` writes CSV.  Rational literals ("p/q" or decimal strings)
// parse exactly; a float literal in a JSON input demotes the run to float
// mode with a notice on stderr, and is rejected under --mode exact.

#include <ambikit/bset.hpp>
#include <ambikit/hermite.hpp>
#include <ambikit/json_io.hpp>
#include <ambikit/kmatrix.hpp>
#include <ambikit/partner.hpp>
#include <ambikit/poly.hpp>
#include <ambikit/pulse.hpp>
#include <ambikit/quadrature.hpp>
#include <ambikit/signal.hpp>
#include <ambikit/strange.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ambikit;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Common {
  std::string mode = "auto";  // auto | exact | float
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string out;  // empty = stdout
  ParseContext ctx;

  // Applies the mode rule after all inputs are parsed.  Returns true when
  // the computation should run in float.
  bool finalize() const {
    if (mode == "exact" && ctx.saw_float)
      throw CLI::ValidationError("--mode exact", "input contains a float literal");
    if (mode == "float") return true;
    if (ctx.saw_float) {
      std::cerr << "note: float literal in input, computing in float mode\n";
      return true;
    }
    return false;
  }

  Tol tolerance() const { return Tol{tol}; }
};

void emit(const Common& c, const Json& j) {
  if (c.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::invalid_argument("cannot open output file: " + c.out);
  f << j.dump(2) << "\n";
}

Signal load_signal(const std::string& path, Common& c) {
  Signal s = parse_signal(load_json_file(path), c.ctx);
  return normalize(s).signal;
}

Poly load_poly(const std::string& path, Common& c) {
  return parse_poly(load_json_file(path), c.ctx);
}

// "p/q" or decimal, optionally "re,im"
Scalar parse_scalar_literal(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return Scalar(parse_rational(text));
  return Scalar(GaussQ{parse_rational(text.substr(0, comma)),
                       parse_rational(text.substr(comma + 1))});
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_scalar_literal(item));
  if (out.empty()) throw std::invalid_argument("empty scalar list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

GridRange parse_range(const std::string& text) {
  GridRange r;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &r.start, &r.stop, &r.step) != 3)
    throw std::invalid_argument("range must be start:stop:step, got: " + text);
  return r;
}

Json scalar_list_json(const std::vector<Scalar>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

Json bipoly_to_json(const BiPoly& b) {
  Json rows = Json::array();
  for (const auto& row : b.c) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    rows.push_back(std::move(r));
  }
  Json j;
  j["coeffs"] = std::move(rows);
  return j;
}

// ---------------------------------------------------------------- selftest

struct SelfTestRow {
  std::string name;
  std::function<bool()> run;
};

std::vector<SelfTestRow> selftest_rows() {
  std::vector<SelfTestRow> rows;
  auto add = [&](std::string name, std::function<bool()> f) {
    rows.push_back({std::move(name), std::move(f)});
  };
  Signal wa = Signal::from_ints({1, 2, 0, 2, 4});
  Signal wb = Signal::from_ints({2, 4, 0, 1, 2});

  add("worked pair is a partner pair", [=] { return is_partner(wa, wb); });
  add("worked pair has no trivial witness",
      [=] { return !is_trivial_partner(wa, wb).has_value(); });
  add("worked pair passes the Gram criterion", [=] { return gram_equal(wa, wb, Tol{}); });
  add("product construction reproduces the worked pair", [=] {
    Signal p = Signal::from_ints({1, 2});
    return signals_equal(kron_signal(p, p), wa, Tol{});
  });
  add("product construction with the swapped factor", [=] {
    return signals_equal(kron_signal(Signal::from_ints({1, 2}), Signal::from_ints({2, 1})), wb,
                         Tol{});
  });
  add("block product matches the matrix of the product signal", [=] {
    Signal p = Signal::from_ints({1, 2});
    auto lhs = to_sparse(kron_matrix(build_K(p), build_K(p)));
    return matrices_equal(lhs, to_sparse(build_K(wa)), Tol{}) &&
           matrices_equal(lhs, kron(to_sparse(build_K(p)), to_sparse(build_K(p))), Tol{});
  });
  add("block product support bound", [=] {
    Signal p = Signal::from_ints({1, 2});
    auto kc = build_K(kron_signal(p, p));
    int spacing = 2 * p.degree() + 1;
    for (const auto& [ml, v] : kc.entries) {
      bool covered = false;
      for (const auto& [mla, va] : build_K(p).entries)
        for (const auto& [mlb, vb] : build_K(p).entries)
          covered = covered || (ml.first == mla.first + spacing * mlb.first &&
                                ml.second == mla.second + spacing * mlb.second);
      if (!covered) return false;
    }
    return true;
  });
  add("unit multiplier on a B2 support yields a partner", [] {
    Signal a = Signal::from_ints({1, 1, 0, 1});
    Multiplier c;
    c.support = SupportSet::of({0, 1, 3});
    c.values = {Scalar{1}, Scalar{1}, circle_point(Rational(1, 2))};
    if (!check_multiplier_condition(c)) return false;
    return is_partner(a, apply_multiplier(c, a));
  });
  add("restricted witness from a multiplier partner", [] {
    Signal a = Signal::from_ints({1, 1, 0, 1});
    Multiplier c;
    c.support = SupportSet::of({0, 1, 3});
    c.values = {Scalar{1}, Scalar{1}, circle_point(Rational(1, 2))};
    auto eta = restricted_partner_check(apply_multiplier(c, a), a);
    return eta.has_value();
  });
  add("powers of two form a B2 set", [] {
    std::vector<int> pows;
    for (int j = 0; j <= 10; ++j) pows.push_back(1 << j);
    return is_B2(SupportSet::of(pows));
  });
  add("interleaving produces partners", [] {
    auto r = interleave({Scalar{1}, Scalar{1}}, Scalar{2});
    return signals_equal(r.a, Signal::from_ints({1, 2, 1, 2}), Tol{}) &&
           signals_equal(r.b, Signal::from_ints({2, 1, 2, 1}), Tol{}) && is_partner(r.a, r.b);
  });
  add("first Hermite basis vector maps to sqrt-two times Z", [] {
    Poly b = bargmann({Scalar{0}, Scalar{1}});
    if (b.degree() != 1 || !b.coeff(0).is_zero()) return false;
    Scalar c1 = b.coeff(1);
    return c1.is_exact() && (c1 * c1) == Scalar{2};
  });
  add("reflection preserves monicity", [] {
    Poly p{{Scalar{5}, Scalar{0}, Scalar(GaussQ{Rational(2), Rational(1)}), Scalar{1}}};
    Poly r = check_p(p);
    return r.degree() == 3 && r.coeff(3) == Scalar{1};
  });
  add("reflection is an algebraic partner", [] {
    Poly p{{Scalar{3}, Scalar(GaussQ{Rational(0), Rational(1)}), Scalar{1}}};
    return algebraic_partner_test(p, check_p(p));
  });
  add("binomial with zero linear term scans to the reflected pair", [] {
    Poly p{{Scalar{2}, Scalar{0}, Scalar{0}, Scalar{1}}};  // Z^3 + 2
    auto found = partner_scan(p, 1e-6);
    if (found.size() != 2) return false;
    return polys_equal(found[0], check_p(p), Tol{1e-8}) && polys_equal(found[1], p, Tol{1e-8});
  });
  add("perturbed binomial scans to the reflected pair", [] {
    // Z^4 + 2Z itself has a root at zero; nudge the constant term
    Poly p{{Scalar(Rational(1, 64)), Scalar{2}, Scalar{0}, Scalar{0}, Scalar{1}}};
    if (!is_generic(p, 1e-6)) return false;
    auto found = partner_scan(p, 1e-6);
    if (found.size() != 2) return false;
    return polys_equal(found[0], check_p(p), Tol{1e-8}) && polys_equal(found[1], p, Tol{1e-8});
  });
  add("search finds no strange partner at length three", [] {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    Signal a;
    a.offset = 0;
    for (int i = 0; i < 3; ++i)
      a.coeffs.push_back(Scalar{std::complex<double>(g(rng), g(rng))});
    StrangeOptions opt;
    opt.restarts = 10000;
    opt.tol = 1e-10;
    opt.seed = 11;
    return strange_search(normalize(a).signal, opt).empty();
  });
  return rows;
}

int run_selftest(const Common& c, bool as_json) {
  auto rows = selftest_rows();
  Json report = Json::array();
  bool all = true;
  for (const auto& row : rows) {
    bool ok = false;
    std::string error;
    try {
      ok = row.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && ok;
    if (as_json) {
      Json r;
      r["name"] = row.name;
      r["pass"] = ok;
      if (!error.empty()) r["error"] = error;
      report.push_back(std::move(r));
    } else {
      std::cout << (ok ? "PASS  " : "FAIL  ") << row.name;
      if (!error.empty()) std::cout << "  (" << error << ")";
      std::cout << "\n";
    }
  }
  if (as_json) emit(c, report);
  return all ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ambiguity function toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--mode", common.mode, "scalar mode (exact|float); default: exact unless a float literal appears")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  app.add_option("--tol", common.tol, "relative tolerance for float comparisons")->capture_default_str();
  app.add_option("--seed", common.seed, "seed for randomized operations")->capture_default_str();
  app.add_option("-o,--output", common.out, "write output to a file instead of stdout");

  int exit_code = kTrue;

  // ---- partner-check / trivial-check / restricted-check
  std::string path_a, path_b;
  auto* partner = app.add_subcommand("partner-check", "decide the equal-modulus partner relation");
  partner->add_option("a", path_a, "signal JSON")->required();
  partner->add_option("b", path_b, "signal JSON")->required();
  partner->callback([&] {
    Signal a = load_signal(path_a, common), b = load_signal(path_b, common);
    if (common.finalize()) { a = a.to_float(); b = b.to_float(); }
    bool r = is_partner(a, b, common.tolerance());
    Json j;
    j["partner"] = r;
    emit(common, j);
    exit_code = r ? kTrue : kFalse;
  });

  auto* trivial = app.add_subcommand("trivial-check", "find a phase/modulation/shift/reflection witness");
  trivial->add_option("a", path_a, "signal JSON")->required();
  trivial->add_option("b", path_b, "signal JSON")->required();
  trivial->callback([&] {
    Signal a = load_signal(path_a, common), b = load_signal(path_b, common);
    if (common.finalize()) { a = a.to_float(); b = b.to_float(); }
    auto w = is_trivial_partner(a, b, common.tolerance());
    emit(common, w ? heisenberg_to_json(w->h) : Json("none"));
    exit_code = w ? kTrue : kFalse;
  });

  auto* restricted = app.add_subcommand("restricted-check", "shift-wise proportionality of cross sequences");
  restricted->add_option("a", path_a, "signal JSON")->required();
  restricted->add_option("b", path_b, "signal JSON")->required();
  restricted->callback([&] {
    Signal a = load_signal(path_a, common), b = load_signal(path_b, common);
    if (common.finalize()) { a = a.to_float(); b = b.to_float(); }
    auto eta = restricted_partner_check(a, b, common.tolerance());
    if (eta) {
      Json j;
      j["eta"] = scalar_list_json(*eta);
      emit(common, j);
    } else {
      emit(common, Json("none"));
    }
    exit_code = eta ? kTrue : kFalse;
  });

  // ---- multiplier
  auto* mult = app.add_subcommand("multiplier", "unimodular multiplier operations");
  mult->require_subcommand(1);
  std::string path_c;
  auto* mcheck = mult->add_subcommand("check", "test the quadruple condition on the support");
  mcheck->add_option("c", path_c, "multiplier JSON")->required();
  mcheck->callback([&] {
    Multiplier c = parse_multiplier(load_json_file(path_c), common.ctx);
    if (common.finalize())
      for (auto& v : c.values) v = Scalar{v.to_complex()};
    bool r = check_multiplier_condition(c, common.tolerance());
    Json j;
    j["condition"] = r;
    emit(common, j);
    exit_code = r ? kTrue : kFalse;
  });
  auto* mapply = mult->add_subcommand("apply", "multiply coefficients by c(n)");
  mapply->add_option("c", path_c, "multiplier JSON")->required();
  mapply->add_option("a", path_a, "signal JSON")->required();
  mapply->callback([&] {
    Multiplier c = parse_multiplier(load_json_file(path_c), common.ctx);
    Signal a = load_signal(path_a, common);
    if (common.finalize()) {
      a = a.to_float();
      for (auto& v : c.values) v = Scalar{v.to_complex()};
    }
    emit(common, signal_to_json(apply_multiplier(c, a)));
  });

  // ---- bset
  auto* bset = app.add_subcommand("bset", "B2/B3 set operations");
  bset->require_subcommand(1);
  std::string set_text, set_text2;
  int order = 2;
  auto* btest = bset->add_subcommand("test", "sum-uniqueness test");
  btest->add_option("--order", order, "2 or 3")->capture_default_str()->check(CLI::IsMember({2, 3}));
  btest->add_option("set", set_text, "comma-separated integers")->required();
  btest->callback([&] {
    auto L = SupportSet::of(parse_int_list(set_text));
    bool r = order == 2 ? is_B2(L) : is_B3(L);
    Json j;
    j["order"] = order;
    j["b_set"] = r;
    emit(common, j);
    exit_code = r ? kTrue : kFalse;
  });
  auto* brecover = bset->add_subcommand("recover", "shift/reflection recovery from a difference set");
  brecover->add_option("set", set_text, "B3 reference set")->required();
  brecover->add_option("translate", set_text2, "candidate translate")->required();
  brecover->callback([&] {
    auto w = recover_shift(SupportSet::of(parse_int_list(set_text)),
                           SupportSet::of(parse_int_list(set_text2)));
    if (w) {
      Json j;
      j["orientation"] = w->orientation == ShiftOrientation::direct ? "direct" : "reflected";
      j["m"] = w->m;
      emit(common, j);
    } else {
      emit(common, Json("none"));
    }
    exit_code = w ? kTrue : kFalse;
  });

  // ---- matrix
  auto* matrix = app.add_subcommand("matrix", "ambiguity matrix operations");
  matrix->require_subcommand(1);
  auto* gramc = matrix->add_subcommand("gram-check", "compare the Gram matrices of two signals");
  gramc->add_option("a", path_a, "signal JSON")->required();
  gramc->add_option("b", path_b, "signal JSON")->required();
  gramc->callback([&] {
    Signal a = load_signal(path_a, common), b = load_signal(path_b, common);
    if (common.finalize()) { a = a.to_float(); b = b.to_float(); }
    bool r = gram_equal(a, b, common.tolerance());
    Json j;
    j["gram_equal"] = r;
    emit(common, j);
    exit_code = r ? kTrue : kFalse;
  });

  // ---- strange
  auto* strange = app.add_subcommand("strange", "partner constructions and search");
  strange->require_subcommand(1);
  bool tight = false;
  auto* skron = strange->add_subcommand("kron", "spread product of two signals");
  skron->add_option("a", path_a, "signal JSON")->required();
  skron->add_option("b", path_b, "signal JSON")->required();
  skron->add_flag("--tight", tight, "use spacing N+1 instead of 2N+1");
  skron->callback([&] {
    Signal a = load_signal(path_a, common), b = load_signal(path_b, common);
    if (common.finalize()) { a = a.to_float(); b = b.to_float(); }
    emit(common, signal_to_json(tight ? kron_signal_tight(a, b) : kron_signal(a, b)));
  });

  std::string alpha_text, lambda_text = "1";
  auto* sinter = strange->add_subcommand("interleave", "even/odd interleaved partner pair");
  sinter->add_option("--alpha", alpha_text, "scalars, ';' separated (each 're' or 're,im')")->required();
  sinter->add_option("--lambda", lambda_text, "scalar ratio")->capture_default_str();
  sinter->callback([&] {
    auto r = interleave(parse_scalar_list(alpha_text), parse_scalar_literal(lambda_text));
    if (r.degenerate) std::cerr << "note: lambda is zero, outputs renormalized\n";
    Json j;
    j["a"] = signal_to_json(r.a);
    j["b"] = signal_to_json(r.b);
    j["degenerate"] = r.degenerate;
    emit(common, j);
  });

  std::string factors_text, flips_text;
  auto* siter = strange->add_subcommand("iterate", "product of binomials with spreading powers");
  siter->add_option("--factors", factors_text, "'alpha:beta' pairs, ';' separated")->required();
  siter->add_option("--flips", flips_text, "'j:modulate:c' or 'j:swap:c', ';' separated");
  siter->callback([&] {
    std::vector<std::pair<Scalar, Scalar>> factors;
    {
      std::stringstream ss(factors_text);
      std::string item;
      while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("factor must be alpha:beta, got: " + item);
        factors.emplace_back(parse_scalar_literal(item.substr(0, colon)),
                             parse_scalar_literal(item.substr(colon + 1)));
      }
    }
    std::vector<IterFlip> flips;
    if (!flips_text.empty()) {
      std::stringstream ss(flips_text);
      std::string item;
      while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto c1 = item.find(':');
        auto c2 = item.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
          throw std::invalid_argument("flip must be j:modulate:c or j:swap:c, got: " + item);
        IterFlip f;
        f.j = std::stoi(item.substr(0, c1));
        std::string kind = item.substr(c1 + 1, c2 - c1 - 1);
        if (kind == "modulate")
          f.kind = IterFlip::Kind::modulate;
        else if (kind == "swap")
          f.kind = IterFlip::Kind::swap;
        else
          throw std::invalid_argument("flip kind must be modulate or swap, got: " + kind);
        f.c = parse_scalar_literal(item.substr(c2 + 1));
        flips.push_back(std::move(f));
      }
    }
    emit(common, signal_to_json(iterated_product(factors, flips)));
  });

  long restarts = 2000;
  double search_tol = 1e-10;
  std::vector<std::string> hint_paths;
  auto* ssearch = strange->add_subcommand("search", "randomized search for non-trivial partners");
  ssearch->add_option("a", path_a, "signal JSON")->required();
  ssearch->add_option("--restarts", restarts, "number of random starts")->capture_default_str();
  ssearch->add_option("--tol", search_tol, "residual threshold")->capture_default_str();
  ssearch->add_option("--hint", hint_paths, "signal JSON tried before the random starts");
  ssearch->callback([&] {
    Signal a = load_signal(path_a, common);
    StrangeOptions opt;
    opt.restarts = restarts;
    opt.tol = search_tol;
    opt.seed = common.seed;
    for (const auto& hp : hint_paths) opt.hints.push_back(load_signal(hp, common));
    common.finalize();  // float literals are fine here; the search runs in float anyway
    auto found = strange_search(a, opt);
    Json arr = Json::array();
    for (const auto& cand : found) {
      Json j;
      j["signal"] = signal_to_json(cand.b);
      j["residual"] = cand.residual;
      j["certificate"] = cand.cert == Certificate::exact ? "exact" : "numeric-only";
      arr.push_back(std::move(j));
    }
    Json j;
    j["candidates"] = std::move(arr);
    emit(common, j);
  });

  // ---- hermite
  auto* hermite = app.add_subcommand("hermite", "algebraic ambiguity problem");
  hermite->require_subcommand(1);
  std::string path_p;
  auto* ambpoly = hermite->add_subcommand("ambpoly", "bivariate ambiguity polynomial of P");
  ambpoly->add_option("P", path_p, "polynomial JSON")->required();
  ambpoly->callback([&] {
    Poly p = load_poly(path_p, common);
    if (common.finalize()) p = p.to_float();
    emit(common, bipoly_to_json(ambiguity_polynomial(p)));
  });

  double scan_tol = 1e-6;
  auto* scan = hermite->add_subcommand("partner-scan", "enumerate partners via root-subset reflection");
  scan->add_option("P", path_p, "monic polynomial JSON")->required();
  scan->add_option("--tol", scan_tol, "genericity/certification tolerance")->capture_default_str();
  scan->callback([&] {
    Poly p = load_poly(path_p, common);
    if (common.finalize()) p = p.to_float();
    auto found = partner_scan(p, scan_tol);
    Json arr = Json::array();
    for (const auto& q : found) arr.push_back(poly_to_json(q));
    Json j;
    j["survivors"] = std::move(arr);
    emit(common, j);
  });

  double generic_tol = 1e-6;
  auto* generic = hermite->add_subcommand("generic-check", "simple non-symmetric roots test");
  generic->add_option("P", path_p, "polynomial JSON")->required();
  generic->add_option("--tol", generic_tol, "minimal root separation")->capture_default_str();
  generic->callback([&] {
    Poly p = load_poly(path_p, common);
    common.finalize();
    bool r = is_generic(p, generic_tol);
    Json j;
    j["generic"] = r;
    emit(common, j);
    exit_code = r ? kTrue : kFalse;
  });

  int jmax = 4;
  std::string grid_text = "3x3";
  double lag_tol = 1e-8;
  auto* lag = hermite->add_subcommand("laguerre-verify",
                                      "closed form against Gauss-Hermite quadrature");
  lag->add_option("--jmax", jmax, "max Hermite index")->capture_default_str();
  lag->add_option("--grid", grid_text, "points as RxC over [-1.5,1.5]^2")->capture_default_str();
  lag->add_option("--tol", lag_tol, "max allowed relative error")->capture_default_str();
  lag->callback([&] {
    int rows = 0, cols = 0;
    if (std::sscanf(grid_text.c_str(), "%dx%d", &rows, &cols) != 2 || rows < 1 || cols < 1)
      throw std::invalid_argument("grid must be RxC, got: " + grid_text);
    double max_rel = 0.0;
    for (int j = 0; j <= jmax; ++j)
      for (int k = 0; k <= jmax; ++k)
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) {
            double x = rows == 1 ? 0.0 : -1.5 + 3.0 * r / (rows - 1);
            double y = cols == 1 ? 0.0 : -1.5 + 3.0 * c / (cols - 1);
            auto closed = laguerre_cross(j, k, x, y);
            auto quad = hermite_cross_quadrature(j, k, x, y);
            double scale = std::max(1.0, std::abs(quad));
            max_rel = std::max(max_rel, std::abs(closed - quad) / scale);
          }
    Json j;
    j["jmax"] = jmax;
    j["points"] = rows * cols;
    j["max_rel_error"] = max_rel;
    j["tol"] = lag_tol;
    emit(common, j);
    exit_code = max_rel <= lag_tol ? kTrue : kFalse;
  });

  // ---- pulse
  auto* pulse = app.add_subcommand("pulse", "continuous ambiguity of pulse-type signals");
  pulse->require_subcommand(1);
  std::string path_u, eta_text, xrange_text, yrange_text;
  auto* pgrid = pulse->add_subcommand("grid", "CSV of A(u) on a rectangular grid");
  pgrid->add_option("u", path_u, "pulse JSON")->required();
  pgrid->add_option("--eta", eta_text, "override the pulse width (rational)");
  pgrid->add_option("--xrange", xrange_text, "start:stop:step")->required();
  pgrid->add_option("--yrange", yrange_text, "start:stop:step")->required();
  pgrid->callback([&] {
    PulseDescriptor u = parse_pulse(load_json_file(path_u), common.ctx);
    if (!eta_text.empty()) {
      u.eta = parse_rational(eta_text);
      validate_pulse(u);
    }
    if (common.finalize()) u.a = u.a.to_float();
    GridRange xs = parse_range(xrange_text), ys = parse_range(yrange_text);
    if (common.out.empty()) {
      export_grid(u, xs, ys, std::cout);
    } else {
      std::ofstream f(common.out);
      if (!f) throw std::invalid_argument("cannot open output file: " + common.out);
      export_grid(u, xs, ys, f);
    }
  });

  long samples = 50;
  double pulse_tol = 1e-6;
  auto* pverify = pulse->add_subcommand("verify", "closed form against adaptive quadrature");
  pverify->add_option("u", path_u, "pulse JSON")->required();
  pverify->add_option("--eta", eta_text, "override the pulse width (rational)");
  pverify->add_option("--samples", samples, "number of random sample points")->capture_default_str();
  pverify->add_option("--tol", pulse_tol, "max allowed absolute error")->capture_default_str();
  pverify->callback([&] {
    PulseDescriptor u = parse_pulse(load_json_file(path_u), common.ctx);
    if (!eta_text.empty()) {
      u.eta = parse_rational(eta_text);
      validate_pulse(u);
    }
    if (common.finalize()) u.a = u.a.to_float();
    int n = u.a.degree();
    std::mt19937_64 rng(common.seed);
    std::uniform_real_distribution<double> ux(-(n + 1.0), n + 1.0), uy(-3.5, 3.5);
    double max_err = 0.0;
    for (long i = 0; i < samples; ++i) {
      double x = ux(rng), y = uy(rng);
      max_err = std::max(max_err, std::abs(pulse_ambiguity(u, x, y) -
                                           pulse_ambiguity_quadrature(u, x, y, pulse_tol / 10)));
    }
    Json j;
    j["samples"] = samples;
    j["max_abs_error"] = max_err;
    j["tol"] = pulse_tol;
    j["eta"] = rational_to_string(u.eta);
    if (u.eta > Rational(1, 3))
      j["warning"] = "eta exceeds 1/3; the pulse-form uniqueness guarantee does not apply";
    emit(common, j);
    exit_code = max_err <= pulse_tol ? kTrue : kFalse;
  });

  // ---- selftest
  bool selftest_json = false;
  auto* selftest = app.add_subcommand("selftest", "run the built-in example table");
  selftest->add_flag("--json", selftest_json, "machine-readable report");
  selftest->callback([&] { exit_code = run_selftest(common, selftest_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}
