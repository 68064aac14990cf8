#include "seclab/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seclab/conjectures.hpp"
#include "seclab/errors.hpp"
#include "seclab/poly_io.hpp"

namespace seclab {

namespace {

class PhaseTimer {
 public:
  PhaseTimer(const RunConfig& cfg, std::ostream& err, std::string phase)
      : on_(cfg.log), err_(err), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    if (!on_) return;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    err_ << "[seclab] phase=" << phase_ << " seconds=" << s << '\n';
  }

 private:
  bool on_;
  std::ostream& err_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

struct Input {
  Ideal ideal;
  std::optional<CurveRecipe> recipe;
  std::string label;
};

struct InputArgs {
  std::vector<std::string> recipe;
  std::string file;
};

void add_input_options(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--recipe", in.recipe, "named example: NAME or rnc N")->expected(1, 2);
  cmd->add_option("--input", in.file, "ideal file (plain text or JSON)");
}

CurveRecipe recipe_from_args(const std::vector<std::string>& r, const RunConfig& cfg) {
  int n = 0;
  if (r.size() == 2) {
    try {
      n = std::stoi(r[1]);
    } catch (const std::exception&) {
      throw InvalidArgument("recipe parameter '" + r[1] + "' is not an integer");
    }
  }
  return recipe_by_name(r[0], n, cfg.seed);
}

Input load_input(const InputArgs& a, const RunConfig& cfg, bool prime_given) {
  if (a.recipe.empty() == a.file.empty()) throw InvalidArgument("give exactly one of --recipe and --input");
  Input in;
  if (!a.recipe.empty()) {
    in.recipe = recipe_from_args(a.recipe, cfg);
    in.label = in.recipe->name();
    in.ideal = curve_ideal(*in.recipe, cfg.prime);
    return in;
  }
  std::ifstream f(a.file);
  if (!f) throw InvalidArgument("cannot read '" + a.file + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  PolynomialList list = first != std::string::npos && text[first] == '{'
                            ? ideal_from_json(nlohmann::json::parse(text))
                            : read_ideal_text(text);
  if (prime_given && list.ring->prime() != cfg.prime) {
    throw InvalidArgument("--prime differs from the prime in '" + a.file + "'");
  }
  in.ideal = Ideal(list.ring, std::move(list.polys));
  in.label = a.file;
  return in;
}

GroebnerOptions gb_options(const RunConfig& cfg) {
  GroebnerOptions o;
  if (cfg.max_degree) o.max_degree = *cfg.max_degree;
  return o;
}

BettiOptions betti_options(const RunConfig& cfg) {
  BettiOptions o;
  o.row_bound = cfg.rows;
  o.col_bound = cfg.cols;
  o.groebner = gb_options(cfg);
  return o;
}

MonomialOrder print_order(const RunConfig& cfg, const RingSpec& ring) {
  if (cfg.order == "grevlex") return MonomialOrder::grevlex(ring);
  if (cfg.order == "lex") return MonomialOrder::lex(ring);
  throw InvalidArgument("unknown order '" + cfg.order + "' (grevlex or lex)");
}

// Reduced Groebner basis in the print order.
std::vector<Polynomial> basis(const Ideal& I, const RunConfig& cfg) {
  if (I.is_zero()) return {};
  return groebner_basis(I, print_order(cfg, *I.ring()), gb_options(cfg));
}

void print_ideal(std::ostream& out, const RunConfig& cfg, const Ring& ring, std::span<const Polynomial> gens) {
  if (cfg.format == "json") {
    out << ideal_to_json(ring, gens).dump(2) << '\n';
  } else {
    out << write_ideal_text(ring, gens);
  }
}

void print_comment(std::ostream& out, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out << "# " << line << '\n';
}

nlohmann::json certification_json(const CertificationReport& r) {
  nlohmann::json j{{"dim", r.dim},
                   {"degree", r.degree},
                   {"projective_dimension", r.projective_dimension},
                   {"codimension", r.codimension},
                   {"acm", r.acm},
                   {"certified", r.certified}};
  j["expected_dim"] = r.expected_dim ? nlohmann::json(*r.expected_dim) : nlohmann::json();
  j["expected_degree"] = r.expected_degree ? nlohmann::json(*r.expected_degree) : nlohmann::json();
  return j;
}

PointCoords parse_point(const std::string& s, std::uint32_t prime) {
  PointCoords p;
  PrimeField F(prime);
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      p.push_back(F.from_int(v));
    } catch (const std::exception&) {
      throw InvalidArgument("bad point coordinate '" + tok + "'");
    }
  }
  if (p.empty()) throw InvalidArgument("empty point");
  return p;
}

std::string fmt_point(const PointCoords& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + std::to_string(p[i]);
  return s + "]";
}

// ---- secant ----------------------------------------------------------------

struct SecantArgs {
  InputArgs in;
  int k = 1;
  std::string via = "elimination";
  std::string variant = "ruled-join";
};

int cmd_secant(const SecantArgs& a, const RunConfig& cfg, bool prime_given, std::ostream& out, std::ostream& err) {
  Input in = load_input(a.in, cfg, prime_given);
  if (a.k < 1) throw InvalidArgument("--k must be at least 1");
  nlohmann::json j{{"command", "secant"}, {"input", in.label}, {"k", a.k}, {"via", a.via}};

  if (a.via == "elimination") {
    Ideal S;
    {
      PhaseTimer t(cfg, err, "secant-elimination");
      S = a.variant == "both" ? secant_ideal_checked(in.ideal, a.k, gb_options(cfg))
                              : secant_ideal_elimination(in.ideal, a.k, parse_join_variant(a.variant), gb_options(cfg));
    }
    auto gens = basis(S, cfg);
    std::string note = gens.empty() ? "Σ = ambient space" : "";
    if (cfg.format == "json") {
      j["variant"] = a.variant;
      j["ideal"] = ideal_to_json(S.ring(), gens);
      j["note"] = note;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "# secant k=" << a.k << " via=elimination variant=" << a.variant << " input=" << in.label << '\n';
    if (!note.empty()) out << "# " << note << '\n';
    print_ideal(out, cfg, S.ring(), gens);
    return kExitOk;
  }
  if (a.via != "prolongation") throw InvalidArgument("--via must be elimination or prolongation");

  FormSpace P(in.ideal.ring(), a.k + 2);
  {
    PhaseTimer t(cfg, err, "prolongation");
    P = secant_degree_piece(in.ideal, a.k);
  }
  std::vector<Polynomial> gens = P.polys();
  if (P.empty()) {
    std::string note = "no forms of degree " + std::to_string(a.k + 2) + " vanish on Σ_" + std::to_string(a.k);
    if (cfg.format == "json") {
      j["ideal"] = ideal_to_json(P.ring(), gens);
      j["note"] = note;
      out << j.dump(2) << '\n';
    } else {
      out << "# secant k=" << a.k << " via=prolongation input=" << in.label << "\n# " << note << '\n';
      print_ideal(out, cfg, P.ring(), gens);
    }
    return kExitOk;
  }
  std::optional<int> exp_dim;
  std::optional<std::int64_t> exp_deg;
  if (in.recipe && in.recipe->kind != RecipeKind::PointSet) {
    exp_dim = 2 * a.k + 1;
    exp_deg = expected_secant_degree(in.recipe->genus(), in.recipe->degree(), a.k);
  }
  CertificationReport c;
  {
    PhaseTimer t(cfg, err, "certification");
    c = certify_generation(P, exp_dim, exp_deg, betti_options(cfg));
  }
  if (cfg.format == "json") {
    j["ideal"] = ideal_to_json(P.ring(), gens);
    j["certification"] = certification_json(c);
    out << j.dump(2) << '\n';
  } else {
    out << "# secant k=" << a.k << " via=prolongation input=" << in.label << '\n';
    out << "# " << gens.size() << " forms of degree " << a.k + 2 << '\n';
    print_comment(out, format_certification(c));
    print_ideal(out, cfg, P.ring(), gens);
  }
  return c.certified ? kExitOk : kExitCertification;
}

// ---- betti -----------------------------------------------------------------

struct BettiArgs {
  InputArgs in;
  std::optional<int> secant;
  std::optional<std::size_t> max_cells;
  bool regularity = false;
};

int cmd_betti(const BettiArgs& a, const RunConfig& cfg, bool prime_given, std::ostream& out, std::ostream& err) {
  Input in = load_input(a.in, cfg, prime_given);
  Ideal I = in.ideal;
  if (a.secant) {
    if (*a.secant < 1) throw InvalidArgument("--secant must be at least 1");
    PhaseTimer t(cfg, err, "prolongation");
    FormSpace P = secant_degree_piece(in.ideal, *a.secant);
    if (P.empty()) {
      throw DegenerateInput("Σ_" + std::to_string(*a.secant) + " has no equations of degree " +
                            std::to_string(*a.secant + 2));
    }
    I = Ideal(P.ring(), P.polys());
  }
  BettiOptions o = betti_options(cfg);
  if (a.max_cells) o.max_matrix_cells = *a.max_cells;
  BettiTable T;
  {
    PhaseTimer t(cfg, err, "betti");
    T = betti_table(I, o);
  }
  std::optional<RegularityReport> reg;
  if (a.regularity && T.complete) reg = regularity_report(T, I);

  if (cfg.format == "json") {
    nlohmann::json j = betti_to_json(T);
    if (reg) {
      j["regularity"] = {{"reg_module", reg->reg_module},
                         {"reg_ideal", reg->reg_ideal},
                         {"projective_dimension", reg->projective_dimension},
                         {"codimension", reg->codimension},
                         {"acm", reg->acm}};
    }
    out << j.dump(2) << '\n';
  } else {
    out << format_betti_text(T);
    if (reg) {
      out << "# reg(S/I) " << reg->reg_module << "\n# reg(I) " << reg->reg_ideal << "\n# projective-dimension "
          << reg->projective_dimension << "\n# codimension " << reg->codimension << "\n# acm "
          << (reg->acm ? "yes" : "no") << '\n';
    }
    if (!T.complete) {
      out << "# incomplete table";
      if (!T.note.empty()) out << ": " << T.note;
      out << '\n';
      for (const auto& [i, jj] : T.frontier) out << "# not computed beta_{" << i << "," << jj << "}\n";
    }
  }
  return T.complete ? kExitOk : kExitResource;
}

// ---- blowup ----------------------------------------------------------------

struct BlowupArgs {
  InputArgs in;
  std::string point;
  std::optional<int> chart;
  bool secant = false;
  bool projection_check = false;
};

int cmd_blowup(const BlowupArgs& a, const RunConfig& cfg, bool prime_given, std::ostream& out, std::ostream& err) {
  Input in = load_input(a.in, cfg, prime_given);
  BlowupPresentation B;
  {
    PhaseTimer t(cfg, err, "blowup");
    B = blowup_ideal(in.ideal, in.ideal.generators());
  }
  out << "# blowup input=" << in.label << '\n';
  print_ideal(out, cfg, B.ideal.ring(), B.ideal.generators());
  return kExitOk;
}

int cmd_blowup_fiber(const BlowupArgs& a, const RunConfig& cfg, bool prime_given, std::ostream& out,
                     std::ostream& err) {
  Input in = load_input(a.in, cfg, prime_given);
  PointCoords p = parse_point(a.point, in.ideal.ring()->prime());
  if (static_cast<int>(p.size()) != in.ideal.ring()->nvars()) throw InvalidArgument("point has the wrong number of coordinates");
  if (a.chart && (*a.chart < 0 || *a.chart >= static_cast<int>(p.size()) || p[*a.chart] == 0)) {
    throw InvalidArgument("chart variable must be a nonzero coordinate of the point");
  }
  BlowupPresentation B;
  {
    PhaseTimer t(cfg, err, "blowup");
    B = blowup_ideal(in.ideal, in.ideal.generators());
  }
  Ideal F;
  Ideal Sigma;
  if (a.secant || a.projection_check) {
    if (!a.chart) throw InvalidArgument("--secant and --projection-check need --chart");
    PhaseTimer t(cfg, err, "secant-elimination");
    Sigma = secant_ideal_elimination(in.ideal, 1, JoinVariant::RuledJoin, gb_options(cfg));
  }
  {
    PhaseTimer t(cfg, err, "fiber");
    F = a.secant ? restrict_secant_to_fiber(B, Sigma.generators(), p, *a.chart) : fiber_over_point(B, p, a.chart);
  }
  auto gens = basis(F, cfg);
  std::optional<ProjectionCheck> pc;
  if (a.projection_check) {
    PhaseTimer t(cfg, err, "projection-check");
    pc = secant_fiber_projection_check(in.ideal, Sigma.generators(), p, *a.chart);
  }
  if (cfg.format == "json") {
    nlohmann::json j{{"command", "blowup-fiber"}, {"input", in.label}, {"point", p}, {"secant", a.secant}};
    j["chart"] = a.chart ? nlohmann::json(*a.chart) : nlohmann::json();
    j["ideal"] = ideal_to_json(F.ring(), gens);
    if (pc) j["projection_check"] = pc->ok();
    out << j.dump(2) << '\n';
  } else {
    out << "# fiber input=" << in.label << " point=" << fmt_point(p);
    if (a.chart) out << " chart=x_" << *a.chart;
    if (a.secant) out << " secant";
    out << '\n';
    if (pc) out << "# projection-check " << (pc->ok() ? "ok" : "FAILED") << '\n';
    print_ideal(out, cfg, F.ring(), gens);
  }
  return pc && !pc->ok() ? kExitCertification : kExitOk;
}

// ---- examples --------------------------------------------------------------

int default_kmax(const CurveRecipe& r) {
  switch (r.kind) {
    case RecipeKind::NodalQuintic: return 1;
    case RecipeKind::HyperellipticDeterminantal:
    case RecipeKind::VeronesePlaneQuartic: return 2;
    case RecipeKind::RationalNormal: return std::max(0, (r.n - 2) / 2);
    case RecipeKind::PointSet: return 2;
  }
  return 1;
}

int run_curve_example(const CurveRecipe& r, std::optional<int> kmax, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  Ideal X;
  {
    PhaseTimer t(cfg, err, "curve");
    X = curve_ideal(r, cfg.prime);
  }
  out << "# example " << r.name() << " genus " << r.genus() << " degree " << r.degree() << '\n';
  print_ideal(out, cfg, X.ring(), X.generators());
  const int top = kmax.value_or(default_kmax(r));
  for (int k = 0; k <= top; ++k) {
    SecantConjectureReport rep;
    {
      PhaseTimer t(cfg, err, "sigma-" + std::to_string(k));
      rep = check_secant_conjectures(X, r.genus(), r.degree(), k, betti_options(cfg));
    }
    out << "# Sigma_" << k << '\n';
    print_comment(out, format_conjecture_report(rep));
    out << format_betti_text(rep.certification.betti);
  }
  return kExitOk;
}

int run_points_example(const CurveRecipe& r, std::optional<int> kmax, const RunConfig& cfg, std::ostream& out,
                       std::ostream& err) {
  Ideal X = curve_ideal(r, cfg.prime);
  out << "# example " << r.name() << ": " << r.points.size() << " points in P^" << r.ambient << '\n';
  print_ideal(out, cfg, X.ring(), X.generators());
  const int top = std::min(kmax.value_or(default_kmax(r)), static_cast<int>(r.points.size()) - 1);
  for (int k = 1; k <= top; ++k) {
    Ideal S;
    {
      PhaseTimer t(cfg, err, "sigma-" + std::to_string(k));
      S = secant_ideal_checked(X, k, gb_options(cfg));
    }
    out << "# Sigma_" << k << '\n';
    auto gens = basis(S, cfg);
    if (gens.empty()) {
      out << "# Σ = ambient space\n";
    } else {
      HilbertData h = hilbert_data(S, 0);
      out << "# dim " << h.projective_dim() << " degree " << h.degree << '\n';
    }
    print_ideal(out, cfg, S.ring(), gens);
  }
  return kExitOk;
}

bool same(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

int run_blowup_twisted_cubic(const RunConfig& cfg, std::ostream& out) {
  Ideal X = curve_ideal(recipe_by_name("twisted-cubic"), cfg.prime);
  BlowupPresentation B = blowup_ideal(X, X.generators());
  const Ring& R = B.ideal.ring();
  out << "# example blowup-twisted-cubic\n";
  print_ideal(out, cfg, R, B.ideal.generators());
  Ideal F = fiber_over_point(B, {0, 0, 0, 1}, std::nullopt);
  out << "# fiber over [0:0:0:1]\n";
  print_ideal(out, cfg, R, basis(F, cfg));
  Ideal parts[] = {make_ideal(R, {"x_0", "x_1", "x_2", "x_3"}), make_ideal(R, {"x_0", "x_1", "x_2", "y_0"})};
  bool dec = same(F, intersect_ideals(parts));
  out << "# decomposition <x_0,x_1,x_2,x_3> cap <x_0,x_1,x_2,y_0> " << (dec ? "ok" : "FAILED") << '\n';
  Ideal over = B.ideal + make_ideal(R, {"y_1", "y_2"});
  bool line = same(over, make_ideal(R, {"y_1", "y_2", "x_2*y_0", "x_3*y_0"}));
  out << "# over [1:0:0]: y_0<x_2,x_3> " << (line ? "ok" : "FAILED") << '\n';
  return dec && line ? kExitOk : kExitCertification;
}

int run_blowup_rnc4(const RunConfig& cfg, std::ostream& out) {
  Ideal X = curve_ideal(recipe_by_name("rnc", 4), cfg.prime);
  BlowupPresentation B = blowup_ideal(X, X.generators());
  out << "# example blowup-rnc4\n";
  print_ideal(out, cfg, B.ideal.ring(), B.ideal.generators());
  Ideal c1 = fiber_over_point(B, {0, 1, 0, 0, 0}, 1);
  out << "# case 1: fiber over [0:1:0:0:0], chart x_1\n";
  print_ideal(out, cfg, c1.ring(), basis(c1, cfg));
  Ideal c2 = fiber_over_point(B, {1, 0, 0, 0, 0}, 0);
  out << "# case 2: fiber over [1:0:0:0:0], chart x_0\n";
  print_ideal(out, cfg, c2.ring(), basis(c2, cfg));
  Ideal S = secant_ideal_elimination(X, 1, JoinVariant::RuledJoin, gb_options(cfg));
  Ideal T = restrict_secant_to_fiber(B, S.generators(), {1, 0, 0, 0, 0}, 0);
  out << "# secant strict transform over [1:0:0:0:0], chart x_0\n";
  print_ideal(out, cfg, T.ring(), basis(T, cfg));
  ProjectionCheck pc = secant_fiber_projection_check(X, S.generators(), {1, 0, 0, 0, 0}, 0);
  out << "# projection from the tangent line " << (pc.ok() ? "ok" : "FAILED") << '\n';
  return pc.ok() ? kExitOk : kExitCertification;
}

struct ExamplesArgs {
  std::vector<std::string> name;
  std::optional<int> kmax;
};

int cmd_examples_run(const ExamplesArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != "text") throw InvalidArgument("examples run prints text only");
  const std::string& name = a.name.at(0);
  if (name == "blowup-twisted-cubic") return run_blowup_twisted_cubic(cfg, out);
  if (name == "blowup-rnc4") return run_blowup_rnc4(cfg, out);
  CurveRecipe r = recipe_from_args(a.name, cfg);
  if (r.kind == RecipeKind::PointSet) return run_points_example(r, a.kmax, cfg, out, err);
  return run_curve_example(r, a.kmax, cfg, out, err);
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";
  CLI::Option* prime_opt = app.add_option("--prime", cfg.prime, "field characteristic")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed of randomized recipe steps")->capture_default_str();
  app.add_option("--order", cfg.order, "order of printed Groebner bases")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--max-degree", cfg.max_degree, "Groebner pair degree cap")->check(CLI::PositiveNumber);
  app.add_option("--rows", cfg.rows, "highest Betti row")->check(CLI::NonNegativeNumber);
  app.add_option("--cols", cfg.cols, "highest Betti column")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "OpenMP threads")->check(CLI::NonNegativeNumber);
  app.add_flag("--log", cfg.log, "phase timings on stderr");
  app.require_subcommand(1);
  app.fallthrough();

  SecantArgs sa;
  auto* sec = app.add_subcommand("secant", "secant ideal I(Sigma_k)");
  add_input_options(sec, sa.in);
  sec->add_option("--k", sa.k, "secant index")->required();
  sec->add_option("--via", sa.via, "elimination or prolongation")
      ->check(CLI::IsMember({"elimination", "prolongation"}));
  sec->add_option("--variant", sa.variant, "ruled-join, with-x-block or both")
      ->check(CLI::IsMember({"ruled-join", "ruled-join-coordinate-change", "with-x-block", "both"}));

  BettiArgs ba;
  auto* bet = app.add_subcommand("betti", "graded Betti table of S/I");
  add_input_options(bet, ba.in);
  bet->add_option("--secant", ba.secant, "use I(Sigma_k) from prolongation instead");
  bet->add_option("--max-cells", ba.max_cells, "skip Koszul matrices larger than this");
  bet->add_flag("--regularity", ba.regularity, "append the regularity report");

  BlowupArgs bl;
  auto* blow = app.add_subcommand("blowup", "blowup ideal along the curve");
  add_input_options(blow, bl.in);

  BlowupArgs bf;
  auto* fib = app.add_subcommand("blowup-fiber", "fiber of the blowup over a point");
  add_input_options(fib, bf.in);
  fib->add_option("--point", bf.point, "comma-separated coordinates")->required();
  fib->add_option("--chart", bf.chart, "dehomogenize at this x variable");
  fib->add_flag("--secant", bf.secant, "strict transform of Sigma_1 instead");
  fib->add_flag("--projection-check", bf.projection_check, "compare with the projection from the tangent line");

  ExamplesArgs ea;
  auto* ex = app.add_subcommand("examples", "named examples");
  ex->require_subcommand(1);
  auto* list = ex->add_subcommand("list", "list example names");
  auto* run = ex->add_subcommand("run", "run an example");
  run->add_option("name", ea.name, "example name (and N for rnc)")->required()->expected(1, 2);
  run->add_option("--k-max", ea.kmax, "highest secant index")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (cfg.prime < 2 || !is_prime(cfg.prime) || cfg.prime >= (1u << 31)) {
    err << "error: --prime must be a prime below 2^31\n";
    return kExitUsage;
  }
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
  const bool prime_given = prime_opt->count() > 0;

  if (sec->parsed()) return cmd_secant(sa, cfg, prime_given, out, err);
  if (bet->parsed()) return cmd_betti(ba, cfg, prime_given, out, err);
  if (blow->parsed()) return cmd_blowup(bl, cfg, prime_given, out, err);
  if (fib->parsed()) return cmd_blowup_fiber(bf, cfg, prime_given, out, err);
  if (list->parsed()) {
    for (const auto& n : recipe_names()) out << n << (n == "rnc" ? " N" : "") << '\n';
    out << "blowup-twisted-cubic\nblowup-rnc4\n";
    return kExitOk;
  }
  if (run->parsed()) return cmd_examples_run(ea, cfg, out, err);
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant varieties, prolongation and Betti tables over GF(p)", "seclab"};
  try {
    return dispatch(app, args, out, err);
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const CertificationFailure& e) {
    err << "certification failed: " << e.what() << '\n';
    return kExitCertification;
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace seclab
