#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eigenkit/cech/cech.hpp"
#include "eigenkit/error.hpp"
#include "eigenkit/laind/bgg.hpp"
#include "eigenkit/laind/compact.hpp"
#include "eigenkit/spectral/factor.hpp"
#include "eigenkit/spectral/family.hpp"

namespace eigenkit::cli {

namespace {

using padic::PadicContext;
using padic::PadicScalar;
using padic::Rational;

std::vector<long long> parse_ints(const std::string& s, const char* what) {
  std::vector<long long> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      fail(Errc::InvalidArgument, std::string("cannot parse ") + what + " '" + s + "'");
    }
  }
  if (v.empty()) fail(Errc::InvalidArgument, std::string("empty ") + what);
  return v;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto num = parse_ints(s.substr(0, slash), "slope");
  long long den = 1;
  if (slash != std::string::npos) den = parse_ints(s.substr(slash + 1), "slope").front();
  if (num.size() != 1 || den <= 0) fail(Errc::InvalidArgument, "cannot parse slope '" + s + "'");
  return Rational(num.front(), den);
}

spectral::BoundarySide parse_side(const std::string& s) {
  if (s == "none") return spectral::BoundarySide::None;
  if (s == "below") return spectral::BoundarySide::Below;
  if (s == "above") return spectral::BoundarySide::Above;
  fail(Errc::InvalidArgument, "side must be none, below or above");
}

weight::Character dominant_weight(const PadicContext& ctx, const RunConfig& cfg) {
  auto k = parse_ints(cfg.weight, "weight");
  if (static_cast<int>(k.size()) != cfg.g) fail(Errc::InvalidArgument, "weight length must equal g");
  auto kappa = weight::Character::algebraic_weight(ctx, k);
  if (!kappa.is_dominant()) fail(Errc::InvalidArgument, "weight is not dominant");
  return kappa;
}

CommandResult cmd_bgg(const PadicContext& ctx, const RunConfig& cfg) {
  auto kappa = dominant_weight(ctx, cfg);
  auto rep = laind::bgg_check(kappa, cfg.deg);
  Json slopes = Json::array();
  for (const auto& s : rep.slopes) slopes.push_back(rational_string(s));
  Json comm = Json::array();
  for (const auto& r : laind::commutation_residuals(kappa, cfg.deg)) {
    comm.push_back(Json{{"i", r.i}, {"vanishes", r.vanishes}, {"precision", std::min(r.precision, ctx.m())},
                        {"nonzero", r.nonzero}});
  }
  Json payload{{"weight", *kappa.algebraic()},
               {"D", cfg.deg},
               {"kernel_dim", rep.kernel_dim},
               {"expected_dim", rep.expected_dim},
               {"next_kernel_dim", rep.next_kernel_dim},
               {"slopes", slopes},
               {"composition_zero", rep.composition_zero},
               {"verdict", rep.verdict},
               {"precision_margin", std::min(rep.precision_margin, ctx.m())},
               {"commutation", comm}};
  return {payload, Json{{"precision", ctx.m()}, {"precision_margin", std::min(rep.precision_margin, ctx.m())}}};
}

std::size_t truncation(const RunConfig& cfg, const spectral::CompactOperatorModel& U) {
  return cfg.N < 0 ? U.size() : static_cast<std::size_t>(cfg.N);
}

CommandResult cmd_slopes(const PadicContext& ctx, const RunConfig& cfg) {
  auto U = laind::compact_u_matrix(ctx, cfg.g, cfg.deg);
  const std::size_t N = truncation(cfg, U);
  auto P = spectral::fredholm_series(U, N);
  auto np = spectral::newton_slopes(P);
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < P.coeffs.size(); ++n) coeffs.push_back(to_json(P.coeffs[n], P.certified[n]));
  Json payload{{"g", cfg.g},
               {"D", cfg.deg},
               {"N", N},
               {"size", U.size()},
               {"coeffs", coeffs},
               {"certified", P.certified},
               {"certified_prefix", P.certified_prefix},
               {"slope_prefix", P.slope_prefix},
               {"exact", P.exact},
               {"newton_polygon", to_json(np)}};
  return {payload, Json{{"precision", ctx.m()}, {"certified_prefix", P.certified_prefix},
                        {"slope_prefix", P.slope_prefix}}};
}

CommandResult cmd_factor(const PadicContext& ctx, const RunConfig& cfg) {
  const int work_m = ctx.m() + spectral::guard_budget(ctx, 20);
  auto work = ctx.with_precision(work_m);
  auto U = laind::compact_u_matrix(work, cfg.g, cfg.deg);
  const std::size_t N = truncation(cfg, U);
  auto P = spectral::fredholm_series(U, N);
  auto f = spectral::slope_factor(P, parse_rational(cfg.h), parse_side(cfg.side));
  const int m = ctx.m();
  auto q_poly = padic::newton_polygon(f.Q.coeffs());
  Json payload{{"g", cfg.g},
               {"D", cfg.deg},
               {"N", N},
               {"h", rational_string(f.h)},
               {"side", cfg.side},
               {"degree", f.degree()},
               {"Q", to_json(f.Q, m)},
               {"Q_newton_polygon", to_json(q_poly)},
               {"R_prefix", to_json(f.R, m)},
               {"prefix", f.prefix},
               {"bezout_precision", std::min(f.bezout_precision, m)},
               {"product_precision", std::min(f.product_precision, m)}};
  return {payload, Json{{"precision", m},
                        {"work_precision", work_m},
                        {"bezout_precision", std::min(f.bezout_precision, m)},
                        {"product_precision", std::min(f.product_precision, m)}}};
}

CommandResult cmd_family(const PadicContext& ctx, const RunConfig& cfg) {
  const std::vector<std::string> names{"S"};
  auto S = padic::TruncatedSeries::variable(ctx, names, cfg.family_deg, 0);
  auto one = S.one_like();
  auto p = PadicScalar::from_int(ctx, ctx.p());
  spectral::SeriesMatrix M(2, 2, S.zero_like());
  M(0, 0) = one + S;
  M(0, 1) = one;
  M(1, 1) = p * one;
  spectral::FamilyOperatorModel F(M, padic::kInfiniteValuation);
  auto lambda0 = cfg.lambda == 0 ? p : PadicScalar::from_int(ctx, cfg.lambda);
  spectral::LiftOptions opts;
  opts.normalize_index = 1;
  auto L = spectral::eigen_family_lift(F, {PadicScalar::zero(ctx)}, lambda0, opts);
  Json vec = Json::array();
  for (const auto& x : L.vector) vec.push_back(to_json(x, ctx.m()));
  Json payload{{"operator", "[[1+S,1],[0,p]]"},
               {"degree", cfg.family_deg},
               {"lambda0", to_json(lambda0, ctx.m())},
               {"normalize_index", L.normalize_index},
               {"eigenvalue", to_json(L.eigenvalue, ctx.m())},
               {"vector", vec},
               {"iterations", L.iterations},
               {"residual_precision", std::min(L.residual_precision, ctx.m())}};
  return {payload, Json{{"precision", ctx.m()}, {"residual_precision", std::min(L.residual_precision, ctx.m())}}};
}

CommandResult cmd_cech(const PadicContext& ctx, const RunConfig& cfg) {
  cech::AffinoidModel A(ctx, cfg.deg_a);
  auto M = spectral::BanachModuleModel::orthonormalizable(ctx, spectral::BaseRing::tate({"x"}, cfg.deg_a),
                                                          static_cast<std::size_t>(cfg.rank));
  auto rep = cech::cech_check(M, A);
  auto glue = cech::kiehl_glue(A, cech::identity_transition(ctx, static_cast<std::size_t>(cfg.rank)));
  Json payload{{"rank", cfg.rank},
               {"D_A", cfg.deg_a},
               {"injective", rep.injective},
               {"middle_exact", rep.middle_exact},
               {"middle_defect", rep.middle_defect},
               {"rounds", rep.rounds},
               {"epsilon_valuation", rep.epsilon_valuation},
               {"epsilon", rep.epsilon},
               {"recovered_rank", rep.recovered_rank},
               {"glue", Json{{"rank", glue.rank}, {"fibre_ranks", glue.fibre_ranks}, {"round_trip", glue.round_trip}}}};
  return {payload, Json{{"precision", ctx.m()}, {"middle_defect", rep.middle_defect}}};
}

CommandResult cmd_weights(const PadicContext& ctx, const RunConfig& cfg) {
  auto k = parse_ints(cfg.weight, "weight");
  if (static_cast<int>(k.size()) != cfg.g) fail(Errc::InvalidArgument, "weight length must equal g");
  auto kappa = weight::Character::algebraic_weight(ctx, k);
  auto ts = parse_ints(cfg.t, "torus point");
  if (ts.size() != k.size()) fail(Errc::InvalidArgument, "torus point length must equal g");
  std::vector<PadicScalar> t;
  for (auto x : ts) t.push_back(PadicScalar::from_int(ctx, x));
  auto value = weight::eval_character(kappa, t);
  Json payload{{"character", to_json(kappa, ctx.m())},
               {"dominant", kappa.is_dominant()},
               {"t", ts},
               {"value", to_json(value, ctx.m())},
               {"analyticity_radius", rational_string(weight::analyticity_radius(kappa))}};
  return {payload, Json{{"precision", ctx.m()}}};
}

}  // namespace

Json RunConfig::echo() const {
  return Json{{"p", p},           {"e", e},           {"prec", prec},     {"g", g},
              {"deg", deg},       {"deg_a", deg_a},   {"N", N},           {"h", h},
              {"side", side},     {"weight", weight}, {"t", t},           {"rank", rank},
              {"family_deg", family_deg}, {"lambda", lambda}};
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.prec <= 0 || cfg.g <= 0 || cfg.deg < 0 || cfg.deg_a < 0 || cfg.rank <= 0 || cfg.family_deg < 0) {
    fail(Errc::InvalidArgument, "bounds must be positive");
  }
  PadicContext ctx(cfg.p, cfg.e, cfg.prec);
  if (cfg.command == "bgg") return cmd_bgg(ctx, cfg);
  if (cfg.command == "slopes") return cmd_slopes(ctx, cfg);
  if (cfg.command == "factor") return cmd_factor(ctx, cfg);
  if (cfg.command == "family") return cmd_family(ctx, cfg);
  if (cfg.command == "cech") return cmd_cech(ctx, cfg);
  if (cfg.command == "weights") return cmd_weights(ctx, cfg);
  fail(Errc::InvalidArgument, "unknown command '" + cfg.command + "'");
}

Json envelope(const RunConfig& cfg, const CommandResult& r) {
  return Json{{"command", cfg.command}, {"config", cfg.echo()}, {"payload", r.payload}, {"certificates", r.certificates}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"eigenkit: p-adic spectral computations"};
  app.set_help_flag("--help", "print help");
  app.set_config("--config", "", "INI-style configuration file");
  app.option_defaults()->always_capture_default();
  app.add_option("--p", cfg.p, "prime");
  app.add_option("--e", cfg.e, "ramification index");
  app.add_option("--prec", cfg.prec, "precision cap in uniformizer digits");
  app.add_option("--g", cfg.g, "genus");
  app.add_option("--deg", cfg.deg, "truncation degree D");
  app.add_option("--weight", cfg.weight, "comma separated algebraic weight");
  app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out-file", cfg.out_file, "write output here instead of stdout");
  app.allow_config_extras(CLI::config_extras_mode::error);
  auto sub = [&](const char* name, const char* about) {
    auto* s = app.add_subcommand(name, about);
    s->fallthrough();
    s->set_help_flag("--help", "print help");
    return s;
  };
  sub("bgg", "BGG kernel and commutation residuals");
  sub("slopes", "Fredholm series and Newton slopes of the compact U model")
      ->add_option("--N", cfg.N, "Fredholm truncation (-1: all columns)");
  auto* factor = sub("factor", "slope factorization P = Q R");
  factor->add_option("--N", cfg.N, "Fredholm truncation (-1: all columns)");
  factor->add_option("--h", cfg.h, "slope cut, e.g. 2 or 5/2");
  factor->add_option("--side", cfg.side, "boundary segments go below or above h")
      ->check(CLI::IsMember({"none", "below", "above"}));
  auto* family = sub("family", "eigenvector lift over a one-variable weight disc");
  family->add_option("--family-deg", cfg.family_deg, "degree of the family base");
  family->add_option("--lambda", cfg.lambda, "eigenvalue at the base point (0: p)");
  auto* cech = sub("cech", "Cech complex check on the Laurent cover");
  cech->add_option("--deg-a", cfg.deg_a, "affinoid truncation degree D_A");
  cech->add_option("--rank", cfg.rank, "rank of C(I)");
  sub("weights", "character evaluation at a torus point")->add_option("--t", cfg.t, "comma separated torus point");
  app.require_subcommand(1);

  std::vector<const char*> argv{"eigenkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    auto result = run_command(cfg);
    auto env = envelope(cfg, result);
    auto claimed = max_claimed_precision(env["payload"]);
    if (claimed && *claimed > cfg.prec) {
      err << "error: payload claims " << *claimed << " digits at precision " << cfg.prec << "\n";
      return kInternal;
    }
    std::string text = cfg.out == "csv" ? to_csv(env["payload"]) : env.dump(2) + "\n";
    if (cfg.out_file.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out_file, std::ios::binary);
      if (!f) {
        err << "error: cannot open " << cfg.out_file << "\n";
        return kValidation;
      }
      f << text;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = is_precision_error(e.code()) ? kPrecision : kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    code = kInternal;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << "wall_time_ms " << ms << "\n";
  return code;
}

}  // namespace eigenkit::cli
