#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests can drive it with in-memory streams.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zeromoments.hpp"

namespace zm::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kValidation = 2, kNumeric = 3 };

namespace detail {

/// Either --sigma or --family with -N.
struct Source {
  std::string sigma;
  std::string family;
  std::string alpha = "0";
  std::string beta = "0";
  unsigned degree = 0;
};

struct Result {
  Json payload;
  std::vector<std::string> flags;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

inline std::string decimal(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

inline std::vector<std::string> exact_row(const std::string& index, const Rational& q) {
  return {index, decimal(to_double(q)), "true", to_string(q)};
}

inline std::vector<std::string> float_row(const std::string& index, double x) {
  return {index, decimal(x), "false", ""};
}

inline void add_family_options(CLI::App* cmd, Source& src, bool required) {
  auto* fam = cmd->add_option("--family", src.family,
                              "jacobi, chebyshev-t, chebyshev-u, laguerre, hermite, scaled-laguerre, scaled-hermite");
  if (required) fam->required();
  cmd->add_option("--alpha", src.alpha, "alpha parameter (rational)");
  cmd->add_option("--beta", src.beta, "beta parameter (rational)");
}

inline void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("--sigma", src.sigma, "elementary symmetric functions sigma_0..sigma_N, comma separated");
  add_family_options(cmd, src, false);
  cmd->add_option("-N,--degree", src.degree, "polynomial degree for --family");
}

inline FamilySpec family_of(const Source& src) {
  if (src.family.empty()) fail(Errc::InvalidParameter, "--family is required");
  return parse_family(src.family, parse_rational(src.alpha), parse_rational(src.beta));
}

inline unsigned degree_of(const Source& src) {
  if (src.degree == 0) fail(Errc::InvalidDegree, "-N must be a positive integer");
  return src.degree;
}

inline MonicPolynomial polynomial_of(const Source& src) {
  if (!src.sigma.empty() && !src.family.empty()) fail(Errc::InvalidParameter, "give either --sigma or --family");
  if (!src.sigma.empty()) return MonicPolynomial::from_sigma(parse_rational_list(src.sigma));
  if (src.family.empty()) fail(Errc::InvalidParameter, "give --sigma or --family with -N");
  return classical_monic(family_of(src), degree_of(src));
}

inline Json exact_list(std::span<const Rational> values, const char* index_key = "r", int first_index = 0) {
  Json list = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    list.push_back({{index_key, first_index + static_cast<int>(i)}, {"value", to_string(values[i])}});
  }
  return list;
}

inline void exact_rows(Result& out, std::span<const Rational> values, const char* index_key = "r",
                       int first_index = 0) {
  out.csv_header = {index_key, "value", "exact", "rational"};
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.csv_rows.push_back(exact_row(std::to_string(first_index + static_cast<int>(i)), values[i]));
  }
}

inline MomentMethod parse_method(const std::string& name) {
  for (MomentMethod m : {MomentMethod::Girard, MomentMethod::NewtonRecurrence, MomentMethod::SeriesDivision,
                         MomentMethod::Case, MomentMethod::Oracle}) {
    if (method_name(m) == name) return m;
  }
  fail(Errc::InvalidParameter, "unknown method '" + name + "'");
}

inline std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  for (const auto& q : parse_rational_list(text)) out.push_back(to_double(q));
  return out;
}

struct Grid {
  double a = 0.0;
  double b = 0.0;
  std::size_t n = 0;
};

inline Grid parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) fail(Errc::InvalidParameter, "grid must be a:b:n");
  Grid g;
  g.a = to_double(parse_rational(text.substr(0, c1)));
  g.b = to_double(parse_rational(text.substr(c1 + 1, c2 - c1 - 1)));
  const Rational n = parse_rational(text.substr(c2 + 1));
  if (!is_integer(n) || n < 1 || n > 100000) fail(Errc::InvalidParameter, "grid point count must be in 1..100000");
  g.n = n.convert_to<std::size_t>();
  return g;
}

inline Json report_json(const ResidualReport& rep, Result& out) {
  Json j;
  j["family"] = rep.family.name();
  j["alpha"] = to_string(rep.family.alpha);
  j["beta"] = to_string(rep.family.beta);
  j["N"] = rep.degree;
  j["isZero"] = rep.is_zero;
  j["firstNonzeroIndex"] = rep.first_nonzero_index ? Json(*rep.first_nonzero_index) : Json(nullptr);
  if (const auto* series = std::get_if<ExactSeries>(&rep.residual)) {
    j["order"] = rep.order;
    j["residual"] = exact_list(series->coeffs());
    exact_rows(out, series->coeffs());
  } else {
    const auto& laurent = std::get<LaurentPolynomial>(rep.residual);
    j["minDegree"] = laurent.min_degree();
    j["residual"] = exact_list(laurent.coeffs(), "exponent", laurent.min_degree());
    exact_rows(out, laurent.coeffs(), "exponent", laurent.min_degree());
  }
  return j;
}

}  // namespace detail

/// Runs one CLI invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power sums of polynomial zeros from their coefficients", "zeromoments"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  detail::Source src;
  std::string method = "girard";
  unsigned max_r = 10;
  bool negative = false;
  std::size_t order = 0;
  bool use_limit = false;
  std::optional<double> at;
  bool verbatim = false;
  std::string grid;
  std::string eta_text = "1e-2,1e-3,1e-4,1e-5,1e-6";
  double t1 = 0.0;
  double t2 = 0.0;

  auto* moments = app.add_subcommand("moments", "normalized power sums m_r of the zeros");
  detail::add_source_options(moments, src);
  moments->add_option("--method", method, "girard | newton | series | case | oracle");
  moments->add_option("--max-r", max_r, "largest index r");
  moments->add_flag("--negative", negative, "negative powers m_{-r}");

  auto* genfun = app.add_subcommand("genfun", "moment generating function series");
  detail::add_source_options(genfun, src);
  genfun->add_option("--order", order, "series order K")->default_val(10);
  genfun->add_flag("--negative", negative, "series of negative moments");
  genfun->add_option("--at", at, "also evaluate the partial sum and the closed form at this z");
  genfun->add_flag("--verbatim-u", verbatim, "closed form: use the tanh variant of the Chebyshev-U entry");

  auto* verify = app.add_subcommand("verify", "exact differential-equation checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* riccati = verify->add_subcommand("riccati", "Riccati residual of the moment series");
  detail::add_family_options(riccati, src, true);
  riccati->add_option("-N,--degree", src.degree)->required();
  riccati->add_option("--order", order, "series order K")->default_val(12);
  riccati->add_flag("--limit", use_limit, "check the N -> infinity series instead");
  auto* lde = verify->add_subcommand("lde", "second-order equation for U = P(1/z)");
  detail::add_family_options(lde, src, true);
  lde->add_option("-N,--degree", src.degree)->required();
  auto* one_over_n = verify->add_subcommand("one-over-n", "limit series solves the T-row Riccati yet differs");
  one_over_n->add_option("-N,--degree", src.degree)->required();
  one_over_n->add_option("--order", order, "series order K (default max(12, 2N))");

  auto* limit = app.add_subcommand("limit", "N -> infinity moments and densities");
  limit->require_subcommand(1);
  limit->fallthrough();
  auto* limit_moments = limit->add_subcommand("moments", "limit moments");
  detail::add_family_options(limit_moments, src, true);
  limit_moments->add_option("--max-r", max_r, "largest index r");
  auto* limit_density = limit->add_subcommand("density", "limit density and its inversion on a grid");
  detail::add_family_options(limit_density, src, true);
  limit_density->add_option("--grid", grid, "a:b:n (default: the support, 101 points)");
  limit_density->add_option("--eta-schedule", eta_text, "decreasing eta values, comma separated");

  auto* invert = app.add_subcommand("invert", "zero-counting mass on (t1, t2) by Perron-Stieltjes inversion");
  detail::add_source_options(invert, src);
  invert->add_option("--t1", t1)->required();
  invert->add_option("--t2", t2)->required();
  invert->add_option("--eta-schedule", eta_text, "decreasing eta values, comma separated");
  invert->add_flag("--limit", use_limit, "invert the family's limit transform");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  if (selftest->parsed()) {
    bool all = true;
    for (const auto& r : acceptance::run_acceptance()) {
      all = all && r.passed;
      out << acceptance::format_line(r) << "\n";
    }
    return all ? kOk : kNumeric;
  }

  detail::Result result;
  std::string command;
  try {
    if (moments->parsed()) {
      command = "moments";
      const MomentMethod m = detail::parse_method(method);
      Json payload;
      if (m == MomentMethod::Case) {
        if (negative) fail(Errc::InvalidParameter, "the case method gives positive moments only");
        const FamilySpec fam = detail::family_of(src);
        const MomentSequence seq = case_moments(fam, detail::degree_of(src), max_r);
        payload["N"] = seq.degree;
        payload["direction"] = direction_name(seq.direction);
        payload["method"] = method_name(seq.method);
        payload["values"] = detail::exact_list(seq.values);
        payload["degenerateSteps"] = seq.degenerate_steps;
        detail::exact_rows(result, seq.values);
        for (std::size_t r : seq.degenerate_steps) {
          result.flags.push_back("degenerate-case-step: m_" + std::to_string(r) + " taken from the series route");
        }
      } else {
        const MonicPolynomial poly = detail::polynomial_of(src);
        payload["N"] = poly.degree();
        payload["direction"] = negative ? "negative" : "positive";
        payload["method"] = method_name(m);
        if (m == MomentMethod::Oracle) {
          const RootSet roots = roots_numeric(poly);
          Json list = Json::array();
          result.csv_header = {"r", "value", "exact", "rational"};
          for (unsigned r = 0; r <= max_r; ++r) {
            const double v = oracle_moment(roots, negative ? -static_cast<int>(r) : static_cast<int>(r));
            list.push_back({{"r", r}, {"value", v}, {"exact", false}});
            result.csv_rows.push_back(detail::float_row(std::to_string(r), v));
          }
          payload["values"] = list;
          payload["residualBound"] = roots.residual_bound;
          result.flags.push_back("float-oracle: values are not exact");
        } else {
          MomentSequence seq;
          if (negative) {
            if (m == MomentMethod::NewtonRecurrence) fail(Errc::InvalidParameter, "negative moments use girard or series");
            seq = negative_moments(poly, max_r, m);
          } else if (m == MomentMethod::Girard) {
            seq = girard_moments(poly, max_r);
          } else if (m == MomentMethod::NewtonRecurrence) {
            seq = newton_moments(poly, max_r);
          } else {
            seq = series_moments(poly, max_r);
          }
          payload["values"] = detail::exact_list(seq.values);
          detail::exact_rows(result, seq.values);
        }
      }
      result.payload = payload;
    } else if (genfun->parsed()) {
      command = "genfun";
      const MonicPolynomial poly = detail::polynomial_of(src);
      const ExactSeries g = negative ? negative_moment_series(poly, order) : moment_series(poly, order);
      Json payload;
      payload["series"] = negative ? "G_<" : "G";
      payload["N"] = poly.degree();
      payload["order"] = order;
      payload["coefficients"] = detail::exact_list(g.coeffs());
      detail::exact_rows(result, g.coeffs());
      if (at) {
        Json eval;
        eval["z"] = *at;
        eval["partialSum"] = partial_sum(to_float(g), *at);
        if (!negative && !src.family.empty()) {
          const FamilySpec fam = detail::family_of(src);
          eval["closedForm"] = closed_form_G(fam, poly.degree(), *at, !verbatim);
          if (verbatim && fam.kind == FamilyKind::ChebyshevU) {
            result.flags.push_back("erratum-mode: Chebyshev-U closed form uses the tanh variant");
          }
        }
        payload["evaluation"] = eval;
      }
      result.payload = payload;
    } else if (riccati->parsed()) {
      command = "verify riccati";
      const FamilySpec fam = detail::family_of(src);
      const unsigned n = detail::degree_of(src);
      const ExactSeries g = use_limit ? limit_G0_series(fam, order) : moment_series(classical_monic(fam, n), order);
      result.payload = detail::report_json(riccati_residual(fam, n, g), result);
      result.payload["series"] = use_limit ? "limit" : "finite";
    } else if (lde->parsed()) {
      command = "verify lde";
      const FamilySpec fam = detail::family_of(src);
      result.payload = detail::report_json(lde_check(fam, detail::degree_of(src)), result);
    } else if (one_over_n->parsed()) {
      command = "verify one-over-n";
      const unsigned n = detail::degree_of(src);
      const std::size_t k = order == 0 ? std::max<std::size_t>(12, 2 * n) : order;
      const OneOverNReport rep = one_over_N_failure(n, k);
      Json payload;
      payload["N"] = n;
      payload["order"] = k;
      payload["riccatiResidualZero"] = rep.riccati_residual_zero;
      payload["seriesMismatchIndex"] = rep.series_mismatch_index ? Json(*rep.series_mismatch_index) : Json(nullptr);
      payload["limitValue"] = to_string(rep.limit_value);
      payload["trueValue"] = to_string(rep.true_value);
      result.payload = payload;
      result.csv_header = {"field", "value"};
      result.csv_rows = {{"riccatiResidualZero", rep.riccati_residual_zero ? "true" : "false"},
                         {"seriesMismatchIndex",
                          rep.series_mismatch_index ? std::to_string(*rep.series_mismatch_index) : ""},
                         {"limitValue", to_string(rep.limit_value)},
                         {"trueValue", to_string(rep.true_value)}};
    } else if (limit_moments->parsed()) {
      command = "limit moments";
      const FamilySpec fam = detail::family_of(src);
      std::vector<Rational> values;
      for (unsigned r = 0; r <= max_r; ++r) values.push_back(limit_moment(fam, r));
      result.payload = {{"family", fam.name()}, {"values", detail::exact_list(values)}};
      detail::exact_rows(result, values);
    } else if (limit_density->parsed()) {
      command = "limit density";
      const FamilySpec fam = detail::family_of(src);
      detail::Grid g;
      if (grid.empty()) {
        const auto [lo, hi] = limit_support(fam);
        g = {lo, hi, 101};
      } else {
        g = detail::parse_grid(grid);
      }
      const std::vector<double> schedule = detail::parse_schedule(eta_text);
      const DensityTable table = limit_density_table(fam, g.a, g.b, g.n, schedule);
      Json rows = Json::array();
      result.csv_header = {"x", "density", "inverted"};
      for (std::size_t i = 0; i < table.grid.size(); ++i) {
        rows.push_back({{"x", table.grid[i]}, {"density", table.values[i]}, {"inverted", table.inverted[i]}});
        result.csv_rows.push_back(
            {detail::decimal(table.grid[i]), detail::decimal(table.values[i]), detail::decimal(table.inverted[i])});
      }
      result.payload = {{"family", fam.name()},
                        {"support", {table.support.first, table.support.second}},
                        {"table", rows}};
    } else if (invert->parsed()) {
      command = "invert";
      const std::vector<double> schedule = detail::parse_schedule(eta_text);
      DistributionIncrement inc;
      Json payload;
      if (use_limit) {
        const FamilySpec fam = detail::family_of(src);
        inc = perron_stieltjes_invert([&](ComplexPoint z) { return limit_stieltjes(fam, z); }, t1, t2, schedule);
        payload["transform"] = "limit";
      } else {
        const MonicPolynomial poly = detail::polynomial_of(src);
        inc = perron_stieltjes_invert([&](ComplexPoint z) { return stieltjes_chi(poly, z); }, t1, t2, schedule);
        payload["transform"] = "finite";
        payload["N"] = poly.degree();
      }
      payload["t1"] = inc.t1;
      payload["t2"] = inc.t2;
      payload["mass"] = inc.mass;
      Json samples = Json::array();
      result.csv_header = {"eta", "mass"};
      for (std::size_t i = 0; i < inc.eta.size(); ++i) {
        samples.push_back({{"eta", inc.eta[i]}, {"mass", inc.mass_at_eta[i]}});
        result.csv_rows.push_back({detail::decimal(inc.eta[i]), detail::decimal(inc.mass_at_eta[i])});
      }
      result.csv_rows.push_back({"0", detail::decimal(inc.mass)});
      payload["etaSamples"] = samples;
      result.payload = payload;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numeric_failure(e.code()) ? kNumeric : kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }

  std::ostringstream text;
  if (format == "json") {
    Json record;
    record["schemaVersion"] = kSchemaVersion;
    record["request"] = {{"command", command}, {"argv", args}};
    record["payload"] = result.payload;
    record["flags"] = result.flags;
    text << record.dump(2) << "\n";
  } else {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) text << (i ? "," : "") << cells[i];
      text << "\n";
    };
    line(result.csv_header);
    for (const auto& row : result.csv_rows) line(row);
    for (const auto& flag : result.flags) err << "warning: " << flag << "\n";
  }

  if (out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << text.str();
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kValidation;
    }
  }
  return kOk;
}

}  // namespace zm::cli
