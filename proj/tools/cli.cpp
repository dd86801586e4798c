#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "lexp/admissibility.hpp"
#include "lexp/asymptotics.hpp"
#include "lexp/catalog.hpp"
#include "lexp/json_io.hpp"
#include "lexp/optimizer.hpp"
#include "lexp/scheme.hpp"

namespace lexp::cli {

namespace {

enum class Format { Markdown, Csv, Json };

const std::map<std::string, Format> kFormatNames{
    {"markdown", Format::Markdown}, {"csv", Format::Csv}, {"json", Format::Json}};

// Exact values are printed the way the exponent tables read: "2+a/b" above 2,
// plain "a/b" otherwise, bare integers without a denominator.
std::string exact(const Rational& v) {
  if (v.is_integer()) return v.num().get_str();
  if (v > Rational(2)) return "2+" + (v - Rational(2)).to_string();
  return v.to_string();
}

std::string approx(const Rational& v) { return v.to_decimal(4); }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void md_row(std::ostream& out, const std::vector<std::string>& cells) {
  out << "|";
  for (const std::string& cell : cells) out << " " << cell << " |";
  out << "\n";
}

void md_header(std::ostream& out, const std::vector<std::string>& cells) {
  md_row(out, cells);
  out << "|";
  for (const std::string& cell : cells) out << std::string(cell.size() + 2, '-') << "|";
  out << "\n";
}

// ---- table -----------------------------------------------------------------

int run_table(int n_min, int n_max, Format format, std::ostream& out) {
  if (n_min < 3) throw std::domain_error("table: --n-min must be >= 3");
  if (n_min > n_max) throw std::domain_error("table: --n-min must be <= --n-max");

  struct Row {
    int n;
    Rational p_final, cmw, ness;
  };
  std::vector<Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    rows.push_back({n, build_scheme(n).p_final, p_cmw(n), p_ness(n).value});
  }

  switch (format) {
    case Format::Markdown:
      md_header(out, {"n", "p_final", "p_cmw", "p_ness"});
      for (const Row& r : rows) {
        md_row(out, {std::to_string(r.n), exact(r.p_final) + " (" + approx(r.p_final) + ")",
                     exact(r.cmw) + " (" + approx(r.cmw) + ")",
                     exact(r.ness) + " (" + approx(r.ness) + ")"});
      }
      break;
    case Format::Csv:
      out << "n,p_final,p_cmw,p_ness,p_final_approx,p_cmw_approx,p_ness_approx\n";
      for (const Row& r : rows) {
        out << r.n << "," << exact(r.p_final) << "," << exact(r.cmw) << "," << exact(r.ness)
            << "," << approx(r.p_final) << "," << approx(r.cmw) << "," << approx(r.ness) << "\n";
      }
      break;
    case Format::Json: {
      nlohmann::json j{{"rows", nlohmann::json::array()}};
      for (const Row& r : rows) {
        j["rows"].push_back(nlohmann::json{
            {"n", r.n}, {"p_final", r.p_final}, {"p_cmw", r.cmw}, {"p_ness", r.ness}});
      }
      out << dump(j);
      break;
    }
  }
  return 0;
}

// ---- scheme / general ------------------------------------------------------

void render_trace(const Scheme& scheme, std::ostream& out) {
  const AdmissibilityReport report = check_scheme(scheme);
  const auto margins = [&](int m) -> const StepMargins* {
    for (const StepMargins& entry : report.per_step) {
      if (entry.m == m) return &entry;
    }
    return nullptr;
  };

  out << "n = " << scheme.n << "\n";
  md_header(out, {"m", "p", "gamma", "alpha", "source", "cellular margin", "transverse margin"});
  for (const SchemeStep& step : scheme.steps) {
    const StepMargins* entry = step.m >= 3 ? margins(step.m) : nullptr;
    md_row(out, {std::to_string(step.m), exact(step.inv_p.reciprocal()), exact(step.gamma),
                 exact(step.alpha), std::string(to_string(step.source)),
                 entry ? exact(entry->cellular_margin) : "-",
                 entry ? exact(entry->transverse_margin) : "-"});
  }
  const int m_close = scheme.M + 1;
  const StepMargins* entry = margins(m_close);
  md_row(out, {std::to_string(m_close), exact(scheme.p_final), exact(closing_gamma(scheme)),
               exact(scheme.closing_alpha), "closing",
               entry ? exact(entry->cellular_margin) : "-",
               entry ? exact(entry->transverse_margin) : "-"});
  out << "M=" << scheme.M << ", p_final = " << exact(scheme.p_final) << "\n";
}

int run_scheme(int n, bool trace, std::ostream& out) {
  const Scheme scheme = build_scheme(n);
  if (trace) {
    render_trace(scheme, out);
  } else {
    out << dump(nlohmann::json(scheme));
  }
  return 0;
}

int run_general(int n, const std::string& gamma0_text, bool trace, std::ostream& out) {
  const Rational gamma0 = Rational::from_string(gamma0_text);
  const Scheme scheme = general_scheme(n, gamma0);
  if (trace) {
    out << "gamma0 = " << gamma0.to_string() << "\n";
    render_trace(scheme, out);
  } else {
    nlohmann::json j = scheme;
    j["gamma0"] = gamma0;
    out << dump(j);
  }
  return 0;
}

// ---- check -----------------------------------------------------------------

std::string yesno(bool b) { return b ? "ok" : "VIOLATED"; }

int run_check(int n, Format format, std::ostream& out) {
  const AdmissibilityReport report = check_scheme(n);
  if (format == Format::Json) {
    out << dump(nlohmann::json(report));
  } else {
    out << "admissibility report for n = " << report.n << "\n";
    md_header(out, {"m", "cellular margin", "transverse margin", "tangential"});
    for (std::size_t i = 0; i < report.per_step.size(); ++i) {
      const StepMargins& entry = report.per_step[i];
      const bool is_closing = i + 1 == report.per_step.size();
      md_row(out, {std::to_string(entry.m) + (is_closing ? " (closing)" : ""),
                   exact(entry.cellular_margin), exact(entry.transverse_margin),
                   yesno(entry.tangential_ok)});
    }
    out << "bracketing (M-1)/(2M) < 1/p_final <= M/(2(M+1)): " << yesno(report.bracketing_ok)
        << "\n";
    out << "closing alpha in (0,1): " << yesno(report.closing_alpha_in_open_unit) << "\n";
    out << "closing weighted gamma > 0: " << yesno(report.closing_weighted_gamma_positive)
        << "\n";
    out << "overall: " << yesno(report.overall) << "\n";
  }
  return report.overall ? 0 : 1;
}

// ---- optimize ----------------------------------------------------------------

int run_optimize(int n, int resolution, Format format, std::ostream& out) {
  const GridSearchResult result = grid_search(n, resolution);
  const Rational canonical = build_scheme(n).p_final;
  if (format == Format::Json) {
    nlohmann::json j{{"n", n},
                     {"resolution", resolution},
                     {"canonical_p_final", canonical},
                     {"best", result.best},
                     {"canonical_is_minimal", result.canonical_is_minimal}};
    out << dump(j);
  } else {
    out << "grid search for n = " << n << ", resolution = " << resolution << "\n";
    out << "canonical p_final = " << exact(canonical) << " (" << approx(canonical) << ")\n";
    const Rational& best = result.best.scheme.p_final;
    out << "best grid p_final = " << exact(best) << " (" << approx(best) << ")\n";
    out << "best overrides = ";
    if (result.best.overrides.empty()) {
      out << "none\n";
    } else {
      out << "{";
      bool first = true;
      for (const auto& [m, alpha] : result.best.overrides) {
        out << (first ? "" : ", ") << m << ": " << alpha.to_string();
        first = false;
      }
      out << "}\n";
    }
    out << "canonical_is_minimal: " << (result.canonical_is_minimal ? "yes" : "no") << "\n";
  }
  return result.canonical_is_minimal ? 0 : 1;
}

// ---- asymptotics -------------------------------------------------------------

int run_asymptotics(const std::string& target_name, int n_min, int n_max, int digits,
                    Format format, std::ostream& out) {
  const auto target = target_from_string(target_name);
  if (!target) throw std::invalid_argument("unknown target '" + target_name + "'");
  const RemainderReport report = sweep_report(n_min, n_max, *target, digits);

  switch (format) {
    case Format::Markdown:
      out << "asymptotic remainder for " << to_string(report.target)
          << ", digits = " << report.precision_digits << "\n";
      md_header(out, {"n", "remainder*n^2"});
      for (const RemainderSample& sample : report.samples) {
        md_row(out, {std::to_string(sample.n), sample.remainder_times_n2});
      }
      out << "max |remainder*n^2| = " << report.max_abs << "\n";
      break;
    case Format::Csv:
      out << "n,remainder_times_n2\n";
      for (const RemainderSample& sample : report.samples) {
        out << sample.n << "," << sample.remainder_times_n2 << "\n";
      }
      break;
    case Format::Json:
      out << dump(nlohmann::json(report));
      break;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lexp");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lebesgue exponent schemes for maximal Schrodinger estimates"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Format format = Format::Markdown;
  int n = 3;
  int n_min = 3, n_max = 10;
  bool trace = false;
  int resolution = 64;
  std::string gamma0_text = "0";
  std::string target_name = "p_final";
  int sweep_min = 3, sweep_max = 100;
  int digits = 30;

  CLI::App* table = app.add_subcommand("table", "Exponent comparison table for a range of n");
  table->add_option("--n-min", n_min, "Smallest dimension")->capture_default_str();
  table->add_option("--n-max", n_max, "Largest dimension")->capture_default_str();
  table->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  CLI::App* scheme = app.add_subcommand("scheme", "Canonical scheme for one dimension");
  scheme->add_option("--n", n, "Ambient dimension")->required();
  scheme->add_flag("--trace", trace, "Print the stepwise trace with constraint margins");

  CLI::App* check = app.add_subcommand("check", "Admissibility report (exit 0 iff admissible)");
  check->add_option("--n", n, "Ambient dimension")->required();
  check->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  CLI::App* optimize =
      app.add_subcommand("optimize", "Grid search over admissible interpolation weights");
  optimize->add_option("--n", n, "Ambient dimension")->required();
  optimize->add_option("--grid", resolution, "Grid resolution per step")->capture_default_str();
  optimize->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  CLI::App* general = app.add_subcommand("general", "Generalized scheme with allowed loss gamma0");
  general->add_option("--n", n, "Ambient dimension")->required();
  general->add_option("--gamma0", gamma0_text, "Allowed loss, as a/b")->required();
  general->add_flag("--trace", trace, "Print the stepwise trace with constraint margins");

  CLI::App* asymptotics =
      app.add_subcommand("asymptotics", "Expansion remainders over a sweep of n");
  asymptotics->add_option("--target", target_name, "p_final, p_cmw, or p_ness")
      ->capture_default_str();
  asymptotics->add_option("--n-min", sweep_min, "Smallest dimension")->capture_default_str();
  asymptotics->add_option("--n-max", sweep_max, "Largest dimension")->capture_default_str();
  asymptotics->add_option("--digits", digits, "Significant decimal digits (>= 20)")
      ->capture_default_str();
  asymptotics->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return run_table(n_min, n_max, format, out);
    if (scheme->parsed()) return run_scheme(n, trace, out);
    if (check->parsed()) return run_check(n, format, out);
    if (optimize->parsed()) return run_optimize(n, resolution, format, out);
    if (general->parsed()) return run_general(n, gamma0_text, trace, out);
    if (asymptotics->parsed()) {
      return run_asymptotics(target_name, sweep_min, sweep_max, digits, format, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: require_subcommand(1)
}

}  // namespace lexp::cli
