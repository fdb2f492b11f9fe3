// qzeta: command-line driver for the exact q-series engine and the
// double-precision relation checks.
//
// Subcommands:
//   series   print exact q-expansion coefficients as reduced rationals
//   verify   run exact (coefficientwise) identity checks
//   numeric  run double-precision relation checks with rigorous tail bounds
//   eigen    decompose the even period space and export eigenline polynomials
//
// Exit codes: 0 all checks pass; 1 any check failed (or a term budget was
// exhausted); 2 usage or domain error; 3 weight outside the supported
// eigen-decomposition range.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/heckespace.hpp"
#include "qzeta/numerics.hpp"
#include "qzeta/polyio.hpp"

namespace {

using namespace qzeta;

// ---------------------------------------------------------------------------
// rendering helpers

std::string poly_display(const HomPoly& p) {
  std::string out;
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    const Rational& c = p.c[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + rational_to_string(c) + ")";
    if (d - i > 0) out += "*X^" + std::to_string(d - i);
    if (i > 0) out += "*Y^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void sort_reports(std::vector<RelationReport>& reps) {
  std::stable_sort(reps.begin(), reps.end(),
                   [](const RelationReport& a, const RelationReport& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.params < b.params;
                   });
}

// prints the reports and returns the exit code (0 pass, 1 fail/error)
int emit_reports(std::vector<RelationReport> reps, const std::string& format, bool summary) {
  sort_reports(reps);
  int failed = 0, errored = 0;
  for (const RelationReport& r : reps) {
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Error) ++errored;
  }
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const RelationReport& r : reps) arr.push_back(report_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const RelationReport& r : reps) std::cout << report_to_text(r) << "\n";
    if (summary) {
      std::cout << "summary: " << reps.size() << " checks, "
                << (reps.size() - static_cast<std::size_t>(failed) -
                    static_cast<std::size_t>(errored))
                << " passed, " << failed << " failed, " << errored << " errors\n";
    }
  }
  return (failed + errored) > 0 ? 1 : 0;
}

RelationReport error_report(std::string check, int k, const std::string& what) {
  RelationReport rep;
  rep.check = std::move(check);
  rep.params["k"] = std::to_string(k);
  rep.status = CheckStatus::Error;
  rep.detail = what;
  return rep;
}

// ---------------------------------------------------------------------------
// series subcommand

int cmd_series(const std::string& kind, int k, int r, int s, const std::string& parity, int n,
               const std::string& format) {
  QSeries qs(0);
  std::map<std::string, std::string> params;
  params["n"] = std::to_string(n);
  if (kind == "zeta") {
    qs = zeta_q(k, n);
    params["k"] = std::to_string(k);
  } else if (kind == "zetahat") {
    qs = zeta_hat_q(r, s, n);
    params["r"] = std::to_string(r);
    params["s"] = std::to_string(s);
  } else if (kind == "parity") {
    qs = zeta_q_parity(k, parity == "even" ? Parity::Even : Parity::Odd, n);
    params["k"] = std::to_string(k);
    params["parity"] = parity;
  } else if (kind == "eta") {
    qs = eta_delta(n);
  } else {  // eisenstein
    qs = eisenstein_series(k, n);
    params["k"] = std::to_string(k);
  }
  std::vector<std::string> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) coeffs.push_back(rational_to_string(qs.at(i)));
  if (format == "json") {
    nlohmann::json out{{"coefficients", coeffs}, {"kind", kind}, {"params", params}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::string line;
    for (const std::string& c : coeffs) {
      if (!line.empty()) line += ", ";
      line += c;
    }
    std::cout << line << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify subcommand

EigenformRecord record_from_file(const std::string& path, int need_terms) {
  PeriodData pd = make_period_data(read_poly_file(path));
  QSeries fourier = fourier_from_pairing(pd, std::max(need_terms, 2));
  Rational a2 = fourier.at(2);
  return EigenformRecord{EigenSource::File, std::move(pd), std::move(a2), std::move(fourier)};
}

void run_thm1(std::vector<RelationReport>& out, int k, int N, const std::string& poly_file,
              bool& unsupported) {
  try {
    std::vector<EigenformRecord> recs;
    if (!poly_file.empty())
      recs.push_back(record_from_file(poly_file, N));
    else
      recs = eigen_split(k, 2);
    for (const EigenformRecord& rec : recs) out.push_back(check_eigenform_identity(rec, N));
  } catch (const UnsupportedRangeError& e) {
    out.push_back(error_report("eigenform-expansion-identity", k, e.what()));
    unsupported = true;
  }
}

void run_thm2(std::vector<RelationReport>& out, int k, int N) {
  if (k > 0) {
    out.push_back(check_qsum_identity(k, N));
    return;
  }
  for (int kk = 4; kk <= 16; kk += 2) out.push_back(check_qsum_identity(kk, N));
}

void run_hecke(std::vector<RelationReport>& out, int k, int nmax, const std::string& poly_file,
               bool& unsupported) {
  try {
    std::vector<EigenformRecord> recs;
    if (!poly_file.empty())
      recs.push_back(record_from_file(poly_file, nmax));
    else
      recs = eigen_split(k, nmax);
    for (const EigenformRecord& rec : recs) {
      Stopwatch watch;
      RelationReport rep;
      rep.check = "hecke-eigen-action";
      rep.params["k"] = std::to_string(rec.weight());
      rep.params["nmax"] = std::to_string(nmax);
      rep.params["source"] = to_string(rec.source);
      rep.status = CheckStatus::Pass;
      rep.detail = "operator action matches a_n * P for all n <= " + std::to_string(nmax);
      for (int n = 1; n <= nmax; ++n) {
        const HomPoly acted = act_element(rec.pd.poly, hecke_element(n));
        if (!poly_is_zero(poly_sub(acted, scale_poly(rec.fourier.at(n), rec.pd.poly)))) {
          rep.status = CheckStatus::Fail;
          rep.detail = "operator action differs from a_n * P at n = " + std::to_string(n);
          break;
        }
      }
      rep.runtime_ms = watch.ms();
      out.push_back(rep);
    }
  } catch (const UnsupportedRangeError& e) {
    out.push_back(error_report("hecke-eigen-action", k, e.what()));
    unsupported = true;
  }
}

void run_sigma(std::vector<RelationReport>& out, int k, int nmax) {
  std::vector<int> weights;
  if (k > 0)
    weights.push_back(k);
  else
    for (int kk = 4; kk <= 16; kk += 2) weights.push_back(kk);
  for (int kk : weights) {
    Stopwatch watch;
    RelationReport rep;
    rep.check = "divisor-sum-pairing";
    rep.params["k"] = std::to_string(kk);
    rep.params["nmax"] = std::to_string(nmax);
    rep.status = CheckStatus::Pass;
    rep.detail = "pairing of the power-difference polynomial yields sigma_{k-1}(n), n <= " +
                 std::to_string(nmax);
    const HomPoly diff = scale_poly(Rational(-1), eisenstein_period_poly(kk));  // Y^{k-2} - X^{k-2}
    for (int n = 1; n <= nmax; ++n) {
      const Rational got = pairing(diff, hecke_element(n));
      if (got != Rational(divisor_sigma(kk - 1, n))) {
        rep.status = CheckStatus::Fail;
        rep.detail = "pairing at n = " + std::to_string(n) + " gives " + rational_to_string(got) +
                     ", expected " + rational_to_string(Rational(divisor_sigma(kk - 1, n)));
        break;
      }
    }
    rep.runtime_ms = watch.ms();
    out.push_back(rep);
  }
}

// which cuspidal record (if any) the closed-form checks should use
std::vector<EigenformRecord> cusp_records(int k, int terms) {
  std::vector<EigenformRecord> recs = eigen_split(k, 2);
  std::vector<EigenformRecord> out;
  for (EigenformRecord& rec : recs)
    if (rec.source == EigenSource::CuspRational) {
      rec.fourier = QSeries(0);  // unused; the closed forms only need pd
      out.push_back(std::move(rec));
    }
  (void)terms;
  return out;
}

RelationReport series_match_report(const char* check, int k, const std::string& variant,
                                   const QSeries& got, const QSeries& want, int N) {
  Stopwatch watch;
  RelationReport rep;
  rep.check = check;
  rep.params["k"] = std::to_string(k);
  rep.params["terms"] = std::to_string(N);
  rep.params["variant"] = variant;
  int mismatch = -1;
  if (series_equal(got, want, &mismatch)) {
    rep.status = CheckStatus::Pass;
    rep.detail = "series agree through q^" + std::to_string(N);
  } else {
    rep.status = CheckStatus::Fail;
    rep.detail = "first mismatch at q^" + std::to_string(mismatch) + ": " +
                 rational_to_string(got.at(mismatch)) + " vs " +
                 rational_to_string(want.at(mismatch));
  }
  rep.runtime_ms = watch.ms();
  return rep;
}

void run_t_family(std::vector<RelationReport>& out, int which, int k, int N,
                  const std::string& poly_file, bool& unsupported) {
  const HeckePart part = which == 1 ? HeckePart::One : which == 2 ? HeckePart::Two
                                                                  : HeckePart::Three;
  const char* check = which == 1   ? "t1-pairing-closed-form"
                      : which == 2 ? "t2-pairing-closed-form"
                                   : "t3-pairing-closed-form";
  // power-difference polynomial: closed form valid at every even weight
  {
    const HomPoly diff = scale_poly(Rational(-1), eisenstein_period_poly(k));
    const QSeries got = pairing_series(diff, part, N);
    const QSeries want = which == 1   ? t1_series_closed_power_diff(k, N)
                         : which == 2 ? t2_series_closed_power_diff(k, N)
                                      : t3_series_closed_power_diff(k, N);
    out.push_back(series_match_report(check, k, "power-difference", got, want, N));
  }
  // restricted cusp polynomial (from a file, or from the eigen decomposition
  // when the weight has a rational cuspidal line)
  try {
    std::vector<PeriodData> pds;
    std::string variant = "cusp";
    if (!poly_file.empty()) {
      pds.push_back(make_period_data(read_poly_file(poly_file)));
      variant = "file";
    } else {
      for (EigenformRecord& rec : cusp_records(k, N)) pds.push_back(std::move(rec.pd));
    }
    for (const PeriodData& pd : pds) {
      const HomPoly p0 = restricted(pd);
      const QSeries got = pairing_series(p0, part, N);
      const QSeries want = which == 1   ? t1_series_closed(pd, N)
                           : which == 2 ? t2_series_closed(pd, N)
                                        : QSeries(N);  // the T3 pairing vanishes
      out.push_back(series_match_report(check, k, variant, got, want, N));
    }
  } catch (const UnsupportedRangeError& e) {
    out.push_back(error_report(check, k, e.what()));
    unsupported = true;
  }
}

int cmd_verify(const std::string& target, int k, int terms, int nmax,
               const std::string& poly_file, const std::string& format) {
  std::vector<RelationReport> reports;
  bool unsupported = false;
  const int N = terms > 0 ? terms : 120;
  const int M = nmax > 0 ? nmax : 20;
  if (target == "thm1") {
    run_thm1(reports, k > 0 ? k : 12, N, poly_file, unsupported);
  } else if (target == "thm2") {
    run_thm2(reports, k, N);
  } else if (target == "hecke") {
    run_hecke(reports, k > 0 ? k : 12, M, poly_file, unsupported);
  } else if (target == "sigma") {
    run_sigma(reports, k, nmax > 0 ? nmax : 50);
  } else if (target == "t3") {
    run_t_family(reports, 3, k > 0 ? k : 12, terms > 0 ? terms : 80, poly_file, unsupported);
  } else if (target == "lemma-t1") {
    run_t_family(reports, 1, k > 0 ? k : 12, terms > 0 ? terms : 60, poly_file, unsupported);
  } else if (target == "lemma-t2") {
    run_t_family(reports, 2, k > 0 ? k : 12, terms > 0 ? terms : 60, poly_file, unsupported);
  } else if (target == "example-k4k6") {
    reports.push_back(check_low_weight_examples(terms > 0 ? terms : 60));
  } else {  // all
    const int NA = terms > 0 ? terms : 120;
    run_thm1(reports, k > 0 ? k : 12, NA, poly_file, unsupported);
    run_thm2(reports, 0, NA);
    run_hecke(reports, k > 0 ? k : 12, nmax > 0 ? nmax : 20, poly_file, unsupported);
    run_sigma(reports, 0, nmax > 0 ? nmax : 60);
    for (int which : {1, 2, 3})
      run_t_family(reports, which, k > 0 ? k : 12, terms > 0 ? terms : 60, poly_file,
                   unsupported);
    reports.push_back(check_low_weight_examples(terms > 0 ? terms : 60));
  }
  const int code = emit_reports(std::move(reports), format, target == "all");
  return unsupported ? 3 : code;
}

// ---------------------------------------------------------------------------
// numeric subcommand

int cmd_numeric(const std::string& target, int k, int r, int s, double tol, int terms,
                const std::string& series_kind, const std::string& format) {
  std::vector<RelationReport> reports;
  bool unsupported = false;
  try {
    if (target == "relation") {
      const int kk = k > 0 ? k : 12;
      try {
        const std::vector<EigenformRecord> recs = eigen_split(kk, 2);
        if (recs.size() < 2) {
          reports.push_back(error_report("numeric-relation", kk,
                                         "no cuspidal eigenline at weight " +
                                             std::to_string(kk)));
        } else {
          reports.push_back(verify_relation(numeric_relation_coefficients(recs[1].pd),
                                            tol > 0 ? tol : 1e-8));
        }
      } catch (const UnsupportedRangeError& e) {
        reports.push_back(error_report("numeric-relation", kk, e.what()));
        unsupported = true;
      }
    } else if (target == "sumformula") {
      reports.push_back(sum_formula_check(k > 0 ? k : 3, tol > 0 ? tol : 1e-6));
    } else if (target == "gkz") {
      const int kk = k > 0 ? k : 12;
      try {
        reports.push_back(gkz_check(kk, tol > 0 ? tol : 1e-6));
      } catch (const UnsupportedRangeError& e) {
        reports.push_back(error_report("numeric-gkz-relation", kk, e.what()));
        unsupported = true;
      }
    } else if (target == "level2") {
      reports.push_back(level2_check(r > 0 ? r : 2, s > 0 ? s : 3, tol > 0 ? tol : 1e-8));
    } else if (target == "mdavasli") {
      reports.push_back(
          polylog_identity_check(r > 0 ? r : 1, s > 0 ? s : 2, tol > 0 ? tol : 1e-8));
    } else {  // qlimit
      if (series_kind == "eta") {
        if (k > 0 && k != 12) throw DomainError("the eta series has weight 12");
        const int N = terms > 0 ? terms : 1200;
        reports.push_back(q_limit_check(12, eta_delta(N), 0.0));
      } else {
        const int kk = k > 0 ? k : 2;
        const int N = terms > 0 ? terms : std::max(2000, 600 * kk);
        reports.push_back(q_limit_check(kk, zeta_q(kk, N), zeta_num(kk).value));
      }
    }
  } catch (const BudgetExceededError& e) {
    reports.push_back(error_report("numeric-" + target, k, e.what()));
  }
  const int code = emit_reports(std::move(reports), format, false);
  return unsupported ? 3 : code;
}

// ---------------------------------------------------------------------------
// eigen subcommand

int cmd_eigen(int k, int nmax, const std::string& out_dir, const std::string& format) {
  std::vector<EigenformRecord> recs;
  try {
    recs = eigen_split(k, std::max(nmax, 2));
  } catch (const UnsupportedRangeError& e) {
    std::cout << e.what() << "\n";
    return 3;
  }
  std::vector<std::string> written;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const EigenformRecord& rec : recs) {
      const std::string path =
          (std::filesystem::path(out_dir) /
           ("period_k" + std::to_string(k) + "_" + to_string(rec.source) + ".json"))
              .string();
      write_poly_file(path, rec.pd.poly);
      written.push_back(path);
    }
  }
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const EigenformRecord& rec = recs[i];
      nlohmann::json eig = nlohmann::json::array();
      for (int n = 1; n <= nmax; ++n) eig.push_back(rational_to_string(rec.fourier.at(n)));
      nlohmann::json item{{"eigenvalues", eig},
                          {"poly", poly_to_json(rec.pd.poly)},
                          {"source", to_string(rec.source)},
                          {"weight", rec.weight()}};
      if (!written.empty()) item["file"] = written[i];
      arr.push_back(item);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const EigenformRecord& rec = recs[i];
      std::cout << "source: " << to_string(rec.source) << "\n";
      std::cout << "  polynomial: " << poly_display(rec.pd.poly) << "\n";
      std::string row;
      for (int n = 1; n <= nmax; ++n) {
        if (!row.empty()) row += ", ";
        row += "a_" + std::to_string(n) + " = " + rational_to_string(rec.fourier.at(n));
      }
      std::cout << "  eigenvalues: " << row << "\n";
      if (!written.empty()) std::cout << "  wrote " << written[i] << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact and double-precision verification of q-analogue double zeta identities"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int k = 0, r = 0, s = 0, n = 10, terms = 0, nmax = 0;
  double tol = 0.0;
  std::string parity = "odd", kind, target, poly_file, out_dir, series_kind = "zeta";

  CLI::App* sc_series = app.add_subcommand("series", "print exact q-expansion coefficients");
  sc_series->fallthrough();
  sc_series->add_option("kind", kind, "series kind")
      ->required()
      ->check(CLI::IsMember({"zeta", "zetahat", "parity", "eta", "eisenstein"}));
  sc_series->add_option("--k", k, "weight");
  sc_series->add_option("--r", r, "first exponent");
  sc_series->add_option("--s", s, "second exponent");
  sc_series->add_option("--parity", parity, "divisor parity for kind=parity")
      ->check(CLI::IsMember({"even", "odd"}));
  sc_series->add_option("--n,--terms", n, "truncation order (coefficients 0..n)");

  CLI::App* sc_verify = app.add_subcommand("verify", "run exact identity checks");
  sc_verify->fallthrough();
  sc_verify->add_option("target", target, "check to run")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "hecke", "sigma", "t3", "lemma-t1", "lemma-t2",
                             "example-k4k6", "all"}));
  sc_verify->add_option("--k", k, "weight");
  sc_verify->add_option("--terms,--n", terms, "q-expansion truncation order");
  sc_verify->add_option("--nmax", nmax, "largest operator index to sweep");
  sc_verify->add_option("--poly", poly_file, "period polynomial JSON file")
      ->check(CLI::ExistingFile);

  CLI::App* sc_numeric =
      app.add_subcommand("numeric", "run double-precision relation checks");
  sc_numeric->fallthrough();
  sc_numeric->add_option("target", target, "check to run")
      ->required()
      ->check(CLI::IsMember(
          {"relation", "sumformula", "gkz", "level2", "mdavasli", "qlimit"}));
  sc_numeric->add_option("--k", k, "weight");
  sc_numeric->add_option("--r", r, "first exponent");
  sc_numeric->add_option("--s", s, "second exponent");
  sc_numeric->add_option("--tol", tol, "tolerance");
  sc_numeric->add_option("--terms,--n", terms, "series truncation order (qlimit)");
  sc_numeric->add_option("--series", series_kind, "series kind for qlimit")
      ->check(CLI::IsMember({"zeta", "eta"}));

  CLI::App* sc_eigen =
      app.add_subcommand("eigen", "decompose the even period space into eigenlines");
  sc_eigen->fallthrough();
  sc_eigen->add_option("--k", k, "weight")->required();
  sc_eigen->add_option("--nmax", nmax, "print eigenvalues a_n for n <= nmax");
  sc_eigen->add_option("--out", out_dir, "directory for period polynomial JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_series))
      return cmd_series(kind, k > 0 ? k : 2, r > 0 ? r : 2, s > 0 ? s : 2, parity, n, format);
    if (app.got_subcommand(sc_verify))
      return cmd_verify(target, k, terms, nmax, poly_file, format);
    if (app.got_subcommand(sc_numeric))
      return cmd_numeric(target, k, r, s, tol, terms, series_kind, format);
    return cmd_eigen(k, nmax > 0 ? nmax : 10, out_dir, format);
  } catch (const UnsupportedRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
