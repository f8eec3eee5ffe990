// heckeeta: command-line front end for the eta_D library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "heckeeta/analytic.hpp"
#include "heckeeta/characters.hpp"
#include "heckeeta/cyclotomic.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/lseries.hpp"
#include "heckeeta/partitions.hpp"
#include "heckeeta/qseries.hpp"
#include "heckeeta/reports.hpp"
#include "heckeeta/serialize.hpp"

using namespace heckeeta;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_fundamental(int D) {
  if (!is_fundamental(D)) throw InvalidDiscriminant(D);
}

void print_series(const QSeries& f, int first_index, int index_offset, const std::string& format) {
  if (format == "csv") std::cout << coeff_csv_header() << '\n';
  for (int n = first_index; n <= f.prec(); ++n) {
    if (format == "csv")
      std::cout << coeff_csv_row(f.ctx(), n + index_offset, f[n]) << '\n';
    else
      std::cout << coeff_record(f.ctx(), n + index_offset, f[n]).dump() << '\n';
  }
}

json rational_json(const Rational& r) {
  if (denominator(r) == 1) return bigint_json(numerator(r));
  return r.str();
}

std::string complex_csv(Complex z) { return format_real(z.real()) + "," + format_real(z.imag()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric computation of the eta_D functions for Hecke groups H(sqrt D)"};
  app.require_subcommand(1);

  int D = 5;
  int N = 25;
  std::string format = "json";
  unsigned digits = default_digits();
  app.add_option("--digits", digits, "working precision in decimal digits (default $HECKEETA_DIGITS or 50)");

  auto add_D = [&D](CLI::App* sub) { sub->add_option("--D", D, "fundamental discriminant D = 1 mod 4")->required(); };
  auto add_N = [&N](CLI::App* sub) { sub->add_option("--N", N, "order")->required()->check(CLI::NonNegativeNumber); };
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* coeffs = app.add_subcommand("coeffs", "a_D(1..N), one record per line");
  add_D(coeffs);
  add_N(coeffs);
  add_format(coeffs);

  auto* delta5 = app.add_subcommand("delta5", "tau_5(1..N), coefficients of eta_5^5");
  add_N(delta5);
  add_format(delta5);

  auto* verify_tbl = app.add_subcommand("verify-table", "recompute the published a_D(N) and tau_5(N) values");

  int samples = 20, nmax = 300;
  double tol = 1e-6;
  std::uint64_t seed = 20240601;
  auto* verify_mod = app.add_subcommand("verify-modularity", "inversion and translation residuals at random points");
  add_D(verify_mod);
  verify_mod->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify_mod->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
  verify_mod->add_option("--tol", tol);
  verify_mod->add_option("--seed", seed);

  auto* oracle = app.add_subcommand("oracle-check", "compare the product expansion with the partition convolution");
  add_D(oracle);
  add_N(oracle);

  auto* parts = app.add_subcommand("partitions", "p(k), p_NR(k, D) and length-residue counts");
  add_D(parts);
  add_N(parts);

  auto* lvals = app.add_subcommand("lvalues", "L(-1, chi_D), the valuation exponent and L'(0, chi_D)");
  add_D(lvals);

  auto* periods = app.add_subcommand("periods", "period polynomials f_+ and f_-");
  add_D(periods);

  auto* chars = app.add_subcommand("chars", "character values and residue classes");
  add_D(chars);

  auto* signs = app.add_subcommand("signs", "sign pattern of a_D(N)");
  add_D(signs);
  add_N(signs);

  int window_lo = 1, window_hi = 0;
  auto* growth = app.add_subcommand("growth", "(sqrt N, log|a_D(N)|) and a least-squares slope");
  add_D(growth);
  add_N(growth);
  add_format(growth);
  growth->add_option("--window-lo", window_lo);
  growth->add_option("--window-hi", window_hi);

  double re_min = -6, re_max = 6, im_min = 0.1, im_max = 1.1;
  int nx = 121, ny = 21;
  auto* grid = app.add_subcommand("grid", "CSV grid of eta_D(z) and eta_D(-1/z)");
  add_D(grid);
  grid->add_option("--re-min", re_min);
  grid->add_option("--re-max", re_max);
  grid->add_option("--im-min", im_min);
  grid->add_option("--im-max", im_max);
  grid->add_option("--nx", nx)->check(CLI::PositiveNumber);
  grid->add_option("--ny", ny)->check(CLI::PositiveNumber);
  grid->add_option("--nmax", nmax)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*coeffs) {
      require_fundamental(D);
      print_series(eta_series(D, N), 1, 0, format);
      return kExitOk;
    }
    if (*delta5) {
      if (N < 1) throw UsageError("--N must be at least 1");
      print_series(delta5_series(N - 1), 0, 1, format);
      return kExitOk;
    }
    if (*verify_tbl) {
      int failures = 0;
      const auto checks = verify_table();
      for (const auto& c : checks) {
        const RingCtx ctx(c.D);
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.series << " D=" << c.D << " N=" << c.N << " "
                  << ctx.to_string(c.actual);
        if (!c.passed) std::cout << " expected " << ctx.to_string(c.expected);
        std::cout << '\n';
        failures += !c.passed;
      }
      std::cout << (checks.size() - failures) << "/" << checks.size() << " PASS\n";
      return failures == 0 ? kExitOk : kExitFail;
    }
    if (*verify_mod) {
      require_fundamental(D);
      bool ok = true;
      double worst = 0;
      std::cout << "re,im,inversion_residual,translation_residual\n";
      for (const auto& s : verify_modularity(D, samples, nmax, tol, seed)) {
        std::cout << format_real(s.z.re()) << ',' << format_real(s.z.im()) << ','
                  << format_real(s.inversion.residual) << ',' << format_real(s.translation.residual) << '\n';
        ok = ok && s.inversion.passed && s.translation.passed;
        worst = std::max({worst, s.inversion.residual, s.translation.residual});
      }
      std::cerr << (ok ? "PASS" : "FAIL") << " max residual " << format_real(worst) << " tol " << format_real(tol)
                << '\n';
      return ok ? kExitOk : kExitFail;
    }
    if (*oracle) {
      require_fundamental(D);
      const RingCtx ctx(D);
      const OracleReport r = oracle_check(D, N);
      for (const auto& row : r.rows) {
        std::cout << (row.passed ? "PASS" : "FAIL") << " N=" << row.N << " " << ctx.to_string(row.product);
        if (!row.passed) std::cout << " oracle " << ctx.to_string(row.oracle);
        std::cout << '\n';
      }
      if (r.first_divergence)
        std::cout << "first divergence at N=" << *r.first_divergence << '\n';
      else
        std::cout << "all " << r.rows.size() << " coefficients agree\n";
      return r.passed() ? kExitOk : kExitFail;
    }
    if (*parts) {
      const PartitionTables t = build_partition_tables(build_char_table(D), N);
      json j;
      j["D"] = D;
      j["N"] = N;
      j["p"] = json::array();
      j["p_nr"] = json::array();
      j["c"] = json::array();
      for (int k = 0; k <= N; ++k) {
        j["p"].push_back(bigint_json(t.p[k]));
        j["p_nr"].push_back(bigint_json(t.p_nr[k]));
        json row = json::array();
        for (const auto& v : t.c[k]) row.push_back(bigint_json(v));
        j["c"].push_back(std::move(row));
      }
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
    if (*lvals) {
      const CharTable ct = build_char_table(D);
      const LValueRecord rec = l_minus_one(ct);
      const VarReal lp0 = l_prime_zero(ct, digits);
      json j;
      j["D"] = D;
      j["S_chi"] = bigint_json(rec.s_chi);
      j["L_minus_1"] = rec.l_minus_one.str();
      j["m"] = rational_json(rec.m_exponent);
      j["L_prime_0"] = lp0.convert_to<double>();
      j["L_prime_0_digits"] = lp0.str(static_cast<std::streamsize>(digits));
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
    if (*periods) {
      const CharTable ct = build_char_table(D);
      const RingCtx ctx(D);
      const PeriodPair pp = period_polynomials(ct);
      json j;
      j["D"] = D;
      j["f_plus"] = json::array();
      j["f_minus"] = json::array();
      for (const auto& c : pp.plus) j["f_plus"].push_back(ctx.to_string(c));
      for (const auto& c : pp.minus) j["f_minus"].push_back(ctx.to_string(c));
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
    if (*chars) {
      const CharTable ct = build_char_table(D);
      json j;
      j["D"] = D;
      j["values"] = ct.values;
      j["qr"] = ct.qr;
      j["nr"] = ct.nr;
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
    if (*signs) {
      require_fundamental(D);
      const SignReport r = signs_report(D, N);
      json j;
      j["D"] = r.D;
      j["N_max"] = r.N_max;
      j["signs"] = r.signs;
      j["changes"] = r.changes;
      j["count"] = r.count();
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
    if (*growth) {
      require_fundamental(D);
      const GrowthReport r = growth_report(D, N, window_lo, window_hi);
      if (format == "csv") {
        std::cout << "N,sqrt_N,log_abs\n";
        for (const auto& p : r.points)
          std::cout << p.N << ',' << format_real(p.sqrt_N) << ',' << format_real(p.log_abs) << '\n';
        std::cerr << "slope " << format_real(r.slope) << " intercept " << format_real(r.intercept) << '\n';
      } else {
        json j;
        j["D"] = r.D;
        j["N_max"] = r.N_max;
        j["window"] = {r.window_lo, r.window_hi};
        j["slope"] = r.slope;
        j["intercept"] = r.intercept;
        j["C_estimate"] = r.c_estimate();
        j["zero_indices"] = r.zero_indices;
        j["points"] = json::array();
        for (const auto& p : r.points) j["points"].push_back({p.N, p.sqrt_N, p.log_abs});
        std::cout << j.dump() << '\n';
      }
      return kExitOk;
    }
    if (*grid) {
      require_fundamental(D);
      std::cout << "re,im,re_eta_z,im_eta_z,re_eta_inv,im_eta_inv\n";
      for (const auto& row : eta_grid(D, re_min, re_max, im_min, im_max, nx, ny, nmax))
        std::cout << format_real(row.re) << ',' << format_real(row.im) << ',' << complex_csv(row.eta_z) << ','
                  << complex_csv(row.eta_inv) << '\n';
      return kExitOk;
    }
  } catch (const InvalidDiscriminant& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
