#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qsep/audit.hpp"
#include "qsep/concurrence.hpp"
#include "qsep/entropy.hpp"
#include "qsep/error.hpp"
#include "qsep/io.hpp"
#include "qsep/states.hpp"
#include "qsep/structure.hpp"

namespace qsep::cli {

namespace {

const double kLn2 = std::numbers::ln2;
const double kLn3 = std::log(3.0);
const double kLn5 = std::log(5.0);

constexpr std::array<const char*, 5> kTableColumns = {"concurrence", "entropy_diff_a", "entropy_diff_b",
                                                      "deficit_over_ln2", "mutual_over_ln2"};

struct TableRow {
  ExampleId id;
  std::array<double, 5> closed_form;
  // Decimal values as printed in the published table (NaN where the table
  // only gives the closed form).
  std::array<double, 5> printed;
};

std::vector<TableRow> table1_reference() {
  const double nan = std::nan("");
  const double h13 = (3 * kLn3 - 2 * kLn2) / (3 * kLn2);
  return {
      {ExampleId::E1,
       {2.0 / 3, -(5.0 / 6) * std::log(5.0 / 4), 0.0, (5 * kLn5 - 8 * kLn2) / (6 * kLn2), h13},
       {nan, nan, nan, 0.6016, 0.9182}},
      {ExampleId::E2,
       {1.0 / 3, (5.0 / 6) * std::log(5.0 / 4), (5.0 / 6) * std::log(5.0 / 4), 1.0 / 3,
        (3 * kLn3 + 8 * kLn2 - 5 * kLn5) / (3 * kLn2)},
       {nan, nan, nan, nan, 0.3817}},
      {ExampleId::E3, {2.0 / 3, 0.0, 0.0, 2.0 / 3, h13}, {nan, nan, nan, nan, 0.9183}},
      {ExampleId::E4, {1.0, -kLn2, -kLn2, 1.0, 2.0}, {nan, nan, nan, nan, nan}},
      {ExampleId::E5, {0.0, kLn2, 0.0, 0.0, 0.0}, {nan, nan, nan, nan, nan}},
      {ExampleId::E6, {0.0, 0.0, 0.0, 0.0, 1.0}, {nan, nan, nan, nan, nan}},
  };
}

std::array<double, 5> table1_values(const DensityMatrix& rho, const Tolerances& tol) {
  return {concurrence(rho, tol), entropy_difference(rho, Subsystem::A, 1.0, tol),
          entropy_difference(rho, Subsystem::B, 1.0, tol), quantum_deficit(rho, tol) / kLn2,
          mutual_entropy(rho, tol) / kLn2};
}

int cmd_table1(const Tolerances& tol, double scale, std::ostream& out, std::ostream& err) {
  out << "example";
  for (const char* c : kTableColumns) out << "," << c;
  out << "\n";
  int mismatches = 0;
  for (const TableRow& row : table1_reference()) {
    const auto values = table1_values(example_state(row.id), tol);
    out << to_string(row.id);
    for (double v : values) out << "," << io::format_number(io::round12(v));
    out << "\n";
    for (std::size_t c = 0; c < values.size(); ++c) {
      const double exact = std::abs(values[c] - row.closed_form[c]);
      if (exact > 1e-10 * scale) {
        ++mismatches;
        err << "mismatch " << to_string(row.id) << " " << kTableColumns[c] << ": computed "
            << io::format_number(values[c]) << ", closed form " << io::format_number(row.closed_form[c])
            << ", diff " << io::format_number(exact) << "\n";
      }
      if (!std::isnan(row.printed[c]) && std::abs(values[c] - row.printed[c]) > 1e-4 * scale) {
        ++mismatches;
        err << "mismatch " << to_string(row.id) << " " << kTableColumns[c] << ": computed "
            << io::format_number(values[c]) << ", printed " << io::format_number(row.printed[c]) << ", diff "
            << io::format_number(std::abs(values[c] - row.printed[c])) << "\n";
      }
    }
  }
  return mismatches == 0 ? kOk : kVerificationFailed;
}

struct SweepRow {
  double p;
  std::array<double, 5> values;
};

std::vector<SweepRow> werner_sweep(double pmin, double pmax, double step, const Tolerances& tol) {
  if (!(pmin >= 0.0 && pmin <= pmax && pmax <= 1.0))
    throw Error("range", pmin, "werner-sweep needs 0 <= min <= max <= 1");
  if (!(step > 0.0)) throw Error("step", step, "werner-sweep needs step > 0");
  const auto count = static_cast<long>(std::floor((pmax - pmin) / step + 1e-9));
  std::vector<SweepRow> rows;
  for (long k = 0; k <= count; ++k) {
    const double p = std::min(pmax, pmin + static_cast<double>(k) * step);
    const DensityMatrix w = werner(p);
    rows.push_back({p,
                    {concurrence(w, tol), mutual_entropy(w, tol) / kLn2, quantum_deficit(w, tol) / kLn2,
                     conditional_tsallis(w, Subsystem::A, 1.0, tol), ppt_min_eigenvalue(w, tol)}});
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "p,concurrence,mutual_over_ln2,deficit_over_ln2,cond_entropy_q1,ppt_min_eig\n";
  for (const auto& r : rows) {
    out << io::format_number(io::round12(r.p));
    for (double v : r.values) out << "," << io::format_number(io::round12(v));
    out << "\n";
  }
}

void write_gnuplot(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "$werner << EOD\n";
  write_sweep_csv(rows, out);
  out << "EOD\n"
         "set datafile separator ','\n"
         "set key autotitle columnhead\n"
         "set xlabel 'p'\n"
         "set xrange [0:1]\n"
         "set yrange [0:2]\n"
         "plot $werner using 1:2 with lines lw 2 title 'C', \\\n"
         "     $werner using 1:3 with lines dt 3 title 'S/ln2', \\\n"
         "     $werner using 1:4 with lines dt 2 title 'D/ln2'\n";
}

int cmd_werner_sweep(double pmin, double pmax, double step, const std::string& gnuplot, const Tolerances& tol,
                     std::ostream& out) {
  const auto rows = werner_sweep(pmin, pmax, step, tol);
  write_sweep_csv(rows, out);
  if (!gnuplot.empty()) {
    std::ofstream file(gnuplot);
    if (!file) throw Error("gnuplot", 0.0, "cannot write " + gnuplot);
    write_gnuplot(rows, file);
  }
  return kOk;
}

int cmd_classify(const std::string& spec, const Tolerances& tol, std::ostream& out) {
  const DensityMatrix rho = io::parse_state_spec(spec, tol);
  out << io::report_to_json(classify(rho, tol)).dump(2) << "\n";
  return kOk;
}

int cmd_audit(const AuditOptions& options, std::ostream& out) {
  const AuditSummary summary = run_audit(options);
  summary.print(out);
  return summary.ok() ? kOk : kVerificationFailed;
}

int cmd_iso_report(const Tolerances& tol, double scale, std::ostream& out, std::ostream& err) {
  const auto [rho_e, rho_s] = isospectral_pair();
  const RealVector spec_e = hermitian_eig(rho_e.matrix(), tol).values;
  const RealVector spec_s = hermitian_eig(rho_s.matrix(), tol).values;
  const double gap = (spec_e - spec_s).cwiseAbs().maxCoeff();
  const double mutual_e = mutual_entropy(rho_e, tol);
  const double mutual_s = mutual_entropy(rho_s, tol);
  const double deficit_e = quantum_deficit(rho_e, tol);
  const double deficit_s = quantum_deficit(rho_s, tol);

  const bool same_spectrum = gap <= 1e-12 * scale;
  const bool same_mutual = std::abs(mutual_e - mutual_s) <= 1e-10 * scale;
  const bool deficits_differ = std::abs(deficit_e - deficit_s) > 1e-8 * scale;

  io::json report;
  auto state_block = [&](const DensityMatrix& rho, const RealVector& spec, double mutual, double deficit) {
    io::json spectrum = io::json::array();
    for (Eigen::Index i = 0; i < spec.size(); ++i) spectrum.push_back(io::round12(spec(i)));
    return io::json{{"spectrum", spectrum},
                    {"mutual", io::round12(mutual)},
                    {"deficit", io::round12(deficit)},
                    {"deficit_over_ln2", io::round12(deficit / kLn2)},
                    {"concurrence", io::round12(concurrence(rho, tol))},
                    {"entropy_diff_a", io::round12(entropy_difference(rho, Subsystem::A, 1.0, tol))},
                    {"entropy_diff_b", io::round12(entropy_difference(rho, Subsystem::B, 1.0, tol))}};
  };
  report["E"] = state_block(rho_e, spec_e, mutual_e, deficit_e);
  report["S"] = state_block(rho_s, spec_s, mutual_s, deficit_s);
  report["spectrum_max_diff"] = io::round12(gap);
  report["same_spectrum"] = same_spectrum;
  report["same_mutual"] = same_mutual;
  report["deficit_discriminates"] = deficits_differ;
  out << report.dump(2) << "\n";

  if (same_spectrum && same_mutual && deficits_differ) return kOk;
  err << "isospectral pair not discriminated: spectrum diff " << io::format_number(gap) << ", mutual diff "
      << io::format_number(std::abs(mutual_e - mutual_s)) << ", deficit diff "
      << io::format_number(std::abs(deficit_e - deficit_s)) << "\n";
  return kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit separability diagnostics: concurrence, entropies, quantum deficit"};
  app.name("qsep");
  app.require_subcommand(1);

  double scale = 1.0;
  app.add_option("--tolerance", scale, "Scale factor applied to every comparison tolerance")
      ->check(CLI::PositiveNumber);

  auto* table1 = app.add_subcommand("table1", "Reproduce the six-example summary table as CSV");

  double pmin = 0.0;
  double pmax = 1.0;
  double step = 0.01;
  std::string gnuplot;
  auto* sweep = app.add_subcommand("werner-sweep", "Concurrence, mutual entropy and deficit along the Werner family");
  sweep->add_option("--min", pmin, "Smallest p");
  sweep->add_option("--max", pmax, "Largest p");
  sweep->add_option("--step", step, "Grid step");
  sweep->add_option("--gnuplot", gnuplot, "Also write a gnuplot script with the data inlined");

  std::string spec;
  auto* cls = app.add_subcommand("classify", "Classification report for one state as JSON");
  cls->add_option("state", spec, "E1..E6, iso:E, iso:S, werner:<p>, pure:<amplitudes> or a JSON file")
      ->required();

  AuditOptions audit_opts;
  auto* audit = app.add_subcommand("audit", "Run every property check on random states");
  audit->add_option("--n", audit_opts.n, "Number of random samples")->check(CLI::PositiveNumber);
  audit->add_option("--seed", audit_opts.seed, "Base seed");
  audit->add_option("--jobs", audit_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* iso = app.add_subcommand("iso-report", "Compare the isospectral pair");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const Tolerances tol = Tolerances{}.scaled(scale);
  try {
    if (*table1) return cmd_table1(tol, scale, out, err);
    if (*sweep) return cmd_werner_sweep(pmin, pmax, step, gnuplot, tol, out);
    if (*cls) return cmd_classify(spec, tol, out);
    if (*audit) {
      audit_opts.tolerance_scale = scale;
      return cmd_audit(audit_opts, out);
    }
    if (*iso) return cmd_iso_report(tol, scale, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace qsep::cli
