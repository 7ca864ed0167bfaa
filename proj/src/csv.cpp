#include "fitraffic/csv.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace fitraffic {

namespace {

void write_meta(std::ostream& out, const SeriesMeta& meta) {
  fmt::print(out, "# L={}\n# m={}\n# rho_requested={}\n# rho_actual={}\n# seed={}\n# init={}\n# T_max={}\n",
             meta.length, meta.max_speed, format_real(meta.rho_requested), format_real(meta.rho_actual), meta.seed,
             init_mode_name(meta.init), meta.t_max);
}

}  // namespace

std::string format_real(double x) {
  // Avoid "-0" for values that cancel to negative zero.
  return fmt::format("{:.12g}", x == 0.0 ? 0.0 : x);
}

std::string init_mode_name(InitMode mode) {
  return mode == InitMode::exact_count ? "exact" : "bernoulli";
}

void write_csv(std::ostream& out, const FlowSeries& series) {
  write_meta(out, series.meta);
  out << "t,flow_measured,flow_exact\n";
  for (const FlowRow& row : series.rows) {
    fmt::print(out, "{},{},{}\n", row.t, format_real(row.flow_measured), format_real(row.flow_exact));
  }
}

void write_csv(std::ostream& out, const EnsembleStats& stats) {
  write_meta(out, stats.meta);
  fmt::print(out, "# runs={}\n", stats.runs);
  out << "t,flow_mean,flow_stderr,flow_min,flow_max,flow_exact\n";
  for (const EnsembleRow& row : stats.rows) {
    fmt::print(out, "{},{},{},{},{},{}\n", row.t, format_real(row.mean), format_real(row.std_error),
               format_real(row.min), format_real(row.max), format_real(row.flow_exact));
  }
}

void write_csv(std::ostream& out, const DiagramTable& table) {
  fmt::print(out, "# m={}\n# t={}\n# points={}\n", table.max_speed, table.time, table.rows.size());
  out << (table.has_measured ? "rho,P_exact,flow_exact,flow_measured,stderr\n" : "rho,P_exact,flow_exact\n");
  for (const DiagramRow& row : table.rows) {
    fmt::print(out, "{},{},{}", format_real(row.rho), format_real(row.p_exact), format_real(row.flow_exact));
    if (table.has_measured) {
      fmt::print(out, ",{},{}", format_real(row.flow_measured.value_or(0.0)), format_real(row.std_error.value_or(0.0)));
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const PreimageReport& report) {
  fmt::print(out, "# m={}, n={}\ntotal,preimages,mismatches\n{},{},{}\n", report.max_speed, report.steps,
             report.total, report.preimages, report.mismatches);
}

void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& fill) {
  namespace fs = std::filesystem;
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
    }
    fill(out);
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw std::runtime_error("write to '" + temp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace fitraffic
