#pragma once

#include "fitraffic/harness.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

namespace fitraffic {

// CSV output: comma separated, '.' decimal point, LF line endings, reals
// with 12 significant digits. Metadata goes on leading "# key=value" lines.

std::string format_real(double x);
std::string init_mode_name(InitMode mode);

void write_csv(std::ostream& out, const FlowSeries& series);
void write_csv(std::ostream& out, const EnsembleStats& stats);
void write_csv(std::ostream& out, const DiagramTable& table);
void write_csv(std::ostream& out, const PreimageReport& report);

/// Writes through `fill` into a temporary file next to `path`, then renames
/// it over `path`. Throws std::runtime_error on any I/O failure; the target
/// is left untouched in that case.
void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& fill);

}  // namespace fitraffic
