#include "vdwshock/cli/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace vdw::cli {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  for (int p = 1; p <= 12; ++p) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, p);
    if (ec != std::errc()) break;
    double back = 0.0;
    std::from_chars(buf, end, back);
    if (back == v || p == 12) return std::string(buf, end);
  }
  return "nan";
}

std::string fmt(std::optional<double> v) { return v ? fmt(*v) : std::string(); }

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("csv row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

}  // namespace vdw::cli
