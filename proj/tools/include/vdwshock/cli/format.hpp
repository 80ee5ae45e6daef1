#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vdw::cli {

// Shortest representation with at most 12 significant digits.
std::string fmt(double v);
std::string fmt(std::optional<double> v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::size_t width_;
  std::string out_;
};

}  // namespace vdw::cli
