#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mixprior {

// %.17g, with inf/-inf/nan spelled out.
std::string format_double(double x);

// Quotes a CSV field when it holds a comma, quote, CR or LF; embedded quotes
// are doubled.
std::string csv_field(std::string_view text);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace mixprior
