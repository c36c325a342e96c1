// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chessfad::cli {

/// %.17g, so every double round-trips through text.
std::string format_double(double v);

/// RFC 4180: quote fields holding commas, quotes or line breaks.
std::string csv_field(std::string_view s);
void write_csv_row(std::ostream& os, std::span<const std::string> fields);
void write_csv_row(std::ostream& os, std::span<const double> values);

/// stdout, or a file opened for truncation or appending.
class OutputSink {
 public:
  OutputSink(std::ostream& fallback, const std::string& path, bool append);

  std::ostream& stream() { return *os_; }
  /// True unless appending to a file that already has content.
  bool fresh() const { return fresh_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
  bool fresh_ = true;
};

}  // namespace chessfad::cli
