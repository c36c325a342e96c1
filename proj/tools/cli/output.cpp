// Copyright 2026 The chessfad Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/output.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "cli/config.hpp"

namespace chessfad::cli {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

void write_csv_row(std::ostream& os, std::span<const std::string> fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) os << ',';
    os << csv_field(fields[k]);
  }
  os << '\n';
}

void write_csv_row(std::ostream& os, std::span<const double> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) os << ',';
    os << format_double(values[k]);
  }
  os << '\n';
}

OutputSink::OutputSink(std::ostream& fallback, const std::string& path, bool append) : os_(&fallback) {
  if (path.empty() || path == "-") return;
  std::error_code ec;
  if (append && std::filesystem::file_size(path, ec) > 0 && !ec) fresh_ = false;
  file_.open(path, append ? std::ios::app : std::ios::trunc);
  if (!file_) throw ConfigError("cannot open " + path + " for writing");
  os_ = &file_;
}

}  // namespace chessfad::cli
