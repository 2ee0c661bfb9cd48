#include "chernoff/table.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace chernoff {

TableFormat parse_format(const std::string& s) {
  if (s == "text") return TableFormat::Text;
  if (s == "csv") return TableFormat::Csv;
  if (s == "md") return TableFormat::Markdown;
  throw std::invalid_argument("unknown format '" + s +
                              "' (expected text|csv|md)");
}

std::string format_sig(double value, int digits) {
  if (digits < 1 || digits > 17) {
    throw std::invalid_argument("significant digits must be in [1, 17]");
  }
  char buf[48];
  // Alternate form keeps trailing zeros so a fixed significant-figure
  // column stays aligned ("0.1780", not "0.178"). Binary-to-decimal
  // conversion rounds to nearest, ties to even.
  std::snprintf(buf, sizeof buf, "%#.*g", digits, value);
  std::string s(buf);
  if (!s.empty() && s.back() == '.') {
    s.pop_back();
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string OutputTable::render(TableFormat format) const {
  std::string out;
  switch (format) {
    case TableFormat::Text: {
      std::vector<std::size_t> width(columns.size(), 0);
      for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
        for (const auto& row : rows) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      if (!caption.empty()) {
        out += caption;
        out += '\n';
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out += cells[c];
          if (c + 1 < cells.size()) {
            out.append(width[c] - cells[c].size() + 2, ' ');
          }
        }
        out += '\n';
      };
      emit(columns);
      for (const auto& row : rows) emit(row);
      break;
    }
    case TableFormat::Csv: {
      auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) out += ',';
          out += csv_field(cells[c]);
        }
        out += '\n';
      };
      emit(columns);
      for (const auto& row : rows) emit(row);
      break;
    }
    case TableFormat::Markdown: {
      auto emit = [&](const std::vector<std::string>& cells) {
        out += '|';
        for (const auto& cell : cells) {
          out += ' ';
          out += cell;
          out += " |";
        }
        out += '\n';
      };
      emit(columns);
      out += '|';
      for (std::size_t c = 0; c < columns.size(); ++c) {
        out += " --- |";
      }
      out += '\n';
      for (const auto& row : rows) emit(row);
      break;
    }
  }
  return out;
}

}  // namespace chernoff
