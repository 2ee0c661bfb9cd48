#ifndef CHERNOFF_TABLE_HPP
#define CHERNOFF_TABLE_HPP

#include <string>
#include <vector>

namespace chernoff {

enum class TableFormat { Text, Csv, Markdown };

TableFormat parse_format(const std::string& s);

// Round-trip-stable significant-figure formatting ("%#.Ng" with the
// trailing decimal point stripped); ties round half to even.
std::string format_sig(double value, int digits);

// RFC-4180 field quoting: quotes only when the field contains a comma,
// quote, or newline.
std::string csv_field(const std::string& s);

struct OutputTable {
  std::string caption;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Text is space-aligned; Csv is RFC-4180 with LF line endings; Markdown
  // is a pipe table. All formats are byte-stable for identical inputs.
  std::string render(TableFormat format) const;
};

}  // namespace chernoff

#endif  // CHERNOFF_TABLE_HPP
