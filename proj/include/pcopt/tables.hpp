#pragma once

#include <string>
#include <vector>

namespace pcopt {

// One reproduced value: the constructive result, the exhaustive optimum and
// the closed-form expectation side by side.
struct TableRow {
  std::string family;
  std::string params;
  std::string objective; // "opt" or "prime"
  std::string method;    // construction behind the constructive column
  int constructive = 0;
  int exact = 0;
  int expected = 0;
  bool match = false;
};

std::vector<TableRow> known_value_rows();

std::string rows_to_csv(const std::vector<TableRow> &rows);
std::string rows_to_text(const std::vector<TableRow> &rows);

} // namespace pcopt
