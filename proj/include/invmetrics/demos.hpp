#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invmetrics::demos {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Whether the data reproduces the phenomenon the demo is about.
  bool holds = false;
  std::string summary;
};

/// nonusc, regularization, increasing, chain, balanced, hartogs-gap.
const std::vector<std::string>& demo_names();

/// Throws InvalidInput for an unknown name.
Table run_demo(const std::string& name);

Table nonusc();
Table regularization();
Table increasing();
Table chain();
Table balanced();
Table hartogs_gap();

/// %.17g
std::string format_number(double v);

/// Header plus rows, comma separated, LF line endings.
void write_csv(std::ostream& os, const Table& t);

}  // namespace invmetrics::demos
