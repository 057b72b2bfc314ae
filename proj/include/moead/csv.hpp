#ifndef MOEAD_CSV_HPP_
#define MOEAD_CSV_HPP_

#include <string>
#include <vector>

#include "moead/core.hpp"

namespace moead {

/// Numeric CSV with a header row. Values are written with 17 significant
/// digits so round trips are bit-exact.
struct CsvTable {
  std::vector<std::string> header;
  Mat rows;
};

std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Mat& rows);

/// Throws std::runtime_error on missing files, non-numeric cells or ragged
/// rows.
CsvTable read_csv(const std::string& path);

}  // namespace moead

#endif  // MOEAD_CSV_HPP_
