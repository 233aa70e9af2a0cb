#ifndef EXOBESSEL_CSV_HPP
#define EXOBESSEL_CSV_HPP

#include "exobessel/grid_function.hpp"

#include <string>
#include <utility>
#include <vector>

namespace exobessel {

// Reads a two-column CSV (x, value). A non-numeric first row is treated as a
// header and skipped, so `op` output feeds straight back into `norm`.
std::vector<std::pair<double, double>> read_xy_csv(const std::string& path);

GridFunction grid_function_from_csv(const std::string& path, Interp interp);

// "lo:hi:step" (arithmetic) or "lo:hi:countL" (log-spaced, count points)
std::vector<double> parse_xgrid(const std::string& spec);

} // namespace exobessel

#endif
