#include "exobessel/csv.hpp"
#include "exobessel/sharpness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace exobessel {

std::vector<std::pair<double, double>> read_xy_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open csv: " + path);
    std::vector<std::pair<double, double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r")
            continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, v;
        if (ss >> x >> v) {
            rows.emplace_back(x, v);
        } else if (!first) {
            throw std::runtime_error("bad csv row: " + line);
        }
        first = false;
    }
    if (rows.size() < 2)
        throw std::runtime_error("csv needs at least two rows: " + path);
    std::sort(rows.begin(), rows.end());
    return rows;
}

GridFunction grid_function_from_csv(const std::string& path, Interp interp) {
    const auto rows = read_xy_csv(path);
    std::vector<double> xs, vs;
    xs.reserve(rows.size());
    vs.reserve(rows.size());
    for (const auto& [x, v] : rows) {
        xs.push_back(x);
        vs.push_back(v);
    }
    return GridFunction(std::move(xs), std::move(vs), interp);
}

std::vector<double> parse_xgrid(const std::string& spec) {
    if (!spec.empty() && (spec.back() == 'L' || spec.back() == 'l')) {
        const RangeSpec r = parse_range(spec.substr(0, spec.size() - 1));
        return logspace(r.lo, r.hi, static_cast<int>(r.step));
    }
    return parse_range(spec).values();
}

} // namespace exobessel
