#ifndef EXOBESSEL_CONFIG_HPP
#define EXOBESSEL_CONFIG_HPP

#include "exobessel/grid_function.hpp"
#include "exobessel/quadrature.hpp"

#include <string>

namespace exobessel {

// Runtime configuration, loadable from a flat key=value file and
// overridable by CLI flags.
struct Config {
    QuadratureConfig quadrature;
    TimeGrid time_grid;          // defaults: logspace(1e-6, 1e6, 4000)
    int lambda_grid_size = 2000;
    int output_precision = 15;

    static Config from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
};

// Worker count for region scans and verify suites; reads EXOBESSEL_THREADS,
// defaults to 1.
int thread_count();

// Runs fn(i) for i in [0, n) on thread_count() workers; results must be
// written to pre-sized slots so ordering stays canonical.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace exobessel

#endif
