#include "exobessel/config.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace exobessel {

Config Config::from_file(const std::string& path) {
    Config c;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty())
            c.set(key, val);
    }
    return c;
}

void Config::set(const std::string& key, const std::string& value) {
    if (key == "quad_abs_tol")
        quadrature.abs_tol = std::stod(value);
    else if (key == "quad_rel_tol")
        quadrature.rel_tol = std::stod(value);
    else if (key == "quad_max_subdivisions")
        quadrature.max_subdivisions = std::stoi(value);
    else if (key == "tgrid_min")
        time_grid = TimeGrid(std::stod(value), time_grid.t_max, time_grid.count);
    else if (key == "tgrid_max")
        time_grid = TimeGrid(time_grid.t_min, std::stod(value), time_grid.count);
    else if (key == "tgrid_count")
        time_grid = TimeGrid(time_grid.t_min, time_grid.t_max, std::stoi(value));
    else if (key == "lambda_grid_size")
        lambda_grid_size = std::stoi(value);
    else if (key == "output_precision")
        output_precision = std::stoi(value);
    else
        throw std::runtime_error("config: unknown key " + key);
}

int thread_count() {
    const char* env = std::getenv("EXOBESSEL_THREADS");
    if (!env)
        return 1;
    const int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

} // namespace exobessel
