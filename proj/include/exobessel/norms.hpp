#ifndef EXOBESSEL_NORMS_HPP
#define EXOBESSEL_NORMS_HPP

#include "exobessel/grid_function.hpp"

#include <string>

namespace exobessel {

enum class NormFlavor { strong, weak, lorentz_p1 };

NormFlavor norm_flavor_from_string(const std::string& s);

// Divergence is decided by a power fit on the tail window when the support
// hint is unbounded; the numeric value is always the grid-extent quantity.
enum class NormFlag { finite, divergent, inconclusive };

struct NormResult {
    double value = 0.0;
    NormFlag flag = NormFlag::finite;
};

// (int |f|^p x^delta dx)^{1/p}; p = inf gives ess sup |f| (weight ignored).
NormResult lp_norm(const GridFunction& f, double p, double delta);

// sup_lambda lambda * m{|f| > lambda}^{1/p} with exact superlevel measures.
// lambda_grid only matters for inputs whose level sets are not piecewise
// linear (the node levels are always included exactly).
NormResult weak_lp_quasinorm(const GridFunction& f, double p, double delta,
                             int lambda_grid = 2000);

// int_0^inf m{|f| > lambda}^{1/p} d lambda.
NormResult lorentz_p1_norm(const GridFunction& f, double p, double delta,
                           int lambda_grid = 2000);

NormResult compute_norm(const GridFunction& f, double p, double delta,
                        NormFlavor flavor, int lambda_grid = 2000);

} // namespace exobessel

#endif
