#ifndef EXOBESSEL_SHARPNESS_HPP
#define EXOBESSEL_SHARPNESS_HPP

#include "exobessel/grid_function.hpp"
#include "exobessel/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exobessel {

// One theorem/lemma boundedness characterization. Each id carries its own
// nu-validity range; for the Hardy ids the "nu" slot holds the exponent xi.
enum class TheoremId {
    H0,        // Hardy operator at the origin, parameter xi
    Hinf,      // dual Hardy operator, parameter xi
    Hlog0,     // logarithmic Hardy variant at the origin (xi = 1)
    HlogInf,   // logarithmic dual variant (xi = -1)
    MaxWcls,   // classical heat maximal operator, nu > -1
    MaxWexo,   // exotic heat maximal operator, nu < 1
    PoissonExo,// exotic Poisson maximal operator, nu < 1
    Rcls,      // classical Riesz transform, nu > -1
    RclsStar,  // its adjoint
    Rexo,      // exotic Riesz transform, 0 != nu < 1/2
    RexoStar,  // its adjoint
    Rexob,     // exotic Riesz transform, 1/2 <= nu < 1
    RexobStar, // its adjoint
    Gcls,      // classical vertical g-function, nu > -1
    Gexo,      // exotic vertical g-function, nu < 1
    PotCls,    // classical Riesz potential, nu > -1, needs sigma
    PotExo,    // exotic Riesz potential, nu < 1, needs sigma
};

TheoremId theorem_from_string(const std::string& s);
std::string to_string(TheoremId id);
std::vector<TheoremId> all_theorems();

enum class Tri { holds, fails, open };

char tri_char(Tri t); // '1' / '0' / '?'

struct Verdict {
    Tri strong = Tri::fails;
    Tri weak = Tri::fails;
    Tri rwt = Tri::fails;
};

// Exact (nu, p, delta) -> Verdict predicate for one theorem; p may be
// infinity where the theorem has a strong-type (inf, inf) clause. The
// potential ids additionally need sigma and are read as boundedness
// L^p(x^delta dx) -> L^p(x^{delta - 2 sigma p} dx) (the q = p slice of the
// two-weight characterization).
Verdict classify(TheoremId id, double nu, double p, double delta,
                 std::optional<double> sigma = std::nullopt);

struct RegionCell {
    double p, delta;
    Verdict v;
};

struct RangeSpec {
    double lo, hi, step;
    std::vector<double> values() const;
};

RangeSpec parse_range(const std::string& s); // "lo:hi:step"

std::vector<RegionCell> scan_region(TheoremId id, double nu, const RangeSpec& p_range,
                                    const RangeSpec& delta_range,
                                    std::optional<double> sigma = std::nullopt);

std::string region_csv(const std::vector<RegionCell>& cells);

// Exotic/classical strong-type transference: classify(exo, nu, p, delta) ==
// classify(cls, -nu, p, delta - 2 nu p). Only the listed pairs are eligible;
// weak/rwt flavors are a contract error.
enum class TransferPair { MaxW, G, Pot };

bool transference_check(TransferPair pair, double nu, double p, double delta,
                        std::optional<double> sigma = std::nullopt);

// --- empirical boundary probes ----------------------------------------------

enum class CounterexampleFamily {
    EpsIndicatorL1,  // f_eps = chi_(1,1+eps): L^1 ratio grows like log(1/eps)
    TailWindowWeak,  // chi_(1,2) image ~ x^{-2} at infinity: weak norm on growing windows
    SmallXWindowWeak,// chi_(1,2) image ~ x^{-2nu} near zero: windows shrinking to zero
    LogTailWeak,     // H_0^{1,log} chi_(1,2) ~ x^{-2} log x: log-corrected tail growth
    LogSmallXWeak,   // H_inf^{-1,log} chi_(1,2) ~ x^{-1} log(1/x) near zero
    ClsSmallXRwt,    // W_* chi_(1,2) >~ 1 on (0,1): weight mass divergence for delta <= -1
};

CounterexampleFamily family_from_string(const std::string& s);
std::string to_string(CounterexampleFamily f);

enum class ProbeStatus { pass, fail, inconclusive };

struct ProbeResult {
    TheoremId id;
    CounterexampleFamily family;
    double nu, p, delta;
    std::string expected_law;
    std::vector<double> parameters; // family parameter sequence
    std::vector<double> observed;   // norm / ratio sequence
    double fitted_rate = 0.0;
    ProbeStatus status = ProbeStatus::inconclusive;
    std::string note;
};

// Runs one registered counterexample family against the predicate side it
// probes. Growth direction must match the classify verdict; an unclear fit
// reports `inconclusive`, never a silent pass.
ProbeResult probe_boundary(TheoremId id, double nu, double p, double delta,
                           CounterexampleFamily family,
                           const QuadratureConfig& cfg = {});

struct RegistryEntry {
    TheoremId id;
    CounterexampleFamily family;
    double nu, p, delta;
    std::string side; // which boundary/side of the theorem this probes
};

// The registered probe cases; families and growth laws come from the
// necessity arguments, nothing invented.
std::vector<RegistryEntry> probe_registry();

} // namespace exobessel

#endif
