#include "exobessel/sharpness.hpp"
#include "exobessel/errors.hpp"
#include "exobessel/norms.hpp"
#include "exobessel/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace exobessel {

namespace {

bool feq(double a, double b) {
    return std::abs(a - b) <= 1e-11 * std::max({1.0, std::abs(a), std::abs(b)});
}

// boundary-snapped comparisons: a grid cell within 1e-11 of a theorem line is
// treated as exactly on it, which keeps the transference conjugation an exact
// algebraic identity under floating-point delta-shifts
bool lt(double a, double b) { return !feq(a, b) && a < b; }
bool le(double a, double b) { return feq(a, b) || a < b; }

Tri tri(bool b) { return b ? Tri::holds : Tri::fails; }

Verdict uniform(bool b) {
    return {tri(b), tri(b), tri(b)};
}

[[noreturn]] void bad_range(const char* what) {
    throw std::domain_error(std::string("classify: ") + what);
}

} // namespace

TheoremId theorem_from_string(const std::string& s) {
    for (TheoremId id : all_theorems())
        if (to_string(id) == s)
            return id;
    throw std::domain_error("unknown theorem id: " + s);
}

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::H0: return "H0";
        case TheoremId::Hinf: return "Hinf";
        case TheoremId::Hlog0: return "Hlog0";
        case TheoremId::HlogInf: return "HlogInf";
        case TheoremId::MaxWcls: return "MaxWcls";
        case TheoremId::MaxWexo: return "MaxWexo";
        case TheoremId::PoissonExo: return "PoissonExo";
        case TheoremId::Rcls: return "Rcls";
        case TheoremId::RclsStar: return "RclsStar";
        case TheoremId::Rexo: return "Rexo";
        case TheoremId::RexoStar: return "RexoStar";
        case TheoremId::Rexob: return "Rexob";
        case TheoremId::RexobStar: return "RexobStar";
        case TheoremId::Gcls: return "Gcls";
        case TheoremId::Gexo: return "Gexo";
        case TheoremId::PotCls: return "PotCls";
        case TheoremId::PotExo: return "PotExo";
    }
    return "?";
}

std::vector<TheoremId> all_theorems() {
    return {TheoremId::H0,      TheoremId::Hinf,      TheoremId::Hlog0,
            TheoremId::HlogInf, TheoremId::MaxWcls,   TheoremId::MaxWexo,
            TheoremId::PoissonExo, TheoremId::Rcls,   TheoremId::RclsStar,
            TheoremId::Rexo,    TheoremId::RexoStar,  TheoremId::Rexob,
            TheoremId::RexobStar, TheoremId::Gcls,    TheoremId::Gexo,
            TheoremId::PotCls,  TheoremId::PotExo};
}

char tri_char(Tri t) {
    switch (t) {
        case Tri::holds: return '1';
        case Tri::fails: return '0';
        case Tri::open: return '?';
    }
    return '?';
}

namespace {

Verdict classify_maxwcls(double nu, double p, double delta) {
    if (!(nu > -1.0))
        bad_range("MaxWcls needs nu > -1");
    if (std::isinf(p))
        return uniform(true); // strong type (inf, inf) always
    const double up = (2.0 * nu + 2.0) * p - 1.0;
    Verdict v;
    v.strong = tri(p > 1.0 && lt(-1.0, delta) && lt(delta, up));
    v.weak = tri(lt(-1.0, delta) && (feq(p, 1.0) ? le(delta, up) : lt(delta, up)));
    v.rwt = tri(lt(-1.0, delta) && le(delta, up));
    return v;
}

Verdict classify_maxwexo(double nu, double p, double delta) {
    if (!(nu < 1.0))
        bad_range("MaxWexo needs nu < 1");
    if (nu == 0.0) // settings coincide; boundary clauses follow the classical form
        return classify_maxwcls(0.0, p, delta);
    if (std::isinf(p))
        return uniform(nu < 0.0);
    const double lo = 2.0 * nu * p - 1.0, up = 2.0 * p - 1.0;
    Verdict v;
    v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
    v.weak = tri(le(lo, delta) && (feq(p, 1.0) ? le(delta, up) : lt(delta, up)));
    v.rwt = tri(le(lo, delta) && le(delta, up));
    return v;
}

Verdict classify_gcls(double nu, double p, double delta) {
    if (!(nu > -1.0))
        bad_range("Gcls needs nu > -1");
    if (std::isinf(p))
        bad_range("Gcls has no p = inf statement");
    const double up = (2.0 * nu + 2.0) * p - 1.0;
    Verdict v;
    v.strong = tri(p > 1.0 && lt(-1.0, delta) && lt(delta, up));
    v.weak = tri(lt(-1.0, delta) && (feq(p, 1.0) ? le(delta, up) : lt(delta, up)));
    v.rwt = tri(lt(-1.0, delta) && le(delta, up));
    return v;
}

Verdict classify_gexo(double nu, double p, double delta) {
    if (!(nu < 1.0))
        bad_range("Gexo needs nu < 1");
    if (nu == 0.0)
        return classify_gcls(0.0, p, delta);
    if (std::isinf(p))
        bad_range("Gexo has no p = inf statement");
    const double lo = 2.0 * nu * p - 1.0, up = 2.0 * p - 1.0;
    Verdict v;
    v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
    if (feq(p, 1.0)) {
        v.weak = tri(le(lo, delta) && le(delta, up));
    } else if (lt(lo, delta) && lt(delta, up)) {
        v.weak = Tri::holds;
    } else if (feq(delta, lo)) {
        v.weak = Tri::open; // the one unresolved endpoint
    } else {
        v.weak = Tri::fails;
    }
    v.rwt = tri(le(lo, delta) && le(delta, up));
    return v;
}

Verdict classify_potential(bool exotic, double nu, double p, double delta,
                           std::optional<double> sigma_opt) {
    if (!sigma_opt)
        bad_range("potential ids need sigma");
    const double sigma = *sigma_opt;
    if (exotic) {
        if (!(nu < 1.0))
            bad_range("PotExo needs nu < 1");
        if (!(sigma > 0.0 && sigma < -nu + 1.0))
            bad_range("PotExo needs 0 < sigma < -nu+1");
    } else {
        if (!(nu > -1.0))
            bad_range("PotCls needs nu > -1");
        if (!(sigma > 0.0 && sigma < nu + 1.0))
            bad_range("PotCls needs 0 < sigma < nu+1");
    }
    if (std::isinf(p))
        bad_range("potential ids are classified for finite p only");
    // q = p slice: boundedness L^p(x^delta dx) -> L^p(x^{delta - 2 sigma p} dx),
    // i.e. A = (delta - 2nu - 1)/p and B = 2 sigma - A (condition (b) holds by
    // construction, conditions (a), (e) are automatic for q = p).
    const double A = (delta - 2.0 * nu - 1.0) / p;
    const double B = 2.0 * sigma - A;
    const double pprime = p == 1.0 ? std::numeric_limits<double>::infinity()
                                   : p / (p - 1.0);
    const double shift = exotic ? 2.0 * nu : 0.0;
    const double climit = (2.0 * nu + 2.0) / pprime - shift;
    const double dlimit = (2.0 * nu + 2.0) / p - shift;
    const bool ok = lt(A, climit) && lt(B, dlimit);
    return uniform(ok);
}

} // namespace

Verdict classify(TheoremId id, double nu, double p, double delta,
                 std::optional<double> sigma) {
    const bool pinf = std::isinf(p);
    if (!pinf && !(p >= 1.0))
        bad_range("need p >= 1");

    switch (id) {
        case TheoremId::H0: {
            const double xi = nu;
            if (pinf)
                return uniform(xi > -1.0);
            const double up = (xi + 1.0) * p - 1.0;
            Verdict v;
            v.strong = tri(lt(delta, up));
            v.weak = tri(feq(p, 1.0) && !feq(xi, -1.0) ? le(delta, up) : lt(delta, up));
            v.rwt = tri(feq(xi, -1.0) ? lt(delta, up) : le(delta, up));
            return v;
        }
        case TheoremId::Hinf: {
            const double xi = nu;
            if (pinf)
                return uniform(xi > 0.0);
            const double lo = -xi * p - 1.0;
            Verdict v;
            v.strong = tri(lt(lo, delta));
            v.weak = tri(feq(p, 1.0) && !feq(xi, 0.0) ? le(lo, delta) : lt(lo, delta));
            v.rwt = tri(feq(xi, 0.0) ? lt(lo, delta) : le(lo, delta));
            return v;
        }
        case TheoremId::Hlog0: {
            if (pinf)
                bad_range("Hlog0 has no p = inf statement");
            return uniform(lt(delta, 2.0 * p - 1.0));
        }
        case TheoremId::HlogInf: {
            if (pinf)
                bad_range("HlogInf has no p = inf statement");
            return uniform(lt(p - 1.0, delta));
        }
        case TheoremId::MaxWcls:
            return classify_maxwcls(nu, p, delta);
        case TheoremId::MaxWexo:
            return classify_maxwexo(nu, p, delta);
        case TheoremId::PoissonExo:
            return classify_maxwexo(nu, p, delta);
        case TheoremId::Rcls: {
            if (!(nu > -1.0))
                bad_range("Rcls needs nu > -1");
            if (pinf)
                bad_range("Rcls has no p = inf statement");
            const double lo = -1.0 - p, up = (2.0 * nu + 2.0) * p - 1.0;
            Verdict v;
            v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
            v.weak = tri(feq(p, 1.0) ? (le(lo, delta) && le(delta, up))
                                     : (lt(lo, delta) && lt(delta, up)));
            v.rwt = tri(le(lo, delta) && le(delta, up));
            return v;
        }
        case TheoremId::RclsStar: {
            if (!(nu > -1.0))
                bad_range("RclsStar needs nu > -1");
            if (pinf)
                bad_range("RclsStar has no p = inf statement");
            const double up = (2.0 * nu + 3.0) * p - 1.0;
            Verdict v;
            v.strong = tri(p > 1.0 && lt(-1.0, delta) && lt(delta, up));
            v.weak = tri(lt(-1.0, delta) && (feq(p, 1.0) ? le(delta, up) : lt(delta, up)));
            v.rwt = tri(lt(-1.0, delta) && le(delta, up));
            return v;
        }
        case TheoremId::Rexo: {
            if (!(nu != 0.0 && nu < 0.5))
                bad_range("Rexo needs 0 != nu < 1/2");
            if (pinf)
                bad_range("Rexo has no p = inf statement");
            const double lo = (2.0 * nu + 1.0) * p - 1.0, up = 2.0 * p - 1.0;
            Verdict v;
            v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
            const bool wlo = (feq(p, 1.0) && !feq(nu, -0.5)) ? le(lo, delta) : lt(lo, delta);
            const bool wup = feq(p, 1.0) ? le(delta, up) : lt(delta, up);
            v.weak = tri(wlo && wup);
            const bool rlo = feq(nu, -0.5) ? lt(lo, delta) : le(lo, delta);
            v.rwt = tri(rlo && le(delta, up));
            return v;
        }
        case TheoremId::RexoStar: {
            if (!(nu != 0.0 && nu < 0.5))
                bad_range("RexoStar needs 0 != nu < 1/2");
            if (pinf)
                bad_range("RexoStar has no p = inf statement");
            const double lo = 2.0 * nu * p - 1.0, up = p - 1.0;
            Verdict v;
            v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
            v.weak = tri(feq(p, 1.0) ? (le(lo, delta) && le(delta, up))
                                     : (lt(lo, delta) && lt(delta, up)));
            v.rwt = tri(le(lo, delta) && le(delta, up));
            return v;
        }
        case TheoremId::Rexob: {
            if (!(nu >= 0.5 && nu < 1.0))
                bad_range("Rexob needs 1/2 <= nu < 1");
            if (pinf)
                bad_range("Rexob has no p = inf statement");
            const double lo = (2.0 * nu - 1.0) * p - 1.0, up = 2.0 * p - 1.0;
            Verdict v;
            v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
            const bool weaken = feq(p, 1.0) && !feq(nu, 0.5);
            v.weak = tri(weaken ? (le(lo, delta) && le(delta, up))
                                : (lt(lo, delta) && lt(delta, up)));
            v.rwt = tri(feq(nu, 0.5) ? (lt(lo, delta) && lt(delta, up))
                                     : (le(lo, delta) && le(delta, up)));
            return v;
        }
        case TheoremId::RexobStar: {
            if (!(nu >= 0.5 && nu < 1.0))
                bad_range("RexobStar needs 1/2 <= nu < 1");
            if (pinf)
                bad_range("RexobStar has no p = inf statement");
            const double lo = 2.0 * nu * p - 1.0, up = 3.0 * p - 1.0;
            Verdict v;
            v.strong = tri(p > 1.0 && lt(lo, delta) && lt(delta, up));
            const bool wlo = (feq(p, 1.0) && !feq(nu, 0.5)) ? le(lo, delta) : lt(lo, delta);
            const bool wup = feq(p, 1.0) ? le(delta, up) : lt(delta, up);
            v.weak = tri(wlo && wup);
            const bool rlo = feq(nu, 0.5) ? lt(lo, delta) : le(lo, delta);
            v.rwt = tri(rlo && le(delta, up));
            return v;
        }
        case TheoremId::Gcls:
            return classify_gcls(nu, p, delta);
        case TheoremId::Gexo:
            return classify_gexo(nu, p, delta);
        case TheoremId::PotCls:
            return classify_potential(false, nu, p, delta, sigma);
        case TheoremId::PotExo:
            return classify_potential(true, nu, p, delta, sigma);
    }
    bad_range("unknown theorem id");
}

std::vector<double> RangeSpec::values() const {
    if (!(step > 0.0) || hi < lo)
        throw std::domain_error("RangeSpec: need step > 0 and hi >= lo");
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = lo + i * step;
    return out;
}

RangeSpec parse_range(const std::string& s) {
    RangeSpec r{};
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::domain_error("range spec must be lo:hi:step, got " + s);
    r.lo = std::stod(s.substr(0, c1));
    r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    r.step = std::stod(s.substr(c2 + 1));
    return r;
}

std::vector<RegionCell> scan_region(TheoremId id, double nu, const RangeSpec& p_range,
                                    const RangeSpec& delta_range,
                                    std::optional<double> sigma) {
    std::vector<RegionCell> out;
    for (double p : p_range.values())
        for (double d : delta_range.values())
            out.push_back({p, d, classify(id, nu, p, d, sigma)});
    return out;
}

std::string region_csv(const std::vector<RegionCell>& cells) {
    std::string out = "p,delta,strong,weak,rwt\n";
    char buf[128];
    for (const auto& c : cells) {
        std::snprintf(buf, sizeof(buf), "%.15g,%.15g,%c,%c,%c\n", c.p, c.delta,
                      tri_char(c.v.strong), tri_char(c.v.weak), tri_char(c.v.rwt));
        out += buf;
    }
    return out;
}

bool transference_check(TransferPair pair, double nu, double p, double delta,
                        std::optional<double> sigma) {
    TheoremId exo = TheoremId::MaxWexo, cls = TheoremId::MaxWcls;
    switch (pair) {
        case TransferPair::MaxW: break;
        case TransferPair::G: exo = TheoremId::Gexo; cls = TheoremId::Gcls; break;
        case TransferPair::Pot: exo = TheoremId::PotExo; cls = TheoremId::PotCls; break;
    }
    const Tri a = classify(exo, nu, p, delta, sigma).strong;
    const Tri b = classify(cls, -nu, p, delta - 2.0 * nu * p, sigma).strong;
    return a == b;
}

// --- probes -----------------------------------------------------------------

namespace {

std::string family_name(CounterexampleFamily f) {
    switch (f) {
        case CounterexampleFamily::EpsIndicatorL1: return "EpsIndicatorL1";
        case CounterexampleFamily::TailWindowWeak: return "TailWindowWeak";
        case CounterexampleFamily::SmallXWindowWeak: return "SmallXWindowWeak";
        case CounterexampleFamily::LogTailWeak: return "LogTailWeak";
        case CounterexampleFamily::LogSmallXWeak: return "LogSmallXWeak";
        case CounterexampleFamily::ClsSmallXRwt: return "ClsSmallXRwt";
    }
    return "?";
}

double ls_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
    const int n = static_cast<int>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// evaluate op(x) on a log grid, return as a linear GridFunction
GridFunction tabulate(const std::function<double(double)>& op, double lo, double hi,
                      int n) {
    std::vector<double> xs = logspace(lo, hi, n), vs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        vs[i] = op(xs[i]);
    return GridFunction(std::move(xs), std::move(vs), Interp::linear);
}

GridFunction restrict_grid(const GridFunction& g, double lo, double hi) {
    std::vector<double> xs, vs;
    for (size_t i = 0; i < g.abscissae().size(); ++i) {
        const double x = g.abscissae()[i];
        if (x >= lo && x <= hi) {
            xs.push_back(x);
            vs.push_back(g.values()[i]);
        }
    }
    return GridFunction(std::move(xs), std::move(vs), g.interpolation());
}

std::function<double(double)> probe_operator(TheoremId id, double nu,
                                             const GridFunction& f,
                                             const QuadratureConfig& cfg) {
    switch (id) {
        case TheoremId::MaxWcls: {
            const TimeGrid tg(0.05, 64.0, 48);
            return [=, &f, &cfg](double x) {
                return heat_maximal(Setting::cls, nu, f, x, tg, cfg);
            };
        }
        case TheoremId::MaxWexo: {
            const TimeGrid tg(1e-4, 2e4, 140);
            return [=, &f, &cfg](double x) {
                return heat_maximal(Setting::exo, nu, f, x, tg, cfg);
            };
        }
        case TheoremId::PoissonExo: {
            const TimeGrid tg(1e-2, 2e3, 48);
            return [=, &f, &cfg](double x) {
                return poisson_maximal(nu, f, x, tg, cfg);
            };
        }
        case TheoremId::Gexo: {
            const TimeGrid tg(1e-5, 1e6, 40);
            return [=, &f, &cfg](double x) {
                return g_function(Setting::exo, nu, f, x, tg, cfg);
            };
        }
        case TheoremId::Hlog0:
            return [&f](double x) { return hardy(HardyKind::H0log, 1.0, 1.0, f, x); };
        case TheoremId::HlogInf:
            return [&f](double x) { return hardy(HardyKind::Hinflog, -1.0, 1.0, f, x); };
        default:
            throw std::domain_error("probe_boundary: no operator wired for this id");
    }
}

} // namespace

CounterexampleFamily family_from_string(const std::string& s) {
    for (auto f : {CounterexampleFamily::EpsIndicatorL1, CounterexampleFamily::TailWindowWeak,
                   CounterexampleFamily::SmallXWindowWeak, CounterexampleFamily::LogTailWeak,
                   CounterexampleFamily::LogSmallXWeak, CounterexampleFamily::ClsSmallXRwt})
        if (family_name(f) == s)
            return f;
    throw std::domain_error("unknown counterexample family: " + s);
}

std::string to_string(CounterexampleFamily f) { return family_name(f); }

ProbeResult probe_boundary(TheoremId id, double nu, double p, double delta,
                           CounterexampleFamily family, const QuadratureConfig& cfg) {
    ProbeResult out;
    out.id = id;
    out.family = family;
    out.nu = nu;
    out.p = p;
    out.delta = delta;

    if (family == CounterexampleFamily::EpsIndicatorL1) {
        if (p != 1.0)
            throw std::domain_error("EpsIndicatorL1 probes the (1,1) norm ratio");
        out.expected_law = "||Op f_eps||_1 / ||f_eps||_1 ~ log(1/eps)";
        const TimeGrid tg(1e-5, 1e2, 120);
        for (double eps : {0.1, 0.05, 0.02, 0.01}) {
            const GridFunction feps = GridFunction::indicator(1.0, 1.0 + eps);
            // x-grid clustered at the blow-up window (1, 2)
            std::vector<double> xs;
            for (double x : logspace(0.05, 6.0, 48))
                xs.push_back(x);
            for (double u : logspace(eps / 4.0, 1.0, 40))
                xs.push_back(1.0 + u);
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            std::vector<double> vs(xs.size());
            for (size_t i = 0; i < xs.size(); ++i)
                vs[i] = id == TheoremId::PoissonExo
                            ? poisson_maximal(nu, feps, xs[i], tg, cfg)
                            : heat_maximal(Setting::exo, nu, feps, xs[i], tg, cfg);
            const GridFunction img(std::move(xs), std::move(vs), Interp::linear);
            const double num = lp_norm(img, 1.0, delta).value;
            const double den = power_primitive(1.0, 1.0 + eps, delta);
            out.parameters.push_back(eps);
            out.observed.push_back(num / den);
        }
        // ratio / log(1/eps) must stay within +-25% of its central value
        std::vector<double> qs;
        double qbar = 0.0;
        for (size_t i = 0; i < out.observed.size(); ++i) {
            qs.push_back(out.observed[i] / std::log(1.0 / out.parameters[i]));
            qbar += qs.back();
        }
        qbar /= static_cast<double>(qs.size());
        double dev = 0.0;
        for (double q : qs)
            dev = std::max(dev, std::abs(q / qbar - 1.0));
        out.fitted_rate = dev;
        out.status = dev < 0.25 ? ProbeStatus::pass : ProbeStatus::fail;
        out.note = "max deviation from central value " + std::to_string(dev);
        return out;
    }

    // window-growth families; shared machinery
    const GridFunction f = GridFunction::indicator(1.0, 2.0);
    struct WindowPlan {
        double grid_lo, grid_hi;
        std::vector<double> windows; // window edge moving away from the bulk
        bool toward_zero;
        int n;
    };
    WindowPlan plan;
    switch (family) {
        case CounterexampleFamily::TailWindowWeak:
            plan = {2.2, 80.0, {10.0, 20.0, 40.0, 80.0}, false, 56};
            break;
        case CounterexampleFamily::SmallXWindowWeak:
            plan = {0.02, 0.8, {0.2, 0.1, 0.05, 0.02}, true, 56};
            break;
        case CounterexampleFamily::LogTailWeak:
            plan = {2.2, 1e5, {1e2, 1e3, 1e4, 1e5}, false, 96};
            break;
        case CounterexampleFamily::LogSmallXWeak:
            plan = {1e-5, 0.9, {1e-2, 1e-3, 1e-4, 1e-5}, true, 96};
            break;
        case CounterexampleFamily::ClsSmallXRwt:
            plan = {0.02, 0.9, {0.2, 0.1, 0.05, 0.02}, true, 48};
            break;
        default:
            throw std::domain_error("unhandled family");
    }

    const auto op = probe_operator(id, nu, f, cfg);
    const GridFunction img = tabulate(op, plan.grid_lo, plan.grid_hi, plan.n);

    std::vector<double> lx, ly;
    for (double w : plan.windows) {
        const GridFunction win = plan.toward_zero ? restrict_grid(img, w, plan.grid_hi)
                                                  : restrict_grid(img, plan.grid_lo, w);
        const double q = weak_lp_quasinorm(win, p, delta).value;
        out.parameters.push_back(w);
        out.observed.push_back(q);
        lx.push_back(plan.toward_zero ? std::log(1.0 / w) : std::log(w));
        ly.push_back(std::log(std::max(q, 1e-300)));
    }
    const double alpha = ls_slope(lx, ly);
    out.fitted_rate = alpha;

    // the probed flavor is restricted weak type; growth on the fails side,
    // boundedness on the holds side
    const Tri verdict = classify(id, nu, p, delta).rwt;
    const bool expect_growth = verdict == Tri::fails;
    out.expected_law = expect_growth ? "quasinorm grows without bound"
                                     : "quasinorm stays bounded";
    constexpr double grow_thresh = 0.04, flat_thresh = 0.02;
    if (alpha > grow_thresh)
        out.status = expect_growth ? ProbeStatus::pass : ProbeStatus::fail;
    else if (alpha < flat_thresh)
        out.status = expect_growth ? ProbeStatus::fail : ProbeStatus::pass;
    else
        out.status = ProbeStatus::inconclusive;
    out.note = "fit exponent " + std::to_string(alpha);
    return out;
}

std::vector<RegistryEntry> probe_registry() {
    using F = CounterexampleFamily;
    return {
        {TheoremId::MaxWexo, F::EpsIndicatorL1, -0.5, 1.0, 0.0, "strong (1,1) fails, log rate"},
        {TheoremId::MaxWexo, F::EpsIndicatorL1, 0.5, 1.0, 0.0, "strong (1,1) fails, log rate"},
        {TheoremId::MaxWexo, F::TailWindowWeak, -0.5, 2.0, 4.0, "rwt fails for delta > 2p-1"},
        {TheoremId::MaxWexo, F::TailWindowWeak, -0.5, 2.0, 3.0, "boundary delta = 2p-1 stays bounded"},
        {TheoremId::MaxWexo, F::SmallXWindowWeak, 0.5, 2.0, 0.5, "rwt fails for delta < 2nu p-1"},
        {TheoremId::MaxWexo, F::SmallXWindowWeak, 0.5, 2.0, 1.0, "boundary delta = 2nu p-1 stays bounded"},
        {TheoremId::PoissonExo, F::TailWindowWeak, 0.5, 2.0, 4.0, "rwt fails for delta > 2p-1"},
        {TheoremId::Gexo, F::TailWindowWeak, -0.5, 2.0, 4.0, "rwt fails for delta > 2p-1"},
        {TheoremId::Hlog0, F::LogTailWeak, 1.0, 2.0, 3.0, "rwt fails at delta = 2p-1 (log rate)"},
        {TheoremId::Hlog0, F::LogTailWeak, 1.0, 2.0, 4.0, "rwt fails for delta > 2p-1"},
        {TheoremId::HlogInf, F::LogSmallXWeak, -1.0, 2.0, 1.0, "rwt fails at delta = p-1 (log rate)"},
        {TheoremId::HlogInf, F::LogSmallXWeak, -1.0, 2.0, 0.0, "rwt fails for delta < p-1"},
        {TheoremId::MaxWcls, F::ClsSmallXRwt, 0.5, 2.0, -1.0, "rwt fails at delta = -1"},
        {TheoremId::MaxWcls, F::ClsSmallXRwt, 0.5, 2.0, -1.5, "rwt fails for delta < -1"},
    };
}

} // namespace exobessel
