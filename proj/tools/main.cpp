#include "exobessel/config.hpp"
#include "exobessel/csv.hpp"
#include "exobessel/errors.hpp"
#include "exobessel/kernels.hpp"
#include "exobessel/norms.hpp"
#include "exobessel/operators.hpp"
#include "exobessel/sharpness.hpp"
#include "exobessel/special.hpp"
#include "exobessel/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace exobessel;

// exit codes: 0 success, 1 domain/usage error, 2 numerical non-convergence,
// 3 verification FAIL present in the report
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitNumerics = 2;
constexpr int kExitVerifyFail = 3;

std::string num(double v, int precision) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"classical and exotic Bessel harmonic-analysis toolbox"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value configuration file");

    // --- bessel ---------------------------------------------------------
    auto* cbessel = app.add_subcommand("bessel", "evaluate I_mu(w)");
    double b_mu = 0.0, b_w = 1.0;
    bool b_scaled = false;
    cbessel->add_option("--mu", b_mu)->required();
    cbessel->add_option("--w", b_w)->required();
    cbessel->add_flag("--scaled", b_scaled, "print e^{-w} I_mu(w)");

    // --- kernel ---------------------------------------------------------
    auto* ckernel = app.add_subcommand("kernel", "evaluate an integral kernel");
    std::string k_family;
    double k_nu = 0.0, k_x = 1.0, k_y = 1.0;
    double k_t = -1.0, k_sigma = -1.0;
    ckernel->add_option("--family", k_family)->required();
    ckernel->add_option("--nu", k_nu)->required();
    ckernel->add_option("--t", k_t);
    ckernel->add_option("--sigma", k_sigma);
    ckernel->add_option("--x", k_x)->required();
    ckernel->add_option("--y", k_y)->required();

    // --- op -------------------------------------------------------------
    auto* cop = app.add_subcommand("op", "apply an operator to a sampled function");
    std::string o_name, o_setting = "exo", o_input, o_xgrid, o_out = "-",
                o_interp = "pc";
    double o_nu = 0.0, o_t = 1.0, o_sigma = 0.5, o_xi = 0.0, o_b = 0.0, o_k = 4.0;
    double o_eps = 1.0, o_c = 0.125;
    cop->add_option("--name", o_name)->required();
    cop->add_option("--setting", o_setting);
    cop->add_option("--nu", o_nu);
    cop->add_option("--t", o_t);
    cop->add_option("--sigma", o_sigma);
    cop->add_option("--xi", o_xi);
    cop->add_option("--b", o_b, "window / truncation factor");
    cop->add_option("--k", o_k, "local maximal window bound");
    cop->add_option("--eps", o_eps, "T_psi exponent");
    cop->add_option("--c", o_c, "T_psi Gaussian rate");
    cop->add_option("--input", o_input)->required();
    cop->add_option("--xgrid", o_xgrid)->required();
    cop->add_option("--out", o_out);
    cop->add_option("--interp", o_interp, "pc|linear");

    // --- norm -------------------------------------------------------------
    auto* cnorm = app.add_subcommand("norm", "weighted norm of a sampled function");
    std::string n_p = "2", n_flavor = "strong", n_input, n_interp = "linear";
    double n_delta = 0.0;
    cnorm->add_option("--p", n_p, "exponent, or 'inf'")->required();
    cnorm->add_option("--delta", n_delta)->required();
    cnorm->add_option("--flavor", n_flavor, "strong|weak|p1");
    cnorm->add_option("--input", n_input)->required();
    cnorm->add_option("--interp", n_interp, "pc|linear");

    // --- region -------------------------------------------------------------
    auto* cregion = app.add_subcommand("region", "scan a phase diagram to CSV");
    std::string r_theorem, r_p, r_delta, r_out = "-";
    double r_nu = 0.0, r_sigma = -1.0;
    cregion->add_option("--theorem", r_theorem)->required();
    cregion->add_option("--nu", r_nu)->required();
    cregion->add_option("--sigma", r_sigma, "potential order (PotCls/PotExo)");
    cregion->add_option("--p", r_p, "lo:hi:step")->required();
    cregion->add_option("--delta", r_delta, "lo:hi:step")->required();
    cregion->add_option("--out", r_out);

    // --- verify -------------------------------------------------------------
    auto* cverify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite = "all", v_out = "-";
    cverify->add_option("--suite", v_suite,
                        "kernels|signs|counterexamples|transference|controls|all");
    cverify->add_option("--out", v_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // usage message on the error stream
        return kExitDomain;
    }
    Config conf;
    if (!config_path.empty())
        conf = Config::from_file(config_path);
    const int prec = conf.output_precision;
    const QuadratureConfig& q = conf.quadrature;

    if (cbessel->parsed()) {
        const BesselEval e = bessel_i(Order(b_mu), b_w);
        const double v = b_scaled ? e.scaled_value : e.value;
        std::printf("%s regime=%s%s\n", num(v, prec).c_str(),
                    e.regime == BesselRegime::series ? "series" : "asymptotic",
                    e.overflowed && !b_scaled ? " overflowed" : "");
        return kExitOk;
    }

    if (ckernel->parsed()) {
        std::optional<double> aux;
        if (k_t > 0.0)
            aux = k_t;
        else if (k_sigma > 0.0)
            aux = k_sigma;
        KernelQuery kq{kernel_family_from_string(k_family), k_nu, aux, k_x, k_y};
        const KernelValue kv = eval_kernel(kq, q);
        std::printf("%s regime=%s panels=%d\n", num(kv.value, prec).c_str(),
                    kv.regime.c_str(), kv.subdivisions);
        return kExitOk;
    }

    if (cop->parsed()) {
        const Interp interp =
            o_interp == "pc" ? Interp::piecewise_constant : Interp::linear;
        const GridFunction f = grid_function_from_csv(o_input, interp);
        const Setting st = o_setting == "cls" ? Setting::cls : Setting::exo;
        const TimeGrid& tg = conf.time_grid;
        auto apply = [&](double x) -> double {
            if (o_name == "heat")
                return apply_heat(st, o_nu, o_t, f, x, q);
            if (o_name == "heat-max")
                return heat_maximal(st, o_nu, f, x, tg, q);
            if (o_name == "poisson")
                return apply_poisson(o_nu, o_t, f, x, q);
            if (o_name == "poisson-max")
                return poisson_maximal(o_nu, f, x, tg, q);
            if (o_name == "g")
                return g_function(st, o_nu, f, x, tg, q);
            if (o_name == "g-loc")
                return local_g(o_nu, f, x, tg, q);
            if (o_name == "hardy0")
                return hardy(HardyKind::H0, o_xi, o_b > 0.0 ? o_b : 1.0, f, x);
            if (o_name == "hardyinf")
                return hardy(HardyKind::Hinf, o_xi, o_b > 0.0 ? o_b : 1.0, f, x);
            if (o_name == "hardy0log")
                return hardy(HardyKind::H0log, 1.0, o_b > 0.0 ? o_b : 1.0, f, x);
            if (o_name == "hardyinflog")
                return hardy(HardyKind::Hinflog, -1.0, o_b > 0.0 ? o_b : 1.0, f, x);
            if (o_name == "hilbert-loc")
                return local_hilbert_pv(o_nu, f, x, o_b > 1.0 ? o_b : 2.0, q);
            if (o_name == "mloc")
                return mloc(o_k, f, x);
            if (o_name == "n")
                return n_op(f, x, o_b > 1.0 ? o_b : 2.0);
            if (o_name == "nlog")
                return nlog_op(f, x, o_b > 1.0 ? o_b : 2.0);
            if (o_name == "tpsi")
                return tpsi(o_xi, o_eps, o_c, f, x, tg, q);
            if (o_name == "riesz")
                return riesz_apply(st, o_nu, f, x, q);
            if (o_name == "riesz-adj")
                return riesz_adjoint_apply(st, o_nu, f, x, q);
            if (o_name == "fracint")
                return frac_integral_apply(st, o_nu, o_sigma, f, x, q);
            throw std::domain_error("unknown operator name: " + o_name);
        };
        const std::vector<double> xs = parse_xgrid(o_xgrid);
        std::vector<double> ys(xs.size());
        parallel_for(static_cast<int>(xs.size()),
                     [&](int i) { ys[i] = apply(xs[i]); });
        std::string out = "x,result\n";
        for (size_t i = 0; i < xs.size(); ++i)
            out += num(xs[i], prec) + "," + num(ys[i], prec) + "\n";
        write_text(o_out, out);
        return kExitOk;
    }

    if (cnorm->parsed()) {
        const Interp interp =
            n_interp == "pc" ? Interp::piecewise_constant : Interp::linear;
        const GridFunction f = grid_function_from_csv(n_input, interp);
        const double p = n_p == "inf" ? std::numeric_limits<double>::infinity()
                                      : std::stod(n_p);
        const NormResult r =
            compute_norm(f, p, n_delta, norm_flavor_from_string(n_flavor),
                         conf.lambda_grid_size);
        std::string flag;
        if (r.flag == NormFlag::divergent)
            flag = " divergent";
        else if (r.flag == NormFlag::inconclusive)
            flag = " inconclusive";
        std::printf("%s%s\n", num(r.value, prec).c_str(), flag.c_str());
        return kExitOk;
    }

    if (cregion->parsed()) {
        std::optional<double> sig;
        if (r_sigma > 0.0)
            sig = r_sigma;
        const auto cells = scan_region(theorem_from_string(r_theorem), r_nu,
                                       parse_range(r_p), parse_range(r_delta), sig);
        write_text(r_out, region_csv(cells));
        return kExitOk;
    }

    if (cverify->parsed()) {
        const Report rep = run_suite(v_suite, q);
        write_text(v_out, rep.to_json() + "\n");
        for (const auto& c : rep.checks)
            std::fprintf(stderr, "[%s] %s\n", c.pass ? "PASS" : "FAIL",
                         c.check.c_str());
        return rep.all_pass() ? kExitOk : kExitVerifyFail;
    }

    return kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const exobessel::numerics_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumerics;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
}
