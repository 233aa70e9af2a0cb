// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Criterion 9 compares `region` scans against the golden CSVs whose
// directory is passed as argv[1].

#include "exobessel/sharpness.hpp"
#include "exobessel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace exobessel;

namespace {

struct Criterion {
    std::string title;
    int total = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

void fold(std::map<int, Criterion>& crits, const Report& rep) {
    for (const auto& c : rep.checks) {
        int idx = 0;
        if (c.check.rfind("c1", 0) == 0) idx = 1;
        else if (c.check.rfind("c2", 0) == 0) idx = 2;
        else if (c.check.rfind("c3", 0) == 0) idx = 3;
        else if (c.check.rfind("c4", 0) == 0) idx = 4;
        else if (c.check.rfind("c5", 0) == 0) idx = 5;
        else if (c.check.rfind("c6", 0) == 0) idx = 6;
        else if (c.check.rfind("c7", 0) == 0) idx = 7;
        else if (c.check.rfind("c8", 0) == 0) idx = 8;
        if (idx == 0)
            continue;
        auto& cr = crits[idx];
        ++cr.total;
        if (!c.pass) {
            ++cr.failed;
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%s (%s): observed %.6g vs %.6g",
                          c.check.c_str(), c.params.c_str(), c.observed, c.expected);
            cr.failures.push_back(buf);
        }
    }
}

// criterion 9: region scans against the hand-encoded figure panels
int compare_golden(const std::string& dir, std::vector<std::string>& failures) {
    struct Panel {
        const char* file;
        TheoremId id;
        double nu;
    };
    const std::vector<Panel> panels = {
        {"fig1_maxwcls_nu0.5.csv", TheoremId::MaxWcls, 0.5},
        {"fig1_maxwexo_nu-0.5.csv", TheoremId::MaxWexo, -0.5},
        {"fig1_maxwexo_nu0.5.csv", TheoremId::MaxWexo, 0.5},
        {"fig2_rexo_nu-0.75.csv", TheoremId::Rexo, -0.75},
        {"fig2_rexo_nu-0.5.csv", TheoremId::Rexo, -0.5},
        {"fig2_rexo_nu-0.25.csv", TheoremId::Rexo, -0.25},
        {"fig2_rexo_nu0.25.csv", TheoremId::Rexo, 0.25},
        {"fig3_rexob_nu0.5.csv", TheoremId::Rexob, 0.5},
        {"fig3_rexob_nu0.75.csv", TheoremId::Rexob, 0.75},
    };
    const RangeSpec ps{1.0, 4.0, 0.25}, ds{-3.0, 6.0, 0.25};
    int bad_panels = 0;
    for (const auto& panel : panels) {
        std::ifstream in(dir + "/" + panel.file);
        if (!in) {
            failures.push_back(std::string("missing golden file ") + panel.file);
            ++bad_panels;
            continue;
        }
        const auto cells = scan_region(panel.id, panel.nu, ps, ds);
        std::string line;
        std::getline(in, line); // header
        size_t i = 0;
        long mismatches = 0;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ss(line);
            double p, d;
            int s, w, r;
            ss >> p >> d >> s >> w >> r;
            if (i >= cells.size()) {
                ++mismatches;
                continue;
            }
            const Verdict& v = cells[i].v;
            const auto matches = [&](Tri t, int g) {
                return (t == Tri::holds) == (g == 1) && t != Tri::open;
            };
            if (std::abs(cells[i].p - p) > 1e-12 ||
                std::abs(cells[i].delta - d) > 1e-12 || !matches(v.strong, s) ||
                !matches(v.weak, w) || !matches(v.rwt, r))
                ++mismatches;
            ++i;
        }
        if (i != cells.size())
            ++mismatches;
        if (mismatches > 0) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s: %ld cell mismatches", panel.file,
                          mismatches);
            failures.push_back(buf);
            ++bad_panels;
        }
    }
    return bad_panels;
}

} // namespace

int main(int argc, char** argv) {
    const std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";
    QuadratureConfig cfg;

    std::map<int, Criterion> crits;
    crits[1].title = "special functions: half-integer closed forms, recurrence, derivative rule";
    crits[2].title = "kernel closed forms: K_{-1/2} log formula, ~R_{1/2} explicit formula";
    crits[3].title = "semigroup property (Chapman-Kolmogorov), 10 cases";
    crits[4].title = "exotic Riesz kernel sign/size bounds, b=8, factor-4 band";
    crits[5].title = "phase-diagram predicates: implication chain + transference";
    crits[6].title = "counterexample rates: eps-family log rate, maximal/Poisson/g bands";
    crits[7].title = "fractional integrals: kernel finiteness boundary";
    crits[8].title = "control chains with a single fitted constant per nu";
    crits[9].title = "figures as data: region scans match golden panels";

    fold(crits, suite_kernels(cfg));
    fold(crits, suite_signs(cfg));
    fold(crits, suite_transference());
    fold(crits, suite_counterexamples(cfg));
    fold(crits, suite_controls(cfg));

    std::vector<std::string> gold_failures;
    const int bad_panels = compare_golden(golden_dir, gold_failures);
    crits[9].total = 9;
    crits[9].failed = bad_panels;
    crits[9].failures = gold_failures;

    bool all_ok = true;
    for (const auto& [idx, cr] : crits) {
        const bool ok = cr.failed == 0 && cr.total > 0;
        all_ok = all_ok && ok;
        std::printf("[%s] criterion %d: %s (%d/%d checks)\n", ok ? "PASS" : "FAIL",
                    idx, cr.title.c_str(), cr.total - cr.failed, cr.total);
        for (const auto& f : cr.failures)
            std::printf("         %s\n", f.c_str());
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: ALL CRITERIA PASS"
                               : "ACCEPTANCE: FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
