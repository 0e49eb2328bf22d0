// One line per criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "ellcon/verify.hpp"

using namespace ellcon;
using namespace ellcon::verify;

namespace {

struct Run {
    std::vector<std::string> ids;
    Config cfg;
};

struct Criterion {
    int n;
    const char* title;
    double budget;  // seconds
    std::vector<Run> runs;
    std::vector<Run> info;  // reported, never counted
};

Config exact() {
    Config c;
    c.mode = Mode::exact;
    return c;
}

Config specialized(std::vector<Params> ps = {}) {
    Config c;
    c.mode = Mode::specialized;
    c.params = std::move(ps);
    return c;
}

struct Outcome {
    bool pass = true;
    int records = 0;
    double seconds = 0;
    std::vector<Record> failed;
};

Outcome execute(const std::vector<Run>& runs, int jobs) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (auto run : runs) {
        run.cfg.jobs = jobs;
        for (auto& r : run_checks(run.ids, run.cfg)) {
            ++o.records;
            if (!r.pass) {
                o.pass = false;
                o.failed.push_back(r);
            }
        }
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

void show_failures(const Outcome& o) {
    for (auto& r : o.failed)
        std::cout << "      " << r.id << " [" << r.params << "] " << r.ref << "  " << r.details.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
    std::vector<Criterion> cs = {
        {1, "T_psi derived from the apparent map equals the closed form", 60 + 600,
         {{{"tpsi.derived"}, specialized(random_params(2024, 3))}, {{"tpsi.derived"}, exact()}}, {}},
        {2, "T_psi(u) T_psi(psi u) = Id and ubar(ubar) = u_t; ubar(2,3,5,7) = 15/11", 10,
         {{{"involution.t_product", "involution.ubar_twice"}, exact()}, {{"involution.anchor"}, specialized()}}, {}},
        {3, "det(B) P_Lambda P_Sigma = 2 P_Pi^2", 10, {{{"basechange.det_b"}, exact()}}, {}},
        {4, "Phi pulls dk1^dz + dk2^dw back to 2 (dc1^du_t + dc2^du_l)", 3 * 120,
         {{{"symplectic.factor_two"}, specialized()}}, {}},
        {5, "dc1^0/du_l + dc2^0/du_t = 0", 60,
         {{{"lagrangian.stated"}, exact()}}, {{{"lagrangian.corrected"}, exact()}}},
        {6, "app_infty(nabla0) ~ [l t : -(l+t) : 1]", 5, {{{"apparent.normalization"}, exact()}}, {}},
        {7, "(T_psi(u_l,ubar) - Id)(1, nu P_Pi P_Lambda/delta, c2) = 0 mod P_Sigma", 60,
         {{{"fixedlocus.stated"}, exact()}}, {{{"fixedlocus.corrected", "fixedlocus.control"}, exact()}}},
        {8, "local model x0^2 = x1 x2 and 2-form pullback", 1, {{{"localmodel.quotient"}, exact()}}, {}},
        {9, "generic fiber of App_C has 12 points (5 pairs at 3 specializations)", 3 * 5 * 30,
         {{{"fibers.count"}, specialized()}}, {}},
        {10, "injectivity witness over 100 samples", 10, {{{"apparent.injectivity"}, specialized()}}, {}},
        {11, "monodromy round trip over 100 seeds, M^2 = -I, descents non-conjugate", 10,
         {{{"monodromy.round_trip"}, specialized()}}, {}},
        {12, "phi_top(dihedral) = (diag(-a0,-1/a0), diag(al,1/al), diag(at,1/at), diag(1/at,at))", 5,
         {{{"monodromy.dihedral_stated"}, specialized()}}, {{{"monodromy.dihedral_corrected"}, specialized()}}},
    };

    bool all = true;
    double total = 0;
    for (auto& c : cs) {
        Outcome o = execute(c.runs, jobs);
        bool in_time = o.seconds <= c.budget;
        bool pass = o.pass && in_time && o.records > 0;
        all = all && pass;
        total += o.seconds;
        char line[256];
        std::snprintf(line, sizeof line, "criterion %2d: %s  %-72s %8.3fs", c.n, pass ? "PASS" : "FAIL", c.title,
                      o.seconds);
        std::cout << line << (in_time ? "" : "  (over budget)") << "\n";
        show_failures(o);
        if (!c.info.empty()) {
            Outcome i = execute(c.info, jobs);
            std::cout << "      INFO corrected form: " << (i.pass ? "holds" : "fails") << "\n";
            for (auto& run : c.info)
                for (auto& id : run.ids) std::cout << "        " << id << "\n";
            show_failures(i);
        }
    }
    std::printf("total %.3fs\n", total);
    return all ? 0 : 1;
}
