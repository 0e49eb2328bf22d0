#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "ellcon/family.hpp"
#include "ellcon/upoly.hpp"

namespace ellcon {

struct AppCoeffMatrices {
    MatrixRF Ninf{3, 3}, Npsi{3, 3};  // row i = coefficient of x^i, acting on (1, c1, c2)
};
AppCoeffMatrices coefficient_matrices(const Params& prm, const RatFunc& ul, const RatFunc& ut);

// Npsi adj(Ninf), proportional to Npsi Ninf^{-1}
MatrixRF m_matrix(const Params& prm, const RatFunc& ul, const RatFunc& ut);

AppClass apply(const MatrixRF& m, const AppClass& a);

struct SymPair {
    AppClass a, s;
    bool equals(const SymPair& o) const;
};
SymPair app_c(const Params& prm, const RatFunc& ul, const RatFunc& ut, const RatFunc& c1, const RatFunc& c2);

struct RemovedRoots {
    std::string reason;
    int degree = 0;
};

struct FiberReport {
    bool resample = false;
    std::string note;
    int eliminant_degree = 0;
    int squarefree_degree = 0;
    std::vector<RemovedRoots> removed;
    UPoly survivors;  // in u_l
    int count = 0;
    bool certified = false;
    // no root lost to the exceptional loci and a square-free eliminant
    bool generic() const { return !resample && removed.empty() && squarefree_degree == eliminant_degree; }
};

// s || M(u) a, params specialized
FiberReport fiber_count(const AppClass& a, const AppClass& s, const Params& prm);
// draws random (a, s) until the fiber is generic
FiberReport fiber_count_random(const Params& prm, std::uint64_t seed, AppClass* a_out = nullptr,
                               AppClass* s_out = nullptr);

// true when a is not an eigenvector of m^2, i.e. (m^2 a) x a != 0
bool non_eigen(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& a);

struct WitnessReport {
    int samples = 0, failures = 0, skipped = 0;
    bool pass() const { return failures == 0 && samples > 0; }
};
WitnessReport injectivity_witness(const Params& prm, int samples, std::uint64_t seed);

}  // namespace ellcon
