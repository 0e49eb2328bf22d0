#pragma once
#include <string>
#include <utility>
#include <vector>

#include "ellcon/family.hpp"
#include "ellcon/twoform.hpp"

namespace ellcon {

struct NonGeneric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecialPolys {
    RatFunc PPi, PSigma, PLambda, delta;
};
SpecialPolys special_polys(const Params& prm, const RatFunc& ul, const RatFunc& ut);
// 1/delta with its six factors kept apart
RatFunc inv_delta(const Params& prm, const RatFunc& ul);

std::pair<RatFunc, RatFunc> phi_bun(const Params& prm, const RatFunc& ul, const RatFunc& ut);
RatFunc ubar(const Params& prm, const RatFunc& ul, const RatFunc& ut);

struct PsiPoint {
    bool at_infinity = false;  // P_Pi = 0: image on the line u_t = inf
    Rat ut;
};
PsiPoint psi_bun_at(const Params& prm, const Rat& ul, const Rat& ut);  // specialized params

MatrixRF t_psi_closed(const Params& prm, const RatFunc& ul, const RatFunc& ut);
MatrixRF t_psi_derived(const Params& prm, const RatFunc& ul, const RatFunc& ut);

// 2 (Id + T(u_l, ubar))^{-1}
MatrixRF b_matrix(const Params& prm, const RatFunc& ul, const RatFunc& ut);
MatrixRF b_closed(const Params& prm, const RatFunc& ul, const RatFunc& ut);

// (c1^0, c2^0): first column of B^{-1}
std::pair<RatFunc, RatFunc> equivariant_offset(const Params& prm, const RatFunc& ul, const RatFunc& ut);

// these need ul, ut to be the chart variables (derivatives are taken)
MatrixRF j_matrix(const Params& prm);
MatrixRF c_matrix(const Params& prm);
MatrixRF c_inverse(const Params& prm);
MatrixRF c_inverse_closed(const Params& prm);  // K entries through (z, w)

struct PhiFull {
    RatFunc z, w, k1, k2;
};
PhiFull phi_full(const Params& prm, const RatFunc& c1, const RatFunc& c2);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<IdentityCheck> invariant_identities(const Params& prm);

// Phi^* (dk1^dz + dk2^dw) and the expected 2 (dc1^du_t + dc2^du_l)
std::pair<TwoForm, TwoForm> symplectic_pullback(const Params& prm);
bool verify_symplectic_factor(const Params& prm);

struct LagrangianResult {
    RatFunc stated;     // dc1^0/du_l + dc2^0/du_t
    RatFunc corrected;  // dc1^0/du_l - dc2^0/du_t
};
LagrangianResult lagrangian_divergence(const Params& prm);
bool verify_lagrangian(const Params& prm);

struct FixedLocusRow {
    MPoly numerator;
    PremResult prem;
};
struct FixedLocusReport {
    RatFunc c1_star;
    std::vector<FixedLocusRow> rows;  // rows 1 and 2 of (T(u_l,ubar) - Id)(1, c1, c2)
    bool pass() const;
};
// sign = +1 uses c1 = nu P_Pi P_Lambda / delta, sign = -1 the opposite sign;
// offset is added to c1 (nonzero offset gives the negative control)
FixedLocusReport fixed_locus(const Params& prm, int sign = +1, const Rat& offset = 0);

struct LocalModelReport {
    bool cone_identity = false;
    bool sign_invariant = false;
    bool form_pullback = false;
    bool pass() const { return cone_identity && sign_invariant && form_pullback; }
};
LocalModelReport verify_local_model();

struct GenericityFlags {
    bool ul_special = false;  // u_l in {0, 1, l}
    bool ut_special = false;  // u_t in {0, 1, l, t}
    bool on_pi = false, on_sigma = false, on_lambda = false;
    bool any() const { return ul_special || ut_special || on_pi || on_sigma || on_lambda; }
    std::string describe() const;
};
GenericityFlags genericity_guard(const Params& prm, const Rat& ul, const Rat& ut);

RatFunc U_l();
RatFunc U_t();

}  // namespace ellcon
