#include <doctest.h>

#include "ellcon/maps.hpp"
#include "helpers.hpp"

using namespace ellcon;
using namespace testutil;

namespace {
Params std_params() { return Params::at(2, 3, Rat(1, 5)); }
const Assignment kStd{{Var::ul, 5}, {Var::ut, 7}};
}  // namespace

TEST_SUITE("pullback-maps") {

TEST_CASE("frozen values at (l,t,nu) = (2,3,1/5), (u_l,u_t) = (5,7)") {
    Params P = std_params();
    RatFunc ul(5), ut(7);
    CHECK(ubar(P, ul, ut).equals(RatFunc(Rat(15, 11))));
    auto [z, w] = phi_bun(P, ul, ut);
    CHECK(z.equals(RatFunc(Rat(8, 3))));
    CHECK(w.equals(RatFunc(Rat(14, 11))));
    auto sp = special_polys(P, ul, ut);
    CHECK(sp.PPi.equals(RatFunc(-22)));
    CHECK(sp.delta.equals(RatFunc(360)));
    CHECK((RatFunc(7) + ubar(P, ul, ut)).equals(RatFunc(Rat(92, 11))));
    MatrixRF T = t_psi_closed(P, U_l(), U_t());
    CHECK(T(1, 1).eval(kStd) == Rat(-121, 90));
    CHECK(psi_bun_at(P, 5, 7).ut == Rat(15, 11));
    CHECK_FALSE(psi_bun_at(P, 5, 7).at_infinity);
}

TEST_CASE("psi is an involution on the bundle chart (symbolic)") {
    Params P = Params::symbolic();
    RatFunc ub = ubar(P, U_l(), U_t());
    CHECK(ubar(P, U_l(), ub).equals(U_t()));
    CHECK((t_psi_closed(P, U_l(), U_t()) * t_psi_closed(P, U_l(), ub)).is_identity());
}

TEST_CASE("closed-form T_psi agrees with the one derived from the apparent map") {
    for (auto P : {std_params(), Params::at(-3, Rat(5, 2), Rat(2, 7))})
        CHECK(t_psi_derived(P, U_l(), U_t()).equals(t_psi_closed(P, U_l(), U_t())));
}

TEST_CASE("points of P_Pi = 0 go to u_t = infinity") {
    Params P = std_params();
    // P_Pi vanishes at u_t = t u_l (l-1) / P_Lambda; (5, -15) is such a point here
    auto g = genericity_guard(P, 5, -15);
    CHECK(g.on_pi);
    CHECK(psi_bun_at(P, 5, -15).at_infinity);
}

TEST_CASE("base change matrices") {
    Params P = Params::symbolic();
    MatrixRF B = b_matrix(P, U_l(), U_t());
    auto sp = special_polys(P, U_l(), U_t());
    CHECK(B.equals(b_closed(P, U_l(), U_t())));
    CHECK((B.det() * sp.PLambda * sp.PSigma).equals(2 * sp.PPi * sp.PPi));
    for (const MatrixRF& m : {B, j_matrix(P), c_matrix(P), c_inverse(P)}) {
        CHECK(m(0, 0).equals(1));
        CHECK(m(0, 1).is_zero());
        CHECK(m(0, 2).is_zero());
    }
    CHECK(c_inverse(P).equals(c_inverse_closed(P)));
    CHECK((c_matrix(P) * c_inverse(P)).is_identity());
}

TEST_CASE("invariant identities through (z, w)") {
    for (auto& r : invariant_identities(Params::symbolic())) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("Phi is symplectic up to a factor 2") {
    CHECK(verify_symplectic_factor(std_params()));
    CHECK(verify_symplectic_factor(Params::at(Rat(7, 3), -4, Rat(3, 11))));
}

TEST_CASE("Phi is invariant under the Galois involution") {
    Params P = std_params();
    RatFunc c1 = R(Var::c1), c2 = R(Var::c2);
    PhiFull a = phi_full(P, c1, c2);
    MatrixRF T = t_psi_closed(P, U_l(), U_t());
    RatFunc d1 = T(1, 0) + T(1, 1) * c1 + T(1, 2) * c2, d2 = T(2, 0) + T(2, 1) * c1 + T(2, 2) * c2;
    std::map<Var, RatFunc> sub = {{Var::ut, ubar(P, U_l(), U_t())}, {Var::c1, d1}, {Var::c2, d2}};
    CHECK(a.z.compose(sub).equals(a.z));
    CHECK(a.w.compose(sub).equals(a.w));
    CHECK(a.k1.compose(sub).equals(a.k1));
    CHECK(a.k2.compose(sub).equals(a.k2));
}

TEST_CASE("the equivariant section has kappa = 0") {
    Params P = std_params();
    auto [e1, e2] = equivariant_offset(P, U_l(), U_t());
    PhiFull f = phi_full(P, e1, e2);
    CHECK(f.k1.is_zero());
    CHECK(f.k2.is_zero());
}

TEST_CASE("the Lagrangian identity holds with a minus sign, not a plus") {
    LagrangianResult r = lagrangian_divergence(Params::symbolic());
    CHECK_FALSE(r.stated.is_zero());
    CHECK(r.corrected.is_zero());
    CHECK(lagrangian_divergence(std_params()).stated.eval(kStd) == Rat(-6, 605));
}

TEST_CASE("fixed locus: c1* = -nu P_Pi P_Lambda / delta solves the system on Sigma") {
    Params P = Params::symbolic();
    CHECK_FALSE(fixed_locus(P, +1).pass());
    CHECK(fixed_locus(P, -1).pass());
    CHECK_FALSE(fixed_locus(std_params(), -1, 1).pass());
}

TEST_CASE("local model of the quotient singularity") {
    LocalModelReport r = verify_local_model();
    CHECK(r.cone_identity);
    CHECK(r.sign_invariant);
    CHECK(r.form_pullback);
}

TEST_CASE("genericity guard") {
    Params P = std_params();
    CHECK_FALSE(genericity_guard(P, 5, 7).any());
    CHECK(genericity_guard(P, 0, 7).ul_special);
    CHECK(genericity_guard(P, 2, 7).ul_special);
    CHECK(genericity_guard(P, 5, 3).ut_special);
    CHECK(genericity_guard(P, 4, 7).on_lambda);
    CHECK_FALSE(genericity_guard(P, 5, 3).describe().empty());
}

TEST_CASE("non-generic inputs raise") {
    Params P = std_params();
    CHECK_THROWS(phi_bun(P, RatFunc(2), RatFunc(7)));
    CHECK_THROWS(t_psi_closed(P, RatFunc(0), RatFunc(7)));
}

}
