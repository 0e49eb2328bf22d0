#include <doctest.h>

#include "ellcon/apparent.hpp"
#include "ellcon/maps.hpp"
#include "helpers.hpp"

using namespace ellcon;
using namespace testutil;

namespace {
Params std_params() { return Params::at(2, 3, Rat(1, 5)); }
}  // namespace

TEST_SUITE("apparent-elliptic") {

TEST_CASE("coefficient matrices reproduce both apparent maps") {
    Params P = std_params();
    RatFunc c1 = R(Var::c1), c2 = R(Var::c2);
    AppCoeffMatrices N = coefficient_matrices(P, U_l(), U_t());
    MatrixRF v{{1}, {c1}, {c2}};
    MatrixRF a = N.Ninf * v, s = N.Npsi * v;
    FuchsianSystem f = family(P, U_l(), U_t(), c1, c2);
    CHECK(AppClass{{a(0, 0), a(1, 0), a(2, 0)}}.proportional(app_infty(f)));
    CHECK(AppClass{{s(0, 0), s(1, 0), s(2, 0)}}.proportional(app_psi(f, U_l())));
}

TEST_CASE("M maps app_infty to app_psi") {
    Params P = std_params();
    Rat c1(3, 2), c2(-4);
    FuchsianSystem f = family(P, RatFunc(5), RatFunc(7), RatFunc(c1), RatFunc(c2));
    MatrixRF M = m_matrix(P, RatFunc(5), RatFunc(7));
    CHECK(apply(M, app_infty(f)).proportional(app_psi(f, RatFunc(5))));
}

TEST_CASE("App_C is invariant under Psi") {
    Params P = std_params();
    RatFunc c1(Rat(1, 3)), c2(2), ul(5), ut(7);
    MatrixRF T = t_psi_closed(P, ul, ut);
    RatFunc d1 = T(1, 0) + T(1, 1) * c1 + T(1, 2) * c2, d2 = T(2, 0) + T(2, 1) * c1 + T(2, 2) * c2;
    SymPair a = app_c(P, ul, ut, c1, c2), b = app_c(P, ul, ubar(P, ul, ut), d1, d2);
    CHECK(a.equals(b));
}

TEST_CASE("non_eigen") {
    std::vector<std::vector<Rat>> id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_FALSE(non_eigen(id, {1, 2, 3}));
    std::vector<std::vector<Rat>> m = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(non_eigen(m, {1, 0, 0}));
}

TEST_CASE("injectivity witness") {
    WitnessReport r = injectivity_witness(std_params(), 20, 5);
    CHECK(r.samples == 20);
    CHECK(r.pass());
}

TEST_CASE("generic fibers have exactly 12 points") {
    for (auto P : {std_params(), Params::at(-3, Rat(5, 2), Rat(2, 7))})
        for (std::uint64_t s = 0; s < 2; ++s) {
            FiberReport r = fiber_count_random(P, s);
            CHECK(r.generic());
            CHECK(r.certified);
            CHECK(r.count == 12);
            CHECK(r.survivors.degree() == 12);
        }
}

TEST_CASE("the bundle of a known connection lies in its fiber") {
    Params P = std_params();
    SymPair p = app_c(P, RatFunc(5), RatFunc(7), RatFunc(1), RatFunc(-2));
    FiberReport r = fiber_count(p.a, p.s, P);
    CHECK(r.survivors.eval(5) == 0);
}

TEST_CASE("degenerate pair is reported rather than miscounted") {
    // a0 + a1 + a2 = 0 kills a root of the eliminant; the report must not claim genericity
    Params P = std_params();
    AppClass a{{RatFunc(1), RatFunc(-3), RatFunc(2)}}, s{{RatFunc(2), RatFunc(5), RatFunc(-1)}};
    FiberReport r = fiber_count(a, s, P);
    CHECK_FALSE(r.generic());
}

}
