#include <doctest.h>

#include <numbers>

#include "ellcon/monodromy.hpp"

using namespace ellcon::mono;

TEST_SUITE("rep-monodromy") {

TEST_CASE("random representations satisfy their relations") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        RepC r = random_rep_c(s, 0.2);
        CHECK(c_defect(r, 0.2) < 1e-9);
        CHECK(p1_defect(descend(r).rep, 0.2) < 1e-8);
    }
}

TEST_CASE("round trip through the descent") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        RepC rho = random_rep_c(s, 0.3);
        Descent d = descend(rho);
        CHECK(distance(trace_coords(phi_top(d.rep, 0.3)), trace_coords(rho)) < 1e-9);
        CHECK(d.m2_residual < 1e-10);
        // the other preimage is psi_top of the first, and it is a different point
        CHECK(distance(trace_coords(phi_top(psi_top(d.rep), 0.3)), trace_coords(rho)) < 1e-9);
        CHECK(distance(p1_fingerprint(d.rep), p1_fingerprint(psi_top(d.rep))) > 1e-6);
    }
}

TEST_CASE("psi_top is an involution up to conjugation") {
    RepP1 r = random_rep_p1(7, 0.2);
    CHECK(distance(p1_fingerprint(psi_top(psi_top(r))), p1_fingerprint(r)) < 1e-10);
}

TEST_CASE("trace coordinates are conjugation invariant") {
    RepC r = random_rep_c(3, 0.1);
    CHECK(distance(trace_coords(conjugate(r, random_sl2(9, 1))), trace_coords(r)) < 1e-10);
}

TEST_CASE("invalid input is rejected") {
    RepP1 r = random_rep_p1(1, 0.2);
    r.M0 = r.M0 * 2.0;
    CHECK_THROWS_AS(phi_top(r, 0.2), InvalidRep);
}

TEST_CASE("dihedral family: B comes out as diag(-al, -1/al)") {
    const double nu = 0.2;
    for (int k = 1; k <= 5; ++k) {
        cd a0 = std::polar(1.0, 0.3 * k), al = std::polar(1.0 + 0.1 * k, -0.7 * k);
        RepC img = phi_top(dihedral_rep(a0, al, nu), nu);
        CHECK(rep_distance(img, dihedral_expected_corrected(a0, al, nu)) < 1e-12);
        CHECK(rep_distance(img, dihedral_expected(a0, al, nu)) > 1e-3);
    }
}

TEST_CASE("commuting A, B: descent picks M inside the solution plane") {
    const double nu = 0.2;
    cd at = std::polar(1.0, 2 * std::numbers::pi * nu);
    Mat2 D;
    D << at, 0, 0, 1.0 / at;
    Mat2 I = Mat2::Identity();
    Descent d = descend(RepC{I, I, D, D.inverse()});
    CHECK(d.commuting);
    CHECK(d.m2_residual < 1e-12);
}

TEST_CASE("descent of the trivial representation is refused") {
    Mat2 I = Mat2::Identity();
    CHECK_THROWS_AS(descend(RepC{I, I, I, I}), ReducibleRep);
}

}
