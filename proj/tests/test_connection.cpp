#include <doctest.h>

#include "ellcon/family.hpp"
#include "ellcon/maps.hpp"
#include "helpers.hpp"

using namespace ellcon;
using namespace testutil;

namespace {
Params std_params() { return Params::at(2, 3, Rat(1, 5)); }

bool parabolics_hold(const FuchsianSystem& s, const ParabolicData& pd, const SpectralData& sp) {
    for (auto& [p, d] : pd)
        if (!is_eigenvector(s.residue_at(p), d, sp.at(p).plus)) return false;
    return true;
}
}  // namespace

TEST_SUITE("connection-core") {

TEST_CASE("directions and eigenvector tests") {
    MatrixRF m{{1, 0}, {0, -1}};
    CHECK(is_eigenvector(m, Direction::infinity(), 1));
    CHECK(is_eigenvector(m, Direction::at(0), -1));
    CHECK_FALSE(is_eigenvector(m, Direction::at(1), 1));
    auto d = direction_of(RatFunc(2), RatFunc(4));
    REQUIRE(d);
    CHECK(d->equals(Direction::at(Rat(1, 2))));
    CHECK_FALSE(direction_of(RatFunc(), RatFunc()));
    MatrixRF n{{0, 1}, {0, 0}};
    CHECK(is_nilpotent_with_kernel(n, Direction::infinity()));
    CHECK_FALSE(is_nilpotent_with_kernel(n, Direction::at(0)));
}

TEST_CASE("eigendata of a trace-free matrix with square discriminant") {
    MatrixRF m{{3, 2}, {0, -3}};
    Eigendata e = eigendata(m);
    CHECK(((e.plus.equals(3) && e.minus.equals(-3)) || (e.plus.equals(-3) && e.minus.equals(3))));
    CHECK(is_eigenvector(m, e.dir_plus, e.plus));
    CHECK(is_eigenvector(m, e.dir_minus, e.minus));
    CHECK_THROWS_AS(eigendata(MatrixRF{{1, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(eigendata(MatrixRF{{0, 1}, {2, 0}}), IrrationalEigendata);
}

TEST_CASE("perfect-square detection") {
    MPoly x = X(Var::ul);
    auto s = poly_sqrt((x + 1).pow(2) * 4);
    REQUIRE(s);
    CHECK((*s * *s) == (x + 1).pow(2) * 4);
    CHECK_FALSE(poly_sqrt(x.pow(2) + 1));
}

TEST_CASE("parabolic degree") {
    CHECK(parabolic_degree(0, 0, {Rat(1, 4), Rat(1, 4)}, {true, false}) == 0);
    CHECK(parabolic_degree(1, 0, {Rat(1, 2)}, {true}) == Rat(1, 2));
    CHECK_THROWS(parabolic_degree(0, 0, {Rat(1)}, {}));
}

TEST_CASE("residue at infinity is minus the sum") {
    FuchsianSystem n0 = nabla0(std_params(), U_l(), U_t());
    MatrixRF s = n0.residue_at(Pole::inf);
    for (Pole p : kFinitePoles) s = s + n0.residue_at(p);
    CHECK(s.equals(MatrixRF(2, 2)));
    CHECK(check_fuchs(n0, 0));
}

TEST_CASE("elementary transformations keep the parabolic structure compatible") {
    Params P = std_params();
    FuchsianSystem n0 = nabla0(P, U_l(), U_t());
    auto pd = chart_parabolics(U_l(), U_t());
    auto sp = nabla0_spectrum(P);
    for (Pole p : kFinitePoles)
        for (ElemSign sg : {ElemSign::negative, ElemSign::positive}) {
            CAPTURE(pole_name(p));
            ElemResult r = elementary_transform(n0, pd, sp, p, sg);
            CHECK(parabolics_hold(r.sys, r.parab, r.spec));
            CHECK(check_fuchs(r.sys, r.deg_shift));
            // eigenvalues at p are exchanged and shifted
            if (sg == ElemSign::negative) {
                CHECK(r.spec.at(p).plus.equals(sp.at(p).minus + 1));
                CHECK(r.deg_shift == -1);
            } else {
                CHECK(r.spec.at(p).plus.equals(sp.at(p).minus));
                CHECK(r.deg_shift == 1);
            }
        }
    CHECK_THROWS_AS(elementary_transform(n0, pd, sp, Pole::inf, ElemSign::negative), std::invalid_argument);
}

TEST_CASE("twist shifts both eigenvalues") {
    Params P = std_params();
    FuchsianSystem n0 = nabla0(P, U_l(), U_t());
    auto sp = nabla0_spectrum(P);
    auto tw = twist(n0, sp, {{Pole::p0, Rat(1, 2)}, {Pole::t, Rat(-1, 2)}});
    CHECK(tw.spec.at(Pole::p0).plus.equals(Rat(3, 4)));
    CHECK(tw.spec.at(Pole::t).minus.equals(RatFunc(Rat(-7, 10))));
    CHECK(parabolics_hold(tw.sys, chart_parabolics(U_l(), U_t()), tw.spec));
    CHECK_FALSE(tw.sys.trace_free());
    CHECK(check_fuchs(tw.sys, 0));
}

}

TEST_SUITE("universal-family") {

TEST_CASE("nabla0 residues act on the parabolic lines by nu+ (symbolic)") {
    Params P = Params::symbolic();
    FuchsianSystem n0 = nabla0(P, U_l(), U_t());
    CHECK(parabolics_hold(n0, chart_parabolics(U_l(), U_t()), nabla0_spectrum(P)));
    for (Pole p : kAllPoles) {
        auto ed = eigendata(n0.residue_at(p));
        auto sp = nabla0_spectrum(P).at(p);
        CHECK((ed.plus * ed.plus).equals(sp.plus * sp.plus));
    }
}

TEST_CASE("Higgs fields are nilpotent along the parabolic lines") {
    Params P = Params::symbolic();
    auto pd = chart_parabolics(U_l(), U_t());
    for (auto th : {theta1(P, U_l(), U_t()), theta2(P, U_l(), U_t())})
        for (Pole p : kAllPoles) CHECK(is_nilpotent_with_kernel(th.residue_at(p), pd.at(p)));
}

TEST_CASE("family is affine in c") {
    Params P = std_params();
    RatFunc c1 = R(Var::c1), c2 = R(Var::c2);
    FuchsianSystem f = family(P, U_l(), U_t(), c1, c2);
    FuchsianSystem g = nabla0(P, U_l(), U_t()) + theta1(P, U_l(), U_t()).scaled(c1) + theta2(P, U_l(), U_t()).scaled(c2);
    CHECK(f.equals(g));
}

TEST_CASE("apparent class of nabla0 is [l t : -(l+t) : 1]") {
    Params P = Params::symbolic();
    AppClass a = app_infty(nabla0(P, U_l(), U_t()));
    CHECK(a.proportional(AppClass{{P.lam * P.t, -(P.lam + P.t), RatFunc(1)}}));
    AppClass s = app_infty(nabla0(std_params(), RatFunc(5), RatFunc(7)));
    CHECK(s.proportional(AppClass{{RatFunc(6), RatFunc(-5), RatFunc(1)}}));
}

TEST_CASE("x-coefficients of a rational function") {
    RatFunc x = R(Var::x), u = R(Var::ul);
    auto cs = x_coefficients((x * x * 3 + u * x + 1) / (u + 1));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].equals(RatFunc(1) / (u + 1)));
    CHECK(cs[1].equals(u / (u + 1)));
    CHECK(cs[2].equals(RatFunc(3) / (u + 1)));
}

}
