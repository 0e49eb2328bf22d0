#include <doctest.h>

#include "ellcon/matrix.hpp"
#include "ellcon/twoform.hpp"
#include "ellcon/upoly.hpp"
#include "helpers.hpp"

using namespace ellcon;
using namespace testutil;

TEST_SUITE("exact-algebra") {

TEST_CASE("parse_rat accepts integers and fractions, rejects junk") {
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("7") == 7);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("polynomial basics and printing") {
    MPoly x = X(Var::x), y = X(Var::ut);
    MPoly p = (x + 1) * (x - 1);
    CHECK(p == x.pow(2) - 1);
    CHECK(p.to_string() == "x^2 - 1");
    CHECK(p.degree(Var::x) == 2);
    CHECK((x * y).total_degree() == 2);
    CHECK(MPoly(Rat(1, 2)).scaled(4) == MPoly(2));
    CHECK(p.derivative(Var::x) == x.scaled(2));
    CHECK((x.pow(2) * y).substitute(Var::x, y + 1) == (y + 1).pow(2) * y);
}

TEST_CASE("mixed denominators stay canonical") {
    MPoly p = X(Var::x).scaled(Rat(1, 3)) + MPoly(Rat(1, 6));
    CHECK(p.den() == 6);
    CHECK((p - p).is_zero());
    CHECK(p.eval({{Var::x, 1}}) == Rat(1, 2));
}

TEST_CASE("eval names the missing variable") {
    MPoly p = X(Var::ul) + X(Var::ut);
    CHECK_THROWS_WITH_AS(p.eval({{Var::ul, 1}}), doctest::Contains("u_t"), std::exception);
}

TEST_CASE("property: ring axioms on random polynomials") {
    for (int trial = 0; trial < 25; ++trial) {
        auto g = trial_rng(11, trial);
        MPoly a = random_poly(g, {Var::ul, Var::ut, Var::lam}, 6, 3);
        MPoly b = random_poly(g, {Var::ul, Var::ut, Var::lam}, 5, 3);
        MPoly c = random_poly(g, {Var::ul, Var::t}, 4, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        Assignment as{{Var::ul, random_rat(g)}, {Var::ut, random_rat(g)}, {Var::lam, random_rat(g)}, {Var::t, random_rat(g)}};
        CHECK((a * b).eval(as) == a.eval(as) * b.eval(as));
    }
}

TEST_CASE("property: parallel multiplication agrees with the serial reference") {
    for (int trial = 0; trial < 10; ++trial) {
        auto g = trial_rng(12, trial);
        MPoly a = random_poly(g, {Var::ul, Var::ut, Var::lam, Var::t}, 40, 4);
        MPoly b = random_poly(g, {Var::ul, Var::ut, Var::nu}, 30, 4);
        MPoly s = mul_serial(a, b);
        CHECK(mul_parallel(a, b, 1) == s);
        CHECK(mul_parallel(a, b, 3) == s);
        CHECK(mul_parallel(a, b, 16) == s);
        CHECK(a * b == s);
    }
}

TEST_CASE("exact division") {
    auto g = trial_rng(13, 0);
    MPoly a = random_poly(g, {Var::ul, Var::ut}, 5, 3) + 1;
    MPoly b = random_poly(g, {Var::ul, Var::ut}, 4, 3) + 2;
    auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    CHECK_FALSE(divide_exact(X(Var::x).pow(2) + 1, X(Var::x) - 1));
}

TEST_CASE("resultant examples") {
    MPoly x = X(Var::x), y = X(Var::ut);
    // Res_x(x^2 - 2, x - y) = y^2 - 2
    CHECK(resultant(x.pow(2) - 2, x - y, Var::x) == y.pow(2) - 2);
    // common root gives zero
    CHECK(resultant((x - 1) * (x + 2), (x - 1) * (x + 5), Var::x).is_zero());
    // Res(x^2 + 1, x^2 - 1) = 4
    CHECK(resultant(x.pow(2) + 1, x.pow(2) - 1, Var::x) == MPoly(4));
}

TEST_CASE("property: resultant vanishes at shared roots") {
    for (int trial = 0; trial < 8; ++trial) {
        auto g = trial_rng(14, trial);
        MPoly x = X(Var::x), y = X(Var::ut);
        Rat r = random_rat(g);
        MPoly f = (x - y - MPoly(r)) * random_poly(g, {Var::x, Var::ut}, 3, 2);
        MPoly h = (x - y - MPoly(r)) * (x + random_rat(g));
        CHECK(resultant(f, h, Var::x).is_zero());
    }
}

TEST_CASE("pseudo-remainder") {
    MPoly x = X(Var::x), y = X(Var::ut);
    auto r = pseudo_remainder(x.pow(2) + 1, x - 1, Var::x);
    CHECK(r.r == MPoly(2));
    CHECK(r.e == 0);
    auto s = pseudo_remainder(x.pow(2), y * x + 1, Var::x);
    CHECK(s.r == MPoly(1));
    CHECK(s.e == 2);
}

TEST_CASE("Bareiss determinant") {
    MPoly a = X(Var::ul), b = X(Var::ut);
    CHECK(bareiss_det({{a, b}, {b, a}}) == a.pow(2) - b.pow(2));
    CHECK(bareiss_det({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == MPoly(-3));
    CHECK(bareiss_det({{0, 1}, {1, 0}}) == MPoly(-1));
}

TEST_CASE("rational functions") {
    RatFunc x = R(Var::x), y = R(Var::ut);
    RatFunc f = 1 / (x - 1) - 1 / (x + 1);
    CHECK(f.equals(RatFunc(2) / (x * x - 1)));
    CHECK((f * (x * x - 1)).reduce().is_poly());
    CHECK(f.derivative(Var::x).equals(-2 * (1 / ((x - 1) * (x - 1)) - 1 / ((x + 1) * (x + 1))) / 2));
    CHECK(f.eval({{Var::x, 3}}) == Rat(1, 4));
    CHECK_THROWS(f.eval({{Var::x, 1}}));
    CHECK(f.substitute(Var::x, y + 1).equals(RatFunc(2) / (y * (y + 2))));
    CHECK_THROWS(RatFunc(1) / RatFunc());
}

TEST_CASE("property: field identities on random rational functions") {
    for (int trial = 0; trial < 15; ++trial) {
        auto g = trial_rng(15, trial);
        RatFunc a = RatFunc(random_poly(g, {Var::ul, Var::ut}, 3, 2) + 1) / RatFunc(random_poly(g, {Var::ul}, 2, 2) + 3);
        RatFunc b = RatFunc(random_poly(g, {Var::ut, Var::lam}, 3, 2) + 2) / RatFunc(random_poly(g, {Var::ut}, 3, 2) + 5);
        CHECK(((a + b) - b).equals(a));
        CHECK(((a * b) / b).equals(a));
        CHECK((a * (a + b)).equals(a * a + a * b));
        CHECK((a * b).derivative(Var::ut).equals(a.derivative(Var::ut) * b + a * b.derivative(Var::ut)));
        RatFunc r = a;
        CHECK(r.reduce().equals(a));
    }
}

TEST_CASE("univariate gcd, square-free part, root isolation") {
    UPoly p({Rat(-2), 0, 1});  // x^2 - 2
    UPoly q({Rat(1), 1});      // x + 1
    CHECK(gcd(p * q, q * q) == q);
    CHECK(squarefree_part(p * p * q) == (p * q).monic());
    auto iso = isolate_roots(p * q);
    CHECK(iso.certified);
    CHECK(iso.disks.size() == 3);
    // Wilkinson-like: roots 1..8
    UPoly w({Rat(1)});
    for (int k = 1; k <= 8; ++k) w = w * UPoly({Rat(-k), 1});
    auto iw = isolate_roots(w);
    CHECK(iw.certified);
    CHECK(iw.disks.size() == 8);
    for (auto& d : iw.disks) CHECK(d.radius < 0.5L);
}

TEST_CASE("matrices over rational functions") {
    RatFunc a = R(Var::ul), b = R(Var::ut);
    MatrixRF m{{a, 1}, {b, a + 1}};
    MatrixRF mi = m.inverse();
    CHECK((m * mi).is_identity());
    CHECK(m.det().equals(a * (a + 1) - b));
    CHECK((m * m.adjugate()).equals(MatrixRF::identity(2).scaled(m.det())));
    MatrixRF s{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(s.inverse(), SingularMatrix);
}

TEST_CASE("two-forms: wedge and pullback") {
    std::vector<Var> src = {Var::ul, Var::ut};
    // (z, w) = (u_l u_t, u_t): dz ^ dw = u_t du_l ^ du_t
    TwoForm om(std::vector<Var>{Var::z, Var::w});
    om.add(Var::z, Var::w, 1);
    std::map<Var, RatFunc> map = {{Var::z, R(Var::ul) * R(Var::ut)}, {Var::w, R(Var::ut)}};
    TwoForm pb = pullback_two_form(om, map, src);
    CHECK(pb.coeff(Var::ul, Var::ut).equals(R(Var::ut)));
    CHECK(pb.coeff(Var::ut, Var::ul).equals(-R(Var::ut)));
    TwoForm ww = wedge(differential(R(Var::ul), src), differential(R(Var::ul), src), src);
    CHECK(ww.coeff(Var::ul, Var::ut).is_zero());
}

}
