#include "ellcon/apparent.hpp"

#include "ellcon/maps.hpp"
#include "ellcon/sampling.hpp"

namespace ellcon {

AppCoeffMatrices coefficient_matrices(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    AppCoeffMatrices r;
    const int cs[3][2] = {{0, 0}, {1, 0}, {0, 1}};
    for (int j = 0; j < 3; ++j) {
        FuchsianSystem sys = family(prm, ul, ut, RatFunc(cs[j][0]), RatFunc(cs[j][1]));
        AppClass A = app_infty(sys), S = app_psi(sys, ul);
        for (int i = 0; i < 3; ++i) {
            r.Ninf(i, j) = A.a[i];
            r.Npsi(i, j) = S.a[i];
        }
    }
    for (int j = 1; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            r.Ninf(i, j) = (r.Ninf(i, j) - r.Ninf(i, 0)).reduce();
            r.Npsi(i, j) = (r.Npsi(i, j) - r.Npsi(i, 0)).reduce();
        }
    return r;
}

MatrixRF m_matrix(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    auto n = coefficient_matrices(prm, ul, ut);
    if (n.Ninf.det().is_zero()) throw NonGeneric("m_matrix: N_inf is singular");
    MatrixRF m = n.Npsi * n.Ninf.adjugate();
    return m.map([](const RatFunc& f) {
        RatFunc g = f;
        return g.reduce();
    });
}

AppClass apply(const MatrixRF& m, const AppClass& a) {
    AppClass r;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) r.a[i] += m(i, k) * a.a[k];
    return r;
}

bool SymPair::equals(const SymPair& o) const {
    return (a.proportional(o.a) && s.proportional(o.s)) || (a.proportional(o.s) && s.proportional(o.a));
}

SymPair app_c(const Params& prm, const RatFunc& ul, const RatFunc& ut, const RatFunc& c1, const RatFunc& c2) {
    FuchsianSystem sys = family(prm, ul, ut, c1, c2);
    return {app_infty(sys), app_psi(sys, ul)};
}

namespace {

MPoly as_poly(RatFunc f, const char* what) {
    f.reduce();
    if (!f.is_poly()) throw std::logic_error(std::string(what) + " is not polynomial in u");
    return f.num();
}

UPoly in_ul(const MPoly& p) { return UPoly::from_mpoly(p, Var::ul); }

FiberReport fiber_with(const MatrixRF& M, const AppClass& a, const AppClass& s, const Params& prm) {
    FiberReport rep;
    Rat av[3], sv[3];
    for (int i = 0; i < 3; ++i) {
        if (!a.a[i].is_const() || !s.a[i].is_const()) throw std::invalid_argument("fiber_count: a and s must be rational");
        av[i] = a.a[i].const_value();
        sv[i] = s.a[i].const_value();
    }
    if (sv[0] == 0) {
        rep.resample = true;
        rep.note = "s0 = 0";
        return rep;
    }
    MPoly v[3];
    for (int i = 0; i < 3; ++i) {
        RatFunc e;
        for (int k = 0; k < 3; ++k) e += M(i, k) * RatFunc(av[k]);
        v[i] = as_poly(e, "M a");
    }
    MPoly e1 = v[0].scaled(sv[1]) - v[1].scaled(sv[0]);
    MPoly e2 = v[0].scaled(sv[2]) - v[2].scaled(sv[0]);

    UPoly R = in_ul(resultant(e1, e2, Var::ut));
    if (R.is_zero()) {
        rep.resample = true;
        rep.note = "resultant vanishes identically";
        return rep;
    }
    rep.eliminant_degree = R.degree();
    UPoly cur = squarefree_part(R);
    rep.squarefree_degree = cur.degree();

    // common u_t from the first subresultant L u_t + K
    MPoly p = e1, q = e2;
    if (p.degree(Var::ut) < q.degree(Var::ut)) std::swap(p, q);
    while (q.degree(Var::ut) > 1) {
        MPoly r = pseudo_remainder(p, q, Var::ut).r;
        p = q;
        q = r;
    }
    if (q.degree(Var::ut) < 1) {
        rep.resample = true;
        rep.note = "no linear subresultant";
        return rep;
    }
    auto lk = q.coeffs_in(Var::ut);
    MPoly L = lk[1], K = lk[0];
    if (gcd(cur, in_ul(L)).degree() > 0) {
        rep.resample = true;
        rep.note = "two common u_t over a root";
        return rep;
    }

    const RatFunc &l = prm.lam, &t = prm.t;
    RatFunc U = U_l(), T = U_t();
    RatFunc ut_sol(-K, L);
    auto sp = special_polys(prm, U, T);
    std::vector<std::pair<std::string, UPoly>> excl;
    excl.push_back({"both u_t leading coefficients", gcd(in_ul(e1.lc_in(Var::ut)), in_ul(e2.lc_in(Var::ut)))});
    excl.push_back({"u_l in {0,1,l}", in_ul(as_poly(U * (U - 1) * (U - l), "u_l lines"))});
    excl.push_back({"P_Lambda", in_ul(as_poly(sp.PLambda, "P_Lambda"))});
    std::pair<const char*, RatFunc> on_line[] = {{"u_t = 0", T},           {"u_t = 1", T - 1},
                                                 {"u_t = l", T - l},       {"u_t = t", T - t},
                                                 {"P_Pi", sp.PPi},         {"P_Sigma", sp.PSigma},
                                                 {"M a = 0", RatFunc(v[0])}};
    for (auto& [name, f] : on_line) {
        RatFunc g = f.substitute(Var::ut, ut_sol);
        excl.push_back({name, in_ul(g.num())});
    }
    for (auto& [name, e] : excl) {
        UPoly g = gcd(cur, e);
        if (g.degree() > 0) {
            rep.removed.push_back({name, g.degree()});
            cur = cur / g;
        }
    }
    rep.survivors = cur;
    rep.count = cur.degree();
    Isolation iso = isolate_roots(cur);
    rep.certified = iso.certified;
    if (!iso.certified) rep.note = iso.note;
    return rep;
}

}  // namespace

FiberReport fiber_count(const AppClass& a, const AppClass& s, const Params& prm) {
    if (!prm.specialized()) throw std::invalid_argument("fiber_count: parameters must be specialized");
    return fiber_with(m_matrix(prm, U_l(), U_t()), a, s, prm);
}

FiberReport fiber_count_random(const Params& prm, std::uint64_t seed, AppClass* a_out, AppClass* s_out) {
    if (!prm.specialized()) throw std::invalid_argument("fiber_count: parameters must be specialized");
    MatrixRF M = m_matrix(prm, U_l(), U_t());
    FiberReport rep;
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto g = trial_rng(seed, attempt);
        AppClass a, s;
        for (int i = 0; i < 3; ++i) a.a[i] = RatFunc(random_rat(g));
        for (int i = 0; i < 3; ++i) s.a[i] = RatFunc(random_rat(g));
        rep = fiber_with(M, a, s, prm);
        if (rep.generic()) {
            if (a_out) *a_out = a;
            if (s_out) *s_out = s;
            return rep;
        }
    }
    return rep;
}

bool non_eigen(const std::vector<std::vector<Rat>>& m, const std::vector<Rat>& a) {
    auto mul = [&](const std::vector<Rat>& x) {
        std::vector<Rat> y(3);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) y[i] += m[i][k] * x[k];
        return y;
    };
    auto b = mul(mul(a));
    Rat c0 = b[1] * a[2] - b[2] * a[1];
    Rat c1 = b[2] * a[0] - b[0] * a[2];
    Rat c2 = b[0] * a[1] - b[1] * a[0];
    return c0 != 0 || c1 != 0 || c2 != 0;
}

WitnessReport injectivity_witness(const Params& prm, int samples, std::uint64_t seed) {
    if (!prm.specialized()) throw std::invalid_argument("injectivity_witness: parameters must be specialized");
    auto n = coefficient_matrices(prm, U_l(), U_t());
    MatrixRF M = (n.Npsi * n.Ninf.adjugate()).map([](const RatFunc& f) {
        RatFunc g = f;
        return g.reduce();
    });
    WitnessReport rep;
    rep.samples = samples;
    int failures = 0, skipped = 0;
#pragma omp parallel for reduction(+ : failures, skipped) schedule(dynamic)
    for (int i = 0; i < samples; ++i) {
        auto g = trial_rng(seed, static_cast<std::uint64_t>(i));
        Rat ul, ut;
        for (;;) {
            ul = random_rat(g);
            ut = random_rat(g);
            if (!genericity_guard(prm, ul, ut).any()) break;
            ++skipped;
        }
        Rat c1 = random_rat(g), c2 = random_rat(g);
        Assignment as;
        as.set(Var::ul, ul);
        as.set(Var::ut, ut);
        auto N = n.Ninf.values(as);
        std::vector<Rat> a(3);
        for (int r = 0; r < 3; ++r) a[r] = N[r][0] + N[r][1] * c1 + N[r][2] * c2;
        if (!non_eigen(M.values(as), a)) ++failures;
    }
    rep.failures = failures;
    rep.skipped = skipped;
    return rep;
}

}  // namespace ellcon
