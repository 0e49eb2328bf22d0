#include "ellcon/maps.hpp"

#include "ellcon/apparent.hpp"

namespace ellcon {

RatFunc U_l() { return RatFunc::var(Var::ul); }
RatFunc U_t() { return RatFunc::var(Var::ut); }

SpecialPolys special_polys(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    const RatFunc &l = prm.lam, &t = prm.t;
    SpecialPolys s;
    s.PPi = t * l * ut - t * l * ul - t * ut * ul + l * ut * ul - l * ut + t * ul;
    s.PSigma = t * l * ut * ut - 2 * t * l * ut * ul - t * ut * ut * ul + l * ut * ut * ul + t * t * ul * ul -
               l * ut * ut - t * t * ul + t * l * ul + 2 * t * ut * ul - t * ul * ul;
    s.PLambda = l * ul - t * ul + l * t - l;
    s.delta = t * (t - 1) * (t - l) * ul * (ul - 1) * (ul - l);
    return s;
}

namespace {
RatFunc inv_product(const std::vector<RatFunc>& fs) {
    RatFunc r(1);
    for (auto& f : fs) {
        if (f.is_zero()) throw NonGeneric("denominator factor vanishes");
        r /= f;
    }
    return r;
}
}  // namespace

RatFunc inv_delta(const Params& prm, const RatFunc& ul) {
    const RatFunc &l = prm.lam, &t = prm.t;
    return inv_product({t, t - 1, t - l, ul, ul - 1, ul - l});
}

std::pair<RatFunc, RatFunc> phi_bun(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    const RatFunc &l = prm.lam, &t = prm.t;
    RatFunc zd = ul - l;
    RatFunc wd = special_polys(prm, ul, ut).PPi;
    if (zd.is_zero() || wd.is_zero()) throw NonGeneric("phi_bun: denominator vanishes");
    RatFunc z = l * (ul - 1) / zd;
    RatFunc w = l * ut * (l * ut - t * ul + t - l - ut + ul) / wd;
    return {z, w};
}

RatFunc ubar(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    const RatFunc &l = prm.lam, &t = prm.t;
    RatFunc pp = special_polys(prm, ul, ut).PPi;
    if (pp.is_zero()) throw NonGeneric("ubar: P_Pi vanishes");
    return t * ul * (l * ut - t * ul + t - l - ut + ul) / pp;
}

PsiPoint psi_bun_at(const Params& prm, const Rat& ul, const Rat& ut) {
    RatFunc pp = special_polys(prm, RatFunc(ul), RatFunc(ut)).PPi;
    if (!pp.is_const()) throw std::invalid_argument("psi_bun_at: parameters must be specialized");
    if (pp.const_value() == 0) return {true, 0};
    return {false, ubar(prm, RatFunc(ul), RatFunc(ut)).const_value()};
}

MatrixRF t_psi_closed(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    const RatFunc &l = prm.lam, &t = prm.t, &nu = prm.nu;
    auto sp = special_polys(prm, ul, ut);
    RatFunc T10 = -2 * nu * sp.PPi * (t * l - t * ul + l * ul - l);
    RatFunc T20 = nu * t * (t - 1) *
                  (2 * l * l * ut - 2 * t * l * ul + t * ul * ul - l * ul * ul + t * l - l * l - 2 * l * ut + 2 * l * ul);
    RatFunc T11 = -sp.PPi * sp.PPi;
    RatFunc T21 = -t * (t - 1) *
                  (-l * l * ut * ut + 2 * t * l * ut * ul - t * l * ul * ul - t * ut * ul * ul + l * ut * ul * ul -
                   t * l * ut + l * l * ut + l * ut * ut - 2 * l * ut * ul + t * ul * ul);
    RatFunc id = inv_delta(prm, ul);
    return MatrixRF{{1, 0, 0}, {T10 * id, T11 * id, 0}, {T20 * id, T21 * id, 1}};
}

MatrixRF t_psi_derived(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    // c -> c' with app_psi(family(psi u, c'), psi u) ~ app_infty(family(u, c)):
    // Npsi(psi u) (1, c') = rho Ninf(u) (1, c)
    RatFunc ub = ubar(prm, ul, ut);
    auto here = coefficient_matrices(prm, ul, ut);
    auto there = coefficient_matrices(prm, ul, ub);
    MatrixRF X = there.Npsi.adjugate() * here.Ninf;
    for (int j = 1; j < 3; ++j)
        if (!X(0, j).is_zero()) throw NonGeneric("t_psi_derived: action is not affine");
    RatFunc s = X(0, 0);
    if (s.is_zero()) throw NonGeneric("t_psi_derived: singular linear system");
    MatrixRF T = X.scaled(s.inverse());
    return T.map([](const RatFunc& f) {
        RatFunc g = f;
        return g.reduce();
    });
}

MatrixRF b_matrix(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    MatrixRF T = t_psi_closed(prm, ul, ubar(prm, ul, ut));
    MatrixRF S = MatrixRF::identity(3) + T;
    // lower triangular: invert directly
    RatFunc d = S(1, 1);
    if (d.is_zero()) throw SingularMatrix("Id + T_psi is singular");
    RatFunc two(2);
    MatrixRF B(3, 3);
    B(0, 0) = two / S(0, 0);
    B(1, 1) = two / d;
    B(2, 2) = two / S(2, 2);
    B(1, 0) = -two * S(1, 0) / (S(0, 0) * d);
    B(2, 1) = -two * S(2, 1) / (d * S(2, 2));
    B(2, 0) = two * (S(2, 1) * S(1, 0) - S(2, 0) * d) / (S(0, 0) * d * S(2, 2));
    return B.map([](const RatFunc& f) {
        RatFunc g = f;
        return g.reduce();
    });
}

MatrixRF b_closed(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    const RatFunc &l = prm.lam, &t = prm.t, &nu = prm.nu;
    auto sp = special_polys(prm, ul, ut);
    RatFunc B10 = 2 * nu * sp.PPi;
    RatFunc u = ul, v = ut;
    RatFunc B20 =
        -nu * (-2 * t * l * l * v * v * u + 3 * t * l * v * v * u * u + 2 * t * t * l * u * u * u - 2 * t * l * v * u * u * u -
               t * v * v * u * u * u + l * v * v * u * u * u - t * t * u * u * u * u + t * l * l * v * v +
               2 * t * l * l * v * u - t * l * v * v * u + l * l * v * v * u - 3 * t * t * l * u * u -
               3 * l * v * v * u * u + t * t * u * u * u - t * l * u * u * u + 2 * t * v * u * u * u + t * u * u * u * u -
               l * l * v * v + t * t * l * u - t * l * l * u - 2 * t * l * v * u + 2 * l * v * v * u + 3 * t * l * u * u -
               2 * t * u * u * u);
    RatFunc B11 = 2 * sp.PPi * sp.PPi;
    RatFunc B21 = -t * (t - 1) *
                  (l * l * v * v - 2 * t * l * v * u + t * l * u * u + t * v * u * u - l * v * u * u + t * l * v -
                   l * l * v - l * v * v + 2 * l * v * u - t * u * u);
    RatFunc inv_ab = inv_product({RatFunc(2), u, u - 1, u - l, sp.PSigma});
    RatFunc inv_gb = inv_product({sp.PLambda, sp.PSigma});
    RatFunc inv_b = inv_product({sp.PSigma});
    return MatrixRF{{1, 0, 0}, {B10 * inv_b, B11 * inv_gb, 0}, {B20 * inv_ab, B21 * inv_gb, 1}};
}

std::pair<RatFunc, RatFunc> equivariant_offset(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    // B^{-1} = (Id + T(u_l, ubar)) / 2
    MatrixRF T = t_psi_closed(prm, ul, ubar(prm, ul, ut));
    RatFunc half(Rat(1, 2));
    return {T(1, 0) * half, T(2, 0) * half};
}

MatrixRF j_matrix(const Params& prm) {
    RatFunc ul = U_l(), ut = U_t();
    auto [z, w] = phi_bun(prm, ul, ut);
    auto [c1, c2] = equivariant_offset(prm, ul, ut);
    RatFunc half(Rat(1, 2));
    return MatrixRF{{1, 0, 0},
                    {c1, z.derivative(Var::ut) * half, w.derivative(Var::ut) * half},
                    {c2, z.derivative(Var::ul) * half, w.derivative(Var::ul) * half}};
}

MatrixRF c_matrix(const Params& prm) {
    MatrixRF C = b_matrix(prm, U_l(), U_t()) * j_matrix(prm);
    return C.map([](const RatFunc& f) {
        RatFunc g = f;
        return g.reduce();
    });
}

MatrixRF c_inverse(const Params& prm) { return c_matrix(prm).inverse(); }

MatrixRF c_inverse_closed(const Params& prm) {
    const RatFunc &l = prm.lam, &t = prm.t;
    auto [z, w] = phi_bun(prm, U_l(), U_t());
    RatFunc zl = z - l;
    RatFunc K11 = (w * t - w * l - t * l + l) / (zl * zl);
    RatFunc K12 = 2 * l * (1 - l) / (zl * zl);
    RatFunc K21 = (z - t) / zl;
    return MatrixRF{{1, 0, 0}, {0, K11, K12}, {0, K21, 0}};
}

PhiFull phi_full(const Params& prm, const RatFunc& c1, const RatFunc& c2) {
    RatFunc ul = U_l(), ut = U_t();
    auto [z, w] = phi_bun(prm, ul, ut);
    auto [o1, o2] = equivariant_offset(prm, ul, ut);
    // J = [[1,0,0],[o1,0,b],[o2,c,d]] because z does not depend on u_t
    RatFunc half(Rat(1, 2));
    RatFunc b = w.derivative(Var::ut) * half;
    RatFunc c = z.derivative(Var::ul) * half;
    RatFunc d = w.derivative(Var::ul) * half;
    if (!z.derivative(Var::ut).is_zero()) throw std::logic_error("z depends on u_t");
    RatFunc d1 = c1 - o1, d2 = c2 - o2;
    // [[0,b],[c,d]]^{-1} = [[d,-b],[-c,0]] / (-b c)
    RatFunc k1 = (b * d2 - d * d1) / (b * c);
    RatFunc k2 = d1 / b;
    return {z, w, k1, k2};
}

std::vector<IdentityCheck> invariant_identities(const Params& prm) {
    const RatFunc &l = prm.lam, &t = prm.t;
    RatFunc ul = U_l(), ut = U_t();
    auto [z, w] = phi_bun(prm, ul, ut);
    RatFunc ub = ubar(prm, ul, ut);
    std::vector<IdentityCheck> out;
    {
        RatFunc lhs = w * t * ul - l * ut * ub;
        out.push_back({"w t u_l = l u_t ubar", lhs.is_zero(), lhs.to_string()});
    }
    {
        RatFunc lhs = ut + ub;
        RatFunc rhs = (z * w + (z - w) * t - l) / (z - l);
        out.push_back({"u_t + ubar = (zw + (z-w)t - l)/(z-l)", lhs.equals(rhs), ""});
    }
    {
        RatFunc lhs = ut * ub;
        RatFunc rhs = w * t * (z - 1) / (z - l);
        out.push_back({"u_t ubar = w t (z-1)/(z-l)", lhs.equals(rhs), ""});
    }
    {
        RatFunc back = l * (z - 1) / (z - l);
        out.push_back({"u_l = l (z-1)/(z-l)", back.equals(ul), ""});
    }
    {
        auto [z2, w2] = phi_bun(prm, ul, ub);
        out.push_back({"phi o psi = phi", z2.equals(z) && w2.equals(w), ""});
    }
    {
        RatFunc ubb = ubar(prm, ul, ub);
        out.push_back({"ubar(ubar) = u_t", ubb.equals(ut), ""});
    }
    return out;
}

std::pair<TwoForm, TwoForm> symplectic_pullback(const Params& prm) {
    PhiFull f = phi_full(prm, RatFunc::var(Var::c1), RatFunc::var(Var::c2));
    TwoForm omega_c({Var::k1, Var::z, Var::k2, Var::w});
    omega_c.add(Var::k1, Var::z, 1);
    omega_c.add(Var::k2, Var::w, 1);
    std::vector<Var> src{Var::ul, Var::ut, Var::c1, Var::c2};
    std::map<Var, RatFunc> mp{{Var::z, f.z}, {Var::w, f.w}, {Var::k1, f.k1}, {Var::k2, f.k2}};
    TwoForm pulled = pullback_two_form(omega_c, mp, src);
    TwoForm expect(src);
    expect.add(Var::c1, Var::ut, 2);
    expect.add(Var::c2, Var::ul, 2);
    return {pulled, expect};
}

bool verify_symplectic_factor(const Params& prm) {
    auto [pulled, expect] = symplectic_pullback(prm);
    return pulled.equals(expect);
}

LagrangianResult lagrangian_divergence(const Params& prm) {
    auto [c1, c2] = equivariant_offset(prm, U_l(), U_t());
    RatFunc a = c1.derivative(Var::ul), b = c2.derivative(Var::ut);
    return {a + b, a - b};
}

bool verify_lagrangian(const Params& prm) { return lagrangian_divergence(prm).stated.is_zero(); }

bool FixedLocusReport::pass() const {
    for (auto& r : rows)
        if (!r.prem.r.is_zero()) return false;
    return true;
}

FixedLocusReport fixed_locus(const Params& prm, int sign, const Rat& offset) {
    RatFunc ul = U_l(), ut = U_t();
    auto sp = special_polys(prm, ul, ut);
    FixedLocusReport rep;
    rep.c1_star = RatFunc(sign) * prm.nu * sp.PPi * sp.PLambda * inv_delta(prm, ul) + RatFunc(offset);
    MatrixRF T = t_psi_closed(prm, ul, ubar(prm, ul, ut)) - MatrixRF::identity(3);
    MatrixRF v{{1}, {rep.c1_star}, {RatFunc::var(Var::c2)}};
    MatrixRF r = T * v;
    if (!sp.PSigma.is_poly()) throw std::logic_error("P_Sigma is not a polynomial");
    for (int i = 1; i < 3; ++i) {
        MPoly n = r(i, 0).num();
        rep.rows.push_back({n, pseudo_remainder(n, sp.PSigma.num(), Var::ut)});
    }
    return rep;
}

LocalModelReport verify_local_model() {
    LocalModelReport rep;
    RatFunc y1 = RatFunc::var(Var::y1), y2 = RatFunc::var(Var::y2), y3 = RatFunc::var(Var::y3),
            y4 = RatFunc::var(Var::y4);
    std::map<Var, RatFunc> q{{Var::x0, y1 * y2}, {Var::x1, y1 * y1}, {Var::x2, y2 * y2}, {Var::x3, y3}, {Var::x4, y4}};
    RatFunc x0 = RatFunc::var(Var::x0), x1 = RatFunc::var(Var::x1), x2 = RatFunc::var(Var::x2);
    rep.cone_identity = (x0 * x0 - x1 * x2).compose(q).is_zero();
    std::map<Var, RatFunc> flip{{Var::y1, -y1}, {Var::y2, -y2}};
    rep.sign_invariant = true;
    for (auto& [v, e] : q)
        if (!e.compose(flip).equals(e)) rep.sign_invariant = false;
    TwoForm om({Var::x0, Var::x1, Var::x2, Var::x3, Var::x4});
    om.add(Var::x1, Var::x2, RatFunc(Rat(1, 4)) / x0);
    om.add(Var::x3, Var::x4, 1);
    std::vector<Var> src{Var::y1, Var::y2, Var::y3, Var::y4};
    TwoForm pulled = pullback_two_form(om, q, src);
    TwoForm expect(src);
    expect.add(Var::y1, Var::y2, 1);
    expect.add(Var::y3, Var::y4, 1);
    rep.form_pullback = pulled.equals(expect);
    return rep;
}

std::string GenericityFlags::describe() const {
    std::string s;
    auto add = [&](bool f, const char* n) {
        if (!f) return;
        if (!s.empty()) s += ",";
        s += n;
    };
    add(ul_special, "u_l in {0,1,l}");
    add(ut_special, "u_t in {0,1,l,t}");
    add(on_pi, "P_Pi=0");
    add(on_sigma, "P_Sigma=0");
    add(on_lambda, "P_Lambda=0");
    return s.empty() ? "generic" : s;
}

GenericityFlags genericity_guard(const Params& prm, const Rat& ul, const Rat& ut) {
    if (!prm.specialized()) throw std::invalid_argument("genericity_guard: parameters must be specialized");
    Rat l = prm.lam.const_value(), t = prm.t.const_value();
    GenericityFlags g;
    g.ul_special = ul == 0 || ul == 1 || ul == l;
    g.ut_special = ut == 0 || ut == 1 || ut == l || ut == t;
    auto sp = special_polys(prm, RatFunc(ul), RatFunc(ut));
    g.on_pi = sp.PPi.const_value() == 0;
    g.on_sigma = sp.PSigma.const_value() == 0;
    g.on_lambda = sp.PLambda.const_value() == 0;
    return g;
}

}  // namespace ellcon
