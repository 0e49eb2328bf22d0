#include "ellcon/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "ellcon/apparent.hpp"
#include "ellcon/maps.hpp"
#include "ellcon/monodromy.hpp"
#include "ellcon/sampling.hpp"

namespace ellcon::verify {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::exact: return "exact";
        case Mode::specialized: return "specialized";
        case Mode::sampled: return "sampled";
    }
    return "?";
}

std::vector<Params> builtin_params() {
    return {Params::at(2, 3, Rat(1, 5)), Params::at(Rat(-3), Rat(5, 2), Rat(2, 7)), Params::at(Rat(7, 3), Rat(-4), Rat(3, 11))};
}

std::vector<Params> random_params(std::uint64_t seed, int n) {
    std::vector<Params> out;
    for (int k = 0; out.size() < static_cast<size_t>(n); ++k) {
        auto g = trial_rng(seed, 0x9a7a0000u + k);
        Rat l = random_rat(g, 20, 7), t = random_rat(g, 20, 7), nu = random_rat(g, 10, 13);
        if (l == 0 || l == 1 || t == 0 || t == 1 || l == t || nu == 0) continue;
        Rat two_nu = 2 * nu;
        if (two_nu.get_den() == 1) continue;
        out.push_back(Params::at(l, t, nu));
    }
    return out;
}

namespace {

using mono::cd;

std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3e", x);
    return b;
}

Json mat_json(const MatrixRF& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
        a.push_back(r);
    }
    return a;
}

std::set<Var> vars_of(const RatFunc& f) {
    std::set<Var> s;
    for (Var v : f.num().vars()) s.insert(v);
    for (auto& [p, e] : f.den_factors())
        for (Var v : p.vars()) s.insert(v);
    return s;
}

struct Ctx {
    const Config& cfg;
    Params prm;
    bool symbolic = false;
    std::uint64_t stream = 0;
    bool used_sampling = false;

    int trials(int def) const { return cfg.trials > 0 ? cfg.trials : def; }
    std::mt19937_64 rng(std::uint64_t salt) const { return trial_rng(cfg.seed, stream * 1000003u + salt); }
    bool sampled() const { return cfg.mode == Mode::sampled && !symbolic; }

    // exact identity, or Schwartz-Zippel style agreement at random rational points in sampled mode
    bool eq(const RatFunc& a, const RatFunc& b) {
        if (!sampled()) return a.equals(b);
        used_sampling = true;
        std::set<Var> vs = vars_of(a);
        for (Var v : vars_of(b)) vs.insert(v);
        auto g = rng(0x5a);
        int n = trials(3), done = 0;
        for (int attempt = 0; done < n && attempt < 20 * n; ++attempt) {
            Assignment as;
            for (Var v : vs) as.set(v, random_rat(g, 1000, 97));
            try {
                if (a.eval(as) != b.eval(as)) return false;
                ++done;
            } catch (const std::domain_error&) {
            }
        }
        return done == n;
    }
    bool eqm(const MatrixRF& a, const MatrixRF& b) {
        if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (!eq(a(i, j), b(i, j))) return false;
        return true;
    }
    bool zero(const RatFunc& a) { return eq(a, RatFunc()); }
};

enum class Kind { per_params, once, numeric };

struct Check {
    const char* id;
    const char* group;
    const char* ref;
    Kind kind;
    std::function<bool(Ctx&, Json&)> body;
};

Params standard() { return Params::at(2, 3, Rat(1, 5)); }

RatFunc ev(const RatFunc& f, Var v, const RatFunc& r) { return f.substitute(v, r); }

MatrixRF subst(const MatrixRF& m, const std::map<Var, RatFunc>& s) {
    return m.map([&](const RatFunc& f) { return f.compose(s); });
}

Assignment std_point() {
    Assignment a;
    a.set(Var::ul, 5);
    a.set(Var::ut, 7);
    return a;
}

double nu_d(const Params& p) { return p.nu.const_value().get_d(); }

const std::vector<Check>& table() {
    static const std::vector<Check> t = {
        // bundles
        {"bundles.phi_anchor", "bundles", "(z,w)(u_l=5,u_t=7) = (8/3,14/11) at l=2, t=3", Kind::once,
         [](Ctx& c, Json& d) {
             auto [z, w] = phi_bun(c.prm, RatFunc(5), RatFunc(7));
             d["z"] = z.to_string();
             d["w"] = w.to_string();
             return z.equals(RatFunc(Rat(8, 3))) && w.equals(RatFunc(Rat(14, 11)));
         }},
        {"bundles.phi_boundary", "bundles", "u_l=0 -> z=1; u_l=1 -> z=0; u_t=0 -> w=0", Kind::per_params,
         [](Ctx& c, Json& d) {
             auto [z, w] = phi_bun(c.prm, U_l(), U_t());
             bool a = c.eq(ev(z, Var::ul, 0), 1), b = c.zero(ev(z, Var::ul, 1)), e = c.zero(ev(w, Var::ut, 0));
             d["z(u_l=0)=1"] = a;
             d["z(u_l=1)=0"] = b;
             d["w(u_t=0)=0"] = e;
             return a && b && e;
         }},
        {"bundles.invariants", "bundles", "w t u_l = l u_t ubar; u_t+ubar, u_t ubar through (z,w); u_l from z",
         Kind::per_params,
         [](Ctx& c, Json& d) {
             bool ok = true;
             for (auto& r : invariant_identities(c.prm)) {
                 d[r.name] = r.pass;
                 ok = ok && r.pass;
             }
             return ok;
         }},
        {"bundles.invariants_anchor", "bundles", "u_t + ubar = 92/11 at (l,t,u_l,u_t) = (2,3,5,7)", Kind::once,
         [](Ctx& c, Json& d) {
             auto [z, w] = phi_bun(c.prm, RatFunc(5), RatFunc(7));
             RatFunc s = RatFunc(7) + ubar(c.prm, RatFunc(5), RatFunc(7));
             const RatFunc &l = c.prm.lam, &t = c.prm.t;
             RatFunc rhs = (z * w + (z - w) * t - l) / (z - l);
             d["u_t+ubar"] = s.to_string();
             d["rhs"] = rhs.to_string();
             return s.equals(RatFunc(Rat(92, 11))) && rhs.equals(s);
         }},
        {"bundles.genericity_guard", "bundles", "guard flags on the exceptional curves", Kind::once,
         [](Ctx& c, Json& d) {
             auto g0 = genericity_guard(c.prm, 5, 7);
             auto g1 = genericity_guard(c.prm, 2, 7);
             auto g2 = genericity_guard(c.prm, 5, -15);
             d["(5,7)"] = g0.describe();
             d["(l,7)"] = g1.describe();
             d["(5,-15)"] = g2.describe();
             return !g0.any() && g1.ul_special && g2.on_pi;
         }},
        {"bundles.family_residues", "bundles",
         "nabla0 residues act on the parabolic lines by nu+; Theta residues nilpotent with those kernels; Fuchs relation",
         Kind::per_params,
         [](Ctx& c, Json& d) {
             RatFunc ul = U_l(), ut = U_t();
             auto parab = chart_parabolics(ul, ut);
             auto spec = nabla0_spectrum(c.prm);
             FuchsianSystem n0 = nabla0(c.prm, ul, ut);
             bool ok = check_fuchs(n0, 0);
             d["fuchs"] = ok;
             for (Pole p : kAllPoles) {
                 bool e = is_eigenvector(n0.residue_at(p), parab.at(p), spec.at(p).plus);
                 d["nabla0@" + pole_name(p)] = e;
                 ok = ok && e;
             }
             int k = 1;
             for (auto th : {theta1(c.prm, ul, ut), theta2(c.prm, ul, ut)}) {
                 for (Pole p : kAllPoles) {
                     bool e = is_nilpotent_with_kernel(th.residue_at(p), parab.at(p));
                     d["theta" + std::to_string(k) + "@" + pole_name(p)] = e;
                     ok = ok && e;
                 }
                 ++k;
             }
             return ok;
         }},
        // involution
        {"involution.t_product", "involution", "T_psi(u) T_psi(psi u) = Id", Kind::per_params,
         [](Ctx& c, Json&) {
             MatrixRF a = t_psi_closed(c.prm, U_l(), U_t());
             MatrixRF b = t_psi_closed(c.prm, U_l(), ubar(c.prm, U_l(), U_t()));
             return c.eqm(a * b, MatrixRF::identity(3));
         }},
        {"involution.ubar_twice", "involution", "ubar(ubar(u_t)) = u_t", Kind::per_params,
         [](Ctx& c, Json&) { return c.eq(ubar(c.prm, U_l(), ubar(c.prm, U_l(), U_t())), U_t()); }},
        {"involution.anchor", "involution", "ubar = 15/11 at (2,3,5,7), and back to 7", Kind::once,
         [](Ctx& c, Json& d) {
             RatFunc b = ubar(c.prm, RatFunc(5), RatFunc(7));
             RatFunc bb = ubar(c.prm, RatFunc(5), b);
             d["ubar"] = b.to_string();
             d["ubar(ubar)"] = bb.to_string();
             return b.equals(RatFunc(Rat(15, 11))) && bb.equals(RatFunc(7));
         }},
        {"involution.pi_to_infinity", "involution", "points of P_Pi = 0 are sent to u_t = inf", Kind::once,
         [](Ctx& c, Json& d) {
             auto p = psi_bun_at(c.prm, 5, -15);
             d["(5,-15)"] = p.at_infinity ? "inf" : to_string(p.ut);
             return p.at_infinity;
         }},
        // tpsi
        {"tpsi.derived", "tpsi", "affine action solving app_psi(family(psi u,c'),psi u) ~ app_infty(family(u,c)) = closed-form T_psi",
         Kind::per_params,
         [](Ctx& c, Json&) { return c.eqm(t_psi_derived(c.prm, U_l(), U_t()), t_psi_closed(c.prm, U_l(), U_t())); }},
        {"tpsi.t11", "tpsi", "T11/delta = -1 - P_Sigma P_Lambda/delta", Kind::per_params,
         [](Ctx& c, Json&) {
             MatrixRF T = t_psi_closed(c.prm, U_l(), U_t());
             auto sp = special_polys(c.prm, U_l(), U_t());
             return c.eq(T(1, 1), RatFunc(-1) - sp.PSigma * sp.PLambda * inv_delta(c.prm, U_l()));
         }},
        {"tpsi.anchor", "tpsi", "T11/delta = -121/90 at (2,3,5,7)", Kind::once,
         [](Ctx& c, Json& d) {
             MatrixRF T = t_psi_closed(c.prm, RatFunc(5), RatFunc(7));
             d["T"] = mat_json(T);
             return T(1, 1).equals(RatFunc(Rat(-121, 90)));
         }},
        // basechange
        {"basechange.b_closed_form", "basechange", "2 (Id + T_psi(u_l,ubar))^-1 = closed form with beta = P_Sigma, gamma = P_Lambda",
         Kind::per_params,
         [](Ctx& c, Json&) { return c.eqm(b_matrix(c.prm, U_l(), U_t()), b_closed(c.prm, U_l(), U_t())); }},
        {"basechange.det_b", "basechange", "det(B) P_Lambda P_Sigma = 2 P_Pi^2", Kind::per_params,
         [](Ctx& c, Json&) {
             auto sp = special_polys(c.prm, U_l(), U_t());
             RatFunc lhs = b_matrix(c.prm, U_l(), U_t()).det() * sp.PLambda * sp.PSigma;
             return c.eq(lhs, 2 * sp.PPi * sp.PPi);
         }},
        {"basechange.first_rows", "basechange", "first row of T_psi, B, J, C, C^-1 is (1,0,0)", Kind::per_params,
         [](Ctx& c, Json& d) {
             MatrixRF ms[] = {t_psi_closed(c.prm, U_l(), U_t()), b_matrix(c.prm, U_l(), U_t()), j_matrix(c.prm),
                              c_matrix(c.prm), c_inverse(c.prm)};
             const char* names[] = {"Tpsi", "B", "J", "C", "Cinv"};
             bool ok = true;
             for (int k = 0; k < 5; ++k) {
                 bool r = ms[k](0, 0).equals(1) && ms[k](0, 1).is_zero() && ms[k](0, 2).is_zero();
                 d[names[k]] = r;
                 ok = ok && r;
             }
             return ok;
         }},
        {"basechange.c_inverse", "basechange", "C^-1 = [[1,0,0],[0,K11,K12],[0,K21,0]] through (z,w)", Kind::per_params,
         [](Ctx& c, Json&) { return c.eqm(c_inverse(c.prm), c_inverse_closed(c.prm)); }},
        {"basechange.c_psi_invariant", "basechange", "C(u_l,ubar) = C(u_l,u_t)", Kind::per_params,
         [](Ctx& c, Json&) {
             MatrixRF C = c_matrix(c.prm);
             return c.eqm(subst(C, {{Var::ut, ubar(c.prm, U_l(), U_t())}}), C);
         }},
        {"basechange.jinv_lambda", "basechange", "J^-1 = C^-1 B has no pole along P_Lambda", Kind::per_params,
         [](Ctx& c, Json& d) {
             MatrixRF Ji = c_inverse(c.prm) * b_matrix(c.prm, U_l(), U_t());
             MPoly pl = special_polys(c.prm, U_l(), U_t()).PLambda.num().content_primitive().second;
             bool ok = Ji.equals(j_matrix(c.prm).inverse());
             d["equals J^-1"] = ok;
             bool clear = true;
             for (int i = 0; i < 3; ++i)
                 for (int j = 0; j < 3; ++j) {
                     RatFunc e = Ji(i, j);
                     e.reduce();
                     // factors are not always irreducible, so count multiplicities on both sides
                     int order = 0;
                     for (auto& [f, k] : e.den_factors())
                         for (MPoly g = f; auto q = divide_exact(g, pl); g = *q) order += k;
                     for (MPoly g = e.num(); order > 0 && !g.is_zero();) {
                         auto q = divide_exact(g, pl);
                         if (!q) break;
                         g = *q;
                         --order;
                     }
                     if (order > 0) clear = false;
                 }
             d["no P_Lambda factor"] = clear;
             return ok && clear;
         }},
        {"basechange.anchor", "basechange", "T_psi, B, J, C, C^-1 at (l,t,nu,u_l,u_t) = (2,3,1/5,5,7)", Kind::once,
         [](Ctx& c, Json& d) {
             Assignment a = std_point();
             MatrixRF ms[] = {t_psi_closed(c.prm, U_l(), U_t()), b_matrix(c.prm, U_l(), U_t()), j_matrix(c.prm),
                              c_matrix(c.prm), c_inverse(c.prm)};
             const char* names[] = {"Tpsi", "B", "J", "C", "Cinv"};
             for (int k = 0; k < 5; ++k) d[names[k]] = mat_json(ms[k].partial_eval(a));
             MatrixRF CC = ms[3].partial_eval(a) * ms[4].partial_eval(a);
             return CC.is_identity();
         }},
        // symplectic
        {"symplectic.factor_two", "symplectic", "Phi^*(dk1^dz + dk2^dw) = 2 (dc1^du_t + dc2^du_l)", Kind::per_params,
         [](Ctx& c, Json& d) {
             auto [pulled, expect] = symplectic_pullback(c.prm);
             bool ok = true;
             const auto& cs = expect.coords();
             for (size_t i = 0; i < cs.size(); ++i)
                 for (size_t j = i + 1; j < cs.size(); ++j)
                     ok = ok && c.eq(pulled.coeff(cs[i], cs[j]), expect.coeff(cs[i], cs[j]));
             if (!ok) d["pullback"] = pulled.to_string();
             return ok;
         }},
        {"symplectic.phi_psi", "symplectic", "Phi(psi u, T_psi c) = Phi(u, c)", Kind::per_params,
         [](Ctx& c, Json&) {
             RatFunc c1 = RatFunc::var(Var::c1), c2 = RatFunc::var(Var::c2);
             PhiFull f = phi_full(c.prm, c1, c2);
             MatrixRF T = t_psi_closed(c.prm, U_l(), U_t());
             std::map<Var, RatFunc> s{{Var::ut, ubar(c.prm, U_l(), U_t())},
                                      {Var::c1, T(1, 0) + T(1, 1) * c1 + T(1, 2) * c2},
                                      {Var::c2, T(2, 0) + T(2, 1) * c1 + T(2, 2) * c2}};
             return c.eq(f.z.compose(s), f.z) && c.eq(f.w.compose(s), f.w) && c.eq(f.k1.compose(s), f.k1) &&
                    c.eq(f.k2.compose(s), f.k2);
         }},
        {"symplectic.kappa_zero", "symplectic", "equivariant section maps to kappa = 0", Kind::per_params,
         [](Ctx& c, Json&) {
             auto [o1, o2] = equivariant_offset(c.prm, U_l(), U_t());
             PhiFull f = phi_full(c.prm, o1, o2);
             return c.zero(f.k1) && c.zero(f.k2);
         }},
        {"symplectic.phi_anchor", "symplectic", "Phi at (2,3,1/5), u = (5,7), c = (1,1)", Kind::once,
         [](Ctx& c, Json& d) {
             PhiFull f = phi_full(c.prm, RatFunc(1), RatFunc(1));
             Assignment a = std_point();
             d["z"] = f.z.partial_eval(a).to_string();
             d["w"] = f.w.partial_eval(a).to_string();
             d["k1"] = f.k1.partial_eval(a).to_string();
             d["k2"] = f.k2.partial_eval(a).to_string();
             return true;
         }},
        // lagrangian
        {"lagrangian.stated", "lagrangian", "dc1^0/du_l + dc2^0/du_t = 0", Kind::per_params,
         [](Ctx& c, Json& d) {
             auto L = lagrangian_divergence(c.prm);
             bool ok = c.zero(L.stated);
             if (!ok && !c.symbolic) d["value at u=(5,7)"] = L.stated.partial_eval(std_point()).to_string();
             return ok;
         }},
        {"lagrangian.corrected", "lagrangian", "dc1^0/du_l - dc2^0/du_t = 0 (translation by c^0 preserves dc1^du_t + dc2^du_l)",
         Kind::per_params, [](Ctx& c, Json&) { return c.zero(lagrangian_divergence(c.prm).corrected); }},
        // fixed locus
        {"fixedlocus.stated", "fixedlocus", "(T_psi(u_l,ubar) - Id)(1, nu P_Pi P_Lambda/delta, c2) = 0 mod P_Sigma",
         Kind::per_params,
         [](Ctx& c, Json& d) {
             auto r = fixed_locus(c.prm, +1);
             d["row1 remainder zero"] = r.rows[0].prem.r.is_zero();
             d["row2 remainder zero"] = r.rows[1].prem.r.is_zero();
             return r.pass();
         }},
        {"fixedlocus.corrected", "fixedlocus", "(T_psi(u_l,ubar) - Id)(1, -nu P_Pi P_Lambda/delta, c2) = 0 mod P_Sigma",
         Kind::per_params,
         [](Ctx& c, Json& d) {
             auto r = fixed_locus(c.prm, -1);
             d["row1 remainder zero"] = r.rows[0].prem.r.is_zero();
             d["row2 remainder zero"] = r.rows[1].prem.r.is_zero();
             return r.pass();
         }},
        {"fixedlocus.control", "fixedlocus", "c1 = c1* + 1 leaves a nonzero middle-row remainder", Kind::per_params,
         [](Ctx& c, Json&) { return !fixed_locus(c.prm, -1, 1).rows[0].prem.r.is_zero(); }},
        // local model
        {"localmodel.quotient", "localmodel", "x0^2 = x1 x2 under y -> (y1y2, y1^2, y2^2, y3, y4); pullback dy1^dy2 + dy3^dy4",
         Kind::once,
         [](Ctx&, Json& d) {
             auto r = verify_local_model();
             d["cone"] = r.cone_identity;
             d["sign flip"] = r.sign_invariant;
             d["form"] = r.form_pullback;
             return r.pass();
         }},
        // apparent
        {"apparent.normalization", "apparent", "app_infty(nabla0) ~ [l t : -(l+t) : 1]", Kind::once,
         [](Ctx&, Json& d) {
             Params P = Params::symbolic();
             AppClass a = app_infty(nabla0(P, U_l(), U_t()));
             d["app_infty"] = a.to_string();
             AppClass e{{P.lam * P.t, -(P.lam + P.t), RatFunc(1)}};
             return a.proportional(e);
         }},
        {"apparent.n_matrices", "apparent", "N_inf (1,c) and N_psi (1,c) reproduce app_infty and app_psi", Kind::per_params,
         [](Ctx& c, Json&) {
             RatFunc c1 = RatFunc::var(Var::c1), c2 = RatFunc::var(Var::c2);
             auto n = coefficient_matrices(c.prm, U_l(), U_t());
             auto sys = family(c.prm, U_l(), U_t(), c1, c2);
             AppClass A = app_infty(sys), S = app_psi(sys, U_l());
             MatrixRF v{{1}, {c1}, {c2}};
             MatrixRF a = n.Ninf * v, s = n.Npsi * v;
             bool ok = true;
             for (int i = 0; i < 3; ++i) ok = ok && c.eq(a(i, 0), A.a[i]) && c.eq(s(i, 0), S.a[i]);
             return ok;
         }},
        {"apparent.app_c_invariant", "apparent", "App_C(psi u, T_psi c) = App_C(u, c) as unordered pairs", Kind::per_params,
         [](Ctx& c, Json&) {
             RatFunc c1 = RatFunc::var(Var::c1), c2 = RatFunc::var(Var::c2);
             MatrixRF T = t_psi_closed(c.prm, U_l(), U_t());
             RatFunc d1 = T(1, 0) + T(1, 1) * c1 + T(1, 2) * c2, d2 = T(2, 0) + T(2, 1) * c1 + T(2, 2) * c2;
             SymPair a = app_c(c.prm, U_l(), U_t(), c1, c2);
             SymPair b = app_c(c.prm, U_l(), ubar(c.prm, U_l(), U_t()), d1, d2);
             // the involution swaps the two classes
             return a.equals(b) && a.a.proportional(b.s);
         }},
        {"apparent.det_m", "apparent", "det M vanishes on P_Pi = 0 and on u_l in {0,1,l}", Kind::per_params,
         [](Ctx& c, Json& d) {
             const RatFunc &l = c.prm.lam, &t = c.prm.t;
             RatFunc D = m_matrix(c.prm, U_l(), U_t()).det();
             auto sp = special_polys(c.prm, U_l(), U_t());
             RatFunc on_pi = t * U_l() * (l - 1) / sp.PLambda;
             bool a = c.zero(ev(D, Var::ut, on_pi));
             bool b = c.zero(ev(D, Var::ul, 0)) && c.zero(ev(D, Var::ul, 1)) && c.zero(ev(D, Var::ul, l));
             d["P_Pi"] = a;
             d["u_l lines"] = b;
             return a && b && !D.is_zero();
         }},
        {"apparent.m_involution", "apparent", "M(psi u) M(u) is scalar at random rational u", Kind::numeric,
         [](Ctx& c, Json& d) {
             MatrixRF M = m_matrix(c.prm, U_l(), U_t());
             auto g = c.rng(0xa1);
             int n = c.trials(20), bad = 0;
             for (int k = 0; k < n; ++k) {
                 Rat ul, ut;
                 do {
                     ul = random_rat(g);
                     ut = random_rat(g);
                 } while (genericity_guard(c.prm, ul, ut).any());
                 Rat ub = psi_bun_at(c.prm, ul, ut).ut;
                 Assignment a, b;
                 a.set(Var::ul, ul);
                 a.set(Var::ut, ut);
                 b.set(Var::ul, ul);
                 b.set(Var::ut, ub);
                 MatrixRF P = M.partial_eval(b) * M.partial_eval(a);
                 RatFunc s = P(0, 0);
                 if (s.is_zero() || !P.equals(MatrixRF::identity(3).scaled(s))) ++bad;
             }
             d["samples"] = n;
             d["failures"] = bad;
             return bad == 0;
         }},
        {"apparent.injectivity", "apparent", "a = app_infty is not an eigenvector of M(u)^2 (generic injectivity)",
         Kind::numeric,
         [](Ctx& c, Json& d) {
             auto r = injectivity_witness(c.prm, c.trials(100), c.cfg.seed + 1000003u * c.stream);
             d["samples"] = r.samples;
             d["failures"] = r.failures;
             d["guard redraws"] = r.skipped;
             return r.pass();
         }},
        // fibers
        {"fibers.count", "fibers", "generic fiber of App_C has exactly 12 points", Kind::numeric,
         [](Ctx& c, Json& d) {
             int n = c.trials(5);
             bool ok = true;
             Json tr = Json::array();
             for (int k = 0; k < n; ++k) {
                 AppClass a, s;
                 FiberReport r = fiber_count_random(c.prm, c.cfg.seed * 7919u + c.stream * 104729u + k, &a, &s);
                 Json e;
                 e["a"] = a.to_string();
                 e["s"] = s.to_string();
                 e["eliminant_degree"] = r.eliminant_degree;
                 e["squarefree_degree"] = r.squarefree_degree;
                 Json rm = Json::array();
                 for (auto& x : r.removed) rm.push_back({{"reason", x.reason}, {"degree", x.degree}});
                 e["removed"] = rm;
                 e["count"] = r.count;
                 e["certified"] = r.certified;
                 if (!r.note.empty()) e["note"] = r.note;
                 tr.push_back(e);
                 ok = ok && r.generic() && r.certified && r.count == 12;
             }
             d["trials"] = tr;
             return ok;
         }},
        {"fibers.membership", "fibers", "the pair of a known connection has its u in the fiber", Kind::numeric,
         [](Ctx& c, Json& d) {
             auto g = c.rng(0xf1);
             Rat ul, ut;
             do {
                 ul = random_rat(g);
                 ut = random_rat(g);
             } while (genericity_guard(c.prm, ul, ut).any());
             Rat c1 = random_rat(g), c2 = random_rat(g);
             SymPair p = app_c(c.prm, RatFunc(ul), RatFunc(ut), RatFunc(c1), RatFunc(c2));
             FiberReport r = fiber_count(p.a, p.s, c.prm);
             d["u"] = to_string(ul) + "," + to_string(ut);
             d["count"] = r.count;
             return !r.resample && r.survivors.eval(ul) == 0;
         }},
        // monodromy
        {"monodromy.round_trip", "monodromy",
         "trace_coords(phi_top(descend(rho))) = trace_coords(rho); M^2 = -I; the two descents are not conjugate",
         Kind::numeric,
         [](Ctx& c, Json& d) {
             double nu = nu_d(c.prm);
             int n = c.trials(100);
             double worst = 0, m2 = 0, sep = 1e300;
             int errors = 0;
#pragma omp parallel for reduction(max : worst, m2) reduction(min : sep) reduction(+ : errors) schedule(dynamic)
             for (int k = 0; k < n; ++k) {
                 try {
                     auto rho = mono::random_rep_c(c.cfg.seed * 1000003u + c.stream * 7777u + k, nu);
                     auto ds = mono::descend(rho);
                     auto back = mono::phi_top(ds.rep, nu);
                     worst = std::max(worst, mono::distance(mono::trace_coords(back), mono::trace_coords(rho)));
                     m2 = std::max(m2, ds.m2_residual);
                     sep = std::min(sep, mono::distance(mono::p1_fingerprint(ds.rep),
                                                        mono::p1_fingerprint(mono::psi_top(ds.rep))));
                 } catch (const std::exception&) {
                     ++errors;
                 }
             }
             d["seeds"] = n;
             d["errors"] = errors;
             d["max trace error"] = fmt(worst);
             d["max |M^2+I|"] = fmt(m2);
             d["min descent separation"] = fmt(sep);
             return errors == 0 && worst <= 1e-9 && m2 <= 1e-10 && sep > 1e-6;
         }},
        {"monodromy.dihedral_stated", "monodromy",
         "phi_top(dihedral) = (diag(-a0,-1/a0), diag(al,1/al), diag(at,1/at), diag(1/at,at))", Kind::numeric,
         [](Ctx& c, Json& d) {
             double nu = nu_d(c.prm), worst = 0;
             auto g = c.rng(0xd1);
             std::uniform_real_distribution<double> r(0.3, 3.0), ph(0, 6.283185307179586);
             int n = c.trials(20);
             for (int k = 0; k < n; ++k) {
                 cd a0 = std::polar(r(g), ph(g)), al = std::polar(r(g), ph(g));
                 auto out = mono::phi_top(mono::dihedral_rep(a0, al, nu), nu);
                 worst = std::max(worst, mono::rep_distance(out, mono::dihedral_expected(a0, al, nu)));
             }
             d["samples"] = n;
             d["max distance"] = fmt(worst);
             return worst <= 1e-12;
         }},
        {"monodromy.dihedral_corrected", "monodromy",
         "phi_top(dihedral) = (diag(-a0,-1/a0), diag(-al,-1/al), diag(at,1/at), diag(1/at,at))", Kind::numeric,
         [](Ctx& c, Json& d) {
             double nu = nu_d(c.prm), worst = 0, back = 0;
             auto g = c.rng(0xd1);
             std::uniform_real_distribution<double> r(0.3, 3.0), ph(0, 6.283185307179586);
             int n = c.trials(20);
             for (int k = 0; k < n; ++k) {
                 cd a0 = std::polar(r(g), ph(g)), al = std::polar(r(g), ph(g));
                 auto in = mono::dihedral_rep(a0, al, nu);
                 auto out = mono::phi_top(in, nu);
                 worst = std::max(worst, mono::rep_distance(out, mono::dihedral_expected_corrected(a0, al, nu)));
                 auto ds = mono::descend(out);
                 back = std::max(back, mono::distance(mono::p1_fingerprint(ds.rep), mono::p1_fingerprint(in)));
             }
             d["samples"] = n;
             d["max distance"] = fmt(worst);
             d["descent fingerprint error"] = fmt(back);
             return worst <= 1e-12 && back <= 1e-9;
         }},
        {"monodromy.psi_top", "monodromy", "psi_top is an involution and phi_top o psi_top = phi_top", Kind::numeric,
         [](Ctx& c, Json& d) {
             double nu = nu_d(c.prm);
             int n = c.trials(20);
             bool ok = true;
             for (int k = 0; k < n; ++k) {
                 auto r = mono::random_rep_p1(c.cfg.seed * 31u + c.stream * 131u + k, nu);
                 auto rr = mono::psi_top(mono::psi_top(r));
                 ok = ok && rr.M0 == r.M0 && rr.M1 == r.M1 && rr.Mt == r.Mt && rr.Ml == r.Ml && rr.Minf == r.Minf;
                 auto a = mono::phi_top(r, nu), b = mono::phi_top(mono::psi_top(r), nu);
                 ok = ok && a.A == b.A && a.B == b.B && a.C1 == b.C1 && a.C2 == b.C2;
             }
             d["samples"] = n;
             return ok;
         }},
        {"monodromy.random_reps", "monodromy", "generated representations satisfy their defining relations",
         Kind::numeric,
         [](Ctx& c, Json& d) {
             double nu = nu_d(c.prm), dc = 0, dp = 0, conj = 0;
             int n = c.trials(20);
             for (int k = 0; k < n; ++k) {
                 std::uint64_t s = c.cfg.seed * 17u + c.stream * 171u + k;
                 auto rho = mono::random_rep_c(s, nu);
                 dc = std::max(dc, mono::c_defect(rho, nu));
                 dp = std::max(dp, mono::p1_defect(mono::descend(rho).rep, nu));
                 auto g = mono::random_sl2(s, 99);
                 conj = std::max(conj, mono::distance(mono::trace_coords(mono::conjugate(rho, g)), mono::trace_coords(rho)));
             }
             d["max RepC defect"] = fmt(dc);
             d["max RepP1 defect"] = fmt(dp);
             d["max conjugation drift"] = fmt(conj);
             return dc <= 1e-9 && dp <= 1e-8 && conj <= 1e-10;
         }},
    };
    return t;
}

struct Task {
    const Check* check;
    Params prm;
    bool symbolic;
    std::uint64_t stream;
};

std::string params_text(const Params& p, bool symbolic) { return symbolic ? "symbolic" : p.to_string(); }

std::vector<Params> specialized_list(const Config& cfg) {
    if (cfg.params.empty()) return builtin_params();
    std::vector<Params> out;
    for (auto& p : cfg.params)
        if (p.specialized()) out.push_back(p);
    return out.empty() ? builtin_params() : out;
}

std::vector<Task> plan(const std::vector<const Check*>& checks, const Config& cfg) {
    std::vector<Task> ts;
    std::uint64_t stream = 0;
    for (const Check* ch : checks) {
        switch (ch->kind) {
            case Kind::once: ts.push_back({ch, standard(), false, stream++}); break;
            case Kind::numeric:
                for (auto& p : specialized_list(cfg)) ts.push_back({ch, p, false, stream++});
                break;
            case Kind::per_params:
                if (cfg.mode == Mode::exact)
                    ts.push_back({ch, Params::symbolic(), true, stream++});
                else
                    for (auto& p : specialized_list(cfg)) ts.push_back({ch, p, false, stream++});
                break;
        }
    }
    return ts;
}

Record execute(const Task& t, const Config& cfg) {
    Record r;
    r.id = t.check->id;
    r.group = t.check->group;
    r.ref = t.check->ref;
    r.params = params_text(t.prm, t.symbolic);
    Ctx c{cfg, t.prm, t.symbolic, t.stream};
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.pass = t.check->body(c, r.details);
    } catch (const std::exception& e) {
        r.pass = false;
        r.error = true;
        r.details["error"] = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (t.check->kind == Kind::numeric)
        r.mode = "sampled";
    else if (t.symbolic)
        r.mode = "exact-symbolic";
    else if (c.used_sampling)
        r.mode = "sampled";
    else
        r.mode = "specialized";
    return r;
}

std::vector<Record> run_tasks(const std::vector<Task>& ts, const Config& cfg) {
    std::vector<Record> out(ts.size());
    int jobs = std::max(1, cfg.jobs);
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
    for (size_t i = 0; i < ts.size(); ++i) out[i] = execute(ts[i], cfg);
    return out;
}

}  // namespace

const std::vector<std::string>& group_names() {
    static const std::vector<std::string> g = {"bundles",    "involution", "tpsi",       "basechange",
                                               "symplectic", "lagrangian", "fixedlocus", "localmodel",
                                               "apparent",   "fibers",     "monodromy"};
    return g;
}

bool is_group(const std::string& g) {
    if (g == "all") return true;
    for (auto& n : group_names())
        if (n == g) return true;
    return false;
}

std::vector<std::string> check_ids(const std::string& group) {
    std::vector<std::string> ids;
    for (auto& ch : table())
        if (group == "all" || group == ch.group) ids.push_back(ch.id);
    return ids;
}

std::vector<Record> run(const std::string& group, const Config& cfg) {
    if (!is_group(group)) throw std::invalid_argument("unknown group: " + group);
    std::vector<const Check*> sel;
    for (auto& ch : table())
        if (group == "all" || group == ch.group) sel.push_back(&ch);
    return run_tasks(plan(sel, cfg), cfg);
}

std::vector<Record> run_checks(const std::vector<std::string>& ids, const Config& cfg) {
    std::vector<const Check*> sel;
    for (auto& id : ids) {
        const Check* found = nullptr;
        for (auto& ch : table())
            if (id == ch.id) found = &ch;
        if (!found) throw std::invalid_argument("unknown check: " + id);
        sel.push_back(found);
    }
    return run_tasks(plan(sel, cfg), cfg);
}

bool all_pass(const std::vector<Record>& rs) {
    for (auto& r : rs)
        if (!r.pass) return false;
    return true;
}

Json config_json(const std::string& group, const Config& cfg) {
    Json c;
    c["group"] = group;
    c["seed"] = cfg.seed;
    c["trials"] = cfg.trials;
    c["mode"] = mode_name(cfg.mode);
    Json ps = Json::array();
    for (auto& p : cfg.params) ps.push_back(p.to_string());
    c["params"] = ps;
    return c;
}

Json report_json(const std::string& group, const Config& cfg, const std::vector<Record>& rs, bool timings) {
    Json j;
    j["schema"] = "ellcon-report/1";
    j["config"] = config_json(group, cfg);
    int failed = 0, errors = 0;
    Json recs = Json::array();
    for (auto& r : rs) {
        Json e;
        e["id"] = r.id;
        e["group"] = r.group;
        e["ref"] = r.ref;
        e["mode"] = r.mode;
        e["params"] = r.params;
        e["result"] = r.error ? "error" : (r.pass ? "pass" : "fail");
        if (timings) e["seconds"] = fmt(r.seconds);
        e["details"] = r.details;
        recs.push_back(e);
        if (!r.pass) ++failed;
        if (r.error) ++errors;
    }
    j["summary"] = {{"checks", rs.size()}, {"failed", failed}, {"errors", errors}};
    j["exit"] = errors ? 3 : (failed ? 1 : 0);
    j["records"] = recs;
    return j;
}

std::string report_markdown(const Json& rep) {
    std::ostringstream o;
    const Json& cfg = rep.at("config");
    o << "# Verification report\n\n";
    o << "group `" << cfg.at("group").get<std::string>() << "`, mode `" << cfg.at("mode").get<std::string>()
      << "`, seed " << cfg.at("seed").dump() << "\n\n";
    const Json& s = rep.at("summary");
    o << s.at("checks").dump() << " checks, " << s.at("failed").dump() << " failed, " << s.at("errors").dump()
      << " errors, exit " << rep.at("exit").dump() << "\n\n";
    o << "| result | check | params | mode | statement |\n|---|---|---|---|---|\n";
    for (auto& r : rep.at("records")) {
        auto esc = [](std::string x) {
            std::string y;
            for (char ch : x) {
                if (ch == '|') y += "\\";
                y += ch;
            }
            return y;
        };
        o << "| " << r.at("result").get<std::string>() << " | `" << r.at("id").get<std::string>() << "` | "
          << r.at("params").get<std::string>() << " | " << r.at("mode").get<std::string>() << " | "
          << esc(r.at("ref").get<std::string>()) << " |\n";
    }
    return o.str();
}

}  // namespace ellcon::verify
