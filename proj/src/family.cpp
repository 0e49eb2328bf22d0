#include "ellcon/family.hpp"

namespace ellcon {

FuchsianSystem nabla0(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    const RatFunc& nu = prm.nu;
    RatFunc q(Rat(1, 4));
    std::map<Pole, MatrixRF> r;
    r.emplace(Pole::p0, MatrixRF{{-1, 0}, {RatFunc(-2) - 4 * nu, 1}}.scaled(q));
    r.emplace(Pole::p1, MatrixRF{{1 + 4 * nu, -4 * nu}, {2 + 4 * nu, RatFunc(-1) - 4 * nu}}.scaled(q));
    r.emplace(Pole::lam, MatrixRF{{-1, 2 * ul}, {0, 1}}.scaled(q));
    r.emplace(Pole::t, MatrixRF{{-1, 2 * ut}, {0, 1}}.scaled(nu));
    return FuchsianSystem(prm, r);
}

HiggsField theta1(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    (void)ul;
    std::map<Pole, MatrixRF> r;
    r.emplace(Pole::p0, MatrixRF{{0, 0}, {1 - ut, 0}});
    r.emplace(Pole::p1, MatrixRF{{ut, -ut}, {ut, -ut}});
    r.emplace(Pole::t, MatrixRF{{-ut, ut * ut}, {-1, ut}});
    return FuchsianSystem(prm, r);
}

HiggsField theta2(const Params& prm, const RatFunc& ul, const RatFunc& ut) {
    (void)ut;
    std::map<Pole, MatrixRF> r;
    r.emplace(Pole::p0, MatrixRF{{0, 0}, {1 - ul, 0}});
    r.emplace(Pole::p1, MatrixRF{{ul, -ul}, {ul, -ul}});
    r.emplace(Pole::lam, MatrixRF{{-ul, ul * ul}, {-1, ul}});
    return FuchsianSystem(prm, r);
}

FuchsianSystem family(const Params& prm, const RatFunc& ul, const RatFunc& ut, const RatFunc& c1, const RatFunc& c2) {
    FuchsianSystem s = nabla0(prm, ul, ut);
    if (!c1.is_zero()) s = s + theta1(prm, ul, ut).scaled(c1);
    if (!c2.is_zero()) s = s + theta2(prm, ul, ut).scaled(c2);
    return s;
}

ParabolicData chart_parabolics(const RatFunc& ul, const RatFunc& ut) {
    return {{Pole::p0, Direction::at(0)},
            {Pole::p1, Direction::at(1)},
            {Pole::lam, Direction::at(ul)},
            {Pole::inf, Direction::infinity()},
            {Pole::t, Direction::at(ut)}};
}

SpectralData nabla0_spectrum(const Params& prm) {
    RatFunc q(Rat(1, 4));
    return {{Pole::p0, {q, -q}}, {Pole::p1, {q, -q}}, {Pole::lam, {q, -q}}, {Pole::inf, {q, -q}}, {Pole::t, {prm.nu, -prm.nu}}};
}

RatFunc sigma_psi(const Params& prm, const RatFunc& ul) {
    RatFunc x = RatFunc::var(Var::x);
    const RatFunc& l = prm.lam;
    return ul * (1 - l) * x / ((ul - l) * x - l * (ul - 1));
}

bool AppClass::proportional(const AppClass& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(a[i] * o.a[j]).equals(a[j] * o.a[i])) return false;
    return true;
}

AppClass AppClass::partial_eval(const Assignment& as) const {
    return {{a[0].partial_eval(as), a[1].partial_eval(as), a[2].partial_eval(as)}};
}

std::string AppClass::to_string() const {
    return "[" + a[0].to_string() + " : " + a[1].to_string() + " : " + a[2].to_string() + "]";
}

std::vector<RatFunc> x_coefficients(const RatFunc& f) {
    for (auto& [g, e] : f.den_factors())
        if (g.has_var(Var::x)) throw std::invalid_argument("x_coefficients: denominator depends on x");
    std::vector<RatFunc> out;
    for (auto& c : f.num().coeffs_in(Var::x)) out.push_back(RatFunc::from_factors(c, f.den_factors()));
    return out;
}

namespace {
AppClass quadratic_class(const RatFunc& f, const char* what) {
    auto cs = x_coefficients(f);
    cs.resize(std::max<size_t>(cs.size(), 3));
    for (size_t k = 3; k < cs.size(); ++k)
        if (!cs[k].is_zero()) throw std::logic_error(std::string(what) + ": coefficient of x^" + std::to_string(k) + " is nonzero");
    AppClass c{{cs[0], cs[1], cs[2]}};
    if (c.a[0].is_zero() && c.a[1].is_zero() && c.a[2].is_zero())
        throw DegenerateConnection(std::string(what) + ": all coefficients vanish");
    return c;
}
}  // namespace

AppClass app_infty(const FuchsianSystem& sys) {
    // x(x-1)(x-l)(x-t) A_21(x); the cubic term is sum_p (A_p)_21 = 0
    MatrixRF ad = sys.cleared_matrix();
    return quadratic_class(ad(1, 0), "app_infty");
}

AppClass app_psi(const FuchsianSystem& sys, const RatFunc& ul) {
    const Params& prm = sys.params();
    const RatFunc& l = prm.lam;
    RatFunc x = RatFunc::var(Var::x);
    // sigma_psi = w0 / w1 under zeta <-> (zeta, 1)
    RatFunc w0 = ul * (1 - l) * x;
    RatFunc w1 = (ul - l) * x - l * (ul - 1);
    RatFunc den = x * (x - 1) * (x - l) * (x - prm.t);
    MatrixRF ad = sys.cleared_matrix();
    RatFunc v0 = ad(0, 0) * w0 + ad(0, 1) * w1 + den * w0.derivative(Var::x);
    RatFunc v1 = ad(1, 0) * w0 + ad(1, 1) * w1 + den * w1.derivative(Var::x);
    RatFunc d = w0 * v1 - w1 * v0;
    RatFunc structural = x * (x - 1) * (x - l);
    if (!structural.is_poly() || !d.num().has_var(Var::x)) throw DegenerateConnection("app_psi: degenerate input");
    auto q = divide_exact(d.num(), structural.num());
    if (!q) throw std::logic_error("app_psi: structural factor x(x-1)(x-l) does not divide");
    return quadratic_class(RatFunc::from_factors(*q, d.den_factors()), "app_psi");
}

}  // namespace ellcon
