#include "ellcon/connection.hpp"

namespace ellcon {

std::string pole_name(Pole p) {
    switch (p) {
        case Pole::p0: return "0";
        case Pole::p1: return "1";
        case Pole::lam: return "l";
        case Pole::t: return "t";
        case Pole::inf: return "inf";
    }
    return "?";
}

MatrixRF Direction::vec() const {
    MatrixRF v(2, 1);
    if (infinite) {
        v(0, 0) = RatFunc(1);
    } else {
        v(0, 0) = zeta;
        v(1, 0) = RatFunc(1);
    }
    return v;
}

bool Direction::equals(const Direction& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return zeta.equals(o.zeta);
}

std::string Direction::to_string() const { return infinite ? "inf" : zeta.to_string(); }

std::optional<Direction> direction_of(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) {
        if (a.is_zero()) return std::nullopt;
        return Direction::infinity();
    }
    return Direction::at(a / b);
}

Params Params::symbolic() { return {RatFunc::var(Var::lam), RatFunc::var(Var::t), RatFunc::var(Var::nu)}; }

Params Params::at(const Rat& lam, const Rat& t, const Rat& nu) { return {RatFunc(lam), RatFunc(t), RatFunc(nu)}; }

std::string Params::to_string() const {
    return "l=" + lam.to_string() + " t=" + t.to_string() + " nu=" + nu.to_string();
}

FuchsianSystem::FuchsianSystem(const Params& prm, std::map<Pole, MatrixRF> residues, bool inf_pole)
    : prm_(prm), res_(std::move(residues)), inf_pole_(inf_pole) {
    for (Pole p : kFinitePoles)
        if (!res_.count(p)) res_.emplace(p, MatrixRF(2, 2));
    if (res_.count(Pole::inf)) {
        inf_ = res_.at(Pole::inf);
        res_.erase(Pole::inf);
    }
}

RatFunc FuchsianSystem::position(Pole p) const {
    switch (p) {
        case Pole::p0: return RatFunc(0);
        case Pole::p1: return RatFunc(1);
        case Pole::lam: return prm_.lam;
        case Pole::t: return prm_.t;
        case Pole::inf: break;
    }
    throw std::invalid_argument("infinity has no finite position");
}

MatrixRF FuchsianSystem::residue_at(Pole p) const {
    if (p == Pole::inf) {
        if (!inf_pole_) throw std::invalid_argument("infinity is not a pole of this system");
        if (inf_) return *inf_;
        MatrixRF s(2, 2);
        for (auto& [q, m] : res_) s = s - m;
        return s;
    }
    auto it = res_.find(p);
    if (it == res_.end()) throw std::invalid_argument("not a pole: " + pole_name(p));
    return it->second;
}

MatrixRF residue_at(const FuchsianSystem& sys, Pole p) { return sys.residue_at(p); }

void FuchsianSystem::freeze_inf() {
    if (inf_pole_ && !inf_) inf_ = residue_at(Pole::inf);
}

void FuchsianSystem::set_residue(Pole p, const MatrixRF& m) {
    freeze_inf();
    if (p == Pole::inf)
        inf_ = m;
    else
        res_.at(p) = m;
}

FuchsianSystem FuchsianSystem::operator+(const FuchsianSystem& o) const {
    FuchsianSystem r = *this;
    for (auto& [p, m] : r.res_) m = m + o.res_.at(p);
    if (inf_ || o.inf_) r.inf_ = residue_at(Pole::inf) + o.residue_at(Pole::inf);
    r.trace_free_ = trace_free_ && o.trace_free_;
    return r;
}

FuchsianSystem FuchsianSystem::scaled(const RatFunc& s) const {
    FuchsianSystem r = *this;
    for (auto& [p, m] : r.res_) m = m.scaled(s);
    if (r.inf_) r.inf_ = r.inf_->scaled(s);
    return r;
}

bool FuchsianSystem::equals(const FuchsianSystem& o) const {
    for (auto& [p, m] : res_)
        if (!m.equals(o.res_.at(p))) return false;
    if (inf_pole_ != o.inf_pole_) return false;
    return !inf_pole_ || residue_at(Pole::inf).equals(o.residue_at(Pole::inf));
}

FuchsianSystem FuchsianSystem::partial_eval(const Assignment& a) const {
    FuchsianSystem r = *this;
    r.prm_ = {prm_.lam.partial_eval(a), prm_.t.partial_eval(a), prm_.nu.partial_eval(a)};
    for (auto& [p, m] : r.res_) m = m.partial_eval(a);
    if (r.inf_) r.inf_ = r.inf_->partial_eval(a);
    return r;
}

MatrixRF FuchsianSystem::cleared_matrix() const {
    RatFunc x = RatFunc::var(Var::x);
    MatrixRF out(2, 2);
    for (auto& [p, m] : res_) {
        RatFunc f(1);
        for (Pole q : kFinitePoles)
            if (q != p) f *= x - position(q);
        out = out + m.scaled(f);
    }
    return out;
}

std::string FuchsianSystem::to_string() const {
    std::string s;
    for (Pole p : kAllPoles) {
        if (p == Pole::inf && !inf_pole_) continue;
        s += "res[" + pole_name(p) + "] = " + residue_at(p).to_string() + "\n";
    }
    return s;
}

// ---------------------------------------------------------------------------

std::optional<MPoly> poly_sqrt(const MPoly& p) {
    if (p.is_zero()) return MPoly();
    auto lead_root = [](const Rat& c, const Mono& m) -> std::optional<MPoly> {
        if (c < 0) return std::nullopt;
        Int n = c.get_num(), d = c.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        Int rn = sqrt(n), rd = sqrt(d);
        Mono h;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exp(Var(v));
            if (e % 2) return std::nullopt;
            if (e) h.set(Var(v), e / 2);
        }
        Rat r(rn, rd);
        r.canonicalize();
        return MPoly::monomial(r, h);
    };
    auto first = lead_root(p.leading_coeff(), p.leading_mono());
    if (!first) return std::nullopt;
    MPoly root = *first;
    Rat two_lc = 2 * root.leading_coeff();
    const Mono& lm = root.leading_mono();
    for (size_t iter = 0; iter <= p.size() + 1; ++iter) {
        MPoly rem = p - root * root;
        if (rem.is_zero()) return root;
        const Mono& rm = rem.leading_mono();
        if (!lm.divides(rm)) return std::nullopt;
        Mono nm = rm / lm;
        if (!(nm < root.terms().back().m)) return std::nullopt;
        root += MPoly::monomial(rem.leading_coeff() / two_lc, nm);
    }
    return std::nullopt;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f) {
    if (f.is_zero()) return RatFunc();
    MPoly n = f.num();
    RatFunc::Factors root_den;
    for (auto& [g, e] : f.den_factors()) {
        if (e % 2) n = n * g;
        root_den.push_back({g, (e + 1) / 2});
    }
    auto r = poly_sqrt(n);
    if (!r) return std::nullopt;
    return RatFunc::from_factors(*r, root_den);
}

namespace {
Direction kernel_direction(const MatrixRF& k) {
    // k is singular; use a nonzero row (a, b) -> kernel (-b, a)
    for (int i = 0; i < 2; ++i) {
        if (!k(i, 0).is_zero() || !k(i, 1).is_zero()) return *direction_of(-k(i, 1), k(i, 0));
    }
    throw std::logic_error("kernel of the zero matrix is not a line");
}
}  // namespace

Eigendata eigendata(const MatrixRF& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("eigendata: 2x2 matrix expected");
    if (!(m(0, 0) + m(1, 1)).is_zero()) throw std::invalid_argument("eigendata: matrix is not trace-free");
    RatFunc s = -m.det();
    Eigendata ed;
    if (s.is_zero()) {
        ed.nilpotent = true;
        if (m(0, 0).is_zero() && m(0, 1).is_zero() && m(1, 0).is_zero())
            throw std::invalid_argument("eigendata: zero matrix has no distinguished direction");
        ed.dir_plus = ed.dir_minus = kernel_direction(m);
        return ed;
    }
    auto r = ratfunc_sqrt(s);
    if (!r) throw IrrationalEigendata("eigendata: -det is not a perfect square: " + s.to_string());
    RatFunc e = *r;
    if (e.num().leading_coeff() < 0) e = -e;
    ed.plus = e;
    ed.minus = -e;
    auto id = MatrixRF::identity(2);
    ed.dir_plus = kernel_direction(m - id.scaled(ed.plus));
    ed.dir_minus = kernel_direction(m - id.scaled(ed.minus));
    return ed;
}

bool is_eigenvector(const MatrixRF& m, const Direction& d, const RatFunc& e) {
    MatrixRF v = d.vec();
    return (m * v).equals(v.scaled(e));
}

bool is_nilpotent_with_kernel(const MatrixRF& m, const Direction& d) {
    MatrixRF sq = m * m;
    if (!sq.equals(MatrixRF(2, 2))) return false;
    return (m * d.vec()).equals(MatrixRF(2, 1));
}

bool check_fuchs(const FuchsianSystem& sys, int degE) {
    RatFunc s(degE);
    for (Pole p : kFinitePoles) {
        auto r = sys.residue_at(p);
        s += r(0, 0) + r(1, 1);
    }
    if (sys.has_inf_pole()) {
        auto r = sys.residue_at(Pole::inf);
        s += r(0, 0) + r(1, 1);
    }
    return s.is_zero();
}

Rat parabolic_degree(int degE, int degL, const std::vector<Rat>& weights, const std::vector<bool>& member) {
    if (weights.size() != member.size()) throw std::invalid_argument("parabolic_degree: size mismatch");
    Rat d = degE - 2 * degL;
    for (size_t i = 0; i < weights.size(); ++i) d += member[i] ? Rat(-weights[i]) : weights[i];
    return d;
}

ElemResult elementary_transform(const FuchsianSystem& sys, const ParabolicData& parab, const SpectralData& spec, Pole p,
                                ElemSign sign) {
    if (p == Pole::inf) throw std::invalid_argument("elementary_transform: pole must be finite");
    auto dit = parab.find(p);
    if (dit == parab.end()) throw std::invalid_argument("elementary_transform: no parabolic direction at " + pole_name(p));
    const Direction& d = dit->second;
    MatrixRF P(2, 2), Pi(2, 2);
    if (d.infinite) {
        P = MatrixRF{{0, 1}, {1, 0}};
        Pi = P;
    } else {
        P = MatrixRF{{1, d.zeta}, {0, 1}};
        Pi = MatrixRF{{1, -d.zeta}, {0, 1}};
    }
    RatFunc pp = sys.position(p);
    std::map<Pole, MatrixRF> hat;
    for (Pole q : kFinitePoles) hat.emplace(q, Pi * sys.residue_at(q) * P);
    const MatrixRF& R = hat.at(p);
    if (!R(0, 1).is_zero()) throw std::invalid_argument("elementary_transform: direction is not invariant under the residue");

    std::map<Pole, MatrixRF> out;
    ParabolicData np;
    RatFunc h;
    for (Pole q : kFinitePoles) {
        if (q == p) continue;
        RatFunc dq = sys.position(q) - pp;
        const MatrixRF& a = hat.at(q);
        MatrixRF b{{a(0, 0), a(0, 1) / dq}, {a(1, 0) * dq, a(1, 1)}};
        out.emplace(q, P * b * Pi);
        h += a(0, 1) / (pp - sys.position(q));
        auto pit = parab.find(q);
        if (pit != parab.end()) {
            MatrixRF gi = P * MatrixRF{{RatFunc(1) / dq, 0}, {0, 1}} * Pi;
            MatrixRF v = gi * pit->second.vec();
            np[q] = *direction_of(v(0, 0), v(1, 0));
        }
    }
    MatrixRF rp{{R(0, 0) + RatFunc(1), h}, {0, R(1, 1)}};
    out.emplace(p, P * rp * Pi);
    {
        MatrixRF e1 = P * MatrixRF{{1}, {0}};
        np[p] = *direction_of(e1(0, 0), e1(1, 0));
    }
    if (parab.count(Pole::inf)) np[Pole::inf] = parab.at(Pole::inf);

    FuchsianSystem base = sys;
    base.freeze_inf();
    ElemResult res;
    std::map<Pole, MatrixRF> all = out;
    if (sys.has_inf_pole()) all.emplace(Pole::inf, base.residue_at(Pole::inf));
    res.sys = FuchsianSystem(sys.params(), all, sys.has_inf_pole());
    if (!sys.trace_free()) res.sys.mark_twisted();
    res.parab = np;
    res.spec = spec;
    auto sp = spec.at(p);
    res.spec[p] = {sp.minus + RatFunc(1), sp.plus};
    res.deg_shift = -1;
    if (sign == ElemSign::positive) {
        auto tw = twist(res.sys, res.spec, {{p, Rat(-1)}});
        res.sys = tw.sys;
        res.spec = tw.spec;
        res.deg_shift = +1;
    }
    return res;
}

TwistResult twist(const FuchsianSystem& sys, const SpectralData& spec, const std::map<Pole, Rat>& theta) {
    TwistResult r{sys, spec};
    r.sys.freeze_inf();
    bool any = false;
    for (auto& [p, th] : theta) {
        if (th == 0) continue;
        any = true;
        MatrixRF m = r.sys.residue_at(p) + MatrixRF::identity(2).scaled(RatFunc(th));
        r.sys.set_residue(p, m);
        auto it = r.spec.find(p);
        if (it != r.spec.end()) it->second = {it->second.plus + RatFunc(th), it->second.minus + RatFunc(th)};
    }
    if (any) r.sys.mark_twisted();
    return r;
}

}  // namespace ellcon
