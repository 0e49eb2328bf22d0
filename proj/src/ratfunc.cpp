#include "ellcon/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellcon {

namespace {

bool factor_less(const std::pair<MPoly, int>& a, const std::pair<MPoly, int>& b) {
    return a.first.compare(b.first) < 0;
}

int find_factor(const RatFunc::Factors& fs, const MPoly& f) {
    for (size_t i = 0; i < fs.size(); ++i)
        if (fs[i].first == f) return static_cast<int>(i);
    return -1;
}

}  // namespace

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    add_factor(den, 1);
    canon();
}

RatFunc RatFunc::from_factors(const MPoly& num, const Factors& den) {
    RatFunc r(num);
    for (auto& [f, e] : den) {
        if (f.is_zero()) throw std::domain_error("rational function with zero denominator");
        r.add_factor(f, e);
    }
    r.canon();
    return r;
}

void RatFunc::add_factor(const MPoly& f, int e) {
    if (e == 0) return;
    auto [content, prim] = f.content_primitive();
    Rat ce = 1;
    for (int k = 0; k < e; ++k) ce *= content;
    num_ = num_.scaled(Rat(1) / ce);
    // split off the monomial part so that u, u-1, ... factors stay recognizable
    Mono g = prim.mono_gcd();
    std::vector<MPoly> parts;
    if (!g.is_one()) {
        prim = prim.div_mono(g);
        for (int v = 0; v < kNumVars; ++v) {
            int k = g.exp(Var(v));
            for (int i = 0; i < k; ++i) parts.push_back(MPoly::var(Var(v)));
        }
    }
    if (!prim.is_const()) parts.push_back(prim);
    for (auto& p : parts) {
        int i = find_factor(den_, p);
        if (i >= 0)
            den_[i].second += e;
        else
            den_.push_back({p, e});
    }
}

void RatFunc::canon() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::erase_if(den_, [](const auto& fe) { return fe.second == 0; });
    std::sort(den_.begin(), den_.end(), factor_less);
}

MPoly RatFunc::den() const {
    MPoly d(1);
    for (auto& [f, e] : den_) d = d * f.pow(e);
    return d;
}

RatFunc::Factors RatFunc::lcm(const Factors& a, const Factors& b) {
    Factors out = a;
    for (auto& [f, e] : b) {
        int i = find_factor(out, f);
        if (i >= 0)
            out[i].second = std::max(out[i].second, e);
        else
            out.push_back({f, e});
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

// full / part, both as factor lists with part dividing full
MPoly RatFunc::cofactor(const Factors& full, const Factors& part) {
    MPoly c(1);
    for (auto& [f, e] : full) {
        int i = find_factor(part, f);
        int k = e - (i >= 0 ? part[i].second : 0);
        if (k > 0) c = c * f.pow(k);
    }
    return c;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::add_sub(const RatFunc& a, const RatFunc& b, bool sub) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sub ? -b : b;
    if (a.den_ == b.den_) return from_factors(sub ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
    Factors L = lcm(a.den_, b.den_);
    MPoly na = a.num_ * cofactor(L, a.den_);
    MPoly nb = b.num_ * cofactor(L, b.den_);
    return from_factors(sub ? na - nb : na + nb, L);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc::add_sub(a, b, false); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return RatFunc::add_sub(a, b, true); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    RatFunc r(a.num_ * b.num_);
    r.den_ = a.den_;
    for (auto& [f, e] : b.den_) {
        int i = find_factor(r.den_, f);
        if (i >= 0)
            r.den_[i].second += e;
        else
            r.den_.push_back({f, e});
    }
    r.canon();
    return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    if (a.is_zero()) return RatFunc();
    RatFunc r(a.num_);
    r.den_ = a.den_;
    // b's denominator moves up, cancelling against a's factors where possible
    MPoly up(1);
    for (auto& [f, e] : b.den_) {
        int i = find_factor(r.den_, f);
        int k = e;
        if (i >= 0) {
            int c = std::min(k, r.den_[i].second);
            r.den_[i].second -= c;
            k -= c;
        }
        if (k > 0) up = up * f.pow(k);
    }
    r.num_ = r.num_ * up;
    r.add_factor(b.num_, 1);
    // a factor that now appears in both places came from b.num_ matching
    // nothing; nothing else to do without a gcd
    r.canon();
    return r;
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(num_.pow(e));
    r.den_ = den_;
    for (auto& fe : r.den_) fe.second *= e;
    r.canon();
    return r;
}

bool RatFunc::equals(const RatFunc& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    if (num_.is_zero() || o.num_.is_zero()) return num_.is_zero() && o.num_.is_zero();
    Factors L = lcm(den_, o.den_);
    return num_ * cofactor(L, den_) == o.num_ * cofactor(L, o.den_);
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) { return f.equals(g); }

RatFunc RatFunc::derivative(Var v) const {
    // (N / prod f^e)' = (N' prod f - N sum e f' prod_{g != f} g) / prod f^(e+1),
    // only over the factors that actually involve v
    Factors dep;
    for (auto& fe : den_)
        if (fe.first.has_var(v)) dep.push_back(fe);
    MPoly dn = num_.derivative(v);
    if (dep.empty()) return from_factors(dn, den_);
    MPoly prod(1);
    for (auto& [f, e] : dep) prod = prod * f;
    MPoly n = dn * prod;
    for (size_t i = 0; i < dep.size(); ++i) {
        MPoly others(1);
        for (size_t j = 0; j < dep.size(); ++j)
            if (j != i) others = others * dep[j].first;
        n -= (num_ * dep[i].first.derivative(v) * others).scaled(dep[i].second);
    }
    Factors nd = den_;
    for (auto& fe : nd)
        if (fe.first.has_var(v)) fe.second += 1;
    return from_factors(n, nd);
}

Rat RatFunc::eval(const Assignment& a) const {
    Rat n = num_.eval(a);
    Rat d = 1;
    for (auto& [f, e] : den_) {
        Rat fv = f.eval(a);
        if (fv == 0) throw std::domain_error("denominator factor vanishes: " + f.to_string());
        for (int k = 0; k < e; ++k) d *= fv;
    }
    return n / d;
}

RatFunc RatFunc::partial_eval(const Assignment& a) const {
    Factors d;
    for (auto& [f, e] : den_) {
        MPoly g = f.partial_eval(a);
        if (g.is_zero()) throw std::domain_error("denominator factor vanishes: " + f.to_string());
        d.push_back({g, e});
    }
    return from_factors(num_.partial_eval(a), d);
}

RatFunc RatFunc::substitute(Var v, const RatFunc& r) const {
    std::map<Var, RatFunc> m;
    m.emplace(v, r);
    return compose(m);
}

namespace {
RatFunc compose_poly(const MPoly& p, const std::map<Var, RatFunc>& sub) {
    // Horner in the first substituted variable present, recursing on the rest
    for (auto& [v, r] : sub) {
        if (!p.has_var(v)) continue;
        auto cs = p.coeffs_in(v);
        RatFunc acc;
        for (size_t k = cs.size(); k-- > 0;) {
            acc = acc * r + compose_poly(cs[k], sub);
        }
        return acc;
    }
    return RatFunc(p);
}
}  // namespace

RatFunc RatFunc::compose(const std::map<Var, RatFunc>& sub) const {
    RatFunc r = compose_poly(num_, sub);
    for (auto& [f, e] : den_) r /= compose_poly(f, sub).pow(e);
    return r;
}

RatFunc& RatFunc::reduce() {
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = divide_exact(num_, f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
    }
    canon();
    return *this;
}

std::string RatFunc::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string s = "(" + num_.to_string() + ")/(";
    for (size_t i = 0; i < den_.size(); ++i) {
        if (i) s += "*";
        s += "(" + den_[i].first.to_string() + ")";
        if (den_[i].second > 1) s += "^" + std::to_string(den_[i].second);
    }
    return s + ")";
}

}  // namespace ellcon
