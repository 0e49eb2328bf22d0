#include "ellcon/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ellcon {

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& p, Var v) {
    for (Var u : p.vars())
        if (u != v) throw std::invalid_argument("from_mpoly: extra variable " + std::string(var_name(u)));
    std::vector<Rat> c(std::max(p.degree(v) + 1, 0));
    for (size_t i = 0; i < p.size(); ++i) c[p.terms()[i].m.exp(v)] = p.coeff(i);
    return UPoly(std::move(c));
}

MPoly UPoly::to_mpoly(Var v) const {
    MPoly r;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) r += MPoly::monomial(c_[k], Mono::var(v, static_cast<int>(k)));
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < c_.size()) c[k] += c_[k];
        if (k < o.c_.size()) c[k] += o.c_[k];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < c_.size()) c[k] += c_[k];
        if (k < o.c_.size()) c[k] -= o.c_[k];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> c = c_;
    Rat l = lc();
    for (auto& x : c) x /= l;
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * static_cast<long>(k);
    return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

std::string UPoly::to_string(Var v) const { return to_mpoly(v).to_string(); }

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    int db = b.degree();
    std::vector<Rat> qc(std::max(a.degree() - db + 1, 0));
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Rat f = rem[k] / b.lc();
        qc[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    rem.resize(std::min<size_t>(rem.size(), db));
    q = UPoly(std::move(qc));
    r = UPoly(std::move(rem));
}

UPoly UPoly::operator/(const UPoly& o) const {
    UPoly q, r;
    divmod(*this, o, q, r);
    return q;
}

UPoly UPoly::operator%(const UPoly& o) const {
    UPoly q, r;
    divmod(*this, o, q, r);
    return r;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return (p / gcd(p, p.derivative())).monic();
}

namespace {

using cld = std::complex<long double>;

Rat to_rat(long double x) {
    double hi = static_cast<double>(x);
    double lo = static_cast<double>(x - static_cast<long double>(hi));
    return Rat(hi) + Rat(lo);
}

// exact value of p at a Gaussian rational, returned as (re, im)
void eval_exact(const std::vector<Rat>& c, const Rat& re, const Rat& im, Rat& pr, Rat& pi) {
    pr = 0;
    pi = 0;
    for (size_t k = c.size(); k-- > 0;) {
        Rat nr = pr * re - pi * im + c[k];
        Rat ni = pr * im + pi * re;
        pr = std::move(nr);
        pi = std::move(ni);
    }
}

long double sqrt_up(const Rat& r2) {
    long double v = std::sqrt(static_cast<long double>(r2.get_d()));
    return v * (1 + 1e-12L) + 1e-300L;
}

}  // namespace

Isolation isolate_roots(const UPoly& p) {
    Isolation out;
    int n = p.degree();
    if (n < 1) {
        out.certified = true;
        return out;
    }
    UPoly m = p.monic();
    std::vector<cld> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = static_cast<long double>(m.coeffs()[k].get_d());
    // Cauchy bound for the starting circle
    long double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[k]));
    bound = 1 + bound;
    std::vector<cld> z(n);
    for (int k = 0; k < n; ++k)
        z[k] = std::polar(bound * 0.5L + 0.1L, 2.0L * 3.14159265358979323846L * k / n + 0.4L);
    auto horner = [&](cld x) {
        cld r = 0;
        for (int k = n; k >= 0; --k) r = r * x + a[k];
        return r;
    };
    for (int it = 0; it < 5000; ++it) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            cld den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            cld step = horner(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (change < 1e-17L) break;
    }
    // Newton polish in long double
    UPoly dm = m.derivative();
    std::vector<cld> da(n);
    for (int k = 0; k < n; ++k) da[k] = static_cast<long double>(dm.coeffs()[k].get_d());
    for (auto& x : z)
        for (int it = 0; it < 3; ++it) {
            cld d = 0;
            for (int k = n - 1; k >= 0; --k) d = d * x + da[k];
            if (std::abs(d) == 0) break;
            x -= horner(x) / d;
        }

    const auto& pc = m.coeffs();
    const auto& dc = dm.coeffs();
    std::vector<Rat> re(n), im(n), r2(n);
    for (int i = 0; i < n; ++i) {
        re[i] = to_rat(z[i].real());
        im[i] = to_rat(z[i].imag());
        Rat pr, pi, dr, di;
        eval_exact(pc, re[i], im[i], pr, pi);
        eval_exact(dc, re[i], im[i], dr, di);
        Rat d2 = dr * dr + di * di;
        if (d2 == 0) {
            out.note = "derivative vanishes at an approximation";
            return out;
        }
        r2[i] = Rat(n) * Rat(n) * (pr * pr + pi * pi) / d2;
        out.disks.push_back({z[i], sqrt_up(r2[i])});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat dx = re[i] - re[j], dy = im[i] - im[j];
            Rat dist2 = dx * dx + dy * dy;
            Rat rs = Rat(static_cast<double>(out.disks[i].radius)) + Rat(static_cast<double>(out.disks[j].radius));
            // radius doubles are rounded up by sqrt_up; the double cast can lose
            // at most one ulp, so inflate slightly
            rs *= Rat(1000001, 1000000);
            if (dist2 <= rs * rs) {
                out.note = "disks " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
                return out;
            }
        }
    out.certified = true;
    return out;
}

}  // namespace ellcon
