#include "ellcon/mpoly.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ellcon {

void Mono::set(Var v, int e) {
    if (e < 0 || e > 255) throw std::overflow_error("exponent out of range");
    int k = vidx(v) + 1;
    int d = deg() - byte(k) + e;
    if (d > 255) throw std::overflow_error("total degree exceeds 255");
    set_byte(k, e);
    set_byte(0, d);
}

Mono Mono::operator*(const Mono& o) const {
    if (deg() + o.deg() > 255) throw std::overflow_error("total degree exceeds 255");
    Mono r;
    for (int i = 0; i < 3; ++i) r.w[i] = w[i] + o.w[i];
    return r;
}

bool Mono::divides(const Mono& o) const {
    if (deg() > o.deg()) return false;
    for (int k = 1; k <= kNumVars; ++k)
        if (byte(k) > o.byte(k)) return false;
    return true;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 3; ++i) r.w[i] = w[i] - o.w[i];
    return r;
}

Mono Mono::gcd(const Mono& o) const {
    Mono r;
    for (int v = 0; v < kNumVars; ++v) {
        int e = std::min(exp(Var(v)), o.exp(Var(v)));
        if (e) r.set(Var(v), e);
    }
    return r;
}

const Rat& Assignment::get(Var v) const {
    const auto& o = vals_[vidx(v)];
    if (!o) throw std::invalid_argument("unassigned variable " + std::string(var_name(v)));
    return *o;
}

std::string Assignment::to_string() const {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (!vals_[i]) continue;
        if (!s.empty()) s += ' ';
        s += std::string(kVarNames[i]) + "=" + vals_[i]->get_str();
    }
    return s;
}

// ---------------------------------------------------------------------------

MPoly::MPoly(const Rat& c) {
    if (c != 0) {
        terms_.push_back({Mono{}, c.get_num()});
        den_ = c.get_den();
    }
}

MPoly MPoly::var(Var v, int e) {
    MPoly p;
    p.terms_.push_back({Mono::var(v, e), 1});
    return p;
}

MPoly MPoly::monomial(const Rat& c, const Mono& m) {
    MPoly p;
    if (c != 0) {
        p.terms_.push_back({m, c.get_num()});
        p.den_ = c.get_den();
    }
    return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms, Int den) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
    MPoly p;
    p.den_ = den;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.c == 0; });
    p.normalize();
    return p;
}

namespace {
MPoly from_rat_terms(std::vector<std::pair<Mono, Rat>> rt) {
    Int L = 1;
    for (auto& [m, c] : rt) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Term> terms;
    terms.reserve(rt.size());
    for (auto& [m, c] : rt) {
        if (c == 0) continue;
        Int n = c.get_num() * (L / c.get_den());
        terms.push_back({m, std::move(n)});
    }
    return MPoly::from_terms(std::move(terms), L);
}
}  // namespace

void MPoly::normalize() {
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        for (auto& t : terms_) t.c = -t.c;
    }
    if (den_ == 1) return;
    Int g = den_;
    for (auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& t : terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

Rat MPoly::const_value() const {
    if (terms_.empty()) return 0;
    if (!is_const()) throw std::logic_error("polynomial is not constant");
    return coeff(0);
}

Rat MPoly::coeff(size_t i) const {
    Rat r(terms_.at(i).c, den_);
    r.canonicalize();
    return r;
}

Rat MPoly::coeff_of(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& k) { return t.m > k; });
    if (it != terms_.end() && it->m == m) {
        Rat r(it->c, den_);
        r.canonicalize();
        return r;
    }
    return 0;
}

int MPoly::total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
}

int MPoly::degree(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& t : terms_) d = std::max(d, t.m.exp(v));
    return d;
}

std::vector<Var> MPoly::vars() const {
    std::vector<Var> out;
    for (int v = 0; v < kNumVars; ++v)
        if (degree(Var(v)) > 0) out.push_back(Var(v));
    return out;
}

bool MPoly::terms_equal(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MPoly MPoly::merge(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r;
    Int sa = 1, sb = 1;
    if (a.den_ != b.den_) {
        mpz_lcm(r.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
        sa = r.den_ / a.den_;
        sb = r.den_ / b.den_;
    } else {
        r.den_ = a.den_;
    }
    if (subtract) sb = -sb;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].m > b.terms_[j].m)) {
            r.terms_.push_back({a.terms_[i].m, a.terms_[i].c * sa});
            ++i;
        } else if (i == a.terms_.size() || b.terms_[j].m > a.terms_[i].m) {
            r.terms_.push_back({b.terms_[j].m, b.terms_[j].c * sb});
            ++j;
        } else {
            Int c = a.terms_[i].c * sa;
            mpz_addmul(c.get_mpz_t(), b.terms_[j].c.get_mpz_t(), sb.get_mpz_t());
            if (c != 0) r.terms_.push_back({a.terms_[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    r.normalize();
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    return *this = merge(*this, o, false);
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.is_zero()) return *this;
    return *this = merge(*this, o, true);
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

namespace {

struct HeapItem {
    Mono m;
    uint32_t i, j;
    bool operator<(const HeapItem& o) const { return m < o.m; }
};

// Heap multiplication of a[lo,hi) by all of b; output sorted, integer
// coefficients (denominators handled by the caller).
std::vector<Term> heap_mul(const std::vector<Term>& a, size_t lo, size_t hi, const std::vector<Term>& b) {
    std::vector<Term> out;
    if (lo >= hi || b.empty()) return out;
    std::priority_queue<HeapItem> heap;
    heap.push({a[lo].m * b[0].m, uint32_t(lo), 0});
    Int acc;
    while (!heap.empty()) {
        Mono cur = heap.top().m;
        acc = 0;
        while (!heap.empty() && heap.top().m == cur) {
            HeapItem it = heap.top();
            heap.pop();
            mpz_addmul(acc.get_mpz_t(), a[it.i].c.get_mpz_t(), b[it.j].c.get_mpz_t());
            if (it.j + 1 < b.size()) heap.push({a[it.i].m * b[it.j + 1].m, it.i, it.j + 1});
            if (it.j == 0 && it.i + 1 < hi) heap.push({a[it.i + 1].m * b[0].m, it.i + 1, 0});
        }
        if (acc != 0) out.push_back({cur, acc});
    }
    return out;
}

void check_degree(const MPoly& a, const MPoly& b) {
    if (a.total_degree() + b.total_degree() > 255) throw std::overflow_error("product degree exceeds 255");
}

}  // namespace

MPoly mul_serial(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    check_degree(a, b);
    const MPoly& s = a.size() <= b.size() ? a : b;
    const MPoly& l = a.size() <= b.size() ? b : a;
    r.terms_ = heap_mul(s.terms_, 0, s.terms_.size(), l.terms_);
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

MPoly mul_parallel(const MPoly& a, const MPoly& b, int chunks) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    check_degree(a, b);
    const MPoly& s = a.size() <= b.size() ? a : b;
    const MPoly& l = a.size() <= b.size() ? b : a;
    if (chunks <= 0) {
#ifdef _OPENMP
        chunks = 2 * omp_get_max_threads();
#else
        chunks = 1;
#endif
    }
    chunks = std::max(1, std::min<int>(chunks, static_cast<int>(s.size())));
    std::vector<MPoly> parts(chunks);
    const size_t n = s.terms_.size();
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k < chunks; ++k) {
        size_t lo = n * k / chunks, hi = n * (k + 1) / chunks;
        parts[k].terms_ = heap_mul(s.terms_, lo, hi, l.terms_);
    }
    // pairwise tree reduction; partials share den 1 so merge is a plain sum
    for (int step = 1; step < chunks; step *= 2) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int k = 0; k < chunks; k += 2 * step)
            if (k + step < chunks) parts[k] += parts[k + step];
    }
    MPoly r = std::move(parts[0]);
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    size_t work = a.size() * b.size();
#ifdef _OPENMP
    if (work > 200000 && omp_get_max_threads() > 1 && !omp_in_parallel()) return mul_parallel(a, b);
#endif
    (void)work;
    return mul_serial(a, b);
}

MPoly MPoly::scaled(const Rat& r) const {
    if (r == 0 || is_zero()) return MPoly();
    MPoly p = *this;
    for (auto& t : p.terms_) t.c *= r.get_num();
    p.den_ *= r.get_den();
    p.normalize();
    return p;
}

MPoly MPoly::mul_mono(const Mono& m) const {
    MPoly p = *this;
    for (auto& t : p.terms_) t.m = t.m * m;
    return p;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::vector<MPoly> MPoly::coeffs_in(Var v) const {
    int d = degree(v);
    std::vector<std::vector<Term>> parts(std::max(d + 1, 0));
    for (auto& t : terms_) {
        int e = t.m.exp(v);
        Mono m = t.m;
        m.set(v, 0);
        parts[e].push_back({m, t.c});
    }
    std::vector<MPoly> out;
    for (auto& p : parts) out.push_back(from_terms(std::move(p), den_));
    return out;
}

MPoly MPoly::from_coeffs(const std::vector<MPoly>& cs, Var v) {
    MPoly r;
    for (size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero()) r += cs[k].mul_mono(Mono::var(v, static_cast<int>(k)));
    return r;
}

MPoly MPoly::lc_in(Var v) const {
    auto cs = coeffs_in(v);
    return cs.empty() ? MPoly() : cs.back();
}

MPoly MPoly::derivative(Var v) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        int e = t.m.exp(v);
        if (!e) continue;
        Mono m = t.m;
        m.set(v, e - 1);
        out.push_back({m, t.c * e});
    }
    return from_terms(std::move(out), den_);
}

Rat MPoly::eval(const Assignment& a) const {
    Rat sum = 0;
    std::array<std::vector<Rat>, kNumVars> powers;
    for (auto& t : terms_) {
        Rat prod(t.c);
        for (int v = 0; v < kNumVars; ++v) {
            int e = t.m.exp(Var(v));
            if (!e) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(1);
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * a.get(Var(v)));
            prod *= pw[e];
        }
        sum += prod;
    }
    sum /= den_;
    return sum;
}

MPoly MPoly::partial_eval(const Assignment& a) const {
    std::vector<std::pair<Mono, Rat>> out;
    std::array<std::vector<Rat>, kNumVars> powers;
    for (auto& t : terms_) {
        Rat prod(t.c);
        Mono m = t.m;
        for (int v = 0; v < kNumVars; ++v) {
            int e = t.m.exp(Var(v));
            if (!e || !a.at(v)) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(1);
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *a.at(v));
            prod *= pw[e];
            m.set(Var(v), 0);
        }
        out.push_back({m, prod});
    }
    MPoly r = from_rat_terms(std::move(out));
    return r.scaled(Rat(1) / Rat(den_));
}

MPoly MPoly::substitute(Var v, const MPoly& q) const {
    auto cs = coeffs_in(v);
    MPoly r;
    for (size_t k = cs.size(); k-- > 0;) r = r * q + cs[k];
    return r;
}

MPoly MPoly::compose(const std::map<Var, MPoly>& sub) const {
    std::map<std::pair<int, int>, MPoly> cache;
    auto power = [&](Var v, int e) -> const MPoly& {
        auto key = std::make_pair(vidx(v), e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        MPoly p = sub.at(v).pow(e);
        return cache.emplace(key, std::move(p)).first->second;
    };
    MPoly r;
    for (auto& t : terms_) {
        Mono rest = t.m;
        MPoly term;
        bool first = true;
        for (auto& [v, q] : sub) {
            int e = t.m.exp(v);
            if (!e) continue;
            rest.set(v, 0);
            term = first ? power(v, e) : term * power(v, e);
            first = false;
        }
        MPoly mono = monomial(Rat(t.c), rest);
        r += first ? mono : term * mono;
    }
    return r.scaled(Rat(1) / Rat(den_));
}

std::pair<Rat, MPoly> MPoly::content_primitive() const {
    if (is_zero()) return {0, MPoly()};
    Int g = 0;
    for (auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (terms_[0].c < 0) g = -g;
    MPoly p;
    p.terms_ = terms_;
    for (auto& t : p.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    Rat content(g, den_);
    content.canonicalize();
    return {content, p};
}

Mono MPoly::mono_gcd() const {
    if (terms_.empty()) return Mono{};
    Mono g = terms_[0].m;
    for (auto& t : terms_) {
        if (g.is_one()) break;
        g = g.gcd(t.m);
    }
    return g;
}

MPoly MPoly::div_mono(const Mono& m) const {
    MPoly p = *this;
    for (auto& t : p.terms_) t.m = t.m / m;
    return p;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rat c(t.c, den_);
        c.canonicalize();
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool one = (c == 1);
        if (!one || t.m.is_one()) os << c.get_str();
        bool need_star = !one;
        for (int v = 0; v < kNumVars; ++v) {
            int e = t.m.exp(Var(v));
            if (!e) continue;
            if (need_star) os << '*';
            os << kVarNames[v];
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

int MPoly::compare(const MPoly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i].m != o.terms_[i].m) return terms_[i].m > o.terms_[i].m ? 1 : -1;
        int c = cmp(terms_[i].c, o.terms_[i].c);
        if (c) return c > 0 ? 1 : -1;
    }
    if (terms_.size() != o.terms_.size()) return terms_.size() > o.terms_.size() ? 1 : -1;
    int c = cmp(den_, o.den_);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

// ---------------------------------------------------------------------------

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return MPoly();
    if (q.is_const()) return p.scaled(Rat(1) / q.const_value());
    // cheap rejections: leading and trailing monomials, per-variable degrees
    const auto& pt = p.terms();
    const auto& qt = q.terms();
    if (!qt.front().m.divides(pt.front().m) || !qt.back().m.divides(pt.back().m)) return std::nullopt;
    for (int v = 0; v < kNumVars; ++v)
        if (q.degree(Var(v)) > p.degree(Var(v))) return std::nullopt;

    std::map<Mono, Int, std::greater<Mono>> rem;
    for (auto& t : pt) rem.emplace(t.m, t.c);
    // work with integer numerators: P = Q * S where S may need a denominator
    // that we accumulate as a power of lc(Q)
    const Int& lq = qt.front().c;
    std::vector<std::pair<Mono, Rat>> quot;
    Rat scale = 1;  // rem currently represents P * scale
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!qt.front().m.divides(it->first)) return std::nullopt;
        Mono m = it->first / qt.front().m;
        Rat c(it->second, lq);
        c.canonicalize();
        quot.push_back({m, c / scale});
        // rem -= c * m * Q, keeping integers: multiply rem by c's denominator
        Int cd = c.get_den();
        if (cd != 1) {
            for (auto& [mm, cc] : rem) cc *= cd;
            scale *= cd;
        }
        Int cn = c.get_num();
        for (auto& t : qt) {
            Mono mm = m * t.m;
            auto jt = rem.find(mm);
            if (jt == rem.end()) {
                Int v = -cn * t.c;
                rem.emplace(mm, std::move(v));
            } else {
                mpz_submul(jt->second.get_mpz_t(), cn.get_mpz_t(), t.c.get_mpz_t());
                if (jt->second == 0) rem.erase(jt);
            }
        }
    }
    MPoly s = from_rat_terms(std::move(quot));
    // p/q = (P/dp) / (Q/dq)
    return s.scaled(Rat(q.den(), p.den()));
}

MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return MPoly(1);
    int sign = 1;
    MPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return MPoly();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("Bareiss step not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
    int a = p.degree(v), b = q.degree(v);
    if (a < 1 || b < 1) throw std::invalid_argument("resultant: degree 0 in " + std::string(var_name(v)));
    auto pc = p.coeffs_in(v), qc = q.coeffs_in(v);
    size_t n = a + b;
    std::vector<std::vector<MPoly>> s(n, std::vector<MPoly>(n));
    for (int i = 0; i < b; ++i)
        for (int k = 0; k <= a; ++k) s[i][i + k] = pc[a - k];
    for (int i = 0; i < a; ++i)
        for (int k = 0; k <= b; ++k) s[b + i][i + k] = qc[b - k];
    return bareiss_det(std::move(s));
}

PremResult pseudo_remainder(const MPoly& p, const MPoly& q, Var v) {
    int dq = q.degree(v);
    if (dq < 1) throw std::invalid_argument("pseudo_remainder: divisor has degree 0 in " + std::string(var_name(v)));
    MPoly lq = q.lc_in(v);
    bool const_lc = lq.is_const();
    PremResult res{p, 0};
    while (!res.r.is_zero() && res.r.degree(v) >= dq) {
        int dr = res.r.degree(v);
        MPoly lr = res.r.lc_in(v);
        MPoly shift = lr.mul_mono(Mono::var(v, dr - dq));
        if (const_lc) {
            res.r -= (shift * q).scaled(Rat(1) / lq.const_value());
        } else {
            res.r = lq * res.r - shift * q;
            ++res.e;
        }
    }
    return res;
}

}  // namespace ellcon
