#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellcon/rat.hpp"
#include "ellcon/vars.hpp"

namespace ellcon {

// Exponent vector packed into three words. Byte 0 holds the total degree and
// bytes 1..22 the exponents in variable order, so comparing the words as
// unsigned integers is exactly graded lex.
struct Mono {
    std::array<uint64_t, 3> w{};

    static int shift(int k) { return (7 - k % 8) * 8; }
    int byte(int k) const { return static_cast<int>((w[k / 8] >> shift(k)) & 0xff); }
    int deg() const { return byte(0); }
    int exp(Var v) const { return byte(vidx(v) + 1); }
    void set_byte(int k, int e) {
        w[k / 8] &= ~(uint64_t{0xff} << shift(k));
        w[k / 8] |= uint64_t(e) << shift(k);
    }
    void set(Var v, int e);  // keeps the degree byte consistent

    static Mono var(Var v, int e = 1) {
        Mono m;
        m.set(v, e);
        return m;
    }

    bool operator==(const Mono& o) const { return w == o.w; }
    bool operator!=(const Mono& o) const { return w != o.w; }
    bool operator<(const Mono& o) const { return w < o.w; }
    bool operator>(const Mono& o) const { return o.w < w; }

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
    Mono operator/(const Mono& o) const;  // requires divides
    Mono gcd(const Mono& o) const;
    bool is_one() const { return w[0] == 0 && w[1] == 0 && w[2] == 0; }
};

struct MonoHash {
    size_t operator()(const Mono& m) const {
        uint64_t h = m.w[0] * 0x9E3779B97F4A7C15ull;
        h ^= m.w[1] + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
        h ^= m.w[2] + 0x94D049BB133111EBull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

// Partial map Var -> Rat.
class Assignment {
public:
    Assignment() = default;
    Assignment(std::initializer_list<std::pair<Var, Rat>> init) {
        for (auto& [v, r] : init) set(v, r);
    }
    void set(Var v, const Rat& r) { vals_[vidx(v)] = r; }
    void unset(Var v) { vals_[vidx(v)].reset(); }
    bool has(Var v) const { return vals_[vidx(v)].has_value(); }
    const Rat& get(Var v) const;
    const std::optional<Rat>& at(int i) const { return vals_[i]; }
    std::string to_string() const;

private:
    std::array<std::optional<Rat>, kNumVars> vals_;
};

struct Term {
    Mono m;
    Int c;  // numerator; the polynomial carries a common denominator
};

// Sparse polynomial over Q: integer coefficients over one positive common
// denominator, terms strictly decreasing in graded lex. Canonical after every
// operation: no zero terms, gcd(content, den) = 1.
class MPoly {
public:
    MPoly() = default;
    MPoly(long c) : MPoly(Rat(c)) {}
    MPoly(const Rat& c);
    static MPoly var(Var v, int e = 1);
    static MPoly monomial(const Rat& c, const Mono& m);
    static MPoly from_terms(std::vector<Term> terms, Int den = 1);  // any order, duplicates summed

    bool is_zero() const { return terms_.empty(); }
    bool is_const() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    Rat const_value() const;  // requires is_const
    size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Int& den() const { return den_; }
    Rat coeff(size_t i) const;
    Rat coeff_of(const Mono& m) const;
    Rat leading_coeff() const { return coeff(0); }
    const Mono& leading_mono() const { return terms_.at(0).m; }
    int total_degree() const;
    int degree(Var v) const;
    bool has_var(Var v) const { return degree(v) > 0; }
    std::vector<Var> vars() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const Rat& r) const;
    MPoly mul_mono(const Mono& m) const;
    MPoly pow(unsigned e) const;

    bool operator==(const MPoly& o) const { return den_ == o.den_ && terms_equal(o); }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // p = sum_k coeffs[k] * v^k
    std::vector<MPoly> coeffs_in(Var v) const;
    static MPoly from_coeffs(const std::vector<MPoly>& cs, Var v);
    MPoly lc_in(Var v) const;
    MPoly derivative(Var v) const;

    Rat eval(const Assignment& a) const;  // throws naming an unassigned variable
    MPoly partial_eval(const Assignment& a) const;
    MPoly substitute(Var v, const MPoly& q) const;
    MPoly compose(const std::map<Var, MPoly>& sub) const;  // simultaneous

    // gcd of the integer contents (with sign making the leading coefficient
    // positive) and the primitive integer polynomial.
    std::pair<Rat, MPoly> content_primitive() const;
    Mono mono_gcd() const;
    MPoly div_mono(const Mono& m) const;  // requires m | every term

    std::string to_string() const;
    int compare(const MPoly& o) const;  // total order used for sorting factors

    friend MPoly mul_serial(const MPoly& a, const MPoly& b);
    friend MPoly mul_parallel(const MPoly& a, const MPoly& b, int chunks);

private:
    std::vector<Term> terms_;
    Int den_ = 1;

    void normalize();
    bool terms_equal(const MPoly& o) const;
    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract);
};

MPoly mul_serial(const MPoly& a, const MPoly& b);
MPoly mul_parallel(const MPoly& a, const MPoly& b, int chunks = 0);

// Exact division; nullopt when q does not divide p.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);

// Sylvester resultant in v via fraction-free elimination.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

struct PremResult {
    MPoly r;
    int e = 0;
};
// lc_v(q)^e p = s q + r with deg_v r < deg_v q; e = 0 when lc_v(q) is a constant.
PremResult pseudo_remainder(const MPoly& p, const MPoly& q, Var v);

// Fraction-free determinant of a square matrix of polynomials.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m);

}  // namespace ellcon
