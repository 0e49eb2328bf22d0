#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellcon/mpoly.hpp"

namespace ellcon {

// Rational function num / prod(f_i^e_i). Each factor f_i is a non-constant
// primitive integer polynomial with positive leading coefficient, the list is
// sorted and duplicate-free, and all scalar content lives in num. No
// multivariate gcd is ever taken; equality is by cross-multiplication.
class RatFunc {
public:
    using Factors = std::vector<std::pair<MPoly, int>>;

    RatFunc() = default;
    RatFunc(long c) : num_(c) {}
    RatFunc(const Rat& c) : num_(c) {}
    RatFunc(const MPoly& p) : num_(p) {}
    RatFunc(const MPoly& num, const MPoly& den);
    static RatFunc var(Var v) { return RatFunc(MPoly::var(v)); }
    static RatFunc from_factors(const MPoly& num, const Factors& den);

    const MPoly& num() const { return num_; }
    MPoly den() const;
    const Factors& den_factors() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    bool is_const() const { return den_.empty() && num_.is_const(); }
    Rat const_value() const { return num_.const_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc pow(int e) const;
    RatFunc inverse() const { return RatFunc(1) / *this; }

    // cross-multiplied equality
    bool equals(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return equals(o); }
    bool operator!=(const RatFunc& o) const { return !equals(o); }

    RatFunc derivative(Var v) const;
    Rat eval(const Assignment& a) const;  // throws on unassigned var or vanishing denominator
    RatFunc partial_eval(const Assignment& a) const;
    RatFunc substitute(Var v, const RatFunc& r) const;
    RatFunc compose(const std::map<Var, RatFunc>& sub) const;  // simultaneous

    // Divide out denominator factors that divide the numerator exactly.
    RatFunc& reduce();

    std::string to_string() const;

private:
    MPoly num_;
    Factors den_;

    void add_factor(const MPoly& f, int e);  // f primitive or not; content folded into num
    void canon();
    static Factors lcm(const Factors& a, const Factors& b);
    static MPoly cofactor(const Factors& full, const Factors& part);
    static RatFunc add_sub(const RatFunc& a, const RatFunc& b, bool sub);
};

bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

}  // namespace ellcon
