#pragma once
#include <complex>
#include <string>
#include <vector>

#include "ellcon/mpoly.hpp"

namespace ellcon {

// Dense univariate polynomial over Q, coefficients low degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static UPoly from_mpoly(const MPoly& p, Var v);  // p must involve only v
    MPoly to_mpoly(Var v) const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lc() const { return c_.back(); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    UPoly monic() const;
    UPoly derivative() const;
    Rat eval(const Rat& x) const;
    std::string to_string(Var v = Var::x) const;

    friend void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    UPoly operator/(const UPoly& o) const;  // exact quotient expected
    UPoly operator%(const UPoly& o) const;

private:
    std::vector<Rat> c_;
    void trim();
};

UPoly gcd(UPoly a, UPoly b);  // monic
UPoly squarefree_part(const UPoly& p);

struct RootDisk {
    std::complex<long double> center;
    long double radius;  // upper bound; the disk contains exactly one root when isolation succeeded
};

struct Isolation {
    bool certified = false;
    std::vector<RootDisk> disks;
    std::string note;
};

// Approximates all complex roots and certifies them with inclusion disks
// |z - z_i| <= n |p(z_i)/p'(z_i)| evaluated exactly at the rational
// approximations; success means the n disks are pairwise disjoint, so each
// holds exactly one root of the square-free input.
Isolation isolate_roots(const UPoly& p);

}  // namespace ellcon
