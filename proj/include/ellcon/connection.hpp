#pragma once
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellcon/matrix.hpp"

namespace ellcon {

enum class Pole { p0, p1, lam, t, inf };
inline constexpr Pole kFinitePoles[] = {Pole::p0, Pole::p1, Pole::lam, Pole::t};
inline constexpr Pole kAllPoles[] = {Pole::p0, Pole::p1, Pole::lam, Pole::inf, Pole::t};
std::string pole_name(Pole p);

// Point of the projective fiber: zeta <-> (zeta, 1)^T, infinity <-> (1, 0)^T.
struct Direction {
    bool infinite = false;
    RatFunc zeta;
    static Direction at(const RatFunc& z) { return {false, z}; }
    static Direction infinity() { return {true, RatFunc()}; }
    MatrixRF vec() const;  // 2x1
    bool equals(const Direction& o) const;
    std::string to_string() const;
};
std::optional<Direction> direction_of(const RatFunc& a, const RatFunc& b);  // of the vector (a,b); nullopt if zero

struct Params {
    RatFunc lam, t, nu;
    static Params symbolic();
    static Params at(const Rat& lam, const Rat& t, const Rat& nu);
    bool specialized() const { return lam.is_const() && t.is_const() && nu.is_const(); }
    std::string to_string() const;
};

struct IrrationalEigendata : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d + sum_p A_p dx/(x - p); all four finite poles are always present (possibly
// zero residue). The residue at infinity is -sum A_p unless frozen.
class FuchsianSystem {
public:
    FuchsianSystem() = default;
    FuchsianSystem(const Params& prm, std::map<Pole, MatrixRF> residues, bool inf_pole = true);

    const Params& params() const { return prm_; }
    RatFunc position(Pole p) const;
    MatrixRF residue_at(Pole p) const;
    bool has_inf_pole() const { return inf_pole_; }
    bool trace_free() const { return trace_free_; }
    bool inf_frozen() const { return inf_.has_value(); }

    void set_residue(Pole p, const MatrixRF& m);  // freezes infinity first
    void freeze_inf();
    void mark_twisted() { trace_free_ = false; }

    FuchsianSystem operator+(const FuchsianSystem& o) const;
    FuchsianSystem scaled(const RatFunc& s) const;
    bool equals(const FuchsianSystem& o) const;
    FuchsianSystem partial_eval(const Assignment& a) const;

    // den(x) * A(x) with den = x(x-1)(x-lam)(x-t), entries polynomial in x
    MatrixRF cleared_matrix() const;
    std::string to_string() const;

private:
    Params prm_;
    std::map<Pole, MatrixRF> res_;
    std::optional<MatrixRF> inf_;
    bool inf_pole_ = true;
    bool trace_free_ = true;
};

using HiggsField = FuchsianSystem;

using ParabolicData = std::map<Pole, Direction>;

struct SpectralPair {
    RatFunc plus, minus;
};
using SpectralData = std::map<Pole, SpectralPair>;

MatrixRF residue_at(const FuchsianSystem& sys, Pole p);

struct Eigendata {
    RatFunc plus, minus;
    Direction dir_plus, dir_minus;
    bool nilpotent = false;
};
Eigendata eigendata(const MatrixRF& m);

// square root of a polynomial / rational function if it is a perfect square
std::optional<MPoly> poly_sqrt(const MPoly& p);
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& f);

bool check_fuchs(const FuchsianSystem& sys, int degE);
Rat parabolic_degree(int degE, int degL, const std::vector<Rat>& weights, const std::vector<bool>& member);

// M v = e v exactly
bool is_eigenvector(const MatrixRF& m, const Direction& d, const RatFunc& e);
bool is_nilpotent_with_kernel(const MatrixRF& m, const Direction& d);

enum class ElemSign { negative, positive };

struct ElemResult {
    FuchsianSystem sys;
    ParabolicData parab;
    SpectralData spec;
    int deg_shift = 0;
};

ElemResult elementary_transform(const FuchsianSystem& sys, const ParabolicData& parab, const SpectralData& spec, Pole p,
                                ElemSign sign);

struct TwistResult {
    FuchsianSystem sys;
    SpectralData spec;
};
TwistResult twist(const FuchsianSystem& sys, const SpectralData& spec, const std::map<Pole, Rat>& theta);

}  // namespace ellcon
