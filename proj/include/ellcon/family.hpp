#pragma once
#include <array>
#include <string>

#include "ellcon/connection.hpp"

namespace ellcon {

struct DegenerateConnection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FuchsianSystem nabla0(const Params& prm, const RatFunc& ul, const RatFunc& ut);
HiggsField theta1(const Params& prm, const RatFunc& ul, const RatFunc& ut);
HiggsField theta2(const Params& prm, const RatFunc& ul, const RatFunc& ut);
FuchsianSystem family(const Params& prm, const RatFunc& ul, const RatFunc& ut, const RatFunc& c1, const RatFunc& c2);

// (0, 1, u_l, inf, u_t) at poles (0, 1, l, inf, t)
ParabolicData chart_parabolics(const RatFunc& ul, const RatFunc& ut);
// nu+ = 1/4 at 0, 1, l, inf and nu at t
SpectralData nabla0_spectrum(const Params& prm);

RatFunc sigma_psi(const Params& prm, const RatFunc& ul);  // in x

// Projective class of a2 x^2 + a1 x + a0.
struct AppClass {
    std::array<RatFunc, 3> a;  // a0, a1, a2
    bool proportional(const AppClass& o) const;
    AppClass partial_eval(const Assignment& as) const;
    std::string to_string() const;
};

AppClass app_infty(const FuchsianSystem& sys);
AppClass app_psi(const FuchsianSystem& sys, const RatFunc& ul);

// coefficients in x of a rational function whose denominator is free of x
std::vector<RatFunc> x_coefficients(const RatFunc& f);

}  // namespace ellcon
