#pragma once
#include <random>

#include "ellcon/mpoly.hpp"
#include "ellcon/ratfunc.hpp"
#include "ellcon/sampling.hpp"

namespace testutil {

using namespace ellcon;

inline MPoly X(Var v) { return MPoly::var(v); }
inline RatFunc R(Var v) { return RatFunc::var(v); }

// random sparse polynomial in the given variables
inline MPoly random_poly(std::mt19937_64& g, std::initializer_list<Var> vs, int terms, int maxdeg) {
    std::uniform_int_distribution<int> e(0, maxdeg);
    MPoly p;
    for (int k = 0; k < terms; ++k) {
        MPoly m(random_rat(g, 20, 5));
        for (Var v : vs) m *= X(v).pow(e(g));
        p += m;
    }
    return p;
}

}  // namespace testutil
