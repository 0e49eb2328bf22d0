#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ellcon {

// Variable universe. The enum order is the lexicographic tie-break of the
// graded order: x > zeta > u_l > u_t > ... > x4.
enum class Var : uint8_t {
    x, zeta, ul, ut, c1, c2, lam, t, nu, z, w, k1, k2,
    y1, y2, y3, y4, x0, x1, x2, x3, x4
};

inline constexpr int kNumVars = 22;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "x", "zeta", "u_l", "u_t", "c1", "c2", "l", "t", "nu", "z", "w", "k1", "k2",
    "y1", "y2", "y3", "y4", "x0", "x1", "x2", "x3", "x4"};

inline std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

inline std::optional<Var> var_from_name(std::string_view s) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == s) return static_cast<Var>(i);
    // a few aliases accepted on the command line
    if (s == "lambda" || s == "lam") return Var::lam;
    if (s == "ul" || s == "u_lambda") return Var::ul;
    if (s == "ut") return Var::ut;
    if (s == "k_1" || s == "kappa1") return Var::k1;
    if (s == "k_2" || s == "kappa2") return Var::k2;
    if (s == "c_1") return Var::c1;
    if (s == "c_2") return Var::c2;
    return std::nullopt;
}

inline int vidx(Var v) { return static_cast<int>(v); }

}  // namespace ellcon
