#pragma once
#include <string>
#include <vector>

namespace ellcon {

struct EvalResult {
    bool ok = false;
    std::string text;                 // canonical serialization when ok
    std::string error;                // "non-generic", "usage"
    std::string message;
    std::vector<std::string> guards;  // violated genericity conditions
};

const std::vector<std::string>& eval_objects();

// object in {z, w, ubar, Tpsi, B, J, Cinv, Phi, AppInf, AppPsi, M};
// bindings "name=value" with value a rational or a variable name
EvalResult evaluate(const std::string& object, const std::vector<std::string>& bindings);

}  // namespace ellcon
