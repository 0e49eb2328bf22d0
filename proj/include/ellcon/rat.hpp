#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ellcon {

using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace ellcon
