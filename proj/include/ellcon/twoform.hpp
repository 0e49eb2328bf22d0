#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellcon/ratfunc.hpp"

namespace ellcon {

// sum_{i<j} c_ij dv_i ^ dv_j over a fixed coordinate list.
class TwoForm {
public:
    TwoForm() = default;
    explicit TwoForm(std::vector<Var> coords) : coords_(std::move(coords)) {}

    const std::vector<Var>& coords() const { return coords_; }
    // adds c * da ^ db; swaps to i<j with a sign, drops da ^ da
    TwoForm& add(Var a, Var b, const RatFunc& c);
    RatFunc coeff(Var a, Var b) const;
    const std::map<std::pair<int, int>, RatFunc>& table() const { return c_; }

    TwoForm operator+(const TwoForm& o) const;
    TwoForm scaled(const RatFunc& s) const;
    bool equals(const TwoForm& o) const;
    std::string to_string() const;

private:
    std::vector<Var> coords_;
    std::map<std::pair<int, int>, RatFunc> c_;  // keyed by positions in coords_
    int pos(Var v) const;
    int ensure(Var v);
};

// map: target coordinate -> expression in the source coordinates
TwoForm pullback_two_form(const TwoForm& omega, const std::map<Var, RatFunc>& map, const std::vector<Var>& source);

// d f as the list of partials over coords
std::vector<RatFunc> differential(const RatFunc& f, const std::vector<Var>& coords);
TwoForm wedge(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, const std::vector<Var>& coords);

}  // namespace ellcon
