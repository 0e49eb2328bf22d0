#include "ellcon/twoform.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellcon {

int TwoForm::pos(Var v) const {
    auto it = std::find(coords_.begin(), coords_.end(), v);
    return it == coords_.end() ? -1 : static_cast<int>(it - coords_.begin());
}

int TwoForm::ensure(Var v) {
    int p = pos(v);
    if (p >= 0) return p;
    coords_.push_back(v);
    return static_cast<int>(coords_.size()) - 1;
}

TwoForm& TwoForm::add(Var a, Var b, const RatFunc& c) {
    if (a == b || c.is_zero()) return *this;
    int i = ensure(a), j = ensure(b);
    RatFunc s = c;
    if (i > j) {
        std::swap(i, j);
        s = -s;
    }
    auto key = std::make_pair(i, j);
    auto it = c_.find(key);
    if (it == c_.end())
        c_.emplace(key, s);
    else {
        it->second += s;
        if (it->second.is_zero()) c_.erase(it);
    }
    return *this;
}

RatFunc TwoForm::coeff(Var a, Var b) const {
    int i = pos(a), j = pos(b);
    if (i < 0 || j < 0 || i == j) return RatFunc();
    bool neg = i > j;
    if (neg) std::swap(i, j);
    auto it = c_.find({i, j});
    if (it == c_.end()) return RatFunc();
    return neg ? -it->second : it->second;
}

TwoForm TwoForm::operator+(const TwoForm& o) const {
    TwoForm r = *this;
    for (auto& [k, c] : o.c_) r.add(o.coords_[k.first], o.coords_[k.second], c);
    return r;
}

TwoForm TwoForm::scaled(const RatFunc& s) const {
    TwoForm r(coords_);
    for (auto& [k, c] : c_) r.add(coords_[k.first], coords_[k.second], c * s);
    return r;
}

bool TwoForm::equals(const TwoForm& o) const {
    std::vector<Var> all = coords_;
    for (Var v : o.coords_)
        if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (!coeff(all[i], all[j]).equals(o.coeff(all[i], all[j]))) return false;
    return true;
}

std::string TwoForm::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ") d" + std::string(var_name(coords_[k.first])) + "^d" +
             std::string(var_name(coords_[k.second]));
    }
    return s;
}

std::vector<RatFunc> differential(const RatFunc& f, const std::vector<Var>& coords) {
    std::vector<RatFunc> d;
    d.reserve(coords.size());
    for (Var v : coords) d.push_back(f.derivative(v));
    return d;
}

TwoForm wedge(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, const std::vector<Var>& coords) {
    TwoForm r(coords);
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j) {
            RatFunc c = a[i] * b[j] - a[j] * b[i];
            r.add(coords[i], coords[j], c);
        }
    return r;
}

TwoForm pullback_two_form(const TwoForm& omega, const std::map<Var, RatFunc>& map, const std::vector<Var>& source) {
    std::map<Var, std::vector<RatFunc>> jac;
    for (Var v : omega.coords()) {
        auto it = map.find(v);
        if (it == map.end())
            throw std::invalid_argument("pullback: no expression for coordinate " + std::string(var_name(v)));
        jac.emplace(v, differential(it->second, source));
    }
    TwoForm r(source);
    for (auto& [k, c] : omega.table()) {
        Var a = omega.coords()[k.first], b = omega.coords()[k.second];
        RatFunc cc = c.compose(map);
        TwoForm w = wedge(jac.at(a), jac.at(b), source);
        r = r + w.scaled(cc);
    }
    return r;
}

}  // namespace ellcon
