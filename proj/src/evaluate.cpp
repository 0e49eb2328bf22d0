#include "ellcon/evaluate.hpp"

#include "ellcon/apparent.hpp"
#include "ellcon/maps.hpp"

namespace ellcon {

const std::vector<std::string>& eval_objects() {
    static const std::vector<std::string> o = {"z", "w", "ubar", "Tpsi", "B", "J", "Cinv", "Phi", "AppInf", "AppPsi", "M"};
    return o;
}

namespace {

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

RatFunc fin(RatFunc f) { return f.reduce(); }

std::string mat_text(const MatrixRF& m) {
    return m.map([](const RatFunc& f) { return fin(f); }).to_string();
}

std::vector<std::string> violated(const std::map<Var, RatFunc>& sub) {
    Params P = Params::symbolic();
    RatFunc U = U_l(), T = U_t(), &l = P.lam, &t = P.t;
    auto sp = special_polys(P, U, T);
    std::pair<const char*, RatFunc> g[] = {{"l = 0", l},          {"l = 1", l - 1},     {"t = 0", t},
                                           {"t = 1", t - 1},      {"l = t", l - t},     {"u_l = 0", U},
                                           {"u_l = 1", U - 1},    {"u_l = l", U - l},   {"u_t = 0", T},
                                           {"u_t = 1", T - 1},    {"u_t = l", T - l},   {"u_t = t", T - t},
                                           {"P_Pi = 0", sp.PPi},  {"P_Sigma = 0", sp.PSigma}, {"P_Lambda = 0", sp.PLambda}};
    std::vector<std::string> out;
    for (auto& [name, f] : g) {
        bool touches = false;
        for (Var v : f.num().vars())
            if (sub.count(v)) touches = true;
        if (!touches) continue;
        try {
            if (f.compose(sub).is_zero()) out.push_back(name);
        } catch (const std::exception&) {
        }
    }
    return out;
}

std::string compute(const std::string& obj, const std::map<Var, RatFunc>& sub) {
    Params P = Params::symbolic();
    RatFunc U = U_l(), T = U_t(), c1 = RatFunc::var(Var::c1), c2 = RatFunc::var(Var::c2);
    auto S = [&](const RatFunc& f) { return fin(f.compose(sub)); };
    auto SM = [&](const MatrixRF& m) { return mat_text(m.map([&](const RatFunc& f) { return f.compose(sub); })); };
    auto SA = [&](const AppClass& a) { return AppClass{{S(a.a[0]), S(a.a[1]), S(a.a[2])}}.to_string(); };
    if (obj == "z") return S(phi_bun(P, U, T).first).to_string();
    if (obj == "w") return S(phi_bun(P, U, T).second).to_string();
    if (obj == "ubar") return S(ubar(P, U, T)).to_string();
    if (obj == "Tpsi") return SM(t_psi_closed(P, U, T));
    if (obj == "B") return SM(b_matrix(P, U, T));
    if (obj == "J") return SM(j_matrix(P));
    if (obj == "Cinv") return SM(c_inverse(P));
    if (obj == "M") return SM(m_matrix(P, U, T));
    if (obj == "Phi") {
        PhiFull f = phi_full(P, c1, c2);
        return "z = " + S(f.z).to_string() + "\nw = " + S(f.w).to_string() + "\nk1 = " + S(f.k1).to_string() +
               "\nk2 = " + S(f.k2).to_string();
    }
    if (obj == "AppInf") return SA(app_infty(family(P, U, T, c1, c2)));
    if (obj == "AppPsi") return SA(app_psi(family(P, U, T, c1, c2), U));
    throw Usage("unknown object '" + obj + "'");
}

}  // namespace

EvalResult evaluate(const std::string& object, const std::vector<std::string>& bindings) {
    EvalResult r;
    std::map<Var, RatFunc> sub;
    try {
        for (auto& b : bindings) {
            auto eq = b.find('=');
            if (eq == std::string::npos) throw Usage("binding '" + b + "' is not name=value");
            auto v = var_from_name(b.substr(0, eq));
            if (!v) throw Usage("unknown variable '" + b.substr(0, eq) + "'");
            std::string val = b.substr(eq + 1);
            if (auto w = var_from_name(val))
                sub[*v] = RatFunc::var(*w);
            else
                sub[*v] = RatFunc(parse_rat(val));
        }
    } catch (const std::invalid_argument& e) {
        r.error = "usage";
        r.message = e.what();
        return r;
    }
    bool known = false;
    for (auto& o : eval_objects()) known = known || o == object;
    if (!known) {
        r.error = "usage";
        r.message = "unknown object '" + object + "'";
        return r;
    }
    try {
        r.text = compute(object, sub);
        r.ok = true;
    } catch (const std::exception& e) {
        r.error = "non-generic";
        r.message = e.what();
        r.guards = violated(sub);
    }
    return r;
}

}  // namespace ellcon
