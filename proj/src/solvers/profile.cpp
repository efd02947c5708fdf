#include <stdexcept>
#include <string>

#include "abperfect/graph6.hpp"
#include "abperfect/solvers.hpp"

namespace abperfect {

std::string_view param_name(Param p) {
    switch (p) {
    case Param::omega: return "omega";
    case Param::chi: return "chi";
    case Param::hadwiger: return "hadwiger";
    case Param::psi: return "psi";
    case Param::alpha: return "alpha";
    case Param::b: return "b";
    case Param::B: return "B";
    case Param::grundy: return "grundy";
    case Param::pseudo_grundy: return "pseudo_grundy";
    }
    return "?";
}

Param parse_param(std::string_view name) {
    for (Param p : kAllParams)
        if (param_name(p) == name) return p;
    if (name == "h") return Param::hadwiger;
    if (name == "Gamma") return Param::grundy;
    if (name == "gamma") return Param::pseudo_grundy;
    if (name == "pseudo_b") return Param::B;
    throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

int evaluate(Param p, const Graph& g) {
    switch (p) {
    case Param::omega: return clique_number(g);
    case Param::chi: return chromatic_number(g);
    case Param::hadwiger: return hadwiger_number(g);
    case Param::psi: return pseudoachromatic_number(g);
    case Param::alpha: return achromatic_number(g);
    case Param::b: return b_chromatic_number(g);
    case Param::B: return pseudo_b_chromatic_number(g);
    case Param::grundy: return grundy_number(g);
    case Param::pseudo_grundy: return pseudo_grundy_number(g);
    }
    throw std::logic_error("unhandled parameter");
}

int ParameterProfile::get(Param p) const { return values()[static_cast<int>(p)]; }

std::array<int, kParamCount> ParameterProfile::values() const {
    return {omega, chi, hadwiger, psi, alpha, b_chromatic, pseudo_b, grundy, pseudo_grundy};
}

ParameterProfile ParameterProfile::from_values(const std::array<int, kParamCount>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

std::string chain_violation(const ParameterProfile& p) {
    struct Link {
        const char* text;
        int lo;
        int hi;
    };
    const Link links[] = {
        {"omega <= hadwiger", p.omega, p.hadwiger},
        {"hadwiger <= psi", p.hadwiger, p.psi},
        {"omega <= alpha", p.omega, p.alpha},
        {"alpha <= psi", p.alpha, p.psi},
        {"omega <= b", p.omega, p.b_chromatic},
        {"b <= B", p.b_chromatic, p.pseudo_b},
        {"B <= psi", p.pseudo_b, p.psi},
        {"omega <= grundy", p.omega, p.grundy},
        {"grundy <= pseudo_grundy", p.grundy, p.pseudo_grundy},
        {"omega <= chi", p.omega, p.chi},
    };
    for (const auto& l : links)
        if (l.lo > l.hi) return l.text;
    return {};
}

ParameterProfile unchecked_profile(const Graph& g) {
    ParameterProfile p;
    p.omega = clique_number(g);
    p.chi = chromatic_number(g);
    p.hadwiger = hadwiger_number(g);
    p.psi = pseudoachromatic_number(g);
    p.alpha = achromatic_number(g);
    p.b_chromatic = b_chromatic_number(g);
    p.pseudo_b = pseudo_b_chromatic_number(g);
    p.grundy = grundy_number(g);
    p.pseudo_grundy = pseudo_grundy_number(g);
    return p;
}

ParameterProfile full_profile(const Graph& g) {
    const ParameterProfile p = unchecked_profile(g);
    if (auto bad = chain_violation(p); !bad.empty())
        throw ConsistencyError("parameter chain '" + bad + "' violated on " + emit_graph6(g));
    return p;
}

} // namespace abperfect
