#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "abperfect/coloring.hpp"
#include "abperfect/graph.hpp"

namespace abperfect {

// Exact solvers. Each *_number has a companion returning a witness; the
// witness is the first one met in the search order, so it is reproducible.

int clique_number(const Graph& g);
VertexSet maximum_clique(const Graph& g);

int chromatic_number(const Graph& g);
ColoringPartition optimal_coloring(const Graph& g);

/// Largest k with a K_k minor (per component, maximized).
int hadwiger_number(const Graph& g);
MinorModel hadwiger_minor(const Graph& g);

/// Largest connected and complete coloring of a component, maximized over components.
int hadwiger_via_coloring(const Graph& g);
/// Witness covering the best component only.
ColoringPartition hadwiger_coloring(const Graph& g);

int pseudoachromatic_number(const Graph& g);
ColoringPartition pseudoachromatic_coloring(const Graph& g);

int achromatic_number(const Graph& g);
ColoringPartition achromatic_coloring(const Graph& g);

int b_chromatic_number(const Graph& g);
ColoringPartition b_chromatic_coloring(const Graph& g);

int pseudo_b_chromatic_number(const Graph& g);
ColoringPartition pseudo_b_chromatic_coloring(const Graph& g);

/// Largest Grundy coloring; classes of the witness are in color order.
int grundy_number(const Graph& g);
ColoringPartition grundy_coloring(const Graph& g);
/// Same parameter via first-fit over every vertex ordering.
int grundy_number_first_fit(const Graph& g);
/// Colors used by first-fit on the given vertex order.
int first_fit_colors(const Graph& g, const std::vector<int>& order);

int pseudo_grundy_number(const Graph& g);
ColoringPartition pseudo_grundy_coloring(const Graph& g);

enum class Param { omega, chi, hadwiger, psi, alpha, b, B, grundy, pseudo_grundy };

inline constexpr int kParamCount = 9;
inline constexpr std::array<Param, kParamCount> kAllParams = {
    Param::omega, Param::chi, Param::hadwiger, Param::psi,         Param::alpha,
    Param::b,     Param::B,   Param::grundy,   Param::pseudo_grundy};

std::string_view param_name(Param p);
/// Accepts the canonical names plus a few aliases (h, Gamma, gamma, ...).
Param parse_param(std::string_view name);
int evaluate(Param p, const Graph& g);

struct ParameterProfile {
    int omega = 0;
    int chi = 0;
    int hadwiger = 0;
    int psi = 0;
    int alpha = 0;
    int b_chromatic = 0;
    int pseudo_b = 0;
    int grundy = 0;
    int pseudo_grundy = 0;

    int get(Param p) const;
    std::array<int, kParamCount> values() const;
    static ParameterProfile from_values(const std::array<int, kParamCount>& v);

    friend bool operator==(const ParameterProfile&, const ParameterProfile&) = default;
};

/// Raised when computed values violate an inequality that holds for every graph.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// First violated chain inequality, or empty if none.
std::string chain_violation(const ParameterProfile& p);

/// All nine parameters; throws ConsistencyError on a chain violation.
ParameterProfile full_profile(const Graph& g);
/// All nine parameters without the chain check.
ParameterProfile unchecked_profile(const Graph& g);

} // namespace abperfect
