#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "abperfect/graph.hpp"
#include "abperfect/pattern.hpp"
#include "abperfect/solvers.hpp"
#include "abperfect/theorems.hpp"

namespace abperfect::cli {

enum class Format { text, csv, json };

struct ParamsRecord {
    int line = 0;
    std::string graph6;
    int order = 0;
    std::optional<ParameterProfile> profile;
    std::string error;
};

struct ObstructionRecord {
    std::string name;
    std::string graph6;
    int order = 0;
    int a_value = 0;
    int b_value = 0;
};

void render_params(std::ostream& out, Format f, const std::vector<ParamsRecord>& records);
void render_enumeration(std::ostream& out, Format f, int n, const std::vector<Graph>& graphs);
void render_reports(std::ostream& out, Format f, const std::string& tier, const std::vector<TheoremReport>& reports);
void render_obstructions(std::ostream& out, Format f, Param a, Param b, int max_order, const std::string& catalog_hash,
                         const std::vector<ObstructionRecord>& records);

} // namespace abperfect::cli
