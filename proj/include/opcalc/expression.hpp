#pragma once

#include <string>
#include <vector>

#include "opcalc/functors.hpp"

namespace opcalc {

// SPEC := zoo key | mag literal | file path | "(" VERB ARGS ")"
// VERB := black F SPEC | white F SPEC | dual SPEC | sum SPEC SPEC
//       | prod SPEC SPEC | adm SPEC | opp SPEC | show KEY | parse FILE
std::vector<std::string> tokenize_spec(const std::string& text);

// Evaluates "VERB ARGS" (no outer parentheses) or a single SPEC.
OperadPresentation evaluate_spec(const std::string& text);
OperadPresentation evaluate_expression(const std::vector<std::string>& tokens);

OperadPresentation load_file(const std::string& path);

Family parse_black_family(const std::string& s);
Family parse_white_family(const std::string& s);

}  // namespace opcalc
