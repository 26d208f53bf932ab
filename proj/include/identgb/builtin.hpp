#ifndef IDENTGB_BUILTIN_HPP
#define IDENTGB_BUILTIN_HPP

#include "identgb/model.hpp"

#include <string>
#include <vector>

namespace identgb {

/// Names of all bundled models, light tier first.
std::vector<std::string> builtin_model_names();

/// Models exercised by the default benchmark suite.
std::vector<std::string> light_tier_names();

bool is_builtin_model(const std::string& name);

/// Parse-on-demand lookup; throws parse_error for unknown names.
Model builtin_model(const std::string& name);

std::vector<Model> builtin_models();

/// DSL source of a bundled model (useful for round-trip tests and `parse`).
const std::string& builtin_model_text(const std::string& name);

/// The bundled raw polynomial benchmark (three generators in x1..x8),
/// rendered in the system text format.
std::string jason210_system_text();

} // namespace identgb

#endif
