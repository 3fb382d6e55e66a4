#pragma once

#include <string>

#include "orbcat/fincat.hpp"

namespace orbcat {

/// Graphviz export: one node per object (labeled by payload), one edge per
/// non-identity morphism.
std::string to_dot(const FinCategory& c, const std::string& name = "category");

}  // namespace orbcat
