#pragma once

#include <map>
#include <string>

#include "bcfib/integer.hpp"

namespace bcfib {

/// Values for the index variables of an identity (n, m, r). Ordered by name.
using Bindings = std::map<std::string, Index>;

/// Throws UnboundVariable when `name` has no value.
Index lookup(const Bindings& b, const std::string& name);

}  // namespace bcfib
