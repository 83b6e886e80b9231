#pragma once

// Serialization of verification reports. Every integer is written as a
// decimal string; bicomplex values are {"re","i","j","k"} objects.

#include <ostream>
#include <string>

#include "json.hpp"

#include "bcfib/identity_engine.hpp"

namespace bcfib {

nlohmann::json to_json(const BicomplexZ& v);
nlohmann::json to_json(const ReportEntry& entry);
nlohmann::json to_json(const VerificationReport& report);

/// Human-readable report, one block per claim.
void write_text(std::ostream& os, const VerificationReport& report);
void write_text(std::ostream& os, const ReportEntry& entry);

std::string format_bindings(const Bindings& b);

}  // namespace bcfib
