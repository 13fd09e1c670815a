#ifndef GF2COH_REPORT_HPP
#define GF2COH_REPORT_HPP

#include <string>

#include <json.hpp>

#include "gf2coh/cohomology.hpp"
#include "gf2coh/exterior.hpp"

namespace gf2coh {

inline constexpr const char* kToolName = "gf2coh";
inline constexpr const char* kToolVersion = "0.1.0";

/// A form as a JSON array of monomials; a monomial is an array of indices.
nlohmann::ordered_json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

nlohmann::ordered_json betti_report_to_json(const BettiReport& report);

/// Shell of every report payload: tool, version, algebra, command, then the
/// command-specific fields the caller adds. Field order is fixed so that
/// identical invocations produce byte-identical output.
nlohmann::ordered_json report_shell(const std::string& algebra, const std::string& command);

} // namespace gf2coh

#endif
