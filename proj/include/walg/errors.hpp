#pragma once

#include <stdexcept>
#include <string>

namespace walg {

// All domain failures derive from one base so suites can catch and report
// them uniformly. Each carries a human-readable witness in what().
struct WalgError : std::runtime_error {
  explicit WalgError(const std::string& m) : std::runtime_error(m) {}
};

struct NonLoweringRelation : WalgError { using WalgError::WalgError; };
struct NonTerminating : WalgError { using WalgError::WalgError; };
struct UnknownGenerator : WalgError { using WalgError::WalgError; };
struct BadExponent : WalgError { using WalgError::WalgError; };
struct NotNilpotent : WalgError { using WalgError::WalgError; };
struct JacobiViolation : WalgError { using WalgError::WalgError; };
struct EquivarianceViolation : WalgError { using WalgError::WalgError; };
struct RelationDefect : WalgError { using WalgError::WalgError; };
struct NotInvertibleImage : WalgError { using WalgError::WalgError; };
struct OrderBoundExceeded : WalgError { using WalgError::WalgError; };
struct NonSemisimpleH : WalgError { using WalgError::WalgError; };
struct NotExpressible : WalgError { using WalgError::WalgError; };
struct DoesNotFixE : WalgError { using WalgError::WalgError; };
struct DegreeTooLowForC : WalgError { using WalgError::WalgError; };
struct NotMinimalOrbit : WalgError { using WalgError::WalgError; };
struct UnknownSuite : WalgError { using WalgError::WalgError; };
struct ConfigError : WalgError { using WalgError::WalgError; };
struct ParseError : WalgError { using WalgError::WalgError; };

}  // namespace walg
