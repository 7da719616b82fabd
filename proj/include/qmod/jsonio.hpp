#pragma once

#include <optional>
#include <utility>

#include "json.hpp"
#include "qmod/forms.hpp"
#include "qmod/irreps.hpp"

namespace qmod {

// JSON formats.  All writers are deterministic (sorted keys, fixed layout);
// every format round-trips through its reader bit-exactly on normal forms.

nlohmann::json presentation_to_json(const ModulePresentation& pres);
ModulePresentation presentation_from_json(const nlohmann::json& j);

// A certificate file: the presentation it lives over, the terms, and a
// claim, either plain membership (target) or a seminorm bound
// (element, bound) meaning value = bound^2 - element element*.
struct CertificateFile {
  ModulePresentation pres;
  Certificate cert;
  std::optional<StarElement> target;
  std::optional<std::pair<StarElement, Rational>> norm_claim;
};

nlohmann::json certificate_to_json(const CertificateFile& cf);
CertificateFile certificate_from_json(const nlohmann::json& j);

nlohmann::json irreps_to_json(const IrrepSet& s);

nlohmann::json form_to_json(const PositiveForm& f);
PositiveForm form_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AuditReport& rep);
nlohmann::json norm_to_json(const StarElement& a, const NormEstimate& est);

}  // namespace qmod
