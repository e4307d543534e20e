#pragma once

#include <json.hpp>

#include "g2cal/catalog.hpp"
#include "g2cal/correspond.hpp"

namespace g2cal {

/// Key-ordered JSON so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
/// {"t^k": "p/q", ...}; a constant serializes as the bare string.
Json ring_json(const RingElement& r);
/// {"e12": <ring>, ...} in blade bit order.
Json form_json(const Form& f);

Json su3_report_json(const SU3TorsionReport& rep);
Json g2_report_json(const G2TorsionReport& rep);
Json correspondence_json(const CorrespondenceReport& rep);

/// CSV trajectory: header then one row per state with t, the omega and
/// psi+ coefficients in flow basis order, and the residual columns.
std::string flow_csv(const std::vector<FlowState>& states);

}  // namespace g2cal
