#pragma once

#include "json.hpp"

#include "gocohom/cohomring.hpp"

namespace gocohom {

nlohmann::json ring_to_json(const GradedRing& ring);
RingPtr ring_from_json(const nlohmann::json& j);

// {"ring": [[name, degree], ...], "terms": [[e1, ..., ek], ...]} with the
// exponent vectors in canonical order.
nlohmann::json poly_to_json(const Poly2& p);
Poly2 poly_from_json(const nlohmann::json& j);

// {"n": n, "p": <poly>, "q": <poly>}
nlohmann::json elem_to_json(const CohomElem& x);
CohomElem elem_from_json(const nlohmann::json& j);

// [{"label": ..., "element": ...}, ...]
nlohmann::json basis_to_json(const std::vector<LabeledElem>& basis);
std::vector<LabeledElem> basis_from_json(const nlohmann::json& j);

// Per-degree records {"d", "dim_lhs", "dim_rhs", "ok"} for both presentations.
nlohmann::json presentation_report_to_json(const PresentationReport& report);

}  // namespace gocohom
