#include "gocohom/serialize.hpp"

#include <stdexcept>

namespace gocohom {

using nlohmann::json;

json ring_to_json(const GradedRing& ring) {
    json vars = json::array();
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        vars.push_back(json::array({ring.name(i), ring.degree(i)}));
    return vars;
}

RingPtr ring_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("ring json must be an array");
    std::vector<std::pair<std::string, int>> vars;
    for (const json& v : j)
        vars.emplace_back(v.at(0).get<std::string>(), v.at(1).get<int>());
    return make_ring(std::move(vars));
}

json poly_to_json(const Poly2& p) {
    json terms = json::array();
    for (const Monomial& m : p.terms()) terms.push_back(m.exp);
    return json{{"ring", ring_to_json(*p.ring())}, {"terms", terms}};
}

Poly2 poly_from_json(const json& j) {
    RingPtr ring = ring_from_json(j.at("ring"));
    std::vector<Monomial> terms;
    for (const json& t : j.at("terms")) terms.push_back(Monomial{t.get<std::vector<int>>()});
    return Poly2::from_terms(std::move(ring), std::move(terms));
}

json elem_to_json(const CohomElem& x) {
    return json{{"n", x.n()}, {"p", poly_to_json(x.p())}, {"q", poly_to_json(x.q())}};
}

CohomElem elem_from_json(const json& j) {
    return CohomElem(j.at("n").get<int>(), poly_from_json(j.at("p")),
                     poly_from_json(j.at("q")));
}

json basis_to_json(const std::vector<LabeledElem>& basis) {
    json out = json::array();
    for (const LabeledElem& le : basis)
        out.push_back(json{{"label", le.label}, {"element", elem_to_json(le.elem)}});
    return out;
}

std::vector<LabeledElem> basis_from_json(const json& j) {
    std::vector<LabeledElem> out;
    for (const json& e : j)
        out.push_back({e.at("label").get<std::string>(), elem_from_json(e.at("element"))});
    return out;
}

static json records_to_json(const std::vector<DimRecord>& records) {
    json out = json::array();
    for (const DimRecord& r : records)
        out.push_back(json{{"d", r.d},
                           {"dim_lhs", r.dim_lhs},
                           {"dim_rhs", r.dim_rhs},
                           {"ok", r.ok}});
    return out;
}

json presentation_report_to_json(const PresentationReport& report) {
    return json{{"n", report.n},
                {"max_degree", report.max_degree},
                {"koszul", records_to_json(report.koszul)},
                {"cohomology", records_to_json(report.cohomology)},
                {"all_ok", report.all_ok}};
}

}  // namespace gocohom
