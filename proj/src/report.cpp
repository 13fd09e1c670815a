#include "gf2coh/report.hpp"

#include <stdexcept>

namespace gf2coh {

nlohmann::ordered_json form_to_json(const Form& f) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& m : f.monomials()) out.push_back(m.indices);
    return out;
}

Form form_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("form_from_json: expected an array of monomials");
    std::vector<Monomial> monos;
    for (const auto& entry : j) {
        if (!entry.is_array()) throw std::invalid_argument("form_from_json: monomial must be an array");
        monos.push_back(Monomial{entry.get<std::vector<int>>()});
    }
    return Form(std::move(monos));
}

nlohmann::ordered_json betti_report_to_json(const BettiReport& report) {
    nlohmann::ordered_json out;
    out["q"] = report.q;
    if (report.degree) out["degree"] = *report.degree;
    out["dim_ker"] = report.dim_ker;
    out["dim_im_prev"] = report.dim_im_prev;
    out["betti"] = report.betti;
    if (report.representatives) {
        nlohmann::ordered_json reps = nlohmann::ordered_json::array();
        for (const auto& f : *report.representatives) {
            nlohmann::ordered_json rep;
            rep["text"] = to_string(f);
            rep["monomials"] = form_to_json(f);
            reps.push_back(std::move(rep));
        }
        out["representatives"] = std::move(reps);
    }
    return out;
}

nlohmann::ordered_json report_shell(const std::string& algebra, const std::string& command) {
    nlohmann::ordered_json out;
    out["tool"] = kToolName;
    out["version"] = kToolVersion;
    out["algebra"] = algebra;
    out["command"] = command;
    return out;
}

} // namespace gf2coh
