#include "lie2/report.hpp"

namespace lie2 {

AxiomResult& AxiomReport::slot(const std::string& name, bool precondition) {
    for (auto& r : results_)
        if (r.name == name)
            return r;
    results_.push_back(AxiomResult{name, true, precondition, 0, std::nullopt});
    return results_.back();
}

void AxiomReport::record(const std::string& name, std::vector<int> tuple, Vec residual,
                         bool precondition) {
    AxiomResult& r = slot(name, precondition);
    ++r.cases;
    if (r.passed && !is_zero_vec(residual)) {
        r.passed = false;
        r.witness = AxiomViolation{std::move(tuple), std::move(residual)};
    }
}

void AxiomReport::ensure(const std::string& name) { slot(name, false); }

void AxiomReport::add_result(AxiomResult r) { results_.push_back(std::move(r)); }

bool AxiomReport::ok() const {
    for (const auto& r : results_)
        if (!r.passed)
            return false;
    return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
    for (const auto& r : results_)
        if (r.name == name)
            return &r;
    return nullptr;
}

std::string AxiomReport::summary() const {
    long pass = 0;
    for (const auto& r : results_)
        if (r.passed)
            ++pass;
    return std::to_string(pass) + "/" + std::to_string(results_.size()) + " checks pass";
}

} // namespace lie2
