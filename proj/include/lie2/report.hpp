#ifndef LIE2_REPORT_HPP
#define LIE2_REPORT_HPP

#include "lie2/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lie2 {

/// First failing case of one check: the basis tuple and its exact residual.
struct AxiomViolation {
    std::vector<int> tuple;
    Vec residual;
};

struct AxiomResult {
    std::string name;
    bool passed = true;
    bool precondition = false; // distinguishes precondition checks from equation checks
    long cases = 0;
    std::optional<AxiomViolation> witness;
};

/// Outcome of an exhaustive verifier run: one entry per axiom/equation,
/// residuals kept as exact rationals (never booleans alone).
class AxiomReport {
  public:
    void record(const std::string& name, std::vector<int> tuple, Vec residual,
                bool precondition = false);
    /// Registers a check as present (and passed) even when it has no cases,
    /// so vacuous axioms still show up in reports.
    void ensure(const std::string& name);
    /// Adds an already-passed or already-failed check wholesale (used when a
    /// sub-report is folded in under one name).
    void add_result(AxiomResult r);

    bool ok() const;
    const std::vector<AxiomResult>& results() const { return results_; }
    const AxiomResult* find(const std::string& name) const;
    std::string summary() const; // e.g. "5/5 axioms pass"

  private:
    AxiomResult& slot(const std::string& name, bool precondition);
    std::vector<AxiomResult> results_;
};

} // namespace lie2

#endif
