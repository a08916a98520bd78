#ifndef LIE2_IO_HPP
#define LIE2_IO_HPP

#include "lie2/extension.hpp"

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace lie2 {

using Json = nlohmann::ordered_json;

/// Shared JSON schema. Rationals are strings "p/q" (or "p"), indices are
/// 0-based, tensors are sparse coordinate lists with antisymmetric closure
/// applied on load and re-validated. Writers emit canonical entries
/// (ascending independent indices, zeros dropped) so load -> save -> load is
/// the identity byte for byte.
Json algebra_to_json(const Lie2Algebra& L);
Lie2Algebra algebra_from_json(const Json& j);

Json lie3_to_json(const Lie3Algebra& T);
Lie3Algebra lie3_from_json(const Json& j);

Json derivation_to_json(const Derivation0& c);
Derivation0 derivation_from_json(const Json& j, int n0, int n1);

struct MorphismDoc {
    Lie2Algebra g, h;
    MorphismToDer3 f;
};
Json morphism_doc_to_json(const MorphismDoc& doc);
MorphismDoc morphism_doc_from_json(const Json& j);

Json extension_to_json(const Extension& E);
Extension extension_from_json(const Json& j);

Json splitting_to_json(const Splitting& s);
Splitting splitting_from_json(const Json& j, const Extension& E);

Json witness_to_json(const EquivalenceWitness& w);
EquivalenceWitness witness_from_json(const Json& j, const Lie2Algebra& g, const Lie2Algebra& h);

Json iso_to_json(const ExtensionIso& F);
ExtensionIso iso_from_json(const Json& j, const Extension& E);

/// Equivalence job: two morphisms over shared (g, h), optional witness.
struct EquivJob {
    Lie2Algebra g, h;
    MorphismToDer3 f, fprime;
    std::optional<EquivalenceWitness> witness;
};
Json equiv_job_to_json(const EquivJob& job);
EquivJob equiv_job_from_json(const Json& j);

Json report_to_json(const AxiomReport& rep);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace lie2

#endif
