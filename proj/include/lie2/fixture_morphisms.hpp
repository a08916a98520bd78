#ifndef LIE2_FIXTURE_MORPHISMS_HPP
#define LIE2_FIXTURE_MORPHISMS_HPP

#include "lie2/morphism.hpp"

namespace lie2 {

/// A named morphism g -> DER(h) together with its source and coefficient
/// algebras; the extension fixtures of the test corpus are built from these.
struct MorphismFixture {
    Lie2Algebra g, h;
    MorphismToDer3 f;
};

/// Names: DIRECT_SL2_AFF1 (zero morphism, direct product),
/// SEMIDIRECT_AFF1 (character action of aff(1) on a 1-dim abelian h),
/// CURATED_OMEGA_THETA (non-strict: omega and theta nonzero, found by a
/// linear solve), PLANTED_PHI (nonzero off-block differential),
/// DID_PAIR (nonzero mu1, phi and nu on g = h = D_ID).
MorphismFixture morphism_fixture(const std::string& name);
std::vector<std::string> morphism_fixture_names();

} // namespace lie2

#endif
