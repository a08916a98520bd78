#ifndef LIE2_MORPHISM_HPP
#define LIE2_MORPHISM_HPP

#include "lie2/derivation.hpp"

namespace lie2 {

/// Morphism of Lie 2-algebras (f0, f1, f2) with f2 : L0 ^ L0 -> L1'.
struct Lie2Morphism {
    Matrix f0;  // n0' x n0
    Matrix f1;  // n1' x n1
    Tensor3 f2; // n0, n0, n1'  (antisym in the first two slots)

    static Lie2Morphism identity(const Lie2Algebra& L);
    static Lie2Morphism zero(const Lie2Algebra& src, const Lie2Algebra& dst);
};

/// The four defining equations on all basis tuples.
/// Check names: chain, bracket0, bracket1, coherence.
AxiomReport check_lie2_morphism(const Lie2Algebra& src, const Lie2Algebra& dst,
                                const Lie2Morphism& f);

/// Morphism from a Lie 2-algebra g to the derivation Lie 3-algebra DER(h),
/// stored against the concrete graded pieces of DER(h):
///   f0  : per g0-basis, a derivation of h;
///   f1  : per g1-basis, a pair (D, u) in Hom(h0,h1) + h0;
///   f2_0: antisymmetric g0 x g0 grid of such pairs;
///   f2_1: g0 x g1 -> h1 (no symmetry; the opposite order is -f2_1);
///   f3  : antisymmetric trilinear g0^3 -> h1.
struct MorphismToDer3 {
    int hn0 = 0, hn1 = 0; // dimensions of h, kept for empty-basis evaluation
    std::vector<Derivation0> f0;
    std::vector<DerDegree1> f1;
    std::vector<std::vector<DerDegree1>> f2_0;
    Tensor3 f2_1; // g.n0, g.n1, h.n1
    Tensor4 f3;   // g.n0, g.n0, g.n0, h.n1

    static MorphismToDer3 zero(const Lie2Algebra& g, const Lie2Algebra& h);

    Derivation0 f0_eval(const Vec& x) const;
    DerDegree1 f1_eval(const Vec& a) const;
    DerDegree1 f2_0_eval(const Vec& x, const Vec& y) const;

    friend bool operator==(const MorphismToDer3& a, const MorphismToDer3& b);
};

/// Verifies the seven equations of a morphism into DER(h) on all basis
/// tuples, plus the membership of every f0 image in Der^0(h).
/// Check names: f0_derivation, m1_chain, m2_bracket0, m3_bracket1,
/// m4_odd_pair, m5_jacobi, m6_mixed, m7_jacobiator.
AxiomReport check_morphism_to_der3(const Lie2Algebra& g, const Lie2Algebra& h,
                                   const MorphismToDer3& f);

/// Witness (b0, b1, b2) for equivalence of two morphisms into DER(h).
struct EquivalenceWitness {
    Matrix b0;  // h.n0 x g.n0
    Matrix b1;  // h.n1 x g.n1
    Tensor3 b2; // g.n0, g.n0, h.n1  (antisym)

    static EquivalenceWitness zero(const Lie2Algebra& g, const Lie2Algebra& h);
};

/// Verifies the two chain-homotopy equations and the three correction
/// equations making fprime equivalent to f. Precondition checks (both inputs
/// are morphisms) appear in the report flagged as preconditions, distinct
/// from the equation checks e1_chain0 .. e5_f3.
AxiomReport check_equivalence_witness(const Lie2Algebra& g, const Lie2Algebra& h,
                                      const MorphismToDer3& f, const MorphismToDer3& fprime,
                                      const EquivalenceWitness& w);

struct RestrictedSolveInfo {
    std::optional<EquivalenceWitness> witness;
    int unknowns = 0;
    int rank_system = 0;    // rank of the coefficient matrix
    int rank_augmented = 0; // rank of [A | rhs]; solvable iff equal
};

/// Decision procedure for the restricted case: h has all brackets and l3
/// zero, and every l-component of fprime.f0 vanishes, so the witness
/// equations are affine-linear in (b0, b1, b2). UnsupportedError outside
/// this case. Returns nothing iff the system is unsolvable.
std::optional<EquivalenceWitness> solve_equivalence_restricted(const Lie2Algebra& g,
                                                               const Lie2Algebra& h,
                                                               const MorphismToDer3& f,
                                                               const MorphismToDer3& fprime);

/// Same solver, with the rank certificate for reporting.
RestrictedSolveInfo solve_equivalence_restricted_info(const Lie2Algebra& g,
                                                      const Lie2Algebra& h,
                                                      const MorphismToDer3& f,
                                                      const MorphismToDer3& fprime);

} // namespace lie2

#endif
