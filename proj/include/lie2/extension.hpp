#ifndef LIE2_EXTENSION_HPP
#define LIE2_EXTENSION_HPP

#include "lie2/morphism.hpp"

namespace lie2 {

/// A non-abelian extension h -> ghat -> g in block form: the underlying
/// spaces of ghat are g0 + h0 and g1 + h1 with the g-basis first, i the
/// block inclusion of h and p the block projection onto g.
struct Extension {
    Lie2Algebra g, h, ghat;

    int off0() const { return g.n0; } // h-block offset in degree 0
    int off1() const { return g.n1; }

    Matrix incl0() const; // ghat0 x h0
    Matrix incl1() const;
    Matrix proj0() const; // g0 x ghat0
    Matrix proj1() const;
};

struct Splitting {
    Matrix s0; // ghat0 x g0
    Matrix s1; // ghat1 x g1
};

/// The block inclusion of g; always a valid splitting.
Splitting canonical_splitting(const Extension& E);

/// p o s = id on both degrees; throws StructuralError otherwise.
void validate_splitting(const Extension& E, const Splitting& s);

/// The seven maps measured by a splitting: phi(a) = d^ sigma(a) - sigma(d a),
/// mu0(x) = [sigma(x), .]|_h together with l3^(sigma x, ., .)|_h, and so on.
struct InducedData {
    Matrix phi;                            // h0 x g1
    std::vector<Derivation0> mu0;          // per g0-basis, derivations of h
    std::vector<Matrix> mu1;               // per g1-basis, h1 x h0
    std::vector<std::vector<Matrix>> mu2;  // antisym grid of h1 x h0
    Tensor3 omega;                         // g0, g0, h0 (antisym)
    Tensor3 nu;                            // g0, g1, h1
    Tensor4 theta;                         // g0, g0, g0, h1 (antisym)
};

/// Block-form extension checks: ghat axioms, strictness of i and p, and the
/// exactness bookkeeping (automatic in block form, verified structurally).
AxiomReport check_extension(const Extension& E);

InducedData induced_data(const Extension& E, const Splitting& s);

/// Packages induced data as (mu0, mu1 - phi, -mu2 + omega, nu, theta).
MorphismToDer3 morphism_from_splitting(const Extension& E, const Splitting& s);

/// Witness (s0 - s0', s1 - s1', 0) making the s'-morphism equivalent to the
/// s-morphism.
EquivalenceWitness splitting_difference_witness(const Extension& E, const Splitting& s,
                                                const Splitting& sprime);

/// Transfers the structure of DER(h) data back to g + h. The morphism is
/// verified first; PreconditionError when it fails.
Extension extension_from_morphism(const Lie2Algebra& g, const Lie2Algebra& h,
                                  const MorphismToDer3& f);

/// Isomorphism of block-form extensions over fixed g and h. F2 takes values
/// in h1 (forced by the triviality condition F2(i(u), .) = 0).
struct ExtensionIso {
    Matrix f0;  // ghat0 x ghat0
    Matrix f1;  // ghat1 x ghat1
    Tensor3 f2; // ghat0, ghat0, h1 (antisym)
};

/// F o i = j, q o F = p, F2(i(u), .) = 0, plus the Lie 2-morphism equations.
AxiomReport check_extension_iso(const Extension& E, const Extension& Eprime,
                                const ExtensionIso& F);

/// Reads the witness off an extension isomorphism: b0 and b1 are the h-parts
/// of F(s(.)) - s'(.), b2(x, y) = F2(s x, s y).
EquivalenceWitness iso_to_witness(const Extension& E, const Extension& Eprime,
                                  const ExtensionIso& F, const Splitting& s,
                                  const Splitting& sprime);

struct IsoTriple {
    Extension e, eprime;
    ExtensionIso iso;
};

/// Builds E(f), E(f'), and F0(x+u) = x + b0(x) + u, F1(a+m) = a + b1(a) + m,
/// F2(x+u, y+v) = b2(x, y). The witness is verified first; PreconditionError
/// when it fails.
IsoTriple witness_to_iso(const Lie2Algebra& g, const Lie2Algebra& h, const MorphismToDer3& f,
                         const MorphismToDer3& fprime, const EquivalenceWitness& w);

} // namespace lie2

#endif
