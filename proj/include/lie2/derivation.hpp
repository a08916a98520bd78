#ifndef LIE2_DERIVATION_HPP
#define LIE2_DERIVATION_HPP

#include "lie2/algebra.hpp"

#include <variant>

namespace lie2 {

/// A degree-0 derivation candidate (X, l_X) of a Lie 2-algebra: a chain
/// endomorphism X = (x0, x1) with X0 d = d X1 and a correction
/// l_X : g0 ^ g0 -> g1.
struct Derivation0 {
    Matrix x0;  // n0 x n0
    Matrix x1;  // n1 x n1
    Tensor3 lx; // n0, n0, n1 (antisym in the first two slots)

    static Derivation0 zero(int n0, int n1);
    bool is_zero() const { return x0.is_zero() && x1.is_zero() && lx.is_zero(); }

    friend Derivation0 operator+(const Derivation0& a, const Derivation0& b);
    friend Derivation0 operator-(const Derivation0& a, const Derivation0& b);
    friend Derivation0 operator*(const Rational& c, const Derivation0& a);
    friend bool operator==(const Derivation0& a, const Derivation0& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.lx == b.lx;
    }
};

/// A degree-1 element of DER(g): a pair (D, x) in Hom(g0, g1) + g0.
/// Elements of Der^1(g) alone embed as (D, 0), elements of g0 as (0, x).
struct DerDegree1 {
    Matrix d; // n1 x n0
    Vec x;    // g0 coordinates

    static DerDegree1 zero(int n0, int n1);
    bool is_zero() const { return d.is_zero() && is_zero_vec(x); }

    friend DerDegree1 operator+(const DerDegree1& a, const DerDegree1& b);
    friend DerDegree1 operator-(const DerDegree1& a, const DerDegree1& b);
    friend DerDegree1 operator*(const Rational& c, const DerDegree1& a);
    friend bool operator==(const DerDegree1& a, const DerDegree1& b) {
        return a.d == b.d && a.x == b.x;
    }
};

/// Graded element of DER(g): degree 0, 1 or 2 by variant index.
using Der3Element = std::variant<Derivation0, DerDegree1, Vec>;

inline int der3_degree(const Der3Element& e) { return static_cast<int>(e.index()); }

/// Flattened coordinates of a derivation: X0 row-major, X1 row-major, then
/// l_X entries for index pairs i < j. Length n0^2 + n1^2 + C(n0,2) n1.
int derivation_flat_dim(int n0, int n1);
Vec flatten_derivation(const Derivation0& c);
Derivation0 unflatten_derivation(int n0, int n1, const Vec& v);

/// Exhaustively verifies membership X0 d = d X1 and the three derivation
/// conditions. Check names: end0_membership, deriv_a, deriv_b, deriv_c.
AxiomReport derivation_check(const Lie2Algebra& L, const Derivation0& cand);

/// Normalized basis of Der^0(L): the reduced kernel basis of the stacked
/// linear system (membership + conditions (a), (b), (c)), unflattened.
/// Deterministic for a given algebra.
std::vector<Derivation0> derivation_space(const Lie2Algebra& L);

/// (ad_x, l3(x, ., .)) — always a derivation of a verified algebra.
Derivation0 inner_derivation(const Lie2Algebra& L, const Vec& x);

/// Bracket of derivations: commutators plus
///   l_[X,Y](x,y) = l_X(Yx,y) + l_X(x,Yy) - l_Y(Xx,y) - l_Y(x,Xy)
///                  + X l_Y(x,y) - Y l_X(x,y).
/// Both inputs must pass derivation_check; PreconditionError otherwise.
Derivation0 der_bracket(const Lie2Algebra& L, const Derivation0& a, const Derivation0& b);

/// delta_bar(D) = ((d D, D d), l_{delta(D)}) with
///   l_{delta(D)}(x,y) = D[x,y] - [x, Dy] - [Dx, y].
Derivation0 delta_bar(const Lie2Algebra& L, const Matrix& D);

/// Structure constants of the strict Lie 2-algebra Der(g):
/// degree 0 = derivation_space(L), degree 1 = all of Hom(g0, g1),
/// differential delta_bar, brackets [.,.]_Der, l3 = 0.
Lie2Algebra build_der2(const Lie2Algebra& L);

/// DER(g) differential. Degree 2: a -> (ad_a, -d a). Degree 1:
/// (D, x) -> delta_bar(D) + inner_derivation(x). Degree 0 input is a domain
/// error (no lower degree).
Der3Element der3_d(const Lie2Algebra& L, const Der3Element& e);

/// DER(g) graded bracket, the four-case formula. Degree sums above 2 return
/// the zero degree-2 element (the target space is absent), never an error.
Der3Element der3_bracket(const Lie2Algebra& L, const Der3Element& a, const Der3Element& b);

/// Structure constants of the derivation Lie 3-algebra
/// DER(g): g1 -> Hom(g0,g1) + g0 -> Der^0(g), degree-1 basis ordered Hom
/// part first (hom_index) then g0 part.
Lie3Algebra build_der3(const Lie2Algebra& L);

namespace detail {

/// Unchecked bracket (no derivation_check on the inputs).
Derivation0 der_bracket_raw(const Lie2Algebra& L, const Derivation0& a, const Derivation0& b);

// Typed DER(g) operations used by the morphism verifiers.
Derivation0 der3_d1(const Lie2Algebra& L, const DerDegree1& e); // differential on degree 1
DerDegree1 der3_d2(const Lie2Algebra& L, const Vec& a);         // differential on degree 2
DerDegree1 der3_br_01(const Lie2Algebra& L, const Derivation0& X, const DerDegree1& e);
Vec der3_br_02(const Derivation0& X, const Vec& a);
Vec der3_br_11(const DerDegree1& a, const DerDegree1& b);

/// Derivation basis with flattened columns, for coordinate computations.
struct DerSpace {
    std::vector<Derivation0> basis;
    std::vector<Vec> flat;
};
DerSpace derivation_space_flat(const Lie2Algebra& L);

/// Coordinates of a derivation in the normalized basis; PreconditionError if
/// it is not in the span (the algebra was probably never verified).
Vec derivation_coords(const DerSpace& sp, const Derivation0& c);

} // namespace detail

} // namespace lie2

#endif
