#ifndef LIE2_ALGEBRA_HPP
#define LIE2_ALGEBRA_HPP

#include "lie2/linsolve.hpp"
#include "lie2/report.hpp"
#include "lie2/tensor.hpp"

#include <optional>
#include <string>
#include <utility>

namespace lie2 {

/// A Lie 2-algebra as structure constants over Q: the 2-term complex
/// g1 --d--> g0 with bracket tensors and the Jacobiator l3.
///
/// Storage conventions:
///   b00[i][j][.] = l2(x_i, x_j) in g0, antisymmetric in (i, j);
///   b01[i][p][.] = l2(x_i, a_p) in g1 (degree-0 argument first; the other
///                  order is -l2(x_i, a_p));
///   l3[i][j][k][.] = l3(x_i, x_j, x_k) in g1, totally antisymmetric;
///   l2 on two degree-1 arguments vanishes for degree reasons and is not stored.
struct Lie2Algebra {
    int n0 = 0, n1 = 0;
    Matrix d;    // n0 x n1
    Tensor3 b00; // n0, n0, n0
    Tensor3 b01; // n0, n1, n1
    Tensor4 l3;  // n0, n0, n0, n1

    static Lie2Algebra zero(int n0, int n1);

    Vec l2_00(const Vec& x, const Vec& y) const { return b00.contract(x, y); }
    Vec l2_01(const Vec& x, const Vec& a) const { return b01.contract(x, a); }
    Vec l3e(const Vec& x, const Vec& y, const Vec& z) const { return l3.contract(x, y, z); }
    Vec dmap(const Vec& a) const { return d.apply(a); }

    Matrix ad0(const Vec& x) const { return b00.map_of(x); } // [x,.] on g0
    Matrix ad1(const Vec& x) const { return b01.map_of(x); } // [x,.] on g1

    Vec unit0(int i) const { return unit_vec(n0, i); }
    Vec unit1(int p) const { return unit_vec(n1, p); }
};

/// Shape and antisymmetry validation; throws StructuralError.
void validate_structure(const Lie2Algebra& L);

/// Exhaustive check of the five defining identities on all basis tuples.
/// Axiom names: chain_mixed, chain_deg1, jacobi, mixed_jacobi, jacobiator.
AxiomReport check_lie2_axioms(const Lie2Algebra& L);

/// A strict Lie 3-algebra as structure constants: L2 --l1--> L1 --l1--> L0
/// with the graded degree-0 bracket. c11 is symmetric (odd-odd bracket);
/// brackets on degree pairs (1,2) and (2,2) vanish and are not stored.
struct Lie3Algebra {
    int m0 = 0, m1 = 0, m2 = 0;
    Matrix l1_10; // m0 x m1
    Matrix l1_21; // m1 x m2
    Tensor3 c00;  // m0, m0, m0  (antisym)
    Tensor3 c01;  // m0, m1, m1
    Tensor3 c02;  // m0, m2, m2
    Tensor3 c11;  // m1, m1, m2  (symmetric)

    static Lie3Algebra zero(int m0, int m1, int m2);

    int dim(int degree) const;
};

void validate_structure(const Lie3Algebra& T);

/// Homogeneous element of a graded algebra: degree plus coordinates in the
/// basis of that component.
struct GradedElement {
    int degree = 0; // 0, 1 or 2
    Vec coords;
};

/// Coordinates must match the component dimension; throws StructuralError.
void validate_element(const Lie3Algebra& T, const GradedElement& e);

/// Graded bracket of coordinate vectors of the given degrees. Returns the
/// target degree and coordinates; nullopt when the target degree exceeds 2.
/// Argument order is normalized with the sign rule l2(a,b) = -(-1)^{|a||b|} l2(b,a).
std::optional<std::pair<int, Vec>> l2_graded(const Lie3Algebra& T, int dega, const Vec& a,
                                             int degb, const Vec& b);
std::optional<GradedElement> l2_graded(const Lie3Algebra& T, const GradedElement& a,
                                       const GradedElement& b);

/// Checks l1^2 = 0, the l1 Leibniz rule over mixed-degree pairs, and the
/// graded Jacobi identity over degree combinations of total degree <= 2.
AxiomReport check_lie3_axioms(const Lie3Algebra& T);

/// The strict Lie 2-algebra End(V) of a 2-term complex V1 --d--> V0:
/// degree 0 is End^0_d = {(X0, X1) : X0 d = d X1}, degree 1 is Hom(V0, V1),
/// differential delta(D) = (d D, D d), brackets the graded commutators.
struct EndLie2 {
    Lie2Algebra algebra;
    /// Columns are the End^0 basis, flattened as (X0 row-major, X1 row-major).
    Matrix basis0;
};

EndLie2 end_complex_lie2(int n0, int n1, const Matrix& d);

/// Hom(V0, V1) flattening used for all degree-1 bases: index p*n0 + q is the
/// matrix unit taking x_q to a_p.
int hom_index(int n0, int p, int q);
Vec flatten_hom(const Matrix& m);            // (n1 x n0) -> n0*n1 vector
Matrix unflatten_hom(int n0, int n1, const Vec& v);

// Named test-corpus algebras.
Lie2Algebra fixture_a_ab(int n0, int n1);
Lie2Algebra fixture_aff1();
Lie2Algebra fixture_sl2_skel();
Lie2Algebra fixture_d_id();

/// Lookup by name: "A_ab(n0,n1)", "AFF1", "SL2_SKEL", "D_ID".
/// Unknown names raise StructuralError.
Lie2Algebra fixtures(const std::string& name);
std::vector<std::string> fixture_names();

} // namespace lie2

#endif
