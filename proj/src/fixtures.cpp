#include "lie2/algebra.hpp"

#include <cstdio>

namespace lie2 {

Lie2Algebra fixture_a_ab(int n0, int n1) {
    if (n0 < 0 || n1 < 0)
        throw StructuralError("A_ab: dimensions must be nonnegative");
    return Lie2Algebra::zero(n0, n1);
}

// 0 -> aff(1), basis e1, e2 with [e1, e2] = e2.
Lie2Algebra fixture_aff1() {
    Lie2Algebra L = Lie2Algebra::zero(2, 0);
    L.b00.set_antisym01(0, 1, Vec{Rational(0), Rational(1)});
    return L;
}

// Skeletal sl2: d = 0, basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h,
// trivial action on g1 = Q, and l3(x,y,z) = kappa(x,[y,z]) the Cartan 3-cocycle.
// kappa(h,h) = 8, kappa(e,f) = 4 in this basis, so l3(h,e,f) = 8.
Lie2Algebra fixture_sl2_skel() {
    Lie2Algebra L = Lie2Algebra::zero(3, 1);
    L.b00.set_antisym01(0, 1, Vec{Rational(0), Rational(2), Rational(0)});
    L.b00.set_antisym01(0, 2, Vec{Rational(0), Rational(0), Rational(-2)});
    L.b00.set_antisym01(1, 2, Vec{Rational(1), Rational(0), Rational(0)});
    L.l3.set_antisym012(0, 1, 2, Vec{Rational(8)});
    return L;
}

Lie2Algebra fixture_d_id() {
    Lie2Algebra L = Lie2Algebra::zero(1, 1);
    L.d.at(0, 0) = Rational(1);
    return L;
}

Lie2Algebra fixtures(const std::string& name) {
    if (name == "AFF1")
        return fixture_aff1();
    if (name == "SL2_SKEL")
        return fixture_sl2_skel();
    if (name == "D_ID")
        return fixture_d_id();
    int n0 = -1, n1 = -1;
    char tail = 0;
    if (std::sscanf(name.c_str(), "A_ab(%d,%d%c", &n0, &n1, &tail) == 3 && tail == ')' &&
        n0 >= 0 && n1 >= 0)
        return fixture_a_ab(n0, n1);
    throw StructuralError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"A_ab(2,1)", "AFF1", "SL2_SKEL", "D_ID"};
}

} // namespace lie2
