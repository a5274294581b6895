#ifndef SYMREL_INTERP_HPP
#define SYMREL_INTERP_HPP

#include <utility>
#include <vector>

#include "symrel/relations.hpp"
#include "symrel/symfun.hpp"

namespace symrel {

// Univariate polynomial over F_q of degree < q, constant coefficient first.
struct UnaryPoly {
    const Field* field = nullptr;
    std::vector<elem_index> coeffs;

    FieldElement eval(FieldElement x) const;
};

// h_a with h_a(a) = 1 and h_a(b) = 0 for b != a; degree q-1.
UnaryPoly lagrange_unary(const Field& f, FieldElement a);

// Interpolating polynomial H with gamma_eval(H, a) = f(a) on all of F_q^n
// and every exponent < q. Symmetric tables are orbit-expanded first.
XPoly interpolate(const FunctionTable& f);

// Maximal term under the graded lexicographic order. H must be nonzero.
std::pair<FieldElement, ExponentTuple> leading_monomial(const XPoly& H);

// Rewrites a symmetric X-polynomial as a polynomial in the elementary
// symmetric polynomials by repeated leading-term subtraction. Checks
// symmetry against the generating transposition and n-cycle; the leading
// term strictly decreases each round.
EPoly to_elementary(const XPoly& H);

// to_elementary(interpolate(f)); with a basis, the canonical (pivot-
// supported) representative instead.
EPoly interpolate_symmetric(const FunctionTable& f, const RelationBasis* basis = nullptr);

} // namespace symrel

#endif
