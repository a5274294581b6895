#ifndef SYMREL_RELATIONS_HPP
#define SYMREL_RELATIONS_HPP

#include <cstdint>
#include <vector>

#include "symrel/linalg.hpp"
#include "symrel/symfun.hpp"

namespace symrel {

// Default ceiling on materialized matrix entries. Overridable per call and,
// in the CLI, via --guard / SYMREL_GUARD.
inline constexpr std::uint64_t kDefaultScaleGuard = 10'000'000;

enum class VerifyMode { wm, full };

// The matrix M(q,n): rows indexed by WM(q,n) in ascending order, columns by
// Mon(q,n) in canonical column order, entry (i, m) = [Phi(m)](i). The
// elementary values of each row tuple are computed once.
FqMatrix build_matrix(const Field& f, unsigned n, std::uint64_t guard = kDefaultScaleGuard);

// Basis of the vector space I(q,n) of algebraic relations, in parameter
// order, together with the pivot/free column split of the eliminated matrix
// and the row-operation log needed to reduce values against it.
struct RelationBasis {
    const Field* field = nullptr;
    unsigned n = 0;
    std::vector<EPoly> basis;
    std::vector<std::uint32_t> pivot_columns; // original column indices, pivot order
    std::vector<std::uint32_t> free_columns;  // original column indices, parameter order
    std::uint32_t rank = 0;
    std::vector<GaussOp> oplog;
};

RelationBasis relation_basis(const Field& f, unsigned n, std::uint64_t guard = kDefaultScaleGuard);

// Does Phi(P) vanish? Mode wm checks the weakly monotone tuples (sufficient,
// Phi(P) being symmetric); mode full checks all q^n points.
bool verify_relation(const EPoly& P, VerifyMode mode);

// True iff every coefficient is fixed by the Frobenius automorphism.
bool coeffs_in_prime_field(const EPoly& P);

// The unique polynomial supported on pivot monomials whose Phi-image agrees
// with Phi(P); obtained by reducing the value vector of P on WM(q,n) with
// the stored row operations. Idempotent; P minus the result lies in I(q,n).
EPoly canonical_form(const EPoly& P, const RelationBasis& basis);

// Exact rank of M(q,n). Small instances eliminate the full matrix; large
// ones first eliminate a deterministic spread of columns, which certifies
// full row rank the moment the sample already attains it, and widen the
// sample otherwise.
std::uint64_t matrix_rank(const Field& f, unsigned n, std::uint64_t guard = kDefaultScaleGuard);

} // namespace symrel

#endif
