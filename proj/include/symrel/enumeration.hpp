#ifndef SYMREL_ENUMERATION_HPP
#define SYMREL_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "symrel/gf.hpp"

namespace symrel {

// Exponent tuple of a monomial E_1^a1 ... E_n^an (or X_1^a1 ... X_n^an);
// every exponent lies in [0, q).
using ExponentTuple = std::vector<std::uint16_t>;

// Tuple of n field elements.
using PointTuple = std::vector<FieldElement>;

inline std::uint32_t total_degree(const ExponentTuple& a) {
    std::uint32_t d = 0;
    for (auto e : a) d += e;
    return d;
}

// Canonical column order: total degree ascending, ties broken by descending
// lexicographic comparison of the exponent tuples. Matches the column
// headers 1, e1, e2, e3, e1e2, e1e3, e2e3, e1e2e3.
struct MonomialOrder {
    bool operator()(const ExponentTuple& a, const ExponentTuple& b) const {
        std::uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

// Graded lexicographic order (ties ascending lex); leading terms are maximal
// under this order.
struct GradedLexOrder {
    bool operator()(const ExponentTuple& a, const ExponentTuple& b) const {
        std::uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// q^n with 64-bit overflow detection.
std::uint64_t q_pow_n(std::uint32_t q, unsigned n);

// wm(q,n) = C(n+q-1, n), exact, with overflow detection.
std::uint64_t wm_count(std::uint32_t q, unsigned n);

// dim I(q,n) = q^n - wm(q,n).
std::uint64_t kernel_dim(std::uint32_t q, unsigned n);

// All q^n exponent tuples in the canonical column order.
std::vector<ExponentTuple> monomials(std::uint32_t q, unsigned n);

// All weakly monotone increasing n-tuples over the field, ascending
// lexicographic order of element indices. Length wm(q,n).
std::vector<PointTuple> weakly_monotone_tuples(const Field& f, unsigned n);

// Representative of e in [0, q) under x^q = x: e itself if e < q, else the
// unique value in [1, q) congruent to e mod (q-1).
std::uint16_t reduce_exponent(std::uint64_t e, std::uint32_t q);

// Visits all q^n points of F_q^n in ascending lexicographic index order
// (a_1 most significant). The callback receives a reused PointTuple.
template <typename F>
void for_each_point(const Field& f, unsigned n, F&& fn) {
    PointTuple a(n, f.zero());
    while (true) {
        fn(const_cast<const PointTuple&>(a));
        unsigned i = n;
        while (i-- > 0) {
            elem_index next = elem_index(a[i].index() + 1);
            if (next < f.q()) {
                a[i] = FieldElement(f, next);
                break;
            }
            a[i] = f.zero();
            if (i == 0) return;
        }
    }
}

} // namespace symrel

#endif
