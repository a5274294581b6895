// Shared test oracles and deterministic generators. Everything here is
// independent of the library's main computation paths: elementary symmetric
// values come from explicit subset sums and powers from repeated products.
#ifndef SYMREL_TEST_HELPERS_HPP
#define SYMREL_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "symrel/enumeration.hpp"
#include "symrel/gf.hpp"
#include "symrel/symfun.hpp"

namespace symrel::testing {

// e_k(a) for k = 1..n as literal sums over k-element subsets.
inline std::vector<FieldElement> naive_elementary(const PointTuple& a) {
    const Field& f = a.front().field();
    const unsigned n = unsigned(a.size());
    std::vector<FieldElement> e;
    for (unsigned k = 1; k <= n; ++k) {
        FieldElement sum = f.zero();
        std::vector<unsigned> comb(k);
        for (unsigned i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            FieldElement prod = f.one();
            for (unsigned i : comb) prod = prod * a[i];
            sum = sum + prod;
            unsigned i = k;
            bool done = true;
            while (i-- > 0) {
                if (comb[i] + 1 <= n - (k - i)) {
                    ++comb[i];
                    for (unsigned l = i + 1; l < k; ++l) comb[l] = comb[l - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        e.push_back(sum);
    }
    return e;
}

inline FieldElement naive_pow(FieldElement a, std::uint64_t e) {
    FieldElement r = a.field().one();
    for (std::uint64_t i = 0; i < e; ++i) r = r * a;
    return r;
}

// Phi(P)(a) via the naive oracles above.
inline FieldElement naive_phi(const EPoly& P, const PointTuple& a) {
    const Field& f = P.field();
    std::vector<FieldElement> e = naive_elementary(a);
    FieldElement acc = f.zero();
    for (const auto& [m, c] : P.terms()) {
        FieldElement t(f, c);
        for (std::size_t i = 0; i < m.size(); ++i) t = t * naive_pow(e[i], m[i]);
        acc = acc + t;
    }
    return acc;
}

inline PointTuple random_point(const Field& f, unsigned n, std::mt19937& rng) {
    PointTuple a;
    std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
    for (unsigned i = 0; i < n; ++i) a.push_back(f.element(dist(rng)));
    return a;
}

inline EPoly random_epoly(const Field& f, unsigned n, std::mt19937& rng, unsigned max_terms = 8) {
    EPoly p(f, n);
    std::uniform_int_distribution<std::uint32_t> coeff(1, f.q() - 1);
    std::uniform_int_distribution<std::uint32_t> expo(0, f.q() - 1);
    std::uniform_int_distribution<unsigned> nt(0, max_terms);
    unsigned terms = nt(rng);
    for (unsigned t = 0; t < terms; ++t) {
        ExponentTuple a(n);
        for (unsigned i = 0; i < n; ++i) a[i] = std::uint16_t(expo(rng));
        p.add_term(a, elem_index(coeff(rng)));
    }
    return p;
}

} // namespace symrel::testing

#endif
