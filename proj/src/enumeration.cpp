#include "symrel/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace symrel {

std::uint64_t q_pow_n(std::uint32_t q, unsigned n) {
    if (q < 2 || n < 1) throw error("q_pow_n requires q >= 2 and n >= 1");
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q)
            throw error("q^n overflows 64-bit range");
        r *= q;
    }
    return r;
}

std::uint64_t wm_count(std::uint32_t q, unsigned n) {
    if (q < 2 || n < 1) throw error("wm_count requires q >= 2 and n >= 1");
    // C(n+q-1, r) with r = min(n, q-1); partial products are themselves
    // binomials, so each step stays integral and monotonically increasing.
    const std::uint64_t N = std::uint64_t(n) + q - 1;
    const std::uint64_t r = std::min<std::uint64_t>(n, q - 1);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        c = c * (N - r + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max())
            throw error("wm(q,n) overflows 64-bit range");
    }
    return std::uint64_t(c);
}

std::uint64_t kernel_dim(std::uint32_t q, unsigned n) {
    std::uint64_t qn = q_pow_n(q, n);
    std::uint64_t wm = wm_count(q, n);
    return qn - wm;
}

std::vector<ExponentTuple> monomials(std::uint32_t q, unsigned n) {
    if (q < 2 || n < 1) throw error("monomials requires q >= 2 and n >= 1");
    std::uint64_t total = q_pow_n(q, n);
    if (total > 100'000'000) throw scale_error("monomial set too large to enumerate");
    std::vector<ExponentTuple> out;
    out.reserve(std::size_t(total));
    ExponentTuple cur(n, 0);
    while (true) {
        out.push_back(cur);
        unsigned i = n;
        bool done = true;
        while (i-- > 0) {
            if (std::uint32_t(cur[i]) + 1 < q) {
                ++cur[i];
                done = false;
                break;
            }
            cur[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

std::vector<PointTuple> weakly_monotone_tuples(const Field& f, unsigned n) {
    if (n < 1) throw error("weakly_monotone_tuples requires n >= 1");
    std::vector<PointTuple> out;
    out.reserve(std::size_t(wm_count(f.q(), n)));
    std::vector<elem_index> idx(n, 0);
    while (true) {
        PointTuple t;
        t.reserve(n);
        for (elem_index i : idx) t.push_back(FieldElement(f, i));
        out.push_back(std::move(t));
        // Next weakly monotone tuple in lexicographic order.
        unsigned i = n;
        bool done = true;
        while (i-- > 0) {
            if (std::uint32_t(idx[i]) + 1 < f.q()) {
                elem_index v = elem_index(idx[i] + 1);
                for (unsigned j = i; j < n; ++j) idx[j] = v;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

std::uint16_t reduce_exponent(std::uint64_t e, std::uint32_t q) {
    if (q < 2) throw error("reduce_exponent requires q >= 2");
    if (e < q) return std::uint16_t(e);
    return std::uint16_t((e - 1) % (q - 1) + 1);
}

} // namespace symrel
