#include "symrel/interp.hpp"

#include <algorithm>
#include <functional>

namespace symrel {

FieldElement UnaryPoly::eval(FieldElement x) const {
    field->require_element_of(x);
    elem_index acc = 0; // Horner, highest coefficient first
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = field->add_idx(field->mul_idx(acc, x.index()), coeffs[i]);
    return {*field, acc};
}

UnaryPoly lagrange_unary(const Field& f, FieldElement a) {
    f.require_element_of(a);
    // Numerator prod_{l != a} (X - l), then scale by 1 / prod (a - l).
    std::vector<elem_index> num{1};
    elem_index denom = 1;
    for (std::uint32_t l = 0; l < f.q(); ++l) {
        if (l == a.index()) continue;
        elem_index neg_l = f.neg_idx(elem_index(l));
        std::vector<elem_index> next(num.size() + 1, 0);
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i + 1] = f.add_idx(next[i + 1], num[i]);
            next[i] = f.add_idx(next[i], f.mul_idx(num[i], neg_l));
        }
        num = std::move(next);
        denom = f.mul_idx(denom, f.sub_idx(a.index(), elem_index(l)));
    }
    elem_index scale = f.inv_idx(denom);
    for (auto& c : num) c = f.mul_idx(c, scale);
    return UnaryPoly{&f, std::move(num)};
}

XPoly interpolate(const FunctionTable& table) {
    const Field& f = table.field();
    const unsigned n = table.n();
    const std::uint32_t q = f.q();
    std::uint64_t qn = q_pow_n(q, n);
    if (qn > kDenseExpansionGuard)
        throw scale_error("interpolate: q^n exceeds the dense expansion guard");

    // h[c][d]: coefficient of X^d in the unary Lagrange polynomial of c.
    std::vector<std::vector<elem_index>> h(q);
    for (std::uint32_t c = 0; c < q; ++c) h[c] = lagrange_unary(f, f.element(c)).coeffs;

    std::vector<std::uint64_t> qpow(n);
    qpow[0] = 1;
    for (unsigned i = 1; i < n; ++i) qpow[i] = qpow[i - 1] * q;

    std::vector<elem_index> dense(std::size_t(qn), 0);
    // Accumulate f(a) * h_{a_1}(X_1) ... h_{a_n}(X_n) per point.
    std::function<void(unsigned, std::uint64_t, elem_index, const PointTuple&)> accumulate =
        [&](unsigned i, std::uint64_t rank, elem_index coef, const PointTuple& a) {
            if (i == n) {
                dense[std::size_t(rank)] = f.add_idx(dense[std::size_t(rank)], coef);
                return;
            }
            const auto& hi = h[a[i].index()];
            for (std::uint32_t d = 0; d < q; ++d) {
                elem_index c2 = f.mul_idx(coef, hi[d]);
                // X_i corresponds to dense digit i (X_1 least significant).
                if (c2 != 0) accumulate(i + 1, rank + d * qpow[i], c2, a);
            }
        };
    for_each_point(f, n, [&](const PointTuple& a) {
        elem_index fa = table.value_at(a).index();
        if (fa != 0) accumulate(0, 0, fa, a);
    });

    XPoly out(f, n);
    ExponentTuple beta(n, 0);
    for (std::uint64_t r = 0; r < qn; ++r) {
        if (dense[std::size_t(r)] != 0) out.add_term(beta, dense[std::size_t(r)]);
        unsigned i = 0;
        while (i < n && std::uint32_t(beta[i]) + 1 == q) beta[i++] = 0;
        if (i < n) ++beta[i];
    }
    return out;
}

std::pair<FieldElement, ExponentTuple> leading_monomial(const XPoly& H) {
    if (H.is_zero()) throw error("leading monomial of the zero polynomial");
    GradedLexOrder less;
    auto best = H.terms().begin();
    for (auto it = std::next(best); it != H.terms().end(); ++it)
        if (less(best->first, it->first)) best = it;
    return {FieldElement(H.field(), best->second), best->first};
}

namespace {

// H(sigma(X)); perm[i] is the image position of variable i.
XPoly permute_variables(const XPoly& H, const std::vector<unsigned>& perm) {
    XPoly out(H.field(), H.n());
    ExponentTuple b(H.n());
    for (const auto& [a, c] : H.terms()) {
        for (unsigned i = 0; i < H.n(); ++i) b[perm[i]] = a[i];
        out.add_term(b, c);
    }
    return out;
}

bool is_symmetric(const XPoly& H) {
    const unsigned n = H.n();
    if (n == 1) return true;
    std::vector<unsigned> swap01(n), cycle(n);
    for (unsigned i = 0; i < n; ++i) {
        swap01[i] = i;
        cycle[i] = (i + 1) % n;
    }
    std::swap(swap01[0], swap01[1]);
    return permute_variables(H, swap01) == H && permute_variables(H, cycle) == H;
}

} // namespace

EPoly to_elementary(const XPoly& H) {
    const Field& f = H.field();
    const unsigned n = H.n();
    if (!is_symmetric(H)) throw error("to_elementary requires a symmetric polynomial");

    EPoly out(f, n);
    XPoly rest = H;
    bool have_prev = false;
    ExponentTuple prev;
    GradedLexOrder less;
    while (!rest.is_zero()) {
        auto [c, gamma] = leading_monomial(rest);
        if (have_prev && !less(gamma, prev))
            throw error("leading term failed to decrease"); // internal invariant
        prev = gamma;
        have_prev = true;
        for (unsigned i = 0; i + 1 < n; ++i)
            if (gamma[i] < gamma[i + 1])
                throw error("leading exponent of a symmetric polynomial must be weakly decreasing");

        ExponentTuple beta(n);
        for (unsigned i = 0; i + 1 < n; ++i) beta[i] = std::uint16_t(gamma[i] - gamma[i + 1]);
        beta[n - 1] = gamma[n - 1];

        out.add_term(beta, c);
        rest -= psi_expand(EPoly::monomial(f, n, beta, c));
    }
    return out;
}

EPoly interpolate_symmetric(const FunctionTable& table, const RelationBasis* basis) {
    const Field& f = table.field();
    if (!table.symmetric_only()) {
        // A full table must agree with its weakly monotone representatives.
        bool sym = true;
        for_each_point(f, table.n(), [&](const PointTuple& a) {
            if (!sym) return;
            std::vector<elem_index> idx;
            idx.reserve(a.size());
            for (auto e : a) idx.push_back(e.index());
            std::sort(idx.begin(), idx.end());
            PointTuple rep;
            rep.reserve(a.size());
            for (elem_index i : idx) rep.push_back(FieldElement(f, i));
            if (table.value_at(a) != table.value_at(rep)) sym = false;
        });
        if (!sym) throw error("function table is not symmetric");
    }
    EPoly F = to_elementary(interpolate(table));
    if (basis) return canonical_form(F, *basis);
    return F;
}

} // namespace symrel
