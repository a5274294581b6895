#include "symrel/relations.hpp"

#include <algorithm>
#include <string>

namespace symrel {

namespace {

// Fills one matrix row: values of the given monomials at the point, using a
// power table over the elementary values of the row tuple.
void fill_row(FqMatrix& m, std::size_t row, const PointTuple& pt,
              const std::vector<ExponentTuple>& mons) {
    const Field& f = m.field();
    const unsigned n = unsigned(pt.size());
    std::vector<FieldElement> e = eval_elementary(pt);
    // pw[i][j] = e_i(pt)^j
    std::vector<std::vector<elem_index>> pw(n, std::vector<elem_index>(f.q()));
    for (unsigned i = 0; i < n; ++i) {
        pw[i][0] = 1;
        for (std::uint32_t j = 1; j < f.q(); ++j)
            pw[i][j] = f.mul_idx(pw[i][j - 1], e[i].index());
    }
    for (std::size_t c = 0; c < mons.size(); ++c) {
        elem_index v = 1;
        const ExponentTuple& a = mons[c];
        for (unsigned i = 0; i < n; ++i)
            if (a[i] != 0) v = f.mul_idx(v, pw[i][a[i]]);
        m.set(row, c, v);
    }
}

FqMatrix build_matrix_for_columns(const Field& f, unsigned n,
                                  const std::vector<ExponentTuple>& mons) {
    auto wm = weakly_monotone_tuples(f, n);
    FqMatrix m(f, wm.size(), mons.size());
    for (std::size_t r = 0; r < wm.size(); ++r) fill_row(m, r, wm[r], mons);
    return m;
}

} // namespace

FqMatrix build_matrix(const Field& f, unsigned n, std::uint64_t guard) {
    std::uint64_t v = q_pow_n(f.q(), n);
    std::uint64_t e = wm_count(f.q(), n);
    if ((unsigned __int128)e * v > guard)
        throw scale_error("M(q,n) would have " + std::to_string(e) + "x" + std::to_string(v) +
                          " entries, above the scale guard " + std::to_string(guard));
    return build_matrix_for_columns(f, n, monomials(f.q(), n));
}

RelationBasis relation_basis(const Field& f, unsigned n, std::uint64_t guard) {
    FqMatrix m = build_matrix(f, n, guard);
    std::uint64_t v = m.cols();
    std::uint64_t d = kernel_dim(f.q(), n);
    if ((unsigned __int128)d * v > guard)
        throw scale_error("kernel basis would materialize " + std::to_string(d) + "x" +
                          std::to_string(v) + " entries, above the scale guard " +
                          std::to_string(guard));
    EliminationResult elim = gauss_eliminate(m);
    ParametricSolution sol = parametric_kernel(elim);
    std::vector<ExponentTuple> mons = monomials(f.q(), n);

    RelationBasis rb;
    rb.field = &f;
    rb.n = n;
    rb.pivot_columns = sol.pivot_columns;
    rb.free_columns = sol.free_columns;
    rb.rank = elim.rank;
    rb.oplog = std::move(elim.oplog);
    rb.basis.reserve(sol.num_params);
    for (const auto& y : kernel_basis_vectors(sol)) {
        EPoly p(f, n);
        for (std::size_t c = 0; c < y.size(); ++c)
            if (y[c] != 0) p.add_term(mons[c], y[c]);
        rb.basis.push_back(std::move(p));
    }
    return rb;
}

bool verify_relation(const EPoly& P, VerifyMode mode) {
    const Field& f = P.field();
    if (mode == VerifyMode::wm) {
        for (const PointTuple& t : weakly_monotone_tuples(f, P.n()))
            if (!phi_eval(P, t).is_zero()) return false;
        return true;
    }
    bool ok = true;
    for_each_point(f, P.n(), [&](const PointTuple& a) {
        if (ok && !phi_eval(P, a).is_zero()) ok = false;
    });
    return ok;
}

bool coeffs_in_prime_field(const EPoly& P) {
    const Field& f = P.field();
    for (const auto& [a, c] : P.terms())
        if (f.frobenius_idx(c) != c) return false;
    return true;
}

EPoly canonical_form(const EPoly& P, const RelationBasis& basis) {
    if (basis.field == nullptr) throw error("uninitialized relation basis");
    if (P.n() != basis.n || !P.field().same_as(*basis.field))
        throw error("polynomial does not match the basis context");
    const Field& f = *basis.field;

    auto wm = weakly_monotone_tuples(f, basis.n);
    std::vector<elem_index> b;
    b.reserve(wm.size());
    for (const PointTuple& t : wm) b.push_back(phi_eval(P, t).index());
    apply_row_ops(b, f, basis.oplog);
    for (std::size_t i = basis.rank; i < b.size(); ++i)
        if (b[i] != 0) throw error("value vector inconsistent with the basis context");

    std::vector<ExponentTuple> mons = monomials(f.q(), basis.n);
    EPoly out(f, basis.n);
    for (std::uint32_t i = 0; i < basis.rank; ++i)
        if (b[i] != 0) out.add_term(mons[basis.pivot_columns[i]], b[i]);
    return out;
}

std::uint64_t matrix_rank(const Field& f, unsigned n, std::uint64_t guard) {
    std::uint64_t v = q_pow_n(f.q(), n);
    std::uint64_t e = wm_count(f.q(), n);
    if ((unsigned __int128)e * std::min(v, e) <= 4'000'000 && (unsigned __int128)e * v <= guard)
        return gauss_eliminate(build_matrix(f, n, guard)).rank;

    std::vector<ExponentTuple> mons = monomials(f.q(), n);
    std::uint64_t sample = std::min<std::uint64_t>(e + 64, v);
    while (true) {
        if ((unsigned __int128)e * sample > guard)
            throw scale_error("rank computation exceeds the scale guard");
        std::vector<ExponentTuple> cols;
        cols.reserve(std::size_t(sample));
        for (std::uint64_t j = 0; j < sample; ++j)
            cols.push_back(mons[std::size_t(j * (v - 1) / (sample - 1))]);
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        std::uint64_t r = gauss_eliminate(build_matrix_for_columns(f, n, cols)).rank;
        if (r == e || sample == v) return r;
        sample = std::min<std::uint64_t>(sample * 4, v);
    }
}

} // namespace symrel
