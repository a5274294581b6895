#include "symrel/linalg.hpp"

#include <algorithm>
#include <ostream>

namespace symrel {

void FqMatrix::write(std::ostream& out) const {
    out << rows_ << " " << cols_ << " " << field_->q() << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j);
        out << "\n";
    }
}

namespace {

void swap_rows(FqMatrix& m, std::size_t i, std::size_t j) {
    auto ri = m.row(i), rj = m.row(j);
    std::swap_ranges(ri.begin(), ri.end(), rj.begin());
}

void swap_cols(FqMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        elem_index t = m.at(r, i);
        m.set(r, i, m.at(r, j));
        m.set(r, j, t);
    }
}

// row_j += f * row_i, starting at column `from`.
void row_add(FqMatrix& m, std::size_t i, std::size_t j, elem_index f, std::size_t from) {
    const Field& fld = m.field();
    auto ri = m.row(i), rj = m.row(j);
    for (std::size_t c = from; c < m.cols(); ++c)
        if (ri[c] != 0) rj[c] = fld.add_idx(rj[c], fld.mul_idx(f, ri[c]));
}

} // namespace

EliminationResult gauss_eliminate(const FqMatrix& m) {
    const Field& f = m.field();
    const std::size_t e = m.rows(), v = m.cols();
    EliminationResult res{m, {}, 0, {}};
    FqMatrix& a = res.echelon;
    res.pi.resize(v);
    for (std::size_t c = 0; c < v; ++c) res.pi[c] = std::uint32_t(c);

    auto record_row_add = [&](std::size_t i, std::size_t j, elem_index factor) {
        res.oplog.push_back({GaussOp::Kind::RowAdd, std::uint32_t(i), std::uint32_t(j), factor});
    };

    std::size_t steps = std::min(e, v);
    for (std::size_t i = 0; i < steps; ++i) {
        // Rows below i-1 have zeros in columns < i, so "row entirely zero"
        // only needs a scan from column i onward.
        auto row_is_zero = [&](std::size_t r) {
            for (std::size_t c = i; c < v; ++c)
                if (a.at(r, c) != 0) return false;
            return true;
        };

        if (a.at(i, i) == 0 && row_is_zero(i)) {
            std::size_t j = i + 1;
            while (j < e && row_is_zero(j)) ++j;
            if (j == e) break; // no nonzero pivot remains
            swap_rows(a, i, j);
            res.oplog.push_back({GaussOp::Kind::RowSwap, std::uint32_t(i), std::uint32_t(j), 0});
        }
        if (a.at(i, i) == 0) {
            std::size_t k = i + 1;
            while (k < v && a.at(i, k) == 0) ++k;
            if (k == v) break; // unreachable after the row swap above
            swap_cols(a, i, k);
            std::swap(res.pi[i], res.pi[k]);
            res.oplog.push_back({GaussOp::Kind::ColSwap, std::uint32_t(i), std::uint32_t(k), 0});
        }

        elem_index pivot = a.at(i, i);
        if (pivot != 1) {
            // Scale row i by 1/pivot, recorded as the self-addition with
            // factor 1/pivot - 1 so the log replays with one uniform rule.
            elem_index s = f.inv_idx(pivot);
            row_add(a, i, i, f.sub_idx(s, 1), i);
            record_row_add(i, i, f.sub_idx(s, 1));
        }
        for (std::size_t r = i + 1; r < e; ++r) {
            elem_index b = a.at(r, i);
            if (b != 0) {
                row_add(a, i, r, f.neg_idx(b), i);
                record_row_add(i, r, f.neg_idx(b));
            }
        }
        ++res.rank;
    }

    // Back substitution: clear entries above each pivot.
    for (std::size_t i = res.rank; i-- > 0;) {
        for (std::size_t r = 0; r < i; ++r) {
            elem_index b = a.at(r, i);
            if (b != 0) {
                row_add(a, i, r, f.neg_idx(b), i);
                record_row_add(i, r, f.neg_idx(b));
            }
        }
    }
    return res;
}

void apply_oplog(FqMatrix& m, std::span<const GaussOp> ops) {
    for (const GaussOp& op : ops) {
        switch (op.kind) {
        case GaussOp::Kind::RowAdd:
            row_add(m, op.i, op.j, op.factor, 0);
            break;
        case GaussOp::Kind::RowSwap:
            swap_rows(m, op.i, op.j);
            break;
        case GaussOp::Kind::ColSwap:
            swap_cols(m, op.i, op.j);
            break;
        }
    }
}

void apply_row_ops(std::vector<elem_index>& rhs, const Field& f, std::span<const GaussOp> ops) {
    for (const GaussOp& op : ops) {
        switch (op.kind) {
        case GaussOp::Kind::RowAdd:
            rhs[op.j] = f.add_idx(rhs[op.j], f.mul_idx(op.factor, rhs[op.i]));
            break;
        case GaussOp::Kind::RowSwap:
            std::swap(rhs[op.i], rhs[op.j]);
            break;
        case GaussOp::Kind::ColSwap:
            break;
        }
    }
}

std::vector<elem_index> ParametricSolution::form(std::uint32_t original_col) const {
    std::vector<elem_index> out(num_params, 0);
    for (std::uint32_t s = 0; s < num_params; ++s)
        if (free_columns[s] == original_col) {
            out[s] = 1;
            return out;
        }
    for (std::uint32_t i = 0; i < pivot_columns.size(); ++i)
        if (pivot_columns[i] == original_col) {
            std::copy_n(solved.begin() + std::size_t(i) * num_params, num_params, out.begin());
            return out;
        }
    return out; // column of an all-zero form (cannot occur for kernel systems)
}

ParametricSolution parametric_kernel(const EliminationResult& r) {
    const Field& f = r.echelon.field();
    const std::size_t v = r.echelon.cols();
    const std::uint32_t rank = r.rank;
    ParametricSolution s;
    s.field = &f;
    s.cols = std::uint32_t(v);
    s.num_params = std::uint32_t(v - rank);
    s.free_columns.reserve(s.num_params);
    for (std::size_t c = rank; c < v; ++c) s.free_columns.push_back(r.pi[c]);
    s.pivot_columns.assign(r.pi.begin(), r.pi.begin() + rank);
    // In the reduced echelon, permuted unknown i (i < rank) satisfies
    // Z_i + sum_s a(i, rank+s) t_s = 0.
    s.solved.resize(std::size_t(rank) * s.num_params);
    for (std::uint32_t i = 0; i < rank; ++i)
        for (std::uint32_t t = 0; t < s.num_params; ++t)
            s.solved[std::size_t(i) * s.num_params + t] = f.neg_idx(r.echelon.at(i, rank + t));
    return s;
}

std::vector<std::vector<elem_index>> kernel_basis_vectors(const ParametricSolution& s) {
    std::vector<std::vector<elem_index>> out;
    out.reserve(s.num_params);
    for (std::uint32_t t = 0; t < s.num_params; ++t) {
        std::vector<elem_index> y(s.cols, 0);
        y[s.free_columns[t]] = 1;
        for (std::uint32_t i = 0; i < s.pivot_columns.size(); ++i)
            y[s.pivot_columns[i]] = s.solved[std::size_t(i) * s.num_params + t];
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace symrel
