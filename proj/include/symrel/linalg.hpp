#ifndef SYMREL_LINALG_HPP
#define SYMREL_LINALG_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "symrel/gf.hpp"

namespace symrel {

// Dense row-major matrix over GF(q); entries stored as element indices.
class FqMatrix {
public:
    FqMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    elem_index at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, elem_index v) { a_[i * cols_ + j] = v; }
    FieldElement get(std::size_t i, std::size_t j) const { return {*field_, at(i, j)}; }

    std::span<elem_index> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
    std::span<const elem_index> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

    friend bool operator==(const FqMatrix& x, const FqMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.field_->same_as(*y.field_) &&
               x.a_ == y.a_;
    }

    // Dump format: header "rows cols q", then rows of element indices.
    void write(std::ostream& out) const;

private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<elem_index> a_;
};

// One elimination operation. RowAdd(i,j,f) adds f times row i to row j
// (i == j encodes scaling row i by 1+f, used for pivot normalization);
// RowSwap(i,j) and ColSwap(i,j) interchange rows/columns i and j.
struct GaussOp {
    enum class Kind : char { RowAdd = 'A', RowSwap = 'L', ColSwap = 'C' };
    Kind kind;
    std::uint32_t i, j;
    elem_index factor = 0; // RowAdd only

    friend bool operator==(const GaussOp&, const GaussOp&) = default;
};

struct EliminationResult {
    FqMatrix echelon;             // reduced form: pivot 1 at (i,i) for i < rank,
                                  // zeros below and above each pivot
    std::vector<std::uint32_t> pi; // accumulated column permutation
    std::uint32_t rank = 0;
    std::vector<GaussOp> oplog;   // complete, replayable operation record
};

// Deterministic Gaussian elimination: at step i, if the pivot row is entirely
// zero swap in the first lower nonzero row; if the pivot entry is still zero
// swap in the first later nonzero column (tracked in pi); normalize the pivot
// to 1 and clear the column below; stop when no pivot can be found. A final
// back-substitution pass clears entries above each pivot.
EliminationResult gauss_eliminate(const FqMatrix& m);

// Replays an operation log against a matrix.
void apply_oplog(FqMatrix& m, std::span<const GaussOp> ops);

// Replays only the row operations against a right-hand-side vector.
void apply_row_ops(std::vector<elem_index>& rhs, const Field& f, std::span<const GaussOp> ops);

// General kernel element of a homogeneous system as linear forms in the
// parameters t_1..t_d, reported against original column indices. Free
// columns carry unit forms; pivot columns carry the solved forms.
struct ParametricSolution {
    const Field* field;
    std::uint32_t cols = 0;
    std::uint32_t num_params = 0;               // d
    std::vector<std::uint32_t> free_columns;    // original indices, parameter order
    std::vector<std::uint32_t> pivot_columns;   // original indices, pivot order
    std::vector<elem_index> solved;             // pivot_columns.size() x d, row-major

    // The d coefficients of the linear form for an original column.
    std::vector<elem_index> form(std::uint32_t original_col) const;
};

ParametricSolution parametric_kernel(const EliminationResult& r);

// Substitutes the unit parameter vectors; returns d independent kernel
// vectors of the original matrix, indexed by original column.
std::vector<std::vector<elem_index>> kernel_basis_vectors(const ParametricSolution& s);

} // namespace symrel

#endif
