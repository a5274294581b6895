#ifndef SYMREL_SYMFUN_HPP
#define SYMREL_SYMFUN_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "symrel/enumeration.hpp"
#include "symrel/gf.hpp"

namespace symrel {

// Hard ceiling for operations that expand into a dense q^n coefficient array
// (psi_expand, interpolation).
inline constexpr std::uint64_t kDenseExpansionGuard = 1'000'000;

namespace detail {
struct e_tag;
struct x_tag;
} // namespace detail

// Element of the quotient algebra F_q{V_1,...,V_n} (V^q = V) as a sparse
// term map. Stored coefficients are never zero and every exponent lies in
// [0, q). Term iteration follows the canonical column order, which makes
// equality a plain map comparison and serialization deterministic.
template <typename Tag>
class BasicPoly {
public:
    using TermMap = std::map<ExponentTuple, elem_index, MonomialOrder>;

    BasicPoly(const Field& f, unsigned n) : field_(&f), n_(n) {
        if (n < 1) throw error("polynomial needs at least one variable");
    }

    const Field& field() const { return *field_; }
    unsigned n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coeff(const ExponentTuple& a) const {
        auto it = terms_.find(a);
        return {*field_, it == terms_.end() ? elem_index(0) : it->second};
    }

    // Accumulates c into the coefficient of the given monomial.
    void add_term(const ExponentTuple& a, FieldElement c) {
        field_->require_element_of(c);
        add_term(a, c.index());
    }
    void add_term(const ExponentTuple& a, elem_index c) {
        if (a.size() != n_) throw error("exponent tuple has wrong arity");
        for (auto e : a)
            if (e >= field_->q()) throw error("exponent out of range [0, q)");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(a, c);
        if (!inserted) {
            it->second = field_->add_idx(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    static BasicPoly monomial(const Field& f, unsigned n, const ExponentTuple& a, FieldElement c) {
        BasicPoly r(f, n);
        r.add_term(a, c);
        return r;
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        require_same_context(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        require_same_context(o);
        for (const auto& [a, c] : o.terms_) add_term(a, field_->neg_idx(c));
        return *this;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

    BasicPoly scaled(FieldElement c) const {
        field_->require_element_of(c);
        BasicPoly r(*field_, n_);
        if (c.is_zero()) return r;
        for (const auto& [a, v] : terms_) r.terms_.emplace(a, field_->mul_idx(v, c.index()));
        return r;
    }

    // Product in the quotient ring: exponents reduce under V^q = V.
    friend BasicPoly operator*(const BasicPoly& x, const BasicPoly& y) {
        x.require_same_context(y);
        const Field& f = x.field();
        BasicPoly r(f, x.n_);
        ExponentTuple sum(x.n_);
        for (const auto& [a, ca] : x.terms_) {
            for (const auto& [b, cb] : y.terms_) {
                for (unsigned i = 0; i < x.n_; ++i)
                    sum[i] = reduce_exponent(std::uint64_t(a[i]) + b[i], f.q());
                r.add_term(sum, f.mul_idx(ca, cb));
            }
        }
        return r;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.n_ == b.n_ && a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    void require_same_context(const BasicPoly& o) const {
        if (n_ != o.n_ || !field_->same_as(*o.field_))
            throw error("polynomials from different contexts");
    }

private:
    const Field* field_;
    unsigned n_;
    TermMap terms_;
};

// Polynomial in the symbols E_1..E_n (images of elementary symmetric
// polynomials); the home of relations and canonical forms.
using EPoly = BasicPoly<detail::e_tag>;
// Polynomial in the variables X_1..X_n.
using XPoly = BasicPoly<detail::x_tag>;

// (e_1(a), ..., e_n(a)) via the coefficient recurrence of prod_i (1 + a_i T):
// O(n^2) field operations, O(n) space.
std::vector<FieldElement> eval_elementary(const PointTuple& a);

// Value of a monomial given precomputed elementary values e = e(a).
FieldElement monomial_value(const ExponentTuple& m, const std::vector<FieldElement>& e);

// [Phi(m)](a) = e_1^{a_1}(a) ... e_n^{a_n}(a), with 0^0 = 1.
FieldElement eval_monomial(const ExponentTuple& m, const PointTuple& a);

// Phi: evaluate P at the elementary symmetric values of a.
FieldElement phi_eval(const EPoly& P, const PointTuple& a);

// Psi: substitute E_i -> e_i(X_1..X_n) and reduce exponents under X^q = X.
// Guarded: q^n must not exceed kDenseExpansionGuard.
XPoly psi_expand(const EPoly& P);

// Gamma: evaluate an X-polynomial at a point. Phi = Gamma after Psi.
FieldElement gamma_eval(const XPoly& Q, const PointTuple& a);

// A function F_q^n -> F_q, stored densely. Either total on all q^n points
// (lexicographic index order, a_1 most significant) or, for symmetric
// functions, total on WM(q,n) only (ascending order); a flag records which.
class FunctionTable {
public:
    static FunctionTable full(const Field& f, unsigned n, std::vector<elem_index> values);
    static FunctionTable symmetric(const Field& f, unsigned n, std::vector<elem_index> values);

    const Field& field() const { return *field_; }
    unsigned n() const { return n_; }
    bool symmetric_only() const { return symmetric_; }
    const std::vector<elem_index>& values() const { return values_; }

    // Value at an arbitrary point; symmetric tables look up the weakly
    // monotone representative obtained by sorting element indices.
    FieldElement value_at(const PointTuple& a) const;

    // Rank of a point in the full-table value order.
    std::uint64_t point_rank(const PointTuple& a) const;

    // Text format: optional header line "symmetric", then one line per point
    // "i1 i2 ... in : v" with element indices.
    static FunctionTable read(std::istream& in, const Field& f, unsigned n);
    void write(std::ostream& out) const;

private:
    FunctionTable(const Field& f, unsigned n, bool sym, std::vector<elem_index> values);

    const Field* field_;
    unsigned n_;
    bool symmetric_;
    std::vector<elem_index> values_;
    std::map<std::vector<elem_index>, std::size_t> wm_rank_; // symmetric tables only
};

} // namespace symrel

#endif
