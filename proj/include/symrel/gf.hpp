#ifndef SYMREL_GF_HPP
#define SYMREL_GF_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrel/errors.hpp"

namespace symrel {

// Index of a field element under the fixed element order: the base-p digit
// value of its coefficient vector, constant term least significant.
// Prime-subfield elements are the initial segment 0..p-1.
using elem_index = std::uint16_t;

class Field;

// Element of GF(p^k). A cheap value: an index plus a pointer to its field.
// Arithmetic is table-driven through the Field and is pure; elements are
// immutable and safe to share across threads.
class FieldElement {
public:
    FieldElement(const Field& f, elem_index idx) : field_(&f), idx_(idx) {}

    elem_index index() const { return idx_; }
    const Field& field() const { return *field_; }
    bool is_zero() const { return idx_ == 0; }
    bool is_one() const { return idx_ == 1; }

    FieldElement operator+(FieldElement o) const;
    FieldElement operator-(FieldElement o) const;
    FieldElement operator*(FieldElement o) const;
    FieldElement operator/(FieldElement o) const;
    FieldElement operator-() const;

    friend bool operator==(FieldElement a, FieldElement b);
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

private:
    const Field* field_;
    elem_index idx_;
};

// GF(p^k) = F_p[X]/(modulus), with precomputed arithmetic tables.
// Immutable after construction; not copyable, so FieldElement pointers
// stay valid for the Field's lifetime.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1024;

    // Default modulus: the lexicographically smallest monic irreducible of
    // degree k, coefficients compared constant-term-first. For k = 1 this is
    // the placeholder X - 0 and arithmetic is plain mod p.
    explicit Field(unsigned p, unsigned k = 1);
    // Explicit modulus: k+1 coefficients, constant term first, monic,
    // irreducible over F_p.
    Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint32_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement zero() const { return {*this, 0}; }
    FieldElement one() const { return {*this, 1}; }

    // element_from_index: inverse of FieldElement::index().
    FieldElement element(std::uint64_t index) const;
    // Base-p digits of the element, constant term first (k entries).
    std::vector<unsigned> coeffs(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement inv(FieldElement a) const;
    // pow(a, 0) = 1 for every a, including a = 0.
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    // a^(p^j); frobenius(a, k) = a.
    FieldElement frobenius(FieldElement a, unsigned j = 1) const;

    // Raw index arithmetic for inner loops; no operand checks.
    elem_index add_idx(elem_index a, elem_index b) const { return add_[std::size_t(a) * q_ + b]; }
    elem_index sub_idx(elem_index a, elem_index b) const { return add_[std::size_t(a) * q_ + neg_[b]]; }
    elem_index mul_idx(elem_index a, elem_index b) const { return mul_[std::size_t(a) * q_ + b]; }
    elem_index neg_idx(elem_index a) const { return neg_[a]; }
    elem_index inv_idx(elem_index a) const;
    elem_index pow_idx(elem_index a, std::uint64_t e) const;
    elem_index frobenius_idx(elem_index a) const { return frob_[a]; }

    // Structural equality of field descriptors (p, k, modulus).
    bool same_as(const Field& o) const;
    void require_element_of(FieldElement a) const;

private:
    unsigned p_ = 0;
    unsigned k_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<elem_index> add_, mul_, neg_, inv_, frob_;

    void init(unsigned p, unsigned k, const std::vector<unsigned>* modulus);
    void build_tables();
};

inline FieldElement FieldElement::operator+(FieldElement o) const { return field_->add(*this, o); }
inline FieldElement FieldElement::operator-(FieldElement o) const { return field_->sub(*this, o); }
inline FieldElement FieldElement::operator*(FieldElement o) const { return field_->mul(*this, o); }
inline FieldElement FieldElement::operator/(FieldElement o) const { return field_->div(*this, o); }
inline FieldElement FieldElement::operator-() const { return field_->neg(*this); }

inline bool operator==(FieldElement a, FieldElement b) {
    return a.idx_ == b.idx_ && (a.field_ == b.field_ || a.field_->same_as(*b.field_));
}

} // namespace symrel

#endif
