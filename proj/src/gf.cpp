#include "symrel/gf.hpp"

#include <algorithm>
#include <string>

namespace symrel {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using FpPoly = std::vector<unsigned>;

// Remainder of a modulo the monic polynomial m.
FpPoly poly_rem(FpPoly a, const FpPoly& m, unsigned p) {
    const unsigned dm = unsigned(m.size()) - 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (i < dm) break;
        unsigned c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (unsigned j = 0; j < dm; ++j)
            a[i - dm + j] = (a[i - dm + j] + p * p - c * m[j] % p) % p;
    }
    a.resize(dm == 0 ? 1 : dm);
    return a;
}

bool is_zero_poly(const FpPoly& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const FpPoly& m, unsigned p) {
    const unsigned deg = unsigned(m.size()) - 1;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            FpPoly div(d + 1, 0);
            std::uint64_t v = t;
            for (unsigned i = 0; i < d; ++i) { div[i] = unsigned(v % p); v /= p; }
            div[d] = 1;
            if (is_zero_poly(poly_rem(m, div, p))) return false;
        }
    }
    return true;
}

FpPoly default_modulus(unsigned p, unsigned k) {
    if (k == 1) return {0, 1};
    // Lexicographic scan, constant coefficient most significant.
    std::vector<unsigned> c(k, 0);
    while (true) {
        FpPoly m(c.begin(), c.end());
        m.push_back(1);
        if (is_irreducible(m, p)) return m;
        unsigned i = k;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw error("no irreducible polynomial found"); // unreachable
        }
    }
}

} // namespace

Field::Field(unsigned p, unsigned k) { init(p, k, nullptr); }

Field::Field(unsigned p, unsigned k, const std::vector<unsigned>& modulus) {
    init(p, k, &modulus);
}

void Field::init(unsigned p, unsigned k, const std::vector<unsigned>* modulus) {
    if (!is_prime(p)) throw error("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw error("field order exceeds supported maximum " + std::to_string(kMaxOrder));
    }
    p_ = p;
    k_ = k;
    q_ = std::uint32_t(q);

    if (modulus) {
        if (modulus->size() != std::size_t(k) + 1)
            throw error("modulus must have degree k = " + std::to_string(k));
        for (unsigned c : *modulus)
            if (c >= p) throw error("modulus coefficients must lie in [0, p)");
        if (modulus->back() != 1) throw error("modulus must be monic");
        if (k == 1) {
            if ((*modulus)[0] != 0) throw error("for k = 1 the modulus must be the placeholder X");
        } else if (!is_irreducible(*modulus, p)) {
            throw error("modulus polynomial is reducible over F_p");
        }
        modulus_ = *modulus;
    } else {
        modulus_ = default_modulus(p, k);
    }
    build_tables();
}

void Field::build_tables() {
    const std::uint32_t q = q_;
    auto digits = [&](std::uint32_t v) {
        std::vector<unsigned> d(k_);
        for (unsigned i = 0; i < k_; ++i) { d[i] = v % p_; v /= p_; }
        return d;
    };
    auto index_of = [&](const std::vector<unsigned>& d) {
        std::uint32_t v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * p_ + d[i];
        return v;
    };

    add_.assign(std::size_t(q) * q, 0);
    mul_.assign(std::size_t(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    frob_.assign(q, 0);

    std::vector<std::vector<unsigned>> dig(q);
    for (std::uint32_t v = 0; v < q; ++v) dig[v] = digits(v);

    for (std::uint32_t a = 0; a < q; ++a) {
        std::vector<unsigned> nd(k_);
        for (unsigned i = 0; i < k_; ++i) nd[i] = (p_ - dig[a][i]) % p_;
        neg_[a] = elem_index(index_of(nd));
        for (std::uint32_t b = 0; b < q; ++b) {
            std::vector<unsigned> sd(k_);
            for (unsigned i = 0; i < k_; ++i) sd[i] = (dig[a][i] + dig[b][i]) % p_;
            add_[std::size_t(a) * q + b] = elem_index(index_of(sd));
        }
    }

    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = a; b < q; ++b) {
            FpPoly prod(2 * k_ - 1, 0);
            for (unsigned i = 0; i < k_; ++i)
                for (unsigned j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p_;
            FpPoly r = k_ > 1 ? poly_rem(prod, modulus_, p_) : FpPoly{prod[0]};
            r.resize(k_, 0);
            elem_index m = elem_index(index_of(r));
            mul_[std::size_t(a) * q + b] = m;
            mul_[std::size_t(b) * q + a] = m;
        }
    }

    for (std::uint32_t a = 1; a < q; ++a) inv_[a] = pow_idx(elem_index(a), q - 2);
    for (std::uint32_t a = 0; a < q; ++a) frob_[a] = pow_idx(elem_index(a), p_);
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= q_) throw error("element index out of range");
    return {*this, elem_index(index)};
}

std::vector<unsigned> Field::coeffs(FieldElement a) const {
    require_element_of(a);
    std::vector<unsigned> d(k_);
    std::uint32_t v = a.index();
    for (unsigned i = 0; i < k_; ++i) { d[i] = v % p_; v /= p_; }
    return d;
}

bool Field::same_as(const Field& o) const {
    return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
}

void Field::require_element_of(FieldElement a) const {
    if (!same_as(a.field())) throw error("operands belong to different fields");
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    require_element_of(a);
    require_element_of(b);
    return {*this, add_idx(a.index(), b.index())};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
    require_element_of(a);
    require_element_of(b);
    return {*this, sub_idx(a.index(), b.index())};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    require_element_of(a);
    require_element_of(b);
    return {*this, mul_idx(a.index(), b.index())};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
    require_element_of(a);
    require_element_of(b);
    return {*this, mul_idx(a.index(), inv_idx(b.index()))};
}

FieldElement Field::neg(FieldElement a) const {
    require_element_of(a);
    return {*this, neg_[a.index()]};
}

FieldElement Field::inv(FieldElement a) const {
    require_element_of(a);
    return {*this, inv_idx(a.index())};
}

elem_index Field::inv_idx(elem_index a) const {
    if (a == 0) throw error("division by zero");
    return inv_[a];
}

elem_index Field::pow_idx(elem_index a, std::uint64_t e) const {
    elem_index r = 1;
    elem_index base = a;
    while (e > 0) {
        if (e & 1) r = mul_idx(r, base);
        base = mul_idx(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    require_element_of(a);
    return {*this, pow_idx(a.index(), e)};
}

FieldElement Field::frobenius(FieldElement a, unsigned j) const {
    require_element_of(a);
    elem_index r = a.index();
    for (unsigned i = 0; i < j % k_; ++i) r = frob_[r];
    return {*this, r};
}

} // namespace symrel
