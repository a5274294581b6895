#include "symrel/symfun.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace symrel {

std::vector<FieldElement> eval_elementary(const PointTuple& a) {
    if (a.empty()) throw error("eval_elementary needs a nonempty point");
    const Field& f = a.front().field();
    const unsigned n = unsigned(a.size());
    // Coefficients of prod_i (1 + a_i T), constant term first.
    std::vector<elem_index> c(n + 1, 0);
    c[0] = 1;
    for (unsigned i = 0; i < n; ++i) {
        f.require_element_of(a[i]);
        elem_index ai = a[i].index();
        for (unsigned k = i + 1; k-- > 0;)
            c[k + 1] = f.add_idx(c[k + 1], f.mul_idx(ai, c[k]));
    }
    std::vector<FieldElement> e;
    e.reserve(n);
    for (unsigned k = 1; k <= n; ++k) e.push_back(FieldElement(f, c[k]));
    return e;
}

FieldElement monomial_value(const ExponentTuple& m, const std::vector<FieldElement>& e) {
    if (m.size() != e.size()) throw error("monomial arity mismatch");
    if (e.empty()) throw error("monomial_value needs a nonempty context");
    const Field& f = e.front().field();
    elem_index r = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) r = f.mul_idx(r, f.pow_idx(e[i].index(), m[i]));
    return {f, r};
}

FieldElement eval_monomial(const ExponentTuple& m, const PointTuple& a) {
    return monomial_value(m, eval_elementary(a));
}

FieldElement phi_eval(const EPoly& P, const PointTuple& a) {
    if (a.size() != P.n()) throw error("point arity mismatch");
    const Field& f = P.field();
    std::vector<FieldElement> e = eval_elementary(a);
    elem_index acc = 0;
    for (const auto& [m, c] : P.terms())
        acc = f.add_idx(acc, f.mul_idx(c, monomial_value(m, e).index()));
    return {f, acc};
}

FieldElement gamma_eval(const XPoly& Q, const PointTuple& a) {
    if (a.size() != Q.n()) throw error("point arity mismatch");
    const Field& f = Q.field();
    elem_index acc = 0;
    for (const auto& [m, c] : Q.terms()) {
        elem_index t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t = f.mul_idx(t, f.pow_idx(a[i].index(), m[i]));
        acc = f.add_idx(acc, t);
    }
    return {f, acc};
}

namespace {

// Dense coefficient array over exponent tuples, rank = sum beta_i q^i
// (exponent of X_1 least significant).
struct DenseX {
    const Field* f;
    unsigned n;
    std::uint64_t size;
    std::vector<elem_index> c;

    DenseX(const Field& fld, unsigned nn, std::uint64_t sz) : f(&fld), n(nn), size(sz), c(sz, 0) {}
};

// Multiply T by e_j (sum over all j-subsets of the variables), reducing
// exponents under X^q = X.
DenseX multiply_by_elementary(const DenseX& t, unsigned j) {
    const Field& f = *t.f;
    const std::uint32_t q = f.q();
    const unsigned n = t.n;
    DenseX out(f, n, t.size);

    std::vector<unsigned> comb(j);
    for (unsigned i = 0; i < j; ++i) comb[i] = i;

    std::vector<std::uint64_t> qpow(n);
    qpow[0] = 1;
    for (unsigned i = 1; i < n; ++i) qpow[i] = qpow[i - 1] * q;

    std::vector<std::uint16_t> digits(n, 0);
    while (true) {
        // Scan T once per subset, tracking digits with an odometer.
        std::fill(digits.begin(), digits.end(), 0);
        for (std::uint64_t r = 0; r < t.size; ++r) {
            if (t.c[r] != 0) {
                std::uint64_t target = r;
                for (unsigned pos : comb) {
                    if (digits[pos] == q - 1)
                        target -= std::uint64_t(q - 2) * qpow[pos]; // q-1 wraps to 1
                    else
                        target += qpow[pos];
                }
                out.c[target] = f.add_idx(out.c[target], t.c[r]);
            }
            unsigned i = 0;
            while (i < n && std::uint32_t(digits[i]) + 1 == q) digits[i++] = 0;
            if (i < n) ++digits[i];
        }
        // Next j-combination of {0..n-1}.
        unsigned i = j;
        while (i-- > 0) {
            if (comb[i] + 1 <= n - (j - i)) {
                ++comb[i];
                for (unsigned l = i + 1; l < j; ++l) comb[l] = comb[l - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (j == 0) return out;
    }
}

} // namespace

XPoly psi_expand(const EPoly& P) {
    const Field& f = P.field();
    const unsigned n = P.n();
    std::uint64_t qn = q_pow_n(f.q(), n);
    if (qn > kDenseExpansionGuard)
        throw scale_error("psi_expand: q^n exceeds the dense expansion guard");

    DenseX acc(f, n, qn);
    for (const auto& [alpha, coeff] : P.terms()) {
        DenseX t(f, n, qn);
        t.c[0] = coeff;
        for (unsigned i = 0; i < n; ++i)
            for (std::uint16_t rep = 0; rep < alpha[i]; ++rep) t = multiply_by_elementary(t, i + 1);
        for (std::uint64_t r = 0; r < qn; ++r)
            if (t.c[r] != 0) acc.c[r] = f.add_idx(acc.c[r], t.c[r]);
    }

    XPoly out(f, n);
    ExponentTuple beta(n, 0);
    for (std::uint64_t r = 0; r < qn; ++r) {
        if (acc.c[r] != 0) out.add_term(beta, acc.c[r]);
        unsigned i = 0;
        while (i < n && std::uint32_t(beta[i]) + 1 == f.q()) beta[i++] = 0;
        if (i < n) ++beta[i];
    }
    return out;
}

FunctionTable::FunctionTable(const Field& f, unsigned n, bool sym, std::vector<elem_index> values)
    : field_(&f), n_(n), symmetric_(sym), values_(std::move(values)) {
    if (n < 1) throw error("function table needs n >= 1");
    for (elem_index v : values_)
        if (v >= f.q()) throw error("function value out of range");
    if (symmetric_) {
        auto wm = weakly_monotone_tuples(f, n);
        if (values_.size() != wm.size()) throw error("symmetric table must cover WM(q,n) exactly");
        for (std::size_t r = 0; r < wm.size(); ++r) {
            std::vector<elem_index> key;
            key.reserve(n);
            for (auto e : wm[r]) key.push_back(e.index());
            wm_rank_.emplace(std::move(key), r);
        }
    } else {
        if (values_.size() != q_pow_n(f.q(), n)) throw error("full table must cover all q^n points");
    }
}

FunctionTable FunctionTable::full(const Field& f, unsigned n, std::vector<elem_index> values) {
    return FunctionTable(f, n, false, std::move(values));
}

FunctionTable FunctionTable::symmetric(const Field& f, unsigned n, std::vector<elem_index> values) {
    return FunctionTable(f, n, true, std::move(values));
}

std::uint64_t FunctionTable::point_rank(const PointTuple& a) const {
    std::uint64_t r = 0;
    for (auto e : a) r = r * field_->q() + e.index();
    return r;
}

FieldElement FunctionTable::value_at(const PointTuple& a) const {
    if (a.size() != n_) throw error("point arity mismatch");
    for (auto e : a) field_->require_element_of(e);
    if (!symmetric_) return {*field_, values_[point_rank(a)]};
    std::vector<elem_index> key;
    key.reserve(n_);
    for (auto e : a) key.push_back(e.index());
    std::sort(key.begin(), key.end());
    auto it = wm_rank_.find(key);
    if (it == wm_rank_.end()) throw error("point outside table domain");
    return {*field_, values_[it->second]};
}

FunctionTable FunctionTable::read(std::istream& in, const Field& f, unsigned n) {
    bool symmetric = false;
    std::vector<std::pair<std::vector<elem_index>, elem_index>> entries;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (first && tok == "symmetric") {
            symmetric = true;
            first = false;
            continue;
        }
        first = false;
        std::vector<elem_index> pt(n);
        std::uint64_t v;
        try {
            v = std::stoull(tok);
        } catch (const std::exception&) {
            throw error("malformed function table line: " + line);
        }
        if (v >= f.q()) throw error("element index out of range in table: " + line);
        pt[0] = elem_index(v);
        for (unsigned i = 1; i < n; ++i) {
            if (!(ls >> v) || v >= f.q()) throw error("malformed function table line: " + line);
            pt[i] = elem_index(v);
        }
        std::string colon;
        if (!(ls >> colon) || colon != ":") throw error("malformed function table line: " + line);
        if (!(ls >> v) || v >= f.q()) throw error("malformed function table line: " + line);
        entries.emplace_back(std::move(pt), elem_index(v));
    }

    if (symmetric) {
        auto wm = weakly_monotone_tuples(f, n);
        std::map<std::vector<elem_index>, std::size_t> rank;
        for (std::size_t r = 0; r < wm.size(); ++r) {
            std::vector<elem_index> key;
            for (auto e : wm[r]) key.push_back(e.index());
            rank.emplace(std::move(key), r);
        }
        std::vector<elem_index> values(wm.size(), 0);
        std::vector<bool> seen(wm.size(), false);
        for (auto& [pt, v] : entries) {
            auto it = rank.find(pt);
            if (it == rank.end()) throw error("symmetric table line is not weakly monotone");
            if (seen[it->second]) throw error("duplicate table entry");
            seen[it->second] = true;
            values[it->second] = v;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw error("incomplete symmetric table");
        return FunctionTable::symmetric(f, n, std::move(values));
    }

    std::uint64_t qn = q_pow_n(f.q(), n);
    std::vector<elem_index> values(std::size_t(qn), 0);
    std::vector<bool> seen(std::size_t(qn), false);
    for (auto& [pt, v] : entries) {
        std::uint64_t r = 0;
        for (elem_index e : pt) r = r * f.q() + e;
        if (seen[std::size_t(r)]) throw error("duplicate table entry");
        seen[std::size_t(r)] = true;
        values[std::size_t(r)] = v;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw error("incomplete function table");
    return FunctionTable::full(f, n, std::move(values));
}

void FunctionTable::write(std::ostream& out) const {
    if (symmetric_) {
        out << "symmetric\n";
        auto wm = weakly_monotone_tuples(*field_, n_);
        for (std::size_t r = 0; r < wm.size(); ++r) {
            for (unsigned i = 0; i < n_; ++i) out << (i ? " " : "") << wm[r][i].index();
            out << " : " << values_[r] << "\n";
        }
        return;
    }
    std::uint64_t r = 0;
    for_each_point(*field_, n_, [&](const PointTuple& a) {
        for (unsigned i = 0; i < n_; ++i) out << (i ? " " : "") << a[i].index();
        out << " : " << values_[std::size_t(r++)] << "\n";
    });
}

} // namespace symrel
