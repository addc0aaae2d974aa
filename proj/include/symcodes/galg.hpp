#pragma once
// Elements of the group algebra F_p G for G = S_n or A_n, Young symmetrizer
// machinery, central primitive idempotents of F_q S_n via products of
// one-minus-symmetrizer factors, their restriction to A_n, and essentiality
// of idempotents against the subgroup lattice.
//
// Coefficients live in the prime field F_p.  That covers every idempotent
// computed here: central idempotents of F_q S_n have coefficients
// (d/n!)·chi(g) with chi integer-valued, and the split A_n idempotents need
// only a square root of p_lambda mod p.  A block that splits over F_{p^f}
// with f even while p_lambda is a non-square mod p would need F_{p^2}
// coefficients; callers detect that case via classify_partition and report
// it instead of computing.
#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffield.hpp"
#include "fpmat.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "tableaux.hpp"

namespace symcodes {

class GAElement {
public:
    GAElement(const GroupTable& g, const FieldSpec& field)
        : table_(&g), field_(field), c_(g.size(), 0) {
        field_.validate();
    }

    static GAElement zero(const GroupTable& g, const FieldSpec& f) { return GAElement(g, f); }
    static GAElement one(const GroupTable& g, const FieldSpec& f) {
        GAElement e(g, f);
        e.c_[g.identity_rank()] = 1;
        return e;
    }
    static GAElement basis(const GroupTable& g, const FieldSpec& f, int rank) {
        GAElement e(g, f);
        e.c_.at(rank) = 1;
        return e;
    }

    const GroupTable& group() const { return *table_; }
    const FieldSpec& field() const { return field_; }
    int size() const { return static_cast<int>(c_.size()); }

    uint32_t coeff(int rank) const { return c_.at(rank); }
    void set_coeff(int rank, long long v) {
        long long m = v % static_cast<long long>(field_.p);
        if (m < 0) m += field_.p;
        c_.at(rank) = static_cast<uint32_t>(m);
    }

    bool is_zero() const {
        for (uint32_t v : c_)
            if (v) return false;
        return true;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < size(); ++i)
            if (c_[i]) s.push_back(i);
        return s;
    }

    bool operator==(const GAElement& o) const {
        return table_ == o.table_ && field_ == o.field_ && c_ == o.c_;
    }

    GAElement& operator+=(const GAElement& o) {
        check_compatible(o);
        for (int i = 0; i < size(); ++i) c_[i] = (c_[i] + o.c_[i]) % field_.p;
        return *this;
    }
    GAElement& operator-=(const GAElement& o) {
        check_compatible(o);
        for (int i = 0; i < size(); ++i) c_[i] = (c_[i] + field_.p - o.c_[i]) % field_.p;
        return *this;
    }
    GAElement operator+(const GAElement& o) const {
        GAElement r = *this;
        return r += o;
    }
    GAElement operator-(const GAElement& o) const {
        GAElement r = *this;
        return r -= o;
    }
    GAElement operator-() const {
        GAElement r(*table_, field_);
        for (int i = 0; i < size(); ++i) r.c_[i] = c_[i] ? field_.p - c_[i] : 0;
        return r;
    }
    GAElement scaled(long long s) const {
        long long m = s % static_cast<long long>(field_.p);
        if (m < 0) m += field_.p;
        GAElement r(*table_, field_);
        for (int i = 0; i < size(); ++i)
            r.c_[i] = static_cast<uint32_t>(c_[i] * static_cast<uint64_t>(m) % field_.p);
        return r;
    }

    // Convolution; iterates over supports only.
    GAElement operator*(const GAElement& o) const {
        check_compatible(o);
        GAElement out(*table_, field_);
        std::vector<int> sb = o.support();
        uint64_t p = field_.p;
        for (int i = 0; i < size(); ++i) {
            uint64_t ai = c_[i];
            if (!ai) continue;
            for (int j : sb) {
                int k = table_->mul(i, j);
                out.c_[k] = static_cast<uint32_t>((out.c_[k] + ai * o.c_[j]) % p);
            }
        }
        return out;
    }

    // g·a and a·g for a single group element g (cheaper than operator*).
    GAElement translated_left(int g) const {
        GAElement out(*table_, field_);
        for (int h = 0; h < size(); ++h)
            if (c_[h]) out.c_[table_->mul(g, h)] = c_[h];
        return out;
    }
    GAElement translated_right(int g) const {
        GAElement out(*table_, field_);
        for (int h = 0; h < size(); ++h)
            if (c_[h]) out.c_[table_->mul(h, g)] = c_[h];
        return out;
    }

private:
    void check_compatible(const GAElement& o) const {
        if (table_ != o.table_ || !(field_ == o.field_))
            throw std::invalid_argument("group algebra: operands over different groups or fields");
    }

    const GroupTable* table_;
    FieldSpec field_;
    std::vector<uint32_t> c_;
};

// "3 + (1,2) + 4(1,2,3)": terms in element-enumeration order; the identity
// prints as a bare coefficient, coefficient 1 is dropped elsewhere.
inline std::string element_to_string(const GAElement& a) {
    std::string s;
    for (int i = 0; i < a.size(); ++i) {
        uint32_t v = a.coeff(i);
        if (!v) continue;
        if (!s.empty()) s += " + ";
        std::string cyc = cycle_string(a.group().element(i));
        if (cyc == "()")
            s += std::to_string(v);
        else if (v == 1)
            s += cyc;
        else
            s += std::to_string(v) + cyc;
    }
    return s.empty() ? "0" : s;
}

namespace detail {
inline uint32_t factorial_mod(int n, uint32_t p) {
    uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f = f * k % p;
    return static_cast<uint32_t>(f);
}
}  // namespace detail

// e_T = (d/n!) · (sum_{q in C_T} sgn(q)·q) · (sum_{r in R_T} r), an
// idempotent generating a minimal left ideal of the lambda-block.
inline GAElement young_symmetrizer(const YoungTableau& T, const GroupTable& g, const FieldSpec& field) {
    if (g.kind() != GroupKind::Sn || g.degree() != T.shape.sum())
        throw std::invalid_argument("young_symmetrizer: need the S_n table of matching degree");
    GAElement r(g, field), c(g, field);
    for (int x : row_stabilizer(T, g)) r.set_coeff(x, 1);
    for (int x : column_stabilizer(T, g)) c.set_coeff(x, sign(g.element(x)));
    long long d = static_cast<long long>(dimension(T.shape));
    Fp scale = Fp(d, field.p) / Fp(detail::factorial_mod(g.degree(), field.p), field.p);
    return (c * r).scaled(scale.v);
}

// The transposed-product variant: bar e_T = (d/n!) · r_T · c_T.
inline GAElement bar_young_symmetrizer(const YoungTableau& T, const GroupTable& g, const FieldSpec& field) {
    if (g.kind() != GroupKind::Sn || g.degree() != T.shape.sum())
        throw std::invalid_argument("bar_young_symmetrizer: need the S_n table of matching degree");
    GAElement r(g, field), c(g, field);
    for (int x : row_stabilizer(T, g)) r.set_coeff(x, 1);
    for (int x : column_stabilizer(T, g)) c.set_coeff(x, sign(g.element(x)));
    long long d = static_cast<long long>(dimension(T.shape));
    Fp scale = Fp(d, field.p) / Fp(detail::factorial_mod(g.degree(), field.p), field.p);
    return (r * c).scaled(scale.v);
}

// Sufficient test for e_A·e_B = 0 and bar e_{A'}·bar e_{B'} = 0: two entries
// sharing a row of A and a column of B give a transposition lying in both
// the row group of A and the column group of B, which kills r_A·c_B (and,
// transposed, c_{A'}·r_{B'}).
inline bool garnir_annihilates(const YoungTableau& A, const YoungTableau& B) {
    int n = A.shape.sum();
    std::vector<int> col_in_B(n + 1, -1);
    for (int i = 0; i < B.shape.rows(); ++i)
        for (int j = 0; j < B.shape[i]; ++j) col_in_B[B.entry(i, j)] = j;
    for (const auto& row : A.rows) {
        std::vector<char> used(B.shape[0], 0);
        for (int v : row) {
            int cj = col_in_B[v];
            if (used[cj]) return true;
            used[cj] = 1;
        }
    }
    return false;
}

struct OrderedTableaux {
    std::vector<YoungTableau> tableaux;  // standard tableaux in a valid product order
    std::vector<GAElement> sym;          // e_{T_i}
    std::vector<GAElement> bar_sym;      // bar e_{T_i'} for the transposed tableaux
};

// Order the standard tableaux of `lam` so that sym[i]*sym[j] = 0 and
// bar_sym[i]*bar_sym[j] = 0 whenever i > j.  A pair (a,b) whose products do
// not vanish with a after b forces "a before b"; topologically sorting those
// constraints (smallest original index first) yields the least valid order,
// and a cycle means no order exists.
inline OrderedTableaux order_tableaux(const Partition& lam, const GroupTable& g, const FieldSpec& field) {
    auto tabs = standard_tableaux(lam);
    int k = static_cast<int>(tabs.size());
    std::vector<GAElement> sym, bars;
    sym.reserve(k);
    bars.reserve(k);
    for (const auto& T : tabs) {
        sym.push_back(young_symmetrizer(T, g, field));
        bars.push_back(bar_young_symmetrizer(T.transpose(), g, field));
    }
    // ok[i][j]: may i come after j?
    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || garnir_annihilates(tabs[i], tabs[j])) continue;
            ok[i][j] = (sym[i] * sym[j]).is_zero() && (bars[i] * bars[j]).is_zero();
        }
    std::vector<int> indeg(k, 0);
    std::vector<std::vector<int>> succ(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !ok[i][j]) {  // i must precede j
                succ[i].push_back(j);
                ++indeg[j];
            }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < k; ++i)
        if (!indeg[i]) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        order.push_back(i);
        for (int j : succ[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    if (static_cast<int>(order.size()) != k)
        throw std::runtime_error("order_tableaux: no valid tableau order for " + lam.to_string());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < a; ++b)
            if (!ok[order[a]][order[b]])
                throw std::runtime_error("order_tableaux: ordering verification failed for " + lam.to_string());
    OrderedTableaux out;
    for (int i : order) {
        out.tableaux.push_back(tabs[i]);
        out.sym.push_back(std::move(sym[i]));
        out.bar_sym.push_back(std::move(bars[i]));
    }
    return out;
}

struct SnIdempotentPair {
    Partition lambda;
    Partition lambda_conj;
    GAElement e_lambda;  // central primitive idempotent of the lambda-block
    GAElement e_conj;    // same for the conjugate shape (equal when self-conjugate)
};

// e_lambda = 1 - prod_i (1 - e_{T_i}) over the ordered standard tableaux;
// the conjugate idempotent comes from the same order via the transposed
// tableaux and bar symmetrizers.
inline SnIdempotentPair sn_central_idempotent_pair(const Partition& lam, const GroupTable& g, const FieldSpec& field) {
    if (g.kind() != GroupKind::Sn || g.degree() != lam.sum())
        throw std::invalid_argument("sn_central_idempotent_pair: need the S_n table of matching degree");
    if (field.p <= static_cast<uint32_t>(g.degree()))
        throw std::invalid_argument("sn_central_idempotent_pair: semisimplicity needs p > n");
    auto ord = order_tableaux(lam, g, field);
    GAElement one = GAElement::one(g, field);
    GAElement P = one, Q = one;
    for (size_t i = 0; i < ord.sym.size(); ++i) {
        P = P * (one - ord.sym[i]);
        Q = Q * (one - ord.bar_sym[i]);
    }
    return {lam, conjugate(lam), one - P, one - Q};
}

// View an element of F_p S_n supported on even permutations as an element of
// F_p A_n; throws if an odd permutation carries a nonzero coefficient.
inline GAElement restrict_to_an(const GAElement& a) {
    const GroupTable& sn = a.group();
    if (sn.kind() != GroupKind::Sn) throw std::invalid_argument("restrict_to_an: element is not over S_n");
    const GroupTable& an = GroupTable::get(GroupKind::An, sn.degree());
    GAElement out(an, a.field());
    for (int i = 0; i < sn.size(); ++i) {
        uint32_t v = a.coeff(i);
        if (!v) continue;
        const Permutation& g = sn.element(i);
        if (sign(g) < 0)
            throw std::runtime_error("restrict_to_an: nonzero coefficient on the odd permutation " + cycle_string(g));
        out.set_coeff(an.rank_of(g), v);
    }
    return out;
}

// Central primitive idempotent of F_q A_n for a conjugate pair {lam, lam'}:
// the restriction of e_lam + e_lam'.
inline GAElement an_pair_idempotent(const Partition& lam, const GroupTable& an, const FieldSpec& field) {
    if (an.kind() != GroupKind::An || an.degree() != lam.sum())
        throw std::invalid_argument("an_pair_idempotent: need the A_n table of matching degree");
    if (is_self_conjugate(lam))
        throw std::invalid_argument("an_pair_idempotent: " + lam.to_string() + " is self-conjugate");
    const GroupTable& sn = GroupTable::get(GroupKind::Sn, an.degree());
    auto pr = sn_central_idempotent_pair(lam, sn, field);
    return restrict_to_an(pr.e_lambda + pr.e_conj);
}

// For self-conjugate lam, e_lam is supported on A_n; its restriction is the
// central primitive idempotent when the block stays simple (p_lambda a
// non-square), and the sum of the two split idempotents otherwise.
inline GAElement an_selfconj_restriction(const Partition& lam, const GroupTable& an, const FieldSpec& field) {
    if (an.kind() != GroupKind::An || an.degree() != lam.sum())
        throw std::invalid_argument("an_selfconj_restriction: need the A_n table of matching degree");
    if (!is_self_conjugate(lam))
        throw std::invalid_argument("an_selfconj_restriction: " + lam.to_string() + " is not self-conjugate");
    const GroupTable& sn = GroupTable::get(GroupKind::Sn, an.degree());
    auto pr = sn_central_idempotent_pair(lam, sn, field);
    return restrict_to_an(pr.e_lambda);
}

// (1/|H|) sum_{h in H} h, the idempotent projecting onto H-invariants.
inline GAElement subgroup_average(const GroupTable& g, const FieldSpec& field, const Subgroup& H) {
    GAElement out(g, field);
    Fp inv = inverse(Fp(static_cast<long long>(H.size()), field.p));
    for (int h : H) out.set_coeff(h, inv.v);
    return out;
}

inline bool is_idempotent(const GAElement& e) { return (e * e) == e; }

// An element is central iff its coefficients are constant on conjugacy classes.
inline bool is_central(const GAElement& e) {
    for (const auto& cls : e.group().classes()) {
        uint32_t v = e.coeff(cls.members.front());
        for (int m : cls.members)
            if (e.coeff(m) != v) return false;
    }
    return true;
}

// Rows g·e for all g in enumeration order; the row space is the ideal (F_p G)e.
inline FpMatrix ideal_row_matrix(const GAElement& e) {
    const GroupTable& g = e.group();
    FpMatrix m(e.field().p, g.size());
    for (int i = 0; i < g.size(); ++i) {
        std::vector<uint32_t> row(g.size());
        int gi_inv = g.inv(i);
        for (int u = 0; u < g.size(); ++u) row[u] = e.coeff(g.mul(gi_inv, u));
        m.add_row(std::move(row));
    }
    return m;
}

inline size_t ideal_dimension(const GAElement& e) { return rank(ideal_row_matrix(e)); }

struct EssentialityReport {
    bool essential = false;
    bool has_witness = false;
    Subgroup witness;  // when not essential: a nontrivial H with e·avg(H) != 0
};

// e is essential iff e·avg(H) = 0 for every nontrivial subgroup H.  Prime
// order subgroups suffice: any nontrivial H contains some K of prime order,
// and avg(K)·avg(H) = avg(H), so e·avg(K) = 0 forces e·avg(H) = 0.
inline EssentialityReport essentiality(const GAElement& e) {
    for (const auto& H : prime_order_subgroups(e.group()))
        if (!(e * subgroup_average(e.group(), e.field(), H)).is_zero())
            return {false, true, H};
    return {true, false, {}};
}

// The same decision brute-forced over the whole subgroup lattice (for
// cross-checks on small groups).
inline EssentialityReport essentiality_full(const GAElement& e) {
    for (const auto& H : all_subgroups(e.group())) {
        if (H.size() < 2) continue;
        if (!(e * subgroup_average(e.group(), e.field(), H)).is_zero())
            return {false, true, H};
    }
    return {true, false, {}};
}

}  // namespace symcodes
