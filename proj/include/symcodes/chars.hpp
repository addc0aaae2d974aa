#pragma once
// Murnaghan-Nakayama character values for S_n, the ordinary character table
// of A_n with exact entries (split rows take values (u + v*sqrt(p_lambda))/2),
// and the character-formula route to central primitive idempotents of F_p A_n
// — the only route that separates the two halves of a split block.
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffield.hpp"
#include "galg.hpp"
#include "partition.hpp"
#include "perm.hpp"

namespace symcodes {
namespace detail {

// Border-strip removal over beta numbers (first-column hook lengths).
inline long long mn_rec(std::vector<int>& beta, const std::vector<int>& mu, size_t t_idx) {
    if (t_idx == mu.size()) return 1;
    int t = mu[t_idx];
    long long acc = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < t) continue;
        int target = b - t;
        bool occupied = false;
        int between = 0;
        for (int x : beta) {
            if (x == target) {
                occupied = true;
                break;
            }
            if (x > target && x < b) ++between;
        }
        if (occupied) continue;
        beta[i] = target;
        long long sub = mn_rec(beta, mu, t_idx + 1);
        beta[i] = b;
        acc += (between % 2) ? -sub : sub;
    }
    return acc;
}

inline uint64_t factorial_u64(int n) {
    uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<uint64_t>(k);
    return f;
}

}  // namespace detail

// chi_lambda on the class of cycle type mu in S_n.
inline long long mn_character(const Partition& lam, const Partition& mu) {
    if (lam.sum() != mu.sum()) throw std::invalid_argument("mn_character: partitions of different integers");
    int k = lam.rows();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lam[i] + (k - 1 - i);
    return detail::mn_rec(beta, mu.parts, 0);
}

// z_mu = prod_j j^{m_j} m_j!, the centralizer order of the class mu in S_n.
inline uint64_t centralizer_order(const Partition& mu) {
    uint64_t z = 1, runfact = 1;
    int run = 0;
    for (int i = 0; i < mu.rows(); ++i) {
        z *= static_cast<uint64_t>(mu[i]);
        ++run;
        runfact *= static_cast<uint64_t>(run);
        if (i + 1 == mu.rows() || mu[i + 1] != mu[i]) {
            z *= runfact;
            run = 0;
            runfact = 1;
        }
    }
    return z;
}

inline uint64_t sn_class_size(const Partition& mu) {
    return detail::factorial_u64(mu.sum()) / centralizer_order(mu);
}

// Exact character value (u + v*sqrt(D))/2, D fixed per row (the discriminant
// p_lambda of a split row); integer-valued rows have v = 0 and u even.
struct QuadHalf {
    long long u = 0;
    long long v = 0;
    bool operator==(const QuadHalf&) const = default;
};

inline std::string quad_half_to_string(const QuadHalf& q, long long disc) {
    if (q.v == 0) return std::to_string(q.u / 2);
    std::string root = "sqrt(" + std::to_string(disc) + ")";
    long long av = q.v < 0 ? -q.v : q.v;
    std::string vs = av == 1 ? root : std::to_string(av) + root;
    return "(" + std::to_string(q.u) + (q.v > 0 ? "+" : "-") + vs + ")/2";
}

struct AnTableRow {
    Partition lambda;  // canonical shape label (first of {lambda, lambda'} in enumeration order)
    int split = 0;     // 0: restriction of a conjugate pair; +1/-1: half of a self-conjugate shape
    long long degree = 0;
    long long disc = 0;  // p_lambda for split rows, 0 otherwise

    std::string label() const { return lambda.to_string() + (split > 0 ? "+" : split < 0 ? "-" : ""); }
};

struct AnTableCol {
    Partition type;
    int split = 0;
    uint64_t size = 0;

    std::string label() const { return type.to_string() + (split > 0 ? "+" : split < 0 ? "-" : ""); }
};

struct AnCharacterTable {
    int n = 0;
    std::vector<AnTableRow> rows;
    std::vector<AnTableCol> cols;
    std::vector<std::vector<QuadHalf>> values;  // rows x cols

    int col_index(const Partition& type, int split) const {
        for (size_t i = 0; i < cols.size(); ++i)
            if (cols[i].type == type && cols[i].split == split) return static_cast<int>(i);
        throw std::invalid_argument("AnCharacterTable: no class " + type.to_string() +
                                    (split > 0 ? "+" : split < 0 ? "-" : ""));
    }
    // Accepts either member of a conjugate pair for split == 0.
    int row_index(const Partition& lam, int split) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].lambda == lam && rows[i].split == split) return static_cast<int>(i);
        if (split == 0) {
            Partition c = conjugate(lam);
            for (size_t i = 0; i < rows.size(); ++i)
                if (rows[i].lambda == c && rows[i].split == 0) return static_cast<int>(i);
        }
        throw std::invalid_argument("AnCharacterTable: no character row " + lam.to_string() +
                                    (split > 0 ? "+" : split < 0 ? "-" : ""));
    }
};

// The ordinary (characteristic-zero) character table of A_n.  Rows: one per
// conjugate pair {lambda, lambda'} (the common restriction), two per
// self-conjugate lambda, in shape enumeration order.  Columns: even cycle
// types, identity first, a split class's + half before its - half.  On the
// two classes of the diagonal-hook type h(lambda) the split rows take the
// values (eps ± sqrt(p_lambda))/2; everywhere else they are half the S_n
// value, which is then necessarily even.
inline AnCharacterTable an_character_table(int n) {
    if (n < 3 || n > 7) throw std::invalid_argument("an_character_table: n must be in [3,7]");
    AnCharacterTable t;
    t.n = n;
    auto parts = partitions_of(n);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const Partition& mu = *it;
        if ((n - mu.rows()) % 2 != 0) continue;  // odd cycle type
        uint64_t sz = sn_class_size(mu);
        if (splits_in_an(mu)) {
            t.cols.push_back({mu, +1, sz / 2});
            t.cols.push_back({mu, -1, sz / 2});
        } else {
            t.cols.push_back({mu, 0, sz});
        }
    }
    std::set<Partition> done;
    for (const Partition& lam : parts) {
        if (done.count(lam)) continue;
        Partition conj = conjugate(lam);
        done.insert(lam);
        done.insert(conj);
        if (lam == conj) {
            auto sc = self_conj_data(lam);
            long long d = static_cast<long long>(dimension(lam));
            if (d % 2 != 0) throw std::runtime_error("an_character_table: odd degree for self-conjugate " + lam.to_string());
            Partition hooks(sc.diagonal_hooks);
            long long eps = sc.p_lambda > 0 ? 1 : -1;
            if (mn_character(lam, hooks) != eps)
                throw std::runtime_error("an_character_table: character value on the hook class is not eps");
            for (int s : {+1, -1}) {
                std::vector<QuadHalf> vals;
                for (const auto& col : t.cols) {
                    if (col.type == hooks) {
                        if (col.split == 0) throw std::runtime_error("an_character_table: hook class does not split");
                        vals.push_back({eps, static_cast<long long>(s * col.split)});
                    } else {
                        long long chi = mn_character(lam, col.type);
                        if (chi % 2 != 0)
                            throw std::runtime_error("an_character_table: odd value off the hook class for " + lam.to_string());
                        vals.push_back({chi, 0});
                    }
                }
                t.rows.push_back({lam, s, d / 2, sc.p_lambda});
                t.values.push_back(std::move(vals));
            }
        } else {
            std::vector<QuadHalf> vals;
            for (const auto& col : t.cols) vals.push_back({2 * mn_character(lam, col.type), 0});
            t.rows.push_back({lam, 0, static_cast<long long>(dimension(lam)), 0});
            t.values.push_back(std::move(vals));
        }
    }
    return t;
}

// e_chi = (chi(1)/|A_n|) sum_g chi(g^{-1}) g reduced mod p.  Split rows need
// sqrt(p_lambda) in F_p; if it does not exist the block does not split over
// F_p and this throws std::domain_error.
inline GAElement idempotent_from_character(const AnCharacterTable& tab, int row_idx,
                                           const GroupTable& an, const FieldSpec& field) {
    if (an.kind() != GroupKind::An || an.degree() != tab.n)
        throw std::invalid_argument("idempotent_from_character: group does not match the table");
    const AnTableRow& row = tab.rows.at(row_idx);
    uint32_t p = field.p;
    Fp root(0, p);
    if (row.split != 0) {
        try {
            root = sqrt_mod(Fp(row.disc, p));
        } catch (const std::domain_error&) {
            throw std::domain_error("idempotent_from_character: " + row.label() + " needs sqrt(" +
                                    std::to_string(row.disc) + ") mod " + std::to_string(p) +
                                    ", which does not exist");
        }
    }
    std::vector<Fp> col_val;
    col_val.reserve(tab.cols.size());
    for (size_t c = 0; c < tab.cols.size(); ++c) {
        const QuadHalf& q = tab.values[row_idx][c];
        col_val.push_back((Fp(q.u, p) + Fp(q.v, p) * root) / Fp(2, p));
    }
    std::vector<int> col_of_class;
    for (const auto& cls : an.classes()) col_of_class.push_back(tab.col_index(cls.type, cls.split));
    Fp scale = Fp(row.degree, p) / Fp(static_cast<long long>(detail::factorial_u64(tab.n) / 2 % p), p);
    GAElement e(an, field);
    for (int g = 0; g < an.size(); ++g) {
        int cls = an.class_of(an.inv(g));
        e.set_coeff(g, (scale * col_val[col_of_class[cls]]).v);
    }
    if (!is_idempotent(e) || !is_central(e))
        throw std::runtime_error("idempotent_from_character: result failed verification for " + row.label());
    return e;
}

struct AnSplitPair {
    GAElement e_plus;
    GAElement e_minus;
};

// Both central primitive idempotents of the split block of a self-conjugate
// shape.  (The non-split blocks are reachable without characters, by
// restricting S_n idempotents.)
inline AnSplitPair an_split_idempotents(const Partition& lam, const GroupTable& an, const FieldSpec& field) {
    AnCharacterTable tab = an_character_table(an.degree());
    return {idempotent_from_character(tab, tab.row_index(lam, +1), an, field),
            idempotent_from_character(tab, tab.row_index(lam, -1), an, field)};
}

}  // namespace symcodes
