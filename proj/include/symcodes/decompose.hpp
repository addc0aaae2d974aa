#pragma once
// The Wedderburn-Artin decomposition of F_q S_n and F_q A_n for p > n
// (semisimple range), with the full central primitive idempotent list per
// algebra.  S_n: one block M_d(F_q) per shape.  A_n: conjugate pairs give
// M_d(F_q); a self-conjugate shape gives M_{d/2}(F_{q^2}) when p_lambda is
// a non-square in F_q and two copies of M_{d/2}(F_q) when it is a square.
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chars.hpp"
#include "ffield.hpp"
#include "galg.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "tableaux.hpp"

namespace symcodes {

enum class BlockKind {
    SnSimple,        // S_n: M_d(F_q)
    Pair,            // A_n: {lambda, lambda'} -> M_d(F_q)
    SelfConjMerged,  // A_n: M_{d/2}(F_{q^2})
    SplitPlus,       // A_n: first half of a split block, M_{d/2}(F_q)
    SplitMinus,      // A_n: second half
};

struct BlockInfo {
    BlockKind kind = BlockKind::SnSimple;
    Partition lambda;             // canonical label (first of a pair in enumeration order)
    long long d_lambda = 0;       // dimension of the S_n irreducible of shape lambda
    long long matrix_size = 0;    // m in M_m(F_{q^e})
    int field_degree = 1;         // e in F_{q^e}
    long long fq_dimension = 0;   // block dimension over F_q

    std::string label() const {
        return lambda.to_string() +
               (kind == BlockKind::SplitPlus ? "+" : kind == BlockKind::SplitMinus ? "-" : "");
    }
};

struct Decomposition {
    GroupKind group = GroupKind::Sn;
    int n = 0;
    FieldSpec field;
    std::vector<BlockInfo> blocks;

    std::string summary() const {
        std::string s;
        for (const auto& b : blocks) {
            if (!s.empty()) s += " (+) ";
            s += "M_" + std::to_string(b.matrix_size) + "(" + block_field_name(field, b.field_degree) + ")";
        }
        return s;
    }

    static std::string block_field_name(const FieldSpec& field, int degree) {
        int k = field.f * degree;
        uint64_t q = 1;
        bool fits = true;
        for (int i = 0; i < k && fits; ++i) {
            if (q > UINT64_MAX / field.p) fits = false;
            else q *= field.p;
        }
        if (fits) return "F_" + std::to_string(q);
        return "F_" + std::to_string(field.p) + "^" + std::to_string(k);
    }
};

namespace detail {
inline void check_semisimple_range(int n, const FieldSpec& field) {
    field.validate();
    if (n < 3 || n > 7) throw std::invalid_argument("decompose: n must be in [3,7]");
    if (field.p <= static_cast<uint32_t>(n))
        throw std::invalid_argument("decompose: semisimplicity needs p > n (got p=" +
                                    std::to_string(field.p) + ", n=" + std::to_string(n) + ")");
}
}  // namespace detail

inline Decomposition decompose_sn(int n, const FieldSpec& field) {
    detail::check_semisimple_range(n, field);
    Decomposition dec{GroupKind::Sn, n, field, {}};
    for (const Partition& lam : partitions_of(n)) {
        long long d = static_cast<long long>(dimension(lam));
        dec.blocks.push_back({BlockKind::SnSimple, lam, d, d, 1, d * d});
    }
    return dec;
}

inline Decomposition decompose_an(int n, const FieldSpec& field) {
    detail::check_semisimple_range(n, field);
    Decomposition dec{GroupKind::An, n, field, {}};
    std::map<Partition, bool> done;
    for (const Partition& lam : partitions_of(n)) {
        if (done[lam]) continue;
        Partition conj = conjugate(lam);
        done[lam] = done[conj] = true;
        long long d = static_cast<long long>(dimension(lam));
        if (lam != conj) {
            dec.blocks.push_back({BlockKind::Pair, lam, d, d, 1, d * d});
        } else if (classify_partition(lam, field) == PartitionClass::SelfConjMerged) {
            dec.blocks.push_back({BlockKind::SelfConjMerged, lam, d, d / 2, 2, d * d / 2});
        } else {
            dec.blocks.push_back({BlockKind::SplitPlus, lam, d, d / 2, 1, d * d / 4});
            dec.blocks.push_back({BlockKind::SplitMinus, lam, d, d / 2, 1, d * d / 4});
        }
    }
    return dec;
}

// Resolve a "lambda" or "lambda±" selector against a decomposition; accepts
// either member of a conjugate pair.  Throws with a actionable message when
// the selector and the block structure disagree (e.g. a sign on a non-split
// block, or a missing sign on a split one).
inline int find_block(const Decomposition& dec, const Partition& lam, int split) {
    Partition conj = conjugate(lam);
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        const BlockInfo& b = dec.blocks[i];
        bool shape_match = b.lambda == lam || (b.kind == BlockKind::Pair && b.lambda == conj);
        if (!shape_match) continue;
        if (split == +1 && b.kind == BlockKind::SplitPlus) return static_cast<int>(i);
        if (split == -1 && b.kind == BlockKind::SplitMinus) return static_cast<int>(i);
        if (split == 0 && (b.kind == BlockKind::SnSimple || b.kind == BlockKind::Pair ||
                           b.kind == BlockKind::SelfConjMerged))
            return static_cast<int>(i);
    }
    for (const BlockInfo& b : dec.blocks) {
        bool shape_match = b.lambda == lam || (b.kind == BlockKind::Pair && b.lambda == conj);
        if (!shape_match) continue;
        if (split == 0)
            throw std::invalid_argument("block " + lam.to_string() + " splits; select " +
                                        lam.to_string() + "+ or " + lam.to_string() + "-");
        throw std::invalid_argument("block " + lam.to_string() + " does not split; drop the sign");
    }
    throw std::invalid_argument("no block " + lam.to_string() + " in this decomposition");
}

struct BlockIdempotent {
    BlockInfo info;
    GAElement element;
};

// All central primitive idempotents of F_q S_n, in block order.
inline std::vector<BlockIdempotent> sn_block_idempotents(int n, const FieldSpec& field) {
    const GroupTable& g = GroupTable::get(GroupKind::Sn, n);
    Decomposition dec = decompose_sn(n, field);
    std::map<Partition, GAElement> computed;
    for (const Partition& lam : partitions_of(n)) {
        if (computed.count(lam)) continue;
        auto pr = sn_central_idempotent_pair(lam, g, field);
        computed.emplace(pr.lambda, pr.e_lambda);
        if (!(pr.lambda_conj == pr.lambda)) computed.emplace(pr.lambda_conj, pr.e_conj);
    }
    std::vector<BlockIdempotent> out;
    for (const BlockInfo& b : dec.blocks) out.push_back({b, computed.at(b.lambda)});
    return out;
}

// All central primitive idempotents of F_q A_n, in block order.  A split
// block whose sqrt(p_lambda) does not exist in F_p (possible only for even
// f) cannot be represented with prime-field coefficients; that case throws
// std::domain_error.
inline std::vector<BlockIdempotent> an_block_idempotents(int n, const FieldSpec& field) {
    const GroupTable& an = GroupTable::get(GroupKind::An, n);
    Decomposition dec = decompose_an(n, field);
    std::vector<BlockIdempotent> out;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        const BlockInfo& b = dec.blocks[i];
        switch (b.kind) {
            case BlockKind::Pair:
                out.push_back({b, an_pair_idempotent(b.lambda, an, field)});
                break;
            case BlockKind::SelfConjMerged:
                out.push_back({b, an_selfconj_restriction(b.lambda, an, field)});
                break;
            case BlockKind::SplitPlus: {
                if (i + 1 >= dec.blocks.size() || dec.blocks[i + 1].kind != BlockKind::SplitMinus)
                    throw std::logic_error("an_block_idempotents: split halves out of order");
                auto pr = an_split_idempotents(b.lambda, an, field);
                out.push_back({b, pr.e_plus});
                out.push_back({dec.blocks[i + 1], pr.e_minus});
                ++i;
                break;
            }
            default:
                throw std::logic_error("an_block_idempotents: unexpected block kind");
        }
    }
    return out;
}

inline std::vector<BlockIdempotent> block_idempotents(GroupKind kind, int n, const FieldSpec& field) {
    return kind == GroupKind::Sn ? sn_block_idempotents(n, field) : an_block_idempotents(n, field);
}

// One block's idempotent without computing the rest.
inline BlockIdempotent single_block_idempotent(const Decomposition& dec, int index) {
    const BlockInfo& b = dec.blocks.at(index);
    if (dec.group == GroupKind::Sn) {
        const GroupTable& g = GroupTable::get(GroupKind::Sn, dec.n);
        return {b, sn_central_idempotent_pair(b.lambda, g, dec.field).e_lambda};
    }
    const GroupTable& an = GroupTable::get(GroupKind::An, dec.n);
    switch (b.kind) {
        case BlockKind::Pair:
            return {b, an_pair_idempotent(b.lambda, an, dec.field)};
        case BlockKind::SelfConjMerged:
            return {b, an_selfconj_restriction(b.lambda, an, dec.field)};
        case BlockKind::SplitPlus:
            return {b, an_split_idempotents(b.lambda, an, dec.field).e_plus};
        case BlockKind::SplitMinus:
            return {b, an_split_idempotents(b.lambda, an, dec.field).e_minus};
        default:
            throw std::logic_error("single_block_idempotent: unexpected block kind");
    }
}

inline Decomposition decompose(GroupKind kind, int n, const FieldSpec& field) {
    return kind == GroupKind::Sn ? decompose_sn(n, field) : decompose_an(n, field);
}

}  // namespace symcodes
