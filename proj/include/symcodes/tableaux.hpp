#pragma once
// Standard Young tableaux of a given shape, their row/column stabilizers
// (as subgroups of S_n), and the classification of partitions that drives
// the block structure of F_q A_n.
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffield.hpp"
#include "partition.hpp"
#include "perm.hpp"

namespace symcodes {

// A filling of the Young diagram of `shape` with 1..n.  rows[i][j] is the
// entry in row i (0-based), column j.
struct YoungTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    YoungTableau(Partition s, std::vector<std::vector<int>> r) : shape(std::move(s)), rows(std::move(r)) {
        if (static_cast<int>(rows.size()) != shape.rows())
            throw std::invalid_argument("YoungTableau: row count does not match shape");
        std::vector<bool> seen(shape.sum(), false);
        for (int i = 0; i < shape.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != shape[i])
                throw std::invalid_argument("YoungTableau: row length does not match shape");
            for (int v : rows[i]) {
                if (v < 1 || v > shape.sum() || seen[v - 1])
                    throw std::invalid_argument("YoungTableau: entries must be a permutation of 1..n");
                seen[v - 1] = true;
            }
        }
    }

    int entry(int i, int j) const { return rows[i][j]; }  // 0-based

    // Standard: rows increase left to right, columns increase top to bottom.
    bool is_standard() const {
        for (int i = 0; i < shape.rows(); ++i)
            for (int j = 0; j < shape[i]; ++j) {
                if (j + 1 < shape[i] && rows[i][j] >= rows[i][j + 1]) return false;
                if (i + 1 < shape.rows() && j < shape[i + 1] && rows[i][j] >= rows[i + 1][j]) return false;
            }
        return true;
    }

    YoungTableau transpose() const {
        Partition conj = conjugate(shape);
        std::vector<std::vector<int>> t(conj.rows());
        for (int i = 0; i < conj.rows(); ++i) t[i].resize(conj[i]);
        for (int i = 0; i < shape.rows(); ++i)
            for (int j = 0; j < shape[i]; ++j) t[j][i] = rows[i][j];
        return YoungTableau(std::move(conj), std::move(t));
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < shape.rows(); ++i) {
            if (i) s += " / ";
            for (int j = 0; j < shape[i]; ++j) {
                if (j) s += ",";
                s += std::to_string(rows[i][j]);
            }
        }
        return s;
    }

    bool operator==(const YoungTableau&) const = default;
};

// All standard tableaux of the given shape, enumerated by placing 1..n in
// order and trying rows top to bottom (so the row-major reading is
// lexicographically increasing across the output).
inline std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
    int n = shape.sum();
    std::vector<std::vector<int>> rows(shape.rows());
    std::vector<int> filled(shape.rows(), 0);
    std::vector<YoungTableau> out;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            std::vector<std::vector<int>> copy(shape.rows());
            for (int i = 0; i < shape.rows(); ++i)
                copy[i].assign(rows[i].begin(), rows[i].end());
            out.emplace_back(shape, std::move(copy));
            return;
        }
        for (int i = 0; i < shape.rows(); ++i) {
            if (filled[i] >= shape[i]) continue;                       // row full
            if (i > 0 && filled[i] >= filled[i - 1]) continue;         // column constraint
            rows[i].push_back(next);
            ++filled[i];
            self(self, next + 1);
            --filled[i];
            rows[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// All permutations preserving each row of T setwise, as ranks in `g`
// (which must be an S_n table, since odd permutations occur).
inline std::vector<int> row_stabilizer(const YoungTableau& T, const GroupTable& g) {
    if (g.kind() != GroupKind::Sn || g.degree() != T.shape.sum())
        throw std::invalid_argument("row_stabilizer: need the S_n table of matching degree");
    int n = T.shape.sum();
    std::vector<int> out;
    // build by taking all products of per-row permutations
    std::vector<Permutation> acc{Permutation::identity(n)};
    for (const auto& row : T.rows) {
        std::vector<int> cells(row);
        std::sort(cells.begin(), cells.end());
        std::vector<Permutation> next;
        std::vector<int> perm = cells;
        do {
            Permutation p = Permutation::identity(n);
            for (size_t k = 0; k < cells.size(); ++k) p.images[cells[k] - 1] = static_cast<uint8_t>(perm[k]);
            for (const auto& a : acc) next.push_back(compose(a, p));
        } while (std::next_permutation(perm.begin(), perm.end()));
        acc = std::move(next);
    }
    out.reserve(acc.size());
    for (const auto& p : acc) out.push_back(g.rank_of(p));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> column_stabilizer(const YoungTableau& T, const GroupTable& g) {
    return row_stabilizer(T.transpose(), g);
}

// How the S_n block of shape lambda behaves on restriction to A_n.
enum class PartitionClass {
    ConjugatePair,    // lambda != lambda': pairs with its conjugate
    SelfConjMerged,   // lambda = lambda', p_lambda not a square in F_q
    SelfConjSplit,    // lambda = lambda', p_lambda a square in F_q
};

inline PartitionClass classify_partition(const Partition& lam, const FieldSpec& field) {
    if (!is_self_conjugate(lam)) return PartitionClass::ConjugatePair;
    auto sc = self_conj_data(lam);
    Fp p_lam(sc.p_lambda, field.p);
    return is_square(p_lam, field) ? PartitionClass::SelfConjSplit : PartitionClass::SelfConjMerged;
}

}  // namespace symcodes
