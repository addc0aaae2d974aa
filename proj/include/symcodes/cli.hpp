#pragma once
// Implementations of the command-line subcommands as pure functions from a
// validated configuration to text (or JSON) on a stream, so tests can drive
// them without spawning processes.  Exit codes: 0 success, 2 unusable
// configuration or selector, 3 budget exceeded (partial/uncertified result).
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chars.hpp"
#include "codes.hpp"
#include "decompose.hpp"
#include "ffield.hpp"
#include "galg.hpp"
#include "partition.hpp"
#include "perm.hpp"

namespace symcodes {

struct RunConfig {
    GroupKind group = GroupKind::An;
    int n = 0;
    uint32_t p = 0;
    uint32_t f = 1;
    std::string selector;  // "3,1" or "2,2+"; empty = all blocks
    bool json = false;
    bool verbose = false;
    uint64_t threshold = 100'000'000;  // exhaustive-enumeration cutoff, in codewords
    uint64_t samples = 200'000;
    uint64_t seed = 1;
};

inline GroupKind parse_group(const std::string& s) {
    if (s == "sn" || s == "Sn" || s == "SN") return GroupKind::Sn;
    if (s == "an" || s == "An" || s == "AN") return GroupKind::An;
    throw std::invalid_argument("group must be 'sn' or 'an', got '" + s + "'");
}

struct BlockSelector {
    Partition lambda;
    int split = 0;
};

// "3,1" -> shape (3,1); "2,2+" / "2,2-" -> a half of a split block.
inline BlockSelector parse_block_selector(const std::string& s) {
    std::string body = s;
    int split = 0;
    if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
        split = body.back() == '+' ? +1 : -1;
        body.pop_back();
    }
    try {
        std::vector<int> parts;
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            size_t used = 0;
            std::string piece = body.substr(pos, comma - pos);
            parts.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw std::invalid_argument("trailing junk");
            pos = comma + 1;
        }
        return {Partition(std::move(parts)), split};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad block selector '" + s + "' (expected e.g. \"3,1\" or \"2,2+\")");
    }
}

inline FieldSpec field_of(const RunConfig& cfg) { return FieldSpec{cfg.p, cfg.f}; }

inline void validate(const RunConfig& cfg) {
    if (cfg.n < 3 || cfg.n > 7) throw std::invalid_argument("n must be in [3,7], got " + std::to_string(cfg.n));
    field_of(cfg).validate();
    if (cfg.p <= static_cast<uint32_t>(cfg.n))
        throw std::invalid_argument("semisimplicity needs p > n (got p=" + std::to_string(cfg.p) +
                                    ", n=" + std::to_string(cfg.n) + ")");
}

inline std::string algebra_name(const RunConfig& cfg) {
    return Decomposition::block_field_name(field_of(cfg), 1) + "[" + group_name(cfg.group, cfg.n) + "]";
}

namespace detail {

inline std::string block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::SnSimple: return "simple";
        case BlockKind::Pair: return "pair";
        case BlockKind::SelfConjMerged: return "merged";
        case BlockKind::SplitPlus: return "split+";
        case BlockKind::SplitMinus: return "split-";
    }
    return "?";
}

inline nlohmann::json block_info_json(const BlockInfo& b) {
    return {{"label", b.label()},          {"lambda", b.lambda.parts},
            {"kind", block_kind_name(b.kind)}, {"d_lambda", b.d_lambda},
            {"matrix_size", b.matrix_size},    {"field_degree", b.field_degree},
            {"dim", b.fq_dimension}};
}

inline nlohmann::json element_coeff_json(const GAElement& e) {
    std::vector<uint32_t> coeffs(e.size());
    for (int i = 0; i < e.size(); ++i) coeffs[i] = e.coeff(i);
    return nlohmann::json(coeffs);
}

inline nlohmann::json algebra_json(const RunConfig& cfg) {
    return {{"group", group_name(cfg.group, cfg.n)}, {"n", cfg.n}, {"p", cfg.p}, {"f", cfg.f}};
}

// Blocks the selector matches, or all blocks for an empty selector.
inline std::vector<int> selected_blocks(const Decomposition& dec, const std::string& selector) {
    if (selector.empty()) {
        std::vector<int> all(dec.blocks.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }
    BlockSelector sel = parse_block_selector(selector);
    return {find_block(dec, sel.lambda, sel.split)};
}

}  // namespace detail

inline int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    Decomposition dec = decompose(cfg.group, cfg.n, field_of(cfg));
    const GroupTable& g = GroupTable::get(cfg.group, cfg.n);
    if (cfg.json) {
        nlohmann::json j{{"algebra", detail::algebra_json(cfg)},
                         {"summary", dec.summary()},
                         {"order", g.size()},
                         {"blocks", nlohmann::json::array()}};
        for (const auto& b : dec.blocks) j["blocks"].push_back(detail::block_info_json(b));
        out << j.dump(2) << "\n";
        return 0;
    }
    out << algebra_name(cfg) << " = " << dec.summary() << "\n";
    long long total = 0;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        const auto& b = dec.blocks[i];
        out << "block " << (i + 1) << ": " << b.label() << " matrix_size " << b.matrix_size
            << " field " << Decomposition::block_field_name(dec.field, b.field_degree)
            << " dim " << b.fq_dimension << "\n";
        total += b.fq_dimension;
    }
    out << "total dim " << total << " = |" << group_name(cfg.group, cfg.n) << "|\n";
    return 0;
}

inline int cmd_idempotents(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    Decomposition dec = decompose(cfg.group, cfg.n, field_of(cfg));
    std::vector<int> picks = detail::selected_blocks(dec, cfg.selector);
    std::vector<BlockIdempotent> blocks;
    if (picks.size() == dec.blocks.size()) {
        blocks = block_idempotents(cfg.group, cfg.n, dec.field);
    } else {
        for (int i : picks) blocks.push_back(single_block_idempotent(dec, i));
    }
    if (cfg.json) {
        nlohmann::json j{{"algebra", detail::algebra_json(cfg)}, {"blocks", nlohmann::json::array()}};
        for (const auto& b : blocks) {
            nlohmann::json jb = detail::block_info_json(b.info);
            jb["coeffs"] = detail::element_coeff_json(b.element);
            j["blocks"].push_back(std::move(jb));
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "central primitive idempotents of " << algebra_name(cfg) << "\n";
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        size_t index = cfg.selector.empty() ? i : static_cast<size_t>(picks[i]);
        out << "e_" << (index + 1) << " " << b.info.label() << " = " << element_to_string(b.element) << "\n";
        if (cfg.verbose && b.element.size() <= 120)
            out << "  ideal dim " << ideal_dimension(b.element) << " (block dim " << b.info.fq_dimension << ")\n";
    }
    return 0;
}

inline int cmd_code(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    if (cfg.selector.empty()) throw std::invalid_argument("code: a --lambda block selector is required");
    if (cfg.f != 1) throw std::invalid_argument("code: codes are computed over prime fields (f = 1)");
    Decomposition dec = decompose(cfg.group, cfg.n, field_of(cfg));
    int pick = detail::selected_blocks(dec, cfg.selector)[0];
    BlockIdempotent b = single_block_idempotent(dec, pick);
    LinearCode code = ideal_to_code(b.element);
    ScanBudget budget{cfg.threshold, cfg.samples};
    bool enumerable = detail::pow_checked(code.p, code.k(), budget.max_words).has_value();
    std::map<int, uint64_t> wd;
    DistanceResult dist;
    if (enumerable) {
        wd = weight_distribution(code, budget);
        dist.certified = true;
        dist.examined = 0;
        for (const auto& [w, c] : wd) {
            dist.examined += c;
            if (w > 0 && (dist.distance == 0 || w < dist.distance)) dist.distance = w;
        }
        --dist.examined;  // don't count the zero word
    } else {
        dist = min_distance(code, budget, cfg.seed);
    }
    auto best = best_known_distance(code.length, code.k(), code.p);
    const GroupTable& g = GroupTable::get(cfg.group, cfg.n);
    if (cfg.json) {
        nlohmann::json j{{"algebra", detail::algebra_json(cfg)},
                         {"block", detail::block_info_json(b.info)},
                         {"length", code.length},
                         {"k", code.k()},
                         {"distance", dist.distance},
                         {"certified", dist.certified},
                         {"generator", code.gen.rows}};
        nlohmann::json coords = nlohmann::json::array();
        for (int i = 0; i < g.size(); ++i) coords.push_back(cycle_string(g.element(i)));
        j["coordinates"] = std::move(coords);
        if (!wd.empty()) {
            nlohmann::json jw = nlohmann::json::array();
            for (const auto& [w, c] : wd) jw.push_back({w, c});
            j["weight_distribution"] = std::move(jw);
        }
        j["best_known_distance"] = best ? nlohmann::json(*best) : nlohmann::json(nullptr);
        out << j.dump(2) << "\n";
        return dist.certified ? 0 : 3;
    }
    out << "block " << b.info.label() << " of " << algebra_name(cfg) << "\n";
    if (dist.certified)
        out << "code [" << code.length << ", " << code.k() << ", " << dist.distance << "] over F_"
            << code.p << " (certified)\n";
    else
        out << "code [" << code.length << ", " << code.k() << ", <=" << dist.distance << "] over F_"
            << code.p << " (uncertified upper bound)\n";
    out << "generator matrix:\n" << matrix_to_text(code.gen);
    out << "coordinates:";
    if (g.size() <= 60)
        for (int i = 0; i < g.size(); ++i) out << " " << cycle_string(g.element(i));
    else
        out << " elements of " << g.name() << " in lexicographic one-line order";
    out << "\n";
    if (!wd.empty()) {
        out << "weight distribution:";
        for (const auto& [w, c] : wd) out << " " << w << "^" << c;
        out << "\n";
    }
    if (best)
        out << "best known distance [" << code.length << "," << code.k() << "]_" << code.p << ": "
            << *best << "\n";
    return dist.certified ? 0 : 3;
}

inline int cmd_distance(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    if (cfg.selector.empty()) throw std::invalid_argument("distance: a --lambda block selector is required");
    if (cfg.f != 1) throw std::invalid_argument("distance: codes are computed over prime fields (f = 1)");
    Decomposition dec = decompose(cfg.group, cfg.n, field_of(cfg));
    int pick = detail::selected_blocks(dec, cfg.selector)[0];
    BlockIdempotent b = single_block_idempotent(dec, pick);
    LinearCode code = ideal_to_code(b.element);
    DistanceResult dist = min_distance(code, ScanBudget{cfg.threshold, cfg.samples}, cfg.seed);
    if (cfg.json) {
        nlohmann::json j{{"algebra", detail::algebra_json(cfg)},
                         {"block", detail::block_info_json(b.info)},
                         {"length", code.length},
                         {"k", code.k()},
                         {"distance", dist.distance},
                         {"certified", dist.certified},
                         {"examined", dist.examined}};
        out << j.dump(2) << "\n";
        return dist.certified ? 0 : 3;
    }
    out << "block " << b.info.label() << " of " << algebra_name(cfg) << "\n";
    out << "code [" << code.length << ", " << code.k() << "] over F_" << code.p << "\n";
    if (dist.certified)
        out << "distance " << dist.distance << " (certified, examined " << dist.examined << ")\n";
    else
        out << "distance <= " << dist.distance << " (uncertified, sampled " << dist.examined << ")\n";
    return dist.certified ? 0 : 3;
}

inline int cmd_essential(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    Decomposition dec = decompose(cfg.group, cfg.n, field_of(cfg));
    std::vector<int> picks = detail::selected_blocks(dec, cfg.selector);
    const GroupTable& g = GroupTable::get(cfg.group, cfg.n);
    nlohmann::json jblocks = nlohmann::json::array();
    if (!cfg.json) out << "essentiality over " << algebra_name(cfg) << "\n";
    for (int i : picks) {
        BlockIdempotent b = single_block_idempotent(dec, i);
        EssentialityReport rep = essentiality(b.element);
        if (cfg.json) {
            nlohmann::json jb = detail::block_info_json(b.info);
            jb["essential"] = rep.essential;
            if (rep.has_witness) {
                nlohmann::json members = nlohmann::json::array();
                for (int m : rep.witness) members.push_back(cycle_string(g.element(m)));
                jb["witness"] = {{"order", rep.witness.size()}, {"elements", std::move(members)}};
            } else {
                jb["witness"] = nullptr;
            }
            jblocks.push_back(std::move(jb));
        } else {
            out << "block " << b.info.label() << ": ";
            if (rep.essential) {
                out << "essential\n";
            } else {
                out << "not essential, witness H of order " << rep.witness.size() << ":";
                for (int m : rep.witness) out << " " << cycle_string(g.element(m));
                out << "\n";
            }
        }
    }
    if (cfg.json) {
        nlohmann::json j{{"algebra", detail::algebra_json(cfg)}, {"blocks", std::move(jblocks)}};
        out << j.dump(2) << "\n";
    }
    return 0;
}

inline int cmd_chartable(const RunConfig& cfg, std::ostream& out) {
    if (cfg.group != GroupKind::An)
        throw std::invalid_argument("chartable: only A_n tables are supported (--group an)");
    if (cfg.n < 3 || cfg.n > 7) throw std::invalid_argument("n must be in [3,7], got " + std::to_string(cfg.n));
    AnCharacterTable tab = an_character_table(cfg.n);
    if (cfg.json) {
        nlohmann::json j{{"group", group_name(GroupKind::An, cfg.n)},
                         {"n", cfg.n},
                         {"classes", nlohmann::json::array()},
                         {"rows", nlohmann::json::array()}};
        for (const auto& c : tab.cols)
            j["classes"].push_back({{"type", c.type.parts}, {"split", c.split}, {"size", c.size}});
        for (size_t r = 0; r < tab.rows.size(); ++r) {
            const auto& row = tab.rows[r];
            nlohmann::json values = nlohmann::json::array();
            for (const auto& q : tab.values[r]) values.push_back({q.u, q.v});
            j["rows"].push_back({{"lambda", row.lambda.parts},
                                 {"split", row.split},
                                 {"degree", row.degree},
                                 {"disc", row.disc},
                                 {"values", std::move(values)}});
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "character table of " << group_name(GroupKind::An, cfg.n) << "\n";
    out << "classes:";
    for (size_t c = 0; c < tab.cols.size(); ++c)
        out << (c ? " | " : " ") << tab.cols[c].label() << " size " << tab.cols[c].size;
    out << "\n";
    for (size_t r = 0; r < tab.rows.size(); ++r) {
        out << tab.rows[r].label() << ":";
        for (const auto& q : tab.values[r]) out << " " << quad_half_to_string(q, tab.rows[r].disc);
        out << "\n";
    }
    return 0;
}

inline int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out) {
    if (command == "decompose") return cmd_decompose(cfg, out);
    if (command == "idempotents") return cmd_idempotents(cfg, out);
    if (command == "code") return cmd_code(cfg, out);
    if (command == "distance") return cmd_distance(cfg, out);
    if (command == "essential") return cmd_essential(cfg, out);
    if (command == "chartable") return cmd_chartable(cfg, out);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace symcodes
