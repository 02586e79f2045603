#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "vknot/alexander.hpp"
#include "vknot/flat_moves.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/moves.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

struct SearchBudget {
    int max_chords = 8;        // chord cap during search
    long max_nodes = 200000;   // distinct diagrams discovered
    int max_depth = 24;        // move-sequence length

    bool valid() const { return max_chords > 0 && max_nodes > 0 && max_depth > 0; }
};

inline SearchBudget default_budget(int input_chords) {
    return SearchBudget{input_chords + 2, 200000, 24};
}

enum class Verdict { Trivial, NontrivialCertified, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::NontrivialCertified: return "nontrivial";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

struct SearchStats {
    long nodes = 0;
    int depth = 0;
    long frontier = 0;
};

struct TrivialityResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<Move> trace;        // Trivial: replays from the input to the empty diagram
    std::string witness_name;       // NontrivialCertified
    std::string witness_value;
    SearchStats stats;              // Unknown
};

// Apply the first available R1/R2 removal until none applies.  Each step
// removes at least one chord, so this ends within chord_count steps.
inline std::pair<GaussDiagram, std::vector<Move>> simplify_monotone(const GaussDiagram& g) {
    GaussDiagram cur = g;
    std::vector<Move> trace;
    for (;;) {
        std::vector<Move> moves = enumerate_moves(cur);
        const Move* pick = nullptr;
        for (const Move& m : moves)
            if (m.kind == MoveKind::R1Remove || m.kind == MoveKind::R2Remove) {
                pick = &m;
                break;
            }
        if (!pick) return {cur, trace};
        cur = apply_move(cur, *pick);
        trace.push_back(*pick);
    }
}

namespace detail {

struct BfsNode {
    GaussDiagram diagram;
    long parent;  // index into the node list, -1 for the root
    Move via;
    int depth;
};

} // namespace detail

// Order of attack: monotone simplification, invariant witnesses, then
// breadth-first search over canonical_key-deduplicated diagrams using all
// moves, with additions capped at budget.max_chords.  Deterministic for a
// given budget.
inline TrivialityResult is_trivial_bounded(const GaussDiagram& g, const SearchBudget& b) {
    TrivialityResult res;
    auto [simplified, trace] = simplify_monotone(g);
    if (simplified.chord_count() == 0) {
        res.verdict = Verdict::Trivial;
        res.trace = std::move(trace);
        return res;
    }

    // certified-nontrivial witnesses: each vanishes on every trivial diagram
    LaurentPolynomial w = writhe_polynomial(simplified);
    if (!w.is_zero()) {
        res.verdict = Verdict::NontrivialCertified;
        res.witness_name = "writhe_polynomial";
        res.witness_value = w.to_string();
        return res;
    }
    long long j = odd_writhe(simplified);
    if (j != 0) {
        res.verdict = Verdict::NontrivialCertified;
        res.witness_name = "odd_writhe";
        res.witness_value = std::to_string(j);
        return res;
    }
    LaurentPolynomial d0 =
        alexander_gcd(reduced_matrix(fox_alexander_matrix(wirtinger_presentation(simplified))), 0);
    if (!d0.is_unit()) {
        res.verdict = Verdict::NontrivialCertified;
        res.witness_name = "alexander_gcd_d0";
        res.witness_value = d0.to_string();
        return res;
    }

    // breadth-first search, level by level
    std::vector<detail::BfsNode> nodes;
    std::unordered_map<std::string, long> seen;
    nodes.push_back({simplified, -1, {}, 0});
    seen.emplace(detail::fast_key(simplified), 0);

    long read = 0;
    bool exhausted_budget = false;
    int depth_reached = 0;
    while (read < static_cast<long>(nodes.size()) && !exhausted_budget) {
        const long cur_idx = read++;
        const GaussDiagram cur = nodes[static_cast<size_t>(cur_idx)].diagram;
        const int cur_depth = nodes[static_cast<size_t>(cur_idx)].depth;
        depth_reached = std::max(depth_reached, cur_depth);
        if (cur_depth >= b.max_depth) continue;
        for (const Move& m : enumerate_moves(cur, true, b.max_chords)) {
            GaussDiagram next = apply_move(cur, m);
            std::string key = detail::fast_key(next);
            auto [it, fresh] = seen.emplace(std::move(key), static_cast<long>(nodes.size()));
            if (!fresh) continue;
            nodes.push_back({next, cur_idx, m, cur_depth + 1});
            if (next.chord_count() == 0) {
                std::vector<Move> path;
                for (long at = static_cast<long>(nodes.size()) - 1; at > 0;
                     at = nodes[static_cast<size_t>(at)].parent)
                    path.push_back(nodes[static_cast<size_t>(at)].via);
                res.verdict = Verdict::Trivial;
                res.trace = std::move(trace);
                res.trace.insert(res.trace.end(), path.rbegin(), path.rend());
                return res;
            }
            if (static_cast<long>(seen.size()) >= b.max_nodes) {
                exhausted_budget = true;
                break;
            }
        }
    }
    res.verdict = Verdict::Unknown;
    res.stats.nodes = static_cast<long>(seen.size());
    res.stats.depth = depth_reached;
    res.stats.frontier = static_cast<long>(nodes.size()) - read;
    return res;
}

// Number of chords with odd interleavement count, mod 2.  Invariant under the
// flat moves: a flat R1 chord meets nothing, a flat R2 pair meets the same
// outside chords plus possibly each other (and changes every outside count by
// 0 or 2), and a flat R3 changes no meeting counts.
inline int flat_parity(const FlatDiagram& f) {
    int odd = 0;
    for (int id : f.lift().chord_ids())
        if (flat_interleave_count(f.lift(), id) % 2 == 1) odd++;
    return odd % 2;
}

inline std::pair<FlatDiagram, std::vector<FlatMove>> flat_simplify_monotone(const FlatDiagram& f) {
    FlatDiagram cur = f;
    std::vector<FlatMove> trace;
    for (;;) {
        std::vector<FlatMove> moves = enumerate_flat_moves(cur);
        const FlatMove* pick = nullptr;
        for (const FlatMove& m : moves)
            if (m.move.kind == MoveKind::R1Remove || m.move.kind == MoveKind::R2Remove) {
                pick = &m;
                break;
            }
        if (!pick) return {cur, trace};
        cur = apply_flat_move(cur, *pick);
        trace.push_back(*pick);
    }
}

struct FlatTrivialityResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<FlatMove> trace;
    std::string witness_name;
    std::string witness_value;
    SearchStats stats;
};

// Same architecture as is_trivial_bounded with flat moves; the only
// nontriviality certificate is flat_parity = 1.
inline FlatTrivialityResult flat_trivial_bounded(const FlatDiagram& f, const SearchBudget& b) {
    FlatTrivialityResult res;
    auto [simplified, trace] = flat_simplify_monotone(f);
    if (simplified.chord_count() == 0) {
        res.verdict = Verdict::Trivial;
        res.trace = std::move(trace);
        return res;
    }
    if (flat_parity(simplified) == 1) {
        res.verdict = Verdict::NontrivialCertified;
        res.witness_name = "flat_parity";
        res.witness_value = "1";
        return res;
    }

    struct Node {
        FlatDiagram diagram;
        long parent;
        FlatMove via;
        int depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, long> seen;
    nodes.push_back({simplified, -1, {}, 0});
    seen.emplace(detail::flat_fast_key(simplified), 0);

    long read = 0;
    bool exhausted = false;
    int depth_reached = 0;
    while (read < static_cast<long>(nodes.size()) && !exhausted) {
        const long cur_idx = read++;
        const FlatDiagram cur = nodes[static_cast<size_t>(cur_idx)].diagram;
        const int cur_depth = nodes[static_cast<size_t>(cur_idx)].depth;
        depth_reached = std::max(depth_reached, cur_depth);
        if (cur_depth >= b.max_depth) continue;
        for (const FlatMove& m : enumerate_flat_moves(cur, true, b.max_chords)) {
            FlatDiagram next = apply_flat_move(cur, m);
            std::string key = detail::flat_fast_key(next);
            auto [it, fresh] = seen.emplace(std::move(key), static_cast<long>(nodes.size()));
            if (!fresh) continue;
            nodes.push_back({next, cur_idx, m, cur_depth + 1});
            if (next.chord_count() == 0) {
                std::vector<FlatMove> path;
                for (long at = static_cast<long>(nodes.size()) - 1; at > 0;
                     at = nodes[static_cast<size_t>(at)].parent)
                    path.push_back(nodes[static_cast<size_t>(at)].via);
                res.verdict = Verdict::Trivial;
                res.trace = std::move(trace);
                res.trace.insert(res.trace.end(), path.rbegin(), path.rend());
                return res;
            }
            if (static_cast<long>(seen.size()) >= b.max_nodes) {
                exhausted = true;
                break;
            }
        }
    }
    res.verdict = Verdict::Unknown;
    res.stats.nodes = static_cast<long>(seen.size());
    res.stats.depth = depth_reached;
    res.stats.frontier = static_cast<long>(nodes.size()) - read;
    return res;
}

} // namespace vknot
