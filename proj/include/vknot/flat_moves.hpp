#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/moves.hpp"

namespace vknot {

// A flat move is a classical move performed on some over/under lift of the
// flat diagram.  Only the flips of the chords taking part in the move matter,
// so a flat move is a signed move plus the set of chords to crossing-change
// first.
struct FlatMove {
    std::vector<int> flips;  // chord ids to crossing-change before the move
    Move move;

    friend bool operator==(const FlatMove&, const FlatMove&) = default;
};

inline std::string to_string(const FlatMove& m) {
    std::string out = "flat[";
    for (size_t i = 0; i < m.flips.size(); i++) {
        if (i) out += ",";
        out += "c" + std::to_string(m.flips[i]);
    }
    out += "]";
    return out + to_string(m.move);
}

namespace detail {

inline GaussDiagram apply_flips(const GaussDiagram& g, const std::vector<int>& flips) {
    GaussDiagram cur = g;
    for (int id : flips) cur = crossing_change(cur, id);
    return cur;
}

inline std::vector<int> move_chords(const GaussDiagram& g, const Move& m) {
    switch (m.kind) {
    case MoveKind::R1Remove: return {m.a};
    case MoveKind::R2Remove: return {m.a, m.b};
    case MoveKind::R3: {
        int n = static_cast<int>(g.endpoints().size());
        std::vector<int> ids;
        for (int p : {m.a, m.b, m.c}) {
            for (int q : {p, (p + 1) % n}) {
                int id = g.endpoints()[static_cast<size_t>(q)].chord;
                if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
            }
        }
        return ids;
    }
    default: return {};
    }
}

} // namespace detail

// All flat moves: signed moves available on any lift of f.  For removals and
// R3 only flips of the participating chords matter; additions carry their
// sign variants already.
inline std::vector<FlatMove> enumerate_flat_moves(const GaussDiagram& f,
                                                  bool allow_additions = false,
                                                  int max_chords = 0) {
    std::vector<FlatMove> out;
    std::vector<int> ids = f.chord_ids();

    auto add_unique = [&](FlatMove&& m) {
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    };

    // removals and R3 via local lifts: enumerate flip subsets of size <= 3
    // lazily per move found on the flipped diagram
    int c = static_cast<int>(ids.size());
    std::vector<std::vector<int>> flip_sets = {{}};
    for (int i = 0; i < c; i++) flip_sets.push_back({ids[static_cast<size_t>(i)]});
    for (int i = 0; i < c; i++)
        for (int j = i + 1; j < c; j++)
            flip_sets.push_back({ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]});
    for (int i = 0; i < c; i++)
        for (int j = i + 1; j < c; j++)
            for (int k = j + 1; k < c; k++)
                flip_sets.push_back({ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)],
                                     ids[static_cast<size_t>(k)]});

    for (const auto& flips : flip_sets) {
        GaussDiagram lifted = detail::apply_flips(f, flips);
        for (const Move& m : enumerate_moves(lifted, false, 0)) {
            // minimality: the flip set must touch only chords of the move,
            // otherwise the same move appears under many flip sets
            std::vector<int> involved = detail::move_chords(lifted, m);
            bool minimal = true;
            for (int id : flips)
                if (std::find(involved.begin(), involved.end(), id) == involved.end())
                    minimal = false;
            if (!minimal) continue;
            add_unique({flips, m});
        }
    }

    if (allow_additions) {
        for (const Move& m : enumerate_moves(f, true, max_chords))
            if (m.kind == MoveKind::R1Add || m.kind == MoveKind::R2Add) add_unique({{}, m});
    }
    return out;
}

inline GaussDiagram apply_flat_move(const GaussDiagram& f, const FlatMove& m) {
    return apply_move(detail::apply_flips(f, m.flips), m.move);
}

// Canonical key of the flat diagram: the minimum over rotations and
// per-chord crossing changes of the signed canonical form.  Chords are
// re-oriented so every tail precedes its head in the rotated sequence; the
// adjusted signs carry the retained flat crossing data.
inline std::string flat_canonical_key(const GaussDiagram& f) {
    int n = static_cast<int>(f.endpoints().size());
    if (n == 0) return "";
    std::string best;
    for (int r = 0; r < n; r++) {
        std::map<int, int> relabel;
        std::map<int, bool> flip;  // chord -> head seen before tail
        std::string cand;
        for (int k = 0; k < n; k++) {
            const Endpoint& e = f.endpoints()[static_cast<size_t>((r + k) % n)];
            auto [it, fresh] = relabel.try_emplace(e.chord, static_cast<int>(relabel.size()) + 1);
            if (fresh) flip[e.chord] = (e.role == Role::Head);
            bool flipped = flip[e.chord];
            Role role = flipped ? (e.role == Role::Tail ? Role::Head : Role::Tail) : e.role;
            int sign = f.sign(e.chord) * (flipped ? -1 : 1);
            cand += (role == Role::Tail) ? 'O' : 'U';
            cand += std::to_string(it->second);
            cand += (sign > 0) ? '+' : '-';
        }
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

// Interleavement count of a chord, from the endpoint sequence alone.
inline int flat_interleave_count(const GaussDiagram& f, int id) {
    int count = 0;
    for (int other : f.chord_ids())
        if (other != id && chords_interleaved(f, id, other)) count++;
    return count;
}

inline std::string flat_canonical_key(const FlatDiagram& f) { return flat_canonical_key(f.lift()); }

namespace detail {

// Byte-encoded flat key: per rotation, chords are re-oriented so the first
// occurrence reads as a tail and the sign is adjusted; minimized over
// rotations.  Same equivalence as flat_canonical_key.
inline std::string flat_fast_key(const GaussDiagram& f) {
    const auto& eps = f.endpoints();
    int n = static_cast<int>(eps.size());
    if (n == 0) return {};
    int maxid = 0;
    for (const auto& e : eps) maxid = std::max(maxid, e.chord);
    std::vector<signed char> sign_of(static_cast<size_t>(maxid) + 1, 0);
    for (const auto& [id, s] : f.signs()) sign_of[static_cast<size_t>(id)] = static_cast<signed char>(s);
    std::vector<int> relabel(static_cast<size_t>(maxid) + 1, 0);
    std::vector<signed char> flip(static_cast<size_t>(maxid) + 1, 0);
    std::string best, cand(static_cast<size_t>(2 * n), '\0');
    for (int r = 0; r < n; r++) {
        std::fill(relabel.begin(), relabel.end(), 0);
        int next = 0;
        for (int k = 0; k < n; k++) {
            const Endpoint& e = eps[static_cast<size_t>((r + k) % n)];
            int& lab = relabel[static_cast<size_t>(e.chord)];
            if (lab == 0) {
                lab = ++next;
                flip[static_cast<size_t>(e.chord)] = (e.role == Role::Head) ? 1 : 0;
            }
            bool flipped = flip[static_cast<size_t>(e.chord)] != 0;
            bool head = (e.role == Role::Head) != flipped;
            bool neg = (sign_of[static_cast<size_t>(e.chord)] < 0) != flipped;
            cand[static_cast<size_t>(2 * k)] = static_cast<char>(lab);
            cand[static_cast<size_t>(2 * k + 1)] =
                static_cast<char>((head ? 1 : 0) | (neg ? 2 : 0));
        }
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

inline std::string flat_fast_key(const FlatDiagram& f) { return flat_fast_key(f.lift()); }

} // namespace detail

inline std::vector<FlatMove> enumerate_flat_moves(const FlatDiagram& f, bool allow_additions = false,
                                                  int max_chords = 0) {
    return enumerate_flat_moves(f.lift(), allow_additions, max_chords);
}

inline FlatDiagram apply_flat_move(const FlatDiagram& f, const FlatMove& m) {
    return FlatDiagram(apply_flat_move(f.lift(), m));
}

} // namespace vknot
