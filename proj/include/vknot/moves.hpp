#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

enum class MoveKind : std::uint8_t { R1Remove, R2Remove, R3, R1Add, R2Add };

// One Reidemeister move site.  Field use per kind:
//   R1Remove  a = chord id
//   R2Remove  a, b = chord ids (a's tail immediately precedes b's tail)
//   R3        a, b, c = start positions of the three adjacent endpoint pairs
//   R1Add     a = gap index, s = sign, flag = head-before-tail
//   R2Add     a = gap of the tail block, b = gap of the head block,
//             s = sign of the first new chord, flag = parallel head order
struct Move {
    MoveKind kind = MoveKind::R1Remove;
    int a = 0;
    int b = 0;
    int c = 0;
    int s = 0;
    bool flag = false;

    friend bool operator==(const Move&, const Move&) = default;
};

inline std::string to_string(const Move& m) {
    switch (m.kind) {
    case MoveKind::R1Remove: return "R1_remove(c" + std::to_string(m.a) + ")";
    case MoveKind::R2Remove:
        return "R2_remove(c" + std::to_string(m.a) + ",c" + std::to_string(m.b) + ")";
    case MoveKind::R3:
        return "R3(p" + std::to_string(m.a) + ",p" + std::to_string(m.b) + ",p" +
               std::to_string(m.c) + ")";
    case MoveKind::R1Add:
        return std::string("R1_add(g") + std::to_string(m.a) + "," + (m.s > 0 ? "+" : "-") + "," +
               (m.flag ? "HT" : "TH") + ")";
    case MoveKind::R2Add:
        return std::string("R2_add(g") + std::to_string(m.a) + ",g" + std::to_string(m.b) + "," +
               (m.s > 0 ? "+" : "-") + "," + (m.flag ? "par" : "anti") + ")";
    }
    return "?";
}

namespace detail {

// Realizability of a triangle of three directed strands, indexed by
//   (o1<<5)|(o2<<4)|(o3<<3)|(d12<<2)|(d13<<1)|d23
// where o1 = strand 1 meets strand 2 before strand 3 (o2, o3 relative to
// strand 1), and d_ij = whether det(dir_i, dir_j) > 0.  Derived by sampling
// triples of directed lines in the plane (tests/test_r3_table.cpp
// regenerates it); the pattern: the order triple determines which of the
// three determinant signs is the odd one out, if any.
inline constexpr std::array<bool, 64> r3_table = {
    1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0,
    0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1,
};

struct R3Site {
    std::array<int, 3> pair_start;  // ascending positions
    bool valid = false;
};

// Check a candidate R3 site given the three adjacent-pair start positions.
inline R3Site classify_r3(const GaussDiagram& g, int p1, int p2, int p3) {
    R3Site site{{p1, p2, p3}, false};
    int n = static_cast<int>(g.endpoints().size());
    if (n < 6) return site;
    std::array<int, 3> ps = {p1, p2, p3};
    for (int p : ps)
        if (p < 0 || p >= n) return site;
    // six distinct positions
    std::array<int, 6> pos = {p1, (p1 + 1) % n, p2, (p2 + 1) % n, p3, (p3 + 1) % n};
    for (int i = 0; i < 6; i++)
        for (int j = i + 1; j < 6; j++)
            if (pos[i] == pos[j]) return site;

    // each pair must hold two distinct chords; the three pairs must form a
    // triangle on exactly three chords
    std::array<Endpoint, 3> first, second;
    for (int i = 0; i < 3; i++) {
        first[i] = g.endpoints()[static_cast<size_t>(ps[i])];
        second[i] = g.endpoints()[static_cast<size_t>((ps[i] + 1) % n)];
        if (first[i].chord == second[i].chord) return site;
    }
    auto shared_chord = [&](int i, int j) -> int {
        for (Endpoint e : {first[i], second[i]})
            if (e.chord == first[j].chord || e.chord == second[j].chord) return e.chord;
        return -1;
    };
    int c12 = shared_chord(0, 1), c13 = shared_chord(0, 2), c23 = shared_chord(1, 2);
    if (c12 < 0 || c13 < 0 || c23 < 0) return site;
    if (c12 == c13 || c12 == c23 || c13 == c23) return site;

    // levels: one strand over at both its crossings, one under at both
    auto role_of = [&](int strand, int chord) {
        return (first[strand].chord == chord) ? first[strand].role : second[strand].role;
    };
    std::array<std::array<int, 2>, 3> strand_chords = {{{c12, c13}, {c12, c23}, {c13, c23}}};
    int tt = 0, hh = 0;
    for (int i = 0; i < 3; i++) {
        Role r0 = role_of(i, strand_chords[i][0]);
        Role r1 = role_of(i, strand_chords[i][1]);
        if (r0 == Role::Tail && r1 == Role::Tail) tt++;
        if (r0 == Role::Head && r1 == Role::Head) hh++;
    }
    if (tt != 1 || hh != 1) return site;

    // orders: does each strand meet its lower-indexed partner first
    bool o1 = first[0].chord == c12;
    bool o2 = first[1].chord == c12;
    bool o3 = first[2].chord == c13;
    // determinant signs from crossing signs and over/under data
    auto det_positive = [&](int i, int chord) {
        bool i_over = role_of(i, chord) == Role::Tail;
        return (g.sign(chord) > 0) == i_over;
    };
    bool d12 = det_positive(0, c12);
    bool d13 = det_positive(0, c13);
    bool d23 = det_positive(1, c23);

    int code = (o1 << 5) | (o2 << 4) | (o3 << 3) | (d12 << 2) | (d13 << 1) | (d23 << 0);
    site.valid = r3_table[static_cast<size_t>(code)];
    return site;
}

// One R2 removal pattern instance: tails of a then b adjacent, heads adjacent
// in either order, signs opposite.
inline bool r2_pattern(const GaussDiagram& g, int tail_pos) {
    int n = static_cast<int>(g.endpoints().size());
    const Endpoint& u = g.endpoints()[static_cast<size_t>(tail_pos)];
    const Endpoint& v = g.endpoints()[static_cast<size_t>((tail_pos + 1) % n)];
    if (u.role != Role::Tail || v.role != Role::Tail) return false;
    if (u.chord == v.chord) return false;
    if (g.sign(u.chord) == g.sign(v.chord)) return false;
    int hu = g.head_position(u.chord);
    int hv = g.head_position(v.chord);
    return (hu == (hv + 1) % n) || (hv == (hu + 1) % n);
}

} // namespace detail

// All applicable moves, kind-major (R1 removals, R2 removals, R3, then
// additions when allowed), each kind by ascending site data.
inline std::vector<Move> enumerate_moves(const GaussDiagram& g, bool allow_additions = false,
                                         int max_chords = 0) {
    std::vector<Move> moves;
    int n = static_cast<int>(g.endpoints().size());

    for (int id : g.chord_ids()) {
        int t = g.tail_position(id), h = g.head_position(id);
        if ((t + 1) % n == h || (h + 1) % n == t)
            moves.push_back({MoveKind::R1Remove, id});
    }

    for (int p = 0; p < n; p++) {
        if (!detail::r2_pattern(g, p)) continue;
        moves.push_back({MoveKind::R2Remove, g.endpoints()[static_cast<size_t>(p)].chord,
                         g.endpoints()[static_cast<size_t>((p + 1) % n)].chord});
    }

    if (n >= 6) {
        std::vector<int> starts;
        for (int p = 0; p < n; p++) {
            const Endpoint& a = g.endpoints()[static_cast<size_t>(p)];
            const Endpoint& b = g.endpoints()[static_cast<size_t>((p + 1) % n)];
            if (a.chord != b.chord) starts.push_back(p);
        }
        for (size_t i = 0; i < starts.size(); i++)
            for (size_t j = i + 1; j < starts.size(); j++)
                for (size_t k = j + 1; k < starts.size(); k++) {
                    auto site = detail::classify_r3(g, starts[i], starts[j], starts[k]);
                    if (site.valid)
                        moves.push_back({MoveKind::R3, starts[i], starts[j], starts[k]});
                }
    }

    if (allow_additions) {
        int gaps = (n == 0) ? 1 : n;
        if (g.chord_count() + 1 <= max_chords)
            for (int gp = 0; gp < gaps; gp++)
                for (int s : {+1, -1})
                    for (bool head_first : {false, true})
                        moves.push_back({MoveKind::R1Add, gp, 0, 0, s, head_first});
        if (g.chord_count() + 2 <= max_chords && n > 0)
            for (int gt = 0; gt < gaps; gt++)
                for (int gh = 0; gh < gaps; gh++) {
                    if (gt == gh) continue;
                    for (int s : {+1, -1})
                        for (bool parallel : {false, true})
                            moves.push_back({MoveKind::R2Add, gt, gh, 0, s, parallel});
                }
    }
    return moves;
}

// Apply a move, validating applicability first.  Every invariant computed in
// this library is unchanged across apply_move; the randomized tests enforce
// that contract.
inline GaussDiagram apply_move(const GaussDiagram& g, const Move& m) {
    int n = static_cast<int>(g.endpoints().size());
    switch (m.kind) {
    case MoveKind::R1Remove: {
        if (!g.has_chord(m.a)) throw Error(Errc::InapplicableMove, to_string(m));
        int t = g.tail_position(m.a), h = g.head_position(m.a);
        if ((t + 1) % n != h && (h + 1) % n != t)
            throw Error(Errc::InapplicableMove, to_string(m));
        return virtualize(g, m.a);
    }
    case MoveKind::R2Remove: {
        if (!g.has_chord(m.a) || !g.has_chord(m.b))
            throw Error(Errc::InapplicableMove, to_string(m));
        int ta = g.tail_position(m.a);
        if (g.endpoints()[static_cast<size_t>((ta + 1) % n)].chord != m.b ||
            !detail::r2_pattern(g, ta))
            throw Error(Errc::InapplicableMove, to_string(m));
        return virtualize(virtualize(g, m.a), m.b);
    }
    case MoveKind::R3: {
        auto site = detail::classify_r3(g, m.a, m.b, m.c);
        if (!site.valid) throw Error(Errc::InapplicableMove, to_string(m));
        std::vector<Endpoint> eps = g.endpoints();
        for (int p : site.pair_start)
            std::swap(eps[static_cast<size_t>(p)], eps[static_cast<size_t>((p + 1) % n)]);
        return GaussDiagram(std::move(eps), g.signs());
    }
    case MoveKind::R1Add: {
        int gaps = (n == 0) ? 1 : n;
        if (m.a < 0 || m.a >= gaps || (m.s != 1 && m.s != -1))
            throw Error(Errc::InapplicableMove, to_string(m));
        int id = g.max_chord_id() + 1;
        std::vector<Endpoint> eps;
        eps.reserve(static_cast<size_t>(n) + 2);
        for (int p = 0; p <= n; p++) {
            if (p == m.a) {
                eps.push_back({id, m.flag ? Role::Head : Role::Tail});
                eps.push_back({id, m.flag ? Role::Tail : Role::Head});
            }
            if (p < n) eps.push_back(g.endpoints()[static_cast<size_t>(p)]);
        }
        std::map<int, int> signs = g.signs();
        signs[id] = m.s;
        return GaussDiagram(std::move(eps), std::move(signs));
    }
    case MoveKind::R2Add: {
        if (n == 0 || m.a == m.b || m.a < 0 || m.a >= n || m.b < 0 || m.b >= n ||
            (m.s != 1 && m.s != -1))
            throw Error(Errc::InapplicableMove, to_string(m));
        int u = g.max_chord_id() + 1, v = u + 1;
        std::vector<Endpoint> eps;
        eps.reserve(static_cast<size_t>(n) + 4);
        for (int p = 0; p < n; p++) {
            if (p == m.a) {
                eps.push_back({u, Role::Tail});
                eps.push_back({v, Role::Tail});
            }
            if (p == m.b) {
                if (m.flag) {
                    eps.push_back({u, Role::Head});
                    eps.push_back({v, Role::Head});
                } else {
                    eps.push_back({v, Role::Head});
                    eps.push_back({u, Role::Head});
                }
            }
            eps.push_back(g.endpoints()[static_cast<size_t>(p)]);
        }
        std::map<int, int> signs = g.signs();
        signs[u] = m.s;
        signs[v] = -m.s;
        return GaussDiagram(std::move(eps), std::move(signs));
    }
    }
    throw Error(Errc::InapplicableMove, "unknown move kind");
}

} // namespace vknot
