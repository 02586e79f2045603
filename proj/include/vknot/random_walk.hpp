#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "vknot/alexander.hpp"
#include "vknot/moves.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

struct WalkConfig {
    long steps = 1000;
    std::uint64_t seed = 1;
    int chord_slack = 2;       // additions allowed up to start + slack
    bool check_e_bound = true;
    bool corrupt = false;      // deliberately break one step; the checker must object
};

struct WalkViolation {
    long step = 0;
    std::string what;
};

namespace detail {

// Uniform in [0, n) by rejection; stable across platforms for a fixed seed.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

} // namespace detail

// Seeded Reidemeister walk asserting after every move that the writhe
// polynomial (hence every k-th writhe), the odd writhe, and the Alexander
// lower bound are unchanged, plus the crossing-change delta law
// W(G) - W(G') = w(c) (t^m + t^-m) with m = Ind(c) at an off-walk random
// chord each step.  Returns the first violation, if any.
inline std::optional<WalkViolation> invariant_walk(const GaussDiagram& start, const WalkConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    GaussDiagram cur = start;
    int cap = start.chord_count() + cfg.chord_slack;

    LaurentPolynomial w0 = writhe_polynomial(start);
    long long j0 = odd_writhe(start);
    int e0 = cfg.check_e_bound ? e_lower_bound(start) : 0;

    for (long step = 1; step <= cfg.steps; step++) {
        std::vector<Move> moves = enumerate_moves(cur, true, cap);
        if (moves.empty()) break;  // cannot happen: an R1 addition always applies
        const Move& pick = moves[detail::bounded(rng, moves.size())];
        GaussDiagram next = apply_move(cur, pick);

        if (cfg.corrupt && next.chord_count() > 0) {
            // sabotage: silently delete a chord, which no move may do
            std::vector<int> ids = next.chord_ids();
            next = virtualize(next, ids[detail::bounded(rng, ids.size())]);
        }

        if (!(writhe_polynomial(next) == w0))
            return WalkViolation{step, "writhe polynomial changed after " + to_string(pick)};
        if (odd_writhe(next) != j0)
            return WalkViolation{step, "odd writhe changed after " + to_string(pick)};
        if (cfg.check_e_bound && e_lower_bound(next) != e0)
            return WalkViolation{step, "alexander lower bound changed after " + to_string(pick)};

        // delta law at a random chord, off the walk
        if (next.chord_count() > 0) {
            std::vector<int> ids = next.chord_ids();
            int id = ids[detail::bounded(rng, ids.size())];
            GaussDiagram flipped = crossing_change(next, id);
            LaurentPolynomial delta = writhe_polynomial(next) - writhe_polynomial(flipped);
            int ind = chord_index(next, id);
            LaurentPolynomial expect;
            if (ind != 0)
                expect = LaurentPolynomial::monomial(next.sign(id), ind) +
                         LaurentPolynomial::monomial(next.sign(id), -ind);
            if (!(delta == expect))
                return WalkViolation{step, "crossing-change delta law failed at chord " +
                                               std::to_string(id)};
        }
        cur = std::move(next);
    }
    return std::nullopt;
}

} // namespace vknot
