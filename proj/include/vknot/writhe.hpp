#pragma once

#include <cmath>
#include <map>

#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent.hpp"
#include "vknot/pair_bound.hpp"

namespace vknot {

// Signed crossing count of a chord: the sum of w(d) over chords d crossing c,
// counted +1 when d crosses from right to left as seen from the tail of c
// toward its head and -1 otherwise.
//
// Side convention: d crosses right-to-left iff the tail of d lies on the arc
// from tail(c) to head(c) in circle order.  Under this convention the
// positive virtual trefoil O1+O2+U1+U2+ has indices {+1, -1} and writhe
// polynomial t + t^-1; the mirror convention would swap t and t^-1, which no
// bound in this library is sensitive to.
inline int chord_index(const GaussDiagram& g, int id) {
    int at = g.tail_position(id);
    int ah = g.head_position(id);
    int n = static_cast<int>(g.endpoints().size());
    auto inside = [&](int p) { return p != at && ((p - at + n) % n) < ((ah - at + n) % n); };

    int ind = 0;
    for (const auto& [d, w] : g.signs()) {
        if (d == id) continue;
        bool tail_in = inside(g.tail_position(d));
        bool head_in = inside(g.head_position(d));
        if (tail_in == head_in) continue;  // does not cross c
        ind += tail_in ? w : -w;
    }
    return ind;
}

// W_G(t) = sum over chords of nonzero index of w(c) * t^Ind(c).  The t^0
// coefficient is never present.
inline LaurentPolynomial writhe_polynomial(const GaussDiagram& g) {
    LaurentPolynomial w;
    for (const auto& [id, s] : g.signs()) {
        int ind = chord_index(g, id);
        if (ind != 0) w += LaurentPolynomial::monomial(s, ind);
    }
    return w;
}

// Coefficient of t^k in the writhe polynomial, k != 0.
inline long long kth_writhe(const GaussDiagram& g, int k) {
    if (k == 0) throw Error(Errc::ZeroK, "k must be nonzero");
    long long j = 0;
    for (const auto& [id, s] : g.signs())
        if (chord_index(g, id) == k) j += s;
    return j;
}

// Sum of signs over chords of odd index.
inline long long odd_writhe(const GaussDiagram& g) {
    long long j = 0;
    for (const auto& [id, s] : g.signs())
        if (chord_index(g, id) % 2 != 0) j += s;
    return j;
}

// Best lower bound on the unknotting index available from the writhe
// invariants alone, as a dictionary-order maximum of:
//   (1,0)                        when some J_k differs from J_{-k},
//   (0, ceil(sum_k |J_k| / 2))   over k != 0,
//   (0, ceil(|J| / 2))           for the odd writhe J.
// These are knot invariants, so the bound applies to every diagram of the
// same knot.
inline PairBound writhe_lower_bound(const GaussDiagram& g) {
    std::map<int, long long> jk;
    for (const auto& [id, s] : g.signs()) {
        int ind = chord_index(g, id);
        if (ind != 0) jk[ind] += s;
    }

    bool asym = false;
    long long abs_sum = 0;
    for (const auto& [k, v] : jk) {
        if (v == 0) continue;
        abs_sum += std::llabs(v);
        auto it = jk.find(-k);
        if (it == jk.end() ? true : it->second != v) asym = true;
    }
    long long j = odd_writhe(g);

    PairBound best{0, static_cast<int>((abs_sum + 1) / 2)};
    PairBound odd_bound{0, static_cast<int>((std::llabs(j) + 1) / 2)};
    if (odd_bound > best) best = odd_bound;
    if (asym && PairBound{1, 0} > best) best = PairBound{1, 0};
    return best;
}

} // namespace vknot
