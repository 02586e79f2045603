#pragma once

#include <utility>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

// Wirtinger presentation of the diagram's group: one generator per arc (arcs
// break only at under-passages), one conjugation relator per chord.  Relator
// words are stored as (generator, exponent) letters.
struct WirtingerPresentation {
    int generators = 1;
    std::vector<std::vector<std::pair<int, int>>> relators;
};

// Rows = relators, columns = generators, entries in Z[t, t^-1].
struct PresentationMatrix {
    int cols = 0;
    std::vector<std::vector<LaurentPolynomial>> rows;
};

// Arcs are numbered by walking the circle: arc k runs from just after the
// k-th head endpoint (in position order) to the (k+1)-th.  At the crossing of
// chord c with head h_k: the inbound under-arc is k-1, the outbound is k, and
// the over-arc is the arc containing the tail.  The relator at a chord of
// sign e is  out^-1 over^-e in over^e.
inline WirtingerPresentation wirtinger_presentation(const GaussDiagram& g) {
    WirtingerPresentation p;
    int n = static_cast<int>(g.endpoints().size());
    if (g.chord_count() == 0) return p;  // one generator, no relators

    std::vector<int> head_positions;
    for (int i = 0; i < n; i++)
        if (g.endpoints()[static_cast<size_t>(i)].role == Role::Head) head_positions.push_back(i);
    int u = static_cast<int>(head_positions.size());
    p.generators = u;

    // arc containing an arbitrary position: the arc that starts at the
    // largest head position <= pos is the previous arc; a tail strictly
    // after head k (cyclically, before head k+1) lies on arc k.
    auto arc_of_tail = [&](int pos) {
        int k = -1;
        for (int i = 0; i < u; i++)
            if (head_positions[static_cast<size_t>(i)] < pos) k = i;
        if (k == -1) k = u - 1;  // before the first head: wraps to the last arc
        return k;
    };

    for (int id : g.chord_ids()) {
        int h = g.head_position(id);
        int k = 0;
        while (head_positions[static_cast<size_t>(k)] != h) k++;
        int arc_in = (k - 1 + u) % u;
        int arc_out = k;
        int arc_over = arc_of_tail(g.tail_position(id));
        int e = g.sign(id);
        p.relators.push_back({{arc_out, -1}, {arc_over, -e}, {arc_in, +1}, {arc_over, +e}});
    }
    return p;
}

// Fox derivative rows, abelianized by sending every generator to t.  The
// derivative is taken with suffix weights, D(uv) = D(u)*ab(v) + D(v) with
// D(x) = 1 and D(x^-1) = -t^-1, so a relator out^-1 over^-1 in over yields
// the row  {out: -1, over: 1-t, in: t}.  Every row sums to zero.
inline PresentationMatrix fox_alexander_matrix(const WirtingerPresentation& p) {
    PresentationMatrix m;
    m.cols = p.generators;
    for (const auto& relator : p.relators) {
        std::vector<LaurentPolynomial> row(static_cast<size_t>(p.generators));
        int suffix = 0;  // exponent sum of the letters after the current one
        for (const auto& [gen, exp] : relator) suffix += exp;
        for (const auto& [gen, exp] : relator) {
            suffix -= exp;
            // D(x^e) = 1 for e = +1, -t^-1 for e = -1
            LaurentPolynomial d = (exp > 0) ? LaurentPolynomial::monomial(1, suffix)
                                            : LaurentPolynomial::monomial(-1, suffix - 1);
            row[static_cast<size_t>(gen)] += d;
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

// Delete the last generator column.  Row sums of the full matrix are zero, so
// the deleted column is recoverable and the result still presents the same
// module.
inline PresentationMatrix reduced_matrix(const PresentationMatrix& a) {
    if (a.cols < 1) throw Error(Errc::EmptyMatrix, "matrix has no columns");
    PresentationMatrix r;
    r.cols = a.cols - 1;
    for (const auto& row : a.rows)
        r.rows.emplace_back(row.begin(), row.end() - 1);
    return r;
}

namespace detail {

// Fraction-free (Bareiss) determinant; divisions are exact in the ring.
inline LaurentPolynomial det_bareiss(std::vector<std::vector<LaurentPolynomial>> m) {
    int k = static_cast<int>(m.size());
    if (k == 0) return LaurentPolynomial::one();
    LaurentPolynomial prev = LaurentPolynomial::one();
    int sign = 1;
    for (int p = 0; p < k - 1; p++) {
        if (m[static_cast<size_t>(p)][static_cast<size_t>(p)].is_zero()) {
            int swap_row = -1;
            for (int r = p + 1; r < k; r++)
                if (!m[static_cast<size_t>(r)][static_cast<size_t>(p)].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return {};
            std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int r = p + 1; r < k; r++)
            for (int c = p + 1; c < k; c++) {
                LaurentPolynomial num =
                    m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                        m[static_cast<size_t>(p)][static_cast<size_t>(p)] -
                    m[static_cast<size_t>(r)][static_cast<size_t>(p)] *
                        m[static_cast<size_t>(p)][static_cast<size_t>(c)];
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] = divide_exact(num, prev);
            }
        prev = m[static_cast<size_t>(p)][static_cast<size_t>(p)];
    }
    LaurentPolynomial d = m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
    return sign > 0 ? d : -d;
}

// Advance a sorted index combination; false when exhausted.
inline bool next_combination(std::vector<int>& idx, int limit) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; i--) {
        if (idx[static_cast<size_t>(i)] < limit - (k - i)) {
            idx[static_cast<size_t>(i)]++;
            for (int j = i + 1; j < k; j++)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

// gcd of all (cols - d) x (cols - d) minors, normalized to lowest exponent 0
// and positive leading coefficient.  Returns 1 when d >= cols (no condition)
// and 0 when the rows cannot supply minors of the required size.
inline LaurentPolynomial alexander_gcd(const PresentationMatrix& a, int d) {
    int k = a.cols - d;
    if (k <= 0) return LaurentPolynomial::one();
    int nrows = static_cast<int>(a.rows.size());
    if (k > nrows) return {};

    LaurentPolynomial g;
    std::vector<int> rows_idx(static_cast<size_t>(k));
    for (int i = 0; i < k; i++) rows_idx[static_cast<size_t>(i)] = i;
    do {
        std::vector<int> cols_idx(static_cast<size_t>(k));
        for (int i = 0; i < k; i++) cols_idx[static_cast<size_t>(i)] = i;
        do {
            std::vector<std::vector<LaurentPolynomial>> sub(static_cast<size_t>(k));
            for (int r = 0; r < k; r++) {
                sub[static_cast<size_t>(r)].reserve(static_cast<size_t>(k));
                for (int c = 0; c < k; c++)
                    sub[static_cast<size_t>(r)].push_back(
                        a.rows[static_cast<size_t>(rows_idx[static_cast<size_t>(r)])]
                              [static_cast<size_t>(cols_idx[static_cast<size_t>(c)])]);
            }
            g = laurent_gcd(g, detail::det_bareiss(std::move(sub)));
            if (g.is_unit()) return g;
        } while (detail::next_combination(cols_idx, a.cols));
    } while (detail::next_combination(rows_idx, nrows));
    return g.normalized();
}

// Smallest d whose minor gcd is a unit; the module cannot be generated by
// fewer elements.  0 for diagrams whose reduced matrix already has unit gcd.
inline int e_lower_bound(const GaussDiagram& g) {
    PresentationMatrix reduced = reduced_matrix(fox_alexander_matrix(wirtinger_presentation(g)));
    for (int d = 0; d <= reduced.cols; d++)
        if (alexander_gcd(reduced, d).is_unit()) return d;
    return reduced.cols;  // unreachable: d = cols always gives the unit 1
}

// Search-pruning constraint: every (m, n) that unknots any diagram of this
// knot satisfies m + n >= module_constraint(G).
inline int module_constraint(const GaussDiagram& g) { return e_lower_bound(g); }

} // namespace vknot
