#pragma once

#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "vknot/pair_bound.hpp"
#include "vknot/triviality.hpp"
#include "vknot/writhe.hpp"

namespace vknot {

enum class PairStatus { Member, NonMember, Unknown };

inline const char* to_string(PairStatus s) {
    switch (s) {
    case PairStatus::Member: return "member";
    case PairStatus::NonMember: return "nonmember";
    case PairStatus::Unknown: return "unknown";
    }
    return "?";
}

struct Assignment {
    std::vector<int> virtualized;
    std::vector<int> changed;
};

struct PairEvidence {
    PairStatus status = PairStatus::Unknown;
    Assignment witness;       // Member: the successful operation sets
    std::vector<Move> trace;  // Member: trivialization of the modified diagram
};

struct UnknottingReport {
    bool exact = false;
    PairBound lower;
    PairBound upper;
    std::string base_code;                // diagram the certificate applies to
    std::vector<Move> equivalence_trace;  // moves from the input to base_code
    Assignment certificate;
    std::vector<Move> trace;
    std::vector<std::string> provenance;
    std::vector<PairBound> unresolved;
    std::map<PairBound, PairStatus> membership;
};

namespace detail {

inline GaussDiagram apply_assignment(const GaussDiagram& g, const Assignment& a) {
    GaussDiagram cur = g;
    for (int id : a.virtualized) cur = virtualize(cur, id);
    for (int id : a.changed) cur = crossing_change(cur, id);
    return cur;
}

// Evaluates one (m, n) pair over all disjoint assignments, with a verdict
// cache keyed by the modified diagram's canonical form.
class PairEvaluator {
public:
    PairEvaluator(const GaussDiagram& g, SearchBudget budget) : g_(g), budget_(budget) {}

    PairEvidence evaluate(int m, int n) {
        PairEvidence ev;
        std::vector<int> ids = g_.chord_ids();
        int c = static_cast<int>(ids.size());
        bool any_unknown = false;

        std::vector<int> vsel(static_cast<size_t>(m));
        for (int i = 0; i < m; i++) vsel[static_cast<size_t>(i)] = i;
        bool v_done = (m > c);
        while (!v_done) {
            std::vector<int> rest;
            for (int i = 0; i < c; i++) {
                bool in_v = false;
                for (int x : vsel)
                    if (x == i) in_v = true;
                if (!in_v) rest.push_back(i);
            }
            std::vector<int> csel(static_cast<size_t>(n));
            for (int i = 0; i < n; i++) csel[static_cast<size_t>(i)] = i;
            bool c_done = (n > static_cast<int>(rest.size()));
            while (!c_done) {
                Assignment a;
                for (int x : vsel) a.virtualized.push_back(ids[static_cast<size_t>(x)]);
                for (int x : csel) a.changed.push_back(ids[static_cast<size_t>(rest[static_cast<size_t>(x)])]);
                GaussDiagram modified = apply_assignment(g_, a);
                Verdict v = cached_verdict(modified);
                if (v == Verdict::Trivial) {
                    TrivialityResult full = is_trivial_bounded(modified, budget_);
                    ev.status = PairStatus::Member;
                    ev.witness = std::move(a);
                    ev.trace = std::move(full.trace);
                    return ev;
                }
                if (v == Verdict::Unknown) any_unknown = true;
                c_done = !next_selection(csel, static_cast<int>(rest.size()));
            }
            v_done = !next_selection(vsel, c);
        }
        ev.status = any_unknown ? PairStatus::Unknown : PairStatus::NonMember;
        return ev;
    }

private:
    static bool next_selection(std::vector<int>& sel, int limit) {
        int k = static_cast<int>(sel.size());
        if (k == 0) return false;
        for (int i = k - 1; i >= 0; i--) {
            if (sel[static_cast<size_t>(i)] < limit - (k - i)) {
                sel[static_cast<size_t>(i)]++;
                for (int j = i + 1; j < k; j++)
                    sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    }

    Verdict cached_verdict(const GaussDiagram& modified) {
        std::string key = detail::fast_key(modified);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Verdict v = is_trivial_bounded(modified, budget_).verdict;
        cache_.emplace(std::move(key), v);
        return v;
    }

    const GaussDiagram& g_;
    SearchBudget budget_;
    std::unordered_map<std::string, Verdict> cache_;
};

} // namespace detail

// Full sweep of every pair with m + n <= chord count; V and C are disjoint
// chord subsets applied simultaneously.
inline std::map<PairBound, PairEvidence> enumerate_unknottable_pairs(const GaussDiagram& g,
                                                                     const SearchBudget& b) {
    detail::PairEvaluator eval(g, b);
    std::map<PairBound, PairEvidence> out;
    int c = g.chord_count();
    if (c == 0) {
        PairEvidence ev;
        ev.status = PairStatus::Member;
        out[{0, 0}] = std::move(ev);
        return out;
    }
    for (int m = 0; m <= c; m++)
        for (int n = 0; m + n <= c; n++) out[{m, n}] = eval.evaluate(m, n);
    return out;
}

namespace detail {

inline UnknottingReport report_from_membership(const std::map<PairBound, PairEvidence>& pairs,
                                               const std::string& base_code) {
    UnknottingReport rep;
    rep.base_code = base_code;
    bool have_upper = false;
    for (const auto& [pb, ev] : pairs) {  // std::map iterates in dictionary order
        rep.membership[pb] = ev.status;
        if (have_upper && pb > rep.upper) continue;
        if (ev.status == PairStatus::Member && !have_upper) {
            rep.upper = pb;
            rep.certificate = ev.witness;
            rep.trace = ev.trace;
            have_upper = true;
        } else if (ev.status == PairStatus::Unknown) {
            rep.unresolved.push_back(pb);
        }
    }
    if (!have_upper) {
        // cannot happen: virtualizing everything is always a member
        throw std::logic_error("no member pair found");
    }
    if (rep.unresolved.empty()) {
        rep.exact = true;
        rep.lower = rep.upper;
    } else {
        rep.exact = false;
        rep.lower = std::min(rep.unresolved.front(), rep.upper);
    }
    return rep;
}

} // namespace detail

// Walks pairs in dictionary order and stops at the first member; smaller
// Unknown pairs block exactness and are reported as unresolved.
inline UnknottingReport unknotting_index_diagram(const GaussDiagram& g, const SearchBudget& b) {
    detail::PairEvaluator eval(g, b);
    std::map<PairBound, PairEvidence> pairs;
    int c = g.chord_count();
    if (c == 0) {
        PairEvidence ev;
        ev.status = PairStatus::Member;
        pairs[{0, 0}] = std::move(ev);
        return detail::report_from_membership(pairs, emit_gauss_code(g));
    }
    bool found = false;
    for (int m = 0; m <= c && !found; m++)
        for (int n = 0; m + n <= c; n++) {
            PairEvidence ev = eval.evaluate(m, n);
            bool member = ev.status == PairStatus::Member;
            pairs[{m, n}] = std::move(ev);
            if (member) {
                found = true;
                break;
            }
        }
    return detail::report_from_membership(pairs, emit_gauss_code(g));
}

// Dictionary-order minimum over all bounds that apply to the knot rather
// than the diagram: writhe asymmetry, sum |J_k|/2, |J|/2, the module
// generator count, and the flat-projection rule (only when asserted or
// certified by parity).
inline std::pair<PairBound, std::vector<std::string>> combined_lower_bound(const GaussDiagram& g,
                                                                           bool flat_assertion) {
    std::map<int, long long> jk;
    for (const auto& [id, s] : g.signs()) {
        int ind = chord_index(g, id);
        if (ind != 0) jk[ind] += s;
    }
    bool asym = false;
    long long abs_sum = 0;
    for (const auto& [k, v] : jk) {
        if (v == 0) continue;
        abs_sum += v < 0 ? -v : v;
        auto it = jk.find(-k);
        if (it == jk.end() ? true : it->second != v) asym = true;
    }
    long long j = odd_writhe(g);
    long long half_sum = (abs_sum + 1) / 2;
    long long half_odd = ((j < 0 ? -j : j) + 1) / 2;
    int e = module_constraint(g);
    bool flat_fires = flat_assertion || flat_parity(flat_projection(g)) == 1;

    auto solve = [&](bool use_asym, bool use_sum, bool use_odd, bool use_module,
                     bool use_flat) -> PairBound {
        PairBound wb{0, 0};
        if (use_sum && PairBound{0, static_cast<int>(half_sum)} > wb)
            wb = {0, static_cast<int>(half_sum)};
        if (use_odd && PairBound{0, static_cast<int>(half_odd)} > wb)
            wb = {0, static_cast<int>(half_odd)};
        if (use_asym && asym && PairBound{1, 0} > wb) wb = {1, 0};
        int need_e = use_module ? e : 0;
        for (int m = 0;; m++) {
            if (use_flat && flat_fires && m < 1) continue;
            if (m < wb.m) continue;
            int n = std::max(0, need_e - m);
            if (m == wb.m) n = std::max(n, wb.n);
            return {m, n};
        }
    };

    PairBound full = solve(true, true, true, true, true);
    std::vector<std::string> prov;
    // a constraint fired if it alone forces the bound or dropping it lowers it
    auto fired = [&](bool a, bool s, bool o, bool m, bool f) {
        bool alone = solve(a, s, o, m, f) == full;
        bool binding = solve(!a, !s, !o, !m, !f) < full;
        return alone || binding;
    };
    if (full > PairBound{0, 0}) {
        if (asym && fired(true, false, false, false, false)) prov.push_back("writhe_asymmetry");
        if (half_sum > 0 && fired(false, true, false, false, false))
            prov.push_back("sum_abs_kth_writhes_over_2");
        if (half_odd > 0 && fired(false, false, true, false, false))
            prov.push_back("abs_odd_writhe_over_2");
        if (e > 0 && fired(false, false, false, true, false)) prov.push_back("module_generators");
        if (flat_fires && fired(false, false, false, false, true))
            prov.push_back(flat_assertion ? "flat_nontrivial_asserted" : "flat_parity");
    }
    return {full, prov};
}

inline SearchBudget default_explore_budget(int input_chords) {
    return SearchBudget{input_chords + 2, 10000, 24};
}

// Knot-level index: the diagram-level walk supplies the upper value; the
// combined invariants supply the lower; when they disagree a bounded
// exploration of Reidemeister-equivalent diagrams hunts for smaller upper
// bounds, testing assignments by monotone simplification only.
inline UnknottingReport unknotting_index_knot(const GaussDiagram& g, const SearchBudget& explore,
                                              const SearchBudget& b, bool flat_assertion) {
    UnknottingReport base = unknotting_index_diagram(g, b);
    auto [lower, prov] = combined_lower_bound(g, flat_assertion);

    UnknottingReport rep;
    rep.base_code = base.base_code;
    rep.upper = base.upper;
    rep.certificate = base.certificate;
    rep.trace = base.trace;
    rep.provenance = std::move(prov);
    rep.membership = base.membership;
    rep.lower = std::min(lower, base.upper);

    if (rep.lower < rep.upper && g.chord_count() > 0) {
        struct Node {
            GaussDiagram diagram;
            long parent;
            Move via;
        };
        std::vector<Node> nodes{{g, -1, {}}};
        std::unordered_map<std::string, long> seen{{detail::fast_key(g), 0}};

        auto subsets_of_size = [](const std::vector<int>& pool, int k) {
            std::vector<std::vector<int>> out;
            std::vector<int> sel(static_cast<size_t>(k));
            if (k > static_cast<int>(pool.size())) return out;
            for (int i = 0; i < k; i++) sel[static_cast<size_t>(i)] = i;
            for (;;) {
                std::vector<int> chosen;
                for (int x : sel) chosen.push_back(pool[static_cast<size_t>(x)]);
                out.push_back(std::move(chosen));
                int i = k - 1;
                while (i >= 0 && sel[static_cast<size_t>(i)] ==
                                     static_cast<int>(pool.size()) - (k - i))
                    i--;
                if (i < 0) break;
                sel[static_cast<size_t>(i)]++;
                for (int j = i + 1; j < k; j++)
                    sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
            }
            return out;
        };

        auto scan_diagram = [&](long idx) {
            const GaussDiagram& cur = nodes[static_cast<size_t>(idx)].diagram;
            std::vector<int> ids = cur.chord_ids();
            int c = static_cast<int>(ids.size());
            for (int m = 0; m <= c && PairBound{m, 0} < rep.upper; m++)
                for (int n = 0; m + n <= c && PairBound{m, n} < rep.upper; n++) {
                    if (PairBound{m, n} < rep.lower) continue;
                    for (const auto& vset : subsets_of_size(ids, m)) {
                        std::vector<int> rest;
                        for (int id : ids)
                            if (std::find(vset.begin(), vset.end(), id) == vset.end())
                                rest.push_back(id);
                        for (const auto& cset : subsets_of_size(rest, n)) {
                            Assignment a{vset, cset};
                            auto [simplified, trace] =
                                simplify_monotone(detail::apply_assignment(cur, a));
                            if (simplified.chord_count() != 0) continue;
                            rep.upper = {m, n};
                            rep.base_code = emit_gauss_code(cur);
                            rep.certificate = std::move(a);
                            rep.trace = std::move(trace);
                            rep.equivalence_trace.clear();
                            for (long at = idx; at > 0; at = nodes[static_cast<size_t>(at)].parent)
                                rep.equivalence_trace.push_back(nodes[static_cast<size_t>(at)].via);
                            std::reverse(rep.equivalence_trace.begin(),
                                         rep.equivalence_trace.end());
                            return;
                        }
                    }
                }
        };

        long read = 0;
        while (read < static_cast<long>(nodes.size()) && rep.lower < rep.upper &&
               static_cast<long>(seen.size()) < explore.max_nodes) {
            const long cur_idx = read++;
            if (cur_idx > 0) scan_diagram(cur_idx);
            if (rep.lower >= rep.upper) break;
            const GaussDiagram cur = nodes[static_cast<size_t>(cur_idx)].diagram;
            for (const Move& mv : enumerate_moves(cur, true, explore.max_chords)) {
                GaussDiagram next = apply_move(cur, mv);
                auto [it, fresh] =
                    seen.emplace(detail::fast_key(next), static_cast<long>(nodes.size()));
                if (!fresh) continue;
                nodes.push_back({next, cur_idx, mv});
                if (static_cast<long>(seen.size()) >= explore.max_nodes) break;
            }
        }
    }

    rep.exact = (rep.lower == rep.upper);
    if (!rep.exact)
        for (const PairBound& p : base.unresolved)
            if (p >= rep.lower && p < rep.upper) rep.unresolved.push_back(p);
    return rep;
}

} // namespace vknot
