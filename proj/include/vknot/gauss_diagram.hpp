#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vknot/error.hpp"

namespace vknot {

// Endpoint role on the circle.  A chord is directed from its over-passage to
// its under-passage, so Tail marks the over strand and Head the under strand.
enum class Role : std::uint8_t { Tail, Head };

struct Endpoint {
    int chord = 0;
    Role role = Role::Tail;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// A Gauss diagram: a cyclic sequence of 2c chord endpoints plus a sign per
// chord.  Chord ids are arbitrary distinct positive integers; parsing
// normalizes them to 1..c but operations like virtualize keep ids stable.
// Values are immutable after construction.
class GaussDiagram {
public:
    GaussDiagram() = default;

    GaussDiagram(std::vector<Endpoint> endpoints, std::map<int, int> signs)
        : endpoints_(std::move(endpoints)), signs_(std::move(signs)) {
        std::map<int, int> tails, heads;
        for (const auto& e : endpoints_) {
            auto& n = (e.role == Role::Tail ? tails : heads)[e.chord];
            if (++n > 1)
                throw Error(Errc::DuplicateOccurrence,
                            "chord " + std::to_string(e.chord) + " has a repeated endpoint role");
        }
        if (tails.size() != signs_.size() || heads.size() != signs_.size())
            throw Error(Errc::UnmatchedLabel, "signs do not match the chords present");
        for (const auto& [id, s] : signs_) {
            if (!tails.count(id) || !heads.count(id))
                throw Error(Errc::UnmatchedLabel,
                            "chord " + std::to_string(id) + " lacks a tail or head");
            if (s != 1 && s != -1)
                throw Error(Errc::InvalidSpec, "sign must be +1 or -1");
        }
    }

    int chord_count() const { return static_cast<int>(signs_.size()); }
    const std::vector<Endpoint>& endpoints() const { return endpoints_; }
    const std::map<int, int>& signs() const { return signs_; }

    bool has_chord(int id) const { return signs_.count(id) != 0; }

    int sign(int id) const {
        auto it = signs_.find(id);
        if (it == signs_.end())
            throw Error(Errc::UnknownChord, "chord " + std::to_string(id));
        return it->second;
    }

    int position_of(int id, Role role) const {
        for (size_t i = 0; i < endpoints_.size(); i++)
            if (endpoints_[i].chord == id && endpoints_[i].role == role)
                return static_cast<int>(i);
        throw Error(Errc::UnknownChord, "chord " + std::to_string(id));
    }

    int tail_position(int id) const { return position_of(id, Role::Tail); }
    int head_position(int id) const { return position_of(id, Role::Head); }

    std::vector<int> chord_ids() const {
        std::vector<int> ids;
        ids.reserve(signs_.size());
        for (const auto& [id, s] : signs_) ids.push_back(id);
        return ids;
    }

    int max_chord_id() const { return signs_.empty() ? 0 : signs_.rbegin()->first; }

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<Endpoint> endpoints_;
    std::map<int, int> signs_;
};

// Flat diagram: a diagram with the over/under choice at every crossing
// forgotten.  Forgetting over/under identifies a diagram with all of its
// per-chord crossing changes, so a flat diagram is represented by a signed
// lift normalized so that each stored tail precedes its head; the adjusted
// signs carry the transversality data a flat crossing still retains.
class FlatDiagram {
public:
    FlatDiagram() = default;

    explicit FlatDiagram(GaussDiagram lift) : lift_(std::move(lift)) { normalize(); }

    const GaussDiagram& lift() const { return lift_; }
    int chord_count() const { return lift_.chord_count(); }

    // unsigned endpoint label sequence
    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(lift_.endpoints().size());
        for (const auto& e : lift_.endpoints()) out.push_back(e.chord);
        return out;
    }

    friend bool operator==(const FlatDiagram&, const FlatDiagram&) = default;

private:
    void normalize() {
        for (int id : lift_.chord_ids())
            if (lift_.head_position(id) < lift_.tail_position(id)) {
                // re-orient so the first stored occurrence is the tail
                std::vector<Endpoint> eps = lift_.endpoints();
                for (auto& e : eps)
                    if (e.chord == id) e.role = (e.role == Role::Tail) ? Role::Head : Role::Tail;
                std::map<int, int> signs = lift_.signs();
                signs[id] = -signs[id];
                lift_ = GaussDiagram(std::move(eps), std::move(signs));
            }
    }

    GaussDiagram lift_;
};

// --- extended Gauss code -----------------------------------------------
//
// code  := token*
// token := ('O'|'U') label sign        label := positive decimal integer
// sign  := '+' | '-'
// Tokens may be separated by single spaces or commas.  The empty string is
// the empty diagram.  Both occurrences of a label must carry the same sign.

inline GaussDiagram parse_gauss_code(const std::string& text) {
    std::vector<Endpoint> raw;
    std::map<int, int> signs;
    std::map<int, int> order;  // original label -> normalized id

    size_t i = 0;
    bool expect_token = true;
    while (i < text.size()) {
        char ch = text[i];
        if ((ch == ' ' || ch == ',') && !expect_token) {
            i++;
            expect_token = true;
            continue;
        }
        if (ch != 'O' && ch != 'U')
            throw Error(Errc::MalformedToken,
                        "expected 'O' or 'U' at offset " + std::to_string(i));
        Role role = (ch == 'O') ? Role::Tail : Role::Head;
        i++;
        size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') i++;
        if (i == start)
            throw Error(Errc::MalformedToken, "missing label at offset " + std::to_string(start));
        long label = std::stol(text.substr(start, i - start));
        if (label <= 0)
            throw Error(Errc::MalformedToken, "label must be positive");
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw Error(Errc::MalformedToken, "missing sign after label " + std::to_string(label));
        int sign = (text[i] == '+') ? 1 : -1;
        i++;
        expect_token = false;

        int id;
        auto it = order.find(static_cast<int>(label));
        if (it == order.end()) {
            id = static_cast<int>(order.size()) + 1;
            order[static_cast<int>(label)] = id;
            signs[id] = sign;
        } else {
            id = it->second;
            if (signs[id] != sign)
                throw Error(Errc::SignConflict,
                            "label " + std::to_string(label) + " has conflicting signs");
        }
        for (const auto& e : raw)
            if (e.chord == id && e.role == role)
                throw Error(Errc::DuplicateOccurrence,
                            "label " + std::to_string(label) + " repeats role " +
                                (role == Role::Tail ? "O" : "U"));
        raw.push_back({id, role});
    }
    if (expect_token && !text.empty())
        throw Error(Errc::MalformedToken, "trailing separator");

    std::map<int, int> seen;
    for (const auto& e : raw) seen[e.chord]++;
    for (const auto& [id, n] : seen)
        if (n != 2)
            throw Error(Errc::UnmatchedLabel,
                        "chord " + std::to_string(id) + " occurs " + std::to_string(n) + " time(s)");

    return GaussDiagram(std::move(raw), std::move(signs));
}

inline std::string emit_gauss_code(const GaussDiagram& g) {
    std::string out;
    for (const auto& e : g.endpoints()) {
        out += (e.role == Role::Tail) ? 'O' : 'U';
        out += std::to_string(e.chord);
        out += (g.sign(e.chord) > 0) ? '+' : '-';
    }
    return out;
}

// --- unknotting operations ----------------------------------------------

// Delete the chord: both endpoints removed, everything else untouched.
inline GaussDiagram virtualize(const GaussDiagram& g, int id) {
    if (!g.has_chord(id)) throw Error(Errc::UnknownChord, "chord " + std::to_string(id));
    std::vector<Endpoint> eps;
    eps.reserve(g.endpoints().size() - 2);
    for (const auto& e : g.endpoints())
        if (e.chord != id) eps.push_back(e);
    std::map<int, int> signs = g.signs();
    signs.erase(id);
    return GaussDiagram(std::move(eps), std::move(signs));
}

// Swap the chord's direction and negate its sign.  An involution.
inline GaussDiagram crossing_change(const GaussDiagram& g, int id) {
    if (!g.has_chord(id)) throw Error(Errc::UnknownChord, "chord " + std::to_string(id));
    std::vector<Endpoint> eps = g.endpoints();
    for (auto& e : eps)
        if (e.chord == id) e.role = (e.role == Role::Tail) ? Role::Head : Role::Tail;
    std::map<int, int> signs = g.signs();
    signs[id] = -signs[id];
    return GaussDiagram(std::move(eps), std::move(signs));
}

// Splice g2 (opened at gap pos2) into g1 at gap pos1.  Gap k sits before
// endpoint k; gap 2c equals appending at the end of the stored sequence.
// Chords of g2 are relabeled past the largest id of g1.
inline GaussDiagram connected_sum(const GaussDiagram& g1, int pos1, const GaussDiagram& g2,
                                  int pos2) {
    int n1 = static_cast<int>(g1.endpoints().size());
    int n2 = static_cast<int>(g2.endpoints().size());
    if (pos1 < 0 || pos1 > n1) throw Error(Errc::InvalidPosition, "gap " + std::to_string(pos1));
    if (pos2 < 0 || pos2 > n2) throw Error(Errc::InvalidPosition, "gap " + std::to_string(pos2));

    int offset = g1.max_chord_id();
    std::vector<Endpoint> eps;
    eps.reserve(static_cast<size_t>(n1 + n2));
    for (int i = 0; i < pos1; i++) eps.push_back(g1.endpoints()[static_cast<size_t>(i)]);
    for (int k = 0; k < n2; k++) {
        Endpoint e = g2.endpoints()[static_cast<size_t>((pos2 + k) % (n2 == 0 ? 1 : n2))];
        e.chord += offset;
        eps.push_back(e);
    }
    for (int i = pos1; i < n1; i++) eps.push_back(g1.endpoints()[static_cast<size_t>(i)]);

    std::map<int, int> signs = g1.signs();
    for (const auto& [id, s] : g2.signs()) signs[id + offset] = s;
    return GaussDiagram(std::move(eps), std::move(signs));
}

inline FlatDiagram flat_projection(const GaussDiagram& g) { return FlatDiagram(g); }

// True when the chords' endpoint pairs alternate around the circle.
inline bool chords_interleaved(const GaussDiagram& g, int a, int b) {
    int at = g.tail_position(a), ah = g.head_position(a);
    int n = static_cast<int>(g.endpoints().size());
    auto inside = [&](int p) {  // strictly between at and ah walking forward
        return ((p - at + n) % n) < ((ah - at + n) % n) && p != at;
    };
    return inside(g.tail_position(b)) != inside(g.head_position(b));
}

// --- canonical keys -------------------------------------------------------

namespace detail {

// Compact rotation/relabel-invariant key for search deduplication: two bytes
// per endpoint (fresh label, role-and-sign), minimized over rotations.
// Same equivalence as canonical_key, cheaper to compute.
inline std::string fast_key(const GaussDiagram& g) {
    const auto& eps = g.endpoints();
    int n = static_cast<int>(eps.size());
    if (n == 0) return {};
    int maxid = g.max_chord_id();
    std::vector<signed char> sign_of(static_cast<size_t>(maxid) + 1, 0);
    for (const auto& [id, s] : g.signs()) sign_of[static_cast<size_t>(id)] = static_cast<signed char>(s);
    std::vector<int> relabel(static_cast<size_t>(maxid) + 1, 0);
    std::string best, cand(static_cast<size_t>(2 * n), '\0');
    for (int r = 0; r < n; r++) {
        std::fill(relabel.begin(), relabel.end(), 0);
        int next = 0;
        for (int k = 0; k < n; k++) {
            const Endpoint& e = eps[static_cast<size_t>((r + k) % n)];
            int& lab = relabel[static_cast<size_t>(e.chord)];
            if (lab == 0) lab = ++next;
            cand[static_cast<size_t>(2 * k)] = static_cast<char>(lab);
            cand[static_cast<size_t>(2 * k + 1)] = static_cast<char>(
                (e.role == Role::Head ? 1 : 0) | (sign_of[static_cast<size_t>(e.chord)] < 0 ? 2 : 0));
        }
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

} // namespace detail

// Lexicographically minimal emit over all rotations of the endpoint sequence,
// labels renormalized in first-appearance order.  Equal keys iff the diagrams
// agree up to rotation and relabeling.
inline std::string canonical_key(const GaussDiagram& g) {
    int n = static_cast<int>(g.endpoints().size());
    if (n == 0) return "";
    std::string best;
    for (int r = 0; r < n; r++) {
        std::map<int, int> relabel;
        std::string cand;
        for (int k = 0; k < n; k++) {
            const Endpoint& e = g.endpoints()[static_cast<size_t>((r + k) % n)];
            auto [it, fresh] = relabel.try_emplace(e.chord, static_cast<int>(relabel.size()) + 1);
            cand += (e.role == Role::Tail) ? 'O' : 'U';
            cand += std::to_string(it->second);
            cand += (g.sign(e.chord) > 0) ? '+' : '-';
        }
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

inline std::string emit_flat(const FlatDiagram& f) {
    std::string out;
    for (int c : f.labels()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c);
    }
    return out;
}

} // namespace vknot
