#pragma once

#include <set>
#include <string>
#include <variant>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

// Closure of the 2-braid with p positive half-twists, with the listed
// crossings virtualized (deleted).
struct Torus2Braid {
    int p = 3;
    std::set<int> virtualized;
};

// One long chord crossed by l + r positive rungs, none of which interleave
// each other; l rungs run one way, r the other.  The long chord carries
// c_sign and points from the rung side when c_up is set.
struct Twisted {
    int l = 0;
    int r = 0;
    int c_sign = 1;
    bool c_up = true;
};

struct ClassicalTrefoilSum {
    int n = 1;
};

struct VirtualTrefoilSum {
    int n = 1;
};

struct Kishino {};

// The Kishino fixture with its first two chords crossing-changed; its group
// module matches the trefoil's.
struct KishinoChanged {};

using FamilySpec =
    std::variant<Torus2Braid, Twisted, ClassicalTrefoilSum, VirtualTrefoilSum, Kishino,
                 KishinoChanged>;

// Diagram with all writhe invariants zero, unit Alexander gcds, a trivial
// f-polynomial, (1,0)-unknottable (delete chord 3) but with no crossing-change
// subset that unknots it, not trivializable within the searched budgets, and
// whose {1,2}-changed variant presents the trefoil module (gcd t^2 - t + 1)
// while staying (1,0)-unknottable.  tests/test_families.cpp re-derives these
// properties.
inline constexpr const char* kishino_code = "O1-U2+O3+O2+U4+U5-U1-O5-U3+O4+";

inline GaussDiagram generate(const FamilySpec& spec) {
    struct Builder {
        GaussDiagram operator()(const Torus2Braid& t) const {
            if (t.p < 1 || t.p % 2 == 0)
                throw Error(Errc::InvalidSpec, "torus 2-braid needs odd p >= 1");
            std::vector<Endpoint> eps;
            std::map<int, int> signs;
            for (int j = 1; j <= 2 * t.p; j++) {
                int chord = ((j - 1) % t.p) + 1;
                eps.push_back({chord, (j % 2 == 1) ? Role::Tail : Role::Head});
                signs[chord] = 1;
            }
            GaussDiagram g(std::move(eps), std::move(signs));
            for (int id : t.virtualized) {
                if (id < 1 || id > t.p)
                    throw Error(Errc::InvalidSpec, "virtualized id out of range");
                g = virtualize(g, id);
            }
            return g;
        }

        GaussDiagram operator()(const Twisted& t) const {
            if (t.l < 0 || t.r < 0) throw Error(Errc::InvalidSpec, "rung counts must be >= 0");
            if (t.c_sign != 1 && t.c_sign != -1)
                throw Error(Errc::InvalidSpec, "c_sign must be +1 or -1");
            int rungs = t.l + t.r;
            int c_id = rungs + 1;
            std::vector<Endpoint> eps;
            std::map<int, int> signs;
            // [c, a_1 .. a_rungs, c', a'_rungs .. a'_1]  with nested rungs
            eps.push_back({c_id, t.c_up ? Role::Tail : Role::Head});
            for (int i = 1; i <= rungs; i++) {
                bool left_to_right = i <= t.l;
                eps.push_back({i, left_to_right ? Role::Tail : Role::Head});
                signs[i] = 1;
            }
            eps.push_back({c_id, t.c_up ? Role::Head : Role::Tail});
            for (int i = rungs; i >= 1; i--) {
                bool left_to_right = i <= t.l;
                eps.push_back({i, left_to_right ? Role::Head : Role::Tail});
            }
            signs[c_id] = t.c_sign;
            return GaussDiagram(std::move(eps), std::move(signs));
        }

        GaussDiagram operator()(const ClassicalTrefoilSum& t) const {
            if (t.n < 0) throw Error(Errc::InvalidSpec, "n must be >= 0");
            GaussDiagram sum;
            GaussDiagram trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+");
            for (int i = 0; i < t.n; i++)
                sum = connected_sum(sum, static_cast<int>(sum.endpoints().size()), trefoil, 0);
            return sum;
        }

        GaussDiagram operator()(const VirtualTrefoilSum& t) const {
            if (t.n < 0) throw Error(Errc::InvalidSpec, "n must be >= 0");
            // each summand is opened at gap 1, which keeps the single-change
            // unknotting pattern of every block away from the splice points;
            // opened at gap 0 the concatenation is a genuinely different
            // (and nontrivial) knot
            GaussDiagram sum;
            GaussDiagram vtrefoil = parse_gauss_code("O1+O2+U1+U2+");
            for (int i = 0; i < t.n; i++)
                sum = connected_sum(sum, static_cast<int>(sum.endpoints().size()), vtrefoil, 1);
            return sum;
        }

        GaussDiagram operator()(const Kishino&) const { return parse_gauss_code(kishino_code); }

        GaussDiagram operator()(const KishinoChanged&) const {
            GaussDiagram g = parse_gauss_code(kishino_code);
            return crossing_change(crossing_change(g, 1), 2);
        }
    };
    return std::visit(Builder{}, spec);
}

} // namespace vknot
