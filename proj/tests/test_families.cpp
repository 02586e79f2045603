#include <catch2/catch.hpp>

#include "vknot/alexander.hpp"
#include "vknot/families.hpp"
#include "vknot/triviality.hpp"
#include "vknot/writhe.hpp"

using namespace vknot;

TEST_CASE("torus 2-braid: p = 3 is the standard trefoil") {
    CHECK(emit_gauss_code(generate(Torus2Braid{3, {}})) == "O1+U2+O3+U1+O2+U3+");
}

TEST_CASE("torus 2-braid: virtualization and validation") {
    GaussDiagram g = generate(Torus2Braid{5, {1}});
    CHECK(g.chord_count() == 4);
    for (int id : g.chord_ids()) {
        CHECK(g.sign(id) == 1);
        CHECK(chord_index(g, id) % 2 != 0);  // every remaining chord is odd
    }
    CHECK(odd_writhe(g) == 4);
    CHECK_THROWS_MATCHES(generate(Torus2Braid{4, {}}), Error,
                         Catch::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::InvalidSpec;
                         }));
    CHECK_THROWS_MATCHES(generate(Torus2Braid{3, {9}}), Error,
                         Catch::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::InvalidSpec;
                         }));
}

TEST_CASE("twisted family: rung structure") {
    GaussDiagram g = generate(Twisted{2, 1, -1, true});
    CHECK(g.chord_count() == 4);
    int c_id = 4;
    CHECK(g.sign(c_id) == -1);
    // rungs are positive, pairwise non-interleaved, and all cross the long chord
    for (int i = 1; i <= 3; i++) {
        CHECK(g.sign(i) == 1);
        CHECK(chords_interleaved(g, i, c_id));
        for (int j = i + 1; j <= 3; j++) CHECK(!chords_interleaved(g, i, j));
    }
    CHECK(std::abs(chord_index(g, c_id)) == 1);
    CHECK_THROWS_AS(generate(Twisted{-1, 0, 1, true}), Error);
    CHECK_THROWS_AS(generate(Twisted{1, 1, 2, true}), Error);
}

TEST_CASE("trefoil sums") {
    CHECK(generate(ClassicalTrefoilSum{0}).chord_count() == 0);
    GaussDiagram two = generate(ClassicalTrefoilSum{2});
    CHECK(two.chord_count() == 6);
    CHECK(writhe_polynomial(two).is_zero());

    GaussDiagram v3 = generate(VirtualTrefoilSum{3});
    CHECK(v3.chord_count() == 6);
    for (int id : v3.chord_ids()) {
        CHECK(v3.sign(id) == 1);
        CHECK(chord_index(v3, id) % 2 != 0);
    }
    CHECK_THROWS_AS(generate(VirtualTrefoilSum{-1}), Error);
}

TEST_CASE("kishino fixture validation") {
    GaussDiagram k = generate(Kishino{});
    CHECK(emit_gauss_code(k) == kishino_code);

    // all k-th writhes vanish (the whole polynomial is zero), odd writhe 0
    CHECK(writhe_polynomial(k).is_zero());
    CHECK(odd_writhe(k) == 0);
    // the alexander bound is vacuous
    CHECK(e_lower_bound(k) == 0);
    // (1,0)-unknottable: deleting chord 3 simplifies to the empty diagram
    auto [simplified, trace] = simplify_monotone(virtualize(k, 3));
    CHECK(simplified.chord_count() == 0);
    // but the diagram itself resists the bounded search
    SearchBudget b{k.chord_count() + 2, 60000, 20};
    CHECK(is_trivial_bounded(k, b).verdict == Verdict::Unknown);
}

TEST_CASE("kishino fixture: crossing changes alone never unknot it") {
    GaussDiagram k = generate(Kishino{});
    SearchBudget b{k.chord_count() + 2, 30000, 16};
    int c = k.chord_count();
    for (int mask = 1; mask < (1 << c); mask++) {
        GaussDiagram h = k;
        for (int i = 1; i <= c; i++)
            if (mask & (1 << (i - 1))) h = crossing_change(h, i);
        CHECK(is_trivial_bounded(h, b).verdict != Verdict::Trivial);
    }
}

TEST_CASE("kishino changed: trefoil module, still (1,0)-unknottable") {
    GaussDiagram k0 = generate(KishinoChanged{});
    CHECK(k0 == crossing_change(crossing_change(generate(Kishino{}), 1), 2));
    PresentationMatrix red = reduced_matrix(fox_alexander_matrix(wirtinger_presentation(k0)));
    LaurentPolynomial delta = LaurentPolynomial::monomial(1, 2) -
                              LaurentPolynomial::monomial(1, 1) + LaurentPolynomial::one();
    CHECK(alexander_gcd(red, 0) == delta);
    CHECK(alexander_gcd(red, 1).is_unit());
    CHECK(e_lower_bound(k0) == 1);
    bool some_deletion_unknots = false;
    for (int id : k0.chord_ids())
        if (simplify_monotone(virtualize(k0, id)).first.chord_count() == 0)
            some_deletion_unknots = true;
    CHECK(some_deletion_unknots);
}

TEST_CASE("kishino flat projection: parity zero and search-resistant") {
    GaussDiagram k = generate(Kishino{});
    FlatDiagram f = flat_projection(k);
    CHECK(flat_parity(f) == 0);
    auto verdict = flat_trivial_bounded(f, SearchBudget{k.chord_count() + 2, 8000, 16});
    CHECK(verdict.verdict == Verdict::Unknown);
}
