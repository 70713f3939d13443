#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/nerve.hh>
#include <relfrob/theorems.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace relfrob;

namespace
{
    auto frob(const std::string & name) -> FrobeniusAlgebra
    {
        return *catalog_entry(name).input.frobenius;
    }

    auto check_value(const TheoremReport & r, const std::string & name) -> bool
    {
        for (auto & c : r.checks)
            if (c.name == name)
                return c.value;
        FAIL("no check named " << name);
        return false;
    }

    auto one_point_nerve() -> EpsSimplicialSet
    {
        return nerve_frobenius(frob("one"), 4);
    }
}

TEST_SUITE("theorems") {
    TEST_CASE("cancellation on Bool2") {
        auto r = cancellation_and_horns(frob("bool2").monoid);
        CHECK(r.theorem == "cancellation");
        CHECK(r.holds);
        CHECK(r.checks.size() == 7);
        for (auto & c : r.checks)
            CHECK(c.value);
    }

    TEST_CASE("cancellation on M2") {
        auto r = cancellation_and_horns(m2_monoid());
        CHECK(r.holds);
        for (std::string n : { "first-coordinate cancellation", "horn:3:0", "second-coordinate cancellation", "horn:3:3",
                "partiality", "horn:3:1", "horn:3:2" })
            CHECK(! r.value(n));
    }

    TEST_CASE("cancellation on the one-element monoid") {
        auto r = cancellation_and_horns(frob("one").monoid);
        CHECK(r.holds);
        for (auto & c : r.checks)
            CHECK(c.value);
        CHECK_THROWS_AS((void) r.value("no such check"), std::out_of_range);
    }

    TEST_CASE("cancellation predicates on small monoids") {
        for (auto & m : enumerate_small_monoids(2)) {
            auto r = cancellation_and_horns(m);
            CHECK(r.holds);
            bool partial = true;
            for (int a = 0 ; a < m.size() ; ++a)
                for (int b = 0 ; b < m.size() ; ++b)
                    partial = partial && m.mu.outputs(a, b).size() <= 1;
            CHECK(r.value("partiality") == partial);
        }
    }

    TEST_CASE("unique eps-horns on Bool2 and the diamond") {
        auto r = unique_eps_horns(frob("bool2"), 4);
        CHECK(r.theorem == "eps-horns");
        CHECK(r.holds);
        CHECK(r.checks.size() == 8);
        CHECK(unique_eps_horns(frob("diamond"), 3).holds);
    }

    TEST_CASE("extracted relations on nerves are the algebra's") {
        for (auto & entry : catalog_frobenius()) {
            INFO(entry.name);
            auto & f = *entry.input.frobenius;
            auto r = mu_delta_of_sset(nerve_frobenius(f, 4));
            CHECK(r.edges == f.elements());

            std::set<Triple> mu(f.monoid.mu.triples().begin(), f.monoid.mu.triples().end());
            CHECK(std::set<Triple>(r.mu.begin(), r.mu.end()) == mu);

            std::set<Triple> delta(f.delta.triples().begin(), f.delta.triples().end());
            CHECK(std::set<Triple>(r.delta.begin(), r.delta.end()) == delta);

            auto ab = alpha_beta(f);
            std::set<std::pair<int, int>> alpha, beta;
            for (int x = 0 ; x < f.size() ; ++x) {
                alpha.emplace(x, ab.alpha_hat[x]);
                beta.emplace(x, ab.beta_hat[x]);
            }
            CHECK(std::set<std::pair<int, int>>(r.alpha.begin(), r.alpha.end()) == alpha);
            CHECK(std::set<std::pair<int, int>>(r.beta.begin(), r.beta.end()) == beta);

            CHECK(std::vector<int>(r.degenerate_edges) == f.monoid.eta);
            CHECK(std::vector<int>(r.eps_edges) == f.epsilon);
        }
    }

    TEST_CASE("the Bool2 rotation relation") {
        auto r = mu_delta_of_sset(nerve_frobenius(frob("bool2"), 3));
        CHECK(r.alpha == std::vector<std::pair<int, int>>{ { 0, 1 }, { 1, 0 } });
    }

    TEST_CASE("two-sided delta") {
        auto r = two_sided_delta(nerve_frobenius(frob("bool2"), 4));
        CHECK(r.theorem == "two-sided-delta");
        CHECK(! r.skipped);
        CHECK(r.holds);
        CHECK(two_sided_delta(one_point_nerve()).holds);

        auto m = two_sided_delta(nerve_monoid(m2_monoid(), 4));
        CHECK(m.skipped);
        CHECK(m.skip_reason.find("eps-horn:1:0") != std::string::npos);
    }

    TEST_CASE("two-sided delta agrees with the algebra") {
        // both sides read off the algebra itself
        for (std::string name : { "mv3", "z3", "codiscrete2", "circle2" }) {
            INFO(name);
            auto f = frob(name);
            auto ab = alpha_beta(f);
            int n = f.size();
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    for (int c = 0 ; c < n ; ++c) {
                        bool left = f.monoid.mu.contains(c, ab.alpha_hat[b], a);
                        bool right = f.monoid.mu.contains(ab.beta_hat[a], c, b);
                        CHECK(left == right);
                    }
            CHECK(two_sided_delta(nerve_frobenius(f, 4)).holds);
        }
    }

    TEST_CASE("comparison shapes") {
        auto s = comparison_shapes();
        CHECK(s.i_shapes.size() == 4);
        CHECK(s.j_shapes.size() == 3);
        for (auto & [name, grammar] : s.i_shapes)
            CHECK_NOTHROW(parse_shape(grammar));
        for (auto & [name, grammar] : s.j_shapes)
            CHECK_NOTHROW(parse_shape(grammar));
        CHECK(s.j2_variant.first == "J2 variant");
    }

    TEST_CASE("comparisons on small nerves") {
        for (std::string name : { "one", "bool2", "z2" }) {
            INFO(name);
            auto r = comparison_equivalences(nerve_frobenius(frob(name), 4));
            CHECK(r.theorem == "comparisons");
            CHECK(r.holds);
            for (std::string k : { "I1", "I2", "I3", "I4", "J1", "J2", "J3" })
                CHECK(check_value(r, k));
        }
        CHECK_THROWS_AS(comparison_equivalences(nerve_frobenius(frob("bool2"), 3)), InputError);
    }

    TEST_CASE("comparisons on a nerve with a deleted 2-cell") {
        auto x = nerve_frobenius(frob("mv3"), 4);
        auto y = delete_two_cell(x, x.cell_index(2, "(1/2,1/2,1)"));
        auto r = comparison_equivalences(y);
        CHECK(r.holds);
        CHECK(! check_value(r, "I1"));
        CHECK(! check_value(r, "J1"));
    }

    TEST_CASE("face unions") {
        auto r = face_union_extensions(nerve_frobenius(frob("bool2"), 4));
        CHECK(r.theorem == "face-unions");
        CHECK(! r.skipped);
        CHECK(r.holds);
        // n = 1..4 with exactly one of faces 0 and n: 2 * 2^(n-1) unions each
        CHECK(r.checks.size() == 2 + 4 + 8 + 16);
        auto s = face_union_extensions(drop_witnesses(nerve_frobenius(frob("bool2"), 4)));
        CHECK(s.skipped);
    }

    TEST_CASE("characterize accepts nerves") {
        for (std::string name : { "one", "bool2", "mv3", "z2", "discrete2" }) {
            INFO(name);
            auto f = frob(name);
            auto r = characterize(nerve_frobenius(f, 4));
            CHECK(r.accepted);
            CHECK(r.accepted_without_uniqueness);
            REQUIRE(r.algebra.has_value());
            CHECK(find_isomorphism(*r.algebra, f).has_value());
        }
    }

    TEST_CASE("characterize rejects the controls") {
        auto b = nerve_frobenius(frob("bool2"), 4);
        auto dup = characterize(duplicate_witness(b, 0));
        CHECK(! dup.accepted);
        CHECK(dup.failed_condition == "(i) eps-horn:1:0 uniqueness");

        auto bare = characterize(drop_witnesses(b));
        CHECK(! bare.accepted);
        CHECK(bare.failed_condition == "(i) eps-horn:1:0 existence");

        auto d = nerve_frobenius(frob("diamond"), 4);
        auto del = characterize(delete_two_cell(d, d.cell_index(2, "(a,b,1)")));
        CHECK(! del.accepted);
        CHECK(del.failed_condition.rfind("(i) eps-horn:", 0) == 0);
        CHECK(! del.witness.empty());
    }

    TEST_CASE("characterize needs four dimensions") {
        CHECK_THROWS_AS(characterize(nerve_frobenius(frob("bool2"), 3)), InputError);
    }

    TEST_CASE("nerves agree with their completions") {
        for (auto & entry : catalog_frobenius())
            CHECK(agrees_with_completion(nerve_frobenius(*entry.input.frobenius, 4)));
        auto b = nerve_frobenius(frob("bool8"), 4);
        CHECK(! agrees_with_completion(duplicate_three_cell(b, SSetIndex(b).nondegenerate_cells(3).at(0))));
    }
}
