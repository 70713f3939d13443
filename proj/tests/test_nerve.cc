#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/lifting.hh>
#include <relfrob/nerve.hh>
#include <relfrob/shapes.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>

using namespace relfrob;

namespace
{
    auto frob(const std::string & name) -> FrobeniusAlgebra
    {
        return *catalog_entry(name).input.frobenius;
    }
}

TEST_SUITE("nerve") {
    TEST_CASE("the one-element nerve is a point") {
        auto x = nerve_frobenius(frob("one"), 4);
        CHECK(nondegenerate_counts(x) == std::vector<int>{ 1, 0, 0, 0, 0 });
        REQUIRE(x.eps_count() == 1);
        CHECK(x.eps_edge[0] == x.degen(0, 0, 0));
    }

    TEST_CASE("low dimensions of N(Bool2)") {
        auto x = nerve_frobenius(frob("bool2"), 4);
        CHECK(validate(x).ok);
        CHECK(x.count(0) == 1);
        CHECK(x.count(1) == 2);
        CHECK(x.count(2) == 3);
        CHECK(nondegenerate_counts(x)[2] == 0);
        REQUIRE(x.eps_count() == 1);
        CHECK(x.cell_names[1][x.eps_edge[0]] == "1");
        int e1 = x.cell_index(1, "1");
        int e0 = x.cell_index(1, "0");
        CHECK(x.degen(1, 0, e1) == x.cell_index(2, "(1,0,1)"));
        CHECK(x.degen(1, 1, e1) == x.cell_index(2, "(0,1,1)"));
        CHECK(x.degen(0, 0, 0) == e0);
    }

    TEST_CASE("faces of a 2-cell") {
        auto x = nerve_monoid(m2_monoid(), 2);
        int c = x.cell_index(2, "(a,a,e)");
        CHECK(x.cell_names[1][x.face(2, 0, c)] == "a");
        CHECK(x.cell_names[1][x.face(2, 1, c)] == "e");
        CHECK(x.cell_names[1][x.face(2, 2, c)] == "a");
        CHECK(edge_of(x, 2, c, 0, 1) == x.cell_index(1, "a"));
        CHECK(edge_of(x, 2, c, 0, 2) == x.cell_index(1, "e"));
    }

    TEST_CASE("M2 has five 2-cells") {
        CHECK(nerve_monoid(m2_monoid(), 4).count(2) == 5);
    }

    TEST_CASE("N(diamond) has four edges and one witness") {
        auto x = nerve_frobenius(frob("diamond"), 4);
        CHECK(x.count(1) == 4);
        REQUIRE(x.eps_count() == 1);
        CHECK(x.cell_names[1][x.eps_edge[0]] == "1");
    }

    TEST_CASE("cells are chains") {
        for (auto & entry : catalog_all()) {
            INFO(entry.name);
            auto x = nerve_monoid(entry.input.monoid, 4);
            CHECK(validate(x).ok);
            for (int n = 0 ; n <= 4 ; ++n)
                CHECK(x.count(n) == oracle::count_chains(entry.input.monoid, n));
        }
    }

    TEST_CASE("a non-monoid has no nerve") {
        auto m = make_monoid({ "e", "a" }, { { "e", "e", "e" }, { "a", "e", "a" } }, { "e" });
        CHECK_THROWS_AS(nerve_monoid(m, 3), InputError);
    }

    TEST_CASE("the identity hom gives the identity map") {
        for (auto & entry : catalog_frobenius()) {
            auto x = nerve_frobenius(*entry.input.frobenius, 3);
            ElementMap id(entry.input.monoid.size());
            for (int a = 0 ; a < int(id.size()) ; ++a)
                id[a] = a;
            CHECK(nerve_map(x, x, id) == identity_map(x));
        }
    }

    TEST_CASE("nerve maps are functorial") {
        auto b = frob("bool2");
        auto m4 = frob("mv4");
        auto b8 = frob("bool8");
        auto nb = nerve_frobenius(b, 3), n4 = nerve_frobenius(m4, 3), n8 = nerve_frobenius(b8, 3);
        for (auto & h : enumerate_frobenius_homs(b, m4))
            for (auto & g : enumerate_frobenius_homs(m4, b8)) {
                ElementMap gh(h.size());
                for (std::size_t a = 0 ; a < h.size() ; ++a)
                    gh[a] = g[h[a]];
                CHECK(nerve_map(nb, n8, gh) == compose(nerve_map(n4, n8, g), nerve_map(nb, n4, h)));
            }
    }

    TEST_CASE("Bool2 has one nerve endomorphism") {
        auto x = nerve_frobenius(frob("bool2"), 4);
        CHECK(enumerate_nerve_maps(x, x).size() == 1);
    }

    TEST_CASE("nerve maps of M2 are its homomorphisms") {
        auto m = m2_monoid();
        auto x = nerve_monoid(m, 4);
        auto maps = enumerate_nerve_maps(x, x);
        auto homs = enumerate_monoid_homs(m, m);
        CHECK(maps.size() == homs.size());
        for (auto & h : homs)
            CHECK(std::find(maps.begin(), maps.end(), nerve_map(x, x, h)) != maps.end());
    }

    TEST_CASE("associativity extensions hold on monoid nerves") {
        auto left = realize("faces-delta:3:1,3", 4);
        auto right = realize("faces-delta:3:0,2", 4);
        for (auto & entry : catalog_all()) {
            INFO(entry.name);
            auto x = nerve_monoid(entry.input.monoid, 4);
            CHECK(check_extension(left, x, LiftMode::Exists).holds);
            CHECK(check_extension(right, x, LiftMode::Exists).holds);
        }
    }
}
