#include <relfrob/catalog.hh>
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

    struct Target
    {
        std::string name;
        EpsSimplicialSet set;
    };

    auto small_targets(int k) -> std::vector<Target>
    {
        return {
            { "bool2", nerve_frobenius(frob("bool2"), k) },
            { "mv3", nerve_frobenius(frob("mv3"), k) },
            { "z2", nerve_frobenius(frob("z2"), k) },
            { "discrete2", nerve_frobenius(frob("discrete2"), k) },
            { "m2", nerve_monoid(m2_monoid(), k) },
            { "bool2 with a second witness", duplicate_witness(nerve_frobenius(frob("bool2"), k), 0) },
        };
    }
}

TEST_SUITE("lifting") {
    TEST_CASE("maps from a point are vertices") {
        auto point = *standard_simplex(0, false, 3).set;
        for (auto & t : small_targets(3))
            CHECK(count_maps(point, t.set) == t.set.count(0));
    }

    TEST_CASE("Sigma one into N(Bool2)") {
        auto maps = enumerate_maps(*standard_simplex(1, true, 4).set, nerve_frobenius(frob("bool2"), 4));
        CHECK(maps.size() == 1);
    }

    TEST_CASE("Delta one into N(M2)") {
        CHECK(count_maps(*standard_simplex(1, false, 4).set, nerve_monoid(m2_monoid(), 4)) == 2);
    }

    TEST_CASE("map counts agree with brute force") {
        std::vector<std::string> shapes{ "delta:2", "sigma:2", "delta:3", "sigma:3", "boundary:3", "horn:3:1" };
        for (auto & t : small_targets(3))
            for (auto & g : shapes) {
                INFO(t.name << " " << g);
                auto s = realize(g, 3);
                auto expected = oracle::all_maps(s.domain, t.set);
                auto found = enumerate_maps(s.domain, t.set);
                CHECK(found.size() == expected.size());
                std::sort(expected.begin(), expected.end());
                std::sort(found.begin(), found.end());
                CHECK(found == expected);
            }
    }

    TEST_CASE("extension counts agree with brute force") {
        std::vector<std::string> shapes{ "horn:2:0", "horn:2:1", "eps-horn:2:0", "eps-horn:2:2", "horn:3:0",
            "horn:3:1", "horn:3:2", "horn:3:3", "eps-horn:3:0", "eps-horn:3:3", "boundary:3", "faces-delta:3:1,3",
            "cells-sigma:3:013+2" };
        for (auto & t : small_targets(3))
            for (auto & g : shapes) {
                INFO(t.name << " " << g);
                auto s = realize(g, 3);
                auto expected = oracle::extension_counts(s.domain, *s.ambient.set, s.inclusion, t.set);
                auto unique = check_extension(s, t.set, LiftMode::Unique);
                CHECK(unique.total_instances == expected.instances);
                CHECK(unique.without_extension == expected.without);
                CHECK(unique.with_several == expected.several);
                CHECK(unique.holds == (expected.without == 0 && expected.several == 0));
                auto exists = check_extension(s, t.set, LiftMode::Exists);
                CHECK(exists.without_extension == expected.without);
                CHECK(exists.holds == (expected.without == 0));
            }
    }

    TEST_CASE("the second epsilon-horn on Bool2 fills with the rotation") {
        auto x = nerve_frobenius(frob("bool2"), 2);
        auto s = realize("eps-horn:2:0", 2);
        CHECK(check_extension(s, x, LiftMode::Unique).holds);

        auto & amb = *s.ambient.set;
        int one = x.cell_index(1, "1");
        int filled = 0;
        for (auto & g : enumerate_maps(amb, x))
            if (g.cells[1][amb.cell_index(1, "01")] == one) {
                ++filled;
                CHECK(g.cells[1][amb.cell_index(1, "02")] == one);
                CHECK(x.cell_names[1][g.cells[1][amb.cell_index(1, "12")]] == "0");
            }
        CHECK(filled == 1);
    }

    TEST_CASE("M2 fails the outer horn with a witness") {
        auto r = check_extension(realize("horn:3:0", 3), nerve_monoid(m2_monoid(), 3), LiftMode::Exists);
        CHECK(! r.holds);
        REQUIRE(! r.failures.empty());
        CHECK(r.failures[0].extensions == 0);
        CHECK(! r.failures[0].assignment.empty());
    }

    TEST_CASE("failure lists respect the cap") {
        auto r = check_extension(realize("horn:3:0", 3), nerve_monoid(m2_monoid(), 3), LiftMode::Exists, 1);
        CHECK(r.failures.size() == 1);
        CHECK(r.failing_instances >= 1);
    }

    TEST_CASE("boundaries fill uniquely on nerves") {
        auto b3 = realize("boundary:3", 4);
        auto b4 = realize("boundary:4", 4);
        for (auto & entry : catalog_all()) {
            INFO(entry.name);
            auto x = nerve_monoid(entry.input.monoid, 4);
            CHECK(check_extension(b3, x, LiftMode::Unique).holds);
            CHECK(check_extension(b4, x, LiftMode::Unique).holds);
        }
    }

    TEST_CASE("isomorphism search") {
        auto b4 = nerve_frobenius(frob("bool4"), 3);
        auto d = nerve_frobenius(frob("diamond"), 3);
        auto iso = find_sset_isomorphism(b4, d);
        REQUIRE(iso.has_value());
        CHECK(is_bijective(*iso, d));
        CHECK(is_natural(b4, d, *iso));
        CHECK(! find_sset_isomorphism(b4, nerve_frobenius(frob("mv4"), 3)).has_value());
        auto b2 = nerve_frobenius(frob("bool2"), 3);
        CHECK(! find_sset_isomorphism(b2, duplicate_witness(b2, 0)).has_value());
    }

    TEST_CASE("pinned searches") {
        auto x = nerve_monoid(m2_monoid(), 3);
        auto d1 = *standard_simplex(1, false, 3).set;
        SSetIndex source(d1), target(x);
        MapSearch search(source, target);
        CHECK(search.fix(1, d1.cell_index(1, "01"), x.cell_index(1, "a")));
        long n = search.run([] (const SimplicialMap &) { return true; });
        CHECK(n == 1);
    }
}
