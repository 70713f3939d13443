#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/testspace.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>

using namespace relfrob;

namespace
{
    auto triangle() -> TestSpace
    {
        return make_testspace({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" }, { "a", "c" } });
    }
}

TEST_SUITE("testspace") {
    TEST_CASE("events") {
        auto t = make_testspace({ "a", "b" }, { { "a", "b" } });
        auto e = events(t);
        CHECK(e == std::vector<Event>{ 0, 1, 2, 3 });
        CHECK(format_event(t, 0) == "{}");
        CHECK(format_event(t, 3) == "{a,b}");
        CHECK(events(make_testspace({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" } })).size() == 6);
        CHECK(events(triangle()).size() == 7);
    }

    TEST_CASE("malformed test spaces") {
        CHECK_THROWS_AS(make_testspace({ "a" }, { {} , { "a" } }), InputError);
        CHECK_THROWS_AS(make_testspace({ "a", "b" }, { { "a" } }), InputError);
        CHECK_THROWS_AS(make_testspace({ "a" }, { { "z" } }), InputError);
        CHECK_THROWS_AS(make_testspace({ "a", "a" }, { { "a" } }), InputError);
        CHECK_NOTHROW(make_testspace({}, { {} }));
    }

    TEST_CASE("a single test is algebraic") {
        auto t = make_testspace({ "a", "b", "c" }, { { "a", "b", "c" } });
        CHECK(check_algebraicity(t).algebraic);
        auto l = algebraicity_as_lifting(t);
        CHECK(l.by_lifting);
        CHECK(l.by_scan);
    }

    TEST_CASE("the triangle") {
        auto t = triangle();
        auto r = check_algebraicity(t);
        CHECK(r.algebraic == oracle::algebraic(t, false));
        CHECK(check_algebraicity(t, AlgebraicityReading::Literal).algebraic == oracle::algebraic(t, true));
        auto l = algebraicity_as_lifting(t);
        CHECK(l.by_lifting == l.by_scan);
    }

    TEST_CASE("a non-algebraic space with matching witnesses") {
        auto t = make_testspace({ "a", "b" }, { { "a" }, { "a", "b" } });
        CHECK(! oracle::algebraic(t, false));
        auto r = check_algebraicity(t);
        CHECK(! r.algebraic);
        REQUIRE(r.witness.has_value());
        auto [a, b, c, d] = *r.witness;
        CHECK((a & b) == 0);
        CHECK((b & c) == 0);
        CHECK((c & d) == 0);
        CHECK(! ((a & d) == 0 && (t.tests.end() != std::find(t.tests.begin(), t.tests.end(), a | d))));

        auto l = algebraicity_as_lifting(t);
        CHECK(! l.by_lifting);
        CHECK(! l.by_scan);
        REQUIRE(l.lifting_witness.has_value());
        CHECK(*l.lifting_witness == *r.witness);
    }

    TEST_CASE("scan agrees with brute force on small spaces") {
        auto spaces = enumerate_test_spaces(4, 4);
        CHECK(! spaces.empty());
        for (auto & t : spaces) {
            CHECK(check_algebraicity(t).algebraic == oracle::algebraic(t, false));
            CHECK(check_algebraicity(t, AlgebraicityReading::Literal).algebraic == oracle::algebraic(t, true));
        }
    }

    TEST_CASE("lifting agrees with the scan on small spaces") {
        for (auto & t : enumerate_test_spaces(3, 4)) {
            auto l = algebraicity_as_lifting(t);
            CHECK(l.by_lifting == l.by_scan);
        }
    }

    TEST_CASE("enumeration up to isomorphism") {
        CHECK(enumerate_test_spaces(1, 1).size() == 1);
        CHECK(enumerate_test_spaces(2, 3).size() == 5);
    }

    TEST_CASE("the eps-set of a one-test space") {
        auto t = make_testspace({ "a" }, { { "a" } });
        auto x = sset_of_testspace(t, 3);
        CHECK(validate(x).ok);
        CHECK(x.count(1) == 2);
        REQUIRE(x.eps_count() == 1);
        CHECK(x.cell_names[1][x.eps_edge[0]] == "{a}");
    }

    TEST_CASE("edges are events") {
        for (auto & entry : catalog_testspaces()) {
            auto x = sset_of_testspace(entry.space, 3);
            CHECK(validate(x).ok);
            CHECK(x.count(1) == int(events(entry.space).size()));
            CHECK(x.eps_count() == int(entry.space.tests.size()));
        }
    }

    TEST_CASE("the empty space") {
        auto with = sset_of_testspace(make_testspace({}, { {} }), 3);
        CHECK(nondegenerate_counts(with) == std::vector<int>{ 1, 0, 0, 0 });
        REQUIRE(with.eps_count() == 1);
        CHECK(with.eps_edge[0] == with.degen(0, 0, 0));
        auto without = sset_of_testspace(make_testspace({}, {}), 3);
        CHECK(without.eps_count() == 0);
    }

    TEST_CASE("the algebraicity shape") {
        auto s = algebraicity_shape(2);
        CHECK(validate(s.domain).ok);
        CHECK(nondegenerate_counts(s.domain)[2] == 3);
        CHECK(s.domain.eps_count() == 3);
        CHECK(s.ambient.set->eps_count() == 4);
    }
}
