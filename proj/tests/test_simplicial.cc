#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/lifting.hh>
#include <relfrob/nerve.hh>
#include <relfrob/shapes.hh>
#include <relfrob/simplicial.hh>

#include "oracles.hh"

#include <doctest.h>

#include <map>
#include <memory>
#include <stdexcept>

using namespace relfrob;

namespace
{
    /// The map sub -> super between two materialized subobjects of one parent.
    auto between(const Materialized & sub, const Materialized & super) -> SimplicialMap
    {
        SimplicialMap m;
        m.cells.resize(sub.set.trunc_dim + 1);
        for (int d = 0 ; d <= sub.set.trunc_dim ; ++d) {
            std::map<int, int> back;
            for (int c = 0 ; c < super.set.count(d) ; ++c)
                back[super.inclusion.cells[d][c]] = c;
            for (int c = 0 ; c < sub.set.count(d) ; ++c)
                m.cells[d].push_back(back.at(sub.inclusion.cells[d][c]));
        }
        std::map<int, int> back;
        for (int e = 0 ; e < super.set.eps_count() ; ++e)
            back[super.inclusion.eps[e]] = e;
        for (int e = 0 ; e < sub.set.eps_count() ; ++e)
            m.eps.push_back(back.at(sub.inclusion.eps[e]));
        return m;
    }

    auto isomorphic(const EpsSimplicialSet & a, const EpsSimplicialSet & b) -> bool
    {
        return find_sset_isomorphism(a, b).has_value();
    }
}

TEST_SUITE("simplicial") {
    TEST_CASE("standard simplices validate") {
        auto d1 = standard_simplex(1, false, 2);
        CHECK(validate(*d1.set).ok);
        CHECK(d1.set->eps_count() == 0);
        auto s1 = standard_simplex(1, true, 2);
        CHECK(validate(*s1.set).ok);
        REQUIRE(s1.set->eps_count() == 1);
        CHECK(s1.set->cell_names[1][s1.set->eps_edge[0]] == "01");
    }

    TEST_CASE("a corrupted face table is reported with its position") {
        auto d2 = *standard_simplex(2, false, 2).set;
        int top = d2.cell_index(2, "012");
        d2.faces[2][2][top] = d2.cell_index(1, "02");
        auto r = validate(d2);
        CHECK(! r.ok);
        CHECK(r.violation.find("d=2") != std::string::npos);
        CHECK(r.violation.find("'012'") != std::string::npos);
    }

    TEST_CASE("dangling ids are input errors") {
        auto d2 = *standard_simplex(2, false, 2).set;
        d2.faces[1][0][0] = 99;
        CHECK_THROWS_AS(validate(d2), InputError);
        auto s1 = *standard_simplex(1, true, 2).set;
        s1.eps_edge[0] = 42;
        CHECK_THROWS_AS(validate(s1), InputError);
    }

    TEST_CASE("union and intersection of subobjects") {
        auto d2 = standard_simplex(2, false, 2);
        auto a = span_subobject(d2, { { 0, 1 } });
        auto b = span_subobject(d2, { { 1, 2 } });
        auto u = subobject_union(a, b);
        auto i = subobject_intersection(a, b);
        CHECK(is_closed(u));
        CHECK(is_closed(i));
        CHECK(u == span_subobject(d2, { { 0, 1 }, { 1, 2 } }));
        CHECK(i == span_subobject(d2, { { 1 } }));
        CHECK(nondegenerate_counts(materialize(u).set) == std::vector<int>{ 3, 2, 0 });
        CHECK(nondegenerate_counts(materialize(i).set) == std::vector<int>{ 1, 0, 0 });

        auto other = standard_simplex(2, false, 2);
        CHECK_THROWS_AS(subobject_union(a, span_subobject(other, { { 0 } })), std::invalid_argument);
    }

    TEST_CASE("generated subobjects are closed under faces") {
        auto s2 = standard_simplex(2, true, 2);
        auto g = generate_subobject(s2.set, { { 2, s2.set->cell_index(2, "012") } }, {});
        CHECK(is_closed(g));
        CHECK(g.cells[0] == std::vector<char>{ 1, 1, 1 });
        CHECK(g.eps[0] == 0);
    }

    TEST_CASE("pushout along an identity") {
        auto h = realize("horn:2:0", 2);
        auto p = pushout(h.domain, *h.ambient.set, h.inclusion, h.domain, identity_map(h.domain));
        CHECK(validate(p.object).ok);
        CHECK(isomorphic(p.object, *h.ambient.set));
    }

    TEST_CASE("gluing two edges") {
        auto d1 = standard_simplex(1, false, 2);
        auto end = materialize(span_subobject(d1, { { 1 } }));
        auto start = materialize(span_subobject(d1, { { 0 } }));
        auto wedge = pushout(end.set, *d1.set, end.inclusion, *d1.set, start.inclusion);
        CHECK(validate(wedge.object).ok);
        CHECK(nondegenerate_counts(wedge.object) == std::vector<int>{ 3, 2, 0 });

        auto ends = materialize(span_subobject(d1, { { 0 }, { 1 } }));
        auto circle = pushout(ends.set, *d1.set, ends.inclusion, *d1.set, ends.inclusion);
        CHECK(validate(circle.object).ok);
        CHECK(nondegenerate_counts(circle.object) == std::vector<int>{ 2, 2, 0 });
    }

    TEST_CASE("the face-union square is a pushout") {
        auto s4 = standard_simplex(4, true, 4);
        auto face0 = span_subobject(s4, { { 1, 2, 3, 4 } });
        auto faces13 = span_subobject(s4, { { 0, 2, 3, 4 }, { 0, 1, 2, 4 } });
        auto meet = subobject_intersection(face0, faces13);
        auto m0 = materialize(face0);
        auto m13 = materialize(faces13);
        auto mm = materialize(meet);
        auto p = pushout(mm.set, m0.set, between(mm, m0), m13.set, between(mm, m13));
        CHECK(validate(p.object).ok);
        CHECK(isomorphic(p.object, materialize(subobject_union(face0, faces13)).set));
    }

    TEST_CASE("completion of the 2-truncated Bool2 nerve counts chains") {
        auto b = *catalog_entry("bool2").input.frobenius;
        auto x = coskeletal_completion(truncate(nerve_monoid(b.monoid, 2), 2), 4);
        CHECK(validate(x).ok);
        CHECK(x.count(3) == 4);
        for (int n = 0 ; n <= 4 ; ++n)
            CHECK(x.count(n) == oracle::count_chains(b.monoid, n));
    }

    TEST_CASE("completion of the triangle adds only degenerate cells") {
        auto x = coskeletal_completion(*standard_simplex(2, false, 2).set, 3);
        CHECK(validate(x).ok);
        CHECK(x.count(3) == oracle::monotone_maps(3, 2));
        CHECK(x.count(3) == 15);
        CHECK(nondegenerate_counts(x)[3] == 0);
    }

    TEST_CASE("completion of a point") {
        auto x = coskeletal_completion(*standard_simplex(0, false, 2).set, 5);
        for (int d = 0 ; d <= 5 ; ++d)
            CHECK(x.count(d) == 1);
    }

    TEST_CASE("completion is idempotent on nerves") {
        for (auto & entry : catalog_all()) {
            INFO(entry.name);
            auto x = nerve_monoid(entry.input.monoid, 4);
            auto y = coskeletal_completion(truncate(x, 2), 4);
            CHECK(isomorphic(x, y));
            auto z = coskeletal_completion(truncate(y, 3), 4);
            CHECK(isomorphic(y, z));
        }
    }

    TEST_CASE("identity and composition") {
        auto x = nerve_frobenius(*catalog_entry("diamond").input.frobenius, 3);
        auto id = identity_map(x);
        CHECK(is_natural(x, x, id));
        CHECK(is_bijective(id, x));
        CHECK(compose(id, id) == id);
    }
}
