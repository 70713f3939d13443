#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/json_io.hh>
#include <relfrob/nerve.hh>
#include <relfrob/shapes.hh>

#include <doctest.h>

#include <functional>

using namespace relfrob;

namespace
{
    auto error_of(const std::function<void ()> & f) -> std::string
    {
        try {
            f();
        }
        catch (const InputError & e) {
            return e.what();
        }
        return "";
    }

    auto parse(const std::string & text) -> Json
    {
        return parse_json_text(text, "test");
    }
}

TEST_SUITE("json_io") {
    TEST_CASE("algebras round trip") {
        for (auto & entry : catalog_all()) {
            INFO(entry.name);
            auto j = algebra_to_json(entry.input);
            auto back = algebra_from_json(parse(j.dump()));
            CHECK(back.kind == entry.input.kind);
            CHECK(algebra_to_json(back) == j);
            CHECK(back.monoid.elements == entry.input.monoid.elements);
            CHECK(back.monoid.mu == entry.input.monoid.mu);
            CHECK(back.frobenius.has_value() == entry.input.frobenius.has_value());
            if (back.frobenius)
                CHECK(back.frobenius->delta == entry.input.frobenius->delta);
        }
    }

    TEST_CASE("kinds") {
        CHECK(kind_name(AlgebraKind::Monoid) == "monoid");
        CHECK(kind_name(AlgebraKind::Frobenius) == "frobenius");
        CHECK(kind_name(AlgebraKind::EffectAlgebra) == "effect_algebra");
        CHECK(kind_name(AlgebraKind::Groupoid) == "groupoid");
        CHECK(kind_name(AlgebraKind::EffectAlgebroid) == "effect_algebroid");
    }

    TEST_CASE("syntax errors carry a position") {
        auto e = error_of([] { parse("{\n  \"kind\": \"monoid\",\n  oops\n}"); });
        CHECK(e.find("test:3:") == 0);
        CHECK(e.find("malformed JSON") != std::string::npos);
    }

    TEST_CASE("schema errors carry a path") {
        auto e = error_of([] { algebra_from_json(parse(R"({"kind":"monoid","elements":["e"],"mu":[["e","e"]],"eta":["e"]})")); });
        CHECK(e.find("/mu/0") != std::string::npos);
        e = error_of([] { algebra_from_json(parse(R"({"kind":"magma"})")); });
        CHECK(e.find("/kind") != std::string::npos);
        e = error_of([] { algebra_from_json(parse(R"({"kind":"monoid","elements":["e"],"mu":[["e","e","x"]],"eta":["e"]})")); });
        CHECK(e.find("x") != std::string::npos);
        e = error_of([] { algebra_from_json(parse(R"({"kind":"monoid","elements":["e"],"mu":[],"eta":[3]})")); });
        CHECK(e.find("/eta/0") != std::string::npos);
    }

    TEST_CASE("constructor failures are input errors") {
        auto e = error_of([] {
            algebra_from_json(parse(R"({"kind":"effect_algebra","elements":["0","a","1"],
                "plus":[["0","0","0"],["0","a","a"],["a","0","a"],["0","1","1"],["1","0","1"]],"zero":"0","one":"1"})"));
        });
        CHECK(! e.empty());
    }

    TEST_CASE("plain Frobenius input is not axiom-checked") {
        auto a = algebra_from_json(parse(R"({"kind":"frobenius","elements":["0","1"],
            "mu":[["0","0","0"],["0","1","1"],["1","0","1"]],"eta":["0"],
            "delta":[["1","1","1"],["0","0","1"],["0","1","0"]],"epsilon":["0"]})"));
        REQUIRE(a.frobenius.has_value());
        CHECK(! check_frobenius(*a.frobenius).ok);
    }

    TEST_CASE("eps-sets round trip") {
        std::vector<EpsSimplicialSet> sets{ nerve_frobenius(*catalog_entry("diamond").input.frobenius, 4),
            nerve_monoid(m2_monoid(), 3), *realize("sigma:3", 3).ambient.set, realize("faces-sigma:4:1,3", 4).domain };
        for (auto & c : perturbed_controls())
            sets.push_back(c.set);
        for (auto & x : sets) {
            auto j = sset_to_json(x);
            auto y = sset_from_json(parse(j.dump()));
            CHECK(sset_to_json(y) == j);
            CHECK(y.faces == x.faces);
            CHECK(y.degeneracies == x.degeneracies);
            CHECK(y.eps_edge == x.eps_edge);
        }
    }

    TEST_CASE("broken eps-sets are rejected") {
        auto j = sset_to_json(*realize("delta:2", 2).ambient.set);
        auto bad = j;
        bad["face"]["2,2"]["012"] = "02";
        CHECK(error_of([&] { sset_from_json(bad); }).find("simplicial identity") != std::string::npos);

        bad = j;
        bad["trunc_dim"] = 1;
        CHECK(error_of([&] { sset_from_json(bad); }).find("/trunc_dim") != std::string::npos);

        bad = j;
        bad["face"]["1,0"]["01"] = "7";
        CHECK(error_of([&] { sset_from_json(bad); }).find("/face/1,0/01") != std::string::npos);

        bad = j;
        bad["eps"] = Json::array({ Json{ { "id", "w" }, { "edge", "nope" } } });
        CHECK(error_of([&] { sset_from_json(bad); }).find("/eps/0/edge") != std::string::npos);
    }

    TEST_CASE("test spaces round trip") {
        for (auto & entry : catalog_testspaces()) {
            auto j = testspace_to_json(entry.space);
            auto t = testspace_from_json(parse(j.dump()));
            CHECK(t.outcomes == entry.space.outcomes);
            CHECK(t.tests == entry.space.tests);
        }
        CHECK(! error_of([] { testspace_from_json(parse(R"({"outcomes":["a"],"tests":[["b"]]})")); }).empty());
        CHECK(error_of([] { testspace_from_json(parse(R"({"outcomes":["a"],"tests":[[1]]})")); }).find("/tests/0/0")
                != std::string::npos);
    }
}
