#include <relfrob/json_io.hh>
#include <relfrob/errors.hh>

#include <fstream>
#include <set>
#include <sstream>

using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace relfrob
{
    namespace
    {
        auto fail(const string & path, const string & what) -> InputError
        {
            return InputError((path.empty() ? string("/") : path) + ": " + what);
        }

        auto field(const Json & j, const string & key, const string & path) -> const Json &
        {
            if (! j.is_object())
                throw fail(path, "expected an object");
            auto it = j.find(key);
            if (it == j.end())
                throw fail(path, "missing field '" + key + "'");
            return *it;
        }

        auto as_string(const Json & j, const string & path) -> string
        {
            if (! j.is_string())
                throw fail(path, "expected a string");
            return j.get<string>();
        }

        auto as_int(const Json & j, const string & path) -> int
        {
            if (! j.is_number_integer())
                throw fail(path, "expected an integer");
            return j.get<int>();
        }

        auto as_array(const Json & j, const string & path) -> const Json &
        {
            if (! j.is_array())
                throw fail(path, "expected an array");
            return j;
        }

        auto strings(const Json & j, const string & path) -> vector<string>
        {
            vector<string> result;
            auto & a = as_array(j, path);
            for (std::size_t i = 0 ; i < a.size() ; ++i)
                result.push_back(as_string(a[i], path + "/" + to_string(i)));
            return result;
        }

        auto string_tuples(const Json & j, const string & path, std::size_t arity) -> vector<vector<string>>
        {
            vector<vector<string>> result;
            auto & a = as_array(j, path);
            for (std::size_t i = 0 ; i < a.size() ; ++i) {
                auto row = strings(a[i], path + "/" + to_string(i));
                if (row.size() != arity)
                    throw fail(path + "/" + to_string(i), "expected " + to_string(arity) + " entries");
                result.push_back(std::move(row));
            }
            return result;
        }

        auto triples(const Json & j, const string & path) -> vector<NamedTriple>
        {
            vector<NamedTriple> result;
            for (auto & row : string_tuples(j, path, 3))
                result.push_back({ row[0], row[1], row[2] });
            return result;
        }

        auto pairs(const Json & j, const string & path) -> vector<std::pair<string, string>>
        {
            vector<std::pair<string, string>> result;
            for (auto & row : string_tuples(j, path, 2))
                result.emplace_back(row[0], row[1]);
            return result;
        }

        auto string_map(const Json & j, const string & path) -> std::map<string, string>
        {
            if (! j.is_object())
                throw fail(path, "expected an object");
            std::map<string, string> result;
            for (auto & [k, v] : j.items())
                result[k] = as_string(v, path + "/" + k);
            return result;
        }

        auto triples_to_json(const vector<string> & names, const TernaryRelation & r) -> Json
        {
            Json a = Json::array();
            for (auto & [x, y, z] : r.triples())
                a.push_back(Json::array({ names[x], names[y], names[z] }));
            return a;
        }

        auto ids_to_json(const vector<string> & names, const vector<int> & ids) -> Json
        {
            Json a = Json::array();
            for (int i : ids)
                a.push_back(names[i]);
            return a;
        }

        // rethrows constructor errors with the path of the offending document
        template <typename F_>
        auto at_path(const string & path, const F_ & f)
        {
            try {
                return f();
            }
            catch (const InputError & e) {
                throw fail(path, e.what());
            }
        }

        auto face_key(int d, int i) -> string
        {
            return to_string(d) + "," + to_string(i);
        }
    }

    auto kind_name(AlgebraKind k) -> string
    {
        switch (k) {
            case AlgebraKind::Monoid: return "monoid";
            case AlgebraKind::Frobenius: return "frobenius";
            case AlgebraKind::EffectAlgebra: return "effect_algebra";
            case AlgebraKind::Groupoid: return "groupoid";
            case AlgebraKind::EffectAlgebroid: return "effect_algebroid";
        }
        return "unknown";
    }

    auto input_from_monoid(RelMonoid m) -> AlgebraInput
    {
        AlgebraInput a;
        a.kind = AlgebraKind::Monoid;
        a.monoid = std::move(m);
        return a;
    }

    auto input_from_frobenius(FrobeniusAlgebra f) -> AlgebraInput
    {
        AlgebraInput a;
        a.kind = AlgebraKind::Frobenius;
        a.monoid = f.monoid;
        a.frobenius = std::move(f);
        return a;
    }

    auto input_from_effect_algebra(EffectAlgebraData e) -> AlgebraInput
    {
        auto a = input_from_frobenius(from_effect_algebra(e));
        a.kind = AlgebraKind::EffectAlgebra;
        a.effect_algebra = std::move(e);
        return a;
    }

    auto input_from_groupoid(GroupoidData g) -> AlgebraInput
    {
        auto a = input_from_frobenius(from_groupoid(g));
        a.kind = AlgebraKind::Groupoid;
        a.groupoid = std::move(g);
        return a;
    }

    auto input_from_effect_algebroid(EffectAlgebroidData e) -> AlgebraInput
    {
        auto a = input_from_frobenius(from_effect_algebroid(e));
        a.kind = AlgebraKind::EffectAlgebroid;
        a.effect_algebroid = std::move(e);
        return a;
    }

    auto parse_json_text(const string & text, const string & source) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0 ; i + 1 < e.byte && i < text.size() ; ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                }
                else
                    ++column;
            }
            throw InputError(source + ":" + to_string(line) + ":" + to_string(column) + ": malformed JSON (byte "
                    + to_string(e.byte) + ")");
        }
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw InputError(path + ": cannot open file");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_json_text(buffer.str(), path);
    }

    auto algebra_from_json(const Json & j) -> AlgebraInput
    {
        auto kind = as_string(field(j, "kind", ""), "/kind");

        if (kind == "monoid" || kind == "frobenius") {
            auto elements = strings(field(j, "elements", ""), "/elements");
            auto mu = triples(field(j, "mu", ""), "/mu");
            auto eta = strings(field(j, "eta", ""), "/eta");
            auto m = at_path("", [&] { return make_monoid(elements, mu, eta); });
            if (kind == "monoid")
                return input_from_monoid(std::move(m));
            auto delta = triples(field(j, "delta", ""), "/delta");
            auto epsilon = strings(field(j, "epsilon", ""), "/epsilon");
            return input_from_frobenius(at_path("", [&] { return make_frobenius(std::move(m), delta, epsilon); }));
        }

        if (kind == "effect_algebra") {
            EffectAlgebraData e;
            e.elements = strings(field(j, "elements", ""), "/elements");
            e.plus = triples(field(j, "plus", ""), "/plus");
            e.zero = as_string(field(j, "zero", ""), "/zero");
            e.one = as_string(field(j, "one", ""), "/one");
            return at_path("", [&] { return input_from_effect_algebra(std::move(e)); });
        }

        if (kind == "groupoid") {
            GroupoidData g;
            g.objects = strings(field(j, "objects", ""), "/objects");
            auto & ms = as_array(field(j, "morphisms", ""), "/morphisms");
            for (std::size_t i = 0 ; i < ms.size() ; ++i) {
                string p = "/morphisms/" + to_string(i);
                g.morphisms.push_back({ as_string(field(ms[i], "id", p), p + "/id"),
                        as_string(field(ms[i], "src", p), p + "/src"), as_string(field(ms[i], "dst", p), p + "/dst") });
            }
            g.comp = triples(field(j, "comp", ""), "/comp");
            g.inv = pairs(field(j, "inv", ""), "/inv");
            return at_path("", [&] { return input_from_groupoid(std::move(g)); });
        }

        if (kind == "effect_algebroid") {
            EffectAlgebroidData e;
            e.points = strings(field(j, "points", ""), "/points");
            auto & ss = as_array(field(j, "segments", ""), "/segments");
            for (std::size_t i = 0 ; i < ss.size() ; ++i) {
                string p = "/segments/" + to_string(i);
                e.segments.push_back({ as_string(field(ss[i], "id", p), p + "/id"),
                        as_string(field(ss[i], "src", p), p + "/src"), as_string(field(ss[i], "dst", p), p + "/dst") });
            }
            e.cup = triples(field(j, "cup", ""), "/cup");
            e.perp = pairs(field(j, "perp", ""), "/perp");
            e.zeros = string_map(field(j, "zeros", ""), "/zeros");
            e.ones = string_map(field(j, "ones", ""), "/ones");
            return at_path("", [&] { return input_from_effect_algebroid(std::move(e)); });
        }

        throw fail("/kind", "unknown algebra kind '" + kind + "'");
    }

    auto monoid_to_json(const RelMonoid & m) -> Json
    {
        Json j;
        j["kind"] = "monoid";
        j["elements"] = m.elements;
        j["mu"] = triples_to_json(m.elements, m.mu);
        j["eta"] = ids_to_json(m.elements, m.eta);
        return j;
    }

    auto frobenius_to_json(const FrobeniusAlgebra & f) -> Json
    {
        auto j = monoid_to_json(f.monoid);
        j["kind"] = "frobenius";
        j["delta"] = triples_to_json(f.elements(), f.delta);
        j["epsilon"] = ids_to_json(f.elements(), f.epsilon);
        return j;
    }

    auto algebra_to_json(const AlgebraInput & a) -> Json
    {
        Json j;
        j["kind"] = kind_name(a.kind);
        switch (a.kind) {
            case AlgebraKind::Monoid:
                return monoid_to_json(a.monoid);
            case AlgebraKind::Frobenius:
                return frobenius_to_json(*a.frobenius);
            case AlgebraKind::EffectAlgebra: {
                auto & e = *a.effect_algebra;
                j["elements"] = e.elements;
                j["plus"] = Json::array();
                for (auto & t : e.plus)
                    j["plus"].push_back(t);
                j["zero"] = e.zero;
                j["one"] = e.one;
                return j;
            }
            case AlgebraKind::Groupoid: {
                auto & g = *a.groupoid;
                j["objects"] = g.objects;
                j["morphisms"] = Json::array();
                for (auto & m : g.morphisms)
                    j["morphisms"].push_back({ { "id", m.id }, { "src", m.src }, { "dst", m.dst } });
                j["comp"] = Json::array();
                for (auto & t : g.comp)
                    j["comp"].push_back(t);
                j["inv"] = Json::array();
                for (auto & [f, h] : g.inv)
                    j["inv"].push_back(Json::array({ f, h }));
                return j;
            }
            case AlgebraKind::EffectAlgebroid: {
                auto & e = *a.effect_algebroid;
                j["points"] = e.points;
                j["segments"] = Json::array();
                for (auto & s : e.segments)
                    j["segments"].push_back({ { "id", s.id }, { "src", s.src }, { "dst", s.dst } });
                j["cup"] = Json::array();
                for (auto & t : e.cup)
                    j["cup"].push_back(t);
                j["perp"] = Json::array();
                for (auto & [x, y] : e.perp)
                    j["perp"].push_back(Json::array({ x, y }));
                j["zeros"] = Json::object();
                for (auto & [p, s] : e.zeros)
                    j["zeros"][p] = s;
                j["ones"] = Json::object();
                for (auto & [p, s] : e.ones)
                    j["ones"][p] = s;
                return j;
            }
        }
        return j;
    }

    auto sset_from_json(const Json & j) -> EpsSimplicialSet
    {
        int k = as_int(field(j, "trunc_dim", ""), "/trunc_dim");
        if (k < 2 || k > 7)
            throw fail("/trunc_dim", "truncation must be between 2 and 7");
        auto x = empty_sset(k);

        auto & cells = field(j, "cells", "");
        vector<std::map<string, int>> index(k + 1);
        for (int d = 0 ; d <= k ; ++d) {
            string p = "/cells/" + to_string(d);
            x.cell_names[d] = strings(field(cells, to_string(d), "/cells"), p);
            for (auto & name : x.cell_names[d])
                if (! index[d].emplace(name, int(index[d].size())).second)
                    throw fail(p, "duplicate cell '" + name + "'");
        }

        auto read_table = [&] (const Json & tables, const string & root, int d, int i, int to) {
            string key = face_key(d, i), p = root + "/" + key;
            auto & t = field(tables, key, root);
            if (! t.is_object())
                throw fail(p, "expected an object");
            vector<int> result(x.count(d), -1);
            for (auto & [from, target] : t.items()) {
                auto f = index[d].find(from);
                if (f == index[d].end())
                    throw fail(p, "unknown " + to_string(d) + "-cell '" + from + "'");
                auto name = as_string(target, p + "/" + from);
                auto g = index[to].find(name);
                if (g == index[to].end())
                    throw fail(p + "/" + from, "unknown " + to_string(to) + "-cell '" + name + "'");
                result[f->second] = g->second;
            }
            for (int c = 0 ; c < x.count(d) ; ++c)
                if (result[c] == -1)
                    throw fail(p, "no entry for cell '" + x.cell_names[d][c] + "'");
            return result;
        };

        auto & face = field(j, "face", "");
        for (int d = 1 ; d <= k ; ++d)
            for (int i = 0 ; i <= d ; ++i)
                x.faces[d][i] = read_table(face, "/face", d, i, d - 1);
        auto & degen = field(j, "degen", "");
        for (int d = 0 ; d < k ; ++d)
            for (int i = 0 ; i <= d ; ++i)
                x.degeneracies[d][i] = read_table(degen, "/degen", d, i, d + 1);

        if (j.contains("eps")) {
            auto & eps = as_array(j["eps"], "/eps");
            set<string> seen;
            for (std::size_t e = 0 ; e < eps.size() ; ++e) {
                string p = "/eps/" + to_string(e);
                auto id = as_string(field(eps[e], "id", p), p + "/id");
                auto edge = as_string(field(eps[e], "edge", p), p + "/edge");
                if (! seen.insert(id).second)
                    throw fail(p, "duplicate witness '" + id + "'");
                auto it = index[1].find(edge);
                if (it == index[1].end())
                    throw fail(p + "/edge", "unknown 1-cell '" + edge + "'");
                x.eps_names.push_back(id);
                x.eps_edge.push_back(it->second);
            }
        }

        auto report = validate(x);
        if (! report.ok)
            throw InputError("simplicial identity violated: " + report.violation);
        return x;
    }

    auto sset_to_json(const EpsSimplicialSet & x) -> Json
    {
        Json j;
        j["trunc_dim"] = x.trunc_dim;
        j["cells"] = Json::object();
        for (int d = 0 ; d <= x.trunc_dim ; ++d)
            j["cells"][to_string(d)] = x.cell_names[d];
        j["face"] = Json::object();
        for (int d = 1 ; d <= x.trunc_dim ; ++d)
            for (int i = 0 ; i <= d ; ++i) {
                Json t = Json::object();
                for (int c = 0 ; c < x.count(d) ; ++c)
                    t[x.cell_names[d][c]] = x.cell_names[d - 1][x.face(d, i, c)];
                j["face"][face_key(d, i)] = std::move(t);
            }
        j["degen"] = Json::object();
        for (int d = 0 ; d < x.trunc_dim ; ++d)
            for (int i = 0 ; i <= d ; ++i) {
                Json t = Json::object();
                for (int c = 0 ; c < x.count(d) ; ++c)
                    t[x.cell_names[d][c]] = x.cell_names[d + 1][x.degen(d, i, c)];
                j["degen"][face_key(d, i)] = std::move(t);
            }
        j["eps"] = Json::array();
        for (int e = 0 ; e < x.eps_count() ; ++e)
            j["eps"].push_back({ { "id", x.eps_names[e] }, { "edge", x.cell_names[1][x.eps_edge[e]] } });
        return j;
    }

    auto testspace_from_json(const Json & j) -> TestSpace
    {
        auto outcomes = strings(field(j, "outcomes", ""), "/outcomes");
        auto & ts = as_array(field(j, "tests", ""), "/tests");
        vector<vector<string>> tests;
        for (std::size_t i = 0 ; i < ts.size() ; ++i)
            tests.push_back(strings(ts[i], "/tests/" + to_string(i)));
        return at_path("", [&] { return make_testspace(outcomes, tests); });
    }

    auto testspace_to_json(const TestSpace & t) -> Json
    {
        Json j;
        j["outcomes"] = t.outcomes;
        j["tests"] = Json::array();
        for (auto test : t.tests) {
            Json row = Json::array();
            for (std::size_t i = 0 ; i < t.outcomes.size() ; ++i)
                if (test & (Event(1) << i))
                    row.push_back(t.outcomes[i]);
            j["tests"].push_back(std::move(row));
        }
        return j;
    }
}
