#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/nerve.hh>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using std::map;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace relfrob
{
    namespace
    {
        auto one_element() -> FrobeniusAlgebra
        {
            auto m = make_monoid({ "e" }, { { "e", "e", "e" } }, { "e" });
            return make_frobenius(std::move(m), { { "e", "e", "e" } }, { "e" });
        }

        // Subsets of the atoms under disjoint union.
        auto boolean_algebra(const vector<string> & atoms) -> EffectAlgebraData
        {
            int n = int(atoms.size());
            unsigned full = (1u << n) - 1;
            auto name = [&] (unsigned s) -> string {
                if (s == 0)
                    return "0";
                if (s == full)
                    return "1";
                string r;
                for (int i = 0 ; i < n ; ++i)
                    if (s & (1u << i))
                        r += atoms[i];
                return r;
            };
            vector<unsigned> order(full + 1);
            std::iota(order.begin(), order.end(), 0u);
            std::stable_sort(order.begin(), order.end(), [] (unsigned a, unsigned b) {
                    return std::popcount(a) < std::popcount(b); });

            EffectAlgebraData e;
            for (auto s : order)
                e.elements.push_back(name(s));
            for (auto a : order)
                for (auto b : order)
                    if ((a & b) == 0)
                        e.plus.push_back({ name(a), name(b), name(a | b) });
            e.zero = "0";
            e.one = "1";
            return e;
        }

        // 0 < 1/n < ... < 1 with truncated addition defined when the sum is at most 1.
        auto mv_chain(int n) -> EffectAlgebraData
        {
            auto name = [&] (int k) -> string {
                if (k == 0)
                    return "0";
                if (k == n)
                    return "1";
                return to_string(k) + "/" + to_string(n);
            };
            EffectAlgebraData e;
            for (int k = 0 ; k <= n ; ++k)
                e.elements.push_back(name(k));
            for (int a = 0 ; a <= n ; ++a)
                for (int b = 0 ; a + b <= n ; ++b)
                    e.plus.push_back({ name(a), name(b), name(a + b) });
            e.zero = "0";
            e.one = "1";
            return e;
        }

        auto diamond() -> EffectAlgebraData
        {
            EffectAlgebraData e;
            e.elements = { "0", "a", "b", "1" };
            for (auto & x : e.elements) {
                e.plus.push_back({ "0", x, x });
                if (x != "0")
                    e.plus.push_back({ x, "0", x });
            }
            e.plus.push_back({ "a", "b", "1" });
            e.plus.push_back({ "b", "a", "1" });
            e.zero = "0";
            e.one = "1";
            return e;
        }

        // Z/n as a one-object groupoid, elements e, g, g2, ...
        auto cyclic_group(int n) -> GroupoidData
        {
            auto name = [] (int k) -> string { return k == 0 ? "e" : k == 1 ? "g" : "g" + to_string(k); };
            GroupoidData g;
            g.objects = { "*" };
            for (int k = 0 ; k < n ; ++k)
                g.morphisms.push_back({ name(k), "*", "*" });
            for (int a = 0 ; a < n ; ++a) {
                for (int b = 0 ; b < n ; ++b)
                    g.comp.push_back({ name(a), name(b), name((a + b) % n) });
                g.inv.emplace_back(name(a), name((n - a) % n));
            }
            return g;
        }

        auto discrete_groupoid() -> GroupoidData
        {
            GroupoidData g;
            g.objects = { "x", "y" };
            g.morphisms = { { "1x", "x", "x" }, { "1y", "y", "y" } };
            g.comp = { { "1x", "1x", "1x" }, { "1y", "1y", "1y" } };
            g.inv = { { "1x", "1x" }, { "1y", "1y" } };
            return g;
        }

        // Objects x, y with f : x -> y and g : y -> x inverse to each other.
        auto codiscrete_groupoid() -> GroupoidData
        {
            GroupoidData g;
            g.objects = { "x", "y" };
            g.morphisms = { { "1x", "x", "x" }, { "1y", "y", "y" }, { "f", "x", "y" }, { "g", "y", "x" } };
            g.comp = {
                { "1x", "1x", "1x" }, { "1y", "1y", "1y" },
                { "f", "1x", "f" }, { "1y", "f", "f" },
                { "g", "1y", "g" }, { "1x", "g", "g" },
                { "g", "f", "1x" }, { "f", "g", "1y" } };
            g.inv = { { "1x", "1x" }, { "1y", "1y" }, { "f", "g" }, { "g", "f" } };
            return g;
        }

        // Two points on a circle: loops 0 and 1 at each, one segment each way.
        auto circle() -> EffectAlgebroidData
        {
            EffectAlgebroidData e;
            e.points = { "x", "y" };
            e.segments = { { "0x", "x", "x" }, { "0y", "y", "y" }, { "p", "x", "y" }, { "q", "y", "x" },
                { "1x", "x", "x" }, { "1y", "y", "y" } };
            for (auto & s : e.segments) {
                e.cup.push_back({ "0" + s.src, s.id, s.id });
                if (s.id != "0" + s.dst || s.src != s.dst)
                    e.cup.push_back({ s.id, "0" + s.dst, s.id });
            }
            e.cup.push_back({ "p", "q", "1x" });
            e.cup.push_back({ "q", "p", "1y" });
            e.perp = { { "0x", "1x" }, { "1x", "0x" }, { "0y", "1y" }, { "1y", "0y" }, { "p", "q" }, { "q", "p" } };
            e.zeros = { { "x", "0x" }, { "y", "0y" } };
            e.ones = { { "x", "1x" }, { "y", "1y" } };
            return e;
        }

        auto sorted_form(const vector<int> & perm, const vector<int> & eta, const vector<Triple> & mu)
            -> pair<vector<int>, vector<Triple>>
        {
            vector<int> e;
            for (int r : eta)
                e.push_back(perm[r]);
            vector<Triple> m;
            for (auto & [a, b, c] : mu)
                m.push_back({ perm[a], perm[b], perm[c] });
            std::sort(e.begin(), e.end());
            std::sort(m.begin(), m.end());
            return { e, m };
        }

        auto with_set(const EpsSimplicialSet & x) -> std::shared_ptr<const EpsSimplicialSet>
        {
            return std::make_shared<const EpsSimplicialSet>(x);
        }
    }

    auto catalog_frobenius() -> vector<CatalogEntry>
    {
        vector<CatalogEntry> result;
        result.push_back({ "one", input_from_frobenius(one_element()) });
        result.push_back({ "bool2", input_from_effect_algebra(boolean_algebra({ "p" })) });
        result.push_back({ "bool4", input_from_effect_algebra(boolean_algebra({ "p", "q" })) });
        result.push_back({ "bool8", input_from_effect_algebra(boolean_algebra({ "p", "q", "r" })) });
        result.push_back({ "mv3", input_from_effect_algebra(mv_chain(2)) });
        result.push_back({ "mv4", input_from_effect_algebra(mv_chain(3)) });
        result.push_back({ "diamond", input_from_effect_algebra(diamond()) });
        result.push_back({ "z2", input_from_groupoid(cyclic_group(2)) });
        result.push_back({ "z3", input_from_groupoid(cyclic_group(3)) });
        result.push_back({ "discrete2", input_from_groupoid(discrete_groupoid()) });
        result.push_back({ "codiscrete2", input_from_groupoid(codiscrete_groupoid()) });
        result.push_back({ "circle2", input_from_effect_algebroid(circle()) });
        return result;
    }

    auto m2_monoid() -> RelMonoid
    {
        return make_monoid({ "e", "a" }, { { "e", "e", "e" }, { "e", "a", "a" }, { "a", "e", "a" }, { "a", "a", "e" }, { "a", "a", "a" } },
                { "e" });
    }

    auto catalog_all() -> vector<CatalogEntry>
    {
        auto result = catalog_frobenius();
        result.push_back({ "m2", input_from_monoid(m2_monoid()) });
        return result;
    }

    auto catalog_entry(const string & name) -> CatalogEntry
    {
        for (auto & e : catalog_all())
            if (e.name == name)
                return e;
        throw InputError("no catalog algebra named '" + name + "'");
    }

    auto catalog_testspaces() -> vector<NamedTestSpace>
    {
        return {
            { "triangle", make_testspace({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" }, { "a", "c" } }) },
            { "single", make_testspace({ "a", "b" }, { { "a", "b" } }) },
            { "two-tests", make_testspace({ "a", "b", "c", "d" }, { { "a", "b" }, { "c", "d" } }) } };
    }

    auto enumerate_small_monoids(int max_size) -> vector<RelMonoid>
    {
        const vector<string> names{ "e", "f", "g", "h" };
        if (max_size < 1 || max_size > int(names.size()))
            throw InputError("small monoids are enumerated for sizes 1.." + to_string(names.size()));

        vector<RelMonoid> result;
        for (int n = 1 ; n <= max_size ; ++n) {
            set<pair<vector<int>, vector<Triple>>> seen;
            vector<vector<int>> perms;
            vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do
                perms.push_back(perm);
            while (std::next_permutation(perm.begin(), perm.end()));

            for (int units = 1 ; units <= n ; ++units) {
                int others = n - units;
                vector<int> eta(units);
                std::iota(eta.begin(), eta.end(), 0);

                // source and target units of each non-unit, as a mixed-radix counter
                vector<int> st(2 * others, 0);
                while (true) {
                    auto s = [&] (int a) { return a < units ? a : st[2 * (a - units)]; };
                    auto t = [&] (int a) { return a < units ? a : st[2 * (a - units) + 1]; };

                    vector<Triple> fixed, optional;
                    for (int r = 0 ; r < units ; ++r)
                        fixed.push_back({ r, r, r });
                    for (int a = units ; a < n ; ++a) {
                        fixed.push_back({ t(a), a, a });
                        fixed.push_back({ a, s(a), a });
                    }
                    for (int a = units ; a < n ; ++a)
                        for (int b = units ; b < n ; ++b)
                            if (s(a) == t(b))
                                for (int c = 0 ; c < n ; ++c)
                                    if (t(c) == t(a) && s(c) == s(b))
                                        optional.push_back({ a, b, c });

                    for (unsigned long pick = 0 ; pick < (1ul << optional.size()) ; ++pick) {
                        auto mu = fixed;
                        for (std::size_t k = 0 ; k < optional.size() ; ++k)
                            if (pick & (1ul << k))
                                mu.push_back(optional[k]);
                        RelMonoid m;
                        m.elements.assign(names.begin(), names.begin() + n);
                        m.mu = TernaryRelation(n, mu);
                        m.eta = eta;
                        if (! check_monoid(m).ok)
                            continue;
                        auto best = sorted_form(perms[0], eta, m.mu.triples());
                        for (auto & p : perms)
                            best = std::min(best, sorted_form(p, eta, m.mu.triples()));
                        if (seen.insert(best).second)
                            result.push_back(std::move(m));
                    }

                    std::size_t k = 0;
                    while (k < st.size() && ++st[k] == units)
                        st[k++] = 0;
                    if (k == st.size())
                        break;
                }
            }
        }
        return result;
    }

    auto delete_two_cell(const EpsSimplicialSet & x, int cell) -> EpsSimplicialSet
    {
        auto low = with_set(truncate(x, 2));
        SSetIndex index(*low);
        if (cell < 0 || cell >= low->count(2) || ! index.nondegenerate(2, cell))
            throw std::invalid_argument("only a non-degenerate 2-cell can be deleted");
        auto sub = full_subobject(low);
        sub.cells[2][cell] = 0;
        return coskeletal_completion(materialize(sub).set, x.trunc_dim);
    }

    auto duplicate_witness(const EpsSimplicialSet & x, int e) -> EpsSimplicialSet
    {
        auto y = x;
        y.eps_names.push_back(x.eps_names.at(e) + "'");
        y.eps_edge.push_back(x.eps_edge.at(e));
        return y;
    }

    auto drop_witnesses(const EpsSimplicialSet & x) -> EpsSimplicialSet
    {
        auto y = x;
        y.eps_names.clear();
        y.eps_edge.clear();
        return y;
    }

    auto duplicate_three_cell(const EpsSimplicialSet & x, int cell) -> EpsSimplicialSet
    {
        if (x.trunc_dim < 3)
            throw std::invalid_argument("no 3-cells to duplicate");
        auto y = truncate(x, 3);
        if (cell < 0 || cell >= y.count(3))
            throw std::invalid_argument("no such 3-cell");
        y.cell_names[3].push_back(y.cell_names[3][cell] + "'");
        for (int i = 0 ; i <= 3 ; ++i)
            y.faces[3][i].push_back(y.faces[3][i][cell]);
        return coskeletal_completion(y, x.trunc_dim);
    }

    auto perturbed_controls() -> vector<NamedSSet>
    {
        vector<NamedSSet> result;
        auto dia = nerve_frobenius(*catalog_entry("diamond").input.frobenius, 4);
        auto mv3 = nerve_frobenius(*catalog_entry("mv3").input.frobenius, 4);
        auto bool2 = nerve_frobenius(*catalog_entry("bool2").input.frobenius, 4);
        auto bool8 = nerve_frobenius(*catalog_entry("bool8").input.frobenius, 4);

        result.push_back({ "diamond minus (a,b,1)", delete_two_cell(dia, dia.cell_index(2, "(a,b,1)")) });
        result.push_back({ "diamond minus (b,a,1)", delete_two_cell(dia, dia.cell_index(2, "(b,a,1)")) });
        result.push_back({ "mv3 minus (1/2,1/2,1)", delete_two_cell(mv3, mv3.cell_index(2, "(1/2,1/2,1)")) });
        result.push_back({ "bool2 with a duplicated witness", duplicate_witness(bool2, 0) });
        result.push_back({ "bool2 without witnesses", drop_witnesses(bool2) });

        SSetIndex index(bool8);
        result.push_back({ "bool8 with a duplicated 3-cell", duplicate_three_cell(bool8, index.nondegenerate_cells(3).at(0)) });

        for (auto & t : catalog_testspaces())
            result.push_back({ "test space " + t.name, sset_of_testspace(t.space, 4) });
        return result;
    }
}
