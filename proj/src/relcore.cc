#include <relfrob/relcore.hh>
#include <relfrob/errors.hh>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

using std::array;
using std::function;
using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace relfrob
{
    TernaryRelation::TernaryRelation(int n, vector<Triple> triples) :
        _n(n),
        _triples(std::move(triples)),
        _dense(std::size_t(n) * n * n, 0),
        _outputs(std::size_t(n) * n)
    {
        for (auto & t : _triples)
            for (int v : t)
                if (v < 0 || v >= n)
                    throw InputError("relation triple references id " + to_string(v) + " outside carrier of size " + to_string(n));

        std::sort(_triples.begin(), _triples.end());
        _triples.erase(std::unique(_triples.begin(), _triples.end()), _triples.end());
        for (auto & [a, b, c] : _triples) {
            _dense[(a * _n + b) * _n + c] = 1;
            _outputs[a * _n + b].push_back(c);
        }
    }

    auto RelMonoid::is_unit(int a) const -> bool
    {
        return std::binary_search(eta.begin(), eta.end(), a);
    }

    auto RelMonoid::index_of(const string & name) const -> int
    {
        auto it = std::find(elements.begin(), elements.end(), name);
        if (it == elements.end())
            throw InputError("unknown element '" + name + "'");
        return int(it - elements.begin());
    }

    auto FrobeniusAlgebra::is_counit(int a) const -> bool
    {
        return std::binary_search(epsilon.begin(), epsilon.end(), a);
    }

    auto names_of(const vector<string> & elements, std::span<const int> ids) -> vector<string>
    {
        vector<string> result;
        for (int i : ids)
            result.push_back(elements.at(i));
        return result;
    }

    namespace
    {
        auto index_elements(const vector<string> & elements) -> std::unordered_map<string, int>
        {
            if (elements.empty())
                throw InputError("carrier must be nonempty");
            std::unordered_map<string, int> result;
            for (int i = 0 ; i < int(elements.size()) ; ++i)
                if (! result.emplace(elements[i], i).second)
                    throw InputError("duplicate element '" + elements[i] + "'");
            return result;
        }

        auto lookup(const std::unordered_map<string, int> & index, const string & name, const string & where) -> int
        {
            auto it = index.find(name);
            if (it == index.end())
                throw InputError(where + ": unknown element '" + name + "'");
            return it->second;
        }

        auto to_ids(const std::unordered_map<string, int> & index, const vector<NamedTriple> & triples, const string & where) -> vector<Triple>
        {
            vector<Triple> result;
            for (auto & [a, b, c] : triples)
                result.push_back({ lookup(index, a, where), lookup(index, b, where), lookup(index, c, where) });
            return result;
        }

        auto sorted_ids(const std::unordered_map<string, int> & index, const vector<string> & names, const string & where) -> vector<int>
        {
            vector<int> result;
            for (auto & n : names)
                result.push_back(lookup(index, n, where));
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
            return result;
        }

        auto fail(AxiomReport & report, const string & axiom, vector<string> witness, const string & detail) -> AxiomReport &
        {
            report.ok = false;
            report.violated_axiom = axiom;
            report.witness = std::move(witness);
            report.detail = detail;
            report.checked.emplace_back(axiom, false);
            return report;
        }

        using Quad = vector<char>;

        auto quad_index(int n, int a, int b, int c, int d) -> std::size_t
        {
            return ((std::size_t(a) * n + b) * n + c) * n + d;
        }

        /// First (a, b, c, d) in lexicographic order where p and q differ.
        auto first_difference(int n, const Quad & p, const Quad & q) -> optional<array<int, 4>>
        {
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    for (int c = 0 ; c < n ; ++c)
                        for (int d = 0 ; d < n ; ++d)
                            if (p[quad_index(n, a, b, c, d)] != q[quad_index(n, a, b, c, d)])
                                return array<int, 4>{ a, b, c, d };
            return nullopt;
        }

        auto check_unit_law(const RelMonoid & m, AxiomReport & report) -> bool
        {
            int n = m.size();
            for (int a = 0 ; a < n ; ++a) {
                bool has_left = false, has_right = false;
                for (int r : m.eta) {
                    for (int c : m.mu.outputs(r, a)) {
                        if (c != a) {
                            fail(report, "unit", names_of(m.elements, vector<int>{ r, a, c }),
                                    "mu:(" + m.elements[r] + "," + m.elements[a] + ") -> " + m.elements[c] + " with a unit on the left");
                            return false;
                        }
                        has_left = true;
                    }
                    for (int c : m.mu.outputs(a, r)) {
                        if (c != a) {
                            fail(report, "unit", names_of(m.elements, vector<int>{ a, r, c }),
                                    "mu:(" + m.elements[a] + "," + m.elements[r] + ") -> " + m.elements[c] + " with a unit on the right");
                            return false;
                        }
                        has_right = true;
                    }
                }
                if (! has_left || ! has_right) {
                    fail(report, "unit", { m.elements[a] },
                            string("element has no ") + (has_left ? "right" : "left") + " unit");
                    return false;
                }
            }
            report.checked.emplace_back("unit", true);
            return true;
        }

        auto check_associativity(const RelMonoid & m, AxiomReport & report) -> bool
        {
            int n = m.size();
            Quad left(std::size_t(n) * n * n * n, 0), right(left.size(), 0);
            for (auto & [a, b, x] : m.mu.triples())
                for (int c = 0 ; c < n ; ++c)
                    for (int d : m.mu.outputs(x, c))
                        left[quad_index(n, a, b, c, d)] = 1;
            for (auto & [b, c, y] : m.mu.triples())
                for (int a = 0 ; a < n ; ++a)
                    for (int d : m.mu.outputs(a, y))
                        right[quad_index(n, a, b, c, d)] = 1;
            if (auto w = first_difference(n, left, right)) {
                auto & e = m.elements;
                bool in_left = left[quad_index(n, (*w)[0], (*w)[1], (*w)[2], (*w)[3])];
                fail(report, "associativity", names_of(e, *w),
                        "(" + e[(*w)[0]] + "," + e[(*w)[1]] + "," + e[(*w)[2]] + ") -> " + e[(*w)[3]] + " only via "
                        + (in_left ? "mu.(mu x id)" : "mu.(id x mu)"));
                return false;
            }
            report.checked.emplace_back("associativity", true);
            return true;
        }

        auto check_counit_law(const FrobeniusAlgebra & f, AxiomReport & report) -> bool
        {
            int n = f.size();
            auto & e = f.elements();
            for (int a = 0 ; a < n ; ++a) {
                set<int> via_left, via_right;
                for (auto & [x, b, c] : f.delta.triples()) {
                    if (x != a)
                        continue;
                    if (f.is_counit(b))
                        via_left.insert(c);
                    if (f.is_counit(c))
                        via_right.insert(b);
                }
                for (auto * side : { &via_left, &via_right }) {
                    if (*side != set<int>{ a }) {
                        string which = side == &via_left ? "(epsilon x id).delta" : "(id x epsilon).delta";
                        vector<string> witness{ e[a] };
                        for (int v : *side)
                            witness.push_back(e[v]);
                        fail(report, "counit", witness, which + " sends " + e[a] + " to "
                                + (side->empty() ? string("nothing") : "a set other than {" + e[a] + "}"));
                        return false;
                    }
                }
            }
            report.checked.emplace_back("counit", true);
            return true;
        }

        auto check_coassociativity(const FrobeniusAlgebra & f, AxiomReport & report) -> bool
        {
            int n = f.size();
            Quad left(std::size_t(n) * n * n * n, 0), right(left.size(), 0);
            vector<vector<pair<int, int>>> splits(n);
            for (auto & [a, b, c] : f.delta.triples())
                splits[a].emplace_back(b, c);
            for (int a = 0 ; a < n ; ++a)
                for (auto & [u, z] : splits[a])
                    for (auto & [x, y] : splits[u])
                        left[quad_index(n, a, x, y, z)] = 1;
            for (int a = 0 ; a < n ; ++a)
                for (auto & [x, v] : splits[a])
                    for (auto & [y, z] : splits[v])
                        right[quad_index(n, a, x, y, z)] = 1;
            if (auto w = first_difference(n, left, right)) {
                fail(report, "coassociativity", names_of(f.elements(), *w),
                        "delta splits " + f.elements()[(*w)[0]] + " into a triple on one side only");
                return false;
            }
            report.checked.emplace_back("coassociativity", true);
            return true;
        }
    }

    auto make_monoid(vector<string> elements, const vector<NamedTriple> & mu, const vector<string> & eta) -> RelMonoid
    {
        auto index = index_elements(elements);
        RelMonoid result;
        int n = int(elements.size());
        result.mu = TernaryRelation(n, to_ids(index, mu, "mu"));
        result.eta = sorted_ids(index, eta, "eta");
        result.elements = std::move(elements);
        return result;
    }

    auto make_frobenius(RelMonoid monoid, const vector<NamedTriple> & delta, const vector<string> & epsilon) -> FrobeniusAlgebra
    {
        auto index = index_elements(monoid.elements);
        FrobeniusAlgebra result;
        result.delta = TernaryRelation(monoid.size(), to_ids(index, delta, "delta"));
        result.epsilon = sorted_ids(index, epsilon, "epsilon");
        result.monoid = std::move(monoid);
        return result;
    }

    auto check_monoid(const RelMonoid & m) -> AxiomReport
    {
        AxiomReport report;
        if (m.elements.empty()) {
            fail(report, "carrier", {}, "carrier is empty");
            return report;
        }
        if (check_unit_law(m, report))
            check_associativity(m, report);
        return report;
    }

    auto check_frobenius_identity(const RelMonoid & m, const TernaryRelation & delta) -> AxiomReport
    {
        AxiomReport report;
        int n = m.size();
        Quad via_left(std::size_t(n) * n * n * n, 0), via_middle(via_left.size(), 0), via_right(via_left.size(), 0);

        // (mu, id) . (id, delta): delta:b -> (x, d), mu:(a, x) -> c
        for (auto & [b, x, d] : delta.triples())
            for (int a = 0 ; a < n ; ++a)
                for (int c : m.mu.outputs(a, x))
                    via_left[quad_index(n, a, b, c, d)] = 1;

        // delta . mu: mu:(a, b) -> y, delta:y -> (c, d)
        vector<vector<pair<int, int>>> splits(n);
        for (auto & [y, c, d] : delta.triples())
            splits[y].emplace_back(c, d);
        for (auto & [a, b, y] : m.mu.triples())
            for (auto & [c, d] : splits[y])
                via_middle[quad_index(n, a, b, c, d)] = 1;

        // (id, mu) . (delta, id): delta:a -> (c, x), mu:(x, b) -> d
        for (auto & [a, c, x] : delta.triples())
            for (int b = 0 ; b < n ; ++b)
                for (int d : m.mu.outputs(x, b))
                    via_right[quad_index(n, a, b, c, d)] = 1;

        auto & e = m.elements;
        auto describe = [&] (const array<int, 4> & w, const Quad & p, const string & pn, const string & qn) {
            bool in_p = p[quad_index(n, w[0], w[1], w[2], w[3])];
            return "(" + e[w[0]] + "," + e[w[1]] + ") -> (" + e[w[2]] + "," + e[w[3]] + ") in " + (in_p ? pn : qn)
                + " but not in " + (in_p ? qn : pn);
        };
        if (auto w = first_difference(n, via_left, via_middle)) {
            fail(report, "frobenius", names_of(e, *w), describe(*w, via_left, "(mu,id).(id,delta)", "delta.mu"));
            return report;
        }
        if (auto w = first_difference(n, via_middle, via_right)) {
            fail(report, "frobenius", names_of(e, *w), describe(*w, via_middle, "delta.mu", "(id,mu).(delta,id)"));
            return report;
        }
        report.checked.emplace_back("frobenius", true);
        return report;
    }

    auto check_frobenius(const FrobeniusAlgebra & f) -> AxiomReport
    {
        AxiomReport report = check_monoid(f.monoid);
        if (! report.ok)
            return report;
        if (! check_counit_law(f, report))
            return report;
        if (! check_coassociativity(f, report))
            return report;
        auto identity = check_frobenius_identity(f.monoid, f.delta);
        if (! identity.ok) {
            identity.checked.insert(identity.checked.begin(), report.checked.begin(), report.checked.end());
            return identity;
        }
        report.checked.emplace_back("frobenius", true);
        return report;
    }

    auto source_target(const RelMonoid & m, int a) -> SourceTarget
    {
        optional<int> source, target;
        for (int r : m.eta) {
            if (m.mu.contains(r, a, a)) {
                if (target)
                    throw InputError("element '" + m.elements[a] + "' has two left units");
                target = r;
            }
            if (m.mu.contains(a, r, a)) {
                if (source)
                    throw InputError("element '" + m.elements[a] + "' has two right units");
                source = r;
            }
        }
        if (! source || ! target)
            throw InputError("element '" + m.elements[a] + "' lacks a unit; not a monoid");
        return { *source, *target };
    }

    auto alpha_beta(const FrobeniusAlgebra & f) -> AlphaBeta
    {
        int n = f.size();
        auto & e = f.elements();
        vector<vector<char>> alpha(n, vector<char>(n, 0));
        for (auto & [x, y, c] : f.monoid.mu.triples())
            if (f.is_counit(c))
                alpha[x][y] = 1;

        AlphaBeta result{ vector<int>(n, -1), vector<int>(n, -1) };
        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y)
                if (alpha[x][y]) {
                    if (result.alpha_hat[x] != -1)
                        throw InputError("epsilon.mu is not functional: " + e[x] + " pairs with " + e[result.alpha_hat[x]] + " and " + e[y]);
                    if (result.beta_hat[y] != -1)
                        throw InputError("epsilon.mu is not injective: " + e[y] + " pairs with " + e[result.beta_hat[y]] + " and " + e[x]);
                    result.alpha_hat[x] = y;
                    result.beta_hat[y] = x;
                }
        for (int x = 0 ; x < n ; ++x) {
            if (result.alpha_hat[x] == -1)
                throw InputError("epsilon.mu has no partner for " + e[x] + " on the right");
            if (result.beta_hat[x] == -1)
                throw InputError("epsilon.mu has no partner for " + e[x] + " on the left");
        }
        return result;
    }

    auto check_rotation_laws(const FrobeniusAlgebra & f) -> AxiomReport
    {
        AxiomReport report;
        auto & e = f.elements();
        int n = f.size();
        AlphaBeta ab;
        try {
            ab = alpha_beta(f);
        }
        catch (const InputError & err) {
            fail(report, "alpha-bijection", {}, err.what());
            return report;
        }

        for (int x = 0 ; x < n ; ++x)
            if (ab.beta_hat[ab.alpha_hat[x]] != x || ab.alpha_hat[ab.beta_hat[x]] != x) {
                fail(report, "alpha-inverse", { e[x] }, "alpha_hat and beta_hat are not mutually inverse at " + e[x]);
                return report;
            }
        report.checked.emplace_back("alpha-inverse", true);

        for (int r : f.monoid.eta) {
            int ar = ab.alpha_hat[r], br = ab.beta_hat[r];
            vector<int> by_target, by_source;
            for (int c : f.epsilon) {
                auto st = source_target(f.monoid, c);
                if (st.target == r)
                    by_target.push_back(c);
                if (st.source == r)
                    by_source.push_back(c);
            }
            if (by_target != vector<int>{ ar } || by_source != vector<int>{ br }) {
                fail(report, "unit-counit", { e[r] }, "alpha_hat/beta_hat of a unit is not its unique counit partner");
                return report;
            }
        }
        report.checked.emplace_back("unit-counit", true);

        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y)
                for (int z = 0 ; z < n ; ++z) {
                    bool d = f.delta.contains(x, y, z);
                    bool via_alpha = f.monoid.mu.contains(x, ab.alpha_hat[z], y);
                    bool via_beta = f.monoid.mu.contains(ab.beta_hat[y], x, z);
                    if (d != via_alpha || d != via_beta) {
                        fail(report, "delta-recovery", { e[x], e[y], e[z] },
                                "delta, mu(x, alpha_hat z) and mu(beta_hat y, x) disagree");
                        return report;
                    }
                }
        report.checked.emplace_back("delta-recovery", true);
        return report;
    }

    auto from_groupoid(const GroupoidData & g) -> FrobeniusAlgebra
    {
        auto bad = [] (const string & axiom, const string & detail) {
            return InputError("groupoid axiom '" + axiom + "' failed: " + detail);
        };

        if (g.objects.empty())
            throw bad("nonempty", "no objects");
        set<string> objects(g.objects.begin(), g.objects.end());
        if (objects.size() != g.objects.size())
            throw bad("objects", "duplicate object");

        vector<string> ids;
        for (auto & m : g.morphisms) {
            if (! objects.count(m.src) || ! objects.count(m.dst))
                throw bad("endpoints", "morphism '" + m.id + "' has an unknown endpoint");
            ids.push_back(m.id);
        }
        auto index = index_elements(ids);
        int n = int(ids.size());
        auto src = [&] (int f) -> const string & { return g.morphisms[f].src; };
        auto dst = [&] (int f) -> const string & { return g.morphisms[f].dst; };

        vector<int> comp(std::size_t(n) * n, -1);
        for (auto & [fn, gn, hn] : g.comp) {
            int f = lookup(index, fn, "comp"), k = lookup(index, gn, "comp"), h = lookup(index, hn, "comp");
            if (src(f) != dst(k))
                throw bad("composition", fn + " . " + gn + " listed but endpoints do not match");
            if (src(h) != src(k) || dst(h) != dst(f))
                throw bad("composition", fn + " . " + gn + " = " + hn + " has wrong endpoints");
            if (comp[f * n + k] != -1 && comp[f * n + k] != h)
                throw bad("composition", fn + " . " + gn + " is not single-valued");
            comp[f * n + k] = h;
        }
        for (int f = 0 ; f < n ; ++f)
            for (int k = 0 ; k < n ; ++k)
                if (src(f) == dst(k) && comp[f * n + k] == -1)
                    throw bad("composition", ids[f] + " . " + ids[k] + " is composable but missing");

        for (int f = 0 ; f < n ; ++f)
            for (int k = 0 ; k < n ; ++k)
                for (int l = 0 ; l < n ; ++l)
                    if (src(f) == dst(k) && src(k) == dst(l))
                        if (comp[comp[f * n + k] * n + l] != comp[f * n + comp[k * n + l]])
                            throw bad("associativity", "(" + ids[f] + " . " + ids[k] + ") . " + ids[l]);

        map<string, int> identity;
        for (int i = 0 ; i < n ; ++i) {
            if (src(i) != dst(i))
                continue;
            bool ok = true;
            for (int f = 0 ; f < n && ok ; ++f) {
                if (dst(f) == src(i) && comp[i * n + f] != f)
                    ok = false;
                if (src(f) == src(i) && comp[f * n + i] != f)
                    ok = false;
            }
            if (ok) {
                if (identity.count(src(i)))
                    throw bad("identity", "object '" + src(i) + "' has two identities");
                identity[src(i)] = i;
            }
        }
        for (auto & o : g.objects)
            if (! identity.count(o))
                throw bad("identity", "object '" + o + "' has no identity");

        vector<int> inverse(n, -1);
        for (auto & [fn, gn] : g.inv) {
            int f = lookup(index, fn, "inv"), k = lookup(index, gn, "inv");
            if (inverse[f] != -1 && inverse[f] != k)
                throw bad("inverse", fn + " has two listed inverses");
            inverse[f] = k;
        }
        for (int f = 0 ; f < n ; ++f) {
            int k = inverse[f];
            if (k == -1)
                throw bad("inverse", ids[f] + " has no listed inverse");
            if (src(k) != dst(f) || dst(k) != src(f)
                    || comp[f * n + k] != identity.at(dst(f)) || comp[k * n + f] != identity.at(src(f)))
                throw bad("inverse", ids[k] + " is not an inverse of " + ids[f]);
        }

        vector<Triple> mu, delta;
        for (int f = 0 ; f < n ; ++f)
            for (int k = 0 ; k < n ; ++k)
                if (comp[f * n + k] != -1) {
                    mu.push_back({ f, k, comp[f * n + k] });
                    delta.push_back({ comp[f * n + k], f, k });
                }
        vector<int> units;
        for (auto & [o, i] : identity)
            units.push_back(i);
        std::sort(units.begin(), units.end());

        FrobeniusAlgebra result;
        result.monoid.elements = ids;
        result.monoid.mu = TernaryRelation(n, mu);
        result.monoid.eta = units;
        result.delta = TernaryRelation(n, delta);
        result.epsilon = units;
        return result;
    }

    auto from_effect_algebra(const EffectAlgebraData & ea) -> FrobeniusAlgebra
    {
        auto bad = [] (const string & axiom, const string & detail) {
            return InputError("effect algebra axiom '" + axiom + "' failed: " + detail);
        };

        auto index = index_elements(ea.elements);
        auto & e = ea.elements;
        int n = int(e.size());
        int zero = lookup(index, ea.zero, "zero"), one = lookup(index, ea.one, "one");

        vector<int> plus(std::size_t(n) * n, -1);
        for (auto & [a, b, c] : to_ids(index, ea.plus, "plus")) {
            if (plus[a * n + b] != -1 && plus[a * n + b] != c)
                throw bad("partial operation", e[a] + " + " + e[b] + " is not single-valued");
            plus[a * n + b] = c;
        }
        auto sum = [&] (int a, int b) { return (a == -1 || b == -1) ? -1 : plus[a * n + b]; };

        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                if (sum(a, b) != sum(b, a))
                    throw bad("commutativity", e[a] + " + " + e[b]);
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                for (int c = 0 ; c < n ; ++c)
                    if (sum(sum(a, b), c) != sum(a, sum(b, c)))
                        throw bad("associativity", "(" + e[a] + " + " + e[b] + ") + " + e[c]);
        for (int a = 0 ; a < n ; ++a)
            if (sum(zero, a) != a)
                throw bad("zero", "0 + " + e[a] + " != " + e[a]);

        vector<int> supplement(n, -1);
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                if (sum(a, b) == one) {
                    if (supplement[a] != -1)
                        throw bad("orthosupplement", e[a] + " has two supplements");
                    supplement[a] = b;
                }
        for (int a = 0 ; a < n ; ++a) {
            if (supplement[a] == -1)
                throw bad("orthosupplement", e[a] + " has no supplement");
            if (sum(a, one) != -1 && a != zero)
                throw bad("zero-one law", e[a] + " + 1 is defined");
        }

        vector<Triple> mu, delta;
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                if (sum(a, b) != -1)
                    mu.push_back({ a, b, sum(a, b) });
        // delta: a -> (b, c) iff a = (b' + c')'
        for (int b = 0 ; b < n ; ++b)
            for (int c = 0 ; c < n ; ++c) {
                int s = sum(supplement[b], supplement[c]);
                if (s != -1)
                    delta.push_back({ supplement[s], b, c });
            }

        FrobeniusAlgebra result;
        result.monoid.elements = e;
        result.monoid.mu = TernaryRelation(n, mu);
        result.monoid.eta = { zero };
        result.delta = TernaryRelation(n, delta);
        result.epsilon = { one };
        return result;
    }

    auto from_effect_algebroid(const EffectAlgebroidData & ed) -> FrobeniusAlgebra
    {
        auto bad = [] (const string & axiom, const string & detail) {
            return InputError("effect algebroid axiom '" + axiom + "' failed: " + detail);
        };

        if (ed.points.empty())
            throw bad("nonempty", "no points");
        set<string> points(ed.points.begin(), ed.points.end());
        if (points.size() != ed.points.size())
            throw bad("points", "duplicate point");

        vector<string> ids;
        for (auto & s : ed.segments) {
            if (! points.count(s.src) || ! points.count(s.dst))
                throw bad("endpoints", "segment '" + s.id + "' has an unknown endpoint");
            ids.push_back(s.id);
        }
        auto index = index_elements(ids);
        int n = int(ids.size());
        auto src = [&] (int a) -> const string & { return ed.segments[a].src; };
        auto dst = [&] (int a) -> const string & { return ed.segments[a].dst; };

        map<string, int> zero, one;
        for (auto & p : ed.points) {
            auto z = ed.zeros.find(p), o = ed.ones.find(p);
            if (z == ed.zeros.end() || o == ed.ones.end())
                throw bad("units", "point '" + p + "' lacks 0 or 1");
            zero[p] = lookup(index, z->second, "zeros");
            one[p] = lookup(index, o->second, "ones");
            for (int s : { zero[p], one[p] })
                if (src(s) != p || dst(s) != p)
                    throw bad("units", "0/1 of '" + p + "' is not a loop at it");
        }

        vector<int> cup(std::size_t(n) * n, -1);
        for (auto & [a, b, c] : to_ids(index, ed.cup, "cup")) {
            if (dst(a) != src(b) || src(c) != src(a) || dst(c) != dst(b))
                throw bad("partiality", ids[a] + " cup " + ids[b] + " = " + ids[c] + " violates endpoints");
            if (cup[a * n + b] != -1 && cup[a * n + b] != c)
                throw bad("partiality", ids[a] + " cup " + ids[b] + " is not single-valued");
            cup[a * n + b] = c;
        }
        auto join = [&] (int a, int b) { return (a == -1 || b == -1) ? -1 : cup[a * n + b]; };

        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                for (int c = 0 ; c < n ; ++c)
                    if (join(join(a, b), c) != join(a, join(b, c)))
                        throw bad("associativity", "(" + ids[a] + " cup " + ids[b] + ") cup " + ids[c]);

        for (int a = 0 ; a < n ; ++a)
            for (auto & p : ed.points) {
                int z = zero[p];
                if (join(z, a) != (src(a) == p ? a : -1) || join(a, z) != (dst(a) == p ? a : -1))
                    throw bad("units", "0_" + p + " is not a unit for " + ids[a]);
            }

        vector<int> perp(n, -1);
        for (auto & [an, bn] : ed.perp) {
            int a = lookup(index, an, "perp"), b = lookup(index, bn, "perp");
            if (perp[a] != -1 && perp[a] != b)
                throw bad("perp", an + " has two complements");
            if (src(b) != dst(a) || dst(b) != src(a))
                throw bad("perp", bn + " has the wrong endpoints to complement " + an);
            perp[a] = b;
        }
        for (int a = 0 ; a < n ; ++a)
            if (perp[a] == -1)
                throw bad("perp", ids[a] + " has no complement");

        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b) {
                if (dst(a) != src(b) || dst(b) != src(a))
                    continue;
                bool covers = join(a, b) == one[src(a)];
                if (covers != (a == perp[b]) || covers != (b == perp[a]))
                    throw bad("perp", ids[a] + " cup " + ids[b] + " = 1 does not match the complements");
            }

        for (int a = 0 ; a < n ; ++a) {
            bool touches = join(one[src(a)], a) != -1 || join(a, one[dst(a)]) != -1;
            if (touches && ! (src(a) == dst(a) && a == zero[src(a)]))
                throw bad("one", "1 cup " + ids[a] + " or " + ids[a] + " cup 1 is defined");
        }

        vector<Triple> mu, delta;
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                if (join(a, b) != -1)
                    mu.push_back({ a, b, join(a, b) });
        // delta: a -> (b, c) iff mu:(c^perp, b^perp) -> a^perp
        vector<int> unperp(n);
        for (int a = 0 ; a < n ; ++a)
            unperp[perp[a]] = a;
        for (int b = 0 ; b < n ; ++b)
            for (int c = 0 ; c < n ; ++c) {
                int s = join(perp[c], perp[b]);
                if (s != -1)
                    delta.push_back({ unperp[s], b, c });
            }

        vector<int> zeros, ones;
        for (auto & p : ed.points) {
            zeros.push_back(zero[p]);
            ones.push_back(one[p]);
        }
        std::sort(zeros.begin(), zeros.end());
        std::sort(ones.begin(), ones.end());

        FrobeniusAlgebra result;
        result.monoid.elements = ids;
        result.monoid.mu = TernaryRelation(n, mu);
        result.monoid.eta = zeros;
        result.delta = TernaryRelation(n, delta);
        result.epsilon = ones;
        return result;
    }

    auto is_monoid_hom(const RelMonoid & a, const RelMonoid & b, const ElementMap & h) -> bool
    {
        if (int(h.size()) != a.size())
            return false;
        for (int r : a.eta)
            if (! b.is_unit(h[r]))
                return false;
        for (auto & [x, y, z] : a.mu.triples())
            if (! b.mu.contains(h[x], h[y], h[z]))
                return false;
        return true;
    }

    auto is_frobenius_hom(const FrobeniusAlgebra & a, const FrobeniusAlgebra & b, const ElementMap & h) -> bool
    {
        if (! is_monoid_hom(a.monoid, b.monoid, h))
            return false;
        for (int e : a.epsilon)
            if (! b.is_counit(h[e]))
                return false;
        return true;
    }

    namespace
    {
        /// Backtracking over maps a -> b in lexicographic order. Constraints are
        /// checked as soon as every element they mention is assigned.
        struct HomSearch
        {
            const RelMonoid & source;
            const RelMonoid & target;
            function<bool (int, int)> allowed;
            bool bijective = false;
            bool stop_at_first = false;
            const TernaryRelation * source_delta = nullptr;
            const TernaryRelation * target_delta = nullptr;

            vector<vector<Triple>> mu_due, delta_due;
            ElementMap current;
            vector<char> used;
            vector<ElementMap> found;

            HomSearch(const RelMonoid & s, const RelMonoid & t, function<bool (int, int)> a) :
                source(s),
                target(t),
                allowed(std::move(a))
            {
            }

            auto prepare() -> void
            {
                int n = source.size();
                mu_due.assign(n, {});
                delta_due.assign(n, {});
                for (auto & t : source.mu.triples())
                    mu_due[*std::max_element(t.begin(), t.end())].push_back(t);
                if (source_delta)
                    for (auto & t : source_delta->triples())
                        delta_due[*std::max_element(t.begin(), t.end())].push_back(t);
                current.assign(n, -1);
                used.assign(target.size(), 0);
            }

            auto consistent(int k) const -> bool
            {
                for (auto & [x, y, z] : mu_due[k])
                    if (! target.mu.contains(current[x], current[y], current[z]))
                        return false;
                for (auto & [x, y, z] : delta_due[k])
                    if (! target_delta->contains(current[x], current[y], current[z]))
                        return false;
                return true;
            }

            auto run(int k) -> bool
            {
                if (k == source.size()) {
                    found.push_back(current);
                    return ! stop_at_first;
                }
                for (int v = 0 ; v < target.size() ; ++v) {
                    if (bijective && used[v])
                        continue;
                    if (! allowed(k, v))
                        continue;
                    current[k] = v;
                    used[v] = 1;
                    bool keep_going = ! consistent(k) || run(k + 1);
                    used[v] = 0;
                    current[k] = -1;
                    if (! keep_going)
                        return false;
                }
                return true;
            }
        };
    }

    auto enumerate_monoid_homs(const RelMonoid & a, const RelMonoid & b) -> vector<ElementMap>
    {
        HomSearch search{ a, b, [&] (int x, int v) { return ! a.is_unit(x) || b.is_unit(v); } };
        search.prepare();
        search.run(0);
        return search.found;
    }

    auto enumerate_frobenius_homs(const FrobeniusAlgebra & a, const FrobeniusAlgebra & b) -> vector<ElementMap>
    {
        HomSearch search{ a.monoid, b.monoid, [&] (int x, int v) {
            return (! a.monoid.is_unit(x) || b.monoid.is_unit(v)) && (! a.is_counit(x) || b.is_counit(v));
        } };
        search.prepare();
        search.run(0);
        return search.found;
    }

    auto find_monoid_isomorphism(const RelMonoid & a, const RelMonoid & b) -> optional<ElementMap>
    {
        if (a.size() != b.size() || a.mu.size() != b.mu.size() || a.eta.size() != b.eta.size())
            return nullopt;
        HomSearch search{ a, b, [&] (int x, int v) { return a.is_unit(x) == b.is_unit(v); } };
        search.bijective = true;
        search.stop_at_first = true;
        search.prepare();
        search.run(0);
        if (search.found.empty())
            return nullopt;
        return search.found.front();
    }

    auto find_isomorphism(const FrobeniusAlgebra & a, const FrobeniusAlgebra & b) -> optional<ElementMap>
    {
        if (a.size() != b.size() || a.monoid.mu.size() != b.monoid.mu.size() || a.delta.size() != b.delta.size()
                || a.monoid.eta.size() != b.monoid.eta.size() || a.epsilon.size() != b.epsilon.size())
            return nullopt;
        HomSearch search{ a.monoid, b.monoid, [&] (int x, int v) {
            return a.monoid.is_unit(x) == b.monoid.is_unit(v) && a.is_counit(x) == b.is_counit(v);
        } };
        search.bijective = true;
        search.stop_at_first = true;
        search.source_delta = &a.delta;
        search.target_delta = &b.delta;
        search.prepare();
        search.run(0);
        if (search.found.empty())
            return nullopt;
        return search.found.front();
    }

    auto first_coordinate_cancellation_failure(const RelMonoid & m) -> optional<array<int, 4>>
    {
        int n = m.size();
        for (int b = 0 ; b < n ; ++b)
            for (int c = 0 ; c < n ; ++c)
                for (int a1 = 0 ; a1 < n ; ++a1)
                    for (int a2 = a1 + 1 ; a2 < n ; ++a2)
                        if (m.mu.contains(a1, b, c) && m.mu.contains(a2, b, c))
                            return array<int, 4>{ a1, a2, b, c };
        return nullopt;
    }

    auto second_coordinate_cancellation_failure(const RelMonoid & m) -> optional<array<int, 4>>
    {
        int n = m.size();
        for (int a = 0 ; a < n ; ++a)
            for (int c = 0 ; c < n ; ++c)
                for (int b1 = 0 ; b1 < n ; ++b1)
                    for (int b2 = b1 + 1 ; b2 < n ; ++b2)
                        if (m.mu.contains(a, b1, c) && m.mu.contains(a, b2, c))
                            return array<int, 4>{ a, b1, b2, c };
        return nullopt;
    }

    auto partiality_failure(const RelMonoid & m) -> optional<array<int, 4>>
    {
        int n = m.size();
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b) {
                auto out = m.mu.outputs(a, b);
                if (out.size() >= 2)
                    return array<int, 4>{ a, b, out[0], out[1] };
            }
        return nullopt;
    }
}
