#ifndef RELFROB_TESTS_ORACLES_HH
#define RELFROB_TESTS_ORACLES_HH 1

// Brute-force reference computations. None of these call the search engine,
// the nerve builder or the algebraicity scanner of the library.

#include <relfrob/relcore.hh>
#include <relfrob/simplicial.hh>
#include <relfrob/testspace.hh>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using relfrob::EpsSimplicialSet;
    using relfrob::RelMonoid;
    using relfrob::SimplicialMap;

    /// Units s(a), t(a) by scanning mu: mu:(a, r) -> a and mu:(r, a) -> a.
    inline auto source_of(const RelMonoid & m, int a) -> int
    {
        for (int r : m.eta)
            if (m.mu.contains(a, r, a))
                return r;
        return -1;
    }

    inline auto target_of(const RelMonoid & m, int a) -> int
    {
        for (int r : m.eta)
            if (m.mu.contains(r, a, a))
                return r;
        return -1;
    }

    /// |Hom([n], M)|: vertex labels v_i in eta and edge labels x_ij for i < j
    /// with s(x_ij) = v_i, t(x_ij) = v_j and mu:(x_jk, x_ij) -> x_ik.
    inline auto count_chains(const RelMonoid & m, int n) -> long
    {
        if (n == 0)
            return long(m.eta.size());
        std::vector<std::pair<int, int>> edges;
        for (int j = 1 ; j <= n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                edges.emplace_back(i, j);
        std::vector<std::vector<int>> x(n + 1, std::vector<int>(n + 1, -1));
        long count = 0;
        std::function<void (std::size_t)> go = [&] (std::size_t k) {
            if (k == edges.size()) {
                for (int i = 0 ; i <= n ; ++i)
                    for (int j = i + 1 ; j <= n ; ++j)
                        for (int l = j + 1 ; l <= n ; ++l)
                            if (! m.mu.contains(x[j][l], x[i][j], x[i][l]))
                                return;
                std::vector<int> v(n + 1);
                for (int i = 0 ; i < n ; ++i)
                    v[i] = source_of(m, x[i][i + 1]);
                v[n] = target_of(m, x[n - 1][n]);
                for (int i = 0 ; i <= n ; ++i)
                    for (int j = i + 1 ; j <= n ; ++j)
                        if (source_of(m, x[i][j]) != v[i] || target_of(m, x[i][j]) != v[j])
                            return;
                ++count;
                return;
            }
            auto [i, j] = edges[k];
            for (int a = 0 ; a < m.size() ; ++a) {
                x[i][j] = a;
                go(k + 1);
            }
        };
        go(0);
        return count;
    }

    /// Binomial coefficient.
    inline auto choose(long n, long k) -> long
    {
        if (k < 0 || k > n)
            return 0;
        long r = 1;
        for (long i = 1 ; i <= k ; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    /// Monotone maps [k] -> [n].
    inline auto monotone_maps(int k, int n) -> long
    {
        return choose(n + k + 1, k + 1);
    }

    /// Every natural map a -> x, found level by level: each cell of a, in
    /// order of dimension, picks any cell of x with the already chosen faces;
    /// degeneracies and witnesses are checked afterwards.
    inline auto all_maps(const EpsSimplicialSet & a, const EpsSimplicialSet & x) -> std::vector<SimplicialMap>
    {
        std::vector<SimplicialMap> result;
        if (a.trunc_dim != x.trunc_dim)
            return result;
        SimplicialMap f;
        f.cells.resize(a.trunc_dim + 1);
        for (int d = 0 ; d <= a.trunc_dim ; ++d)
            f.cells[d].assign(a.count(d), -1);
        f.eps.assign(a.eps_count(), -1);

        std::vector<std::pair<int, int>> order;
        for (int d = 0 ; d <= a.trunc_dim ; ++d)
            for (int c = 0 ; c < a.count(d) ; ++c)
                order.emplace_back(d, c);

        std::function<void (std::size_t)> witnesses = [&] (std::size_t e) {
            if (e == std::size_t(a.eps_count())) {
                result.push_back(f);
                return;
            }
            for (int w = 0 ; w < x.eps_count() ; ++w)
                if (x.eps_edge[w] == f.cells[1][a.eps_edge[e]]) {
                    f.eps[e] = w;
                    witnesses(e + 1);
                }
        };

        std::function<void (std::size_t)> cells = [&] (std::size_t k) {
            if (k == order.size()) {
                for (int d = 0 ; d < a.trunc_dim ; ++d)
                    for (int c = 0 ; c < a.count(d) ; ++c)
                        for (int i = 0 ; i <= d ; ++i)
                            if (f.cells[d + 1][a.degen(d, i, c)] != x.degen(d, i, f.cells[d][c]))
                                return;
                witnesses(0);
                return;
            }
            auto [d, c] = order[k];
            for (int t = 0 ; t < x.count(d) ; ++t) {
                bool ok = true;
                for (int i = 0 ; d >= 1 && i <= d && ok ; ++i)
                    ok = x.face(d, i, t) == f.cells[d - 1][a.face(d, i, c)];
                if (ok) {
                    f.cells[d][c] = t;
                    cells(k + 1);
                }
            }
            f.cells[d][c] = -1;
        };
        cells(0);
        return result;
    }

    struct ExtensionCounts
    {
        long instances = 0;
        long without = 0;
        long several = 0;
    };

    /// For each f : a -> x, the number of g : b -> x restricting to f along m.
    inline auto extension_counts(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & m,
            const EpsSimplicialSet & x) -> ExtensionCounts
    {
        auto restrict = [&] (const SimplicialMap & g) {
            SimplicialMap r;
            r.cells.resize(a.trunc_dim + 1);
            for (int d = 0 ; d <= a.trunc_dim ; ++d)
                for (int c = 0 ; c < a.count(d) ; ++c)
                    r.cells[d].push_back(g.cells[d][m.cells[d][c]]);
            for (int e = 0 ; e < a.eps_count() ; ++e)
                r.eps.push_back(g.eps[m.eps[e]]);
            return r;
        };
        std::map<SimplicialMap, long> extensions;
        for (auto & f : all_maps(a, x))
            extensions[f] = 0;
        for (auto & g : all_maps(b, x))
            ++extensions[restrict(g)];
        ExtensionCounts r;
        for (auto & [f, n] : extensions) {
            ++r.instances;
            if (n == 0)
                ++r.without;
            if (n >= 2)
                ++r.several;
        }
        return r;
    }

    /// Every map h with h(eta) in eta and mu:(a,b) -> c implying mu:(ha,hb) -> hc,
    /// plus counit preservation when both counit lists are given.
    inline auto count_homs(const RelMonoid & a, const RelMonoid & b, const std::vector<int> * eps_a = nullptr,
            const std::vector<int> * eps_b = nullptr) -> long
    {
        std::vector<int> h(a.size(), 0);
        long count = 0;
        std::set<int> units_b(b.eta.begin(), b.eta.end());
        std::set<int> counits_b;
        if (eps_b)
            counits_b.insert(eps_b->begin(), eps_b->end());
        while (true) {
            bool ok = true;
            for (int r : a.eta)
                ok = ok && units_b.count(h[r]);
            if (eps_a)
                for (int e : *eps_a)
                    ok = ok && counits_b.count(h[e]);
            for (auto & [x, y, z] : a.mu.triples())
                ok = ok && b.mu.contains(h[x], h[y], h[z]);
            if (ok)
                ++count;
            int k = 0;
            while (k < a.size() && ++h[k] == b.size())
                h[k++] = 0;
            if (k == a.size())
                break;
        }
        return count;
    }

    /// Algebraicity by pairs of events: A, B disjoint with A u B a test, then C
    /// disjoint from B with B u C a test, then D disjoint from C with C u D a test.
    inline auto algebraic(const relfrob::TestSpace & t, bool literal) -> bool
    {
        using relfrob::Event;
        std::set<Event> tests(t.tests.begin(), t.tests.end());
        std::set<Event> events;
        for (auto test : t.tests)
            for (Event e = 0 ; e <= test ; ++e)
                if ((e & ~test) == 0)
                    events.insert(e);
        auto oc = [&] (Event p, Event q) { return (p & q) == 0 && tests.count(p | q); };
        for (auto a : events)
            for (auto b : events)
                if (oc(a, b))
                    for (auto c : events)
                        if (oc(b, c))
                            for (auto d : events)
                                if (oc(c, d)) {
                                    bool ok = literal ? tests.count(a | d) > 0 : oc(a, d);
                                    if (! ok)
                                        return false;
                                }
        return true;
    }
}

#endif
