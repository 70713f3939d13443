#include <relfrob/testspace.hh>
#include <relfrob/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using std::array;
using std::map;
using std::optional;
using std::set;
using std::string;
using std::vector;

namespace relfrob
{
    namespace
    {
        constexpr int max_outcomes = 20;

        auto subset_of(Event a, Event b) -> bool
        {
            return (a & ~b) == 0;
        }

        auto is_test(const TestSpace & t, Event e) -> bool
        {
            return std::binary_search(t.tests.begin(), t.tests.end(), e);
        }

        // Every submask of m, ascending.
        template <typename F_>
        auto for_submasks(Event m, const F_ & f) -> void
        {
            vector<Event> subs;
            Event s = m;
            while (true) {
                subs.push_back(s);
                if (s == 0)
                    break;
                s = (s - 1) & m;
            }
            for (auto it = subs.rbegin() ; it != subs.rend() ; ++it)
                f(*it);
        }

        using Tuple = vector<Event>;

        auto tuple_name(const TestSpace & t, const Tuple & tuple) -> string
        {
            if (tuple.size() == 1)
                return format_event(t, tuple[0]);
            string r = "(";
            for (std::size_t i = 0 ; i < tuple.size() ; ++i)
                r += (i ? "," : "") + format_event(t, tuple[i]);
            return r + ")";
        }

        auto event_of_name(const EpsSimplicialSet & x, const vector<Event> & edge_events,
                const vector<std::pair<string, string>> & assignment, const string & cell) -> Event
        {
            for (auto & [source, target] : assignment)
                if (source == cell)
                    return edge_events.at(x.cell_index(1, target));
            throw std::logic_error("lifting failure does not mention cell " + cell);
        }
    }

    auto make_testspace(vector<string> outcomes, const vector<vector<string>> & tests) -> TestSpace
    {
        if (outcomes.size() > std::size_t(max_outcomes))
            throw InputError("test space: at most " + std::to_string(max_outcomes) + " outcomes are supported");
        map<string, int> index;
        for (auto & o : outcomes)
            if (! index.emplace(o, int(index.size())).second)
                throw InputError("test space: duplicate outcome '" + o + "'");

        TestSpace t;
        t.outcomes = std::move(outcomes);
        Event covered = 0;
        for (std::size_t k = 0 ; k < tests.size() ; ++k) {
            Event e = 0;
            for (auto & o : tests[k]) {
                auto it = index.find(o);
                if (it == index.end())
                    throw InputError("test space: test " + std::to_string(k) + " mentions unknown outcome '" + o + "'");
                e |= Event(1) << it->second;
            }
            if (e == 0 && ! t.outcomes.empty())
                throw InputError("test space: test " + std::to_string(k) + " is empty but the outcome set is not");
            covered |= e;
            t.tests.push_back(e);
        }
        Event all = t.outcomes.empty() ? 0 : Event((std::uint64_t(1) << t.outcomes.size()) - 1);
        if (covered != all)
            throw InputError("test space: the tests do not cover every outcome");
        std::sort(t.tests.begin(), t.tests.end());
        t.tests.erase(std::unique(t.tests.begin(), t.tests.end()), t.tests.end());
        return t;
    }

    auto events(const TestSpace & t) -> vector<Event>
    {
        set<Event> found;
        for (auto test : t.tests)
            for_submasks(test, [&] (Event e) { found.insert(e); });
        return { found.begin(), found.end() };
    }

    auto format_event(const TestSpace & t, Event e) -> string
    {
        string r = "{";
        bool first = true;
        for (std::size_t i = 0 ; i < t.outcomes.size() ; ++i)
            if (e & (Event(1) << i)) {
                r += (first ? "" : ",") + t.outcomes[i];
                first = false;
            }
        return r + "}";
    }

    auto check_algebraicity(const TestSpace & t, AlgebraicityReading reading) -> AlgebraicityReport
    {
        AlgebraicityReport report;
        for (auto t1 : t.tests)
            for_submasks(t1, [&] (Event a) {
                Event b = t1 & ~a;
                for (auto t2 : t.tests) {
                    if (! subset_of(b, t2))
                        continue;
                    Event c = t2 & ~b;
                    for (auto t3 : t.tests) {
                        if (! subset_of(c, t3))
                            continue;
                        Event d = t3 & ~c;
                        ++report.quadruples;
                        bool ok = is_test(t, a | d) && (reading == AlgebraicityReading::Literal || (a & d) == 0);
                        if (! ok && report.algebraic) {
                            report.algebraic = false;
                            report.witness = array<Event, 4>{ a, b, c, d };
                        }
                    }
                }
            });
        return report;
    }

    static auto build_sset(const TestSpace & t, int trunc_dim, vector<vector<Tuple>> & cells) -> EpsSimplicialSet
    {
        if (trunc_dim < 2)
            throw InputError("test space: truncation must be at least 2");

        // the all-empty tuples exist even without tests
        vector<Event> containers = t.tests;
        containers.push_back(0);

        cells.assign(trunc_dim + 1, {});
        vector<map<Tuple, int>> lookup(trunc_dim + 1);
        for (int n = 0 ; n <= trunc_dim ; ++n) {
            set<Tuple> found;
            for (auto test : containers) {
                vector<int> members;
                for (int i = 0 ; i < int(t.outcomes.size()) ; ++i)
                    if (test & (Event(1) << i))
                        members.push_back(i);
                // each member goes to one of the n slots or to none (slot n)
                vector<int> slot(members.size(), 0);
                while (true) {
                    Tuple tuple(n, 0);
                    for (std::size_t k = 0 ; k < members.size() ; ++k)
                        if (slot[k] < n)
                            tuple[slot[k]] |= Event(1) << members[k];
                    found.insert(tuple);
                    std::size_t k = 0;
                    while (k < slot.size() && ++slot[k] > n)
                        slot[k++] = 0;
                    if (k == slot.size())
                        break;
                }
            }
            for (auto & tuple : found) {
                lookup[n].emplace(tuple, int(cells[n].size()));
                cells[n].push_back(tuple);
            }
        }

        auto x = empty_sset(trunc_dim);
        for (int n = 0 ; n <= trunc_dim ; ++n) {
            for (auto & tuple : cells[n])
                x.cell_names[n].push_back(n == 0 ? string("()") : tuple_name(t, tuple));
            for (auto & tuple : cells[n]) {
                if (n >= 1)
                    for (int i = 0 ; i <= n ; ++i) {
                        Tuple face;
                        if (i == 0)
                            face.assign(tuple.begin() + 1, tuple.end());
                        else if (i == n)
                            face.assign(tuple.begin(), tuple.end() - 1);
                        else {
                            face = tuple;
                            face[i - 1] |= face[i];
                            face.erase(face.begin() + i);
                        }
                        x.faces[n][i].push_back(lookup[n - 1].at(face));
                    }
                if (n < trunc_dim)
                    for (int i = 0 ; i <= n ; ++i) {
                        Tuple degen = tuple;
                        degen.insert(degen.begin() + i, Event(0));
                        x.degeneracies[n][i].push_back(lookup[n + 1].at(degen));
                    }
            }
        }

        for (auto test : t.tests) {
            x.eps_names.push_back(format_event(t, test));
            x.eps_edge.push_back(lookup[1].at(Tuple{ test }));
        }
        return x;
    }

    auto sset_of_testspace(const TestSpace & t, int trunc_dim) -> EpsSimplicialSet
    {
        vector<vector<Tuple>> cells;
        return build_sset(t, trunc_dim, cells);
    }

    auto algebraicity_shape(int trunc_dim) -> RealizedShape
    {
        enum { X, Z, O, Y, W };
        auto k = ordered_complex({ "x", "z", "o", "y", "w" },
                { { X, O, Y }, { Z, O, Y }, { Z, O, W }, { X, O, W } },
                { { X, Y }, { Z, Y }, { Z, W }, { X, W } }, trunc_dim);

        RealizedShape result;
        result.name.kind = ShapeName::Kind::CellsSigma;
        result.name.n = 4;
        result.name.spans = { { X, O, Y }, { Z, O, Y }, { Z, O, W } };
        result.ambient = k;
        result.sub = span_subobject(k, result.name.spans);
        auto m = materialize(result.sub);
        result.domain = std::move(m.set);
        result.inclusion = std::move(m.inclusion);
        return result;
    }

    auto algebraicity_as_lifting(const TestSpace & t) -> AlgebraicityLiftingReport
    {
        AlgebraicityLiftingReport report;
        vector<vector<Tuple>> cells;
        auto x = build_sset(t, 2, cells);
        auto shape = algebraicity_shape(2);

        report.lifting = check_extension(shape, x, LiftMode::Exists, 1);
        report.by_lifting = report.lifting.holds;
        report.scan = check_algebraicity(t, AlgebraicityReading::LocalOrthocomplement);
        report.by_scan = report.scan.algebraic;
        report.by_literal_scan = check_algebraicity(t, AlgebraicityReading::Literal).algebraic;

        if (! report.lifting.failures.empty()) {
            vector<Event> edge_events;
            for (auto & tuple : cells[1])
                edge_events.push_back(tuple[0]);

            auto & a = report.lifting.failures.front().assignment;
            report.lifting_witness = array<Event, 4>{
                event_of_name(x, edge_events, a, "xo"),
                event_of_name(x, edge_events, a, "oy"),
                event_of_name(x, edge_events, a, "zo"),
                event_of_name(x, edge_events, a, "ow") };
        }

        if (report.by_lifting != report.by_scan)
            throw std::logic_error("algebraicity by lifting disagrees with the direct scan on " + std::to_string(t.outcomes.size())
                    + " outcomes and " + std::to_string(t.tests.size()) + " tests");
        return report;
    }

    auto enumerate_test_spaces(int max_outcomes_wanted, int max_tests) -> vector<TestSpace>
    {
        if (max_outcomes_wanted > 6)
            throw InputError("test space enumeration supports at most 6 outcomes");
        vector<TestSpace> result;
        for (int n = 1 ; n <= max_outcomes_wanted ; ++n) {
            Event all = (Event(1) << n) - 1;
            vector<string> names;
            for (int i = 0 ; i < n ; ++i)
                names.push_back(string(1, char('a' + i)));

            // permuted image of every mask, per permutation
            vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            vector<vector<Event>> image;
            do {
                vector<Event> row(all + 1, 0);
                for (Event m = 0 ; m <= all ; ++m)
                    for (int i = 0 ; i < n ; ++i)
                        if (m & (Event(1) << i))
                            row[m] |= Event(1) << perm[i];
                image.push_back(std::move(row));
            } while (std::next_permutation(perm.begin(), perm.end()));

            for (int k = 1 ; k <= max_tests ; ++k) {
                set<vector<Event>> canonical;
                vector<Event> chosen;
                vector<Event> mapped(k);
                auto visit = [&] (auto & self, Event next, Event covered) -> void {
                    if (int(chosen.size()) == k) {
                        if (covered != all)
                            return;
                        // chosen is ascending; it is canonical if no permutation gives a smaller sorted list
                        for (auto & row : image) {
                            for (int i = 0 ; i < k ; ++i)
                                mapped[i] = row[chosen[i]];
                            std::sort(mapped.begin(), mapped.end());
                            if (mapped < chosen)
                                return;
                        }
                        canonical.insert(chosen);
                        return;
                    }
                    int remaining = k - int(chosen.size());
                    for (Event m = next ; m + Event(remaining) - 1 <= all ; ++m) {
                        chosen.push_back(m);
                        self(self, m + 1, covered | m);
                        chosen.pop_back();
                    }
                };
                visit(visit, 1, 0);
                for (auto & tests : canonical)
                    result.push_back(TestSpace{ names, tests });
            }
        }
        return result;
    }
}
