#include <relfrob/theorems.hh>
#include <relfrob/errors.hh>
#include <relfrob/nerve.hh>
#include <relfrob/shapes.hh>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using std::logic_error;
using std::map;
using std::optional;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace relfrob
{
    auto TheoremReport::value(const string & check_name) const -> bool
    {
        for (auto & c : checks)
            if (c.name == check_name)
                return c.value;
        throw std::out_of_range("no check named '" + check_name + "'");
    }

    auto lifting_check(const string & name, const LiftingReport & r) -> Check
    {
        Check c;
        c.name = name;
        c.value = r.holds;
        c.detail = to_string(r.total_instances) + " instances, " + to_string(r.without_extension) + " without extension, "
            + to_string(r.with_several) + " with several";
        if (! r.failures.empty())
            c.witness = r.failures.front().assignment;
        return c;
    }

    namespace
    {
        auto lift(const EpsSimplicialSet & x, const string & shape, LiftMode mode) -> LiftingReport
        {
            return check_extension(realize(shape, x.trunc_dim), x, mode);
        }

        auto algebraic_check(const string & name, const RelMonoid & m, const optional<std::array<int, 4>> & failure,
                const string & what) -> Check
        {
            Check c;
            c.name = name;
            c.value = ! failure;
            if (failure) {
                auto & e = m.elements;
                auto & w = *failure;
                c.detail = what;
                c.witness = { { "1", e[w[0]] }, { "2", e[w[1]] }, { "3", e[w[2]] }, { "4", e[w[3]] } };
            }
            return c;
        }

        auto at_least_four(const EpsSimplicialSet & x, const string & who) -> EpsSimplicialSet
        {
            if (x.trunc_dim < 4)
                throw InputError(who + " needs truncation at least 4");
            return truncate(x, 4);
        }
    }

    auto cancellation_and_horns(const RelMonoid & m) -> TheoremReport
    {
        auto x = nerve_monoid(m, 3);
        TheoremReport report;
        report.theorem = "cancellation";

        report.checks.push_back(algebraic_check("first-coordinate cancellation", m, first_coordinate_cancellation_failure(m),
                    "mu:(a1,b)->c and mu:(a2,b)->c with a1 != a2, as (a1, a2, b, c)"));
        report.checks.push_back(lifting_check("horn:3:0", lift(x, "horn:3:0", LiftMode::Exists)));
        report.checks.push_back(algebraic_check("second-coordinate cancellation", m, second_coordinate_cancellation_failure(m),
                    "mu:(a,b1)->c and mu:(a,b2)->c with b1 != b2, as (a, b1, b2, c)"));
        report.checks.push_back(lifting_check("horn:3:3", lift(x, "horn:3:3", LiftMode::Exists)));
        report.checks.push_back(algebraic_check("partiality", m, partiality_failure(m),
                    "two products of one pair, as (a, b, c1, c2)"));
        report.checks.push_back(lifting_check("horn:3:1", lift(x, "horn:3:1", LiftMode::Exists)));
        report.checks.push_back(lifting_check("horn:3:2", lift(x, "horn:3:2", LiftMode::Exists)));

        auto v = [&] (const string & n) { return report.value(n); };
        report.holds = v("first-coordinate cancellation") == v("horn:3:0")
            && v("second-coordinate cancellation") == v("horn:3:3")
            && v("partiality") == v("horn:3:1") && v("partiality") == v("horn:3:2");
        return report;
    }

    auto eps_horn_checks(const EpsSimplicialSet & x, LiftMode mode, int max_n) -> vector<Check>
    {
        vector<Check> result;
        for (int n = 1 ; n <= max_n ; ++n)
            for (int i : { 0, n }) {
                string shape = "eps-horn:" + to_string(n) + ":" + to_string(i);
                result.push_back(lifting_check(shape, lift(x, shape, mode)));
            }
        return result;
    }

    auto unique_eps_horns(const FrobeniusAlgebra & f, int trunc_dim) -> TheoremReport
    {
        auto x = nerve_frobenius(f, trunc_dim);
        TheoremReport report;
        report.theorem = "eps-horns";
        report.checks = eps_horn_checks(x, LiftMode::Unique, trunc_dim);
        report.holds = std::all_of(report.checks.begin(), report.checks.end(), [] (const Check & c) { return c.value; });
        return report;
    }

    auto mu_delta_of_sset(const EpsSimplicialSet & x) -> ExtractedRelations
    {
        ExtractedRelations r;
        r.edges = x.cell_names[1];
        set<int> eps(x.eps_edge.begin(), x.eps_edge.end());
        r.eps_edges.assign(eps.begin(), eps.end());
        set<int> degenerate;
        for (int v = 0 ; v < x.count(0) ; ++v)
            degenerate.insert(x.degen(0, 0, v));
        r.degenerate_edges.assign(degenerate.begin(), degenerate.end());

        set<Triple> mu, delta;
        set<pair<int, int>> alpha;
        for (int s = 0 ; s < x.count(2) ; ++s) {
            int b = x.face(2, 0, s), c = x.face(2, 1, s), a = x.face(2, 2, s);
            mu.insert({ b, a, c });
            if (eps.count(c))
                alpha.emplace(b, a);
        }
        if (x.trunc_dim >= 3)
            for (int t = 0 ; t < x.count(3) ; ++t)
                if (eps.count(edge_of(x, 3, t, 0, 3)))
                    delta.insert({ edge_of(x, 3, t, 1, 2), edge_of(x, 3, t, 0, 2), edge_of(x, 3, t, 1, 3) });

        r.mu.assign(mu.begin(), mu.end());
        r.delta.assign(delta.begin(), delta.end());
        r.alpha.assign(alpha.begin(), alpha.end());
        for (auto & [b, a] : alpha)
            r.beta.emplace_back(a, b);
        std::sort(r.beta.begin(), r.beta.end());
        return r;
    }

    auto two_sided_delta(const EpsSimplicialSet & x) -> TheoremReport
    {
        TheoremReport report;
        report.theorem = "two-sided-delta";
        auto horns = eps_horn_checks(x, LiftMode::Exists, x.trunc_dim);
        for (auto & h : horns)
            if (! h.value) {
                report.skipped = true;
                report.skip_reason = "no extension along " + h.name;
                report.checks = horns;
                return report;
            }

        auto r = mu_delta_of_sset(x);
        int n = int(r.edges.size());
        vector<char> mu(std::size_t(n) * n * n, 0);
        for (auto & [b, a, c] : r.mu)
            mu[(std::size_t(b) * n + a) * n + c] = 1;
        auto has_mu = [&] (int b, int a, int c) { return mu[(std::size_t(b) * n + a) * n + c] != 0; };

        vector<vector<int>> alpha_of(n), beta_of(n);
        for (auto & [b, a] : r.alpha)
            alpha_of[b].push_back(a);
        for (auto & [a, b] : r.beta)
            beta_of[a].push_back(b);

        Check c{ "two-sided delta description", true, "", {} };
        long compared = 0;
        for (int a = 0 ; a < n && c.value ; ++a)
            for (int b = 0 ; b < n && c.value ; ++b)
                for (int e = 0 ; e < n ; ++e) {
                    ++compared;
                    // left: <01> = b' with alpha_hat b -> b', <12> = e, <02> = a
                    bool left = std::any_of(alpha_of[b].begin(), alpha_of[b].end(), [&] (int bp) { return has_mu(e, bp, a); });
                    // right: <01> = e, <12> = a' with beta_hat a -> a', <02> = b
                    bool right = std::any_of(beta_of[a].begin(), beta_of[a].end(), [&] (int ap) { return has_mu(ap, e, b); });
                    if (left != right) {
                        c.value = false;
                        c.detail = string("only the ") + (left ? "left" : "right") + " 2-simplex exists";
                        c.witness = { { "a", r.edges[a] }, { "b", r.edges[b] }, { "c", r.edges[e] } };
                        break;
                    }
                }
        if (c.value)
            c.detail = to_string(compared) + " edge triples compared";
        report.checks = horns;
        report.checks.push_back(c);
        report.holds = c.value;
        return report;
    }

    auto comparison_shapes() -> ComparisonShapes
    {
        return {
            {
                { "I1", "faces-sigma:4:1,3" },
                { "I2", "cells-sigma:4:0134+123" },
                { "I3", "faces-delta:3:1,3" },
                { "I4", "faces-delta:3:0,2" }
            },
            {
                { "J1", "cells-sigma:4:0124+023" },
                { "J2", "cells-sigma:4:0234+124" },
                { "J3", "cells-sigma:4:0124+0234" }
            },
            { "J2 variant", "cells-sigma:4:0234+123" }
        };
    }

    auto comparison_equivalences(const EpsSimplicialSet & input) -> TheoremReport
    {
        auto x = at_least_four(input, "I and J comparison");
        TheoremReport report;
        report.theorem = "comparisons";
        auto horns = eps_horn_checks(x, LiftMode::Exists, 4);
        bool horns_ok = std::all_of(horns.begin(), horns.end(), [] (const Check & c) { return c.value; });
        report.checks = horns;

        auto shapes = comparison_shapes();
        auto predicates = [&] (const vector<pair<string, string>> & list) {
            vector<bool> values;
            for (auto & [name, grammar] : list) {
                auto extra = lifting_check(grammar, lift(x, grammar, LiftMode::Exists));
                report.checks.push_back(extra);
                report.checks.push_back({ name, horns_ok && extra.value, "eps-horns and " + grammar, {} });
                values.push_back(horns_ok && extra.value);
            }
            return values;
        };
        auto i_values = predicates(shapes.i_shapes);
        auto j_values = predicates(shapes.j_shapes);

        auto & [variant_name, variant_grammar] = shapes.j2_variant;
        auto variant = lifting_check(variant_grammar, lift(x, variant_grammar, LiftMode::Exists));
        report.checks.push_back({ variant_name, horns_ok && variant.value, "information only: eps-horns and " + variant_grammar,
                variant.witness });

        auto all_equal = [] (const vector<bool> & v) { return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end(); };
        report.checks.push_back({ "I agreement", all_equal(i_values), "", {} });
        report.checks.push_back({ "J agreement", all_equal(j_values), "", {} });
        report.holds = all_equal(i_values) && all_equal(j_values);
        return report;
    }

    auto face_union_extensions(const EpsSimplicialSet & input) -> TheoremReport
    {
        auto x = at_least_four(input, "face union check");
        TheoremReport report;
        report.theorem = "face-unions";
        auto horns = eps_horn_checks(x, LiftMode::Exists, 4);
        for (auto & h : horns)
            if (! h.value) {
                report.skipped = true;
                report.skip_reason = "no extension along " + h.name;
                report.checks = horns;
                return report;
            }

        for (int n = 1 ; n <= 4 ; ++n)
            for (int mask = 1 ; mask < (1 << (n + 1)) ; ++mask) {
                bool has0 = mask & 1, hasn = mask & (1 << n);
                if (has0 == hasn)
                    continue;
                string faces;
                for (int i = 0 ; i <= n ; ++i)
                    if (mask & (1 << i))
                        faces += (faces.empty() ? "" : ",") + to_string(i);
                string shape = "faces-sigma:" + to_string(n) + ":" + faces;
                report.checks.push_back(lifting_check(shape, lift(x, shape, LiftMode::Exists)));
            }
        report.holds = std::all_of(report.checks.begin(), report.checks.end(), [] (const Check & c) { return c.value; });
        return report;
    }

    auto algebra_of_sset(const EpsSimplicialSet & x) -> FrobeniusAlgebra
    {
        auto r = mu_delta_of_sset(x);
        int n = int(r.edges.size());
        FrobeniusAlgebra f;
        f.monoid.elements = r.edges;
        f.monoid.mu = TernaryRelation(n, r.mu);
        f.monoid.eta = r.degenerate_edges;
        f.delta = TernaryRelation(n, r.delta);
        f.epsilon = r.eps_edges;
        return f;
    }

    auto agrees_with_completion(const EpsSimplicialSet & x) -> bool
    {
        auto y = coskeletal_completion(truncate(x, 2), x.trunc_dim);
        SimplicialMap phi = identity_map(truncate(x, 2));
        for (int n = 3 ; n <= x.trunc_dim ; ++n) {
            map<vector<int>, int> by_faces;
            for (int c = 0 ; c < y.count(n) ; ++c) {
                vector<int> t;
                for (int i = 0 ; i <= n ; ++i)
                    t.push_back(y.face(n, i, c));
                by_faces.emplace(t, c);
            }
            phi.cells.emplace_back();
            for (int c = 0 ; c < x.count(n) ; ++c) {
                vector<int> t;
                for (int i = 0 ; i <= n ; ++i)
                    t.push_back(phi.cells[n - 1][x.face(n, i, c)]);
                auto it = by_faces.find(t);
                if (it == by_faces.end())
                    return false;
                phi.cells[n].push_back(it->second);
            }
        }
        return is_natural(x, y, phi) && is_bijective(phi, y);
    }

    namespace
    {
        auto failure_name(const string & prefix, const string & shape, const LiftingReport & r) -> string
        {
            return prefix + " " + shape + (r.without_extension > 0 ? " existence" : " uniqueness");
        }
    }

    auto characterize(const EpsSimplicialSet & x) -> CharacterizeReport
    {
        if (x.trunc_dim < 4)
            throw InputError("characterize needs truncation at least 4");
        auto valid = validate(x);
        if (! valid.ok)
            throw InputError("not an epsilon-simplicial set: " + valid.violation);

        CharacterizeReport report;
        int k = x.trunc_dim;
        bool cond_i = true, cond_ii = true, cond_ii_exists = true, cond_iii = true;
        auto note_failure = [&] (const string & name, const vector<pair<string, string>> & witness) {
            if (report.failed_condition.empty()) {
                report.failed_condition = name;
                report.witness = witness;
            }
        };

        for (int n = 1 ; n <= k ; ++n)
            for (int i : { 0, n }) {
                string shape = "eps-horn:" + to_string(n) + ":" + to_string(i);
                auto r = lift(x, shape, LiftMode::Unique);
                auto c = lifting_check("(i) " + shape, r);
                if (! r.holds) {
                    cond_i = false;
                    note_failure(failure_name("(i)", shape, r), c.witness);
                }
                report.checks.push_back(c);
            }

        for (int n = 3 ; n <= k ; ++n) {
            string shape = "boundary:" + to_string(n);
            auto r = lift(x, shape, LiftMode::Unique);
            auto c = lifting_check("(ii) " + shape, r);
            if (! r.holds) {
                cond_ii = false;
                note_failure(failure_name("(ii)", shape, r), c.witness);
            }
            if (r.without_extension > 0)
                cond_ii_exists = false;
            report.checks.push_back(c);
        }
        bool completion = agrees_with_completion(x);
        report.checks.push_back({ "(ii) completion agreement", completion, "", {} });
        if (! completion) {
            cond_ii = false;
            note_failure("(ii) completion agreement", {});
        }

        {
            string shape = "faces-sigma:4:1,3";
            auto r = lift(truncate(x, 4), shape, LiftMode::Exists);
            auto c = lifting_check("(iii) " + shape, r);
            if (! r.holds) {
                cond_iii = false;
                note_failure("(iii) " + shape + " existence", c.witness);
            }
            report.checks.push_back(c);
        }

        report.accepted = cond_i && cond_ii && cond_iii;
        report.accepted_without_uniqueness = cond_i && cond_ii_exists && cond_iii;

        if (cond_i && cond_iii) {
            auto f = algebra_of_sset(x);
            auto identity = check_frobenius_identity(f.monoid, f.delta);
            if (! identity.ok)
                throw logic_error("eps-horns and the Frobenius lift hold but the extracted relations violate the Frobenius identity: "
                        + identity.detail);
            if (report.accepted) {
                auto axioms = check_frobenius(f);
                if (! axioms.ok)
                    throw logic_error("accepted set yields a non-Frobenius algebra: " + axioms.violated_axiom + " " + axioms.detail);
                if (! find_sset_isomorphism(x, nerve_frobenius(f, k)))
                    throw logic_error("accepted set is not isomorphic to the nerve of its algebra");
                report.algebra = std::move(f);
            }
        }
        return report;
    }
}
