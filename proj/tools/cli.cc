#include "cli.hh"

#include <relfrob/catalog.hh>
#include <relfrob/errors.hh>
#include <relfrob/json_io.hh>
#include <relfrob/lifting.hh>
#include <relfrob/nerve.hh>
#include <relfrob/shapes.hh>
#include <relfrob/testspace.hh>
#include <relfrob/theorems.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

using std::optional;
using std::ostream;
using std::pair;
using std::string;
using std::vector;

namespace relfrob
{
    namespace
    {
        struct Options
        {
            bool json_only = false;
            int max_dim = 4;
            string input;
            string output;
            string shape;
            bool unique = false;
            int cap = 10;
            string theorem;
            bool check_algebraicity = false;
            bool via_lifting = false;
            bool literal = false;
        };

        // What an input file held, with the eps-set it presents.
        struct Loaded
        {
            string kind;    ///< "algebra", "sset" or "testspace"
            optional<AlgebraInput> algebra;
            optional<TestSpace> space;
            optional<EpsSimplicialSet> set;
        };

        auto write_file(const string & path, const Json & j) -> void
        {
            std::ofstream f(path);
            if (! f)
                throw InputError(path + ": cannot write file");
            f << j.dump(2) << '\n';
        }

        // The monoid nerve with a witness on every listed counit element. The
        // Frobenius axioms are not required here, so failures show up as lifts.
        auto presented_sset(const AlgebraInput & a, int k) -> EpsSimplicialSet
        {
            auto x = nerve_monoid(a.monoid, k);
            if (a.frobenius)
                for (int e : a.frobenius->epsilon) {
                    x.eps_names.push_back(a.monoid.elements[e]);
                    x.eps_edge.push_back(e);
                }
            return x;
        }

        auto load(const string & path) -> Loaded
        {
            auto j = read_json_file(path);
            Loaded l;
            if (j.is_object() && j.contains("kind")) {
                l.kind = "algebra";
                l.algebra = algebra_from_json(j);
            }
            else if (j.is_object() && j.contains("outcomes")) {
                l.kind = "testspace";
                l.space = testspace_from_json(j);
            }
            else {
                l.kind = "sset";
                l.set = sset_from_json(j);
            }
            return l;
        }

        auto sset_of(Loaded & l, int k) -> const EpsSimplicialSet &
        {
            if (! l.set) {
                if (l.algebra)
                    l.set = presented_sset(*l.algebra, k);
                else
                    l.set = sset_of_testspace(*l.space, k);
            }
            return *l.set;
        }

        auto pairs_json(const vector<pair<string, string>> & v) -> Json
        {
            Json j = Json::object();
            for (auto & [k, val] : v)
                j[k] = val;
            return j;
        }

        auto check_json(const Check & c) -> Json
        {
            Json j;
            j["name"] = c.name;
            j["value"] = c.value;
            if (! c.detail.empty())
                j["detail"] = c.detail;
            if (! c.witness.empty())
                j["witness"] = pairs_json(c.witness);
            return j;
        }

        auto checks_json(const vector<Check> & checks) -> Json
        {
            Json a = Json::array();
            for (auto & c : checks)
                a.push_back(check_json(c));
            return a;
        }

        auto axiom_json(const AxiomReport & r) -> Json
        {
            Json j;
            j["ok"] = r.ok;
            if (! r.ok) {
                j["violated_axiom"] = r.violated_axiom;
                j["witness"] = r.witness;
                j["detail"] = r.detail;
            }
            j["checked"] = Json::array();
            for (auto & [name, ok] : r.checked)
                j["checked"].push_back({ { "axiom", name }, { "ok", ok } });
            return j;
        }

        auto lifting_json(const LiftingReport & r) -> Json
        {
            Json j;
            j["holds"] = r.holds;
            j["mode"] = r.mode == LiftMode::Unique ? "unique" : "exists";
            j["total_instances"] = r.total_instances;
            j["failing_instances"] = r.failing_instances;
            j["without_extension"] = r.without_extension;
            j["with_several"] = r.with_several;
            j["failures"] = Json::array();
            for (auto & f : r.failures)
                j["failures"].push_back({ { "assignment", pairs_json(f.assignment) }, { "extensions", f.extensions } });
            return j;
        }

        auto theorem_json(const TheoremReport & r) -> Json
        {
            Json j;
            j["theorem"] = r.theorem;
            j["holds"] = r.holds;
            j["skipped"] = r.skipped;
            if (r.skipped)
                j["skip_reason"] = r.skip_reason;
            j["checks"] = checks_json(r.checks);
            return j;
        }

        auto characterize_json(const CharacterizeReport & r) -> Json
        {
            Json j;
            j["accepted"] = r.accepted;
            j["accepted_without_uniqueness"] = r.accepted_without_uniqueness;
            if (! r.accepted) {
                j["failed_condition"] = r.failed_condition;
                j["witness"] = pairs_json(r.witness);
            }
            j["checks"] = checks_json(r.checks);
            if (r.algebra)
                j["algebra"] = frobenius_to_json(*r.algebra);
            return j;
        }

        auto event_json(const TestSpace & t, Event e) -> Json
        {
            Json a = Json::array();
            for (std::size_t i = 0 ; i < t.outcomes.size() ; ++i)
                if (e & (Event(1) << i))
                    a.push_back(t.outcomes[i]);
            return a;
        }

        auto quadruple_json(const TestSpace & t, const std::array<Event, 4> & w) -> Json
        {
            return { { "A", event_json(t, w[0]) }, { "B", event_json(t, w[1]) }, { "C", event_json(t, w[2]) },
                { "D", event_json(t, w[3]) } };
        }

        auto need_frobenius(const Loaded & l, const string & what) -> const FrobeniusAlgebra &
        {
            if (! l.algebra || ! l.algebra->frobenius)
                throw InputError(what + " needs a Frobenius algebra input");
            return *l.algebra->frobenius;
        }

        struct Result
        {
            Json report;
            int code;
            string summary;
        };

        auto run_check(const Options & o) -> Result
        {
            auto l = load(o.input);
            Json j;
            j["command"] = "check";
            j["input"] = l.kind;
            if (l.algebra) {
                auto & a = *l.algebra;
                j["kind"] = kind_name(a.kind);
                AxiomReport r = a.frobenius ? check_frobenius(*a.frobenius) : check_monoid(a.monoid);
                if (r.ok && a.frobenius) {
                    auto laws = check_rotation_laws(*a.frobenius);
                    for (auto & c : laws.checked)
                        r.checked.push_back(c);
                    if (! laws.ok) {
                        r.ok = false;
                        r.violated_axiom = laws.violated_axiom;
                        r.witness = laws.witness;
                        r.detail = laws.detail;
                    }
                }
                j.update(axiom_json(r));
                return { j, r.ok ? 0 : 1, r.ok ? "all axioms hold" : "violated: " + r.violated_axiom + " " + r.detail };
            }
            if (l.space) {
                j["outcomes"] = l.space->outcomes.size();
                j["tests"] = l.space->tests.size();
                j["events"] = events(*l.space).size();
                j["ok"] = true;
                return { j, 0, "valid test space" };
            }
            j["ok"] = true;
            j["nondegenerate"] = nondegenerate_counts(*l.set);
            return { j, 0, "simplicial identities hold" };
        }

        auto run_nerve(const Options & o) -> Result
        {
            auto l = load(o.input);
            if (! l.algebra)
                throw InputError("nerve needs an algebra input");
            auto x = l.algebra->frobenius ? nerve_frobenius(*l.algebra->frobenius, o.max_dim)
                : nerve_monoid(l.algebra->monoid, o.max_dim);
            auto sj = sset_to_json(x);
            if (o.output.empty())
                return { sj, 0, "nerve with " + std::to_string(x.count(1)) + " edges" };
            write_file(o.output, sj);
            Json j;
            j["command"] = "nerve";
            j["output"] = o.output;
            j["trunc_dim"] = x.trunc_dim;
            j["nondegenerate"] = nondegenerate_counts(x);
            j["witnesses"] = x.eps_count();
            return { j, 0, "wrote " + o.output };
        }

        auto run_lift(const Options & o) -> Result
        {
            auto l = load(o.input);
            auto & x = sset_of(l, o.max_dim);
            auto shape = realize(o.shape, x.trunc_dim);
            auto r = check_extension(shape, x, o.unique ? LiftMode::Unique : LiftMode::Exists, std::size_t(std::max(o.cap, 0)));
            Json j;
            j["command"] = "lift";
            j["shape"] = format_shape(shape.name);
            j.update(lifting_json(r));
            return { j, r.holds ? 0 : 1, std::string(r.holds ? "extends" : "fails") + " on " + std::to_string(r.total_instances)
                + " instances" };
        }

        auto run_theorem(const Options & o) -> Result
        {
            auto l = load(o.input);
            TheoremReport r;
            if (o.theorem == "cancellation") {
                if (! l.algebra)
                    throw InputError("cancellation needs an algebra input");
                r = cancellation_and_horns(l.algebra->monoid);
            }
            else if (o.theorem == "eps-horns") {
                if (l.algebra && l.algebra->frobenius)
                    r = unique_eps_horns(*l.algebra->frobenius, o.max_dim);
                else {
                    auto & x = sset_of(l, o.max_dim);
                    r.theorem = "eps-horns";
                    r.checks = eps_horn_checks(x, LiftMode::Unique, x.trunc_dim);
                    r.holds = std::all_of(r.checks.begin(), r.checks.end(), [] (const Check & c) { return c.value; });
                }
            }
            else if (o.theorem == "two-sided-delta")
                r = two_sided_delta(sset_of(l, o.max_dim));
            else if (o.theorem == "comparisons")
                r = comparison_equivalences(sset_of(l, o.max_dim));
            else if (o.theorem == "face-unions")
                r = face_union_extensions(sset_of(l, o.max_dim));
            else if (o.theorem == "characterization") {
                auto c = characterize(sset_of(l, o.max_dim));
                r.theorem = "characterization";
                r.holds = c.accepted;
                r.checks = c.checks;
                if (! c.accepted)
                    r.checks.push_back({ "failed condition", false, c.failed_condition, c.witness });
                r.checks.push_back({ "same verdict without uniqueness in (ii)", c.accepted == c.accepted_without_uniqueness, "", {} });
            }
            else
                throw InputError("unknown theorem '" + o.theorem + "'");

            auto j = theorem_json(r);
            string summary = r.skipped ? "skipped: " + r.skip_reason : r.holds ? "holds" : "fails";
            return { j, r.holds || r.skipped ? 0 : 1, r.theorem + " " + summary };
        }

        auto run_characterize(const Options & o) -> Result
        {
            auto l = load(o.input);
            auto r = characterize(sset_of(l, o.max_dim));
            Json j;
            j["command"] = "characterize";
            j.update(characterize_json(r));
            if (r.algebra && ! o.output.empty())
                write_file(o.output, frobenius_to_json(*r.algebra));
            return { j, r.accepted ? 0 : 1, r.accepted ? "accepted" : "rejected at " + r.failed_condition };
        }

        auto run_extract(const Options & o) -> Result
        {
            auto l = load(o.input);
            auto e = mu_delta_of_sset(sset_of(l, o.max_dim));
            auto & n = e.edges;
            Json j;
            j["command"] = "extract";
            j["edges"] = n;
            j["mu"] = Json::array();
            for (auto & [b, a, c] : e.mu)
                j["mu"].push_back(Json::array({ n[b], n[a], n[c] }));
            j["alpha_hat"] = Json::array();
            for (auto & [b, a] : e.alpha)
                j["alpha_hat"].push_back(Json::array({ n[b], n[a] }));
            j["beta_hat"] = Json::array();
            for (auto & [a, b] : e.beta)
                j["beta_hat"].push_back(Json::array({ n[a], n[b] }));
            j["delta"] = Json::array();
            for (auto & [c, a, b] : e.delta)
                j["delta"].push_back(Json::array({ n[c], n[a], n[b] }));
            j["units"] = Json::array();
            for (int u : e.degenerate_edges)
                j["units"].push_back(n[u]);
            j["counits"] = Json::array();
            for (int u : e.eps_edges)
                j["counits"].push_back(n[u]);
            return { j, 0, std::to_string(e.mu.size()) + " mu triples, " + std::to_string(e.delta.size()) + " delta triples" };
        }

        auto run_roundtrip(const Options & o) -> Result
        {
            auto l = load(o.input);
            auto & f = need_frobenius(l, "roundtrip");
            auto r = characterize(nerve_frobenius(f, o.max_dim));
            optional<ElementMap> iso;
            if (r.algebra)
                iso = find_isomorphism(f, *r.algebra);
            Json j;
            j["command"] = "roundtrip";
            j["accepted"] = r.accepted;
            j["isomorphic"] = iso.has_value();
            if (! r.accepted) {
                j["failed_condition"] = r.failed_condition;
                j["witness"] = pairs_json(r.witness);
            }
            if (iso) {
                j["isomorphism"] = Json::object();
                for (std::size_t a = 0 ; a < iso->size() ; ++a)
                    j["isomorphism"][f.elements()[a]] = r.algebra->elements()[(*iso)[a]];
            }
            return { j, iso ? 0 : 1, string("isomorphic: ") + (iso ? "true" : "false") };
        }

        auto run_testspace(const Options & o) -> Result
        {
            auto l = load(o.input);
            if (! l.space)
                throw InputError("testspace needs a test space input");
            auto & t = *l.space;
            Json j;
            j["command"] = "testspace";
            j["outcomes"] = t.outcomes.size();
            j["tests"] = t.tests.size();
            j["events"] = events(t).size();
            if (! o.output.empty())
                write_file(o.output, sset_to_json(sset_of_testspace(t, o.max_dim)));

            if (! o.check_algebraicity && ! o.via_lifting)
                return { j, 0, std::to_string(t.tests.size()) + " tests, " + std::to_string(events(t).size()) + " events" };

            auto reading = o.literal ? AlgebraicityReading::Literal : AlgebraicityReading::LocalOrthocomplement;
            auto scan = check_algebraicity(t, reading);
            j["reading"] = o.literal ? "literal" : "local-orthocomplement";
            j["algebraic"] = scan.algebraic;
            j["quadruples"] = scan.quadruples;
            if (scan.witness)
                j["witness"] = quadruple_json(t, *scan.witness);
            bool verdict = scan.algebraic;
            if (o.via_lifting) {
                auto r = algebraicity_as_lifting(t);
                Json lj = lifting_json(r.lifting);
                lj["agrees_with_scan"] = r.by_lifting == r.by_scan;
                if (r.lifting_witness)
                    lj["witness"] = quadruple_json(t, *r.lifting_witness);
                j["lifting"] = lj;
                if (! o.literal)
                    verdict = r.by_lifting;
            }
            return { j, verdict ? 0 : 1, verdict ? "algebraic" : "not algebraic" };
        }

        auto run_catalog(const Options & o) -> Result
        {
            Json all = Json::object();
            for (auto & e : catalog_all())
                all[e.name] = algebra_to_json(e.input);
            for (auto & t : catalog_testspaces())
                all[t.name] = testspace_to_json(t.space);
            if (o.output.empty())
                return { all, 0, std::to_string(all.size()) + " examples" };

            std::filesystem::create_directories(o.output);
            Json j;
            j["command"] = "catalog";
            j["written"] = Json::array();
            for (auto & [name, doc] : all.items()) {
                auto path = (std::filesystem::path(o.output) / (name + ".json")).string();
                write_file(path, doc);
                j["written"].push_back(path);
            }
            return { j, 0, "wrote " + std::to_string(all.size()) + " files to " + o.output };
        }
    }

    auto relfrob_main(int argc, const char * const * argv, ostream & out, ostream & err) -> int
    {
        Options o;
        CLI::App app{ "Finite checks for Frobenius algebras in Rel and their epsilon-simplicial nerves" };
        app.require_subcommand(1);
        app.fallthrough();
        app.add_flag("--json", o.json_only, "Only print the JSON report");
        app.add_option("--max-dim", o.max_dim, "Truncation dimension for built eps-sets")->check(CLI::Range(2, 7));

        auto input = [&] (CLI::App * sub, const string & what) {
            sub->add_option("input", o.input, what)->required();
        };

        auto check = app.add_subcommand("check", "Check the axioms of an algebra, eps-set or test space");
        input(check, "algebra.json, sset.json or testspace.json");

        auto nerve = app.add_subcommand("nerve", "Build the nerve of an algebra");
        input(nerve, "algebra.json");
        nerve->add_option("-o,--output", o.output, "Write the eps-set here instead of stdout");

        auto lift = app.add_subcommand("lift", "Decide an extension property against a shape");
        lift->add_option("--shape", o.shape, "Shape grammar, like eps-horn:2:0")->required();
        lift->add_flag("--unique", o.unique, "Require unique extensions");
        lift->add_option("--cap", o.cap, "Failures to list");
        input(lift, "sset.json, algebra.json or testspace.json");

        auto theorem = app.add_subcommand("theorem", "Evaluate one of the theorem suites");
        theorem->add_option("name", o.theorem, "Suite")->required()->check(CLI::IsMember(
                    { "cancellation", "eps-horns", "two-sided-delta", "comparisons", "face-unions", "characterization" }));
        input(theorem, "Input file");

        auto characterize_cmd = app.add_subcommand("characterize", "Decide whether an eps-set is the nerve of a Frobenius algebra");
        input(characterize_cmd, "sset.json");
        characterize_cmd->add_option("-o,--output", o.output, "Write the recovered algebra here");

        auto extract = app.add_subcommand("extract", "Read mu, alpha, beta and delta off an eps-set");
        input(extract, "sset.json");

        auto roundtrip = app.add_subcommand("roundtrip", "Characterize the nerve of an algebra and compare");
        input(roundtrip, "algebra.json");

        auto testspace = app.add_subcommand("testspace", "Inspect a test space");
        input(testspace, "testspace.json");
        testspace->add_flag("--check-algebraicity", o.check_algebraicity, "Scan for algebraicity");
        testspace->add_flag("--via-lifting", o.via_lifting, "Also decide algebraicity as a lifting property");
        testspace->add_flag("--literal", o.literal, "Only require A u D to be a test");
        testspace->add_option("-o,--output", o.output, "Write the eps-set of the test space here");

        auto catalog = app.add_subcommand("catalog", "Print or write the bundled examples");
        catalog->add_option("-o,--output", o.output, "Directory to write one file per example");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        try {
            Result r;
            if (check->parsed())
                r = run_check(o);
            else if (nerve->parsed())
                r = run_nerve(o);
            else if (lift->parsed())
                r = run_lift(o);
            else if (theorem->parsed())
                r = run_theorem(o);
            else if (characterize_cmd->parsed())
                r = run_characterize(o);
            else if (extract->parsed())
                r = run_extract(o);
            else if (roundtrip->parsed())
                r = run_roundtrip(o);
            else if (testspace->parsed())
                r = run_testspace(o);
            else
                r = run_catalog(o);
            out << r.report.dump(2) << '\n';
            if (! o.json_only)
                err << r.summary << '\n';
            return r.code;
        }
        catch (const InputError & e) {
            out << Json{ { "error", e.what() } }.dump(2) << '\n';
            err << "input error: " << e.what() << '\n';
            return 2;
        }
    }
}
