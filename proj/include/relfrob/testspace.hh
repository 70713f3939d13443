#ifndef RELFROB_TESTSPACE_HH
#define RELFROB_TESTSPACE_HH 1

#include <relfrob/lifting.hh>
#include <relfrob/shapes.hh>
#include <relfrob/simplicial.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relfrob
{
    using Event = std::uint32_t;

    /// Outcomes are bits of an Event mask; tests are kept sorted and unique.
    struct TestSpace
    {
        std::vector<std::string> outcomes;
        std::vector<Event> tests;
    };

    /// Throws InputError for unknown or duplicate outcomes, an empty test in a
    /// space with outcomes, tests not covering the outcomes, or more than 20
    /// outcomes.
    auto make_testspace(std::vector<std::string> outcomes, const std::vector<std::vector<std::string>> & tests) -> TestSpace;

    /// Every subset of every test, ascending as masks.
    auto events(const TestSpace & t) -> std::vector<Event>;

    auto format_event(const TestSpace & t, Event e) -> std::string;

    enum class AlgebraicityReading
    {
        /// A u D must be a test with A and D disjoint, so D is a local
        /// orthocomplement of A. This is what the lifting shape expresses.
        LocalOrthocomplement,
        /// Only A u D must be a test.
        Literal
    };

    struct AlgebraicityReport
    {
        bool algebraic = true;
        std::optional<std::array<Event, 4>> witness;   ///< (A, B, C, D)
        long quadruples = 0;
    };

    /// Scans every (A, B, C, D) with A u B, B u C, C u D tests (each union
    /// disjoint) by walking tests: A in T1, B = T1 - A, T2 containing B,
    /// C = T2 - B, T3 containing C, D = T3 - C.
    auto check_algebraicity(const TestSpace & t,
            AlgebraicityReading reading = AlgebraicityReading::LocalOrthocomplement) -> AlgebraicityReport;

    /// n-cells are n-tuples of pairwise disjoint events whose union lies in a
    /// test (all-empty tuples always exist). d_0 drops the first entry, d_n the
    /// last, and d_i merges entries i and i+1 (1-based) otherwise; s_i inserts
    /// an empty event at position i (0-based). One witness per test, on the
    /// 1-cell (T). Edges are named like events, higher cells as tuples.
    auto sset_of_testspace(const TestSpace & t, int trunc_dim = 2) -> EpsSimplicialSet;

    /// Vertices x < z < o < y < w. The domain has 2-cells xoy, zoy, zow with
    /// marked edges xy, zy, zw; the codomain adds xow and the marked edge xw.
    /// Under a map, xo = A, oy = B, zo = C and ow = D.
    auto algebraicity_shape(int trunc_dim = 2) -> RealizedShape;

    struct AlgebraicityLiftingReport
    {
        bool by_lifting = true;
        bool by_scan = true;
        bool by_literal_scan = true;
        LiftingReport lifting;
        AlgebraicityReport scan;
        std::optional<std::array<Event, 4>> lifting_witness;
    };

    auto algebraicity_as_lifting(const TestSpace & t) -> AlgebraicityLiftingReport;

    /// Test spaces with 1..max_outcomes outcomes and 1..max_tests nonempty tests
    /// covering them, one per isomorphism class, outcomes named a, b, c, ...
    /// Ordered by outcome count, then test count, then canonical form.
    auto enumerate_test_spaces(int max_outcomes, int max_tests) -> std::vector<TestSpace>;
}

#endif
