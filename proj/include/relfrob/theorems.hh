#ifndef RELFROB_THEOREMS_HH
#define RELFROB_THEOREMS_HH 1

#include <relfrob/lifting.hh>
#include <relfrob/relcore.hh>
#include <relfrob/simplicial.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relfrob
{
    /// One evaluated predicate. Witness pairs name cells or elements.
    struct Check
    {
        std::string name;
        bool value = true;
        std::string detail;
        std::vector<std::pair<std::string, std::string>> witness;
    };

    struct TheoremReport
    {
        std::string theorem;
        bool holds = true;
        bool skipped = false;
        std::string skip_reason;
        std::vector<Check> checks;

        /// Throws std::out_of_range for an unknown name.
        auto value(const std::string & check_name) const -> bool;
    };

    /// Turns a lifting report into a check named after the shape.
    auto lifting_check(const std::string & name, const LiftingReport & r) -> Check;

    /// Both sides of: first-coordinate cancellation iff horn:3:0 lifts,
    /// second-coordinate cancellation iff horn:3:3 lifts, partiality iff
    /// horn:3:1 lifts iff horn:3:2 lifts. holds means every pair agrees.
    auto cancellation_and_horns(const RelMonoid & m) -> TheoremReport;

    /// Unique extension along eps-horn:n:0 and eps-horn:n:n for n = 1..max_n.
    auto eps_horn_checks(const EpsSimplicialSet & x, LiftMode mode, int max_n) -> std::vector<Check>;

    auto unique_eps_horns(const FrobeniusAlgebra & f, int trunc_dim = 4) -> TheoremReport;

    /// Relations read off an eps-set, over its edges.
    struct ExtractedRelations
    {
        std::vector<std::string> edges;
        std::vector<Triple> mu;                         ///< (b, a, c) for mu:(b, a) -> c
        std::vector<std::pair<int, int>> alpha;         ///< (b, a) for alpha_hat : b -> a
        std::vector<std::pair<int, int>> beta;          ///< (a, b) for beta_hat : a -> b
        std::vector<Triple> delta;                      ///< (c, a, b) for delta : c -> (a, b)
        std::vector<int> eps_edges;
        std::vector<int> degenerate_edges;
    };

    /// mu:(b, a) -> c from a 2-cell with <01> = a, <12> = b, <02> = c.
    /// alpha_hat : b -> a and beta_hat : a -> b from a 2-cell whose <02> carries
    /// a witness, with <01> = a and <12> = b.
    /// delta : c -> (a, b) from a 3-cell whose <03> carries a witness, with
    /// <02> = a, <12> = c and <13> = b. On a nerve this is the algebra's delta,
    /// which fixes the orientation.
    auto mu_delta_of_sset(const EpsSimplicialSet & x) -> ExtractedRelations;

    /// Skipped unless x extends along every eps-horn up to its truncation.
    /// Otherwise compares, for every edge triple (a, b, c), "some b' with
    /// alpha_hat : b -> b' and a 2-cell <01> = b', <12> = c, <02> = a" against
    /// "some a' with beta_hat : a -> a' and a 2-cell <01> = c, <12> = a', <02> = b".
    auto two_sided_delta(const EpsSimplicialSet & x) -> TheoremReport;

    /// The shapes of the I and J comparisons inside Sigma^4 or Delta^3.
    struct ComparisonShapes
    {
        std::vector<std::pair<std::string, std::string>> i_shapes;     ///< (name, grammar)
        std::vector<std::pair<std::string, std::string>> j_shapes;
        std::pair<std::string, std::string> j2_variant;
    };

    auto comparison_shapes() -> ComparisonShapes;

    /// I_k and J_k predicates, each the eps-horn extension property up to
    /// dimension 4 together with the k-th extra inclusion. holds means all I_k
    /// agree and all J_k agree.
    auto comparison_equivalences(const EpsSimplicialSet & x) -> TheoremReport;

    /// Extension along every union of faces of Sigma^n with exactly one of
    /// faces 0 and n, for n <= 4. Skipped unless eps-horns extend.
    auto face_union_extensions(const EpsSimplicialSet & x) -> TheoremReport;

    struct CharacterizeReport
    {
        bool accepted = false;
        bool accepted_without_uniqueness = false;
        std::optional<FrobeniusAlgebra> algebra;
        std::string failed_condition;
        std::vector<std::pair<std::string, std::string>> witness;
        std::vector<Check> checks;
    };

    /// Conditions, in order: (i) unique eps-horn extensions for n = 1..K;
    /// (ii) unique extensions along boundary:n for n = 3..K and agreement of x
    /// with the completion of its 2-truncation; (iii) extension along
    /// faces-sigma:4:1,3. On acceptance the algebra has carrier X_1, units the
    /// degenerate edges, counits the edges carrying witnesses, and mu, delta
    /// from mu_delta_of_sset; its axioms and x = N(F) are asserted. The variant
    /// with (ii) reduced to existence is reported alongside. Needs K >= 4.
    auto characterize(const EpsSimplicialSet & x) -> CharacterizeReport;

    /// The algebra read off x as in characterize, without checking anything.
    auto algebra_of_sset(const EpsSimplicialSet & x) -> FrobeniusAlgebra;

    /// Whether x agrees with the completion of its own 2-truncation through
    /// the canonical comparison map.
    auto agrees_with_completion(const EpsSimplicialSet & x) -> bool;
}

#endif
