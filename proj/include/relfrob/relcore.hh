#ifndef RELFROB_RELCORE_HH
#define RELFROB_RELCORE_HH 1

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relfrob
{
    using Triple = std::array<int, 3>;
    using NamedTriple = std::array<std::string, 3>;

    /// A subset of X x X x X over a carrier of dense ids 0..n-1. Triples are
    /// kept sorted and unique; a dense membership table backs contains().
    class TernaryRelation
    {
        private:
            int _n = 0;
            std::vector<Triple> _triples;
            std::vector<char> _dense;
            std::vector<std::vector<int>> _outputs;

        public:
            TernaryRelation() = default;
            TernaryRelation(int n, std::vector<Triple> triples);

            auto carrier_size() const -> int { return _n; }
            auto contains(int a, int b, int c) const -> bool
            {
                return _dense[(a * _n + b) * _n + c];
            }
            auto triples() const -> const std::vector<Triple> & { return _triples; }
            auto size() const -> std::size_t { return _triples.size(); }

            /// All c with (a, b, c) in the relation, ascending.
            auto outputs(int a, int b) const -> std::span<const int>
            {
                return _outputs[a * _n + b];
            }

            auto operator== (const TernaryRelation & other) const -> bool
            {
                return _n == other._n && _triples == other._triples;
            }
    };

    /// A monoid in Rel: mu : X x X -/-> X, with unit elements eta.
    struct RelMonoid
    {
        std::vector<std::string> elements;
        TernaryRelation mu;
        std::vector<int> eta;

        auto size() const -> int { return int(elements.size()); }
        auto is_unit(int a) const -> bool;
        auto index_of(const std::string & name) const -> int;
    };

    /// A Frobenius algebra in Rel. delta holds (a, b, c) for delta : a -/-> (b, c).
    struct FrobeniusAlgebra
    {
        RelMonoid monoid;
        TernaryRelation delta;
        std::vector<int> epsilon;

        auto size() const -> int { return monoid.size(); }
        auto is_counit(int a) const -> bool;
        auto elements() const -> const std::vector<std::string> & { return monoid.elements; }
    };

    /// Outcome of an axiom check. Axioms are checked in a fixed order and the
    /// first violation stops the scan; witness holds element names.
    struct AxiomReport
    {
        bool ok = true;
        std::string violated_axiom;
        std::vector<std::string> witness;
        std::string detail;
        std::vector<std::pair<std::string, bool>> checked;
    };

    auto make_monoid(std::vector<std::string> elements, const std::vector<NamedTriple> & mu,
            const std::vector<std::string> & eta) -> RelMonoid;

    auto make_frobenius(RelMonoid monoid, const std::vector<NamedTriple> & delta,
            const std::vector<std::string> & epsilon) -> FrobeniusAlgebra;

    auto check_monoid(const RelMonoid & m) -> AxiomReport;

    /// Checks unit, associativity, counit, coassociativity and the Frobenius
    /// identity. Associativity is implied by the others, but it is still
    /// scanned so an inconsistency shows up as a report rather than silently.
    auto check_frobenius(const FrobeniusAlgebra & f) -> AxiomReport;

    /// Only the Frobenius identity (mu,id)(id,delta) = delta mu = (id,mu)(delta,id),
    /// compared as 4-ary relations.
    auto check_frobenius_identity(const RelMonoid & m, const TernaryRelation & delta) -> AxiomReport;

    struct SourceTarget
    {
        int source;
        int target;
    };

    /// s(a) is the unit r with mu:(a, r) -> a, t(a) the unit r with mu:(r, a) -> a.
    auto source_target(const RelMonoid & m, int a) -> SourceTarget;

    struct AlphaBeta
    {
        std::vector<int> alpha_hat;
        std::vector<int> beta_hat;
    };

    /// alpha = epsilon . mu read as a subset of X x X; alpha_hat(x) is the unique
    /// y with (x, y) in alpha, beta_hat(y) the unique x. Throws InputError if
    /// alpha is not the graph of a bijection.
    auto alpha_beta(const FrobeniusAlgebra & f) -> AlphaBeta;

    /// Derived laws: alpha_hat/beta_hat mutually inverse, the unit/counit
    /// pairing, and the two descriptions of delta through mu.
    auto check_rotation_laws(const FrobeniusAlgebra & f) -> AxiomReport;

    struct GroupoidData
    {
        struct Morphism
        {
            std::string id;
            std::string src;
            std::string dst;
        };

        std::vector<std::string> objects;
        std::vector<Morphism> morphisms;
        std::vector<NamedTriple> comp;   ///< (f, g, h) means f . g = h
        std::vector<std::pair<std::string, std::string>> inv;
    };

    auto from_groupoid(const GroupoidData & g) -> FrobeniusAlgebra;

    struct EffectAlgebraData
    {
        std::vector<std::string> elements;
        std::vector<NamedTriple> plus;
        std::string zero;
        std::string one;
    };

    auto from_effect_algebra(const EffectAlgebraData & e) -> FrobeniusAlgebra;

    struct EffectAlgebroidData
    {
        struct Segment
        {
            std::string id;
            std::string src;
            std::string dst;
        };

        std::vector<std::string> points;
        std::vector<Segment> segments;
        std::vector<NamedTriple> cup;    ///< (a, b, c): a in Hom(x,y), b in Hom(y,z), a cup b = c
        std::vector<std::pair<std::string, std::string>> perp;
        std::map<std::string, std::string> zeros;
        std::map<std::string, std::string> ones;
    };

    /// Enforces: endpoint-compatible single-valued cup, associativity as
    /// relations, 0_x two-sided units, the perp law and the 1_x absorption law.
    auto from_effect_algebroid(const EffectAlgebroidData & e) -> FrobeniusAlgebra;

    using ElementMap = std::vector<int>;

    auto is_monoid_hom(const RelMonoid & a, const RelMonoid & b, const ElementMap & h) -> bool;
    auto is_frobenius_hom(const FrobeniusAlgebra & a, const FrobeniusAlgebra & b, const ElementMap & h) -> bool;

    /// Every homomorphism, lexicographic in (h(0), h(1), ...).
    auto enumerate_monoid_homs(const RelMonoid & a, const RelMonoid & b) -> std::vector<ElementMap>;
    auto enumerate_frobenius_homs(const FrobeniusAlgebra & a, const FrobeniusAlgebra & b) -> std::vector<ElementMap>;

    auto find_monoid_isomorphism(const RelMonoid & a, const RelMonoid & b) -> std::optional<ElementMap>;
    auto find_isomorphism(const FrobeniusAlgebra & a, const FrobeniusAlgebra & b) -> std::optional<ElementMap>;

    /// Witness (a1, a2, b, c) with mu:(a1,b)->c, mu:(a2,b)->c, a1 != a2.
    auto first_coordinate_cancellation_failure(const RelMonoid & m) -> std::optional<std::array<int, 4>>;
    /// Witness (a, b1, b2, c) with mu:(a,b1)->c, mu:(a,b2)->c, b1 != b2.
    auto second_coordinate_cancellation_failure(const RelMonoid & m) -> std::optional<std::array<int, 4>>;
    /// Witness (a, b, c1, c2) with two distinct products.
    auto partiality_failure(const RelMonoid & m) -> std::optional<std::array<int, 4>>;

    auto names_of(const std::vector<std::string> & elements, std::span<const int> ids) -> std::vector<std::string>;
}

#endif
