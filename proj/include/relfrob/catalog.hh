#ifndef RELFROB_CATALOG_HH
#define RELFROB_CATALOG_HH 1

#include <relfrob/json_io.hh>
#include <relfrob/relcore.hh>
#include <relfrob/simplicial.hh>
#include <relfrob/testspace.hh>

#include <string>
#include <vector>

namespace relfrob
{
    struct CatalogEntry
    {
        std::string name;    ///< file stem, like "bool2"
        AlgebraInput input;
    };

    /// one-element, Bool2, Bool4, Bool8, MV3, MV4, diamond, Z/2, Z/3, the
    /// discrete and codiscrete groupoids on two objects, and the two-point
    /// abstract circle. Bool4 and the diamond are isomorphic presentations.
    auto catalog_frobenius() -> std::vector<CatalogEntry>;

    /// M2 = {e, a} with a.a = {e, a}.
    auto m2_monoid() -> RelMonoid;

    /// The Frobenius catalog followed by M2.
    auto catalog_all() -> std::vector<CatalogEntry>;

    auto catalog_entry(const std::string & name) -> CatalogEntry;

    struct NamedTestSpace
    {
        std::string name;
        TestSpace space;
    };

    /// Triangle (all 2-subsets of {a, b, c}), a single test, and two disjoint tests.
    auto catalog_testspaces() -> std::vector<NamedTestSpace>;

    /// Every relational monoid on 1..max_size elements up to isomorphism,
    /// elements named e, f, g (units first).
    auto enumerate_small_monoids(int max_size) -> std::vector<RelMonoid>;

    /// Removes a non-degenerate 2-cell from the 2-truncation of x and completes
    /// back to x's truncation. Throws std::invalid_argument on a degenerate cell.
    auto delete_two_cell(const EpsSimplicialSet & x, int cell) -> EpsSimplicialSet;

    /// Adds a second witness, named with a trailing "'", on the edge of witness e.
    auto duplicate_witness(const EpsSimplicialSet & x, int e) -> EpsSimplicialSet;

    auto drop_witnesses(const EpsSimplicialSet & x) -> EpsSimplicialSet;

    /// Adds a copy of a non-degenerate 3-cell to the 3-truncation of x and
    /// completes back to x's truncation.
    auto duplicate_three_cell(const EpsSimplicialSet & x, int cell) -> EpsSimplicialSet;

    struct NamedSSet
    {
        std::string name;
        EpsSimplicialSet set;
    };

    /// Perturbed eps-sets at truncation 4: deleted 2-cells of N(Bool2) and
    /// N(diamond), a duplicated witness, a witness-free nerve, a duplicated
    /// 3-cell, and test-space eps-sets.
    auto perturbed_controls() -> std::vector<NamedSSet>;
}

#endif
