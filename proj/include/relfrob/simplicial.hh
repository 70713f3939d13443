#ifndef RELFROB_SIMPLICIAL_HH
#define RELFROB_SIMPLICIAL_HH 1

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relfrob
{
    /// A presheaf over Delta_epsilon truncated at trunc_dim. Cells of each
    /// dimension are dense ids 0..count(d)-1 with display names.
    struct EpsSimplicialSet
    {
        int trunc_dim = 2;
        std::vector<std::vector<std::string>> cell_names;          ///< [d][cell]
        std::vector<std::vector<std::vector<int>>> faces;          ///< [d][i][cell], d >= 1, 0 <= i <= d
        std::vector<std::vector<std::vector<int>>> degeneracies;   ///< [d][i][cell], d < trunc_dim, 0 <= i <= d
        std::vector<std::string> eps_names;
        std::vector<int> eps_edge;                                 ///< witness -> 1-cell

        auto count(int d) const -> int { return int(cell_names[d].size()); }
        auto eps_count() const -> int { return int(eps_names.size()); }
        auto face(int d, int i, int c) const -> int { return faces[d][i][c]; }
        auto degen(int d, int i, int c) const -> int { return degeneracies[d][i][c]; }

        /// Throws InputError if no such cell.
        auto cell_index(int d, const std::string & name) const -> int;
        auto eps_index(const std::string & name) const -> int;
    };

    /// Correctly sized but empty tables for truncation K.
    auto empty_sset(int trunc_dim) -> EpsSimplicialSet;

    struct ValidationReport
    {
        bool ok = true;
        std::string violation;
    };

    /// Simplicial identities on every stored dimension. Table shape problems
    /// (wrong sizes, dangling ids) throw InputError instead.
    auto validate(const EpsSimplicialSet & x) -> ValidationReport;

    /// Components per dimension plus the witness component.
    struct SimplicialMap
    {
        std::vector<std::vector<int>> cells;
        std::vector<int> eps;

        auto operator== (const SimplicialMap &) const -> bool = default;
        auto operator<=> (const SimplicialMap &) const = default;
    };

    auto identity_map(const EpsSimplicialSet & x) -> SimplicialMap;

    /// g after f.
    auto compose(const SimplicialMap & g, const SimplicialMap & f) -> SimplicialMap;

    auto is_natural(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & f) -> bool;
    auto is_injective(const SimplicialMap & f) -> bool;
    auto is_bijective(const SimplicialMap & f, const EpsSimplicialSet & target) -> bool;

    /// Eilenberg-Zilber data and reverse face indices, built once per set.
    class SSetIndex
    {
        public:
            /// x = s_{ops[k-1]} ... s_{ops[0]} root, with root of dimension root_dim.
            struct Decomposition
            {
                int root_dim;
                int root;
                std::vector<int> ops;
            };

        private:
            EpsSimplicialSet _set;
            std::vector<std::vector<Decomposition>> _decomposition;
            std::vector<std::vector<int>> _nondegenerate;
            std::vector<std::vector<std::vector<std::vector<int>>>> _with_face;
            std::vector<std::vector<int>> _witnesses_on;

        public:
            explicit SSetIndex(EpsSimplicialSet x);

            auto set() const -> const EpsSimplicialSet & { return _set; }
            auto decomposition(int d, int c) const -> const Decomposition & { return _decomposition[d][c]; }
            auto nondegenerate(int d, int c) const -> bool { return _decomposition[d][c].ops.empty(); }
            auto nondegenerate_cells(int d) const -> const std::vector<int> & { return _nondegenerate[d]; }

            /// d-cells v with d_i v = t.
            auto with_face(int d, int i, int t) const -> const std::vector<int> & { return _with_face[d][i][t]; }
            auto witnesses_on(int edge) const -> const std::vector<int> & { return _witnesses_on[edge]; }

            /// Applies s_{ops[0]} first, starting from a cell of dimension dim.
            auto apply_degeneracies(const std::vector<int> & ops, int dim, int cell) const -> int;

            /// Inverse of apply_degeneracies: d_{ops[0]} ... d_{ops[k-1]} applied to a
            /// cell of dimension dim.
            auto strip_degeneracies(const std::vector<int> & ops, int dim, int cell) const -> int;

            auto nondegenerate_count(int d) const -> int { return int(_nondegenerate[d].size()); }
    };

    /// A sub-presheaf of a fixed parent, as membership masks.
    struct Subobject
    {
        std::shared_ptr<const EpsSimplicialSet> parent;
        std::vector<std::vector<char>> cells;
        std::vector<char> eps;

        auto contains(int d, int c) const -> bool { return cells[d][c]; }
        auto operator== (const Subobject & other) const -> bool
        {
            return parent == other.parent && cells == other.cells && eps == other.eps;
        }
    };

    auto empty_subobject(std::shared_ptr<const EpsSimplicialSet> parent) -> Subobject;
    auto full_subobject(std::shared_ptr<const EpsSimplicialSet> parent) -> Subobject;

    /// Smallest subobject containing the given (dimension, cell) pairs and
    /// witnesses. Witnesses on included edges are not added implicitly.
    auto generate_subobject(std::shared_ptr<const EpsSimplicialSet> parent,
            const std::vector<std::pair<int, int>> & cells, const std::vector<int> & eps) -> Subobject;

    auto is_closed(const Subobject & s) -> bool;

    /// Both throw std::invalid_argument on a parent mismatch.
    auto subobject_union(const Subobject & a, const Subobject & b) -> Subobject;
    auto subobject_intersection(const Subobject & a, const Subobject & b) -> Subobject;

    struct Materialized
    {
        EpsSimplicialSet set;
        SimplicialMap inclusion;
    };

    /// The subobject as a standalone set, with its inclusion into the parent.
    auto materialize(const Subobject & s) -> Materialized;

    struct Pushout
    {
        EpsSimplicialSet object;
        SimplicialMap from_c;    ///< j : C -> P
        SimplicialMap from_b;    ///< g : B -> P
    };

    /// Pushout of an inclusion i : A -> B along f : A -> C, computed levelwise:
    /// P_d = C_d plus the cells of B_d outside the image of i.
    auto pushout(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & i,
            const EpsSimplicialSet & c, const SimplicialMap & f) -> Pushout;

    auto truncate(const EpsSimplicialSet & x, int k) -> EpsSimplicialSet;

    /// Keeps every stored dimension of x and adds dimensions trunc_dim+1..k, where
    /// an n-cell is an (n+1)-tuple of (n-1)-cells with d_i x_j = d_{j-1} x_i
    /// for i < j. New cells are named "<x0|x1|...>".
    auto coskeletal_completion(const EpsSimplicialSet & x, int k) -> EpsSimplicialSet;

    /// Per-dimension counts of non-degenerate cells.
    auto nondegenerate_counts(const EpsSimplicialSet & x) -> std::vector<int>;
}

#endif
