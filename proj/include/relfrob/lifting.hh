#ifndef RELFROB_LIFTING_HH
#define RELFROB_LIFTING_HH 1

#include <relfrob/shapes.hh>
#include <relfrob/simplicial.hh>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace relfrob
{
    /// Backtracking search for simplicial maps source -> target. Variables are
    /// the non-degenerate source cells and the source witnesses; degenerate
    /// cells follow from their Eilenberg-Zilber decompositions. Assigning a
    /// cell forces the roots of its faces, and an unassigned cell draws its
    /// candidates from the target cells whose known faces match.
    class MapSearch
    {
        private:
            struct Variable
            {
                int dim;    ///< -1 for a witness
                int cell;
            };

            const SSetIndex & _source;
            const SSetIndex & _target;
            bool _isomorphisms;

            std::vector<Variable> _vars;
            std::vector<std::vector<int>> _var_of_cell;
            int _first_eps_var = 0;

            std::vector<int> _value;
            std::vector<int> _trail;
            std::vector<std::vector<char>> _used;
            std::vector<char> _used_eps;
            bool _consistent = true;

            auto assign(int var, int value) -> bool;
            auto force_edge(int source_edge, int target_edge) -> bool;
            auto candidates(int var, std::vector<int> & out) const -> void;
            auto undo_to(std::size_t mark) -> void;
            auto build_map() const -> SimplicialMap;
            auto search(const std::function<bool (const SimplicialMap &)> & callback) -> bool;

        public:
            /// With isomorphisms set, non-degenerate cells go to distinct
            /// non-degenerate cells and witnesses to distinct witnesses.
            MapSearch(const SSetIndex & source, const SSetIndex & target, bool isomorphisms = false);

            /// Pins the image of a source cell (any cell; degenerate ones pin their
            /// root) or of a witness. Returns false once the pins are inconsistent.
            auto fix(int dim, int cell, int value) -> bool;
            auto fix_eps(int witness, int value) -> bool;

            /// Calls back with each map in a deterministic order until the callback
            /// returns false. Returns the number of maps reported.
            auto run(const std::function<bool (const SimplicialMap &)> & callback) -> long;
    };

    auto enumerate_maps(const EpsSimplicialSet & a, const EpsSimplicialSet & x) -> std::vector<SimplicialMap>;
    auto count_maps(const EpsSimplicialSet & a, const EpsSimplicialSet & x) -> long;

    auto find_sset_isomorphism(const EpsSimplicialSet & a, const EpsSimplicialSet & b) -> std::optional<SimplicialMap>;

    enum class LiftMode
    {
        Exists,
        Unique
    };

    struct LiftingFailure
    {
        std::vector<std::pair<std::string, std::string>> assignment;   ///< non-degenerate A-cells and witnesses
        int extensions;                                                 ///< 0, or 2 meaning "at least two"
    };

    struct LiftingReport
    {
        bool holds = true;
        LiftMode mode = LiftMode::Exists;
        long total_instances = 0;
        long failing_instances = 0;
        long without_extension = 0;
        long with_several = 0;
        std::vector<LiftingFailure> failures;
    };

    /// For every f : A -> X, counts the g : B -> X with g m = f, up to 1 in
    /// exists mode and up to 2 in unique mode. Each extension found is re-checked
    /// for naturality and for restricting to f.
    auto check_extension(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & m,
            const EpsSimplicialSet & x, LiftMode mode, std::size_t failure_cap = 10) -> LiftingReport;

    auto check_extension(const RealizedShape & shape, const EpsSimplicialSet & x, LiftMode mode,
            std::size_t failure_cap = 10) -> LiftingReport;

    /// Renders a map by its non-degenerate source cells and witnesses.
    auto describe_map(const SSetIndex & source, const EpsSimplicialSet & target, const SimplicialMap & f)
        -> std::vector<std::pair<std::string, std::string>>;
}

#endif
