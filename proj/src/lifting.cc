#include <relfrob/lifting.hh>

#include <stdexcept>

using std::function;
using std::logic_error;
using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace relfrob
{
    MapSearch::MapSearch(const SSetIndex & source, const SSetIndex & target, bool isomorphisms) :
        _source(source),
        _target(target),
        _isomorphisms(isomorphisms)
    {
        auto & s = source.set();
        auto & t = target.set();
        if (s.trunc_dim != t.trunc_dim)
            throw std::invalid_argument("map search between sets of different truncation");
        if (s.trunc_dim > 7)
            throw std::invalid_argument("map search supports truncation up to 7");

        _var_of_cell.resize(s.trunc_dim + 1);
        for (int d = 0 ; d <= s.trunc_dim ; ++d) {
            _var_of_cell[d].assign(s.count(d), -1);
            for (int c : source.nondegenerate_cells(d)) {
                _var_of_cell[d][c] = int(_vars.size());
                _vars.push_back({ d, c });
            }
        }
        _first_eps_var = int(_vars.size());
        for (int e = 0 ; e < s.eps_count() ; ++e)
            _vars.push_back({ -1, e });

        _value.assign(_vars.size(), -1);
        if (_isomorphisms) {
            for (int d = 0 ; d <= t.trunc_dim ; ++d)
                _used.emplace_back(t.count(d), 0);
            _used_eps.assign(t.eps_count(), 0);
        }
    }

    auto MapSearch::assign(int var, int value) -> bool
    {
        if (_value[var] != -1)
            return _value[var] == value;

        auto [dim, cell] = _vars[var];
        if (_isomorphisms) {
            if (dim >= 0) {
                if (_used[dim][value] || ! _target.nondegenerate(dim, value))
                    return false;
                _used[dim][value] = 1;
            }
            else {
                if (_used_eps[value])
                    return false;
                _used_eps[value] = 1;
            }
        }
        _value[var] = value;
        _trail.push_back(var);

        if (dim < 0)
            return force_edge(_source.set().eps_edge[cell], _target.set().eps_edge[value]);

        for (int i = 0 ; dim >= 1 && i <= dim ; ++i) {
            auto & dec = _source.decomposition(dim - 1, _source.set().face(dim, i, cell));
            int t = _target.set().face(dim, i, value);
            int root_value = _target.strip_degeneracies(dec.ops, dim - 1, t);
            if (_target.apply_degeneracies(dec.ops, dec.root_dim, root_value) != t)
                return false;
            if (! assign(_var_of_cell[dec.root_dim][dec.root], root_value))
                return false;
        }
        return true;
    }

    auto MapSearch::force_edge(int source_edge, int target_edge) -> bool
    {
        auto & dec = _source.decomposition(1, source_edge);
        int root_value = _target.strip_degeneracies(dec.ops, 1, target_edge);
        if (_target.apply_degeneracies(dec.ops, dec.root_dim, root_value) != target_edge)
            return false;
        return assign(_var_of_cell[dec.root_dim][dec.root], root_value);
    }

    auto MapSearch::candidates(int var, vector<int> & out) const -> void
    {
        out.clear();
        auto [dim, cell] = _vars[var];
        auto & t = _target.set();

        if (dim < 0) {
            auto & dec = _source.decomposition(1, _source.set().eps_edge[cell]);
            int root_value = _value[_var_of_cell[dec.root_dim][dec.root]];
            if (root_value != -1) {
                for (int w : _target.witnesses_on(_target.apply_degeneracies(dec.ops, dec.root_dim, root_value)))
                    if (! _isomorphisms || ! _used_eps[w])
                        out.push_back(w);
            }
            else
                for (int w = 0 ; w < t.eps_count() ; ++w)
                    if (! _isomorphisms || ! _used_eps[w])
                        out.push_back(w);
            return;
        }

        int known[8];
        int best = -1;
        for (int i = 0 ; dim >= 1 && i <= dim ; ++i) {
            auto & dec = _source.decomposition(dim - 1, _source.set().face(dim, i, cell));
            int root_value = _value[_var_of_cell[dec.root_dim][dec.root]];
            known[i] = root_value == -1 ? -1 : _target.apply_degeneracies(dec.ops, dec.root_dim, root_value);
            if (known[i] != -1 && (best == -1
                        || _target.with_face(dim, i, known[i]).size() < _target.with_face(dim, best, known[best]).size()))
                best = i;
        }

        auto admissible = [&] (int v) {
            for (int i = 0 ; dim >= 1 && i <= dim ; ++i)
                if (known[i] != -1 && t.face(dim, i, v) != known[i])
                    return false;
            if (_isomorphisms && (_used[dim][v] || ! _target.nondegenerate(dim, v)))
                return false;
            return true;
        };

        if (best == -1) {
            for (int v = 0 ; v < t.count(dim) ; ++v)
                if (admissible(v))
                    out.push_back(v);
        }
        else
            for (int v : _target.with_face(dim, best, known[best]))
                if (admissible(v))
                    out.push_back(v);
    }

    auto MapSearch::undo_to(std::size_t mark) -> void
    {
        while (_trail.size() > mark) {
            int var = _trail.back();
            _trail.pop_back();
            if (_isomorphisms) {
                auto [dim, cell] = _vars[var];
                if (dim >= 0)
                    _used[dim][_value[var]] = 0;
                else
                    _used_eps[_value[var]] = 0;
            }
            _value[var] = -1;
        }
    }

    auto MapSearch::fix(int dim, int cell, int value) -> bool
    {
        if (! _consistent)
            return false;
        auto & dec = _source.decomposition(dim, cell);
        int root_value = _target.strip_degeneracies(dec.ops, dim, value);
        if (_target.apply_degeneracies(dec.ops, dec.root_dim, root_value) != value
                || ! assign(_var_of_cell[dec.root_dim][dec.root], root_value))
            _consistent = false;
        return _consistent;
    }

    auto MapSearch::fix_eps(int witness, int value) -> bool
    {
        if (_consistent && ! assign(_first_eps_var + witness, value))
            _consistent = false;
        return _consistent;
    }

    auto MapSearch::build_map() const -> SimplicialMap
    {
        auto & s = _source.set();
        SimplicialMap f;
        f.cells.resize(s.trunc_dim + 1);
        for (int d = 0 ; d <= s.trunc_dim ; ++d)
            for (int c = 0 ; c < s.count(d) ; ++c) {
                auto & dec = _source.decomposition(d, c);
                f.cells[d].push_back(_target.apply_degeneracies(dec.ops, dec.root_dim,
                            _value[_var_of_cell[dec.root_dim][dec.root]]));
            }
        for (int e = 0 ; e < s.eps_count() ; ++e)
            f.eps.push_back(_value[_first_eps_var + e]);
        return f;
    }

    auto MapSearch::search(const function<bool (const SimplicialMap &)> & callback) -> bool
    {
        if (_trail.size() == _vars.size())
            return callback(build_map());

        int chosen = -1;
        vector<int> chosen_candidates, scratch;
        auto dim_of = [&] (int var) { return _vars[var].dim < 0 ? 1 : _vars[var].dim; };
        for (int var = 0 ; var < int(_vars.size()) ; ++var) {
            if (_value[var] != -1)
                continue;
            candidates(var, scratch);
            if (scratch.empty())
                return true;
            if (chosen == -1 || scratch.size() < chosen_candidates.size()
                    || (scratch.size() == chosen_candidates.size() && dim_of(var) > dim_of(chosen))) {
                chosen = var;
                chosen_candidates.swap(scratch);
            }
        }

        for (int v : chosen_candidates) {
            auto mark = _trail.size();
            bool keep_going = ! assign(chosen, v) || search(callback);
            undo_to(mark);
            if (! keep_going)
                return false;
        }
        return true;
    }

    auto MapSearch::run(const function<bool (const SimplicialMap &)> & callback) -> long
    {
        if (! _consistent)
            return 0;
        long reported = 0;
        search([&] (const SimplicialMap & f) {
            ++reported;
            return callback(f);
        });
        return reported;
    }

    auto enumerate_maps(const EpsSimplicialSet & a, const EpsSimplicialSet & x) -> vector<SimplicialMap>
    {
        SSetIndex ia(a), ix(x);
        vector<SimplicialMap> result;
        MapSearch(ia, ix).run([&] (const SimplicialMap & f) {
            result.push_back(f);
            return true;
        });
        return result;
    }

    auto count_maps(const EpsSimplicialSet & a, const EpsSimplicialSet & x) -> long
    {
        SSetIndex ia(a), ix(x);
        return MapSearch(ia, ix).run([] (const SimplicialMap &) { return true; });
    }

    auto find_sset_isomorphism(const EpsSimplicialSet & a, const EpsSimplicialSet & b) -> optional<SimplicialMap>
    {
        if (a.trunc_dim != b.trunc_dim || a.eps_count() != b.eps_count())
            return std::nullopt;
        for (int d = 0 ; d <= a.trunc_dim ; ++d)
            if (a.count(d) != b.count(d))
                return std::nullopt;

        SSetIndex ia(a), ib(b);
        optional<SimplicialMap> found;
        MapSearch(ia, ib, true).run([&] (const SimplicialMap & f) {
            if (is_bijective(f, b)) {
                found = f;
                return false;
            }
            return true;
        });
        return found;
    }

    auto describe_map(const SSetIndex & source, const EpsSimplicialSet & target, const SimplicialMap & f)
        -> vector<pair<string, string>>
    {
        auto & s = source.set();
        vector<pair<string, string>> result;
        for (int d = 0 ; d <= s.trunc_dim ; ++d)
            for (int c : source.nondegenerate_cells(d))
                result.emplace_back(s.cell_names[d][c], target.cell_names[d][f.cells[d][c]]);
        for (int e = 0 ; e < s.eps_count() ; ++e)
            result.emplace_back(s.eps_names[e], target.eps_names[f.eps[e]]);
        return result;
    }

    auto check_extension(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & m,
            const EpsSimplicialSet & x, LiftMode mode, std::size_t failure_cap) -> LiftingReport
    {
        if (! is_natural(a, b, m) || ! is_injective(m))
            throw std::invalid_argument("lifting problem needs an inclusion");

        SSetIndex ia(a), ib(b), ix(x);
        LiftingReport report;
        report.mode = mode;
        long limit = mode == LiftMode::Exists ? 1 : 2;

        MapSearch(ia, ix).run([&] (const SimplicialMap & f) {
            ++report.total_instances;
            MapSearch inner(ib, ix);
            long seen = 0;
            for (int d = 0 ; d <= a.trunc_dim ; ++d)
                for (int c : ia.nondegenerate_cells(d))
                    inner.fix(d, m.cells[d][c], f.cells[d][c]);
            for (int e = 0 ; e < a.eps_count() ; ++e)
                inner.fix_eps(m.eps[e], f.eps[e]);

            long found = inner.run([&] (const SimplicialMap & g) {
                if (! is_natural(b, x, g) || compose(g, m) != f)
                    throw logic_error("extension search returned a map that is not an extension");
                return ++seen < limit;
            });

            if (found == 0 || found >= 2) {
                ++report.failing_instances;
                ++(found == 0 ? report.without_extension : report.with_several);
                if (report.failures.size() < failure_cap)
                    report.failures.push_back({ describe_map(ia, x, f), int(found) });
            }
            return true;
        });
        report.holds = report.failing_instances == 0;
        return report;
    }

    auto check_extension(const RealizedShape & shape, const EpsSimplicialSet & x, LiftMode mode,
            std::size_t failure_cap) -> LiftingReport
    {
        return check_extension(shape.domain, *shape.ambient.set, shape.inclusion, x, mode, failure_cap);
    }
}
