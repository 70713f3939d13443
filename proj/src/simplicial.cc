#include <relfrob/simplicial.hh>
#include <relfrob/errors.hh>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using std::logic_error;
using std::make_shared;
using std::map;
using std::pair;
using std::set;
using std::shared_ptr;
using std::string;
using std::to_string;
using std::vector;

namespace relfrob
{
    auto EpsSimplicialSet::cell_index(int d, const string & name) const -> int
    {
        if (d < 0 || d > trunc_dim)
            throw InputError("dimension " + to_string(d) + " is not stored");
        auto it = std::find(cell_names[d].begin(), cell_names[d].end(), name);
        if (it == cell_names[d].end())
            throw InputError("no " + to_string(d) + "-cell named '" + name + "'");
        return int(it - cell_names[d].begin());
    }

    auto EpsSimplicialSet::eps_index(const string & name) const -> int
    {
        auto it = std::find(eps_names.begin(), eps_names.end(), name);
        if (it == eps_names.end())
            throw InputError("no witness named '" + name + "'");
        return int(it - eps_names.begin());
    }

    auto empty_sset(int trunc_dim) -> EpsSimplicialSet
    {
        EpsSimplicialSet x;
        x.trunc_dim = trunc_dim;
        x.cell_names.resize(trunc_dim + 1);
        x.faces.resize(trunc_dim + 1);
        x.degeneracies.resize(trunc_dim + 1);
        for (int d = 1 ; d <= trunc_dim ; ++d)
            x.faces[d].resize(d + 1);
        for (int d = 0 ; d < trunc_dim ; ++d)
            x.degeneracies[d].resize(d + 1);
        return x;
    }

    namespace
    {
        auto check_table(const vector<int> & table, int expected_size, int range, const string & what) -> void
        {
            if (int(table.size()) != expected_size)
                throw InputError(what + " has " + to_string(table.size()) + " entries, expected " + to_string(expected_size));
            for (int v : table)
                if (v < 0 || v >= range)
                    throw InputError(what + " refers to a missing cell");
        }

        auto check_shape(const EpsSimplicialSet & x) -> void
        {
            int k = x.trunc_dim;
            if (k < 2)
                throw InputError("truncation dimension must be at least 2");
            if (int(x.cell_names.size()) != k + 1 || int(x.faces.size()) != k + 1 || int(x.degeneracies.size()) != k + 1)
                throw InputError("tables do not match truncation dimension " + to_string(k));

            for (int d = 0 ; d <= k ; ++d) {
                set<string> seen;
                for (auto & n : x.cell_names[d])
                    if (! seen.insert(n).second)
                        throw InputError("duplicate " + to_string(d) + "-cell '" + n + "'");
            }

            if (! x.faces[0].empty())
                throw InputError("0-cells have no faces");
            for (int d = 1 ; d <= k ; ++d) {
                if (int(x.faces[d].size()) != d + 1)
                    throw InputError("dimension " + to_string(d) + " needs " + to_string(d + 1) + " face maps");
                for (int i = 0 ; i <= d ; ++i)
                    check_table(x.faces[d][i], x.count(d), x.count(d - 1), "face " + to_string(d) + "," + to_string(i));
            }
            for (int d = 0 ; d <= k ; ++d) {
                int expected = d < k ? d + 1 : 0;
                if (int(x.degeneracies[d].size()) != expected)
                    throw InputError("dimension " + to_string(d) + " needs " + to_string(expected) + " degeneracy maps");
                for (int i = 0 ; i < expected ; ++i)
                    check_table(x.degeneracies[d][i], x.count(d), x.count(d + 1), "degen " + to_string(d) + "," + to_string(i));
            }

            set<string> seen;
            for (auto & n : x.eps_names)
                if (! seen.insert(n).second)
                    throw InputError("duplicate witness '" + n + "'");
            check_table(x.eps_edge, x.eps_count(), x.count(1), "witness edges");
        }
    }

    auto validate(const EpsSimplicialSet & x) -> ValidationReport
    {
        check_shape(x);
        int k = x.trunc_dim;
        auto violation = [&] (const string & law, int d, int i, int j, int c) {
            return ValidationReport{ false, law + " fails at (d=" + to_string(d) + ", i=" + to_string(i) + ", j=" + to_string(j)
                + ", cell '" + x.cell_names[d][c] + "')" };
        };

        for (int d = 2 ; d <= k ; ++d)
            for (int c = 0 ; c < x.count(d) ; ++c)
                for (int j = 1 ; j <= d ; ++j)
                    for (int i = 0 ; i < j ; ++i)
                        if (x.face(d - 1, i, x.face(d, j, c)) != x.face(d - 1, j - 1, x.face(d, i, c)))
                            return violation("d_i d_j = d_{j-1} d_i", d, i, j, c);

        for (int d = 0 ; d + 2 <= k ; ++d)
            for (int c = 0 ; c < x.count(d) ; ++c)
                for (int j = 0 ; j <= d ; ++j)
                    for (int i = 0 ; i <= j ; ++i)
                        if (x.degen(d + 1, i, x.degen(d, j, c)) != x.degen(d + 1, j + 1, x.degen(d, i, c)))
                            return violation("s_i s_j = s_{j+1} s_i", d, i, j, c);

        for (int d = 0 ; d + 1 <= k ; ++d)
            for (int c = 0 ; c < x.count(d) ; ++c)
                for (int j = 0 ; j <= d ; ++j)
                    for (int i = 0 ; i <= d + 1 ; ++i) {
                        int lhs = x.face(d + 1, i, x.degen(d, j, c));
                        if (i < j) {
                            if (lhs != x.degen(d - 1, j - 1, x.face(d, i, c)))
                                return violation("d_i s_j = s_{j-1} d_i", d, i, j, c);
                        }
                        else if (i == j || i == j + 1) {
                            if (lhs != c)
                                return violation("d_i s_j = id", d, i, j, c);
                        }
                        else if (lhs != x.degen(d - 1, j, x.face(d, i - 1, c)))
                            return violation("d_i s_j = s_j d_{i-1}", d, i, j, c);
                    }

        return {};
    }

    auto identity_map(const EpsSimplicialSet & x) -> SimplicialMap
    {
        SimplicialMap f;
        for (int d = 0 ; d <= x.trunc_dim ; ++d) {
            f.cells.emplace_back(x.count(d));
            for (int c = 0 ; c < x.count(d) ; ++c)
                f.cells[d][c] = c;
        }
        for (int e = 0 ; e < x.eps_count() ; ++e)
            f.eps.push_back(e);
        return f;
    }

    auto compose(const SimplicialMap & g, const SimplicialMap & f) -> SimplicialMap
    {
        SimplicialMap h;
        for (std::size_t d = 0 ; d < f.cells.size() ; ++d) {
            h.cells.emplace_back();
            for (int v : f.cells[d])
                h.cells[d].push_back(g.cells[d][v]);
        }
        for (int e : f.eps)
            h.eps.push_back(g.eps[e]);
        return h;
    }

    auto is_natural(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & f) -> bool
    {
        if (a.trunc_dim != b.trunc_dim || int(f.cells.size()) != a.trunc_dim + 1 || int(f.eps.size()) != a.eps_count())
            return false;
        for (int d = 0 ; d <= a.trunc_dim ; ++d) {
            if (int(f.cells[d].size()) != a.count(d))
                return false;
            for (int v : f.cells[d])
                if (v < 0 || v >= b.count(d))
                    return false;
        }
        for (int v : f.eps)
            if (v < 0 || v >= b.eps_count())
                return false;

        for (int d = 0 ; d <= a.trunc_dim ; ++d)
            for (int c = 0 ; c < a.count(d) ; ++c) {
                int v = f.cells[d][c];
                if (d >= 1)
                    for (int i = 0 ; i <= d ; ++i)
                        if (f.cells[d - 1][a.face(d, i, c)] != b.face(d, i, v))
                            return false;
                if (d < a.trunc_dim)
                    for (int i = 0 ; i <= d ; ++i)
                        if (f.cells[d + 1][a.degen(d, i, c)] != b.degen(d, i, v))
                            return false;
            }
        for (int e = 0 ; e < a.eps_count() ; ++e)
            if (b.eps_edge[f.eps[e]] != f.cells[1][a.eps_edge[e]])
                return false;
        return true;
    }

    auto is_injective(const SimplicialMap & f) -> bool
    {
        auto distinct = [] (vector<int> v) {
            std::sort(v.begin(), v.end());
            return std::adjacent_find(v.begin(), v.end()) == v.end();
        };
        for (auto & level : f.cells)
            if (! distinct(level))
                return false;
        return distinct(f.eps);
    }

    auto is_bijective(const SimplicialMap & f, const EpsSimplicialSet & target) -> bool
    {
        if (! is_injective(f) || int(f.eps.size()) != target.eps_count())
            return false;
        for (int d = 0 ; d <= target.trunc_dim ; ++d)
            if (int(f.cells[d].size()) != target.count(d))
                return false;
        return true;
    }

    SSetIndex::SSetIndex(EpsSimplicialSet x) :
        _set(std::move(x))
    {
        int k = _set.trunc_dim;
        _decomposition.resize(k + 1);
        _nondegenerate.resize(k + 1);
        _with_face.resize(k + 1);

        for (int d = 0 ; d <= k ; ++d) {
            vector<pair<int, int>> preimage(_set.count(d), { -1, -1 });
            if (d >= 1)
                for (int i = 0 ; i < d ; ++i)
                    for (int y = 0 ; y < _set.count(d - 1) ; ++y) {
                        int c = _set.degen(d - 1, i, y);
                        if (preimage[c].first == -1)
                            preimage[c] = { i, y };
                    }
            for (int c = 0 ; c < _set.count(d) ; ++c) {
                if (preimage[c].first == -1) {
                    _decomposition[d].push_back({ d, c, {} });
                    _nondegenerate[d].push_back(c);
                }
                else {
                    auto below = _decomposition[d - 1][preimage[c].second];
                    below.ops.push_back(preimage[c].first);
                    _decomposition[d].push_back(std::move(below));
                }
            }
        }

        for (int d = 1 ; d <= k ; ++d) {
            _with_face[d].assign(d + 1, vector<vector<int>>(_set.count(d - 1)));
            for (int i = 0 ; i <= d ; ++i)
                for (int c = 0 ; c < _set.count(d) ; ++c)
                    _with_face[d][i][_set.face(d, i, c)].push_back(c);
        }

        _witnesses_on.resize(_set.count(1));
        for (int e = 0 ; e < _set.eps_count() ; ++e)
            _witnesses_on[_set.eps_edge[e]].push_back(e);
    }

    auto SSetIndex::apply_degeneracies(const vector<int> & ops, int dim, int cell) const -> int
    {
        for (int op : ops)
            cell = _set.degen(dim++, op, cell);
        return cell;
    }

    auto SSetIndex::strip_degeneracies(const vector<int> & ops, int dim, int cell) const -> int
    {
        for (auto op = ops.rbegin() ; op != ops.rend() ; ++op)
            cell = _set.face(dim--, *op, cell);
        return cell;
    }

    auto empty_subobject(shared_ptr<const EpsSimplicialSet> parent) -> Subobject
    {
        Subobject s;
        for (int d = 0 ; d <= parent->trunc_dim ; ++d)
            s.cells.emplace_back(parent->count(d), 0);
        s.eps.assign(parent->eps_count(), 0);
        s.parent = std::move(parent);
        return s;
    }

    auto full_subobject(shared_ptr<const EpsSimplicialSet> parent) -> Subobject
    {
        Subobject s = empty_subobject(std::move(parent));
        for (auto & level : s.cells)
            std::fill(level.begin(), level.end(), 1);
        std::fill(s.eps.begin(), s.eps.end(), 1);
        return s;
    }

    auto generate_subobject(shared_ptr<const EpsSimplicialSet> parent,
            const vector<pair<int, int>> & cells, const vector<int> & eps) -> Subobject
    {
        Subobject s = empty_subobject(parent);
        auto & x = *parent;
        for (auto & [d, c] : cells)
            s.cells.at(d).at(c) = 1;
        for (int e : eps) {
            s.eps.at(e) = 1;
            s.cells[1][x.eps_edge[e]] = 1;
        }
        for (int d = x.trunc_dim ; d >= 1 ; --d)
            for (int c = 0 ; c < x.count(d) ; ++c)
                if (s.cells[d][c])
                    for (int i = 0 ; i <= d ; ++i)
                        s.cells[d - 1][x.face(d, i, c)] = 1;
        for (int d = 0 ; d < x.trunc_dim ; ++d)
            for (int c = 0 ; c < x.count(d) ; ++c)
                if (s.cells[d][c])
                    for (int i = 0 ; i <= d ; ++i)
                        s.cells[d + 1][x.degen(d, i, c)] = 1;
        return s;
    }

    auto is_closed(const Subobject & s) -> bool
    {
        auto & x = *s.parent;
        for (int d = 0 ; d <= x.trunc_dim ; ++d)
            for (int c = 0 ; c < x.count(d) ; ++c) {
                if (! s.cells[d][c])
                    continue;
                if (d >= 1)
                    for (int i = 0 ; i <= d ; ++i)
                        if (! s.cells[d - 1][x.face(d, i, c)])
                            return false;
                if (d < x.trunc_dim)
                    for (int i = 0 ; i <= d ; ++i)
                        if (! s.cells[d + 1][x.degen(d, i, c)])
                            return false;
            }
        for (int e = 0 ; e < x.eps_count() ; ++e)
            if (s.eps[e] && ! s.cells[1][x.eps_edge[e]])
                return false;
        return true;
    }

    namespace
    {
        template <typename Op_>
        auto pointwise(const Subobject & a, const Subobject & b, Op_ op) -> Subobject
        {
            if (a.parent != b.parent)
                throw std::invalid_argument("subobjects of different parents");
            Subobject s = a;
            for (std::size_t d = 0 ; d < s.cells.size() ; ++d)
                for (std::size_t c = 0 ; c < s.cells[d].size() ; ++c)
                    s.cells[d][c] = op(a.cells[d][c], b.cells[d][c]);
            for (std::size_t e = 0 ; e < s.eps.size() ; ++e)
                s.eps[e] = op(a.eps[e], b.eps[e]);
            if (! is_closed(s))
                throw logic_error("pointwise combination of subobjects is not closed");
            return s;
        }
    }

    auto subobject_union(const Subobject & a, const Subobject & b) -> Subobject
    {
        return pointwise(a, b, [] (char p, char q) -> char { return p || q; });
    }

    auto subobject_intersection(const Subobject & a, const Subobject & b) -> Subobject
    {
        return pointwise(a, b, [] (char p, char q) -> char { return p && q; });
    }

    auto materialize(const Subobject & s) -> Materialized
    {
        if (! is_closed(s))
            throw logic_error("materializing a subobject that is not closed");
        auto & x = *s.parent;
        int k = x.trunc_dim;
        Materialized result;
        result.set = empty_sset(k);
        auto & y = result.set;
        auto & inc = result.inclusion;

        vector<vector<int>> renumber(k + 1);
        inc.cells.resize(k + 1);
        for (int d = 0 ; d <= k ; ++d) {
            renumber[d].assign(x.count(d), -1);
            for (int c = 0 ; c < x.count(d) ; ++c)
                if (s.cells[d][c]) {
                    renumber[d][c] = y.count(d);
                    y.cell_names[d].push_back(x.cell_names[d][c]);
                    inc.cells[d].push_back(c);
                }
        }
        for (int d = 0 ; d <= k ; ++d)
            for (int c : inc.cells[d]) {
                if (d >= 1)
                    for (int i = 0 ; i <= d ; ++i)
                        y.faces[d][i].push_back(renumber[d - 1][x.face(d, i, c)]);
                if (d < k)
                    for (int i = 0 ; i <= d ; ++i)
                        y.degeneracies[d][i].push_back(renumber[d + 1][x.degen(d, i, c)]);
            }
        for (int e = 0 ; e < x.eps_count() ; ++e)
            if (s.eps[e]) {
                y.eps_names.push_back(x.eps_names[e]);
                y.eps_edge.push_back(renumber[1][x.eps_edge[e]]);
                inc.eps.push_back(e);
            }
        return result;
    }

    auto pushout(const EpsSimplicialSet & a, const EpsSimplicialSet & b, const SimplicialMap & i,
            const EpsSimplicialSet & c, const SimplicialMap & f) -> Pushout
    {
        int k = b.trunc_dim;
        if (a.trunc_dim != k || c.trunc_dim != k)
            throw std::invalid_argument("pushout of sets with different truncations");
        if (! is_natural(a, b, i) || ! is_injective(i) || ! is_natural(a, c, f))
            throw std::invalid_argument("pushout needs an injective map and a map out of the same source");

        Pushout result;
        auto & p = result.object;
        p = empty_sset(k);
        auto & g = result.from_b;
        g.cells.resize(k + 1);

        auto fresh_name = [] (const vector<string> & taken, string name) {
            while (std::find(taken.begin(), taken.end(), name) != taken.end())
                name += "'";
            return name;
        };

        for (int d = 0 ; d <= k ; ++d) {
            p.cell_names[d] = c.cell_names[d];
            g.cells[d].assign(b.count(d), -1);
            for (int x = 0 ; x < a.count(d) ; ++x)
                g.cells[d][i.cells[d][x]] = f.cells[d][x];
            for (int x = 0 ; x < b.count(d) ; ++x)
                if (g.cells[d][x] == -1) {
                    g.cells[d][x] = p.count(d);
                    p.cell_names[d].push_back(fresh_name(p.cell_names[d], b.cell_names[d][x]));
                }
        }

        for (int d = 0 ; d <= k ; ++d) {
            if (d >= 1)
                p.faces[d] = c.faces[d];
            if (d < k)
                p.degeneracies[d] = c.degeneracies[d];
            for (int x = 0 ; x < b.count(d) ; ++x) {
                if (g.cells[d][x] < c.count(d))
                    continue;
                if (d >= 1)
                    for (int j = 0 ; j <= d ; ++j)
                        p.faces[d][j].push_back(g.cells[d - 1][b.face(d, j, x)]);
                if (d < k)
                    for (int j = 0 ; j <= d ; ++j)
                        p.degeneracies[d][j].push_back(g.cells[d + 1][b.degen(d, j, x)]);
            }
        }

        p.eps_names = c.eps_names;
        p.eps_edge = c.eps_edge;
        g.eps.assign(b.eps_count(), -1);
        for (int e = 0 ; e < a.eps_count() ; ++e)
            g.eps[i.eps[e]] = f.eps[e];
        for (int e = 0 ; e < b.eps_count() ; ++e)
            if (g.eps[e] == -1) {
                g.eps[e] = p.eps_count();
                p.eps_names.push_back(fresh_name(p.eps_names, b.eps_names[e]));
                p.eps_edge.push_back(g.cells[1][b.eps_edge[e]]);
            }

        result.from_c = identity_map(c);
        if (! validate(p).ok || ! is_natural(b, p, g) || ! is_natural(c, p, result.from_c)
                || compose(g, i) != compose(result.from_c, f))
            throw logic_error("pushout square does not commute");
        return result;
    }

    auto truncate(const EpsSimplicialSet & x, int k) -> EpsSimplicialSet
    {
        if (k > x.trunc_dim)
            throw std::invalid_argument("cannot truncate above the stored dimension");
        EpsSimplicialSet y = x;
        y.trunc_dim = k;
        y.cell_names.resize(k + 1);
        y.faces.resize(k + 1);
        y.degeneracies.resize(k + 1);
        y.degeneracies[k].clear();
        return y;
    }

    auto coskeletal_completion(const EpsSimplicialSet & x, int k) -> EpsSimplicialSet
    {
        if (k <= x.trunc_dim)
            return truncate(x, k);

        EpsSimplicialSet y = x;
        for (int n = x.trunc_dim + 1 ; n <= k ; ++n) {
            int below = n - 1;
            vector<vector<int>> by_face0(y.count(below - 1));
            for (int v = 0 ; v < y.count(below) ; ++v)
                by_face0[y.face(below, 0, v)].push_back(v);

            vector<string> names;
            vector<vector<int>> tuples;
            map<vector<int>, int> lookup;
            vector<int> tuple(n + 1);

            auto extend = [&] (auto & self, int j) -> void {
                if (j == n + 1) {
                    lookup.emplace(tuple, int(tuples.size()));
                    tuples.push_back(tuple);
                    return;
                }
                auto consider = [&] (int v) {
                    for (int i = 0 ; i < j ; ++i)
                        if (y.face(below, i, v) != y.face(below, j - 1, tuple[i]))
                            return;
                    tuple[j] = v;
                    self(self, j + 1);
                };
                if (j == 0)
                    for (int v = 0 ; v < y.count(below) ; ++v)
                        consider(v);
                else
                    for (int v : by_face0[y.face(below, j - 1, tuple[0])])
                        consider(v);
            };
            extend(extend, 0);

            y.trunc_dim = n;
            y.cell_names.emplace_back();
            y.faces.emplace_back(n + 1);
            y.degeneracies.emplace_back();
            y.degeneracies[below].assign(n, {});

            for (auto & t : tuples) {
                string name = "<";
                for (int i = 0 ; i <= n ; ++i) {
                    name += (i ? "|" : "") + y.cell_names[below][t[i]];
                    y.faces[n][i].push_back(t[i]);
                }
                y.cell_names[n].push_back(name + ">");
            }

            for (int j = 0 ; j <= below ; ++j)
                for (int c = 0 ; c < y.count(below) ; ++c) {
                    vector<int> t(n + 1);
                    for (int i = 0 ; i <= n ; ++i) {
                        if (i < j)
                            t[i] = y.degen(below - 1, j - 1, y.face(below, i, c));
                        else if (i == j || i == j + 1)
                            t[i] = c;
                        else
                            t[i] = y.degen(below - 1, j, y.face(below, i - 1, c));
                    }
                    auto it = lookup.find(t);
                    if (it == lookup.end())
                        throw logic_error("degenerate tuple missing from completion");
                    y.degeneracies[below][j].push_back(it->second);
                }
        }
        return y;
    }

    auto nondegenerate_counts(const EpsSimplicialSet & x) -> vector<int>
    {
        SSetIndex index(x);
        vector<int> result;
        for (int d = 0 ; d <= x.trunc_dim ; ++d)
            result.push_back(index.nondegenerate_count(d));
        return result;
    }
}
