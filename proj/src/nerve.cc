#include <relfrob/nerve.hh>
#include <relfrob/errors.hh>
#include <relfrob/lifting.hh>

#include <map>
#include <stdexcept>

using std::logic_error;
using std::map;
using std::string;
using std::vector;

namespace relfrob
{
    auto edge_of(const EpsSimplicialSet & x, int n, int cell, int i, int j) -> int
    {
        // dropping vertices from the top keeps the positions of lower ones fixed
        for (int k = n ; k >= 0 ; --k)
            if (k != i && k != j)
                cell = x.face(n--, k, cell);
        return cell;
    }

    auto nerve_monoid(const RelMonoid & m, int trunc_dim) -> EpsSimplicialSet
    {
        auto report = check_monoid(m);
        if (! report.ok)
            throw InputError("not a monoid: " + report.violated_axiom + " (" + report.detail + ")");
        if (trunc_dim < 2)
            throw InputError("nerve needs truncation at least 2");

        auto x = empty_sset(2);
        map<int, int> vertex_of_unit;
        for (int r : m.eta) {
            vertex_of_unit[r] = x.count(0);
            x.cell_names[0].push_back(m.elements[r]);
            x.degeneracies[0][0].push_back(r);
        }

        vector<SourceTarget> st;
        for (int a = 0 ; a < m.size() ; ++a) {
            st.push_back(source_target(m, a));
            x.cell_names[1].push_back(m.elements[a]);
            x.faces[1][0].push_back(vertex_of_unit.at(st[a].target));
            x.faces[1][1].push_back(vertex_of_unit.at(st[a].source));
        }

        map<Triple, int> cell_of_triple;
        for (auto & t : m.mu.triples()) {
            auto & [a, b, c] = t;
            cell_of_triple[t] = x.count(2);
            x.cell_names[2].push_back("(" + m.elements[a] + "," + m.elements[b] + "," + m.elements[c] + ")");
            x.faces[2][0].push_back(a);
            x.faces[2][1].push_back(c);
            x.faces[2][2].push_back(b);
        }
        for (int a = 0 ; a < m.size() ; ++a) {
            x.degeneracies[1][0].push_back(cell_of_triple.at({ a, st[a].source, a }));
            x.degeneracies[1][1].push_back(cell_of_triple.at({ st[a].target, a, a }));
        }

        auto valid = validate(x);
        if (! valid.ok)
            throw logic_error("nerve tables of a monoid violate " + valid.violation);

        auto result = coskeletal_completion(x, trunc_dim);
        for (int n = 3 ; n <= trunc_dim ; ++n)
            for (int c = 0 ; c < result.count(n) ; ++c) {
                string name = "[";
                for (int i = 0 ; i <= n ; ++i)
                    for (int j = i + 1 ; j <= n ; ++j)
                        name += (name.size() > 1 ? "," : "") + m.elements[edge_of(result, n, c, i, j)];
                result.cell_names[n][c] = name + "]";
            }
        return result;
    }

    auto nerve_frobenius(const FrobeniusAlgebra & f, int trunc_dim) -> EpsSimplicialSet
    {
        auto report = check_frobenius(f);
        if (! report.ok)
            throw InputError("not a Frobenius algebra: " + report.violated_axiom + " (" + report.detail + ")");
        auto x = nerve_monoid(f.monoid, trunc_dim);
        for (int e : f.epsilon) {
            x.eps_names.push_back(f.elements()[e]);
            x.eps_edge.push_back(e);
        }
        return x;
    }

    auto nerve_map(const EpsSimplicialSet & na, const EpsSimplicialSet & nb, const ElementMap & h) -> SimplicialMap
    {
        if (na.trunc_dim != nb.trunc_dim || int(h.size()) != na.count(1))
            throw std::invalid_argument("nerve_map: mismatched nerves");

        SSetIndex ib(nb);
        SimplicialMap f;
        f.cells.resize(na.trunc_dim + 1);

        map<int, int> vertex_of_edge;
        for (int v = 0 ; v < nb.count(0) ; ++v)
            vertex_of_edge[nb.degen(0, 0, v)] = v;
        for (int v = 0 ; v < na.count(0) ; ++v) {
            auto it = vertex_of_edge.find(h[na.degen(0, 0, v)]);
            if (it == vertex_of_edge.end())
                throw std::invalid_argument("nerve_map: a unit is not sent to a unit");
            f.cells[0].push_back(it->second);
        }
        f.cells[1] = h;

        for (int d = 2 ; d <= na.trunc_dim ; ++d)
            for (int c = 0 ; c < na.count(d) ; ++c) {
                int found = -1;
                for (int v : ib.with_face(d, 0, f.cells[d - 1][na.face(d, 0, c)])) {
                    bool all = true;
                    for (int i = 1 ; i <= d && all ; ++i)
                        all = nb.face(d, i, v) == f.cells[d - 1][na.face(d, i, c)];
                    if (all) {
                        found = v;
                        break;
                    }
                }
                if (found == -1)
                    throw std::invalid_argument("nerve_map: the map does not preserve mu");
                f.cells[d].push_back(found);
            }

        for (int e = 0 ; e < na.eps_count() ; ++e) {
            auto & on = ib.witnesses_on(f.cells[1][na.eps_edge[e]]);
            if (on.empty())
                throw std::invalid_argument("nerve_map: a counit is not sent to a counit");
            f.eps.push_back(on.front());
        }

        if (! is_natural(na, nb, f))
            throw std::invalid_argument("nerve_map: the induced map is not natural");
        return f;
    }

    auto enumerate_nerve_maps(const EpsSimplicialSet & na, const EpsSimplicialSet & nb) -> vector<SimplicialMap>
    {
        return enumerate_maps(na, nb);
    }
}
