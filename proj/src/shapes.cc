#include <relfrob/shapes.hh>
#include <relfrob/errors.hh>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

using std::make_shared;
using std::map;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace relfrob
{
    namespace
    {
        auto split(const string & text, char sep) -> vector<string>
        {
            vector<string> parts;
            std::stringstream in(text);
            string part;
            while (std::getline(in, part, sep))
                parts.push_back(part);
            if (! text.empty() && text.back() == sep)
                parts.emplace_back();
            return parts;
        }

        auto parse_int(const string & text, const string & where) -> int
        {
            if (text.empty() || ! std::all_of(text.begin(), text.end(), [] (char c) { return c >= '0' && c <= '9'; }))
                throw InputError("shape '" + where + "': expected a number, got '" + text + "'");
            return std::stoi(text);
        }

        auto sorted_unique(vector<int> v) -> vector<int>
        {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        }

        auto all_but(int n, int skip) -> vector<int>
        {
            vector<int> result;
            for (int v = 0 ; v <= n ; ++v)
                if (v != skip)
                    result.push_back(v);
            return result;
        }

        auto is_sigma(ShapeName::Kind k) -> bool
        {
            using K = ShapeName::Kind;
            return k == K::Sigma || k == K::FaceSigma || k == K::EpsHorn || k == K::FaceUnionSigma || k == K::CellsSigma;
        }
    }

    auto parse_shape(const string & text) -> ShapeName
    {
        using K = ShapeName::Kind;
        auto parts = split(text, ':');
        if (parts.size() < 2)
            throw InputError("shape '" + text + "': expected <kind>:<n>[:<args>]");
        ShapeName s;
        s.n = parse_int(parts[1], text);
        auto & kind = parts[0];
        auto want_parts = [&] (std::size_t k) {
            if (parts.size() != k)
                throw InputError("shape '" + text + "': wrong number of fields for " + kind);
        };

        if (kind == "delta" || kind == "boundary" || kind == "sigma") {
            want_parts(2);
            s.kind = kind == "delta" ? K::Delta : kind == "sigma" ? K::Sigma : K::BoundaryDelta;
        }
        else if (kind == "horn" || kind == "eps-horn" || kind == "face-sigma") {
            want_parts(3);
            s.kind = kind == "horn" ? K::Horn : kind == "eps-horn" ? K::EpsHorn : K::FaceSigma;
            s.index = parse_int(parts[2], text);
        }
        else if (kind == "faces-sigma" || kind == "faces-delta") {
            want_parts(3);
            s.kind = kind == "faces-sigma" ? K::FaceUnionSigma : K::FaceUnionDelta;
            for (auto & p : split(parts[2], ','))
                s.faces.push_back(parse_int(p, text));
            s.faces = sorted_unique(s.faces);
        }
        else if (kind == "cells-sigma" || kind == "cells-delta") {
            want_parts(3);
            s.kind = kind == "cells-sigma" ? K::CellsSigma : K::CellsDelta;
            for (auto & p : split(parts[2], '+')) {
                vector<int> span;
                for (char c : p) {
                    if (c < '0' || c > '9')
                        throw InputError("shape '" + text + "': vertex sets are digit strings");
                    span.push_back(c - '0');
                }
                if (span.empty())
                    throw InputError("shape '" + text + "': empty vertex set");
                s.spans.push_back(sorted_unique(span));
            }
        }
        else
            throw InputError("shape '" + text + "': unknown kind '" + kind + "'");

        generators(s);
        return s;
    }

    auto format_shape(const ShapeName & s) -> string
    {
        using K = ShapeName::Kind;
        string n = std::to_string(s.n);
        auto join = [] (const vector<int> & v, const string & sep) {
            string r;
            for (std::size_t i = 0 ; i < v.size() ; ++i)
                r += (i ? sep : "") + std::to_string(v[i]);
            return r;
        };
        switch (s.kind) {
            case K::Delta: return "delta:" + n;
            case K::BoundaryDelta: return "boundary:" + n;
            case K::Horn: return "horn:" + n + ":" + std::to_string(s.index);
            case K::Sigma: return "sigma:" + n;
            case K::FaceSigma: return "face-sigma:" + n + ":" + std::to_string(s.index);
            case K::EpsHorn: return "eps-horn:" + n + ":" + std::to_string(s.index);
            case K::FaceUnionSigma: return "faces-sigma:" + n + ":" + join(s.faces, ",");
            case K::FaceUnionDelta: return "faces-delta:" + n + ":" + join(s.faces, ",");
            case K::CellsSigma:
            case K::CellsDelta: {
                string r = s.kind == K::CellsSigma ? "cells-sigma:" : "cells-delta:";
                r += n + ":";
                for (std::size_t i = 0 ; i < s.spans.size() ; ++i)
                    r += (i ? "+" : "") + join(s.spans[i], "");
                return r;
            }
        }
        throw std::logic_error("unhandled shape kind");
    }

    auto generators(const ShapeName & s) -> vector<vector<int>>
    {
        using K = ShapeName::Kind;
        int n = s.n;
        string what = "shape of dimension " + std::to_string(n);
        if (n < 0 || n > 6)
            throw InputError(what + ": dimensions 0..6 are supported");
        auto check_index = [&] (int i) {
            if (i < 0 || i > n)
                throw InputError(what + ": index " + std::to_string(i) + " out of range");
        };

        vector<vector<int>> result;
        switch (s.kind) {
            case K::Delta:
            case K::Sigma:
                result.push_back(all_but(n, -1));
                break;
            case K::BoundaryDelta:
                if (n < 1)
                    throw InputError(what + ": boundary needs n >= 1");
                for (int i = 0 ; i <= n ; ++i)
                    result.push_back(all_but(n, i));
                break;
            case K::Horn:
            case K::EpsHorn:
                if (n < 1)
                    throw InputError(what + ": horns need n >= 1");
                check_index(s.index);
                if (s.kind == K::EpsHorn && s.index != 0 && s.index != n)
                    throw InputError(what + ": epsilon-horns are missing face 0 or n");
                for (int i = 0 ; i <= n ; ++i)
                    if (i != s.index)
                        result.push_back(all_but(n, i));
                break;
            case K::FaceSigma:
                if (n < 1)
                    throw InputError(what + ": faces need n >= 1");
                check_index(s.index);
                result.push_back(all_but(n, s.index));
                break;
            case K::FaceUnionSigma:
            case K::FaceUnionDelta:
                if (n < 1 || s.faces.empty())
                    throw InputError(what + ": a face union needs n >= 1 and at least one face");
                for (int i : s.faces) {
                    check_index(i);
                    result.push_back(all_but(n, i));
                }
                break;
            case K::CellsSigma:
            case K::CellsDelta:
                if (s.spans.empty())
                    throw InputError(what + ": no vertex sets given");
                for (auto & span : s.spans) {
                    for (int v : span)
                        check_index(v);
                    result.push_back(span);
                }
                break;
        }
        return result;
    }

    auto ordered_complex(const vector<string> & labels, const vector<vector<int>> & facets,
            const vector<pair<int, int>> & marked, int trunc_dim) -> OrderedComplex
    {
        int vertices = int(labels.size());
        set<vector<int>> supports;
        for (auto & f : facets) {
            auto sorted = sorted_unique(f);
            for (int v : sorted)
                if (v < 0 || v >= vertices)
                    throw std::invalid_argument("facet refers to a missing vertex");
            supports.insert(sorted);
        }
        auto supported = [&] (const vector<int> & seq) {
            for (auto & f : supports)
                if (std::includes(f.begin(), f.end(), seq.begin(), seq.end()))
                    return true;
            return false;
        };

        OrderedComplex result;
        result.sequences.resize(trunc_dim + 1);
        auto x = empty_sset(trunc_dim);

        vector<map<vector<int>, int>> lookup(trunc_dim + 1);
        for (int d = 0 ; d <= trunc_dim ; ++d) {
            set<vector<int>> found;
            for (auto & f : supports) {
                // nondecreasing sequences of length d + 1 over f
                vector<int> pick(d + 1, 0);
                auto fill = [&] (auto & self, int pos, int from) -> void {
                    if (pos == d + 1) {
                        vector<int> seq;
                        for (int p : pick)
                            seq.push_back(f[p]);
                        found.insert(seq);
                        return;
                    }
                    for (int p = from ; p < int(f.size()) ; ++p) {
                        pick[pos] = p;
                        self(self, pos + 1, p);
                    }
                };
                if (! f.empty())
                    fill(fill, 0, 0);
            }
            for (auto & seq : found) {
                lookup[d].emplace(seq, int(result.sequences[d].size()));
                result.sequences[d].push_back(seq);
                string name;
                for (int v : seq)
                    name += labels[v];
                x.cell_names[d].push_back(name);
            }
        }

        for (int d = 0 ; d <= trunc_dim ; ++d)
            for (auto & seq : result.sequences[d]) {
                if (d >= 1)
                    for (int i = 0 ; i <= d ; ++i) {
                        auto face = seq;
                        face.erase(face.begin() + i);
                        x.faces[d][i].push_back(lookup[d - 1].at(face));
                    }
                if (d < trunc_dim)
                    for (int i = 0 ; i <= d ; ++i) {
                        auto degen = seq;
                        degen.insert(degen.begin() + i, seq[i]);
                        x.degeneracies[d][i].push_back(lookup[d + 1].at(degen));
                    }
            }

        for (auto & [a, b] : marked) {
            vector<int> edge{ a, b };
            if (a >= b || ! supported(edge))
                throw std::invalid_argument("marked edge is not an edge of the complex");
            x.eps_names.push_back("eps:" + labels[a] + labels[b]);
            x.eps_edge.push_back(lookup[1].at(edge));
        }

        result.set = make_shared<const EpsSimplicialSet>(std::move(x));
        return result;
    }

    auto standard_simplex(int n, bool marked, int trunc_dim) -> OrderedComplex
    {
        vector<string> labels;
        for (int v = 0 ; v <= n ; ++v)
            labels.push_back(std::to_string(v));
        vector<pair<int, int>> edges;
        if (marked) {
            if (n < 1)
                throw InputError("a marked simplex needs n >= 1");
            edges.emplace_back(0, n);
        }
        return ordered_complex(labels, { all_but(n, -1) }, edges, trunc_dim);
    }

    auto span_subobject(const OrderedComplex & k, const vector<vector<int>> & vertex_sets) -> Subobject
    {
        Subobject s = empty_subobject(k.set);
        vector<vector<int>> spans;
        for (auto & v : vertex_sets)
            spans.push_back(sorted_unique(v));
        for (int d = 0 ; d <= k.set->trunc_dim ; ++d)
            for (int c = 0 ; c < k.set->count(d) ; ++c) {
                auto support = sorted_unique(k.sequences[d][c]);
                for (auto & span : spans)
                    if (std::includes(span.begin(), span.end(), support.begin(), support.end())) {
                        s.cells[d][c] = 1;
                        break;
                    }
            }
        for (int e = 0 ; e < k.set->eps_count() ; ++e)
            s.eps[e] = s.cells[1][k.set->eps_edge[e]];
        return s;
    }

    auto realize(const ShapeName & s, int trunc_dim) -> RealizedShape
    {
        auto gens = generators(s);
        if (trunc_dim < std::max(s.n, 2))
            throw InputError("shape " + format_shape(s) + " needs truncation at least " + std::to_string(std::max(s.n, 2)));
        if (is_sigma(s.kind) && s.n < 1)
            throw InputError("shape " + format_shape(s) + ": a marked simplex needs n >= 1");

        RealizedShape result;
        result.name = s;
        result.ambient = standard_simplex(s.n, is_sigma(s.kind), trunc_dim);
        result.sub = span_subobject(result.ambient, gens);
        auto m = materialize(result.sub);
        result.domain = std::move(m.set);
        result.inclusion = std::move(m.inclusion);
        return result;
    }

    auto realize(const string & grammar, int trunc_dim) -> RealizedShape
    {
        return realize(parse_shape(grammar), trunc_dim);
    }
}
