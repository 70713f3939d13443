#ifndef RELFROB_NERVE_HH
#define RELFROB_NERVE_HH 1

#include <relfrob/relcore.hh>
#include <relfrob/simplicial.hh>

#include <vector>

namespace relfrob
{
    /// X_0 = eta, X_1 = the carrier in element order, X_2 = the triples of mu, with
    /// (a, b, c) for mu:(a, b) -> c having d_0 = a, d_1 = c, d_2 = b. An edge a has
    /// d_0 a = t(a) and d_1 a = s(a); s_0 a = (a, s(a), a) and s_1 a = (t(a), a, a).
    /// Higher dimensions come from coskeletal completion and are renamed by the
    /// list of their edges <01>, <02>, ..., <(n-1)n>. Throws InputError unless m
    /// is a monoid.
    auto nerve_monoid(const RelMonoid & m, int trunc_dim = 4) -> EpsSimplicialSet;

    /// The monoid nerve with one witness per counit element, named after it and
    /// sitting on that element's edge.
    auto nerve_frobenius(const FrobeniusAlgebra & f, int trunc_dim = 4) -> EpsSimplicialSet;

    /// The map of nerves induced by h : a -> b. Throws std::invalid_argument if h
    /// does not induce one.
    auto nerve_map(const EpsSimplicialSet & na, const EpsSimplicialSet & nb, const ElementMap & h) -> SimplicialMap;

    /// Every simplicial map between the nerves, by exhaustive search.
    auto enumerate_nerve_maps(const EpsSimplicialSet & na, const EpsSimplicialSet & nb) -> std::vector<SimplicialMap>;

    /// The edge <i,j> of an n-cell, i < j.
    auto edge_of(const EpsSimplicialSet & x, int n, int cell, int i, int j) -> int;
}

#endif
