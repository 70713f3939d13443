#ifndef RELFROB_SHAPES_HH
#define RELFROB_SHAPES_HH 1

#include <relfrob/simplicial.hh>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace relfrob
{
    struct ShapeName
    {
        enum class Kind
        {
            Delta,
            BoundaryDelta,
            Horn,
            Sigma,
            FaceSigma,
            EpsHorn,
            FaceUnionSigma,
            FaceUnionDelta,
            CellsSigma,
            CellsDelta
        };

        Kind kind = Kind::Delta;
        int n = 0;
        int index = 0;                          ///< horn j, face i, or eps-horn i
        std::vector<int> faces;                 ///< face indices of a face union
        std::vector<std::vector<int>> spans;    ///< generating vertex sets for Cells*
    };

    /// Grammar: delta:n, boundary:n, horn:n:j, sigma:n, eps-horn:n:0|n,
    /// faces-sigma:n:i1,i2,..., faces-delta:n:i1,..., and cells-sigma:n:0124+023
    /// or cells-delta:n:... for unions of spanned faces.
    auto parse_shape(const std::string & text) -> ShapeName;
    auto format_shape(const ShapeName & s) -> std::string;

    /// A simplicial complex with ordered vertices, viewed as a simplicial set:
    /// k-cells are nondecreasing vertex sequences supported in some facet.
    /// Cells are named by concatenating vertex labels, so "013" for <0,1,3>.
    struct OrderedComplex
    {
        std::shared_ptr<const EpsSimplicialSet> set;
        std::vector<std::vector<std::vector<int>>> sequences;   ///< [d][cell] -> vertices
    };

    /// Each marked edge (i, j) with i < j carries one witness named "eps:" + its edge name.
    auto ordered_complex(const std::vector<std::string> & labels, const std::vector<std::vector<int>> & facets,
            const std::vector<std::pair<int, int>> & marked, int trunc_dim) -> OrderedComplex;

    /// Delta^n, or Sigma^n when marked: one witness on <0,n>.
    auto standard_simplex(int n, bool marked, int trunc_dim) -> OrderedComplex;

    /// Cells supported in one of the vertex sets, with every witness whose edge
    /// lies in the result.
    auto span_subobject(const OrderedComplex & k, const std::vector<std::vector<int>> & vertex_sets) -> Subobject;

    struct RealizedShape
    {
        ShapeName name;
        OrderedComplex ambient;
        Subobject sub;
        EpsSimplicialSet domain;
        SimplicialMap inclusion;    ///< domain -> ambient
    };

    /// Requires trunc_dim >= max(n, 2) and n <= 6.
    auto realize(const ShapeName & s, int trunc_dim) -> RealizedShape;
    auto realize(const std::string & grammar, int trunc_dim) -> RealizedShape;

    /// The vertex sets generating a shape inside its ambient simplex.
    auto generators(const ShapeName & s) -> std::vector<std::vector<int>>;
}

#endif
