#ifndef RELFROB_JSON_IO_HH
#define RELFROB_JSON_IO_HH 1

#include <relfrob/relcore.hh>
#include <relfrob/simplicial.hh>
#include <relfrob/testspace.hh>

#include <json.hpp>

#include <optional>
#include <string>

namespace relfrob
{
    using Json = nlohmann::ordered_json;

    enum class AlgebraKind
    {
        Monoid,
        Frobenius,
        EffectAlgebra,
        Groupoid,
        EffectAlgebroid
    };

    auto kind_name(AlgebraKind k) -> std::string;

    /// An algebra file as read, keeping the source presentation so it can be
    /// written back unchanged. frobenius is absent only for plain monoids.
    struct AlgebraInput
    {
        AlgebraKind kind = AlgebraKind::Monoid;
        RelMonoid monoid;
        std::optional<FrobeniusAlgebra> frobenius;
        std::optional<EffectAlgebraData> effect_algebra;
        std::optional<GroupoidData> groupoid;
        std::optional<EffectAlgebroidData> effect_algebroid;
    };

    auto input_from_monoid(RelMonoid m) -> AlgebraInput;
    auto input_from_frobenius(FrobeniusAlgebra f) -> AlgebraInput;
    auto input_from_effect_algebra(EffectAlgebraData e) -> AlgebraInput;
    auto input_from_groupoid(GroupoidData g) -> AlgebraInput;
    auto input_from_effect_algebroid(EffectAlgebroidData e) -> AlgebraInput;

    /// Parses text, mapping syntax errors to InputError with a line and column.
    auto parse_json_text(const std::string & text, const std::string & source) -> Json;
    auto read_json_file(const std::string & path) -> Json;

    /// Schema errors throw InputError naming the JSON path, like /mu/3/1.
    /// Monoid and Frobenius inputs are built as given, so axiom failures are
    /// left to the checkers; the other kinds go through their constructors.
    auto algebra_from_json(const Json & j) -> AlgebraInput;
    auto algebra_to_json(const AlgebraInput & a) -> Json;

    auto monoid_to_json(const RelMonoid & m) -> Json;
    auto frobenius_to_json(const FrobeniusAlgebra & f) -> Json;

    /// The result is validated; identity violations throw InputError too.
    auto sset_from_json(const Json & j) -> EpsSimplicialSet;
    auto sset_to_json(const EpsSimplicialSet & x) -> Json;

    auto testspace_from_json(const Json & j) -> TestSpace;
    auto testspace_to_json(const TestSpace & t) -> Json;
}

#endif
