#pragma once

// JSON continued-fraction spec files:
//
//   {"mode": "periodic", "a": ["-3", "1", "1"], "b": ["1", "-1", "-1"], "period": 3,
//    "tower": "rational"}
//
// Number literals are strings ("7", "-2/3", "0.25", "(1 + √5)/2", "2*sqrt(3)"),
// JSON integers, or {"re": ..., "im": ...} objects for complex values.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cfrac/cf.hpp"

namespace cfrac {

/// A parsed number literal, kept exact so that spec files round-trip.
class Literal {
public:
    struct ComplexParts {
        Rational re;
        Rational im;
        friend bool operator==(const ComplexParts&, const ComplexParts&) = default;
    };

    Literal(Rational x) : v_(std::move(x)) {} // NOLINT(google-explicit-constructor)
    Literal(QuadExt x);                       // NOLINT(google-explicit-constructor)
    Literal(ComplexParts x) : v_(std::move(x)) {} // NOLINT(google-explicit-constructor)

    static Literal from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    Tower tower() const noexcept;
    bool is_zero() const;

    Rational to_rational() const;
    QuadExt to_quadext() const;
    ComplexFloat to_complex(long precision_bits) const;

    template <class T>
    T as(long precision_bits) const;

    friend bool operator==(const Literal&, const Literal&) = default;

private:
    std::variant<Rational, QuadExt, ComplexParts> v_;
};

template <>
inline Rational Literal::as<Rational>(long) const { return to_rational(); }
template <>
inline QuadExt Literal::as<QuadExt>(long) const { return to_quadext(); }
template <>
inline ComplexFloat Literal::as<ComplexFloat>(long bits) const { return to_complex(bits); }

/// Exact value of a surd string such as "(1 + √5)/2", "-3√2/4", "2*sqrt(-3)", "5/7".
QuadExt parse_surd(std::string_view text);

/// Canonical literal text: the Rational/QuadExt str() form.
std::string canonical_text(const QuadExt& x);

enum class SpecMode { finite, periodic, generator };

std::string_view to_string(SpecMode m) noexcept;

struct GeneratorRef {
    std::string name;
    std::map<std::string, std::vector<Rational>> params;
};

struct SpecFile {
    SpecMode mode = SpecMode::finite;
    std::vector<Literal> a;
    std::vector<Literal> b;
    std::optional<long> period;
    std::optional<GeneratorRef> generator;
    Tower tower = Tower::Rational;
    long precision_bits = kDefaultPrecisionBits;
};

/// Parses and validates; errors are ParseError (with line/column for malformed JSON)
/// or InvalidArgument for arity/shape problems.
SpecFile parse_spec_file(std::string_view json_text);
SpecFile load_spec_file(const std::filesystem::path& path);

/// Canonical serialization; parse_spec_file(to_json(s).dump()) == s.
nlohmann::json to_json(const SpecFile& spec);

using AnySpec = std::variant<CFSpec<Rational>, CFSpec<QuadExt>, CFSpec<ComplexFloat>>;

/// Coefficient source in the spec's tower.
AnySpec build_spec(const SpecFile& spec);

/// The periodic block in tower T, for periodic files and periodic generators.
template <Field T>
std::optional<PeriodicCF<T>> periodic_block(const SpecFile& spec);

bool operator==(const SpecFile& l, const SpecFile& r);

} // namespace cfrac
