#include "cfrac/specfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cfrac {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

// Recursive-descent reader for surd literals.
//   value   := group ('/' integer)?
//   group   := '(' sum ')' | sum
//   sum     := sign? term (sign term)*
//   term    := integer ('*'? radical)? | radical
//   radical := ('√' | 'sqrt') (integer | '(' '-'? integer ')')
class SurdReader {
public:
    explicit SurdReader(std::string_view text) : s_(text) {}

    QuadExt read()
    {
        skip_ws();
        QuadExt v;
        if (peek() == '(' && !radical_ahead()) {
            ++i_;
            v = sum();
            expect(')');
        } else {
            v = sum();
        }
        skip_ws();
        if (peek() == '/') {
            ++i_;
            const Integer d = integer();
            if (d == 0) throw Error(ErrorKind::DivisionByZero, "surd literal with zero denominator");
            v /= QuadExt(Rational(d));
        }
        skip_ws();
        if (i_ != s_.size()) fail("unexpected trailing text");
        return v;
    }

private:
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        parse_fail("invalid number literal '" + std::string(s_) + "': " + why + " at offset " + std::to_string(i_));
    }

    void expect(char c)
    {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    bool radical_ahead() const { return s_.substr(i_).starts_with("√") || s_.substr(i_).starts_with("sqrt"); }

    Integer integer()
    {
        skip_ws();
        const std::size_t start = i_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        if (start == i_) fail("expected digits");
        return Integer(std::string(s_.substr(start, i_ - start)), 10);
    }

    Integer radicand()
    {
        if (s_.substr(i_).starts_with("√")) {
            i_ += std::string_view("√").size();
        } else {
            i_ += 4; // "sqrt"
        }
        skip_ws();
        if (peek() == '(') {
            ++i_;
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++i_;
            }
            Integer d = integer();
            expect(')');
            return neg ? Integer(-d) : d;
        }
        return integer();
    }

    QuadExt term()
    {
        skip_ws();
        if (radical_ahead()) return QuadExt::sqrt(Rational(radicand()));
        const Integer coeff = integer();
        skip_ws();
        bool star = false;
        if (peek() == '*') {
            star = true;
            ++i_;
            skip_ws();
        }
        if (radical_ahead()) return QuadExt(Rational(0), Rational(coeff), Rational(radicand()));
        if (star) fail("expected radical after '*'");
        return QuadExt(Rational(coeff));
    }

    QuadExt sum()
    {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
        }
        QuadExt acc = term();
        if (sign < 0) acc = -acc;
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') return acc;
            const bool minus = peek() == '-';
            ++i_;
            const QuadExt t = term();
            acc = minus ? acc - t : acc + t;
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

Rational rational_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    parse_fail(where + ": expected a rational literal string or integer");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Tower tower_from_string(const std::string& s)
{
    if (s == "rational") return Tower::Rational;
    if (s == "quadext") return Tower::QuadExt;
    if (s == "complex") return Tower::Complex;
    parse_fail("unknown tower '" + s + "' (expected rational, quadext or complex)");
}

std::vector<Literal> literal_list(const json& doc, const char* key)
{
    std::vector<Literal> out;
    if (!doc.contains(key)) return out;
    const json& arr = doc.at(key);
    if (!arr.is_array()) parse_fail(std::string("field '") + key + "' must be an array");
    for (const auto& item : arr) out.push_back(Literal::from_json(item));
    return out;
}

template <Field T>
std::vector<T> typed(const std::vector<Literal>& lits, long bits)
{
    std::vector<T> out;
    out.reserve(lits.size());
    for (const auto& l : lits) out.push_back(l.as<T>(bits));
    return out;
}

} // namespace

QuadExt parse_surd(std::string_view text)
{
    return SurdReader(text).read();
}

std::string canonical_text(const QuadExt& x) { return x.str(); }

// ---- Literal -----------------------------------------------------------------

Literal::Literal(QuadExt x)
{
    if (x.is_rational())
        v_ = x.rational_part();
    else
        v_ = std::move(x);
}

Literal Literal::from_json(const json& j)
{
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    if (j.is_number_float()) parse_fail("floating JSON number " + j.dump() + ": quote it as a string for exact parsing");
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im")) parse_fail("complex literal needs 're' and 'im'");
        return ComplexParts{rational_from_json(j.at("re"), "re"), rational_from_json(j.at("im"), "im")};
    }
    if (!j.is_string()) parse_fail("unsupported literal " + j.dump());
    const std::string s = j.get<std::string>();
    const bool surd = s.find("√") != std::string::npos || s.find("sqrt") != std::string::npos;
    if (!surd) return Rational::parse(s);
    return Literal(parse_surd(s));
}

json Literal::to_json() const
{
    if (const auto* r = std::get_if<Rational>(&v_)) return r->str();
    if (const auto* q = std::get_if<QuadExt>(&v_)) return q->str();
    const auto& c = std::get<ComplexParts>(v_);
    return json{{"re", c.re.str()}, {"im", c.im.str()}};
}

Tower Literal::tower() const noexcept { return static_cast<Tower>(v_.index()); }

bool Literal::is_zero() const
{
    if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
    if (const auto* q = std::get_if<QuadExt>(&v_)) return q->is_zero();
    const auto& c = std::get<ComplexParts>(v_);
    return c.re.is_zero() && c.im.is_zero();
}

Rational Literal::to_rational() const
{
    if (const auto* r = std::get_if<Rational>(&v_)) return *r;
    throw Error(ErrorKind::TowerMismatch, "literal is not rational");
}

QuadExt Literal::to_quadext() const
{
    if (const auto* r = std::get_if<Rational>(&v_)) return QuadExt(*r);
    if (const auto* q = std::get_if<QuadExt>(&v_)) return *q;
    throw Error(ErrorKind::TowerMismatch, "complex literal cannot be used in the quadext tower");
}

ComplexFloat Literal::to_complex(long bits) const
{
    if (const auto* r = std::get_if<Rational>(&v_)) return ComplexFloat(*r, bits);
    if (const auto* q = std::get_if<QuadExt>(&v_)) return ComplexFloat(*q, bits);
    const auto& c = std::get<ComplexParts>(v_);
    return ComplexFloat(c.re, c.im, bits);
}

// ---- SpecFile ----------------------------------------------------------------

std::string_view to_string(SpecMode m) noexcept
{
    switch (m) {
    case SpecMode::finite: return "finite";
    case SpecMode::periodic: return "periodic";
    case SpecMode::generator: return "generator";
    }
    return "?";
}

SpecFile parse_spec_file(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        parse_fail("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                   e.what());
    }
    if (!doc.is_object()) parse_fail("spec file must be a JSON object");
    static const std::vector<std::string> known{"mode", "a", "b", "period", "generator", "tower", "precision_bits"};
    for (const auto& [key, _] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) parse_fail("unknown field '" + key + "'");

    SpecFile spec;
    if (!doc.contains("mode") || !doc.at("mode").is_string()) parse_fail("field 'mode' is required");
    const std::string mode = doc.at("mode").get<std::string>();
    if (mode == "finite") spec.mode = SpecMode::finite;
    else if (mode == "periodic") spec.mode = SpecMode::periodic;
    else if (mode == "generator") spec.mode = SpecMode::generator;
    else parse_fail("unknown mode '" + mode + "'");

    spec.a = literal_list(doc, "a");
    spec.b = literal_list(doc, "b");
    if (doc.contains("period")) {
        if (!doc.at("period").is_number_integer()) parse_fail("field 'period' must be an integer");
        spec.period = doc.at("period").get<long>();
    }
    if (doc.contains("precision_bits")) {
        if (!doc.at("precision_bits").is_number_integer()) parse_fail("field 'precision_bits' must be an integer");
        spec.precision_bits = doc.at("precision_bits").get<long>();
        if (spec.precision_bits < kMinPrecisionBits)
            throw Error(ErrorKind::InvalidArgument,
                        "precision_bits must be at least " + std::to_string(kMinPrecisionBits));
    }

    Tower inferred = Tower::Rational;
    for (const auto* list : {&spec.a, &spec.b})
        for (const auto& l : *list) inferred = std::max(inferred, l.tower());
    spec.tower = inferred;
    if (doc.contains("tower")) {
        if (!doc.at("tower").is_string()) parse_fail("field 'tower' must be a string");
        const Tower requested = tower_from_string(doc.at("tower").get<std::string>());
        if (requested < inferred)
            throw Error(ErrorKind::TowerMismatch, "literals need the " + std::string(to_string(inferred)) +
                                                      " tower but the file requests " +
                                                      std::string(to_string(requested)));
        spec.tower = requested;
    }

    switch (spec.mode) {
    case SpecMode::finite:
        if (spec.b.size() != spec.a.size() + 1)
            throw Error(ErrorKind::InvalidArgument, "finite mode needs |b| = |a| + 1 (got |a| = " +
                                                        std::to_string(spec.a.size()) + ", |b| = " +
                                                        std::to_string(spec.b.size()) + ")");
        if (spec.period) throw Error(ErrorKind::InvalidArgument, "'period' only applies to periodic mode");
        break;
    case SpecMode::periodic: {
        const long p = spec.period.value_or(static_cast<long>(spec.a.size()));
        if (p < 1) throw Error(ErrorKind::InvalidArgument, "period must be >= 1");
        if (static_cast<long>(spec.a.size()) != p || static_cast<long>(spec.b.size()) != p)
            throw Error(ErrorKind::InvalidArgument, "periodic mode needs |a| = |b| = period = " + std::to_string(p));
        spec.period = p;
        for (const auto* list : {&spec.a, &spec.b})
            for (const auto& l : *list)
                if (l.is_zero()) throw Error(ErrorKind::InvalidArgument, "periodic coefficients must be nonzero");
        break;
    }
    case SpecMode::generator: {
        if (!doc.contains("generator") || !doc.at("generator").is_object())
            parse_fail("generator mode needs a 'generator' object");
        const json& g = doc.at("generator");
        if (!g.contains("name") || !g.at("name").is_string()) parse_fail("generator needs a 'name'");
        GeneratorRef ref;
        ref.name = g.at("name").get<std::string>();
        if (g.contains("params")) {
            if (!g.at("params").is_object()) parse_fail("generator 'params' must be an object");
            for (const auto& [key, value] : g.at("params").items()) {
                if (!value.is_array()) parse_fail("generator param '" + key + "' must be an array");
                std::vector<Rational> list;
                for (const auto& v : value) list.push_back(rational_from_json(v, "generator param " + key));
                ref.params.emplace(key, std::move(list));
            }
        }
        if (!spec.a.empty() || !spec.b.empty() || spec.period)
            throw Error(ErrorKind::InvalidArgument, "generator mode takes no 'a', 'b' or 'period'");
        if (spec.tower != Tower::Rational)
            throw Error(ErrorKind::TowerMismatch, "generators produce rational coefficients");
        make_generator(ref.name, ref.params); // validates the name and params
        spec.generator = std::move(ref);
        break;
    }
    }
    return spec;
}

SpecFile load_spec_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read spec file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_file(buf.str());
}

json to_json(const SpecFile& spec)
{
    json doc;
    doc["mode"] = std::string(to_string(spec.mode));
    if (spec.mode == SpecMode::generator) {
        json params = json::object();
        for (const auto& [key, list] : spec.generator->params) {
            json arr = json::array();
            for (const auto& r : list) arr.push_back(r.str());
            params[key] = arr;
        }
        doc["generator"] = json{{"name", spec.generator->name}, {"params", params}};
    } else {
        json a = json::array(), b = json::array();
        for (const auto& l : spec.a) a.push_back(l.to_json());
        for (const auto& l : spec.b) b.push_back(l.to_json());
        doc["a"] = a;
        doc["b"] = b;
        if (spec.mode == SpecMode::periodic) doc["period"] = *spec.period;
    }
    doc["tower"] = std::string(to_string(spec.tower));
    if (spec.tower == Tower::Complex) doc["precision_bits"] = spec.precision_bits;
    return doc;
}

AnySpec build_spec(const SpecFile& spec)
{
    if (spec.mode == SpecMode::generator) return make_generator(spec.generator->name, spec.generator->params);
    auto build = [&]<Field T>(std::type_identity<T>) -> AnySpec {
        if (spec.mode == SpecMode::periodic)
            return CFSpec<T>::periodic(PeriodicCF<T>(typed<T>(spec.a, spec.precision_bits),
                                                     typed<T>(spec.b, spec.precision_bits)));
        return CFSpec<T>::finite(typed<T>(spec.a, spec.precision_bits), typed<T>(spec.b, spec.precision_bits));
    };
    switch (spec.tower) {
    case Tower::Rational: return build(std::type_identity<Rational>{});
    case Tower::QuadExt: return build(std::type_identity<QuadExt>{});
    case Tower::Complex: return build(std::type_identity<ComplexFloat>{});
    }
    throw Error(ErrorKind::TowerMismatch, "unknown tower");
}

template <Field T>
std::optional<PeriodicCF<T>> periodic_block(const SpecFile& spec)
{
    if (spec.mode == SpecMode::periodic)
        return PeriodicCF<T>(typed<T>(spec.a, spec.precision_bits), typed<T>(spec.b, spec.precision_bits));
    if (spec.mode == SpecMode::generator) {
        const auto gen = make_generator(spec.generator->name, spec.generator->params).as_periodic();
        if (!gen) return std::nullopt;
        if constexpr (std::is_same_v<T, Rational>) {
            return gen;
        } else {
            std::vector<T> a, b;
            for (const auto& x : gen->a_block()) a.push_back(Literal(x).as<T>(spec.precision_bits));
            for (const auto& x : gen->b_block()) b.push_back(Literal(x).as<T>(spec.precision_bits));
            return PeriodicCF<T>(std::move(a), std::move(b));
        }
    }
    return std::nullopt;
}

template std::optional<PeriodicCF<Rational>> periodic_block<Rational>(const SpecFile&);
template std::optional<PeriodicCF<QuadExt>> periodic_block<QuadExt>(const SpecFile&);
template std::optional<PeriodicCF<ComplexFloat>> periodic_block<ComplexFloat>(const SpecFile&);

bool operator==(const SpecFile& l, const SpecFile& r)
{
    auto gen_eq = [](const std::optional<GeneratorRef>& x, const std::optional<GeneratorRef>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || (x->name == y->name && x->params == y->params);
    };
    return l.mode == r.mode && l.a == r.a && l.b == r.b && l.period == r.period && gen_eq(l.generator, r.generator) &&
           l.tower == r.tower && (l.tower != Tower::Complex || l.precision_bits == r.precision_bits);
}

} // namespace cfrac
