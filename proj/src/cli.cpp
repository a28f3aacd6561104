#include "cfrac/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfrac/continuant.hpp"
#include "cfrac/periodic.hpp"
#include "cfrac/specfile.hpp"
#include "cfrac/tietze.hpp"

namespace cfrac::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Failure that maps straight to an exit code, bypassing the error-kind table.
struct Exit {
    int code;
    std::string message;
};

struct Context {
    bool json = false;
    std::optional<long> precision;
    std::ostream& out;
    std::ostream& err;

    long bits(const SpecFile& spec) const { return precision.value_or(spec.precision_bits); }
    long bits() const { return precision.value_or(kDefaultPrecisionBits); }
};

int digits_for(long bits)
{
    return std::max(6, static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120)) - 2);
}

std::optional<std::string> exact_text(const Rational& x) { return x.str(); }
std::optional<std::string> exact_text(const QuadExt& x) { return x.str(); }
std::optional<std::string> exact_text(const ComplexFloat&) { return std::nullopt; }

std::string float_text(const Rational& x, long bits) { return BigFloat(x, bits).str(digits_for(bits)); }
std::string float_text(const QuadExt& x, long bits) { return ComplexFloat(x, bits).str(digits_for(bits)); }
std::string float_text(const ComplexFloat& x, long bits) { return x.str(digits_for(bits)); }

template <class T>
std::string display(const T& x, long bits)
{
    if (auto e = exact_text(x)) return *e;
    return float_text(x, bits);
}

template <class T>
ojson opt_json(const std::optional<T>& v)
{
    return v ? ojson(*v) : ojson(nullptr);
}

// The machine-readable document and the text lines are built side by side.
class Report {
public:
    Report(std::string command, ojson args)
    {
        doc_["command"] = std::move(command);
        doc_["args"] = std::move(args);
        doc_["exact_values"] = ojson::object();
        doc_["float_values"] = ojson::object();
        doc_["diagnostics"] = ojson::array();
    }

    ojson& operator[](const char* key) { return doc_[key]; }

    template <class T>
    void value(const std::string& key, const T& x, long bits)
    {
        doc_["exact_values"][key] = opt_json(exact_text(x));
        doc_["float_values"][key] = float_text(x, bits);
    }

    void no_value(const std::string& key)
    {
        doc_["exact_values"][key] = nullptr;
        doc_["float_values"][key] = nullptr;
    }

    void diagnostic(std::string note)
    {
        doc_["diagnostics"].push_back(note);
        notes_.push_back(std::move(note));
    }

    void line(std::string text) { lines_.push_back(std::move(text)); }

    void emit(const Context& ctx) const
    {
        if (ctx.json) {
            ctx.out << doc_.dump(2) << '\n';
            return;
        }
        for (const auto& l : lines_) ctx.out << l << '\n';
        for (const auto& n : notes_) ctx.err << "note: " << n << '\n';
    }

private:
    ojson doc_;
    std::vector<std::string> lines_;
    std::vector<std::string> notes_;
};

SpecFile load(const Context& ctx, const std::string& path)
{
    SpecFile spec;
    try {
        spec = load_spec_file(path);
    } catch (const Error& e) {
        throw Exit{kExitUsage, std::string(to_string(e.kind())) + ": " + path + ": " + e.what()};
    }
    if (ctx.precision) spec.precision_bits = *ctx.precision;
    return spec;
}

std::vector<Literal> parse_list(const std::string& text, const char* what)
{
    std::vector<Literal> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) throw Exit{kExitUsage, std::string("empty entry in ") + what};
        item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
        try {
            out.push_back(Literal::from_json(item));
        } catch (const Error& e) {
            throw Exit{kExitUsage, std::string(what) + ": " + e.what()};
        }
    }
    return out;
}

Literal parse_literal(const std::string& text, const char* what)
{
    auto list = parse_list(text, what);
    if (list.size() != 1) throw Exit{kExitUsage, std::string(what) + " must be a single number"};
    return list.front();
}

// Runs `f` on the periodic block in a classifiable tower. Quadratic coefficients
// are evaluated in the complex tower.
template <class F>
void with_periodic(const SpecFile& spec, const char* command, Report& report, F&& f)
{
    if (spec.mode == SpecMode::finite) throw Exit{kExitNotPeriodic, std::string(command) + " needs a periodic spec (mode is finite)"};
    auto missing = [&] {
        return Exit{kExitNotPeriodic, "generator '" + spec.generator->name + "' is not purely periodic"};
    };
    switch (spec.tower) {
    case Tower::Rational: {
        auto p = periodic_block<Rational>(spec);
        if (!p) throw missing();
        f(*p);
        return;
    }
    case Tower::QuadExt: {
        auto p = periodic_block<QuadExt>(spec);
        if (!p) throw missing();
        report.diagnostic("quadratic coefficients classified in the complex tower at " +
                          std::to_string(spec.precision_bits) + " bits");
        f(to_complex(*p, spec.precision_bits));
        return;
    }
    case Tower::Complex: {
        auto p = periodic_block<ComplexFloat>(spec);
        if (!p) throw missing();
        f(*p);
        return;
    }
    }
}

template <class T>
ojson matrix_json(const PeriodMatrix<T>& m, long bits)
{
    return ojson{{"m11", display(m.m11, bits)}, {"m12", display(m.m12, bits)}, {"m21", display(m.m21, bits)},
                 {"m22", display(m.m22, bits)}, {"trace", display(m.trace, bits)}, {"det", display(m.det, bits)}};
}

template <class T>
std::string matrix_text(const PeriodMatrix<T>& m, long bits)
{
    return "M = [[" + display(m.m11, bits) + ", " + display(m.m12, bits) + "], [" + display(m.m21, bits) + ", " +
           display(m.m22, bits) + "]], trace = " + display(m.trace, bits) + ", det = " + display(m.det, bits);
}

template <class E>
ojson eigen_json(const std::optional<EigenSplit<E>>& eig, long bits)
{
    if (!eig) return nullptr;
    auto opt = [&](const std::optional<E>& x) { return x ? ojson(display(*x, bits)) : ojson(nullptr); };
    return ojson{{"lambda1", display(eig->lambda1, bits)},
                 {"lambda2", display(eig->lambda2, bits)},
                 {"relation", std::string(to_string(eig->relation))},
                 {"x1", opt(eig->x1)},
                 {"x2", opt(eig->x2)}};
}

template <class E>
std::string verdict_text(const Verdict<E>& v, const std::optional<EigenSplit<E>>& eig, long bits)
{
    switch (v.kind) {
    case VerdictKind::Convergent: {
        std::string s = "Convergent, limit = " + display(*v.limit, bits);
        if (eig && eig->relation == ModulusRelation::equal_repeated) s += " (C1: repeated eigenvalue)";
        return s;
    }
    case VerdictKind::DivergentZeroDenominator: return "DivergentZeroDenominator, B(p-1) = 0";
    case VerdictKind::DivergentEqualModulus: return "DivergentEqualModulus, |λ₁| = |λ₂|, λ₁ ≠ λ₂";
    case VerdictKind::DivergentThiele:
        return "DivergentThiele q=" + std::to_string(v.thiele_q) + ", x₁=" + display(*eig->x1, bits) +
               ", x₂=" + display(*v.sublimit_x2, bits);
    }
    return "?";
}

template <class E>
ojson verdict_json(const Verdict<E>& v, long bits)
{
    return ojson{{"kind", std::string(to_string(v.kind))},
                 {"limit", v.limit ? ojson(display(*v.limit, bits)) : ojson(nullptr)},
                 {"thiele_q", v.thiele_q >= 0 ? ojson(v.thiele_q) : ojson(nullptr)},
                 {"sublimit_x2", v.sublimit_x2 ? ojson(display(*v.sublimit_x2, bits)) : ojson(nullptr)}};
}

template <class T>
ojson stolz_json(const StolzReport<T>& r, long bits)
{
    return ojson{{"matrix", matrix_json(r.matrix, bits)},
                 {"eigen", eigen_json(r.eigen, bits)},
                 {"verdict", verdict_json(r.verdict, bits)}};
}

// ---- commands ----------------------------------------------------------------

struct EvalArgs {
    std::string spec;
    long n = 0;
};

int cmd_eval(const Context& ctx, const EvalArgs& args)
{
    if (args.n < 0) throw Exit{kExitUsage, "--n must be >= 0"};
    if (args.n > kMaxEvalIndex)
        throw Exit{kExitUsage, "--n exceeds the cap of " + std::to_string(kMaxEvalIndex) +
                                   " (exact entries grow linearly in bit size with n)"};
    const SpecFile file = load(ctx, args.spec);
    const long bits = ctx.bits(file);
    Report report("eval", ojson{{"spec", args.spec}, {"n", args.n}});
    report["n"] = args.n;
    std::visit(
        [&]<class T>(const CFSpec<T>& spec) {
            const auto row = convergent_table(spec, args.n).back();
            if (is_zero(row.B))
                throw Error(ErrorKind::ZeroDenominator, "B(" + std::to_string(args.n) + ") = 0", args.n);
            const T value = row.A / row.B;
            report["A"] = display(row.A, bits);
            report["B"] = display(row.B, bits);
            report["value"] = display(value, bits);
            report.value("A", row.A, bits);
            report.value("B", row.B, bits);
            report.value("value", value, bits);
            const std::string idx = std::to_string(args.n);
            report.line("A(" + idx + ") = " + display(row.A, bits));
            report.line("B(" + idx + ") = " + display(row.B, bits));
            std::string v = "A(" + idx + ")/B(" + idx + ") = " + display(value, bits);
            if (exact_text(value)) v += " ≈ " + float_text(value, bits);
            report.line(v);
        },
        build_spec(file));
    report.emit(ctx);
    return kExitOk;
}

struct ContinuantCliArgs {
    std::string a;
    std::string b;
    bool oracle = false;
};

template <Field T>
int continuant_report(const Context& ctx, Report& report, const ContinuantArgs<T>& args)
{
    const long bits = ctx.bits();
    const T value = continuant(args);
    report["order"] = args.order();
    report["value"] = display(value, bits);
    report.value("value", value, bits);
    report.line("K = " + display(value, bits));
    report["first_column"] = nullptr;
    report["oracle_value"] = nullptr;
    report["agreement"] = nullptr;
    report.no_value("oracle_value");
    if (args.order() >= 2) {
        const T first = first_column_expansion(args);
        report["first_column"] = display(first, bits);
        if (!(first == value)) report.diagnostic("first-column expansion gives " + display(first, bits));
    }
    bool agree = true;
    if (report["args"]["oracle"].get<bool>()) {
        const T det = continuant_oracle(args);
        agree = det == value;
        if (args.order() >= 2) agree = agree && first_column_expansion(args) == value;
        report["oracle_value"] = display(det, bits);
        report["agreement"] = agree;
        report.value("oracle_value", det, bits);
        report.line("determinant = " + display(det, bits));
        report.line(std::string("agreement = ") + (agree ? "true" : "false"));
    }
    report.emit(ctx);
    if (!agree) {
        ctx.err << "error: determinant oracle disagrees with the recurrence\n";
        return kExitOracleMismatch;
    }
    return kExitOk;
}

int cmd_continuant(const Context& ctx, const ContinuantCliArgs& args)
{
    const auto a = parse_list(args.a, "--a");
    const auto b = parse_list(args.b, "--b");
    if (b.size() != a.size() + 1)
        throw Exit{kExitUsage, "need |b| = |a| + 1 (got |a| = " + std::to_string(a.size()) +
                                   ", |b| = " + std::to_string(b.size()) + ")"};
    Report report("continuant", ojson{{"a", args.a}, {"b", args.b}, {"oracle", args.oracle}});
    Tower tower = Tower::Rational;
    for (const auto* list : {&a, &b})
        for (const auto& l : *list) tower = std::max(tower, l.tower());
    auto typed = [&]<class T>(std::type_identity<T>) {
        ContinuantArgs<T> out;
        for (const auto& l : a) out.a.push_back(l.as<T>(ctx.bits()));
        for (const auto& l : b) out.b.push_back(l.as<T>(ctx.bits()));
        return out;
    };
    switch (tower) {
    case Tower::Rational: return continuant_report(ctx, report, typed(std::type_identity<Rational>{}));
    case Tower::QuadExt: return continuant_report(ctx, report, typed(std::type_identity<QuadExt>{}));
    case Tower::Complex: return continuant_report(ctx, report, typed(std::type_identity<ComplexFloat>{}));
    }
    return kExitOk;
}

struct TietzeCliArgs {
    std::string spec;
    std::string eps;
    long max_terms = 1'000'000;
    long check = 10'000;
    long certify = 0;
};

int cmd_tietze(const Context& ctx, const TietzeCliArgs& args)
{
    Rational eps;
    try {
        eps = Rational::parse(args.eps);
    } catch (const Error& e) {
        throw Exit{kExitUsage, std::string("--eps: ") + e.what()};
    }
    if (eps.sign() <= 0) throw Exit{kExitUsage, "--eps must be positive"};
    const SpecFile file = load(ctx, args.spec);
    if (file.tower != Tower::Rational)
        throw Error(ErrorKind::TowerMismatch, "tietze needs rational coefficients, spec is in the " +
                                                  std::string(to_string(file.tower)) + " tower");
    const long bits = ctx.bits(file);
    const auto spec = std::get<CFSpec<Rational>>(build_spec(file));

    long span = args.check;
    if (const auto last = spec.last_index()) span = *last;
    else if (const auto p = spec.as_periodic()) span = p->period() + 1;

    Report report("tietze", ojson{{"spec", args.spec},
                                  {"eps", args.eps},
                                  {"max_terms", args.max_terms},
                                  {"check", args.check},
                                  {"certify", args.certify}});
    const auto sr = validate_semiregular(spec, span);
    ojson violation = nullptr;
    std::string violation_text;
    if (sr.first_violation) {
        violation_text = std::string(to_string(sr.first_violation->which)) + " at n=" +
                         std::to_string(sr.first_violation->n);
        violation = ojson{{"n", sr.first_violation->n}, {"which", std::string(to_string(sr.first_violation->which))}};
    }
    report["semi_regular"] = ojson{{"valid", sr.valid}, {"first_violation", violation}, {"checked_up_to", sr.checked_up_to}};
    report["value"] = nullptr;
    report["n_used"] = nullptr;
    report["error_bound"] = nullptr;
    report["certificate"] = nullptr;
    if (!sr.valid) {
        report.no_value("value");
        report.no_value("error_bound");
        report.line("semi-regular: no (" + violation_text + ")");
        report.emit(ctx);
        ctx.err << "error: not semi-regular: " << violation_text << '\n';
        return kExitNotSemiRegular;
    }
    report.line("semi-regular: yes (checked n = 1.." + std::to_string(sr.checked_up_to) + ")");

    BoundedValue result;
    try {
        result = evaluate_tietze(spec, eps, TietzeOptions{args.max_terms, {}});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CoefficientUnavailable || !spec.last_index()) throw;
        const long last = *spec.last_index();
        result = {evaluate_convergent(spec, last), last, Rational(0)};
        report.diagnostic("finite fraction ends before the bound drops below eps; value is exact");
    }
    report["value"] = result.value.str();
    report["n_used"] = result.n_used;
    report["error_bound"] = result.error_bound.str();
    report.value("value", result.value, bits);
    report.value("error_bound", result.error_bound, bits);
    report.line("value = " + result.value.str() + " ≈ " + float_text(result.value, bits));
    report.line("error bound = " + result.error_bound.str() + " ≈ " + float_text(result.error_bound, 64) +
                " (n = " + std::to_string(result.n_used) + ")");

    if (args.certify > 0) {
        long upto = args.certify;
        if (const auto last = spec.last_index()) upto = std::min(upto, *last);
        const auto bounds = denominator_bounds_certificate(spec, upto);
        long plus = 0;
        for (const auto& b : bounds) plus += b.bound_type == BoundCase::plus_case;
        report["certificate"] = ojson{{"checked_up_to", upto},
                                      {"bounds", static_cast<long>(bounds.size())},
                                      {"plus_case", plus},
                                      {"minus_case", static_cast<long>(bounds.size()) - plus}};
        report.line("denominator bounds certified for k = 1.." + std::to_string(upto) + " (" + std::to_string(plus) +
                    " plus, " + std::to_string(static_cast<long>(bounds.size()) - plus) + " minus)");
    }
    report.emit(ctx);
    return kExitOk;
}

struct SpecOnlyArgs {
    std::string spec;
};

ClassifyOptions classify_options(long bits)
{
    ClassifyOptions o;
    o.precision_bits = bits;
    return o;
}

template <class T>
void record_stolz(Report& report, const StolzReport<T>& r, long bits)
{
    report["period"] = nullptr;
    report["matrix"] = matrix_json(r.matrix, bits);
    report["eigen"] = eigen_json(r.eigen, bits);
    report["verdict"] = verdict_json(r.verdict, bits);
    report.value("trace", r.matrix.trace, bits);
    report.value("det", r.matrix.det, bits);
    if (r.eigen) {
        report.value("lambda1", r.eigen->lambda1, bits);
        report.value("lambda2", r.eigen->lambda2, bits);
    } else {
        report.no_value("lambda1");
        report.no_value("lambda2");
    }
    auto opt_value = [&](const char* key, const auto& x) {
        if (x) report.value(key, *x, bits);
        else report.no_value(key);
    };
    opt_value("x1", r.eigen ? r.eigen->x1 : std::nullopt);
    opt_value("x2", r.eigen ? r.eigen->x2 : std::nullopt);
    opt_value("limit", r.verdict.limit);
}

int cmd_classify(const Context& ctx, const SpecOnlyArgs& args)
{
    const SpecFile file = load(ctx, args.spec);
    const long bits = ctx.bits(file);
    Report report("classify", ojson{{"spec", args.spec}});
    with_periodic(file, "classify", report, [&]<class T>(const PeriodicCF<T>& pcf) {
        const auto r = classify(pcf, classify_options(bits));
        report["tower"] = std::string(to_string(std::is_same_v<T, Rational> ? Tower::Rational : Tower::Complex));
        record_stolz(report, r, bits);
        report["period"] = pcf.period();
        report.line(verdict_text(r.verdict, r.eigen, bits));
        report.line(matrix_text(r.matrix, bits));
        if (r.eigen) {
            report.line("λ₁ = " + display(r.eigen->lambda1, bits) + ", λ₂ = " + display(r.eigen->lambda2, bits) +
                        " (" + std::string(to_string(r.eigen->relation)) + ")");
            if (r.eigen->x1)
                report.line("x₁ = " + display(*r.eigen->x1, bits) + ", x₂ = " + display(*r.eigen->x2, bits));
        }
    });
    report.emit(ctx);
    return kExitOk;
}

int cmd_reverse(const Context& ctx, const SpecOnlyArgs& args)
{
    const SpecFile file = load(ctx, args.spec);
    if (file.mode == SpecMode::finite) throw Exit{kExitNotPeriodic, "reverse needs a periodic spec (mode is finite)"};
    std::vector<Literal> a = file.a, b = file.b;
    if (file.mode == SpecMode::generator) {
        const auto p = periodic_block<Rational>(file);
        if (!p) throw Exit{kExitNotPeriodic, "generator '" + file.generator->name + "' is not purely periodic"};
        a.assign(p->a_block().begin(), p->a_block().end());
        b.assign(p->b_block().begin(), p->b_block().end());
    }
    // Reverse a block of position labels, then read the literals back through it.
    std::vector<Rational> labels;
    for (std::size_t i = 1; i <= a.size(); ++i) labels.emplace_back(static_cast<long>(i));
    const auto rev = reverse_period(PeriodicCF<Rational>(labels, labels));
    SpecFile out;
    out.mode = SpecMode::periodic;
    out.period = static_cast<long>(a.size());
    out.tower = file.tower;
    out.precision_bits = file.precision_bits;
    for (const auto& l : rev.a_block()) out.a.push_back(a[l.num().get_ui() - 1]);
    for (const auto& l : rev.b_block()) out.b.push_back(b[l.num().get_ui() - 1]);
    const auto doc = ojson::parse(to_json(out).dump());
    if (ctx.json) {
        Report report("reverse", ojson{{"spec", args.spec}});
        report["spec"] = doc;
        report.emit(ctx);
    } else {
        ctx.out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_galois(const Context& ctx, const SpecOnlyArgs& args)
{
    const SpecFile file = load(ctx, args.spec);
    const long bits = ctx.bits(file);
    Report report("galois", ojson{{"spec", args.spec}});
    bool holds = true;
    with_periodic(file, "galois", report, [&]<class T>(const PeriodicCF<T>& pcf) {
        const auto g = galois_analysis(pcf, classify_options(bits));
        holds = g.relation_holds;
        report["alpha"] = stolz_json(g.alpha, bits);
        report["alpha_prime"] = stolz_json(g.alpha_prime, bits);
        report["prediction_applies"] = g.prediction_applies;
        report["predicted"] = g.predicted ? verdict_json(*g.predicted, bits) : ojson(nullptr);
        report["relation_holds"] = g.relation_holds;
        report["conjugate"] = nullptr;
        report.line("α:  " + verdict_text(g.alpha.verdict, g.alpha.eigen, bits));
        report.line("α′: " + verdict_text(g.alpha_prime.verdict, g.alpha_prime.eigen, bits));
        if (g.predicted) {
            report.line("predicted α′: " + verdict_text(*g.predicted, g.alpha_prime.eigen, bits));
            report.line(std::string("relation holds: ") + (g.relation_holds ? "yes" : "no"));
        } else {
            report.line("α diverges; no prediction for α′");
        }
        auto opt_value = [&](const char* key, const auto& x) {
            if (x) report.value(key, *x, bits);
            else report.no_value(key);
        };
        opt_value("alpha", g.alpha.verdict.limit);
        opt_value("alpha_prime", g.alpha_prime.verdict.limit);
        report.no_value("conjugate");
        report.no_value("special_limit");
        if constexpr (std::is_same_v<T, Rational>) {
            if (g.alpha.verdict.kind != VerdictKind::Convergent) return;
            try {
                const auto c = conjugate_check(pcf);
                report["conjugate"] = ojson{{"alpha", c.alpha.str()},
                                            {"conjugate", c.conjugate.str()},
                                            {"alpha_prime", c.alpha_prime.str()},
                                            {"special_form", std::string(to_string(c.special_form))},
                                            {"special_limit", c.special_limit ? ojson(c.special_limit->str()) : ojson(nullptr)},
                                            {"identity_verified", c.identity_verified}};
                report.value("conjugate", c.conjugate, bits);
                opt_value("special_limit", c.special_limit);
                report.line("α* = " + c.conjugate.str());
                report.line(std::string("α′ − b₀ = −α*: ") + (c.identity_verified ? "verified" : "FAILED"));
                if (c.special_form == SpecialForm::galois_regular)
                    report.line("regular: −1/α* = " + c.special_limit->str() + " (reversed fraction)");
                else if (c.special_form == SpecialForm::mobius_negative)
                    report.line("negative: 1/α* = " + c.special_limit->str() + " (reversed fraction)");
                holds = holds && c.identity_verified;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotIrrational && e.kind() != ErrorKind::InvalidArgument) throw;
                report.diagnostic(std::string("conjugate check skipped: ") + e.what());
            }
        }
    });
    report.emit(ctx);
    if (!holds) {
        ctx.err << "error: CertificateFailure: reverse-period relation does not hold\n";
        return kExitModuleError;
    }
    return kExitOk;
}

struct PowerIterArgs {
    std::string spec;
    std::string matrix;
    std::string u0 = "1";
    std::string v0 = "0";
    long steps = 10;
};

template <ClassifiableField T>
void power_report(Report& report, const PeriodMatrix<T>& m, const PowerIterArgs& args, long bits)
{
    using E = eigen_t<T>;
    const Literal u0 = parse_literal(args.u0, "--u0");
    const Literal v0 = parse_literal(args.v0, "--v0");
    const E u = u0.as<E>(bits);
    const E v = v0.as<E>(bits);
    const auto opts = classify_options(bits);
    const auto eig = eigen_split(m, opts);
    const auto traj = power_iterate(m, u, v, args.steps, opts);
    report["matrix"] = matrix_json(m, bits);
    report["eigen"] = eigen_json(std::optional(eig), bits);
    report["case"] = std::string(to_string(traj.power_case));
    report["mu1"] = display(traj.mu1, bits);
    report["mu2"] = display(traj.mu2, bits);
    report.value("mu1", traj.mu1, bits);
    report.value("mu2", traj.mu2, bits);
    ojson steps = ojson::array();
    report.line(matrix_text(m, bits));
    report.line("λ₁ = " + display(eig.lambda1, bits) + ", λ₂ = " + display(eig.lambda2, bits) + " (" +
                std::string(to_string(eig.relation)) + ")");
    report.line("μ₁ = " + display(traj.mu1, bits) + ", μ₂ = " + display(traj.mu2, bits) + ", case " +
                std::string(to_string(traj.power_case)));
    report.line("n\tu\tv\tu/v");
    for (const auto& s : traj.steps) {
        const std::string ratio = s.ratio ? display(*s.ratio, bits) : "undefined";
        steps.push_back(ojson{{"n", s.n},
                              {"u", display(s.u, bits)},
                              {"v", display(s.v, bits)},
                              {"ratio", s.ratio ? ojson(ratio) : ojson(nullptr)}});
        report.line(std::to_string(s.n) + "\t" + display(s.u, bits) + "\t" + display(s.v, bits) + "\t" + ratio);
    }
    report["steps"] = steps;
}

int cmd_power_iter(const Context& ctx, const PowerIterArgs& args)
{
    if (args.spec.empty() == args.matrix.empty()) throw Exit{kExitUsage, "give either a spec file or --matrix"};
    if (args.steps < 0 || args.steps > 100'000) throw Exit{kExitUsage, "--steps must be in 0..100000"};
    Report report("power-iter", ojson{{"spec", args.spec.empty() ? ojson(nullptr) : ojson(args.spec)},
                                      {"matrix", args.matrix.empty() ? ojson(nullptr) : ojson(args.matrix)},
                                      {"u0", args.u0},
                                      {"v0", args.v0},
                                      {"steps", args.steps}});
    if (!args.spec.empty()) {
        const SpecFile file = load(ctx, args.spec);
        const long bits = ctx.bits(file);
        with_periodic(file, "power-iter", report, [&]<class T>(const PeriodicCF<T>& pcf) {
            power_report(report, build_period_matrix(pcf), args, bits);
        });
    } else {
        const auto entries = parse_list(args.matrix, "--matrix");
        if (entries.size() != 4) throw Exit{kExitUsage, "--matrix takes four entries m11,m12,m21,m22"};
        Tower tower = Tower::Rational;
        for (const auto& l : entries) tower = std::max(tower, l.tower());
        const long bits = ctx.bits();
        if (tower == Tower::Rational) {
            power_report(report,
                         PeriodMatrix<Rational>::from_entries(entries[0].to_rational(), entries[1].to_rational(),
                                                              entries[2].to_rational(), entries[3].to_rational()),
                         args, bits);
        } else {
            power_report(report,
                         PeriodMatrix<ComplexFloat>::from_entries(entries[0].to_complex(bits), entries[1].to_complex(bits),
                                                                  entries[2].to_complex(bits), entries[3].to_complex(bits)),
                         args, bits);
        }
    }
    report.emit(ctx);
    return kExitOk;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ZeroDenominator: return kExitZeroDenominator;
    case ErrorKind::ParseError: return kExitUsage;
    default: return kExitModuleError;
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact continued-fraction analysis", "cfrac"};
    app.require_subcommand(1);
    Context ctx{false, std::nullopt, out, err};
    long precision = 0;
    app.add_flag("--json", ctx.json, "Emit a JSON report");
    auto* precision_opt = app.add_option("--precision", precision, "Working precision in bits for complex values")
                              ->check(CLI::Range(kMinPrecisionBits, 1L << 20));

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Convergent A(n)/B(n)");
    eval_cmd->add_option("spec", eval.spec, "Spec file")->required();
    eval_cmd->add_option("--n", eval.n, "Convergent index")->required();

    ContinuantCliArgs cont;
    auto* cont_cmd = app.add_subcommand("continuant", "Continuant K(a1..an; b0..bn)");
    cont_cmd->add_option("--a", cont.a, "Comma-separated a1..an");
    cont_cmd->add_option("--b", cont.b, "Comma-separated b0..bn")->required();
    cont_cmd->add_flag("--oracle", cont.oracle, "Cross-check against the determinant expansion");

    TietzeCliArgs tz;
    auto* tz_cmd = app.add_subcommand("tietze", "Certified evaluation of a semi-regular fraction");
    tz_cmd->add_option("spec", tz.spec, "Spec file")->required();
    tz_cmd->add_option("--eps", tz.eps, "Error tolerance (exact rational or decimal)")->required();
    tz_cmd->add_option("--max-terms", tz.max_terms, "Iteration cap")->check(CLI::PositiveNumber);
    tz_cmd->add_option("--check", tz.check, "Indices validated for generator specs")->check(CLI::PositiveNumber);
    tz_cmd->add_option("--certify", tz.certify, "Verify denominator bounds up to this index");

    SpecOnlyArgs cls, rev, gal;
    auto* cls_cmd = app.add_subcommand("classify", "Classify a purely periodic fraction");
    cls_cmd->add_option("spec", cls.spec, "Spec file")->required();
    auto* rev_cmd = app.add_subcommand("reverse", "Print the spec of the reversed period");
    rev_cmd->add_option("spec", rev.spec, "Spec file")->required();
    auto* gal_cmd = app.add_subcommand("galois", "Reverse-period and conjugate analysis");
    gal_cmd->add_option("spec", gal.spec, "Spec file")->required();

    PowerIterArgs pw;
    auto* pw_cmd = app.add_subcommand("power-iter", "Exact power iteration of a 2x2 matrix");
    pw_cmd->add_option("spec", pw.spec, "Spec file (periodic)");
    pw_cmd->add_option("--matrix", pw.matrix, "m11,m12,m21,m22");
    pw_cmd->add_option("--u0", pw.u0, "Start vector, first entry");
    pw_cmd->add_option("--v0", pw.v0, "Start vector, second entry");
    pw_cmd->add_option("--steps", pw.steps, "Number of steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (*precision_opt) ctx.precision = precision;

    try {
        if (*eval_cmd) return cmd_eval(ctx, eval);
        if (*cont_cmd) return cmd_continuant(ctx, cont);
        if (*tz_cmd) return cmd_tietze(ctx, tz);
        if (*cls_cmd) return cmd_classify(ctx, cls);
        if (*rev_cmd) return cmd_reverse(ctx, rev);
        if (*gal_cmd) return cmd_galois(ctx, gal);
        if (*pw_cmd) return cmd_power_iter(ctx, pw);
    } catch (const Exit& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what();
        if (e.has_index()) err << " (index " << e.index() << ")";
        err << '\n';
        return exit_code_for(e.kind());
    }
    return kExitUsage;
}

} // namespace cfrac::cli
