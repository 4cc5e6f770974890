#include "ramify/norm_filtration.hpp"

#include <cctype>
#include <tuple>

#include "ramify/errors.hpp"
#include "ramify/prime_field.hpp"

namespace ramify {

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::Unramified: return "unramified";
        case StepKind::ConstantTotallyRamified: return "constant";
        case StepKind::FierceDegreeP: return "fierce";
    }
    return "?";
}

StepKind parse_step_kind(std::string_view text) {
    if (text == "unramified") return StepKind::Unramified;
    if (text == "constant") return StepKind::ConstantTotallyRamified;
    if (text == "fierce") return StepKind::FierceDegreeP;
    throw ParseError("unknown step kind '" + std::string(text) + "'");
}

namespace {

void validate(const ExtStep& step) {
    if (!is_prime(step.p)) throw DomainError("step degree must be prime");
    if (step.kind == StepKind::FierceDegreeP) {
        if (!step.jump) throw DomainError("a fierce step needs a jump");
        if (!step.jump->is_pair()) throw DomainError("a fierce step's jump must be a pair");
    }
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(std::string_view text, char sep) {
    std::vector<std::string> parts(1);
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0)
            parts.emplace_back();
        else
            parts.back().push_back(c);
    }
    return parts;
}

}  // namespace

NormIndexResult norm_image_index(const IndexPair& alpha, const ExtStep& step) {
    validate(step);
    if (alpha.second <= 0) throw DomainError("alpha needs a positive second coordinate");
    NormIndexResult r{alpha, {step}, alpha, 0, true};
    if (step.kind != StepKind::FierceDegreeP) return r;
    const IndexPair& h = step.jump->as_pair();
    if (RamIndex2(alpha) > RamIndex2(h)) {
        r.target = shift_index(alpha, h * Rational(step.p - 1));
    } else {
        r.target = alpha * Rational(step.p);
        r.cofactor_exponent = 1;
    }
    return r;
}

HerbrandFn step_phi(const ExtStep& step) {
    validate(step);
    if (step.kind != StepKind::FierceDegreeP) return HerbrandFn::identity(HerbrandMode::A2);
    const IndexPair& h = step.jump->as_pair();
    const Rational p(step.p);
    return HerbrandFn::from_segments(HerbrandMode::A2, {}, {CSegment{1, 0}}, {*step.jump},
                                     {ISegment{p, 0, 0}, ISegment{1, (p - 1) * h.first, (p - 1) * h.second}});
}

NormIndexResult tower_norm_index(const IndexPair& alpha, const std::vector<ExtStep>& steps) {
    if (alpha.second <= 0) throw DomainError("alpha needs a positive second coordinate");
    NormIndexResult r{alpha, steps, alpha, 0, true};
    HerbrandFn composed = HerbrandFn::identity(HerbrandMode::A2);
    std::int64_t p = 0;
    for (const auto& step : steps) {
        if (p != 0 && step.p != p) throw DomainError("all steps of a tower must share p");
        p = step.p;
        NormIndexResult one = norm_image_index(r.target, step);
        r.target = one.target;
        r.cofactor_exponent += one.cofactor_exponent;
        composed = compose(step_phi(step), composed);
    }
    if (steps.empty()) return r;

    const RamIndex2 predicted = composed.eval(alpha);
    Rational power(1);
    for (int k = 0; k < r.cofactor_exponent; ++k) power *= p;
    if (!(predicted == RamIndex2(r.target)))
        throw ConsistencyError("fold target " + to_string(r.target) + " differs from composed Phi value " +
                               to_string(predicted));
    if (composed.slope_at(alpha) != power)
        throw ConsistencyError("fold index p^" + std::to_string(r.cofactor_exponent) + " differs from composed slope " +
                               to_string(composed.slope_at(alpha)));
    r.phi_check = true;
    return r;
}

std::string to_string(const ExtStep& step) {
    std::string s = to_string(step.kind) + ":p=" + std::to_string(step.p);
    if (step.jump) s += ",h=" + to_string(*step.jump);
    return s;
}

std::vector<ExtStep> parse_steps(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    std::vector<ExtStep> steps;
    if (compact.empty()) return steps;
    for (const auto& part : split_top(compact, ';')) {
        if (part.empty()) continue;
        auto colon = part.find(':');
        ExtStep step;
        step.kind = parse_step_kind(part.substr(0, colon));
        if (colon != std::string::npos) {
            for (const auto& kv : split_top(part.substr(colon + 1), ',')) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw ParseError("expected key=value in step '" + part + "'");
                std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
                if (key == "p") {
                    Rational v = parse_rational(value);
                    if (v.denominator() != 1) throw ParseError("p must be an integer");
                    step.p = v.numerator();
                } else if (key == "h") {
                    step.jump = parse_index(value);
                } else {
                    throw ParseError("unknown step parameter '" + key + "'");
                }
            }
        }
        validate(step);
        steps.push_back(step);
    }
    return steps;
}

FilDescriptor FilDescriptor::c_i(const Rational& i) {
    if (i <= 0) throw DomainError("fil_{c,i} needs i > 0");
    FilDescriptor d(Label::CI);
    d.a_ = i;
    return d;
}

FilDescriptor FilDescriptor::i_slice(const Rational& i2) {
    if (i2 <= 0) throw DomainError("fil_{i,i2} needs i2 > 0");
    FilDescriptor d(Label::ISlice);
    d.a_ = i2;
    return d;
}

FilDescriptor FilDescriptor::pair(const IndexPair& alpha) {
    if (alpha.second <= 0) throw DomainError("fil_alpha needs a positive second coordinate");
    FilDescriptor d(Label::Pair);
    d.a_ = alpha.second;
    d.b_ = alpha.first;
    return d;
}

std::optional<RamIndex2> FilDescriptor::index() const {
    switch (label_) {
        case Label::Minus1: return RamIndex2(RamIndex::minus_one());
        case Label::Zero: return RamIndex2(RamIndex::zero());
        case Label::CI: return RamIndex2(RamIndex::c(a_));
        case Label::TK: return std::nullopt;
        case Label::ISlice: return RamIndex2(RamIndex::i(a_));
        case Label::Pair: return RamIndex2::pair(b_, a_);
    }
    return std::nullopt;
}

std::strong_ordering FilDescriptor::operator<=>(const FilDescriptor& o) const {
    auto key = [](const FilDescriptor& d) {
        switch (d.label_) {
            case Label::Minus1: return std::tuple(0, Rational(0), 0, Rational(0));
            case Label::Zero: return std::tuple(1, Rational(0), 0, Rational(0));
            case Label::CI: return std::tuple(2, d.a_, 0, Rational(0));
            case Label::TK: return std::tuple(3, Rational(0), 0, Rational(0));
            case Label::ISlice: return std::tuple(4, d.a_, 0, Rational(0));
            case Label::Pair: return std::tuple(4, d.a_, 1, d.b_);
        }
        return std::tuple(0, Rational(0), 0, Rational(0));
    };
    auto a = key(*this), b = key(o);
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

FilDescriptor fil_descriptor(FilDescriptor::Label label, const Rational& i, const IndexPair& alpha) {
    switch (label) {
        case FilDescriptor::Label::Minus1: return FilDescriptor::minus1();
        case FilDescriptor::Label::Zero: return FilDescriptor::zero();
        case FilDescriptor::Label::CI: return FilDescriptor::c_i(i);
        case FilDescriptor::Label::TK: return FilDescriptor::t_k();
        case FilDescriptor::Label::ISlice: return FilDescriptor::i_slice(i);
        case FilDescriptor::Label::Pair: return FilDescriptor::pair(alpha);
    }
    throw DomainError("unknown descriptor label");
}

std::string to_string(const FilDescriptor& d) {
    switch (d.label()) {
        case FilDescriptor::Label::Minus1: return "fil_{-1}";
        case FilDescriptor::Label::Zero: return "fil_0";
        case FilDescriptor::Label::CI: return "fil_{c," + to_string(d.index()->depth()) + "}";
        case FilDescriptor::Label::TK: return "T_K";
        case FilDescriptor::Label::ISlice: return "fil_{i," + to_string(d.index()->depth()) + "}";
        case FilDescriptor::Label::Pair: return "fil_" + to_string(d.index()->as_pair());
    }
    return "?";
}

}  // namespace ramify
