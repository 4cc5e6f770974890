#include "ramify/artin_schreier.hpp"

#include "ramify/element_parser.hpp"
#include "ramify/errors.hpp"

namespace ramify {

std::string to_string(ExtensionKind kind) {
    switch (kind) {
        case ExtensionKind::Trivial: return "Trivial";
        case ExtensionKind::Unramified: return "Unramified";
        case ExtensionKind::Constant: return "Constant";
        case ExtensionKind::Fierce: return "Fierce";
        case ExtensionKind::Mixed: return "Mixed";
    }
    return "?";
}

ExtensionKind parse_extension_kind(std::string_view text) {
    for (auto k : {ExtensionKind::Trivial, ExtensionKind::Unramified, ExtensionKind::Constant, ExtensionKind::Fierce,
                   ExtensionKind::Mixed})
        if (to_string(k) == text) return k;
    throw ParseError("unknown extension kind '" + std::string(text) + "'");
}

namespace {

InnerSeries without_constant(const InnerSeries& s) {
    std::vector<InnerSeries::Term> terms;
    for (const auto& t : s.terms())
        if (t.first != 0) terms.push_back(t);
    return InnerSeries::from_terms(s.field(), s.denominator(), std::move(terms), s.precision_numerator());
}

std::string describe(const TwoDimElement& x) {
    try {
        return format_element(x);
    } catch (const DomainError&) {
        return x.to_string();
    }
}

bool vanishes_to_precision(const TwoDimElement& x) {
    for (const auto& [e, s] : x.levels())
        if (!s.has_no_terms()) return false;
    return true;
}

ASNormalForm empty_form(const FieldPtr& field) {
    return ASNormalForm{TwoDimElement::zero(field), TwoDimElement::zero(field), 0, ExtensionKind::Trivial, {}, {}, {}, {},
                        {},  false, false, true, {}};
}

class Reducer {
public:
    Reducer(const TwoDimElement& a, const ReductionConfig& config)
        : input_(a.is_exact_zero() ? a : a.truncated_relative(config.caps)),
          cur_(input_),
          x_(TwoDimElement::zero(a.field())),
          p_(a.field()->p()),
          base_dpi_(a.pi_denominator()),
          cap_(config.adjunction_cap) {
        if (!(input_ == a)) {
            form_.trace.push_back("truncate input to caps: " + describe(input_));
        }
    }

    ASNormalForm run() {
        reduce_nonconstant();
        reduce_constant();
        if (!fierce_num_) reduce_residue();
        finish();
        return std::move(form_);
    }

private:
    bool pi_known_through_zero() const {
        auto prec = cur_.pi_precision_numerator();
        return !prec || *prec > 0;
    }

    void subtract_wp(const TwoDimElement& xi, const std::string& why) {
        cur_ = cur_ - xi.artin_schreier();
        x_ = x_ + xi;
        form_.trace.push_back(why + ": subtract x^p - x for x = " + describe(xi));
    }

    void reduce_nonconstant() {
        while (true) {
            const std::int64_t d = cur_.pi_denominator();
            std::optional<std::int64_t> level;
            InnerSeries n(cur_.field());
            for (const auto& [num, s] : cur_.levels()) {
                if (num >= 0) break;
                InnerSeries candidate = without_constant(s);
                if (candidate.has_no_terms()) {
                    if (!candidate.is_exact()) uncertain("no known non-constant terms at pi^" + to_string(Rational(num, d)));
                    continue;
                }
                level = num;
                n = candidate;
                break;
            }
            if (!level) {
                if (!pi_known_through_zero())
                    throw PrecisionExhausted("negative pi-levels beyond pi^" + to_string(*cur_.pi_precision()) +
                                             " are unknown");
                return;
            }
            const Rational e(*level, d);
            auto [powers, rest] = n.split_pth_powers();
            if (!rest.has_no_terms()) {
                if (*level % p_ == 0 && !powers.has_no_terms()) {
                    auto root = pth_root_residue(powers);
                    subtract_wp(TwoDimElement::from_series(*root, e / p_), "p-th power part at pi^" + to_string(e));
                }
                fierce_num_ = *level;
                form_.trace.push_back("pi^" + to_string(e) + " carries " + rest.to_string() +
                                      ", not a p-th power in t: fierce");
                return;
            }
            if (!n.is_exact()) uncertain("t-part at pi^" + to_string(e) + " treated as a p-th power to its precision");
            if (*level % p_ == 0) {
                auto root = pth_root_residue(powers);
                subtract_wp(TwoDimElement::from_series(*root, e / p_), "pi^" + to_string(e));
            } else {
                if (form_.adjoined_pi_root_exponent >= cap_)
                    throw DomainError("adjunction cap of " + std::to_string(cap_) + " exceeded");
                cur_ = cur_.with_denominators(d * p_, cur_.t_denominator());
                ++form_.adjoined_pi_root_exponent;
                form_.trace.push_back("pi^" + to_string(e) + " has a p-th power t-part: adjoin pi^(1/" +
                                      std::to_string(d * p_) + ")");
            }
        }
    }

    void reduce_constant() {
        const FieldPtr& field = cur_.field();
        while (true) {
            const std::int64_t d = cur_.pi_denominator();
            std::optional<std::pair<std::int64_t, Fq>> deepest;
            for (const auto& [num, s] : cur_.levels()) {
                if (num >= 0) break;
                Fq c = s.coefficient(0);
                if (c != 0) {
                    deepest = {num, c};
                    break;
                }
            }
            if (!pi_known_through_zero() && !deepest) {
                if (!fierce_num_) throw PrecisionExhausted("constant terms above pi^" + to_string(*cur_.pi_precision()) +
                                                           " are unknown");
                uncertain("constant terms above pi^" + to_string(*cur_.pi_precision()) + " unknown");
            }
            if (!deepest) return;
            const Rational e(deepest->first, d);
            const Rational over_base = e * base_dpi_;
            if (over_base.numerator() % p_ == 0) {
                subtract_wp(TwoDimElement::monomial(field, field->pth_root(deepest->second), 0, e / p_),
                            "constant pi^" + to_string(e));
                continue;
            }
            form_.constant_depth = -e;
            form_.trace.push_back("constant term at pi^" + to_string(e) + " is reduced");
            return;
        }
    }

    void reduce_residue() {
        if (!pi_known_through_zero()) throw PrecisionExhausted("the residue level pi^0 is unknown");
        const FieldPtr& field = cur_.field();
        while (true) {
            InnerSeries r = cur_.level(0);
            if (auto prec = r.precision(); prec && *prec <= 0)
                throw PrecisionExhausted("the residue is only known to O(t^" + to_string(*prec) + ")");
            if (r.has_no_terms() || r.terms().front().first >= 0) {
                Fq c0 = r.coefficient(0);
                form_.residue_constant_nontrivial = field->trace(c0) != 0;
                if (form_.residue_constant_nontrivial)
                    form_.trace.push_back("residue constant " + field->element_to_string(c0) + " has nonzero trace");
                return;
            }
            const auto [k, c] = r.terms().front();
            if (k % p_ != 0) {
                form_.residue_separable_nontrivial = true;
                form_.trace.push_back("residue keeps t^" + to_string(Rational(k, r.denominator())) +
                                      ": separable residue extension");
                return;
            }
            TwoDimElement xi = TwoDimElement::monomial(field, field->pth_root(c), Rational(k / p_, r.denominator()), 0);
            subtract_wp(xi, "residue t^" + to_string(Rational(k, r.denominator())));
        }
    }

    void finish() {
        const FieldPtr& field = cur_.field();
        const std::int64_t d = cur_.pi_denominator();
        if (fierce_num_) {
            const Rational depth = -Rational(*fierce_num_, d);
            form_.fierce_depth = depth;
            form_.fierce_unit = cur_.pi_shifted(depth);
            form_.fierce_scale = TwoDimElement::monomial(field, 1, 0, depth / p_);
        }
        if (form_.constant_depth) {
            std::vector<TwoDimElement::Level> levels;
            for (const auto& [num, s] : cur_.levels()) {
                if (num >= 0) break;
                Fq c = s.coefficient(0);
                if (c != 0) levels.emplace_back(num, InnerSeries::constant(field, c));
            }
            form_.constant_part = TwoDimElement::from_levels(field, d, 1, std::move(levels));
        }

        if (fierce_num_)
            form_.kind = form_.constant_depth ? ExtensionKind::Mixed : ExtensionKind::Fierce;
        else if (form_.constant_depth)
            form_.kind = form_.residue_separable_nontrivial ? ExtensionKind::Mixed : ExtensionKind::Constant;
        else if (form_.residue_separable_nontrivial || form_.residue_constant_nontrivial)
            form_.kind = ExtensionKind::Unramified;
        else
            form_.kind = ExtensionKind::Trivial;
        if (form_.kind == ExtensionKind::Mixed) uncertain("several ramification parts coexist");

        if (!vanishes_to_precision(input_ - cur_ - x_.artin_schreier()))
            throw ConsistencyError("reduction identity a - a_reduced = x^p - x failed");
        form_.a_reduced = cur_;
        form_.x_recorded = x_;
        form_.trace.push_back("kind " + to_string(form_.kind));
    }

    void uncertain(const std::string& why) {
        if (form_.certified) form_.trace.push_back("uncertified: " + why);
        form_.certified = false;
    }

    TwoDimElement input_;
    TwoDimElement cur_;
    TwoDimElement x_;
    std::int64_t p_;
    std::int64_t base_dpi_;
    int cap_;
    std::optional<std::int64_t> fierce_num_;
    ASNormalForm form_ = empty_form(input_.field());
};

}  // namespace

ASNormalForm reduce_representative(const TwoDimElement& a, const ReductionConfig& config) {
    if (config.adjunction_cap < 0) throw DomainError("adjunction cap must be non-negative");
    return Reducer(a, config).run();
}

ExtensionKind classify_extension(const TwoDimElement& a, const ReductionConfig& config) {
    return reduce_representative(a, config).kind;
}

ExtensionReport report_from_normal_form(const ASNormalForm& form) {
    ExtensionReport r;
    r.kind = form.kind;
    r.adjoined_root_exponent = form.adjoined_pi_root_exponent;
    r.certified = form.certified;
    r.trace = form.trace;
    const std::int64_t p = form.a_reduced.field()->p();
    if (form.fierce_depth) {
        const Rational second = *form.fierce_depth / p;
        const Rational w = rank2_valuation(*form.fierce_unit).v1;
        r.break_A = RamIndex::i(second);
        r.break_A2 = RamIndex2::pair(-w / p, second);
    } else if (form.constant_depth) {
        r.break_A = RamIndex::c(*form.constant_depth);
        r.break_A2 = r.break_A;
    }
    return r;
}

ExtensionReport analyze_extension(const TwoDimElement& a, const ReductionConfig& config) {
    return report_from_normal_form(reduce_representative(a, config));
}

RamIndex break_A(const TwoDimElement& a, const ReductionConfig& config) { return analyze_extension(a, config).break_A; }

RamIndex2 break_A2(const TwoDimElement& a, const ReductionConfig& config) {
    ExtensionReport r = analyze_extension(a, config);
    if (!r.break_A2.is_pair()) throw DomainError("refined breaks exist only for extensions with a fierce part");
    return r.break_A2;
}

}  // namespace ramify
