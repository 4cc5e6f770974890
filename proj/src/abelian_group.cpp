#include "ramify/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "ramify/errors.hpp"
#include "ramify/prime_field.hpp"
#include "ramify/rational.hpp"

namespace ramify {

namespace {

std::vector<std::size_t> elements_of(const Subgroup& s, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(s.order);
    for (std::size_t x = 0; x < n; ++x)
        if (s.members.test(x)) out.push_back(x);
    return out;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors, std::vector<Coordinates> modulo)
    : factors_(std::move(factors)), modulo_(std::move(modulo)) {
    if (factors_.empty()) throw DomainError("a group needs at least one cyclic factor");
    std::int64_t n = 1;
    for (std::int64_t f : factors_) {
        if (f < 1) throw DomainError("cyclic orders must be positive");
        if (f > 1) {
            std::int64_t prime = 2;
            while (f % prime != 0) ++prime;
            if (p_ == 0) p_ = prime;
            if (prime != p_ || !is_power_of(f, p_)) throw DomainError("cyclic factors must be powers of a single prime");
        }
        n *= f;
        if (n > static_cast<std::int64_t>(kMaxGroupOrder)) throw DomainError("group order exceeds 1024");
    }
    if (p_ == 0) p_ = 2;  // trivial group; the prime is immaterial
    const auto product_order = static_cast<std::size_t>(n);

    auto product_add = [this](std::size_t a, std::size_t b) {
        Coordinates ca = product_coordinates(a), cb = product_coordinates(b);
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % factors_[i];
        return product_index(ca);
    };

    // Subgroup generated by `modulo` inside the product.
    std::vector<std::size_t> h_elems{0};
    std::vector<char> in_h(product_order, 0);
    in_h[0] = 1;
    for (const auto& c : modulo_) {
        if (c.size() != factors_.size()) throw DomainError("generator has the wrong number of coordinates");
        std::size_t g = product_index(c);
        std::vector<std::size_t> base = h_elems;
        std::size_t shift = g;
        while (!in_h[shift]) {
            for (std::size_t s : base) {
                std::size_t x = product_add(s, shift);
                if (!in_h[x]) {
                    in_h[x] = 1;
                    h_elems.push_back(x);
                }
            }
            shift = product_add(shift, g);
        }
    }

    coset_of_.assign(product_order, 0);
    std::vector<char> assigned(product_order, 0);
    for (std::size_t x = 0; x < product_order; ++x) {
        if (assigned[x]) continue;
        auto id = static_cast<std::uint16_t>(rep_.size());
        rep_.push_back(x);
        for (std::size_t h : h_elems) {
            std::size_t y = product_add(x, h);
            assigned[y] = 1;
            coset_of_[y] = id;
        }
    }
    order_ = rep_.size();
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            table_[a * order_ + b] = coset_of_[product_add(rep_[a], rep_[b])];
    neg_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            if (table_[a * order_ + b] == 0) {
                neg_[a] = static_cast<std::uint16_t>(b);
                break;
            }

    // Isomorphism type from the sizes of the p^k-torsion subgroups.
    std::vector<std::size_t> torsion{1};
    for (int k = 1; torsion.back() < order_; ++k) {
        std::int64_t pk = 1;
        for (int j = 0; j < k; ++j) pk *= p_;
        std::size_t count = 0;
        for (std::size_t a = 0; a < order_; ++a)
            if (multiple(a, pk) == 0) ++count;
        torsion.push_back(count);
    }
    // Number of cyclic factors of order >= p^k is log_p(torsion[k] / torsion[k-1]).
    std::vector<int> at_least;
    for (std::size_t k = 1; k < torsion.size(); ++k) {
        std::size_t ratio = torsion[k] / torsion[k - 1];
        int r = 0;
        while (ratio > 1) {
            ratio /= static_cast<std::size_t>(p_);
            ++r;
        }
        at_least.push_back(r);
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
        std::int64_t pk = 1;
        for (std::size_t j = 0; j <= k; ++j) pk *= p_;
        for (int r = 0; r < exactly; ++r) type_.push_back(pk);
    }
    std::sort(type_.rbegin(), type_.rend());
    if (type_.empty()) type_.push_back(1);
}

std::size_t FiniteAbelianGroup::product_index(const Coordinates& c) const {
    std::size_t idx = 0;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        std::int64_t v = c[i] % factors_[i];
        if (v < 0) v += factors_[i];
        idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(v);
    }
    return idx;
}

Coordinates FiniteAbelianGroup::product_coordinates(std::size_t idx) const {
    Coordinates c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        c[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(factors_[i]));
        idx /= static_cast<std::size_t>(factors_[i]);
    }
    return c;
}

std::size_t FiniteAbelianGroup::element(const Coordinates& c) const {
    if (c.size() != factors_.size()) throw DomainError("element has the wrong number of coordinates");
    return coset_of_[product_index(c)];
}

Coordinates FiniteAbelianGroup::coordinates(std::size_t a) const { return product_coordinates(rep_[a]); }

std::size_t FiniteAbelianGroup::multiple(std::size_t a, std::int64_t k) const {
    std::size_t result = 0, base = a;
    while (k > 0) {
        if (k & 1) result = add(result, base);
        base = add(base, base);
        k >>= 1;
    }
    return result;
}

std::size_t FiniteAbelianGroup::element_order(std::size_t a) const {
    std::size_t ord = 1;
    std::size_t x = a;
    while (x != 0) {
        x = multiple(x, p_);
        ord *= static_cast<std::size_t>(p_);
    }
    return ord;
}

Subgroup FiniteAbelianGroup::trivial() const {
    Subgroup s;
    s.members.set(0);
    s.order = 1;
    return s;
}

Subgroup FiniteAbelianGroup::whole() const {
    Subgroup s;
    for (std::size_t a = 0; a < order_; ++a) s.members.set(a);
    s.order = order_;
    return s;
}

Subgroup FiniteAbelianGroup::closure(const std::vector<std::size_t>& generators) const {
    Subgroup s = trivial();
    std::vector<std::size_t> elems{0};
    for (std::size_t g : generators) {
        if (g >= order_) throw DomainError("generator out of range");
        std::vector<std::size_t> base = elems;
        std::size_t shift = g;
        while (!s.members.test(shift)) {
            for (std::size_t x : base) {
                std::size_t y = add(x, shift);
                if (!s.members.test(y)) {
                    s.members.set(y);
                    elems.push_back(y);
                }
            }
            shift = add(shift, g);
        }
    }
    s.order = elems.size();
    return s;
}

std::vector<std::size_t> FiniteAbelianGroup::generators(const Subgroup& s) const {
    std::vector<std::size_t> elems = elements_of(s, order_);
    std::stable_sort(elems.begin(), elems.end(),
                     [this](std::size_t a, std::size_t b) { return element_order(a) > element_order(b); });
    std::vector<std::size_t> gens;
    Subgroup cur = trivial();
    for (std::size_t x : elems) {
        if (cur.members.test(x)) continue;
        gens.push_back(x);
        cur = closure(gens);
        if (cur.order == s.order) break;
    }
    return gens;
}

bool FiniteAbelianGroup::is_subgroup(const Subgroup& s) const {
    if (!s.members.test(0)) return false;
    std::vector<std::size_t> elems = elements_of(s, order_);
    if (elems.size() != s.order) return false;
    for (std::size_t a : elems) {
        if (!s.members.test(neg(a))) return false;
        for (std::size_t b : elems)
            if (!s.members.test(add(a, b))) return false;
    }
    return true;
}

Subgroup FiniteAbelianGroup::p_power_multiple(const Subgroup& s, int k) const {
    std::int64_t pk = 1;
    for (int j = 0; j < k; ++j) pk *= p_;
    Subgroup out;
    for (std::size_t a = 0; a < order_; ++a)
        if (s.members.test(a)) out.members.set(multiple(a, pk));
    out.order = out.members.count();
    return out;
}

std::vector<Subgroup> FiniteAbelianGroup::all_subgroups() const {
    std::vector<Subgroup> found{trivial()};
    std::unordered_set<Subgroup, SubgroupHash> seen{trivial()};
    for (std::size_t head = 0; head < found.size(); ++head) {
        const Subgroup s = found[head];
        std::vector<std::size_t> elems = elements_of(s, order_);
        std::bitset<kMaxGroupOrder> done = s.members;
        for (std::size_t x = 0; x < order_; ++x) {
            if (done.test(x) || !s.members.test(multiple(x, p_))) continue;
            // s + <x> has index p over s since p x lies in s.
            Subgroup t = s;
            std::size_t shift = x;
            while (!t.members.test(shift)) {
                for (std::size_t y : elems) t.members.set(add(y, shift));
                shift = add(shift, x);
            }
            t.order = t.members.count();
            done |= t.members;
            if (seen.insert(t).second) found.push_back(t);
        }
    }
    return found;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup s;
    s.members = a.members & b.members;
    s.order = s.members.count();
    return s;
}

bool is_contained(const Subgroup& a, const Subgroup& b) { return (a.members & ~b.members).none(); }

Subgroup subgroup_sum(const FiniteAbelianGroup& g, const Subgroup& a, const Subgroup& b) {
    Subgroup s;
    std::vector<std::size_t> ea = elements_of(a, g.order()), eb = elements_of(b, g.order());
    for (std::size_t x : ea)
        for (std::size_t y : eb) s.members.set(g.add(x, y));
    s.order = s.members.count();
    return s;
}

Quotient quotient(const FiniteAbelianGroup& g, const Subgroup& h) {
    if (!g.is_subgroup(h)) throw DomainError("quotient by a subset that is not a subgroup");
    std::vector<Coordinates> modulo = g.modulo();
    for (std::size_t x : g.generators(h)) modulo.push_back(g.coordinates(x));
    FiniteAbelianGroup q(g.factors(), std::move(modulo));
    std::vector<std::size_t> proj(g.order());
    for (std::size_t a = 0; a < g.order(); ++a) proj[a] = q.element(g.coordinates(a));
    return Quotient{std::move(q), std::move(proj)};
}

Subgroup project(const Quotient& q, const Subgroup& s) {
    Subgroup out;
    for (std::size_t a = 0; a < q.projection.size(); ++a)
        if (s.members.test(a)) out.members.set(q.projection[a]);
    out.order = out.members.count();
    return out;
}

namespace {

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

std::int64_t parse_p_power(const std::string& s, std::int64_t p) {
    if (s == "p") return p;
    if (s.rfind("p^", 0) == 0) {
        Rational k = parse_rational(s.substr(2));
        if (k.denominator() != 1 || k < 0) throw ParseError("bad exponent in '" + s + "'");
        std::int64_t v = 1;
        for (std::int64_t j = 0; j < k.numerator(); ++j) v *= p;
        return v;
    }
    Rational v = parse_rational(s);
    if (v.denominator() != 1) throw ParseError("bad cyclic order '" + s + "'");
    return v.numerator();
}

}  // namespace

std::vector<std::int64_t> parse_cyclic_factors(std::string_view text, std::int64_t p) {
    std::string s = strip(text);
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (part.empty()) throw ParseError("empty cyclic factor in '" + std::string(text) + "'");
        out.push_back(parse_p_power(part, p));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Subgroup parse_subgroup(std::string_view text, const FiniteAbelianGroup& g) {
    std::string s = strip(text);
    if (s == "G") return g.whole();
    if (s == "1" || s == "0" || s == "{0}") return g.trivial();
    if (s.size() >= 2 && s.back() == 'G') {
        std::string mult = s.substr(0, s.size() - 1);
        int k = 0;
        if (mult == "p") {
            k = 1;
        } else if (mult.rfind("p^", 0) == 0) {
            k = static_cast<int>(parse_rational(mult.substr(2)).numerator());
        } else {
            throw ParseError("unrecognised subgroup '" + std::string(text) + "'");
        }
        return g.p_power_multiple(g.whole(), k);
    }
    if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
        std::vector<std::size_t> gens;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (body[pos] == ',') {
                ++pos;
                continue;
            }
            if (body[pos] != '(') throw ParseError("expected '(' in generator list '" + std::string(text) + "'");
            std::size_t close = body.find(')', pos);
            if (close == std::string::npos) throw ParseError("unclosed generator in '" + std::string(text) + "'");
            Coordinates c;
            std::string inner = body.substr(pos + 1, close - pos - 1);
            std::size_t st = 0;
            while (st <= inner.size()) {
                std::size_t comma = inner.find(',', st);
                std::string part = inner.substr(st, comma == std::string::npos ? std::string::npos : comma - st);
                c.push_back(parse_rational(part).numerator());
                if (comma == std::string::npos) break;
                st = comma + 1;
            }
            gens.push_back(g.element(c));
            pos = close + 1;
        }
        return g.closure(gens);
    }
    throw ParseError("unrecognised subgroup '" + std::string(text) + "'");
}

}  // namespace ramify
