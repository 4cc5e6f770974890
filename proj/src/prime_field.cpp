#include "ramify/prime_field.hpp"

#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::int64_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of index.
Poly monic_from_index(std::int64_t index, int d, std::int64_t p) {
    Poly m(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        m[static_cast<std::size_t>(i)] = index % p;
        index /= p;
    }
    m[static_cast<std::size_t>(d)] = 1;
    return m;
}

bool is_irreducible(const Poly& m, std::int64_t p) {
    const int f = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= f; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx)
            if (poly_rem(m, monic_from_index(idx, d, p), p).empty()) return false;
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 20;

}  // namespace

PrimeField::PrimeField(std::int64_t p, int f) : p_(p), f_(f) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (f < 1) throw DomainError("residue degree f must be positive");
    if (f == 1 && p >= (std::int64_t{1} << 31)) throw DomainError("prime too large");
    q_ = 1;
    for (int i = 0; i < f; ++i) {
        q_ *= p;
        if (f > 1 && q_ > kMaxTableSize) throw DomainError("residue field too large (q > 2^20)");
    }
    if (f == 1) {
        modulus_ = {0, 1};
        return;
    }
    std::int64_t count = q_;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        Poly m = monic_from_index(idx, f, p);
        if (m[0] != 0 && is_irreducible(m, p)) {
            modulus_ = std::move(m);
            break;
        }
    }
    if (modulus_.empty()) throw ConsistencyError("no irreducible polynomial found");

    // Primitive element search using schoolbook multiplication, then tables.
    auto slow_pow = [this](Fq a, std::int64_t e) {
        Fq r = 1;
        while (e > 0) {
            if (e & 1) r = poly_mul(r, a);
            a = poly_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    const std::int64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    Fq primitive = 0;
    for (Fq w = 2; w < static_cast<Fq>(q_); ++w) {
        bool ok = std::all_of(factors.begin(), factors.end(),
                              [&](std::int64_t r) { return slow_pow(w, order / r) != 1; });
        if (ok) {
            primitive = w;
            break;
        }
    }
    if (primitive == 0) throw ConsistencyError("no primitive element found");
    exp_.resize(static_cast<std::size_t>(order));
    log_.assign(static_cast<std::size_t>(q_), 0);
    Fq x = 1;
    for (std::int64_t k = 0; k < order; ++k) {
        exp_[static_cast<std::size_t>(k)] = x;
        log_[x] = static_cast<std::uint32_t>(k);
        x = poly_mul(x, primitive);
    }
}

std::vector<std::int64_t> PrimeField::digits(Fq a) const {
    std::vector<std::int64_t> d(static_cast<std::size_t>(f_), 0);
    for (int i = 0; i < f_; ++i) {
        d[static_cast<std::size_t>(i)] = a % p_;
        a = static_cast<Fq>(a / p_);
    }
    return d;
}

Fq PrimeField::encode(const std::vector<std::int64_t>& d) const {
    std::int64_t v = 0;
    for (int i = f_ - 1; i >= 0; --i) v = v * p_ + d[static_cast<std::size_t>(i)];
    return static_cast<Fq>(v);
}

Fq PrimeField::poly_mul(Fq a, Fq b) const {
    auto da = digits(a), db = digits(b);
    Poly prod(static_cast<std::size_t>(2 * f_), 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
    Poly r = poly_rem(prod, modulus_, p_);
    r.resize(static_cast<std::size_t>(f_), 0);
    return encode(r);
}

Fq PrimeField::from_int(std::int64_t n) const {
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Fq>(r);
}

Fq PrimeField::add(Fq a, Fq b) const {
    if (f_ == 1) return static_cast<Fq>((static_cast<std::uint64_t>(a) + b) % static_cast<std::uint64_t>(p_));
    if (p_ == 2) return a ^ b;
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < f_; ++i)
        da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
    return encode(da);
}

Fq PrimeField::neg(Fq a) const {
    if (f_ == 1) return a == 0 ? 0 : static_cast<Fq>(p_ - a);
    if (p_ == 2) return a;
    auto da = digits(a);
    for (auto& c : da) c = (p_ - c) % p_;
    return encode(da);
}

Fq PrimeField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq PrimeField::mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    if (f_ == 1) return static_cast<Fq>((static_cast<std::uint64_t>(a) * b) % static_cast<std::uint64_t>(p_));
    const std::uint64_t order = static_cast<std::uint64_t>(q_ - 1);
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % order];
}

Fq PrimeField::pow(Fq a, std::uint64_t e) const {
    Fq r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fq PrimeField::inv(Fq a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_q");
    if (f_ == 1) return pow(a, static_cast<std::uint64_t>(p_ - 2));
    const std::uint64_t order = static_cast<std::uint64_t>(q_ - 1);
    return exp_[(order - log_[a]) % order];
}

Fq PrimeField::frobenius(Fq a) const {
    if (f_ == 1) return a;
    return pow(a, static_cast<std::uint64_t>(p_));
}

Fq PrimeField::pth_root(Fq a) const {
    if (f_ == 1) return a;
    // Frobenius has order f, so its inverse is the (f-1)-fold iterate.
    return pow(a, static_cast<std::uint64_t>(q_ / p_));
}

std::int64_t PrimeField::trace(Fq a) const {
    Fq acc = 0, x = a;
    for (int i = 0; i < f_; ++i) {
        acc = add(acc, x);
        x = frobenius(x);
    }
    return static_cast<std::int64_t>(acc);  // lies in the prime subfield, encoded as its digit
}

std::string PrimeField::element_to_string(Fq a) const {
    if (f_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::string out;
    for (int i = f_ - 1; i >= 0; --i) {
        std::int64_t c = d[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += i == 1 ? std::string("g") : "g^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace ramify
