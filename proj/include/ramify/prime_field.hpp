#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ramify {

/// Element of F_{p^f}, encoded as the integer sum c_i p^i of its coefficient
/// vector in the polynomial basis 1, g, g^2, ... (g a root of the modulus).
using Fq = std::uint32_t;

/// The finite field F_q, q = p^f, together with its characteristic p.
///
/// For f = 1 arithmetic is plain modular arithmetic. For f > 1 the field is
/// F_p[g]/(m(g)) with m the lexicographically first monic irreducible of
/// degree f; multiplication goes through discrete log tables, so q is capped
/// at 2^20 in that case.
class PrimeField {
public:
    /// Throws DomainError if p is not prime, f < 1, or q is too large.
    PrimeField(std::int64_t p, int f = 1);

    static std::shared_ptr<const PrimeField> make(std::int64_t p, int f = 1) {
        return std::make_shared<const PrimeField>(p, f);
    }

    std::int64_t p() const { return p_; }
    int f() const { return f_; }
    std::int64_t q() const { return q_; }
    /// Coefficients m_0..m_f of the defining polynomial (m_f = 1).
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    Fq zero() const { return 0; }
    Fq one() const { return 1; }
    /// Image of an integer under Z -> F_p -> F_q.
    Fq from_int(std::int64_t n) const;
    /// The class of g in F_q; 1 when f = 1.
    Fq generator() const { return f_ == 1 ? 1 : static_cast<Fq>(p_); }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    /// Throws DivisionByZero on zero.
    Fq inv(Fq a) const;
    Fq pow(Fq a, std::uint64_t e) const;
    /// x -> x^p.
    Fq frobenius(Fq a) const;
    /// Unique y with y^p = a (Frobenius is bijective on a finite field).
    Fq pth_root(Fq a) const;
    /// Absolute trace to F_p, returned as an integer in [0, p).
    std::int64_t trace(Fq a) const;

    bool operator==(const PrimeField& other) const { return p_ == other.p_ && f_ == other.f_; }

    std::string element_to_string(Fq a) const;

private:
    std::vector<std::int64_t> digits(Fq a) const;
    Fq encode(const std::vector<std::int64_t>& d) const;
    Fq poly_mul(Fq a, Fq b) const;

    std::int64_t p_;
    int f_;
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
    // Discrete log tables for f > 1: exp_[k] = w^k, log_[x] = k, w a primitive element.
    std::vector<Fq> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const PrimeField>;

bool is_prime(std::int64_t n);

}  // namespace ramify
