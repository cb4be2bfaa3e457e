#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace orthokit {

/// Canonical code of an element of GF(p^r): sum of c_i * p^i over the
/// polynomial-basis coordinates, constant term in the lowest digit. Code 0
/// is the additive identity and code 1 the multiplicative identity.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The copy of Z_p inside GF(p^r). Under the canonical encoding these are
/// exactly the codes 0..p-1.
struct PrimeSubfieldView {
    std::vector<Elem> elements;

    bool contains(Elem x) const { return x < elements.size(); }
    std::size_t size() const { return elements.size(); }
};

/// GF(p^r) with table-driven arithmetic. Immutable after construction, so a
/// single instance can be shared freely between threads.
///
/// Multiplication, inversion and powers go through exp/log tables. Addition
/// is XOR in characteristic 2, modular in prime fields and uses a Zech
/// logarithm table otherwise.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    /// Builds GF(p^r). `modulus` is monic of degree r, constant term first.
    /// Without one, the lexicographically smallest irreducible (compared
    /// from the constant term up) is used. Without `gamma`, the primitive
    /// element with the smallest code is chosen.
    static FieldPtr build(std::uint32_t p, std::uint32_t r,
                          std::optional<std::vector<Elem>> modulus = std::nullopt,
                          std::optional<Elem> gamma = std::nullopt);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Order of the multiplicative group, q - 1.
    std::uint32_t group_order() const noexcept { return q_ - 1; }
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    Elem gamma() const noexcept { return gamma_; }
    bool contains(Elem x) const noexcept { return x < q_; }
    bool same_as(const Field& other) const noexcept;

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (r_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_zech(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a == 0) return a;
        if (r_ == 1) return p_ - a;
        return exp_[fold(std::uint64_t{log_[a]} + (group_order() >> 1))];
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (r_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
        return exp_[fold(std::uint64_t{log_[a]} + log_[b])];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// gamma^i for any i >= 0.
    Elem exp(std::uint64_t i) const noexcept { return exp_[i % group_order()]; }
    /// Discrete log base gamma. Throws PreconditionError on 0.
    std::uint32_t log(Elem a) const;

    /// Absolute trace onto the prime subfield: x + x^p + ... + x^(p^(r-1)).
    Elem trace(Elem x) const noexcept;

    /// Index j with x in C_{j,n} = gamma^j <gamma^n>; i.e. log(x) mod n.
    std::uint32_t coset_index(Elem x, std::uint32_t n) const;

    PrimeSubfieldView prime_subfield() const;

    /// Polynomial-basis coordinates of x, constant term first, length r.
    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(std::span<const std::uint32_t> digits) const;

    /// Divisors of q - 1 in increasing order.
    const std::vector<std::uint32_t>& group_order_divisors() const noexcept { return divisors_; }

    std::span<const Elem> exp_table() const noexcept { return exp_; }
    std::span<const std::uint32_t> log_table() const noexcept { return log_; }

private:
    Field() = default;

    std::uint32_t fold(std::uint64_t i) const noexcept {
        const std::uint32_t n = group_order();
        return static_cast<std::uint32_t>(i >= n ? i % n : i);
    }
    Elem add_zech(Elem a, Elem b) const noexcept;

    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;
    Elem gamma_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    // zech_[i] = log(1 + gamma^i), or kNoLog when 1 + gamma^i = 0.
    std::vector<std::uint32_t> zech_;
    std::vector<std::uint32_t> divisors_;
};

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// If q is a prime power p^r, returns {p, r}.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept;

/// Code-level isomorphism from `from` to `to` (same p and r): the returned
/// table sends each code of `from` to its image when the generator y of
/// `from` is mapped to the smallest-code root of from's modulus in `to`.
std::vector<Elem> field_isomorphism(const Field& from, const Field& to);

/// Rabin irreducibility test for a monic polynomial over Z_p (constant term first).
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

} // namespace orthokit
