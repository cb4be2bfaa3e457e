#include "orthokit/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "orthokit/errors.hpp"

namespace orthokit {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

using Poly = std::vector<std::uint32_t>; // over Z_p, constant term first

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t k = r / new_r;
        t = std::exchange(new_t, t - k * new_t);
        r = std::exchange(new_r, r - k * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic-or-not nonzero polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint32_t factor = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(factor, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, m, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, m, p);
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::pair{static_cast<std::uint32_t>(q), 1u};
    std::uint32_t r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<std::uint32_t>(p), r};
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const auto r = static_cast<std::uint32_t>(f.size() - 1);
    if (r == 1) return true;
    const Poly x{0, 1};
    // x^(p^k) mod f by repeated p-th powering.
    auto frobenius_power = [&](std::uint32_t k) {
        Poly h = x;
        for (std::uint32_t i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
        return h;
    };
    if (poly_sub(frobenius_power(r), x, p) != Poly{}) return false;
    for (std::uint64_t d : prime_factors(r)) {
        Poly g = poly_gcd(f, poly_sub(frobenius_power(r / static_cast<std::uint32_t>(d)), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldPtr Field::build(std::uint32_t p, std::uint32_t r, std::optional<std::vector<Elem>> modulus,
                      std::optional<Elem> gamma) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (r < 1) throw PreconditionError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) {
            throw PreconditionError("field order exceeds the cap of " + std::to_string(kMaxOrder));
        }
    }

    auto field = std::shared_ptr<Field>(new Field());
    Field& f = *field;
    f.p_ = p;
    f.r_ = r;
    f.q_ = static_cast<std::uint32_t>(q);

    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != r + 1) throw PreconditionError("modulus must have degree r");
        if (m.back() != 1) throw PreconditionError("modulus must be monic");
        if (std::any_of(m.begin(), m.end(), [p](Elem c) { return c >= p; })) {
            throw PreconditionError("modulus coefficients must lie in [0, p)");
        }
        if (!is_irreducible_mod_p(m, p)) throw PreconditionError("modulus is reducible over Z_p");
        f.modulus_ = m;
    } else {
        // Lexicographic from the constant term: c0 is the most significant digit.
        std::vector<Elem> m(r + 1, 0);
        m[r] = 1;
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            std::uint64_t rest = idx;
            for (std::uint32_t i = r; i-- > 0;) {
                m[i] = static_cast<Elem>(rest % p);
                rest /= p;
            }
            if (is_irreducible_mod_p(m, p)) {
                f.modulus_ = m;
                break;
            }
        }
        check_internal(!f.modulus_.empty(), "no irreducible polynomial found");
    }

    const Poly mod_poly(f.modulus_.begin(), f.modulus_.end());
    auto to_poly = [&](Elem code) {
        Poly out(r);
        for (std::uint32_t i = 0; i < r; ++i) {
            out[i] = code % p;
            code /= p;
        }
        trim(out);
        return out;
    };
    auto to_code = [&](const Poly& a) {
        Elem code = 0;
        for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
        return code;
    };

    const std::uint64_t n = q - 1;
    const auto factors = prime_factors(n);
    auto is_primitive = [&](Elem g) {
        if (g == 0 || g >= q) return false;
        const Poly gp = to_poly(g);
        if (poly_powmod(gp, n, mod_poly, p) != Poly{1}) return false;
        return std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
            return poly_powmod(gp, n / l, mod_poly, p) != Poly{1};
        });
    };
    if (gamma) {
        if (!is_primitive(*gamma)) throw PreconditionError("gamma is not a primitive element");
        f.gamma_ = *gamma;
    } else {
        for (Elem g = 1; g < q; ++g) {
            if (is_primitive(g)) {
                f.gamma_ = g;
                break;
            }
        }
        check_internal(f.gamma_ != 0, "no primitive element found");
    }

    f.exp_.resize(n);
    f.log_.assign(q, kNoLog);
    const Poly gp = to_poly(f.gamma_);
    Poly cur{1};
    for (std::uint64_t i = 0; i < n; ++i) {
        const Elem code = to_code(cur);
        check_internal(f.log_[code] == kNoLog, "gamma is not primitive");
        f.exp_[i] = code;
        f.log_[code] = static_cast<std::uint32_t>(i);
        cur = poly_mulmod(cur, gp, mod_poly, p);
    }

    // 1 + x only touches the constant digit.
    f.zech_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Elem x = f.exp_[i];
        const Elem c0 = x % p;
        const Elem s = x - c0 + (c0 + 1) % p;
        f.zech_[i] = s == 0 ? kNoLog : f.log_[s];
    }

    for (std::uint32_t d = 1; d <= n; ++d) {
        if (n % d == 0) f.divisors_.push_back(d);
    }
    return field;
}

bool Field::same_as(const Field& other) const noexcept {
    return this == &other ||
           (p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_ && gamma_ == other.gamma_);
}

Elem Field::add_zech(Elem a, Elem b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    const std::uint32_t lb = log_[b];
    const std::uint32_t n = group_order();
    // a + b = a * (1 + b/a)
    const std::uint32_t z = zech_[lb >= la ? lb - la : lb + n - la];
    if (z == kNoLog) return 0;
    return exp_[fold(std::uint64_t{la} + z)];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw PreconditionError("inversion of zero");
    const std::uint32_t la = log_[a];
    return exp_[la == 0 ? 0 : group_order() - la];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = group_order();
    return exp_[static_cast<std::uint32_t>(std::uint64_t{log_[a]} * (e % n) % n)];
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0 || a >= q_) throw PreconditionError("discrete log of zero or out-of-range element");
    return log_[a];
}

Elem Field::trace(Elem x) const noexcept {
    Elem acc = 0;
    Elem term = x;
    for (std::uint32_t i = 0; i < r_; ++i) {
        acc = add(acc, term);
        term = pow(term, p_);
    }
    return acc;
}

std::uint32_t Field::coset_index(Elem x, std::uint32_t n) const {
    if (x == 0) throw PreconditionError("coset index of zero");
    if (n == 0 || group_order() % n != 0) {
        throw PreconditionError("coset index " + std::to_string(n) + " does not divide q-1");
    }
    return log(x) % n;
}

PrimeSubfieldView Field::prime_subfield() const {
    PrimeSubfieldView view;
    view.elements.resize(p_);
    std::iota(view.elements.begin(), view.elements.end(), Elem{0});
    return view;
}

std::vector<std::uint32_t> Field::digits(Elem x) const {
    std::vector<std::uint32_t> out(r_);
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = x % p_;
        x /= p_;
    }
    return out;
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() > r_) throw PreconditionError("too many coordinates for this field");
    Elem code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw PreconditionError("coordinate outside Z_p");
        code = code * p_ + digits[i];
    }
    return code;
}

std::vector<Elem> field_isomorphism(const Field& from, const Field& to) {
    if (from.p() != to.p() || from.r() != to.r()) {
        throw PreconditionError("isomorphism needs fields of the same order");
    }
    auto eval_modulus = [&](Elem x) {
        Elem acc = 0;
        const auto& m = from.modulus();
        for (std::size_t i = m.size(); i-- > 0;) acc = to.add(to.mul(acc, x), m[i]);
        return acc;
    };
    Elem root = 0;
    bool found = false;
    for (Elem x = 0; x < to.q() && !found; ++x) {
        if (eval_modulus(x) == 0) {
            root = x;
            found = true;
        }
    }
    check_internal(found, "modulus has no root in an extension of the same degree");
    std::vector<Elem> image(from.q());
    for (Elem code = 0; code < from.q(); ++code) {
        const auto d = from.digits(code);
        Elem acc = 0;
        for (std::size_t i = d.size(); i-- > 0;) acc = to.add(to.mul(acc, root), d[i]);
        image[code] = acc;
    }
    return image;
}

} // namespace orthokit
