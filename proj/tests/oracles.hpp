#pragma once
// Slow, table-free reference implementations the library is checked against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"

namespace oracle {

using orthokit::Elem;

// Arithmetic on coordinate vectors, multiplication by schoolbook product
// followed by long division by the modulus.
class PolyField {
public:
    PolyField(std::uint32_t p, std::vector<std::uint32_t> modulus)
        : p_(p), r_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
        q_ = 1;
        for (std::uint32_t i = 0; i < r_; ++i) q_ *= p_;
    }

    std::uint32_t q() const { return q_; }

    std::vector<std::uint32_t> digits(Elem x) const {
        std::vector<std::uint32_t> d(r_);
        for (auto& c : d) {
            c = x % p_;
            x /= p_;
        }
        return d;
    }

    Elem code(const std::vector<std::uint32_t>& d) const {
        Elem x = 0;
        for (std::size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
        return x;
    }

    Elem add(Elem a, Elem b) const {
        auto da = digits(a), db = digits(b);
        for (std::uint32_t i = 0; i < r_; ++i) da[i] = (da[i] + db[i]) % p_;
        return code(da);
    }

    Elem neg(Elem a) const {
        auto d = digits(a);
        for (auto& c : d) c = (p_ - c) % p_;
        return code(d);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        const auto da = digits(a), db = digits(b);
        std::vector<std::uint64_t> prod(2 * r_, 0);
        for (std::uint32_t i = 0; i < r_; ++i)
            for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
        for (auto& c : prod) c %= p_;
        for (std::size_t deg = prod.size(); deg-- > r_;) {
            const std::uint64_t lead = prod[deg];
            if (lead == 0) continue;
            for (std::uint32_t i = 0; i <= r_; ++i) {
                const std::size_t pos = deg - r_ + i;
                prod[pos] = (prod[pos] + (p_ - lead) * modulus_[i]) % p_;
            }
        }
        std::vector<std::uint32_t> out(r_);
        for (std::uint32_t i = 0; i < r_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
        return code(out);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem out = 1;
        for (std::uint64_t i = 0; i < e; ++i) out = mul(out, a);
        return out;
    }

    Elem inv(Elem a) const {
        for (Elem b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }

    // Multiplicative order by repeated multiplication.
    std::uint32_t order(Elem a) const {
        Elem x = a;
        std::uint32_t n = 1;
        while (x != 1) {
            x = mul(x, a);
            ++n;
        }
        return n;
    }

private:
    std::uint32_t p_;
    std::uint32_t r_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t q_;
};

inline PolyField mirror(const orthokit::Field& f) {
    return PolyField(f.p(), std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()));
}

// Dense polynomial helpers over a PolyField, coefficients x^0 first.
using Poly = std::vector<Elem>;

inline Poly poly_mul(const PolyField& f, const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    return out;
}

// Interpolation by explicitly expanding each Lagrange basis polynomial
// prod_{b != a} (x - b) / (a - b). O(q^3).
inline Poly lagrange(const PolyField& f, const std::vector<Elem>& table) {
    const std::uint32_t q = f.q();
    Poly out(q, 0);
    for (Elem a = 0; a < q; ++a) {
        if (table[a] == 0) continue;
        Poly basis{1};
        Elem denom = 1;
        for (Elem b = 0; b < q; ++b) {
            if (b == a) continue;
            basis = poly_mul(f, basis, Poly{f.neg(b), 1});
            denom = f.mul(denom, f.sub(a, b));
        }
        const Elem scale = f.mul(table[a], f.inv(denom));
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] = f.add(out[i], f.mul(scale, basis[i]));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool distinct(const std::vector<Elem>& v) {
    return std::set<Elem>(v.begin(), v.end()).size() == v.size();
}

inline bool is_orthomorphism(const PolyField& f, const std::vector<Elem>& t) {
    std::vector<Elem> d(t.size());
    for (Elem x = 0; x < t.size(); ++x) d[x] = f.sub(t[x], x);
    return distinct(t) && distinct(d);
}

// All orthomorphisms by filtering every permutation of F_q.
inline std::vector<std::vector<Elem>> filter_permutations(const PolyField& f) {
    std::vector<Elem> perm(f.q());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Elem>> out;
    do {
        if (is_orthomorphism(f, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline std::size_t hamming(std::span<const Elem> a, std::span<const Elem> b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
    return n;
}

// Cyclotomic of index n with t(0) = 0: t(x)/x constant on every coset
// gamma^j <gamma^n>, cosets computed from powers of gamma directly.
inline bool cyclotomic_at(const PolyField& f, Elem gamma, const std::vector<Elem>& t, std::uint32_t n) {
    if (t[0] != 0) return false;
    const std::uint32_t m = f.q() - 1;
    for (std::uint32_t j = 0; j < n; ++j) {
        const Elem x0 = f.pow(gamma, j);
        const Elem ratio = f.mul(t[x0], f.inv(x0));
        Elem x = x0;
        const Elem step = f.pow(gamma, n);
        for (std::uint32_t i = 0; i < m / n; ++i) {
            if (t[x] != f.mul(ratio, x)) return false;
            x = f.mul(x, step);
        }
    }
    return true;
}

inline bool irregular(const PolyField& f, Elem gamma, const std::vector<Elem>& t) {
    const std::uint32_t q = f.q();
    for (Elem g = 0; g < q; ++g) {
        std::vector<Elem> s(q);
        for (Elem x = 0; x < q; ++x) s[x] = f.sub(t[f.add(x, g)], t[g]);
        for (std::uint32_t n = 1; n < q - 1; ++n)
            if ((q - 1) % n == 0 && cyclotomic_at(f, gamma, s, n)) return false;
    }
    return true;
}

} // namespace oracle
