#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "orthokit/construct.hpp"
#include "orthokit/enumerate.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/poly.hpp"

using namespace orthokit;

namespace {

FieldPtr field_of(std::uint32_t q) {
    const auto [p, r] = *prime_power(q);
    return Field::build(p, r);
}

// x -> a_i x on C_{i,n} permutes F_q iff every a_i is nonzero and the
// indices log(a_i) + i are distinct mod n.
bool cyclotomic_permutes(const Field& f, std::uint32_t n, const std::vector<Elem>& a) {
    std::set<std::uint32_t> idx;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (a[i] == 0) return false;
        idx.insert((f.log(a[i]) + i) % n);
    }
    return idx.size() == n;
}

} // namespace

TEST_CASE("permutation checks") {
    const FieldPtr f4 = field_of(4), f5 = field_of(5), f3 = field_of(3);
    CHECK(is_permutation(MapTable::identity(f4)));
    CHECK_FALSE(is_permutation(MapTable(f4, {0, 0, 0, 0})));
    CHECK(is_permutation(MapTable::linear(f5, 2)));
    CHECK_FALSE(is_orthomorphism(MapTable::identity(f3)));
    CHECK(is_orthomorphism(MapTable::linear(f5, 2)));
    CHECK_FALSE(is_permutation(std::vector<Elem>{0, 1}, 3));
    CHECK_FALSE(is_permutation(std::vector<Elem>{0, 1, 5}, 3));
}

TEST_CASE("difference values match the oracle in every characteristic") {
    for (std::uint32_t q : {7u, 9u, 16u, 125u, 256u}) {
        const FieldPtr f = field_of(q);
        const oracle::PolyField o = oracle::mirror(*f);
        const MapTable t = MapTable::from_function(f, [&](Elem x) { return f->add(f->mul(x, x), 3 % q); });
        const auto d = difference_values(t);
        for (Elem x = 0; x < q; ++x) CHECK(d[x] == o.sub(t(x), x));
    }
}

TEST_CASE("orthomorphism check agrees with the oracle on random permutations") {
    std::mt19937 rng(5);
    for (std::uint32_t q : {7u, 8u, 9u, 11u}) {
        const FieldPtr f = field_of(q);
        const oracle::PolyField o = oracle::mirror(*f);
        std::vector<Elem> v(q);
        std::iota(v.begin(), v.end(), 0);
        for (int trial = 0; trial < 2000; ++trial) {
            std::shuffle(v.begin(), v.end(), rng);
            CHECK(is_orthomorphism(MapTable(f, v)) == oracle::is_orthomorphism(o, v));
        }
    }
}

TEST_CASE("translation") {
    const FieldPtr f7 = field_of(7);
    const MapTable lin = MapTable::linear(f7, 3);
    for (Elem g = 0; g < 7; ++g) CHECK(translate(lin, g) == lin);
    const MapTable t(f7, {0, 2, 4, 6, 1, 3, 5});
    CHECK(translate(t, 0) == t);

    const FieldPtr f8 = field_of(8);
    const MapTable theta = even_char_theta(f8, 2, 4);
    const MapTable shifted = translate(theta, 1);
    CHECK(shifted(0) == 0);
    CHECK(oracle::is_orthomorphism(oracle::mirror(*f8), {shifted.values().begin(), shifted.values().end()}));
}

TEST_CASE("translate preserves orthomorphisms exhaustively for q <= 9") {
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
        const FieldPtr f = field_of(q);
        for (const MapTable& t : all_orthomorphisms(f))
            for (Elem g = 0; g < q; ++g) {
                const MapTable s = translate(t, g);
                REQUIRE(s(0) == 0);
                REQUIRE(is_orthomorphism(s));
            }
    }
}

TEST_CASE("cyclotomic maps") {
    const FieldPtr f7 = field_of(7);
    for (Elem a = 1; a < 7; ++a) {
        const std::vector<Elem> one{a}, two{a, a};
        CHECK(cyclotomic_map(f7, 1, one) == MapTable::linear(f7, a));
        CHECK(cyclotomic_map(f7, 2, two) == MapTable::linear(f7, a));
    }
    const std::vector<Elem> bad{1, 2, 3, 4};
    CHECK_THROWS_AS(cyclotomic_map(f7, 4, bad), PreconditionError);
    CHECK_THROWS_AS(cyclotomic_map(f7, 2, std::vector<Elem>{1}), PreconditionError);
}

TEST_CASE("index-2 cyclotomic orthomorphisms of F7") {
    const FieldPtr f7 = field_of(7);
    const oracle::PolyField o = oracle::mirror(*f7);
    std::set<std::pair<Elem, Elem>> found, expected;
    for (Elem a0 = 0; a0 < 7; ++a0)
        for (Elem a1 = 0; a1 < 7; ++a1) {
            const std::vector<Elem> c{a0, a1};
            const MapTable t = cyclotomic_map(f7, 2, c);
            // Cosets read off by squaring: x is in C_0 iff x is a square.
            std::vector<Elem> v(7, 0);
            for (Elem x = 1; x < 7; ++x) {
                bool square = false;
                for (Elem y = 1; y < 7; ++y) square |= o.mul(y, y) == x;
                v[x] = o.mul(square ? a0 : a1, x);
            }
            REQUIRE(std::equal(v.begin(), v.end(), t.values().begin()));
            if (oracle::is_orthomorphism(o, v)) expected.insert({a0, a1});
            if (is_orthomorphism(t)) found.insert({a0, a1});
        }
    CHECK(found == expected);
    CHECK(found.size() > 4);
}

TEST_CASE("cyclotomic orthomorphisms match the coefficient criterion for q <= 13") {
    for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        const FieldPtr fp = field_of(q);
        const Field& f = *fp;
        for (std::uint32_t n : f.group_order_divisors()) {
            if (n > 4) continue;
            std::vector<Elem> a(n, 0);
            std::uint64_t total = 1;
            for (std::uint32_t i = 0; i < n; ++i) total *= q;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (auto& x : a) {
                    x = static_cast<Elem>(c % q);
                    c /= q;
                }
                std::vector<Elem> minus(n);
                for (std::uint32_t i = 0; i < n; ++i) minus[i] = f.sub(a[i], 1);
                const bool expected = cyclotomic_permutes(f, n, a) && cyclotomic_permutes(f, n, minus);
                REQUIRE(is_orthomorphism(cyclotomic_map(fp, n, a)) == expected);
            }
        }
    }
}

TEST_CASE("cyclotomic profile") {
    const FieldPtr f7 = field_of(7);
    const CyclotomicProfile lin = cyclotomic_profile(MapTable::linear(f7, 3));
    CHECK(lin.min_index == 1u);
    CHECK(lin.coeffs == std::vector<Elem>{3});
    CHECK_FALSE(cyclotomic_profile(MapTable::linear(f7, 3, 1)).cyclotomic());

    // Near-linear over F7: the order-3 subgroup {1, 2, 4} is C_{0,2}.
    const OrthoPair pair = near_linear_pair(f7);
    const CyclotomicProfile prof = cyclotomic_profile(pair.f);
    REQUIRE(prof.min_index.has_value());
    CHECK(2 % *prof.min_index == 0);
    const oracle::PolyField o = oracle::mirror(*f7);
    for (Elem x : {1u, 2u, 4u}) CHECK(pair.f(x) == o.mul(pair.f(1), x));
    for (Elem x : {3u, 5u, 6u}) CHECK(pair.f(x) == o.mul(pair.f(3), o.mul(o.inv(3), x)));
}

TEST_CASE("profile witnesses rebuild the map and are minimal") {
    std::mt19937 rng(9);
    for (std::uint32_t q : {7u, 13u, 16u, 25u, 31u}) {
        const FieldPtr f = field_of(q);
        const oracle::PolyField o = oracle::mirror(*f);
        for (std::uint32_t n : f->group_order_divisors()) {
            if (n == q - 1) continue;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Elem> a(n);
                for (auto& x : a) x = rng() % q;
                const MapTable t = cyclotomic_map(f, n, a);
                const CyclotomicProfile prof = cyclotomic_profile(t);
                REQUIRE(prof.min_index.has_value());
                CHECK(n % *prof.min_index == 0);
                CHECK(cyclotomic_map(f, *prof.min_index, prof.coeffs) == t);
                const std::vector<Elem> v(t.values().begin(), t.values().end());
                for (std::uint32_t m : f->group_order_divisors())
                    if (m < *prof.min_index) CHECK_FALSE(oracle::cyclotomic_at(o, f->gamma(), v, m));
            }
        }
    }
}

TEST_CASE("irregularity") {
    const FieldPtr f5 = field_of(5);
    CHECK_FALSE(is_irregular(MapTable::linear(f5, 2)));
    CHECK_THROWS_AS(is_irregular(MapTable::identity(f5)), PreconditionError);

    for (std::uint32_t q : {8u, 16u, 32u}) {
        const FieldPtr f = field_of(q);
        const oracle::PolyField o = oracle::mirror(*f);
        for (Elem a = 2; a < 6; ++a) {
            const Elem a1 = f->add(a, 1);
            Elem c = 2;
            while (c == a || c == a1) ++c;
            const MapTable theta = even_char_theta(f, a, c);
            REQUIRE(is_orthomorphism(theta));
            const std::vector<Elem> v(theta.values().begin(), theta.values().end());
            CHECK(is_irregular(theta) == oracle::irregular(o, f->gamma(), v));
            if (q != 16) CHECK(is_irregular(theta));
        }
    }
}

TEST_CASE("irregularity matches the oracle on every orthomorphism of F7 and F8") {
    for (std::uint32_t q : {7u, 8u}) {
        const FieldPtr f = field_of(q);
        const oracle::PolyField o = oracle::mirror(*f);
        for (const MapTable& t : all_orthomorphisms(f)) {
            const std::vector<Elem> v(t.values().begin(), t.values().end());
            REQUIRE(is_irregular(t) == oracle::irregular(o, f->gamma(), v));
        }
    }
}

TEST_CASE("translates keep reduced degree q - 3") {
    for (std::uint32_t q : {7u, 11u, 13u, 16u, 17u}) {
        const FieldPtr f = field_of(q);
        const MapTable t = tabulate(f, max_degree_orthomorphism(f));
        REQUIRE(reduced_degree(t) == static_cast<int>(q) - 3);
        for (Elem g = 0; g < q; ++g) CHECK(reduced_degree(translate(t, g)) == static_cast<int>(q) - 3);
    }
}
