#include <doctest.h>

#include <map>
#include <set>

#include "orthokit/bitrade.hpp"
#include "orthokit/construct.hpp"
#include "orthokit/errors.hpp"

using namespace orthokit;

namespace {

FieldPtr field_of(std::uint32_t q) {
    const auto [p, r] = *prime_power(q);
    return Field::build(p, r);
}

// Latin bitrade conditions checked straight from the triple lists.
bool is_bitrade(const Bitrade& b, std::size_t k) {
    if (b.l1.size() != k * b.q || b.l2.size() != k * b.q) return false;
    const std::set<Triple> s1(b.l1.begin(), b.l1.end()), s2(b.l2.begin(), b.l2.end());
    for (const Triple& t : s1)
        if (s2.count(t)) return false;
    using Key = std::pair<Elem, Elem>;
    for (int proj = 0; proj < 3; ++proj) {
        auto key = [proj](const Triple& t) {
            return proj == 0 ? Key{t.row, t.col} : proj == 1 ? Key{t.row, t.sym} : Key{t.col, t.sym};
        };
        std::set<Key> k1, k2;
        for (const Triple& t : b.l1) k1.insert(key(t));
        for (const Triple& t : b.l2) k2.insert(key(t));
        if (k1.size() != b.l1.size() || k1 != k2) return false;
    }
    for (const auto* list : {&b.l1, &b.l2}) {
        std::map<Elem, std::size_t> rows, cols, syms;
        for (const Triple& t : *list) {
            ++rows[t.row];
            ++cols[t.col];
            ++syms[t.sym];
        }
        for (const auto* m : {&rows, &cols, &syms}) {
            if (m->size() != b.q) return false;
            for (const auto& [v, n] : *m)
                if (n != k) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("bitrade from the F5 distance-4 pair") {
    const FieldPtr f5 = field_of(5);
    const Bitrade b = build_bitrade(MapTable::linear(f5, 2), MapTable::linear(f5, 3));
    CHECK(b.k == 4);
    CHECK(b.l1.size() == 20);
    CHECK(validate_homogeneous(b));
    CHECK(is_bitrade(b, 4));
}

TEST_CASE("bitrades from distance-3 pairs") {
    for (std::uint32_t q : {3u, 4u, 7u, 9u, 11u, 13u, 16u, 32u, 125u}) {
        const OrthoPair pair = distance3_pair(field_of(q));
        const Bitrade b = build_bitrade(pair.f, pair.g);
        CAPTURE(q);
        CHECK(b.k == 3);
        CHECK(b.l1.size() == 3 * q);
        CHECK(validate_homogeneous(b));
        CHECK(is_bitrade(b, 3));
        CHECK(std::is_sorted(b.l1.begin(), b.l1.end()));
    }
}

TEST_CASE("triples follow the defining formula") {
    const OrthoPair pair = distance3_pair(field_of(7));
    const Field& f = pair.f.field();
    const Bitrade b = build_bitrade(pair.f, pair.g);
    std::set<Triple> expected;
    for (Elem i = 0; i < 7; ++i)
        for (Elem j = 0; j < 7; ++j)
            if (pair.f(j) != pair.g(j))
                expected.insert({i, f.add(f.sub(pair.f(j), j), i), f.add(pair.f(j), i)});
    CHECK(std::set<Triple>(b.l1.begin(), b.l1.end()) == expected);
}

TEST_CASE("validation rejects broken trades") {
    const OrthoPair pair = distance3_pair(field_of(7));
    Bitrade b = build_bitrade(pair.f, pair.g);
    Bitrade overlap = b;
    overlap.l2[0] = overlap.l1[0];
    CHECK_FALSE(validate_homogeneous(overlap));
    Bitrade shifted = b;
    shifted.l1[0].sym = (shifted.l1[0].sym + 1) % 7;
    CHECK_FALSE(validate_homogeneous(shifted));
    Bitrade short_trade = b;
    short_trade.l1.pop_back();
    CHECK_FALSE(validate_homogeneous(short_trade));
    Bitrade wrong_k = b;
    wrong_k.k = 4;
    CHECK_FALSE(validate_homogeneous(wrong_k));
}

TEST_CASE("bitrade preconditions") {
    const FieldPtr f7 = field_of(7);
    CHECK_THROWS_AS(build_bitrade(MapTable::linear(f7, 3), MapTable::linear(f7, 3)), PreconditionError);
    CHECK_THROWS_AS(build_bitrade(MapTable::identity(f7), MapTable::linear(f7, 3)), PreconditionError);
    CHECK_THROWS_AS(build_bitrade(MapTable::linear(f7, 3), MapTable::linear(field_of(5), 3)), PreconditionError);
}
