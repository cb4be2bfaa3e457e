#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orthokit/construct.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"

using namespace orthokit;

namespace {

FieldPtr field_of(std::uint32_t q) {
    const auto [p, r] = *prime_power(q);
    return Field::build(p, r);
}

void check_completion(const FieldPtr& f, Elem z, Elem k, Elem e, const CompletionOptions& options = {}) {
    const MapTable t = complete_partial(f, z, k, e, options);
    const oracle::PolyField o = oracle::mirror(*f);
    CHECK(oracle::is_orthomorphism(o, {t.values().begin(), t.values().end()}));
    CHECK(t(0) == 0);
    CHECK(t(1) == z);
    CHECK(t(k) == e);
}

} // namespace

TEST_CASE("completion over F11") {
    const FieldPtr f = field_of(11);
    for (Elem e = 1; e < 11; ++e) {
        if (e == 2 || e == 3 || e == 4) continue;
        check_completion(f, 2, 3, e);
    }
}

TEST_CASE("completion preconditions") {
    const FieldPtr f = field_of(11);
    CHECK_THROWS_AS(complete_partial(f, 2, 3, 4), PreconditionError);
    CHECK_THROWS_AS(complete_partial(f, 2, 3, 0), PreconditionError);
    CHECK_THROWS_AS(complete_partial(f, 2, 3, 2), PreconditionError);
    CHECK_THROWS_AS(complete_partial(f, 2, 3, 3), PreconditionError);
    CHECK_THROWS_AS(complete_partial(f, 1, 3, 5), PreconditionError);
    CHECK_THROWS_AS(complete_partial(f, 2, 0, 5), PreconditionError);
    CHECK_THROWS_AS(complete_partial(f, 2, 11, 5), PreconditionError);
    CHECK_THROWS_AS(complete_partial(field_of(16), 2, 3, 5), PreconditionError);
}

TEST_CASE("completion is deterministic for a fixed seed") {
    const FieldPtr f = field_of(191);
    const CompletionOptions options{42, 0};
    const MapTable a = complete_partial(f, 7, 19, 100, options);
    const MapTable b = complete_partial(f, 7, 19, 100, options);
    CHECK(a == b);
}

TEST_CASE("every valid triple over F7 and F9 is either completed or proven impossible") {
    for (std::uint32_t q : {7u, 9u}) {
        const FieldPtr f = field_of(q);
        const oracle::PolyField o = oracle::mirror(*f);
        const auto all = oracle::filter_permutations(o);
        for (Elem z = 2; z < q; ++z)
            for (Elem k = 2; k < q; ++k)
                for (Elem e = 1; e < q; ++e) {
                    if (e == z || e == k || e == f->sub(f->add(k, z), 1)) continue;
                    bool exists = false;
                    for (const auto& t : all) exists |= t[0] == 0 && t[1] == z && t[k] == e;
                    if (exists) {
                        check_completion(f, z, k, e);
                    } else {
                        try {
                            complete_partial(f, z, k, e);
                            FAIL("completion found where none exists");
                        } catch (const SearchExhausted& ex) {
                            CHECK(ex.exhaustive());
                        }
                    }
                }
    }
}

TEST_CASE("random triples over mid-sized fields") {
    std::mt19937_64 rng(2024);
    for (std::uint32_t q : {13u, 19u, 25u, 27u, 49u, 81u, 125u, 191u, 243u}) {
        const FieldPtr f = field_of(q);
        for (int trial = 0; trial < 5; ++trial) {
            Elem z, k, e;
            do {
                z = 2 + rng() % (q - 2);
                k = 2 + rng() % (q - 2);
                e = 1 + rng() % (q - 1);
            } while (e == z || e == k || e == f->sub(f->add(k, z), 1));
            CAPTURE(q);
            check_completion(f, z, k, e, CompletionOptions{rng(), 0});
        }
    }
}

TEST_CASE("a tiny node budget reports a non-exhaustive failure") {
    const FieldPtr f = field_of(191);
    try {
        complete_partial(f, 2, 3, 7, CompletionOptions{1, 10});
        FAIL("expected the budget to run out");
    } catch (const SearchExhausted& ex) {
        CHECK_FALSE(ex.exhaustive());
    }
}
