#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "orthokit/field.hpp"
#include "orthokit/map_table.hpp"
#include "orthokit/poly.hpp"

namespace orthokit {

/// Which construction produced a pair.
enum class Provenance { non25, one_mod3, swap_large, odd_two, f125, small_search, prime3 };

std::string_view provenance_name(Provenance p) noexcept;
std::optional<Provenance> parse_provenance(std::string_view name) noexcept;

/// Two orthomorphisms of the same field at Hamming distance 3.
struct OrthoPair {
    MapTable f;
    MapTable g;
    std::size_t distance = 0;
    Provenance provenance = Provenance::small_search;
};

/// Throws InternalError unless both maps are orthomorphisms, the stored
/// distance is the real one and it equals 3.
void verify_pair(const OrthoPair& pair);

/// Given theta(0) = 0, theta(b) = c and theta(c) = c - b, moves the three
/// values around so that 0 -> c - b, b -> 0, c -> c. The result is again an
/// orthomorphism and differs from theta in exactly those three points.
MapTable swap_distance3(const MapTable& theta, Elem b, Elem c);

/// Lifts a distance-3 pair of the prime field into F_q (r > 1, p not 2 or 5)
/// by using x -> 2x off the prime subfield.
OrthoPair lift_subfield_pair(FieldPtr field, const MapTable& phi, const MapTable& theta);

/// q = 1 mod 3: f is a_0 x on the order-3 subgroup and a_1 x elsewhere,
/// g is x -> a_1 x. (a_0, a_1) is the first working pair in code order.
OrthoPair near_linear_pair(FieldPtr field);

struct CompletionOptions {
    std::uint64_t seed = 0x6f7274686f6b6974ULL;
    /// Total node budget across restarts; 0 picks a default scaled with q.
    std::uint64_t max_nodes = 0;
};

/// Completion of an orthomorphism of an odd-order field with
/// theta(0) = 0, theta(1) = z, theta(k) = e. Requires z, k not in {0, 1}
/// and e not in {0, z, k, k + z - 1}.
///
/// Small fields (q <= 64) are searched exhaustively: most-constrained
/// position first, forward checking on values and differences, values in
/// code order. Larger fields start from a seeded greedy fill and repair it
/// by swapping values between positions (min-conflicts), restarting when
/// progress stalls. Throws SearchExhausted on failure; exhaustive() is true
/// only for the small-field search.
MapTable complete_partial(FieldPtr field, Elem z, Elem k, Elem e, const CompletionOptions& options = {});

/// Characteristic 2, q > 2, b != 0: whether x^3 + a x + b has exactly one
/// root, decided by Tr(a^3 / b^2) != Tr(1).
bool cubic_unique_root(const Field& field, Elem a, Elem b);

/// theta_a for even q >= 8: a x + a(a + 1) on H + c and a x elsewhere,
/// where H = {0, 1, a, a + 1}. Needs a not in {0, 1} and c not in H.
MapTable even_char_theta(FieldPtr field, Elem a, Elem c);

struct OddTwoParameters {
    Elem c = 0; ///< smallest c != 0 with c^3 + c + 1 != 0 and Tr(c^-3) = 0
    Elem a = 0; ///< smallest root of x^3 + (c+1)x^2 + cx + c
    Elem b = 0; ///< c / a
};

/// q = 2^r with r odd and r >= 5.
OddTwoParameters odd_two_parameters(const Field& field);
OrthoPair pair_even_odd_power(FieldPtr field);

/// F_125 as Z_5[y]/(y^3 + 3y + 3).
FieldPtr f125_field();
/// f(x) = (a-b)^-1 x^5 - b (a-b)^-1 x with a = y^2, b = y^2 + 4, paired with
/// its swap at (y^2, y^118).
OrthoPair pair_f125();

/// A distance-3 pair over F_p, p prime and not 2 or 5.
OrthoPair small_prime_pair(std::uint32_t p, const CompletionOptions& options = {});

/// The construction branch distance3_pair takes for q = p^r, or nullopt
/// for q in {2, 5, 8}.
std::optional<Provenance> dispatch_branch(std::uint32_t p, std::uint32_t r);

/// A verified distance-3 pair for any q not in {2, 5, 8}; NonexistenceError otherwise.
OrthoPair distance3_pair(FieldPtr field, const CompletionOptions& options = {});

/// A reduced orthomorphism polynomial of degree q - 3, read off a
/// distance-3 pair. PreconditionError for q = 3, NonexistenceError for
/// q in {2, 5, 8}.
ReducedPoly max_degree_orthomorphism(FieldPtr field, const CompletionOptions& options = {});

} // namespace orthokit
