// Backtracking completion of partial orthomorphisms.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "orthokit/construct.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"

namespace orthokit {

namespace {

constexpr Elem kUnset = 0xffffffffu;
constexpr std::uint32_t kExhaustiveOrder = 64;

// State of a partial orthomorphism: which values and which differences
// v - x are taken, and for every open position how many values remain
// admissible.
class PartialOrthomorphism {
public:
    explicit PartialOrthomorphism(const Field& field)
        : f_(field), q_(field.q()), value_(q_, kUnset), used_value_(q_, 0), used_diff_(q_, 0),
          avail_(q_, q_), free_(q_), slot_(q_) {
        for (Elem x = 0; x < q_; ++x) {
            free_[x] = x;
            slot_[x] = x;
        }
    }

    bool complete() const noexcept { return free_.empty(); }
    bool is_free(Elem x) const noexcept { return value_[x] == kUnset; }

    bool admissible(Elem x, Elem v) const noexcept {
        return !used_value_[v] && !used_diff_[f_.sub(v, x)];
    }

    // Returns false if some open position is left without candidates. The
    // assignment is applied either way and must be undone with unassign().
    bool assign(Elem x, Elem v) {
        const Elem d = f_.sub(v, x);
        remove_free(x);
        bool ok = true;
        for (Elem y : free_) {
            if (!used_diff_[f_.sub(v, y)] && --avail_[y] == 0) ok = false;
            if (!used_value_[f_.add(y, d)] && --avail_[y] == 0) ok = false;
        }
        used_value_[v] = 1;
        used_diff_[d] = 1;
        value_[x] = v;
        return ok;
    }

    void unassign(Elem x) {
        const Elem v = value_[x];
        const Elem d = f_.sub(v, x);
        used_value_[v] = 0;
        used_diff_[d] = 0;
        value_[x] = kUnset;
        for (Elem y : free_) {
            if (!used_diff_[f_.sub(v, y)]) ++avail_[y];
            if (!used_value_[f_.add(y, d)]) ++avail_[y];
        }
        slot_[x] = static_cast<std::uint32_t>(free_.size());
        free_.push_back(x);
    }

    // Open position with the fewest admissible values; ties go to the
    // earliest entry of the open list.
    Elem most_constrained() const noexcept {
        Elem best = free_.front();
        for (Elem y : free_) {
            if (avail_[y] < avail_[best]) best = y;
        }
        return best;
    }

    std::vector<Elem> candidates(Elem x) const {
        std::vector<Elem> out;
        out.reserve(avail_[x]);
        for (Elem v = 0; v < q_; ++v) {
            if (admissible(x, v)) out.push_back(v);
        }
        return out;
    }

    const std::vector<Elem>& values() const noexcept { return value_; }

private:
    void remove_free(Elem x) {
        const std::uint32_t s = slot_[x];
        const Elem last = free_.back();
        free_[s] = last;
        slot_[last] = s;
        free_.pop_back();
    }

    const Field& f_;
    std::uint32_t q_;
    std::vector<Elem> value_;
    std::vector<std::uint8_t> used_value_;
    std::vector<std::uint8_t> used_diff_;
    std::vector<std::uint32_t> avail_;
    std::vector<Elem> free_;
    std::vector<std::uint32_t> slot_;
};

enum class Outcome { found, exhausted, budget };

// Depth-first search from the given state. On `found` the state is left
// complete; otherwise it is restored to what it was on entry.
Outcome search(PartialOrthomorphism& state, std::uint64_t budget, std::uint64_t& nodes) {
    struct Frame {
        Elem x;
        std::vector<Elem> cands;
        std::size_t next = 0;
        bool assigned = false;
    };
    if (state.complete()) return Outcome::found;

    auto open_frame = [&](std::vector<Frame>& stack) {
        const Elem x = state.most_constrained();
        stack.push_back(Frame{x, state.candidates(x)});
    };

    std::vector<Frame> stack;
    open_frame(stack);
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.assigned) {
            state.unassign(top.x);
            top.assigned = false;
        }
        if (top.next == top.cands.size()) {
            stack.pop_back();
            continue;
        }
        if (budget != 0 && nodes >= budget) {
            for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                if (it->assigned) state.unassign(it->x);
            }
            return Outcome::budget;
        }
        ++nodes;
        const Elem v = top.cands[top.next++];
        const bool ok = state.assign(top.x, v);
        top.assigned = true;
        if (!ok) continue;
        if (state.complete()) return Outcome::found;
        open_frame(stack);
    }
    return Outcome::exhausted;
}

// Min-conflicts repair for large fields. theta is kept a permutation that
// agrees with the prescribed points; each move swaps the values of two free
// positions, picking the swap that leaves the fewest repeated differences.
class Repair {
public:
    Repair(const Field& field, const std::vector<std::pair<Elem, Elem>>& fixed, std::mt19937_64& rng)
        : f_(field), q_(field.q()), rng_(rng), theta_(q_, kUnset), count_(q_, 0), fixed_(q_, 0) {
        std::vector<std::uint8_t> used(q_, 0);
        for (const auto& [x, v] : fixed) {
            theta_[x] = v;
            fixed_[x] = 1;
            used[v] = 1;
        }
        for (Elem x = 0; x < q_; ++x) {
            if (!fixed_[x]) free_.push_back(x);
        }
        std::shuffle(free_.begin(), free_.end(), rng_);
        std::vector<std::uint8_t> used_diff(q_, 0);
        for (const auto& [x, v] : fixed) used_diff[f_.sub(v, x)] = 1;

        // Greedy start: each position takes a random value whose difference
        // is still free if there is one; leftovers are dealt out at the end.
        std::vector<Elem> pool;
        for (Elem v = 0; v < q_; ++v) {
            if (!used[v]) pool.push_back(v);
        }
        std::vector<Elem> deferred;
        for (Elem x : free_) {
            std::size_t pick = pool.size();
            std::size_t seen = 0;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (used_diff[f_.sub(pool[i], x)]) continue;
                if (rng_() % ++seen == 0) pick = i;
            }
            if (pick == pool.size()) {
                deferred.push_back(x);
                continue;
            }
            theta_[x] = pool[pick];
            used_diff[f_.sub(pool[pick], x)] = 1;
            pool[pick] = pool.back();
            pool.pop_back();
        }
        std::shuffle(pool.begin(), pool.end(), rng_);
        for (std::size_t i = 0; i < deferred.size(); ++i) theta_[deferred[i]] = pool[i];

        for (Elem x = 0; x < q_; ++x) {
            const Elem d = f_.sub(theta_[x], x);
            if (count_[d]++ > 0) ++conflicts_;
        }
    }

    std::uint32_t conflicts() const noexcept { return conflicts_; }
    const std::vector<Elem>& values() const noexcept { return theta_; }

    // One move. Returns false when no free position is in conflict.
    void step() {
        const Elem x = conflicted_position();
        const Elem a = theta_[x];
        std::int64_t best = INT64_MAX;
        Elem best_y = x;
        std::size_t ties = 0;
        for (Elem y : free_) {
            if (y == x) continue;
            const std::int64_t delta = swap_delta(x, y);
            if (delta < best) {
                best = delta;
                best_y = y;
                ties = 1;
            } else if (delta == best && rng_() % ++ties == 0) {
                best_y = y;
            }
        }
        // Occasional random walk to leave plateaus.
        if (best >= 0 && rng_() % 16 == 0) best_y = free_[rng_() % free_.size()];
        if (best_y == x) return;
        apply_swap(x, best_y);
        (void)a;
    }

private:
    Elem conflicted_position() {
        for (;;) {
            const Elem x = free_[rng_() % free_.size()];
            if (count_[f_.sub(theta_[x], x)] > 1) return x;
        }
    }

    // Change in the number of repeated differences if theta(x) and theta(y)
    // were exchanged.
    std::int64_t swap_delta(Elem x, Elem y) {
        const Elem dx = f_.sub(theta_[x], x), dy = f_.sub(theta_[y], y);
        const Elem ex = f_.sub(theta_[y], x), ey = f_.sub(theta_[x], y);
        std::int64_t delta = 0;
        delta -= count_[dx]-- > 1;
        delta -= count_[dy]-- > 1;
        delta += count_[ex]++ > 0;
        delta += count_[ey]++ > 0;
        --count_[ey];
        --count_[ex];
        ++count_[dy];
        ++count_[dx];
        return delta;
    }

    void apply_swap(Elem x, Elem y) {
        const Elem dx = f_.sub(theta_[x], x), dy = f_.sub(theta_[y], y);
        if (--count_[dx] > 0) --conflicts_;
        if (--count_[dy] > 0) --conflicts_;
        std::swap(theta_[x], theta_[y]);
        const Elem ex = f_.sub(theta_[x], x), ey = f_.sub(theta_[y], y);
        if (count_[ex]++ > 0) ++conflicts_;
        if (count_[ey]++ > 0) ++conflicts_;
    }

    const Field& f_;
    std::uint32_t q_;
    std::mt19937_64& rng_;
    std::vector<Elem> theta_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint8_t> fixed_;
    std::vector<Elem> free_;
    std::uint32_t conflicts_ = 0;
};

// Restarts the repair from a fresh greedy start whenever it stalls. Each
// greedy placement and each move counts as one node against `budget`.
std::optional<std::vector<Elem>> repair_search(const Field& f, const std::vector<std::pair<Elem, Elem>>& fixed,
                                               std::uint64_t seed, std::uint64_t budget) {
    const std::uint64_t patience = 8ull * f.q();
    std::uint64_t nodes = 0;
    for (std::uint64_t round = 0; nodes < budget; ++round) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (round + 1)));
        Repair repair(f, fixed, rng);
        nodes += f.q();
        std::uint32_t best = repair.conflicts();
        std::uint64_t since_best = 0;
        while (repair.conflicts() > 0 && nodes < budget && since_best < patience) {
            repair.step();
            ++nodes;
            if (repair.conflicts() < best) {
                best = repair.conflicts();
                since_best = 0;
            } else {
                ++since_best;
            }
        }
        if (repair.conflicts() == 0) return repair.values();
    }
    return std::nullopt;
}

} // namespace

MapTable complete_partial(FieldPtr field, Elem z, Elem k, Elem e, const CompletionOptions& options) {
    const Field& f = *field;
    if (f.q() % 2 == 0) throw PreconditionError("completion needs a field of odd order");
    if (!f.contains(z) || !f.contains(k) || !f.contains(e)) {
        throw PreconditionError("completion parameter outside the field");
    }
    if (z == 0 || z == 1) throw PreconditionError("completion needs z not in {0, 1}");
    if (k == 0 || k == 1) throw PreconditionError("completion needs k not in {0, 1}");
    if (e == 0 || e == z || e == k) throw PreconditionError("completion needs e not in {0, z, k}");
    if (e == f.sub(f.add(k, z), 1)) throw PreconditionError("completion needs e != k + z - 1");

    PartialOrthomorphism state(f);
    bool ok = state.assign(0, 0);
    ok = state.assign(1, z) && ok;
    ok = state.assign(k, e) && ok;
    const std::string where = "F_" + std::to_string(f.q()) + " (z=" + std::to_string(z) +
                              ", k=" + std::to_string(k) + ", e=" + std::to_string(e) + ")";
    if (!ok) throw SearchExhausted("prescribed values admit no completion in " + where, true);

    std::vector<Elem> values;
    if (f.q() <= kExhaustiveOrder) {
        std::uint64_t nodes = 0;
        const Outcome outcome = search(state, options.max_nodes, nodes);
        if (outcome == Outcome::exhausted) throw SearchExhausted("no completion exists in " + where, true);
        if (outcome == Outcome::budget) throw SearchExhausted("node budget exhausted in " + where, false);
        values = state.values();
    } else {
        const std::uint64_t total =
            options.max_nodes != 0 ? options.max_nodes : std::max<std::uint64_t>(50'000'000, 200ull * f.q() * f.q());
        auto found = repair_search(f, {{0, 0}, {1, z}, {k, e}}, options.seed, total);
        if (!found) throw SearchExhausted("node budget exhausted in " + where, false);
        values = std::move(*found);
    }

    MapTable theta(field, std::move(values));
    check_internal(is_orthomorphism(theta), "completion is not an orthomorphism");
    check_internal(theta(0) == 0 && theta(1) == z && theta(k) == e, "completion lost a prescribed value");
    return theta;
}

} // namespace orthokit
