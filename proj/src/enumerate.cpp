#include "orthokit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/poly.hpp"
#include "orthokit/simd.hpp"

namespace orthokit {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(std::uint32_t base, std::uint32_t e) {
    BigInt out = 1;
    for (std::uint32_t i = 0; i < e; ++i) out *= base;
    return out;
}

// Sequential backtracking over positions 0..q-1 with bitmasks of used
// values and used differences.
class Enumerator {
public:
    Enumerator(const Field& field, const TableVisitor& visit, std::optional<Elem> fixed_at_one)
        : q_(field.q()), visit_(visit), fixed_(fixed_at_one), table_(q_), diff_(q_ * q_) {
        for (Elem v = 0; v < q_; ++v) {
            for (Elem x = 0; x < q_; ++x) diff_[v * q_ + x] = field.sub(v, x);
        }
    }

    void run() { place(0, 0, 0); }

private:
    void place(Elem x, std::uint32_t used_values, std::uint32_t used_diffs) {
        if (x == q_) {
            visit_(table_);
            return;
        }
        Elem lo = 0, hi = q_;
        if (x == 1 && fixed_) {
            lo = *fixed_;
            hi = lo + 1;
        }
        for (Elem v = lo; v < hi; ++v) {
            const std::uint32_t vbit = 1u << v;
            const std::uint32_t dbit = 1u << diff_[v * q_ + x];
            if ((used_values & vbit) || (used_diffs & dbit)) continue;
            table_[x] = v;
            place(x + 1, used_values | vbit, used_diffs | dbit);
        }
    }

    std::uint32_t q_;
    const TableVisitor& visit_;
    std::optional<Elem> fixed_;
    std::vector<Elem> table_;
    std::vector<Elem> diff_;
};

struct PartitionResult {
    std::vector<MapTable> tables;
    std::map<int, std::uint64_t> histogram;
    std::uint64_t irregular = 0;
};

PartitionResult census_partition(const FieldPtr& field, Elem value_at_one) {
    PartitionResult out;
    enumerate_orthomorphisms(*field, [&](std::span<const Elem> values) {
        MapTable t(field, std::vector<Elem>(values.begin(), values.end()));
        check_internal(is_orthomorphism(t), "enumerator produced a non-orthomorphism");
        ++out.histogram[reduced_degree(t)];
        if (is_irregular(t)) ++out.irregular;
        out.tables.push_back(std::move(t));
    }, value_at_one);
    return out;
}

} // namespace

void enumerate_orthomorphisms(const Field& field, const TableVisitor& visit, std::optional<Elem> fixed_at_one) {
    if (field.q() > kEnumerationCap) {
        throw PreconditionError("exhaustive enumeration is capped at q = " + std::to_string(kEnumerationCap));
    }
    if (fixed_at_one && (field.q() < 2 || !field.contains(*fixed_at_one))) {
        throw PreconditionError("fixed value at 1 outside the field");
    }
    Enumerator(field, visit, fixed_at_one).run();
}

std::vector<MapTable> all_orthomorphisms(const FieldPtr& field) {
    std::vector<MapTable> out;
    enumerate_orthomorphisms(*field, [&](std::span<const Elem> values) {
        out.emplace_back(field, std::vector<Elem>(values.begin(), values.end()));
    });
    return out;
}

std::optional<int> CensusReport::max_degree() const {
    if (degree_histogram.empty()) return std::nullopt;
    return degree_histogram.rbegin()->first;
}

std::optional<std::uint32_t> min_pairwise_distance(std::span<const MapTable> tables) {
    if (tables.size() < 2) return std::nullopt;
    const std::size_t q = tables.front().size();
    if (q > simd::kPackedRowBytes) throw PreconditionError("packed distance scan needs q <= 16");
    std::vector<std::uint8_t> rows(tables.size() * simd::kPackedRowBytes, 0);
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (tables[i].size() != q) throw PreconditionError("tables of different sizes");
        for (std::size_t x = 0; x < q; ++x) {
            rows[i * simd::kPackedRowBytes + x] = static_cast<std::uint8_t>(tables[i].values()[x]);
        }
    }
    const auto& kernels = simd::active();
    std::uint32_t best = simd::kNoRows;
    for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
        const std::uint8_t* probe = rows.data() + i * simd::kPackedRowBytes;
        best = std::min(best, kernels.min_row_distance(probe, probe + simd::kPackedRowBytes,
                                                       tables.size() - i - 1));
    }
    return best;
}

CensusReport census(const FieldPtr& field, const CensusOptions& options) {
    const std::uint32_t q = field->q();
    if (q > kCensusCap) throw PreconditionError("census is capped at q = " + std::to_string(kCensusCap));

    CensusReport report;
    report.q = q;
    report.non_irregular_bound = non_irregular_bound(q);

    // One partition per value of theta(1); merged in value order.
    std::vector<PartitionResult> parts(q);
    std::atomic<Elem> next{0};
    auto worker = [&] {
        for (Elem v = next++; v < q; v = next++) parts[v] = census_partition(field, v);
    };
    const unsigned jobs = std::clamp(options.jobs, 1u, q);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<MapTable> tables;
    for (auto& part : parts) {
        for (const auto& [deg, count] : part.histogram) report.degree_histogram[deg] += count;
        report.irregular_count += part.irregular;
        std::move(part.tables.begin(), part.tables.end(), std::back_inserter(tables));
    }
    report.total_count = tables.size();
    report.min_pairwise_distance = min_pairwise_distance(tables);
    return report;
}

Fraction irregular_fraction(const CensusReport& report) {
    check_internal(report.irregular_count <= report.total_count, "more irregular maps than maps");
    check_internal(within_counting_bound(report.q, report.total_count - report.irregular_count),
                   "non-irregular count exceeds q^(q/2+2)/2");
    if (report.total_count == 0) return Fraction{0, 1};
    const std::uint64_t g = std::gcd(report.irregular_count, report.total_count);
    return Fraction{report.irregular_count / g, report.total_count / g};
}

Fraction irregular_fraction(const FieldPtr& field, const CensusOptions& options) {
    return irregular_fraction(census(field, options));
}

std::uint64_t non_irregular_bound(std::uint32_t q) {
    const BigInt root = boost::multiprecision::sqrt(big_pow(q, q + 4));
    const BigInt bound = root / 2;
    if (bound > BigInt(std::numeric_limits<std::uint64_t>::max())) {
        throw PreconditionError("counting bound does not fit in 64 bits");
    }
    return bound.convert_to<std::uint64_t>();
}

bool within_counting_bound(std::uint32_t q, std::uint64_t non_irregular) {
    const BigInt n = non_irregular;
    return 4 * n * n <= big_pow(q, q + 4);
}

} // namespace orthokit
