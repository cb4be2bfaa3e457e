#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "orthokit/field.hpp"

namespace orthokit {

/// A total function F_q -> F_q stored as a table indexed by element code.
class MapTable {
public:
    /// Throws PreconditionError unless `values` has exactly q entries, all in range.
    MapTable(FieldPtr field, std::vector<Elem> values);

    template <typename Fn>
    static MapTable from_function(FieldPtr field, Fn&& fn) {
        std::vector<Elem> values(field->q());
        for (Elem x = 0; x < field->q(); ++x) values[x] = fn(x);
        return MapTable(std::move(field), std::move(values));
    }

    static MapTable identity(FieldPtr field);
    /// x -> a*x + b
    static MapTable linear(FieldPtr field, Elem a, Elem b = 0);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Elem> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    Elem operator()(Elem x) const { return values_.at(x); }

    /// Same field (structurally) and identical values.
    bool operator==(const MapTable& other) const;

private:
    FieldPtr field_;
    std::vector<Elem> values_;
};

} // namespace orthokit
