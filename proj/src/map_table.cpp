#include "orthokit/map_table.hpp"

#include "orthokit/errors.hpp"

namespace orthokit {

MapTable::MapTable(FieldPtr field, std::vector<Elem> values)
    : field_(std::move(field)), values_(std::move(values)) {
    if (!field_) throw PreconditionError("map table needs a field");
    if (values_.size() != field_->q()) {
        throw PreconditionError("map table must have exactly q entries");
    }
    for (Elem v : values_) {
        if (!field_->contains(v)) throw PreconditionError("map value outside the field");
    }
}

MapTable MapTable::identity(FieldPtr field) {
    return from_function(std::move(field), [](Elem x) { return x; });
}

MapTable MapTable::linear(FieldPtr field, Elem a, Elem b) {
    const Field& f = *field;
    if (!f.contains(a) || !f.contains(b)) throw PreconditionError("coefficient outside the field");
    return from_function(std::move(field), [&f, a, b](Elem x) { return f.add(f.mul(a, x), b); });
}

bool MapTable::operator==(const MapTable& other) const {
    return field_->same_as(*other.field_) && values_ == other.values_;
}

} // namespace orthokit
