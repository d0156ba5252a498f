#include "adenewton/field.hpp"

#include "adenewton/errors.hpp"

namespace adenewton {

Field::Field(PresetKind kind, std::size_t dim) : kind_(kind), dim_(dim) {
  if (dim == 0) throw DomainError("field preset needs a value group of dimension >= 1");
}

Field Field::from_name(const std::string& name, std::size_t dim) {
  if (name == "h-type") return h_type(dim);
  if (name == "monotone") return monotone(dim);
  throw DomainError("unknown field preset '" + name + "' (expected h-type or monotone)");
}

std::string Field::name() const { return kind_ == PresetKind::HType ? "h-type" : "monotone"; }

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw PresetMismatch("preset mismatch: " + a.name() + "/" + std::to_string(a.dim()) + " vs " + b.name() + "/" +
                         std::to_string(b.dim()));
  }
}

}  // namespace adenewton
