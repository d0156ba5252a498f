#pragma once

#include <cstddef>
#include <string>

namespace adenewton {

enum class PresetKind {
  /// Residue field Q, trivial residue derivation; d(c t^g) = -sum_i g_i c t^(g + e_0 + ... + e_i)
  /// (the derivative of x^-g0 (log x)^-g1 ... with t = 1/x); asymptotic, small derivation.
  HType,
  /// Residue field Q(z) with d/dz; d(c t^g) = (dc/dz) t^g. Small derivation, nontrivial on the residue field.
  Monotone,
};

/// A field preset: the value group Q^dim (lexicographic) together with the
/// residue field and the derivation.
class Field {
 public:
  Field() = default;
  Field(PresetKind kind, std::size_t dim);

  static Field h_type(std::size_t dim = 1) { return Field(PresetKind::HType, dim); }
  static Field monotone(std::size_t dim = 1) { return Field(PresetKind::Monotone, dim); }
  /// "h-type" or "monotone"; throws DomainError otherwise.
  static Field from_name(const std::string& name, std::size_t dim = 1);

  PresetKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  std::string name() const;
  /// True when the residue field is Q (h-type); false for Q(z).
  bool rational_residues() const noexcept { return kind_ == PresetKind::HType; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  PresetKind kind_ = PresetKind::HType;
  std::size_t dim_ = 1;
};

/// Throws PresetMismatch when the two fields differ.
void require_same_field(const Field& a, const Field& b);

}  // namespace adenewton
