#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fitt/field.hpp"

namespace fitt {

/// A polynomial ring: a coefficient field and an ordered variable list fixed
/// at creation. Rings are compared by content, never by address.
class Ring {
 public:
  /// Throws ValidationError on malformed or duplicate variable names.
  Ring(Field field, std::vector<std::string> variables);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws StructuralError for names outside the ring.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Field field_;
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> variables);
/// Same field, variables of `ring` followed by `extra`.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
/// Same field, variables of `ring` minus the listed indices (order kept).
RingPtr drop_variables(const RingPtr& ring, std::span<const std::size_t> indices);
/// `base`, or `base` with a numeric suffix, not already a variable of `ring`.
std::string fresh_variable(const Ring& ring, const std::string& base);

bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws StructuralError unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Splits "x1,x2,T1" into names (whitespace ignored).
std::vector<std::string> split_names(std::string_view text);

}  // namespace fitt
