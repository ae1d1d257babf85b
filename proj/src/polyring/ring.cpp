#include "fitt/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fitt/errors.hpp"

namespace fitt {

namespace {

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

}  // namespace

Ring::Ring(Field field, std::vector<std::string> variables) : field_(field), variables_(std::move(variables)) {
  std::set<std::string_view> seen;
  for (const auto& name : variables_) {
    if (!is_identifier(name)) throw ValidationError("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw ValidationError("duplicate variable name '" + name + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw StructuralError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

RingPtr make_ring(Field field, std::vector<std::string> variables) {
  return std::make_shared<const Ring>(field, std::move(variables));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  auto names = ring->variables();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_ring(ring->field(), std::move(names));
}

RingPtr drop_variables(const RingPtr& ring, std::span<const std::size_t> indices) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) == indices.end()) names.push_back(ring->variables()[i]);
  }
  return make_ring(ring->field(), std::move(names));
}

std::string fresh_variable(const Ring& ring, const std::string& base) {
  if (!ring.index_of(base)) return base;
  for (int k = 0;; ++k) {
    std::string candidate = base + "aux" + std::to_string(k);
    if (!ring.index_of(candidate)) return candidate;
  }
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw StructuralError("operands belong to different rings");
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !out.empty()) out.push_back(current);
  return out;
}

}  // namespace fitt
