#include "fitt/errors.hpp"
#include "fitt/fitting.hpp"

namespace fitt {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw StructuralError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  if (r >= rows_ || c >= cols_) throw StructuralError("matrix index out of range");
  require_same_ring(ring_, value.ring());
  entries_[r * cols_ + c] = std::move(value);
}

PolyMatrix PolyMatrix::with_zero_rows(std::size_t extra) const {
  PolyMatrix out = *this;
  out.rows_ += extra;
  out.entries_.resize(out.rows_ * cols_, Polynomial(ring_));
  return out;
}

PolyMatrix PolyMatrix::with_column(const std::vector<Polynomial>& column) const {
  if (column.size() != rows_) throw StructuralError("column length does not match row count");
  PolyMatrix out(ring_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    out.set(r, cols_, column[r]);
  }
  return out;
}

RingMap RingMap::identity(const RingPtr& ring) {
  RingMap map{ring, ring, {}};
  for (std::size_t i = 0; i < ring->nvars(); ++i) map.images.push_back(Polynomial::variable(ring, i));
  return map;
}

RingMap RingMap::from_assignments(const RingPtr& source, const RingPtr& target,
                                  const std::map<std::string, Polynomial>& assignments) {
  RingMap map{source, target, {}};
  for (const auto& name : source->variables()) {
    auto it = assignments.find(name);
    if (it != assignments.end()) {
      require_same_ring(it->second.ring(), target);
      map.images.push_back(it->second);
    } else {
      map.images.push_back(Polynomial::variable(target, target->require_index(name)));
    }
  }
  for (const auto& [name, value] : assignments) source->require_index(name);
  return map;
}

Polynomial RingMap::apply(const Polynomial& f) const {
  require_same_ring(f.ring(), source);
  if (source->nvars() == 0) return f.map_to(target);
  return f.substitute(images);
}

Ideal RingMap::apply(const Ideal& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply(g));
  return Ideal(target, std::move(gens));
}

PresentedModule::PresentedModule(PresentedAlgebra a, PolyMatrix m, std::vector<std::string> labels)
    : algebra(std::move(a)), matrix(std::move(m)), row_labels(std::move(labels)) {
  require_same_ring(algebra.ring, matrix.ring());
  if (row_labels.empty()) {
    for (std::size_t r = 0; r < matrix.rows(); ++r) row_labels.push_back("e" + std::to_string(r + 1));
  }
  if (row_labels.size() != matrix.rows()) throw StructuralError("one row label per generator required");
}

PresentedModule direct_sum_free(const PresentedModule& module, std::size_t r) {
  auto labels = module.row_labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("f" + std::to_string(i + 1));
  return PresentedModule(module.algebra, module.matrix.with_zero_rows(r), std::move(labels));
}

PresentedModule base_change(const PresentedModule& module, const RingMap& map,
                            const std::vector<Polynomial>& extra_relations) {
  require_same_ring(module.algebra.ring, map.source);
  const PolyMatrix& src = module.matrix;
  PolyMatrix out(map.target, src.rows(), src.cols());
  for (std::size_t r = 0; r < src.rows(); ++r) {
    for (std::size_t c = 0; c < src.cols(); ++c) out.set(r, c, map.apply(src.at(r, c)));
  }
  Ideal relations = map.apply(module.algebra.relations);
  auto gens = relations.generators();
  gens.insert(gens.end(), extra_relations.begin(), extra_relations.end());
  return PresentedModule(PresentedAlgebra(Ideal(map.target, std::move(gens))), std::move(out), module.row_labels);
}

}  // namespace fitt
