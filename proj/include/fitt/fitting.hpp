#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fitt/groebner.hpp"

namespace fitt {

/// Dense matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  /// Throws StructuralError on ragged rows.
  static PolyMatrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows, std::size_t cols = 0);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial value);

  PolyMatrix with_zero_rows(std::size_t extra) const;
  /// Appends a column; `column` must have rows() entries.
  PolyMatrix with_column(const std::vector<Polynomial>& column) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Ring homomorphism from a polynomial ring: variable i goes to images[i].
struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;

  static RingMap identity(const RingPtr& ring);
  /// Variables named in `assignments` go to the given target polynomials;
  /// every other variable goes to the same-named target variable.
  static RingMap from_assignments(const RingPtr& source, const RingPtr& target,
                                  const std::map<std::string, Polynomial>& assignments);

  Polynomial apply(const Polynomial& f) const;
  Ideal apply(const Ideal& ideal) const;
};

/// ambient / relations.
struct PresentedAlgebra {
  RingPtr ring;
  Ideal relations;

  explicit PresentedAlgebra(Ideal rel) : ring(rel.ring()), relations(std::move(rel)) {}
};

/// Cokernel of `matrix` over the algebra; rows are generators, columns are
/// relations among them. Entries are read modulo the algebra's relations.
struct PresentedModule {
  PresentedAlgebra algebra;
  PolyMatrix matrix;
  std::vector<std::string> row_labels;

  PresentedModule(PresentedAlgebra a, PolyMatrix m, std::vector<std::string> labels = {});

  std::size_t generators() const { return matrix.rows(); }
};

/// Nonzero k x k minors, row subsets outer and column subsets inner, both
/// in lexicographic order, first occurrence kept for repeated values.
/// k = 0 gives {1}; k beyond either dimension gives nothing. The row
/// subsets are distributed over OpenMP threads.
std::vector<Polynomial> minors(const PolyMatrix& matrix, std::size_t k);
/// Single-threaded reference for minors(); identical output.
std::vector<Polynomial> minors_serial(const PolyMatrix& matrix, std::size_t k);

/// Fitt_i as an ideal of the ambient ring: relations + (m-i)-minors.
/// i >= m gives the unit ideal; when no (m-i)-minor exists (including i < 0)
/// the result is the relation ideal alone.
Ideal fitting_ideal(const PresentedModule& module, long i);

/// M ⊕ A^r: r zero rows appended.
PresentedModule direct_sum_free(const PresentedModule& module, std::size_t r);

/// Entrywise substitution into map.target; relations mapped generator-wise,
/// with `extra_relations` (target-ring polynomials) appended.
PresentedModule base_change(const PresentedModule& module, const RingMap& map,
                            const std::vector<Polynomial>& extra_relations = {});

}  // namespace fitt
