#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "opcalc/error.hpp"

namespace opcalc {

using Scalar = mpq_class;
using Key = std::uint32_t;

std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);

// Sparse vector with entries sorted by key and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<Key, Scalar>;

  SparseVector() = default;
  static SparseVector unit(Key k, const Scalar& c = 1);
  static SparseVector from_entries(std::vector<Entry> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Scalar coeff(Key k) const;
  Key leading_key() const { return entries_.front().first; }
  const Scalar& leading_coeff() const { return entries_.front().second; }
  Key max_key() const { return entries_.back().first; }

  // this += a * w
  void axpy(const Scalar& a, const SparseVector& w);
  void scale(const Scalar& a);

  SparseVector operator+(const SparseVector& o) const;
  SparseVector operator-(const SparseVector& o) const;
  SparseVector operator*(const Scalar& a) const;
  bool operator==(const SparseVector& o) const { return entries_ == o.entries_; }
  bool operator<(const SparseVector& o) const;

 private:
  std::vector<Entry> entries_;
};

// Subspace of Q^n stored as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<SparseVector>& basis() const { return rows_; }
  const std::vector<Key>& pivots() const { return pivots_; }

  // Remainder of v after clearing every pivot coordinate.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

 private:
  friend class RrefBuilder;
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<Key> pivots_;
  std::vector<std::int32_t> row_of_pivot_;
};

// Incremental reduced row echelon form.
class RrefBuilder {
 public:
  explicit RrefBuilder(std::size_t ambient_dim);
  // Returns true when v was independent of the rows so far.
  bool add(const SparseVector& v);
  std::size_t dim() const { return count_; }
  SparseVector reduce(const SparseVector& v) const;
  Subspace finish();

 private:
  std::size_t ambient_dim_;
  std::size_t count_ = 0;
  std::vector<std::optional<SparseVector>> by_pivot_;
  std::vector<std::vector<Key>> rows_containing_;
  void check(const SparseVector& v) const;
};

Subspace span(const std::vector<SparseVector>& vectors, std::size_t ambient_dim);

// Kernel of the linear map whose j-th column is columns[j] (inside Q^rows).
Subspace kernel(const std::vector<SparseVector>& columns, std::size_t rows);

// {b in B : <s,b> = 0 for all s in S}; pairing_rows[a] is the row of basis
// vector a of S's ambient paired against every basis vector of B.
Subspace annihilator(const Subspace& s, const std::vector<SparseVector>& pairing_rows,
                     std::size_t dim_b);

std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t ambient_dim);

// Exact determinant of a square matrix given by rows.
Scalar determinant(const std::vector<SparseVector>& rows, std::size_t n);

}  // namespace opcalc
