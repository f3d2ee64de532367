#include "opcalc/linalg.hpp"

#include <algorithm>

namespace opcalc {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
  Scalar q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw StructuralError("invalid rational '" + text + "'");
  }
  if (q.get_den() == 0) throw StructuralError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

SparseVector SparseVector::unit(Key k, const Scalar& c) {
  SparseVector v;
  if (c != 0) v.entries_.emplace_back(k, c);
  return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
  return v;
}

Scalar SparseVector::coeff(Key k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, Key key) { return e.first < key; });
  if (it != entries_.end() && it->first == k) return it->second;
  return 0;
}

void SparseVector::axpy(const Scalar& a, const SparseVector& w) {
  if (a == 0 || w.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + w.entries_.size());
  auto i = entries_.begin();
  auto j = w.entries_.begin();
  while (i != entries_.end() || j != w.entries_.end()) {
    if (j == w.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = i->second + a * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Scalar& a) {
  if (a == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= a;
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  SparseVector r = *this;
  r.axpy(1, o);
  return r;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  SparseVector r = *this;
  r.axpy(-1, o);
  return r;
}

SparseVector SparseVector::operator*(const Scalar& a) const {
  SparseVector r = *this;
  r.scale(a);
  return r;
}

bool SparseVector::operator<(const SparseVector& o) const {
  return std::lexicographical_compare(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
      [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (!v.empty() && v.max_key() >= ambient_dim_) {
    throw StructuralError("basis key " + std::to_string(v.max_key()) +
                          " outside ambient dimension " + std::to_string(ambient_dim_));
  }
  SparseVector r = v;
  for (const auto& [k, c] : v) {
    std::int32_t row = row_of_pivot_.empty() ? -1 : row_of_pivot_[k];
    if (row >= 0) r.axpy(-c, rows_[row]);
  }
  return r;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (const auto& r : other.rows_) {
    if (!contains(r)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_dim_ == o.ambient_dim_ && rows_ == o.rows_;
}

RrefBuilder::RrefBuilder(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), by_pivot_(ambient_dim) {}

void RrefBuilder::check(const SparseVector& v) const {
  if (!v.empty() && v.max_key() >= ambient_dim_) {
    throw StructuralError("basis key " + std::to_string(v.max_key()) +
                          " outside ambient dimension " + std::to_string(ambient_dim_));
  }
}

SparseVector RrefBuilder::reduce(const SparseVector& v) const {
  check(v);
  SparseVector r = v;
  for (const auto& [k, c] : v) {
    if (by_pivot_[k]) r.axpy(-c, *by_pivot_[k]);
  }
  return r;
}

bool RrefBuilder::add(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  Key q = r.leading_key();
  r.scale(1 / r.leading_coeff());
  for (auto& row : by_pivot_) {
    if (!row) continue;
    Scalar c = row->coeff(q);
    if (c != 0) row->axpy(-c, r);
  }
  by_pivot_[q] = std::move(r);
  ++count_;
  return true;
}

Subspace RrefBuilder::finish() {
  Subspace s(ambient_dim_);
  s.row_of_pivot_.assign(ambient_dim_, -1);
  for (Key k = 0; k < ambient_dim_; ++k) {
    if (!by_pivot_[k]) continue;
    s.row_of_pivot_[k] = static_cast<std::int32_t>(s.rows_.size());
    s.pivots_.push_back(k);
    s.rows_.push_back(std::move(*by_pivot_[k]));
  }
  by_pivot_.assign(ambient_dim_, std::nullopt);
  count_ = 0;
  return s;
}

Subspace span(const std::vector<SparseVector>& vectors, std::size_t ambient_dim) {
  RrefBuilder b(ambient_dim);
  for (const auto& v : vectors) b.add(v);
  return b.finish();
}

Subspace kernel(const std::vector<SparseVector>& columns, std::size_t rows) {
  const std::size_t n = columns.size();
  struct Stored {
    SparseVector image;
    SparseVector combo;
  };
  std::vector<std::int32_t> slot(rows, -1);
  std::vector<Stored> stored;
  std::vector<SparseVector> found;
  for (std::size_t jj = n; jj-- > 0;) {
    const SparseVector& col = columns[jj];
    if (!col.empty() && col.max_key() >= rows) {
      throw StructuralError("column entry outside codomain of dimension " +
                            std::to_string(rows));
    }
    SparseVector v = col;
    SparseVector combo = SparseVector::unit(static_cast<Key>(jj));
    while (!v.empty()) {
      std::int32_t s = slot[v.leading_key()];
      if (s < 0) break;
      Scalar f = v.leading_coeff() / stored[s].image.leading_coeff();
      v.axpy(-f, stored[s].image);
      combo.axpy(-f, stored[s].combo);
    }
    if (v.empty()) {
      found.push_back(std::move(combo));
    } else {
      slot[v.leading_key()] = static_cast<std::int32_t>(stored.size());
      stored.push_back({std::move(v), std::move(combo)});
    }
  }
  return span(found, n);
}

Subspace annihilator(const Subspace& s, const std::vector<SparseVector>& pairing_rows,
                     std::size_t dim_b) {
  if (pairing_rows.size() != s.ambient_dim()) {
    throw StructuralError("pairing matrix does not match subspace ambient");
  }
  std::vector<std::vector<SparseVector::Entry>> cols(dim_b);
  Key i = 0;
  for (const auto& row : s.basis()) {
    SparseVector t;
    for (const auto& [a, c] : row) t.axpy(c, pairing_rows[a]);
    for (const auto& [b, c] : t) cols[b].emplace_back(i, c);
    ++i;
  }
  std::vector<SparseVector> columns;
  columns.reserve(dim_b);
  for (auto& c : cols) columns.push_back(SparseVector::from_entries(std::move(c)));
  return kernel(columns, s.dim());
}

std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t ambient_dim) {
  return span(vectors, ambient_dim).dim();
}

Scalar determinant(const std::vector<SparseVector>& rows, std::size_t n) {
  if (rows.size() != n) throw StructuralError("determinant needs a square matrix");
  std::vector<std::int32_t> slot(n, -1);
  std::vector<SparseVector> echelon;
  std::vector<Key> lead_of_row;
  for (const auto& row : rows) {
    if (!row.empty() && row.max_key() >= n) throw StructuralError("row entry out of range");
    SparseVector v = row;
    while (!v.empty()) {
      std::int32_t s = slot[v.leading_key()];
      if (s < 0) break;
      v.axpy(-v.leading_coeff() / echelon[s].leading_coeff(), echelon[s]);
    }
    if (v.empty()) return 0;
    slot[v.leading_key()] = static_cast<std::int32_t>(echelon.size());
    lead_of_row.push_back(v.leading_key());
    echelon.push_back(std::move(v));
  }
  Scalar det = 1;
  for (const auto& r : echelon) det *= r.leading_coeff();
  // sign of the permutation row -> leading column
  std::vector<bool> seen(n, false);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = lead_of_row[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return det * sign;
}

}  // namespace opcalc
