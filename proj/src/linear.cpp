#include "liemax/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace liemax {

namespace {

// a - f * b, both sorted.
SparseRow axpy_sub(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize_lead(SparseRow& row) {
  Rational inv = 1 / row.front().second;
  for (auto& [c, v] : row) v *= inv;
}

} // namespace

SparseRow to_sparse(const RatVector& dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (sgn(dense[c]) != 0) row.emplace_back(c, dense[c]);
  return row;
}

RatVector to_dense(const SparseRow& row, std::size_t cols) {
  RatVector v(cols);
  for (const auto& [c, x] : row) v.at(c) = x;
  return v;
}

void RowAccumulator::add(std::size_t col, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparseRow RowAccumulator::take() {
  SparseRow row(terms_.begin(), terms_.end());
  terms_.clear();
  return row;
}

SparseRow RowEchelon::reduce(SparseRow row) const {
  SparseRow done;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      // Lead column has no pivot: it survives; keep reducing the tail so the
      // remainder is zero exactly when the row is in the span.
      done.push_back(std::move(row.front()));
      row.erase(row.begin());
      continue;
    }
    Rational f = row.front().second;
    row = axpy_sub(row, f, it->second);
  }
  return done;
}

bool RowEchelon::add(SparseRow row) {
  for (const auto& [c, v] : row)
    if (c >= cols_) throw std::out_of_range("row column out of range");
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      normalize_lead(row);
      std::size_t col = row.front().first;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    Rational f = row.front().second;
    row = axpy_sub(row, f, it->second);
  }
  return false;
}

std::vector<SparseRow> RowEchelon::reduced_basis() const {
  std::map<std::size_t, SparseRow> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    // Pivot rows at larger columns are already fully reduced, so subtracting
    // them never reintroduces entries in other pivot columns.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (reduced.count(row[k].first)) hits.push_back(row[k]);
    for (const auto& [c, f] : hits) row = axpy_sub(row, f, reduced.at(c));
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<SparseRow> out;
  out.reserve(reduced.size());
  for (auto& [c, row] : reduced) out.push_back(std::move(row));
  return out;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!pivots_.count(c)) free.push_back(c);
  return free;
}

std::vector<SparseRow> RowEchelon::kernel_basis() const {
  const auto rref = reduced_basis();
  const auto free = free_columns();
  // For each free column f, x_f = 1, other free columns 0, pivots -R[p][f].
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> by_free;
  for (const auto& row : rref) {
    std::size_t pivot = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k)
      by_free[row[k].first].emplace_back(pivot, -row[k].second);
  }
  RowEchelon span(cols_);
  for (std::size_t f : free) {
    RowAccumulator acc;
    acc.add(f, 1);
    if (auto it = by_free.find(f); it != by_free.end())
      for (const auto& [p, v] : it->second) acc.add(p, v);
    span.add(acc.take());
  }
  return span.reduced_basis();
}

std::optional<RatVector> RowEchelon::solve_augmented() const {
  if (cols_ == 0) throw std::logic_error("augmented system needs a right-hand side column");
  const std::size_t unknowns = cols_ - 1;
  if (pivots_.count(unknowns)) return std::nullopt;
  RatVector x(unknowns);
  for (const auto& row : reduced_basis()) {
    // Free variables are zero, so each pivot equals the reduced right-hand side.
    if (row.back().first == unknowns) x[row.front().first] = row.back().second;
  }
  return x;
}

std::vector<RatVector> canonical_span(const std::vector<RatVector>& vectors, std::size_t cols) {
  RowEchelon e(cols);
  for (const auto& v : vectors) e.add(v);
  std::vector<RatVector> out;
  for (const auto& row : e.reduced_basis()) out.push_back(to_dense(row, cols));
  return out;
}

std::vector<RatVector> null_space(const std::vector<RatVector>& rows, std::size_t cols) {
  RowEchelon e(cols);
  for (const auto& r : rows) e.add(r);
  std::vector<RatVector> out;
  for (const auto& row : e.kernel_basis()) out.push_back(to_dense(row, cols));
  return out;
}

MatrixSubspace MatrixSubspace::span(std::size_t n, const std::vector<RatMatrix>& generators) {
  RowEchelon e(n * n);
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("subspace generator has wrong size");
    e.add(g.flat());
  }
  MatrixSubspace s(n);
  for (const auto& row : e.reduced_basis())
    s.basis_.push_back(RatMatrix::from_flat(n, n, to_dense(row, n * n)));
  return s;
}

bool MatrixSubspace::contains(const RatMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  RowEchelon e(n_ * n_);
  for (const auto& b : basis_) e.add(b.flat());
  return e.contains(m.flat());
}

std::size_t sym_coord_count(std::size_t n) { return n * (n + 1) / 2; }

std::size_t sym_coord(std::size_t n, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  // Rows 0..a-1 contribute n, n-1, ..., n-a+1 coordinates.
  return a * n - a * (a - 1) / 2 + (b - a);
}

RatMatrix sym_from_coords(std::size_t n, const RatVector& coords) {
  RatMatrix s(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) s(a, b) = s(b, a) = coords.at(sym_coord(n, a, b));
  return s;
}

RatVector sym_to_coords(const RatMatrix& s) {
  const std::size_t n = s.rows();
  RatVector c(sym_coord_count(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) c[sym_coord(n, a, b)] = s(a, b);
  return c;
}

std::vector<RatMatrix> canonical_sym_span(std::size_t n, const std::vector<RatMatrix>& forms) {
  std::vector<RatVector> coords;
  coords.reserve(forms.size());
  for (const auto& f : forms) {
    if (!f.is_symmetric() || f.rows() != n) throw std::invalid_argument("expected symmetric forms");
    coords.push_back(sym_to_coords(f));
  }
  std::vector<RatMatrix> out;
  for (const auto& v : canonical_span(coords, sym_coord_count(n))) out.push_back(sym_from_coords(n, v));
  return out;
}

} // namespace liemax
