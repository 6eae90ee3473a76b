#include "liemax/lie_algebra.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

namespace liemax {

namespace {

SparseVec normalized(const SparseVec& v, std::size_t dim) {
  RowAccumulator acc;
  for (const auto& [k, c] : v) {
    if (k >= dim) throw std::out_of_range("bracket coefficient index out of range");
    acc.add(k, c);
  }
  return acc.take();
}

SparseVec negated(SparseVec v) {
  for (auto& [k, c] : v) c = -c;
  return v;
}

} // namespace

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket_basis(i, j))
    if (idx == k) return c;
  return 0;
}

RatMatrix LieAlgebra::ad(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) = c;
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!v.empty()) return false;
  return true;
}

std::string LieAlgebra::fingerprint() const {
  std::string canon = std::to_string(dim_) + ";";
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : bracket_basis(i, j))
        canon += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                 to_fraction_string(c) + ";";
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) hex[static_cast<std::size_t>(i)] = digits[h & 0xF];
  return hex;
}

LieAlgebra::Builder::Builder(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("Lie algebra dimension must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("v" + std::to_string(i + 1));
  alg_.dim_ = dim;
  alg_.labels_ = std::move(labels);
  alg_.table_.assign(dim * dim, {});
}

LieAlgebra::Builder::Builder(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("Lie algebra dimension must be positive");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("basis labels must be distinct");
  alg_.dim_ = labels.size();
  alg_.labels_ = std::move(labels);
  alg_.table_.assign(alg_.dim_ * alg_.dim_, {});
}

LieAlgebra::Builder& LieAlgebra::Builder::bracket(std::size_t i, std::size_t j, const SparseVec& value) {
  const std::size_t n = alg_.dim_;
  if (i >= n || j >= n) throw std::out_of_range("bracket index out of range");
  if (i == j) {
    if (!normalized(value, n).empty()) throw std::invalid_argument("[v_i, v_i] must vanish");
    return *this;
  }
  auto v = normalized(value, n);
  alg_.table_[j * n + i] = negated(v);
  alg_.table_[i * n + j] = std::move(v);
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::bracket(std::size_t i, std::size_t j, std::size_t k,
                                                  const Rational& coeff) {
  return bracket(i, j, SparseVec{{k, coeff}});
}

LieAlgebra::Builder& LieAlgebra::Builder::raw(std::size_t i, std::size_t j, const SparseVec& value) {
  const std::size_t n = alg_.dim_;
  if (i >= n || j >= n) throw std::out_of_range("bracket index out of range");
  alg_.table_[i * n + j] = normalized(value, n);
  return *this;
}

LieAlgebra LieAlgebra::Builder::build() && { return std::move(alg_); }

} // namespace liemax
