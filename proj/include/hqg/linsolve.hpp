#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hqg/scalar.hpp"

namespace hqg::detail {

/// Incremental sparse Gaussian elimination over an exact field.
///
/// Rows are kept in echelon form: the pivot row for column c contains only
/// columns >= c, with coefficient 1 at c.
class SparseSystem {
 public:
  using Row = std::map<std::size_t, Scalar>;

  SparseSystem(std::size_t unknowns, FieldSpec field) : n_(unknowns), field_(field) {}

  /// Adds sum(row[j] * x_j) = rhs.
  void add_equation(Row row, Scalar rhs) {
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    while (!row.empty()) {
      auto [col, coeff] = *row.begin();
      auto piv = pivots_.find(col);
      if (piv == pivots_.end()) {
        Scalar inv = Scalar::one(field_) / coeff;
        for (auto& [_, c] : row) c *= inv;
        rhs *= inv;
        pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
        return;
      }
      Scalar factor = coeff;
      for (const auto& [j, c] : piv->second.row) {
        auto [it, inserted] = row.try_emplace(j, Scalar::zero(field_));
        it->second -= factor * c;
        if (it->second.is_zero()) row.erase(it);
      }
      rhs -= factor * piv->second.rhs;
    }
    if (!rhs.is_zero()) inconsistent_ = true;
  }

  bool consistent() const { return !inconsistent_; }
  std::size_t rank() const { return pivots_.size(); }
  bool unique() const { return consistent() && rank() == n_; }

  /// Back-substitution; requires unique().
  std::vector<Scalar> solution() const {
    std::vector<Scalar> x(n_, Scalar::zero(field_));
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Scalar v = it->second.rhs;
      for (const auto& [j, c] : it->second.row)
        if (j != it->first) v -= c * x[j];
      x[it->first] = v;
    }
    return x;
  }

 private:
  struct Pivot {
    Row row;
    Scalar rhs;
  };
  std::size_t n_;
  FieldSpec field_;
  std::map<std::size_t, Pivot> pivots_;
  bool inconsistent_ = false;
};

}  // namespace hqg::detail
