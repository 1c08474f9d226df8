#pragma once

#include <vector>

#include "fps/series.hpp"

namespace fps::detail {

/// Powers of a unit-less series w = w_1 z + w_2 z^2 + ... built one
/// coefficient at a time.
///
/// at(p, t) is the coefficient of z^t in w^p. It depends on w_1..w_{t-p+1},
/// so pushing w_j completes the diagonal t - p + 1 = j.
template <class Field>
class PowerTable {
 public:
  using Scalar = typename Field::Scalar;

  PowerTable(const Field& f, int N, int max_power)
      : f_(f), N_(N), P_(std::min(max_power, N)), w_(1, f.zero()) {
    rows_.assign(P_ + 1, std::vector<Scalar>(N_ + 1, f.zero()));
    rows_[0][0] = f.one();
  }

  /// Number of known coefficients w_1..w_j.
  int known() const { return static_cast<int>(w_.size()) - 1; }
  const Scalar& w(int k) const { return w_[k]; }
  const Scalar& at(int p, int t) const { return rows_[p][t]; }
  int max_power() const { return P_; }

  void push(const Scalar& wj) {
    w_.push_back(wj);
    fill_diagonal(known());
  }
  void replace_last(const Scalar& wj) {
    w_.back() = wj;
    fill_diagonal(known());
  }

  Series<Field> series() const {
    Series<Field> s(f_, known());
    for (int k = 1; k <= known(); ++k) s[k] = w_[k];
    return s;
  }

 private:
  Field f_;
  int N_;
  int P_;
  std::vector<Scalar> w_;
  std::vector<std::vector<Scalar>> rows_;

  void fill_diagonal(int j) {
    for (int p = 1; p <= P_; ++p) {
      int t = p + j - 1;
      if (t > N_) break;
      if (p == 1) {
        rows_[1][t] = w_[t];
        continue;
      }
      auto acc = f_.zero();
      // w^p = w^{p-1} · w, coefficient of z^t; w^{p-1} starts at index p-1
      for (int l = p - 1; l <= t - 1; ++l) {
        const auto& a = rows_[p - 1][l];
        const auto& b = w_[t - l];
        if (f_.structural_zero(a) || f_.structural_zero(b)) continue;
        acc += a * b;
      }
      rows_[p][t] = acc;
    }
  }
};

}  // namespace fps::detail
