#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "brauer/error.hpp"

namespace brauer {

// Sorted (index, value) pairs with nonzero values.
template <class F>
using SparseVec = std::vector<std::pair<std::int64_t, typename F::Elem>>;

// a + s * b over the field.
template <class F>
SparseVec<F> axpy(const F& field, const SparseVec<F>& a, const typename F::Elem& s, const SparseVec<F>& b) {
  SparseVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, field.mul(s, b[j].second));
      ++j;
    } else {
      auto v = field.add(a[i].second, field.mul(s, b[j].second));
      if (!field.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SparseVec<F> sparse_from_map(const F& field, const std::map<std::int64_t, typename F::Elem>& m) {
  SparseVec<F> out;
  for (const auto& [i, v] : m) {
    if (!field.is_zero(v)) out.emplace_back(i, v);
  }
  return out;
}

// Incremental row echelon basis over a field. Each inserted row optionally
// carries a tag vector that undergoes the same row operations, so a row that
// reduces to zero yields its dependency as the reduced tag.
template <class F>
class EchelonBasis {
 public:
  using Elem = typename F::Elem;
  using Vec = SparseVec<F>;

  explicit EchelonBasis(F field) : field_(std::move(field)) {}

  // Returns true when `v` is independent of the rows so far. If not, and
  // `dependency` is non-null, stores the reduced tag there.
  bool insert(Vec v, Vec tag = {}, Vec* dependency = nullptr) {
    while (!v.empty()) {
      const auto lead = v.front().first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        const Elem inv = field_.inv(v.front().second);
        scale(v, inv);
        scale(tag, inv);
        rows_.emplace(lead, Row{std::move(v), std::move(tag)});
        return true;
      }
      const Elem s = field_.neg(v.front().second);
      v = axpy(field_, v, s, it->second.vec);
      tag = axpy(field_, tag, s, it->second.tag);
    }
    if (dependency) *dependency = std::move(tag);
    return false;
  }

  // Reduces without inserting; zero result means v is in the span.
  bool contains(Vec v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) return false;
      v = axpy(field_, v, field_.neg(v.front().second), it->second.vec);
    }
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const F& field() const { return field_; }

  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    for (const auto& [lead, row] : rows_) out.push_back(row.vec);
    return out;
  }

 private:
  struct Row {
    Vec vec;
    Vec tag;
  };

  void scale(Vec& v, const Elem& s) const {
    for (auto& [i, x] : v) x = field_.mul(x, s);
  }

  F field_;
  std::map<std::int64_t, Row> rows_;
};

template <class F>
std::size_t sparse_rank(const F& field, const std::vector<SparseVec<F>>& rows) {
  EchelonBasis<F> basis(field);
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

// Dense exact matrix over a field or ring F.
template <class F>
class ExactMatrix {
 public:
  using Elem = typename F::Elem;

  ExactMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static ExactMatrix identity(F field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  Elem trace() const {
    if (rows_ != cols_) throw ValencyError("trace of a non-square matrix");
    Elem t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, at(i, i));
    return t;
  }

  ExactMatrix transpose() const {
    ExactMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
  }

  ExactMatrix scaled(const Elem& s) const {
    ExactMatrix out = *this;
    for (auto& x : out.data_) x = field_.mul(x, s);
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw ValencyError("matrix product of incompatible shapes");
    ExactMatrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& x = a.at(i, k);
        if (a.field_.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Elem& y = b.at(k, j);
          if (a.field_.is_zero(y)) continue;
          out.at(i, j) = a.field_.add(out.at(i, j), a.field_.mul(x, y));
        }
      }
    }
    return out;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_shape(b);
    ExactMatrix out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] = a.field_.add(out.data_[t], b.data_[t]);
    return out;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_shape(b);
    ExactMatrix out = a;
    for (std::size_t t = 0; t < out.data_.size(); ++t) out.data_[t] = a.field_.sub(out.data_[t], b.data_[t]);
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t t = 0; t < a.data_.size(); ++t) {
      if (!a.field_.equal(a.data_[t], b.data_[t])) return false;
    }
    return true;
  }

  // Row-major sparse view.
  SparseVec<F> vectorized() const {
    SparseVec<F> out;
    for (std::size_t t = 0; t < data_.size(); ++t) {
      if (!field_.is_zero(data_[t])) out.emplace_back(static_cast<std::int64_t>(t), data_[t]);
    }
    return out;
  }

  std::size_t rank() const {
    std::vector<SparseVec<F>> rows;
    for (std::size_t i = 0; i < rows_; ++i) {
      SparseVec<F> r;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero(at(i, j))) r.emplace_back(static_cast<std::int64_t>(j), at(i, j));
      }
      rows.push_back(std::move(r));
    }
    return sparse_rank(field_, rows);
  }

 private:
  void check_shape(const ExactMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ValencyError("matrix shapes differ");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

// Kronecker product; `a` indexes the most significant factor.
template <class F>
ExactMatrix<F> kron(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  const F& f = a.field();
  ExactMatrix<F> out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a.at(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.at(i * b.rows() + k, j * b.cols() + l) = f.mul(a.at(i, j), b.at(k, l));
        }
      }
    }
  }
  return out;
}

// Basis of {x : M x = 0} by reduction to row echelon form.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_basis(const ExactMatrix<F>& m) {
  const F& f = m.field();
  ExactMatrix<F> a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && f.is_zero(a.at(p, col))) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    const auto inv = f.inv(a.at(row, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || f.is_zero(a.at(i, col))) continue;
      const auto s = f.neg(a.at(i, col));
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = f.add(a.at(i, j), f.mul(s, a.at(row, j)));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<typename F::Elem>> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.neg(a.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
nlohmann::json matrix_to_json(const ExactMatrix<F>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.field().is_zero(m.at(i, j))) entries.push_back({i, j, m.field().format(m.at(i, j))});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <class F>
ExactMatrix<F> matrix_from_json(const nlohmann::json& j, const F& field) {
  ExactMatrix<F> m(field, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    const auto i = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (i >= m.rows() || c >= m.cols()) throw ValidationError("matrix entry out of range");
    const auto& v = e.at(2);
    m.at(i, c) = field.parse(v.is_string() ? v.get<std::string>() : v.dump());
  }
  return m;
}

}  // namespace brauer
