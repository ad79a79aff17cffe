#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "plumb/rational.hpp"

namespace plumb {

using RationalVector = std::vector<Rational>;

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  RationalMatrix leading_block(std::size_t k) const;

  bool operator==(const RationalMatrix& other) const {
    return n_ == other.n_ && data_ == other.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

RationalVector operator*(const RationalMatrix& m, const RationalVector& x);
RationalMatrix operator-(const RationalMatrix& m);

}  // namespace plumb
