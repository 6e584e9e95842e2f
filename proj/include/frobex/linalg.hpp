#pragma once

// Dense matrices over F_p: rank, determinant, inverse by Gaussian
// elimination.

#include <cstddef>
#include <optional>
#include <vector>

#include "frobex/field.hpp"

namespace frobex {

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const FpMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

std::size_t rank(const RootField& F, FpMatrix m);
Scalar determinant(const RootField& F, FpMatrix m);
std::optional<FpMatrix> inverse(const RootField& F, const FpMatrix& m);
FpMatrix multiply(const RootField& F, const FpMatrix& a, const FpMatrix& b);
FpMatrix identity(std::size_t n);

}  // namespace frobex
