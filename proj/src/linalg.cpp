#include "frobex/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace frobex {

namespace {

// Row-reduces m in place; returns the rank and accumulates the determinant
// factor (sign and pivots) of the leading square block.
std::size_t eliminate(const RootField& F, FpMatrix& m, Scalar* det, FpMatrix* companion) {
  std::size_t r = 0;
  Scalar d = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) {
      d = 0;
      continue;
    }
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
      if (companion) {
        for (std::size_t j = 0; j < companion->cols(); ++j) std::swap((*companion)(pivot, j), (*companion)(r, j));
      }
      d = F.neg(d);
    }
    const Scalar pv = m(r, c);
    d = F.mul(d, pv);
    const Scalar pinv = F.inv(pv);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), pinv);
    if (companion) {
      for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(r, j) = F.mul((*companion)(r, j), pinv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
      if (companion) {
        for (std::size_t j = 0; j < companion->cols(); ++j) {
          (*companion)(i, j) = F.sub((*companion)(i, j), F.mul(f, (*companion)(r, j)));
        }
      }
    }
    ++r;
  }
  if (det) *det = (r == m.rows() && m.rows() == m.cols()) ? d : 0;
  return r;
}

}  // namespace

std::size_t rank(const RootField& F, FpMatrix m) { return eliminate(F, m, nullptr, nullptr); }

Scalar determinant(const RootField& F, FpMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Scalar d = 0;
  eliminate(F, m, &d, nullptr);
  return d;
}

std::optional<FpMatrix> inverse(const RootField& F, const FpMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  FpMatrix work = m;
  FpMatrix inv = identity(m.rows());
  if (eliminate(F, work, nullptr, &inv) != m.rows()) return std::nullopt;
  return inv;
}

FpMatrix multiply(const RootField& F, const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not chain");
  FpMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(a(i, k), b(k, j)));
    }
  }
  return out;
}

FpMatrix identity(std::size_t n) {
  FpMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

}  // namespace frobex
