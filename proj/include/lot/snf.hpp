#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lot/coxeter.hpp"
#include "lot/presentation.hpp"

namespace lot {

/// Dense integer matrix (row-major, exact arithmetic).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  static IntMatrix identity(std::size_t n);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SnfResult {
  IntMatrix d;                          // diagonal, invariants nonnegative
  IntMatrix u, v;                       // unimodular, u * m * v == d
  std::vector<std::int64_t> invariants; // d_1 | d_2 | ... (nonzero first)
};

/// Smith normal form with recorded transforms; u*m*v == d is verified.
SnfResult snf(const IntMatrix& m);

struct AbelianInvariants {
  std::vector<std::int64_t> torsion;  // invariant factors > 1, divisibility chain
  int free_rank = 0;

  std::string str() const;  // e.g. "Z", "Z/2", "Z x Z/2", "1"
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relation matrix of p (exponent sums), reduced by snf.
IntMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

struct CoxeterAbelianization {
  int odd_components = 0;  // W_ab = (Z/2)^odd_components
};
/// Union-find over odd-labeled edges; every generator is an involution and
/// odd edges identify their endpoints in the abelianization.
CoxeterAbelianization coxeter_abelianization(const CoxeterGraph& g);

}  // namespace lot
