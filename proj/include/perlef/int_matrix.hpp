#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "perlef/bigint.hpp"

namespace perlef {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t n) { return IntMatrix(n); }

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  BigInt trace() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Exact A^e by binary powering; A^0 is the identity.
IntMatrix power(const IntMatrix& a, std::uint64_t e);

}  // namespace perlef
