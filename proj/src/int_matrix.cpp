#include "perlef/int_matrix.hpp"

#include <stdexcept>

namespace perlef {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("IntMatrix: dimension mismatch");
  const std::size_t n = a.dim();
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix power(const IntMatrix& a, std::uint64_t e) {
  IntMatrix result = IntMatrix::identity(a.dim());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace perlef
