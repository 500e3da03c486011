#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace substdyn {

using Integer = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary precision integers, stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_zero() const;
  Integer trace() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix pow(const IntMatrix& a, unsigned n);
std::size_t rank(const IntMatrix& a);
Integer det(const IntMatrix& a);

// Coefficients c_0..c_n of det(xI - A), so the last entry is 1.
std::vector<Integer> char_poly(const IntMatrix& a);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inverse;  // U^-1, kept for image bases
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

// U * A * V = D with U, V unimodular and d_i | d_{i+1}, all d_i >= 0.
SmithForm smith_normal_form(const IntMatrix& a);

struct EventualImage {
  std::size_t rank = 0;
  std::size_t stable_power = 0;
  bool unimodular = false;
  IntMatrix basis;       // n x rank, columns span the saturated eventual image
  IntMatrix restricted;  // A on that basis
};

EventualImage eventual_image(const IntMatrix& a);

// Integer conjugacy probe: equal characteristic polynomial and equal Smith
// forms of A - lambda I for lambda in {0, 1, -1, 2}.
bool probably_conjugate(const IntMatrix& a, const IntMatrix& b);

std::string format_poly(const std::vector<Integer>& coeffs);

}  // namespace substdyn
