#include "substdyn/intlin.hpp"

#include "substdyn/errors.hpp"

#include <algorithm>
#include <utility>

namespace substdyn {

namespace {

void require(bool ok, const char* what) {
  if (!ok) fail("dimension-mismatch", what);
}

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void normalize_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) g = boost::multiprecision::gcd(g, abs_of(x));
  }
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == m.cols_, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::trace() const {
  require(square(), "trace of non-square matrix");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product dimensions");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum dimensions");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference dimensions");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).str();
  return out;
}

IntMatrix pow(const IntMatrix& a, unsigned n) {
  require(a.square(), "power of non-square matrix");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

std::size_t rank(const IntMatrix& a) {
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);

  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (m[i][c] == 0) continue;
      Integer f = m[i][c];
      Integer g = m[r][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
      normalize_content(m[i]);
    }
    ++r;
  }
  return r;
}

Integer det(const IntMatrix& a) {
  require(a.square(), "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> char_poly(const IntMatrix& a) {
  require(a.square(), "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix scaled = id;
    for (std::size_t i = 0; i < n; ++i) scaled(i, i) = c[n - k + 1];
    m = a * m + scaled;
    Integer t = (a * m).trace();
    c[n - k] = -t / Integer(k);
  }
  return c;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

namespace {

// Elementary operations applied simultaneously to D and the transforms.
struct SmithState {
  IntMatrix d, u, v, ui;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.cols(); ++k) std::swap(d(i, k), d(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u(i, k), u(j, k));
    for (std::size_t k = 0; k < ui.rows(); ++k) std::swap(ui(k, i), ui(k, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.rows(); ++k) std::swap(d(k, i), d(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.cols(); ++k) d(i, k) += q * d(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) += q * u(j, k);
    for (std::size_t k = 0; k < ui.rows(); ++k) ui(k, j) -= q * ui(k, i);
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.rows(); ++k) d(k, i) += q * d(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, i) += q * v(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < d.cols(); ++k) d(i, k) = -d(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
    for (std::size_t k = 0; k < ui.rows(); ++k) ui(k, i) = -ui(k, i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithState s{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m)};

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      Integer best = 0;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (s.d(i, j) == 0) continue;
          Integer v = abs_of(s.d(i, j));
          if (pi == m || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) goto done;
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.d(i, t) == 0) continue;
        Integer q = s.d(i, t) / s.d(t, t);
        s.add_row(i, t, -q);
        if (s.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.d(t, j) == 0) continue;
        Integer q = s.d(t, j) / s.d(t, t);
        s.add_col(j, t, -q);
        if (s.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s.d(i, j) % s.d(t, t) != 0) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (s.d(t, t) < 0) s.negate_row(t);
  }
done:
  return SmithForm{std::move(s.d), std::move(s.u), std::move(s.v), std::move(s.ui)};
}

EventualImage eventual_image(const IntMatrix& a) {
  require(a.square(), "eventual image of non-square matrix");
  const std::size_t n = a.rows();
  EventualImage out;
  IntMatrix p = IntMatrix::identity(n);
  std::size_t r_prev = n;
  std::size_t k = 0;
  for (;;) {
    IntMatrix next = p * a;
    std::size_t r = rank(next);
    if (r == r_prev) break;
    p = std::move(next);
    r_prev = r;
    ++k;
  }
  out.rank = r_prev;
  out.stable_power = k;

  // Column space of A^k: the first r columns of U^-1 span its saturation.
  SmithForm sf = smith_normal_form(p);
  out.basis = IntMatrix(n, out.rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < out.rank; ++j) out.basis(i, j) = sf.u_inverse(i, j);

  // Coordinates of A * basis in the basis are read off through U.
  IntMatrix coords = sf.u * (a * out.basis);
  out.restricted = IntMatrix(out.rank, out.rank);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < out.rank; ++j) {
      if (i < out.rank) {
        out.restricted(i, j) = coords(i, j);
      } else if (coords(i, j) != 0) {
        fail("internal", "eventual image is not invariant");
      }
    }
  }
  Integer d = det(out.restricted);
  out.unimodular = (d == 1 || d == -1);
  return out;
}

bool probably_conjugate(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) return false;
  if (char_poly(a) != char_poly(b)) return false;
  const std::size_t n = a.rows();
  for (long long lambda : {0LL, 1LL, -1LL, 2LL}) {
    IntMatrix shift = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) shift(i, i) = lambda;
    if (smith_normal_form(a - shift).diagonal() != smith_normal_form(b - shift).diagonal())
      return false;
  }
  return true;
}

std::string format_poly(const std::vector<Integer>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    Integer mag = abs_of(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace substdyn
