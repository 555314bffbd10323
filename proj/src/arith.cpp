#include "toricfan/arith.hpp"

#include "toricfan/error.hpp"

#include <sstream>
#include <utility>

namespace toricfan {

LatticeVector make_vector(std::initializer_list<long> coords) {
  LatticeVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

LatticeVector unit_vector(std::size_t dim, std::size_t index) {
  LatticeVector v(dim, 0);
  v.at(index) = 1;
  return v;
}

LatticeVector zero_vector(std::size_t dim) { return LatticeVector(dim, 0); }

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "dot: vector lengths differ");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const LatticeVector& v) {
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

namespace {

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

bool is_primitive(const LatticeVector& v) { return !is_zero(v) && content(v) == 1; }

LatticeVector primitive(LatticeVector v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

LatticeVector primitive_integer(const RationalVector& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  LatticeVector out;
  out.reserve(v.size());
  for (const auto& c : v) {
    Rational scaled = c * l;
    out.push_back(scaled.get_num());
  }
  return primitive(std::move(out));
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return out;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "add: vector lengths differ");
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "subtract: vector lengths differ");
  }
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

LatticeVector negate(LatticeVector v) {
  for (auto& c : v) c = -c;
  return v;
}

LatticeVector extend(const LatticeVector& v, const Integer& last) {
  LatticeVector out = v;
  out.push_back(last);
  return out;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational p = m[row][col];
    for (auto& x : m[row]) x /= p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t column_count(const RationalMatrix& m) { return m.empty() ? 0 : m.front().size(); }

}  // namespace

std::size_t rank(RationalMatrix m) { return rref(m, column_count(m)).size(); }

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
  std::vector<std::size_t> chosen;
  RationalMatrix basis;
  for (std::size_t i = 0; i < m.size(); ++i) {
    basis.push_back(m[i]);
    if (rank(basis) == basis.size()) {
      chosen.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

std::vector<LatticeVector> integer_kernel_basis(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix work = m;
  for (const auto& row : work) {
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "kernel: ragged matrix");
  }
  auto pivots = rref(work, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<LatticeVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) throw Error(ErrorCode::Internal, "inverse: singular matrix");
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

RationalMatrix to_rational(std::span<const LatticeVector> rows) {
  RationalMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

}  // namespace toricfan
