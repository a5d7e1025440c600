#include "lieavg/matq.hpp"

#include <cstdint>
#include <stdexcept>

namespace lieavg {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool MatQ::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

Rational MatQ::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Rational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("MatQ: shape mismatch");
  MatQ out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

MatQ operator-(const MatQ& a, const MatQ& b) { return a + scale(Rational(-1), b); }

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("MatQ: shape mismatch");
  MatQ out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& v = a.at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) {
        const Rational& w = b.at(k, c);
        if (!w.is_zero()) out.at(r, c) += v * w;
      }
    }
  return out;
}

MatQ scale(const Rational& c, const MatQ& a) {
  MatQ out(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int j = 0; j < a.cols(); ++j) out.at(r, j) = c * a.at(r, j);
  return out;
}

namespace {

// In-place row echelon; returns the rank.
int echelon(MatQ& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const Rational inv = Rational(1) / m.at(rank, col);
    for (int c = col; c < m.cols(); ++c) m.at(rank, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      const Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

constexpr std::uint64_t kPrime = 0x3fffffffffffffafull;  // 2^62 - 81, prime

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

// Residue of a rational mod kPrime; false when the denominator vanishes mod p.
bool residue(const Rational& q, std::uint64_t& out) {
  const mpq_class& v = q.raw();
  std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), kPrime);
  std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), kPrime);
  if (den == 0) return false;
  out = mod_mul(num, mod_inv(den));
  return true;
}

}  // namespace

int rank(MatQ a) { return echelon(a); }

std::vector<Rational> solve_linear(MatQ a, std::vector<Rational> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("solve_linear: singular matrix");
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
    }
    const Rational inv = Rational(1) / a.at(col, col);
    for (int c = col; c < n; ++c) a.at(col, c) *= inv;
    b[static_cast<size_t>(col)] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const Rational f = a.at(r, col);
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
    }
  }
  return b;
}

bool is_nonsingular(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("is_nonsingular: matrix not square");
  const int n = a.rows();
  // Modular elimination first: a nonzero determinant residue is a proof.
  std::vector<std::uint64_t> m(static_cast<size_t>(n) * n);
  bool ok = true;
  for (int r = 0; r < n && ok; ++r)
    for (int c = 0; c < n && ok; ++c) ok = residue(a.at(r, c), m[static_cast<size_t>(r) * n + c]);
  if (ok) {
    bool singular_mod_p = false;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r) {
        if (m[static_cast<size_t>(r) * n + col] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) {
        singular_mod_p = true;
        break;
      }
      if (pivot != col)
        for (int c = 0; c < n; ++c)
          std::swap(m[static_cast<size_t>(pivot) * n + c], m[static_cast<size_t>(col) * n + c]);
      const std::uint64_t inv = mod_inv(m[static_cast<size_t>(col) * n + col]);
      for (int r = col + 1; r < n; ++r) {
        const std::uint64_t f = mod_mul(m[static_cast<size_t>(r) * n + col], inv);
        if (f == 0) continue;
        for (int c = col; c < n; ++c) {
          std::uint64_t& x = m[static_cast<size_t>(r) * n + c];
          const std::uint64_t sub = mod_mul(f, m[static_cast<size_t>(col) * n + c]);
          x = (x >= sub) ? x - sub : x + kPrime - sub;
        }
      }
    }
    if (!singular_mod_p) return true;
  }
  // Zero residue (or bad denominators) is inconclusive; decide exactly.
  return rank(a) == n;
}

int kernel_dimension(const MatQ& a) {
  MatQ m = a;
  return a.cols() - echelon(m);
}

}  // namespace lieavg
