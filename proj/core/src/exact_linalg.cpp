#include "fixloc/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fixloc {

Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

long degree(const Poly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

Rational evaluate(const Poly& p, const Rational& z) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trimmed(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return trimmed(std::move(out));
}

namespace {

// Remainder of a modulo a non-zero b.
Poly poly_rem(Poly a, const Poly& b) {
  a = trimmed(std::move(a));
  const long db = degree(b);
  while (degree(a) >= db) {
    const long da = degree(a);
    Rational f = a[da] / b[db];
    for (long i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a = trimmed(std::move(a));
  }
  return a;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly rem = trimmed(a);
  const long db = degree(b);
  if (db < 0) throw std::invalid_argument("division by the zero polynomial");
  if (degree(rem) < db) return {};
  Poly q(degree(rem) - db + 1, Rational(0));
  while (degree(rem) >= db) {
    const long dr = degree(rem);
    Rational f = rem[dr] / b[db];
    q[dr - db] = f;
    for (long i = 0; i <= db; ++i) rem[dr - db + i] -= f * b[i];
    rem = trimmed(std::move(rem));
  }
  if (!rem.empty()) throw std::invalid_argument("polynomial division is not exact");
  return trimmed(std::move(q));
}

EchelonForm bareiss_echelon(const Matrix& m, std::size_t cols) {
  EchelonForm ef;
  ef.cols = cols;
  for (const auto& row : m) {
    Integer scale = 1;
    for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> irow(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational s = row[j] * scale;
      irow[j] = s.get_num();
    }
    ef.rows.push_back(std::move(irow));
  }
  auto& a = ef.rows;
  const std::size_t nrows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ef.pivots.push_back(c);
    ++r;
  }
  return ef;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return bareiss_echelon(m, cols).pivots.size(); }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m, std::size_t cols) {
  const EchelonForm ef = bareiss_echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t k = ef.pivots.size(); k-- > 0;) {
      const std::size_t pc = ef.pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0) acc += Rational(ef.rows[k][j]) * x[j];
      }
      x[pc] = -acc / Rational(ef.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace fixloc
