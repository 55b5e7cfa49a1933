#include "todorov/lattice.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "todorov/error.hpp"
#include "todorov/gf2.hpp"

namespace todorov {

DivisorClass DivisorClass::unit(std::size_t rank, std::size_t i) {
  DivisorClass d = zero(rank);
  d.coords.at(i) = 1;
  return d;
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size() != size()) throw InputError("divisor class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.size() != size()) throw InputError("divisor class length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

DivisorClass operator*(std::int64_t k, DivisorClass a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

DivisorClass sum(std::span<const DivisorClass> classes, std::size_t rank) {
  DivisorClass s = DivisorClass::zero(rank);
  for (const auto& c : classes) s += c;
  return s;
}

IntLattice::IntLattice(std::vector<std::string> basis, IntMatrix gram, std::vector<DivisorClass> declared_even,
                       Parity parity)
    : basis_(std::move(basis)), gram_(std::move(gram)), declared_even_(std::move(declared_even)), parity_(parity) {
  const std::size_t n = basis_.size();
  if (n == 0) throw InputError("lattice rank must be positive");
  if (gram_.size() != n) throw InputError("gram has " + std::to_string(gram_.size()) + " rows, expected " + std::to_string(n));
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b).second) throw InputError("duplicate basis label '" + b + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InputError("gram row " + std::to_string(i) + " has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i])
        throw InputError("gram is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (parity_ == Parity::Even && gram_[i][i] % 2 != 0)
      throw InputError("odd self-intersection on basis element '" + basis_[i] + "' of an even lattice");
  }
  for (const auto& d : declared_even_) {
    check(d);
    if (parity_ == Parity::Even && square(d) % 8 != 0)
      throw InputError("declared 2-divisible class has square " + std::to_string(square(d)) + ", not divisible by 8");
  }
}

std::optional<std::size_t> IntLattice::index_of(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

DivisorClass IntLattice::operator[](const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw InputError("unknown basis label '" + label + "'");
  return unit(*i);
}

void IntLattice::check(const DivisorClass& d) const {
  if (d.size() != rank())
    throw InputError("class has " + std::to_string(d.size()) + " coordinates, lattice rank is " + std::to_string(rank()));
}

std::int64_t IntLattice::pair(const DivisorClass& a, const DivisorClass& b) const {
  check(a);
  check(b);
  std::int64_t total = 0;
  bool overflow = false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      std::int64_t term = 0;
      overflow |= __builtin_mul_overflow(gram_[i][j], b[j], &term);
      overflow |= __builtin_add_overflow(row, term, &row);
    }
    std::int64_t term = 0;
    overflow |= __builtin_mul_overflow(a[i], row, &term);
    overflow |= __builtin_add_overflow(total, term, &total);
  }
  if (overflow) throw DomainError("intersection number does not fit in 64 bits");
  return total;
}

IntLattice IntLattice::with_declared_even(std::vector<DivisorClass> declared) const {
  return IntLattice(basis_, gram_, std::move(declared), parity_);
}

// ---------------------------------------------------------------------------
// Leading principal minors by Bareiss elimination without pivoting. The
// diagonal entry after step k is exactly det of the leading (k+1)-minor.

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }

// Calls `visit(k, minor_k)` for each leading minor until it returns false or a
// minor vanishes (after which plain Bareiss cannot continue).
template <class T, class Visit>
void bareiss_minors(std::vector<std::vector<T>> a, Visit&& visit) {
  const std::size_t n = a.size();
  T prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const T pivot = a[k][k];
    if (!visit(k, pivot) || pivot == 0) return;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = checked_sub(checked_mul(a[i][j], pivot), checked_mul(a[i][k], a[k][j])) / prev;
      }
    }
    prev = pivot;
  }
}

template <class T>
bool negative_definite_impl(const std::vector<std::vector<T>>& m) {
  bool ok = true;
  bareiss_minors(m, [&](std::size_t k, const T& minor) {
    // sign of the k-th leading minor must be (-1)^(k+1)
    const bool want_negative = (k % 2 == 0);
    ok = want_negative ? (minor < 0) : (minor > 0);
    return ok;
  });
  return ok;
}

}  // namespace

bool is_negative_definite(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InputError("matrix is not square");
  }
  if (m.empty()) throw InputError("empty matrix");
  try {
    return negative_definite_impl(m);
  } catch (const Overflow&) {
    return negative_definite_impl(to_big(m));
  }
}

bool is_negative_definite(const IntLattice& lat, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InputError("is_negative_definite: empty subset");
  std::set<std::size_t> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size()) throw InputError("is_negative_definite: repeated index");
  IntMatrix sub(subset.size(), std::vector<std::int64_t>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (subset[i] >= lat.rank() || subset[j] >= lat.rank()) throw InputError("is_negative_definite: index out of range");
      sub[i][j] = lat.gram()[subset[i]][subset[j]];
    }
  }
  return is_negative_definite(sub);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  // Every leading minor is computed on its own so that a vanishing minor does
  // not stop the sequence.
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    BigMatrix sub(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    out.push_back(determinant(sub));
  }
  return out;
}

// ---------------------------------------------------------------------------

EvennessCertificate is_even(const IntLattice& lat, const DivisorClass& b) {
  lat.check(b);
  const auto& declared = lat.declared_even();
  gf2::Matrix a(lat.rank(), declared.size());
  gf2::Vector rhs(lat.rank());
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    rhs[i] = static_cast<std::uint8_t>(b[i] & 1);
    for (std::size_t k = 0; k < declared.size(); ++k) a(i, k) = static_cast<std::uint8_t>(declared[k][i] & 1);
  }

  EvennessCertificate cert;
  auto x = gf2::solve(a, rhs);
  if (!x) return cert;

  DivisorClass residual = b;
  cert.coefficients.resize(declared.size());
  for (std::size_t k = 0; k < declared.size(); ++k) {
    cert.coefficients[k] = (*x)[k];
    if ((*x)[k] != 0) residual -= declared[k];
  }
  for (auto& c : residual.coords) c /= 2;  // exact: every coordinate is even here
  cert.half_residual = std::move(residual);
  cert.even = true;
  return cert;
}

Rational half_square(const IntLattice& lat, const DivisorClass& b) { return Rational(lat.square(b), 4); }

// ---------------------------------------------------------------------------
// Smith normal form.

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t p = inner == 0 ? 0 : b[0].size();
  BigMatrix c(n, std::vector<Integer>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw InputError("multiply: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Integer determinant(const BigMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

BigMatrix identity(std::size_t n) {
  BigMatrix id(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Row operation on both D and U: row_i += k * row_j.
void add_row(BigMatrix& d, BigMatrix& u, std::size_t i, std::size_t j, const Integer& k) {
  for (std::size_t c = 0; c < d[i].size(); ++c) d[i][c] += k * d[j][c];
  for (std::size_t c = 0; c < u[i].size(); ++c) u[i][c] += k * u[j][c];
}

// Column operation on both D and V: col_i += k * col_j.
void add_col(BigMatrix& d, BigMatrix& v, std::size_t i, std::size_t j, const Integer& k) {
  for (auto& row : d) row[i] += k * row[j];
  for (auto& row : v) row[i] += k * row[j];
}

void swap_rows(BigMatrix& d, BigMatrix& u, std::size_t i, std::size_t j) {
  std::swap(d[i], d[j]);
  std::swap(u[i], u[j]);
}

void swap_cols(BigMatrix& d, BigMatrix& v, std::size_t i, std::size_t j) {
  for (auto& row : d) std::swap(row[i], row[j]);
  for (auto& row : v) std::swap(row[i], row[j]);
}

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& r : m) {
    if (r.size() != cols) throw InputError("smith_normal_form: ragged matrix");
  }
  SmithForm f{identity(rows), m, identity(cols)};
  BigMatrix& d = f.d;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (!best || abs(d[i][j]) < abs(d[best->first][best->second]))) best = {i, j};
      if (!best) break;
      swap_rows(d, f.u, t, best->first);
      swap_cols(d, f.v, t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] != 0) {
          add_row(d, f.u, i, t, -(d[i][t] / d[t][t]));
          clean = clean && d[i][t] == 0;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] != 0) {
          add_col(d, f.v, j, t, -(d[t][j] / d[t][t]));
          clean = clean && d[t][j] == 0;
        }
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row in and repeat.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(d, f.u, t, *bad_row, 1);
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : f.u[t]) x = -x;
    }
  }
  return f;
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_normal_form(to_big(m)); }

std::optional<std::vector<Integer>> solve_integral(const BigMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.size()) throw InputError("solve_integral: dimension mismatch");
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  SmithForm f = smith_normal_form(m);

  // D y = U b, x = V y
  std::vector<Integer> ub(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) ub[i] += f.u[i][k] * b[k];

  std::vector<Integer> y(cols, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Integer di = i < cols ? f.d[i][i] : Integer(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % di != 0) return std::nullopt;
    y[i] = ub[i] / di;
  }
  std::vector<Integer> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t k = 0; k < cols; ++k) x[i] += f.v[i][k] * y[k];
  return x;
}

}  // namespace todorov
