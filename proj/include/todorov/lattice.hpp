#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace todorov {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<Integer>>;

/// Integer coordinate vector in the basis of some lattice.
struct DivisorClass {
  std::vector<std::int64_t> coords;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  DivisorClass(std::initializer_list<std::int64_t> c) : coords(c) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<std::int64_t>(rank, 0)); }
  static DivisorClass unit(std::size_t rank, std::size_t i);

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t k, DivisorClass a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass sum(std::span<const DivisorClass> classes, std::size_t rank);

/// Whether the lattice must be even (a model of Pic of a K3) or may carry
/// odd squares (the blown-up plane used by canonical resolution).
enum class Parity { Even, Any };

/// A free abelian group of finite rank with a symmetric integer pairing,
/// plus the classes known to be divisible by two in the ambient Picard group.
class IntLattice {
 public:
  IntLattice() = default;
  /// Throws InputError if the gram is not square/symmetric, a declared class
  /// has the wrong length, or (for Parity::Even) a diagonal entry is odd or a
  /// declared class D has D^2 not divisible by 8.
  IntLattice(std::vector<std::string> basis, IntMatrix gram, std::vector<DivisorClass> declared_even = {},
             Parity parity = Parity::Even);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<DivisorClass>& declared_even() const { return declared_even_; }
  Parity parity() const { return parity_; }

  DivisorClass unit(std::size_t i) const { return DivisorClass::unit(rank(), i); }
  DivisorClass zero() const { return DivisorClass::zero(rank()); }
  /// Basis element by label; throws InputError for unknown names.
  DivisorClass operator[](const std::string& label) const;
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Throws InputError if the class does not have length rank().
  void check(const DivisorClass& d) const;

  std::int64_t pair(const DivisorClass& a, const DivisorClass& b) const;
  std::int64_t square(const DivisorClass& a) const { return pair(a, a); }

  /// Copy with a different declared_even list.
  IntLattice with_declared_even(std::vector<DivisorClass> declared) const;

 private:
  std::vector<std::string> basis_;
  IntMatrix gram_;
  std::vector<DivisorClass> declared_even_;
  Parity parity_ = Parity::Even;
};

inline std::int64_t pair(const IntLattice& lat, const DivisorClass& a, const DivisorClass& b) { return lat.pair(a, b); }

/// True iff the symmetric matrix is negative definite. Uses fraction-free
/// elimination to get the leading principal minors exactly; machine integers
/// first, arbitrary precision if anything overflows.
bool is_negative_definite(const IntMatrix& m);
/// Principal submatrix of the gram on `subset`; throws InputError on an empty
/// or repeated index set.
bool is_negative_definite(const IntLattice& lat, std::span<const std::size_t> subset);

/// Leading principal minors det(M[0..k, 0..k]) for k = 0..n-1, exact.
std::vector<Integer> leading_principal_minors(const IntMatrix& m);

/// Witness that B is 2-divisible modulo the declared classes:
/// B = 2 * half_residual + sum_k coefficients[k] * declared_even[k].
struct EvennessCertificate {
  bool even = false;
  std::vector<int> coefficients;
  DivisorClass half_residual;

  explicit operator bool() const { return even; }
};

EvennessCertificate is_even(const IntLattice& lat, const DivisorClass& b);

/// B^2 / 4, exact.
Rational half_square(const IntLattice& lat, const DivisorClass& b);

struct SmithForm {
  BigMatrix u;  // m x m, unimodular
  BigMatrix d;  // m x n, diagonal with d_i | d_{i+1}, d_i >= 0
  BigMatrix v;  // n x n, unimodular
};

/// U * M * V = D.
SmithForm smith_normal_form(const BigMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

/// Integer solution of M x = b, if any.
std::optional<std::vector<Integer>> solve_integral(const BigMatrix& m, const std::vector<Integer>& b);

Integer determinant(const BigMatrix& m);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigMatrix to_big(const IntMatrix& m);

}  // namespace todorov
