#pragma once

#include "xha/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xha {

/// Raised on invalid arithmetic (division by zero, bad embedding target, ...).
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, degree phi(n),
/// index i holding the coefficient of x^i. Cached internally.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

/// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
/// Conductor 1 encodes plain rationals. The representation is canonical:
/// coordinates modulo the n-th cyclotomic polynomial are unique.
class Cyc {
 public:
  Cyc() : conductor_(1), coeffs_(1) {}
  explicit Cyc(const Rat& r) : conductor_(1), coeffs_{r} {}
  Cyc(long value) : conductor_(1), coeffs_{Rat(value)} {}

  /// Coordinates of length phi(n); throws if the length is wrong.
  Cyc(long conductor, std::vector<Rat> coeffs);

  /// zeta_n^k.
  static Cyc root_of_unity(long n, long k = 1);
  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1); }

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value, if the element lies in Q inside Q(zeta_n).
  std::optional<Rat> as_rational() const;

  /// Rewrites into Q(zeta_m); m must be a multiple of the conductor.
  Cyc embedded(long m) const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws ArithmeticError on zero.
  Cyc inverse() const;
  Cyc pow(long e) const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// "p", "p/q", or "cyc(n)[c0,c1,...]".
  std::string to_string() const;

 private:
  long conductor_;
  std::vector<Rat> coeffs_;  // length phi(conductor_)
};

/// Parses the scalar literal syntax used in structure files:
/// rationals as "p" / "p/q", cyclotomic elements as "cyc(n)[c0,c1,...]".
std::optional<Cyc> parse_scalar(const std::string& text);

}  // namespace xha
