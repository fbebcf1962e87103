#include "xha/cyclotomic.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace xha {

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      BigInt p(text);
      return Rat(p);
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    BigInt p(num), q(den);
    if (q == 0) return std::nullopt;
    return Rat(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string rational_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Quotient of exact division a / b for monic integer b (remainder known zero
// for the cyclotomic recursion).
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const long db = static_cast<long>(b.size()) - 1;
  std::vector<BigInt> q(a.size() - b.size() + 1);
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::map<long, std::vector<BigInt>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
  if (n < 1) throw ArithmeticError("cyclotomic_polynomial: conductor must be positive");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;

  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::function<const std::vector<BigInt>&(long)> get = [&](long m) -> const std::vector<BigInt>& {
    auto found = g_cyclo_cache.find(m);
    if (found != g_cyclo_cache.end()) return found->second;
    std::vector<BigInt> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
      if (m % d == 0) num = poly_divide_exact(std::move(num), get(d));
    }
    return g_cyclo_cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

namespace {

// Reduces a rational polynomial modulo Phi_n and truncates to length phi(n).
std::vector<Rat> reduce_mod_cyclotomic(std::vector<Rat> poly, long n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const long deg = static_cast<long>(phi_poly.size()) - 1;
  for (long i = static_cast<long>(poly.size()) - 1; i >= deg; --i) {
    Rat c = poly[i];
    if (c == 0) continue;
    for (long j = 0; j <= deg; ++j) poly[i - deg + j] -= c * Rat(phi_poly[j]);
  }
  poly.resize(deg);
  return poly;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Cyc::Cyc(long conductor, std::vector<Rat> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ < 1) throw ArithmeticError("Cyc: conductor must be positive");
  if (static_cast<long>(coeffs_.size()) != euler_phi(conductor_))
    throw ArithmeticError("Cyc: coefficient list must have length phi(conductor)");
}

Cyc Cyc::root_of_unity(long n, long k) {
  if (n < 1) throw ArithmeticError("root_of_unity: conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> poly(k + 1);
  poly[k] = 1;
  return Cyc(n, reduce_mod_cyclotomic(std::move(poly), n));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rat> Cyc::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyc Cyc::embedded(long m) const {
  if (m == conductor_) return *this;
  if (m < 1 || m % conductor_ != 0)
    throw ArithmeticError("embed: target conductor must be a multiple of the source conductor");
  const long stride = m / conductor_;
  std::vector<Rat> poly(static_cast<std::size_t>(conductor_ == 1 ? 1 : (coeffs_.size() - 1) * stride + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
  return Cyc(m, reduce_mod_cyclotomic(std::move(poly), m));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  if (conductor_ != o.conductor_) {
    long m = lcm_long(conductor_, o.conductor_);
    return embedded(m) + o.embedded(m);
  }
  Cyc r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  if (conductor_ != o.conductor_) {
    long m = lcm_long(conductor_, o.conductor_);
    return embedded(m) * o.embedded(m);
  }
  std::vector<Rat> prod(coeffs_.size() * 2);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Cyc(conductor_, reduce_mod_cyclotomic(std::move(prod), conductor_));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse: division by zero");
  if (is_rational()) return Cyc(conductor_ == 1 ? Cyc(Rat(1) / coeffs_[0]) : Cyc(Rat(1) / coeffs_[0]).embedded(conductor_));
  // Extended Euclid for gcd(a, Phi_n) = 1 in Q[x]: find u with u*a = 1 mod Phi_n.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  std::vector<Rat> r0(phi_int.size()), r1(coeffs_.begin(), coeffs_.end());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r1);
  std::vector<Rat> s0{}, s1{Rat(1)};  // coefficients of `a` along the remainder sequence
  while (true) {
    // r1 divides into r0
    std::vector<Rat> q;
    std::vector<Rat> rem = r0;
    const long d1 = static_cast<long>(r1.size()) - 1;
    if (static_cast<long>(rem.size()) - 1 >= d1) q.assign(rem.size() - r1.size() + 1, Rat(0));
    for (long i = static_cast<long>(rem.size()) - 1; i >= d1; --i) {
      if (rem[i] == 0) continue;
      Rat c = rem[i] / r1[d1];
      q[i - d1] = c;
      for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
    }
    trim(rem);
    // s_next = s0 - q*s1
    std::vector<Rat> s_next = s0;
    s_next.resize(std::max(s_next.size(), q.size() + s1.size()), Rat(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
    }
    trim(s_next);
    if (rem.empty()) {
      // r1 is the gcd; it must be a nonzero constant since Phi_n is irreducible.
      if (r1.size() != 1) throw ArithmeticError("inverse: element is a zero divisor (internal error)");
      for (auto& c : s1) c /= r1[0];
      s1.resize(euler_phi(conductor_), Rat(0));
      return Cyc(conductor_, reduce_mod_cyclotomic(std::move(s1), conductor_));
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc result = Cyc::one().embedded(conductor_);
  Cyc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Cyc::operator==(const Cyc& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  long m = lcm_long(conductor_, o.conductor_);
  return embedded(m).coeffs_ == o.embedded(m).coeffs_;
}

std::string Cyc::to_string() const {
  if (auto r = as_rational()) return rational_to_string(*r);
  std::ostringstream os;
  os << "cyc(" << conductor_ << ")[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << rational_to_string(coeffs_[i]);
  }
  os << "]";
  return os.str();
}

std::optional<Cyc> parse_scalar(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("cyc(", 0) == 0) {
    auto close = s.find(')');
    if (close == std::string::npos) return std::nullopt;
    long n = 0;
    try {
      std::size_t used = 0;
      n = std::stol(s.substr(4, close - 4), &used);
      if (used != close - 4) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (n < 1) return std::nullopt;
    if (close + 1 >= s.size() || s[close + 1] != '[' || s.back() != ']') return std::nullopt;
    std::string body = s.substr(close + 2, s.size() - close - 3);
    std::vector<Rat> coeffs;
    if (!body.empty()) {
      std::size_t pos = 0;
      while (true) {
        auto comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto r = parse_rational(item);
        if (!r) return std::nullopt;
        coeffs.push_back(*r);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    if (static_cast<long>(coeffs.size()) != euler_phi(n)) return std::nullopt;
    return Cyc(n, std::move(coeffs));
  }
  auto r = parse_rational(s);
  if (!r) return std::nullopt;
  return Cyc(*r);
}

}  // namespace xha
