#pragma once
// Exact coefficient rings: the integers Z and the prime fields F_p.
// No floating point anywhere; F_p values are kept normalized to [0, p).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smith {

using i64 = std::int64_t;

class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns p when n = p^k for a prime p, else 0.
inline i64 prime_power_base(i64 n) {
  if (n < 2) return 0;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }
  return n;  // n itself prime
}

// Coefficient ring tag. prime() == 0 means Z.
class Ring {
public:
  Ring() = default;
  static Ring integers() { return Ring(0); }
  static Ring mod(i64 p) {
    if (!is_prime(p)) throw error("Ring::mod: " + std::to_string(p) + " is not prime");
    return Ring(p);
  }

  bool is_field() const { return p_ != 0; }
  i64 prime() const { return p_; }

  i64 normalize(i64 v) const {
    if (p_ == 0) return v;
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  i64 add(i64 a, i64 b) const { return normalize(a + b); }
  i64 sub(i64 a, i64 b) const { return normalize(a - b); }
  i64 mul(i64 a, i64 b) const { return normalize(a * b); }
  i64 neg(i64 a) const { return normalize(-a); }

  bool operator==(const Ring& o) const { return p_ == o.p_; }
  bool operator!=(const Ring& o) const { return p_ != o.p_; }

  std::string name() const { return p_ == 0 ? "Z" : "F" + std::to_string(p_); }

  static Ring parse(const std::string& s) {
    if (s == "Z") return integers();
    if (s.size() >= 2 && s[0] == 'F') return mod(std::stoll(s.substr(1)));
    throw error("unknown ring name: " + s);
  }

private:
  explicit Ring(i64 p) : p_(p) {}
  i64 p_ = 0;
};

// A ring element that remembers where it lives.
struct Scalar {
  Ring ring;
  i64 value = 0;

  bool operator==(const Scalar& o) const { return ring == o.ring && value == o.value; }
};

}  // namespace smith
