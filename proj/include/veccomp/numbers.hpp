#ifndef VECCOMP_NUMBERS_HPP
#define VECCOMP_NUMBERS_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace veccomp {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Residue context for mod-aware operations. All reduced values live in [0, value).
class Modulus {
 public:
  explicit Modulus(BigInt value) : value_(std::move(value)) {
    if (value_ < 2) throw std::invalid_argument("modulus must be >= 2");
  }
  explicit Modulus(long value) : Modulus(BigInt(value)) {}

  const BigInt& value() const { return value_; }

 private:
  BigInt value_;
};

inline void reduce_into(BigInt& x, const Modulus* mod) {
  if (mod) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod->value().get_mpz_t());
  }
}

inline BigInt reduced(BigInt x, const Modulus* mod) {
  reduce_into(x, mod);
  return x;
}

// Combinatorial convention: C(n, 0) = 1 for every n, and 0 whenever
// k < 0 or n < k. This differs from GMP's extended binomial for n < 0.
inline BigInt binomial(long n, long k) {
  if (k < 0) return BigInt(0);
  if (k == 0) return BigInt(1);
  if (n < k) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("expected a prime, got " + std::to_string(p));
  }
}

inline std::string to_dec(const BigInt& x) { return x.get_str(10); }

}  // namespace veccomp

#endif
