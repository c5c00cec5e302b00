#ifndef ONEPOINT_RATIONAL_HPP
#define ONEPOINT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace onepoint {

// Exact integers and rationals. mpq_class keeps values reduced with a
// positive denominator, which is exactly the canonical form we need.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline bool is_zero(const Rat& x) { return mpq_sgn(x.get_mpq_t()) == 0; }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw Error("field-arith/parse", "bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (is_zero(base)) throw Error("field-arith/div-zero", "0^negative");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  return r;
}

}  // namespace onepoint

#endif
