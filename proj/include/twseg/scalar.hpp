#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace twseg {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Malformed input: bad JSON, dimension mismatches, unparsable scalars.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical check that was asked for did not hold, or an operation
/// needs something the rationals cannot provide (irrational eigenvalues).
class math_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

template <class F>
bool is_zero(const F& x) {
  return x == F(0);
}

/// Parses "p/q" or "p". Rejects a zero denominator and trailing garbage.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw input_error("empty scalar");
  s = s.substr(first, last - first + 1);
  if (s.front() == '+') s.erase(0, 1);

  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw input_error("malformed scalar '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw input_error("zero denominator in scalar '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

/// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Scalar ratio(long n, long d) {
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Scalar& x) { return x.get_str(); }

}  // namespace twseg
