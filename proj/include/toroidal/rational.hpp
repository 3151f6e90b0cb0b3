#ifndef TOROIDAL_RATIONAL_HPP
#define TOROIDAL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toroidal {

/// Exact coefficient field used everywhere in the library.
using Rational = mpq_class;

/// Raised for inputs outside an operation's domain (bad weight, eta not in Q1+, ...).
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical "p/q" form, lowest terms, q > 0. Integers keep the "/1" suffix
/// so that consumers never have to special-case the format.
inline std::string to_string(Rational q)
{
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p", "p/q", with optional sign. Rejects q == 0 and trailing junk.
inline Rational parse_rational(std::string_view text)
{
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw domain_error("empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(num.begin());
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw domain_error("malformed rational '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw domain_error("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::size_t bit_size(const Rational& q)
{
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

} // namespace toroidal

#endif
