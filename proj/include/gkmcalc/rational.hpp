#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkmcalc {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;

/// Canonical "num/den" form; integers print without a denominator.
inline std::string to_string(const Rational& q)
{
  return q.get_str();
}

/// Parses "7", "-3/4" or "6/8" (normalized to "3/4"). Rejects zero denominators.
inline Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  if (s.front() == '+')
    s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && t.front() == '-')
      t.remove_prefix(1);
    if (t.empty())
      return false;
    for (char c : t)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true))
      throw std::invalid_argument("malformed rational literal '" + s + "'");
  } else {
    if (!valid_int(std::string_view(s).substr(0, slash), true) ||
        !valid_int(std::string_view(s).substr(slash + 1), false))
      throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

} // namespace gkmcalc
