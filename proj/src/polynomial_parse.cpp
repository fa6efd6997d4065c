#include "gkmcalc/polynomial.hpp"

#include <cctype>

namespace gkmcalc {

namespace {

bool is_var_prefix(char c)
{
  return c == 't' || c == 'a' || c == 'x';
}

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' integer]
//   atom   := rational | var | '(' expr ')'
class Parser {
public:
  Parser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

  Polynomial parse()
  {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const
  {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at column " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c)
  {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom()
  {
    skip();
    if (pos_ >= s_.size())
      return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || is_var_prefix(c);
  }

  std::string digits()
  {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial expr()
  {
    Polynomial acc(n_);
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc += negate ? -t : t;
    while (peek('+') || peek('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  Polynomial term()
  {
    Polynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_atom()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor()
  {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const unsigned long k = std::stoul(digits());
      Polynomial out = Polynomial::constant(n_, 1);
      for (unsigned long j = 0; j < k; ++j)
        out *= base;
      return out;
    }
    return base;
  }

  Polynomial atom()
  {
    skip();
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')'))
        fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        lit += '/' + digits();
      }
      return Polynomial::constant(n_, parse_rational(lit));
    }
    if (is_var_prefix(c)) {
      ++pos_;
      const std::size_t index = std::stoul(digits());
      if (index < 1 || index > n_)
        fail("variable index " + std::to_string(index) + " outside 1.." + std::to_string(n_));
      return Polynomial::variable(n_, index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars)
{
  return Parser(text, nvars).parse();
}

std::size_t max_variable_index(std::string_view text)
{
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_var_prefix(text[i]))
      continue;
    std::size_t j = i + 1;
    std::size_t value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      value = value * 10 + static_cast<std::size_t>(text[j++] - '0');
    if (j > i + 1)
      best = std::max(best, value);
  }
  return best;
}

} // namespace gkmcalc
