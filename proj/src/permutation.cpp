#include "gkmcalc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gkmcalc {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line))
{
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int x : one_line_) {
    if (x < 1 || static_cast<std::size_t>(x) > one_line_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("one-line notation is not a bijection of 1..n");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(std::size_t n, std::size_t i)
{
  if (i < 1 || i >= n)
    throw std::out_of_range("simple index outside 1..n-1");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(std::size_t n, std::size_t j, std::size_t k)
{
  if (j < 1 || k < 1 || j > n || k > n || j == k)
    throw std::out_of_range("transposition indices must be distinct and within 1..n");
  auto p = identity(n);
  std::swap(p.one_line_[j - 1], p.one_line_[k - 1]);
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t n)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty())
    throw std::invalid_argument("empty permutation");
  if (s == "e") {
    if (n == 0)
      throw std::invalid_argument("'e' needs the size n");
    return identity(n);
  }
  if (s.front() == '(') {
    if (n == 0)
      throw std::invalid_argument("cycle notation needs the size n");
    auto p = identity(n);
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(')
        throw std::invalid_argument("malformed cycle notation '" + s + "'");
      const auto close = s.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unterminated cycle in '" + s + "'");
      const std::string body = s.substr(pos + 1, close - pos - 1);
      std::vector<int> cyc;
      if (body.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= body.size()) {
          const auto comma = body.find(',', start);
          cyc.push_back(std::stoi(body.substr(start, comma - start)));
          if (comma == std::string::npos)
            break;
          start = comma + 1;
        }
      } else {
        for (char c : body)
          cyc.push_back(c - '0');
      }
      // Cycles are applied right to left, as products of functions.
      std::vector<int> cycle_map(n);
      std::iota(cycle_map.begin(), cycle_map.end(), 1);
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int a = cyc[k];
        const int b = cyc[(k + 1) % cyc.size()];
        if (a < 1 || static_cast<std::size_t>(a) > n)
          throw std::invalid_argument("cycle entry outside 1..n in '" + s + "'");
        cycle_map[static_cast<std::size_t>(a - 1)] = b;
      }
      p = compose(p, Permutation(cycle_map));
      pos = close + 1;
    }
    return p;
  }
  std::vector<int> v;
  if (s.find(',') != std::string::npos) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = s.find(',', start);
      const std::string tok = s.substr(start, comma - start);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw std::invalid_argument("malformed one-line notation '" + s + "'");
      v.push_back(std::stoi(tok));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("malformed one-line notation '" + s + "'");
      v.push_back(c - '0');
    }
  }
  if (n != 0 && v.size() != n)
    throw std::invalid_argument("permutation '" + s + "' does not have size " + std::to_string(n));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    if (one_line_[i] != static_cast<int>(i + 1))
      return false;
  return true;
}

std::string Permutation::to_string() const
{
  std::string out;
  const bool commas = one_line_.size() > 9;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (commas && i > 0)
      out += ',';
    out += std::to_string(one_line_[i]);
  }
  return out;
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> done(one_line_.size(), false);
  const bool commas = one_line_.size() > 9;
  for (std::size_t start = 1; start <= one_line_.size(); ++start) {
    if (done[start - 1] || one_line_[start - 1] == static_cast<int>(start))
      continue;
    out += '(';
    std::size_t cur = start;
    bool first = true;
    while (!done[cur - 1]) {
      done[cur - 1] = true;
      if (commas && !first)
        out += ',';
      out += std::to_string(cur);
      first = false;
      cur = static_cast<std::size_t>(one_line_[cur - 1]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& u, const Permutation& v)
{
  if (u.size() != v.size())
    throw std::invalid_argument("cannot compose permutations of different sizes");
  std::vector<int> out(u.size());
  for (std::size_t i = 1; i <= u.size(); ++i)
    out[i - 1] = u(static_cast<std::size_t>(v(i)));
  return Permutation(std::move(out));
}

int length(const Permutation& w)
{
  // Inversion pairs of w^{-1} are in bijection with those of w.
  int count = 0;
  const auto& a = w.one_line();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j])
        ++count;
  return count;
}

InversionSet inversions(const Permutation& w)
{
  const auto inv = w.inverse();
  const std::size_t n = w.size();
  InversionSet out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (inv(i) > inv(j))
        out.insert(LinearForm::difference(n, i, j));
  return out;
}

bool has_left_descent(const Permutation& w, std::size_t i)
{
  const auto inv = w.inverse();
  return inv(i) > inv(i + 1);
}

std::vector<int> reduced_word(const Permutation& w)
{
  std::vector<int> word;
  Permutation cur = w;
  const std::size_t n = w.size();
  while (!cur.is_identity()) {
    for (std::size_t i = 1; i < n; ++i) {
      if (has_left_descent(cur, i)) {
        word.push_back(static_cast<int>(i));
        cur = compose(Permutation::simple(n, i), cur);
        break;
      }
    }
  }
  return word;
}

Permutation from_word(std::size_t n, const std::vector<int>& word)
{
  auto p = Permutation::identity(n);
  for (int i : word)
    p = compose(p, Permutation::simple(n, static_cast<std::size_t>(i)));
  return p;
}

std::vector<Permutation> lower_interval(const Permutation& w)
{
  const std::size_t n = w.size();
  std::set<Permutation> reach{Permutation::identity(n)};
  for (int i : reduced_word(w)) {
    const auto s = Permutation::simple(n, static_cast<std::size_t>(i));
    std::vector<Permutation> added;
    for (const auto& x : reach)
      added.push_back(compose(x, s));
    reach.insert(added.begin(), added.end());
  }
  std::vector<Permutation> out(reach.begin(), reach.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return length(a) < length(b); });
  return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w)
{
  if (v.size() != w.size())
    throw std::invalid_argument("Bruhat comparison of permutations of different sizes");
  if (length(v) > length(w))
    return false;
  const auto interval = lower_interval(w);
  return std::find(interval.begin(), interval.end(), v) != interval.end();
}

Polynomial apply_to_variables(const Permutation& u, const Polynomial& p)
{
  if (u.size() != p.nvars())
    throw DimensionMismatch("permutation size does not match ring dimension");
  return permute_variables(p, u.one_line());
}

InversionSet apply_to_forms(const Permutation& u, const InversionSet& forms)
{
  InversionSet out;
  for (const auto& f : forms)
    out.insert(LinearForm(apply_to_variables(u, f.polynomial())));
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

} // namespace gkmcalc
