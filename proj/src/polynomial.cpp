#include "gkmcalc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkmcalc {

namespace {

int degree_of(const Exponent& e)
{
  return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db)
    return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
  if (index < 1 || index > nvars)
    throw std::out_of_range("variable index " + std::to_string(index) + " outside 1.." +
                            std::to_string(nvars));
  Exponent e(nvars, 0);
  e[index - 1] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::linear(std::span<const Rational> coeffs)
{
  Polynomial p(coeffs.size());
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    Exponent e(coeffs.size(), 0);
    e[l] = 1;
    p.add_term(e, coeffs[l]);
  }
  return p;
}

Polynomial Polynomial::linear(std::span<const int> coeffs)
{
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return linear(q);
}

Polynomial Polynomial::monomial(const Exponent& exp, const Rational& c)
{
  Polynomial p(exp.size());
  p.add_term(exp, c);
  return p;
}

bool Polynomial::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

int Polynomial::total_degree() const
{
  return terms_.empty() ? -1 : degree_of(terms_.begin()->first);
}

Rational Polynomial::coefficient(const Exponent& exp) const
{
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const
{
  return coefficient(Exponent(nvars_, 0));
}

void Polynomial::add_term(const Exponent& exp, const Rational& c)
{
  if (exp.size() != nvars_)
    throw DimensionMismatch("exponent length does not match ring dimension");
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& rhs) const
{
  if (nvars_ != rhs.nvars_)
    throw DimensionMismatch("polynomials live in rings of dimension " + std::to_string(nvars_) +
                            " and " + std::to_string(rhs.nvars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
  check_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
  check_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
  lhs.check_same_ring(rhs);
  Polynomial out(lhs.nvars_);
  Exponent e(lhs.nvars_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t l = 0; l < e.size(); ++l)
        e[l] = static_cast<std::uint16_t>(ea[l] + eb[l]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const
{
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_)
    c = -c;
  return out;
}

bool operator<(const Polynomial& a, const Polynomial& b)
{
  if (a.nvars_ != b.nvars_)
    return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first)
          return GrlexGreater{}(x.first, y.first);
        return x.second < y.second;
      });
}

std::string Polynomial::to_string(std::string_view prefix) const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t l = 0; l < e.size(); ++l) {
      if (e[l] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += std::string(prefix) + std::to_string(l + 1);
      if (e[l] > 1)
        mono += '^' + std::to_string(e[l]);
    }
    if (mono.empty())
      os << gkmcalc::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << gkmcalc::to_string(mag) << '*' << mono;
  }
  return os.str();
}

// Free functions --------------------------------------------------------------

Polynomial add(const Polynomial& p, const Polynomial& q)
{
  return p + q;
}

Polynomial mul(const Polynomial& p, const Polynomial& q)
{
  return p * q;
}

namespace {

// Returns the target index of each variable if the substitution merely
// renames variables, otherwise an empty vector.
std::vector<int> as_renaming(std::span<const Polynomial> assignment)
{
  std::vector<int> perm;
  perm.reserve(assignment.size());
  for (const auto& img : assignment) {
    if (img.terms().size() != 1)
      return {};
    const auto& [e, c] = *img.terms().begin();
    if (c != 1 || degree_of(e) != 1)
      return {};
    perm.push_back(static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin()) + 1);
  }
  return perm;
}

} // namespace

Polynomial permute_variables(const Polynomial& p, std::span<const int> perm)
{
  if (perm.size() != p.nvars())
    throw DimensionMismatch("renaming has wrong length");
  Polynomial out(p.nvars());
  Exponent e(p.nvars());
  for (const auto& [src, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t l = 0; l < src.size(); ++l)
      e[static_cast<std::size_t>(perm[l] - 1)] += src[l];
    out.add_term(e, c);
  }
  return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> assignment)
{
  if (assignment.size() != p.nvars())
    throw DimensionMismatch("substitution must assign every variable of the ring");
  if (p.is_zero())
    return assignment.empty() ? Polynomial(0) : Polynomial(assignment.front().nvars());
  const std::size_t target = assignment.empty() ? 0 : assignment.front().nvars();
  for (const auto& img : assignment)
    if (img.nvars() != target)
      throw DimensionMismatch("substitution images live in different rings");

  if (target == p.nvars()) {
    auto perm = as_renaming(assignment);
    if (!perm.empty())
      return permute_variables(p, perm);
  }

  // powers[l][k] = assignment[l]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  auto power = [&](std::size_t l, std::size_t k) -> const Polynomial& {
    auto& cache = powers[l];
    if (cache.empty())
      cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k)
      cache.push_back(cache.back() * assignment[l]);
    return cache[k];
  };

  Polynomial out(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t l = 0; l < e.size(); ++l)
      if (e[l] > 0)
        term *= power(l, e[l]);
    out += term;
  }
  return out;
}

Polynomial swap_variables(const Polynomial& p, std::size_t i, std::size_t j)
{
  std::vector<int> perm(p.nvars());
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm.at(i - 1), perm.at(j - 1));
  return permute_variables(p, perm);
}

Rational evaluate_at_origin(const Polynomial& p)
{
  return p.constant_term();
}

// LinearForm ------------------------------------------------------------------

LinearForm::LinearForm(Polynomial p) : poly_(std::move(p))
{
  if (poly_.is_zero())
    throw std::invalid_argument("a linear form must be nonzero");
  if (!is_homogeneous(poly_, 1))
    throw std::invalid_argument("'" + poly_.to_string() + "' is not homogeneous of degree 1");
}

LinearForm LinearForm::difference(std::size_t nvars, std::size_t j, std::size_t k)
{
  return LinearForm(Polynomial::variable(nvars, j) - Polynomial::variable(nvars, k));
}

std::vector<Rational> LinearForm::coefficients() const
{
  std::vector<Rational> out(nvars());
  for (const auto& [e, c] : poly_.terms())
    out[static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin())] = c;
  return out;
}

std::size_t LinearForm::pivot() const
{
  const auto c = coefficients();
  for (std::size_t l = c.size(); l-- > 0;)
    if (sgn(c[l]) != 0)
      return l + 1;
  return 0; // unreachable: forms are nonzero
}

Substitution LinearForm::hyperplane_substitution() const
{
  const auto c = coefficients();
  const std::size_t k = pivot() - 1;
  const std::size_t n = nvars();
  Substitution sub;
  sub.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (l != k) {
      sub.push_back(Polynomial::variable(n, l + 1));
      continue;
    }
    Polynomial solved(n);
    for (std::size_t m = 0; m < n; ++m)
      if (m != k && sgn(c[m]) != 0)
        solved += Polynomial::variable(n, m + 1) * Rational(-c[m] / c[k]);
    sub.push_back(std::move(solved));
  }
  return sub;
}

bool LinearForm::proportional_to(const LinearForm& other) const
{
  if (nvars() != other.nvars())
    return false;
  const auto a = coefficients();
  const auto b = other.coefficients();
  const std::size_t k = pivot() - 1;
  if (sgn(b[k]) == 0)
    return false;
  const Rational ratio = b[k] / a[k];
  for (std::size_t l = 0; l < a.size(); ++l)
    if (b[l] != ratio * a[l])
      return false;
  return true;
}

bool divides(const LinearForm& f, const Polynomial& p)
{
  if (f.nvars() != p.nvars())
    throw DimensionMismatch("form and polynomial live in different rings");
  const auto sub = f.hyperplane_substitution();
  return substitute(p, sub).is_zero();
}

Polynomial exact_divide(const Polynomial& p, const LinearForm& f)
{
  if (f.nvars() != p.nvars())
    throw DimensionMismatch("form and polynomial live in different rings");
  const std::size_t k = f.pivot() - 1;
  const Rational lead = f.coefficients()[k];
  Polynomial quotient(p.nvars());
  Polynomial rem = p;
  // Peel the term of highest degree in the pivot variable until none remain.
  for (;;) {
    const Exponent* best = nullptr;
    Rational best_coeff;
    for (const auto& [e, c] : rem.terms()) {
      if (e[k] > 0 && (best == nullptr || e[k] > (*best)[k])) {
        best = &e;
        best_coeff = c;
      }
    }
    if (best == nullptr)
      break;
    Exponent qe = *best;
    qe[k] -= 1;
    const Polynomial q_term = Polynomial::monomial(qe, best_coeff / lead);
    quotient += q_term;
    rem -= q_term * f.polynomial();
  }
  if (!rem.is_zero())
    throw NotDivisible("'" + p.to_string() + "' is not divisible by '" + f.to_string() + "'");
  return quotient;
}

Polynomial poly_divided_difference(const Polynomial& p, std::size_t i)
{
  if (i < 1 || i >= p.nvars())
    throw std::out_of_range("simple index " + std::to_string(i) + " outside 1.." +
                            std::to_string(p.nvars() == 0 ? 0 : p.nvars() - 1));
  const Polynomial numerator = p - swap_variables(p, i, i + 1);
  return exact_divide(numerator, LinearForm::difference(p.nvars(), i, i + 1));
}

Polynomial poly_divided_difference(const Polynomial& p, std::span<const Polynomial> reflection,
                                   const LinearForm& root)
{
  return exact_divide(p - substitute(p, reflection), root);
}

bool is_homogeneous(const Polynomial& p, int degree)
{
  for (const auto& [e, c] : p.terms())
    if (degree_of(e) != degree)
      return false;
  return true;
}

Polynomial product(std::span<const LinearForm> forms, std::size_t nvars)
{
  Polynomial out = Polynomial::constant(nvars, 1);
  for (const auto& f : forms)
    out *= f.polynomial();
  return out;
}

} // namespace gkmcalc
