#include "gkmcalc/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gkmcalc {

namespace {

std::vector<int> to_std(const Eigen::VectorXi& v)
{
  return std::vector<int>(v.data(), v.data() + v.size());
}

} // namespace

// RootSystem ------------------------------------------------------------------

RootSystem RootSystem::type_a(std::size_t n)
{
  if (n < 1)
    throw std::invalid_argument("type A needs n >= 1");
  RootSystem rs;
  rs.name_ = "A:" + std::to_string(n);
  rs.type_a_ = true;
  rs.prefix_ = "t";
  const auto r = static_cast<Eigen::Index>(n - 1);
  rs.cartan_ = Eigen::MatrixXi::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    rs.cartan_(i, i) = 2;
    if (i + 1 < r) {
      rs.cartan_(i, i + 1) = -1;
      rs.cartan_(i + 1, i) = -1;
    }
  }
  rs.gram_ = Eigen::MatrixXi::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RootVector a = RootVector::Zero(static_cast<Eigen::Index>(n));
    a(static_cast<Eigen::Index>(i)) = 1;
    a(static_cast<Eigen::Index>(i + 1)) = -1;
    rs.simple_roots_.push_back(a);
  }
  rs.generate_roots();
  return rs;
}

RootSystem RootSystem::b2()
{
  RootSystem rs;
  rs.name_ = "B2";
  rs.prefix_ = "a";
  rs.cartan_.resize(2, 2);
  rs.cartan_ << 2, -1, -2, 2;
  rs.gram_.resize(2, 2);
  rs.gram_ << 2, -1, -1, 1;
  rs.simple_roots_ = {RootVector::Unit(2, 0), RootVector::Unit(2, 1)};
  rs.generate_roots();
  return rs;
}

RootSystem RootSystem::g2()
{
  RootSystem rs;
  rs.name_ = "G2";
  rs.prefix_ = "a";
  rs.cartan_.resize(2, 2);
  rs.cartan_ << 2, -3, -1, 2;
  rs.gram_.resize(2, 2);
  rs.gram_ << 2, -3, -3, 6;
  rs.simple_roots_ = {RootVector::Unit(2, 0), RootVector::Unit(2, 1)};
  rs.generate_roots();
  return rs;
}

RootSystem RootSystem::parse(std::string_view selector)
{
  const std::string s(selector);
  if (s == "B2")
    return b2();
  if (s == "G2")
    return g2();
  if (s.size() > 2 && s[0] == 'A' && s[1] == ':') {
    const std::string num = s.substr(2);
    if (!std::all_of(num.begin(), num.end(), ::isdigit))
      throw std::invalid_argument("malformed type selector '" + s + "'");
    return type_a(std::stoul(num));
  }
  throw std::invalid_argument("unknown type selector '" + s + "' (expected A:n, B2 or G2)");
}

void RootSystem::generate_roots()
{
  const auto r = cartan_.rows();
  // Orbit of the simple roots under simple reflections, in simple coordinates.
  std::set<std::vector<int>> seen;
  std::deque<RootVector> queue;
  for (Eigen::Index i = 0; i < r; ++i) {
    RootVector e = RootVector::Unit(r, i);
    if (seen.insert(to_std(e)).second)
      queue.push_back(e);
  }
  while (!queue.empty()) {
    const RootVector beta = queue.front();
    queue.pop_front();
    for (Eigen::Index i = 0; i < r; ++i) {
      RootVector img = beta;
      img(i) -= cartan_.row(i).dot(beta);
      if (seen.insert(to_std(img)).second)
        queue.push_back(img);
    }
  }
  std::vector<RootVector> pos;
  for (const auto& v : seen) {
    RootVector beta = Eigen::Map<const RootVector>(v.data(), r);
    if ((beta.array() >= 0).all())
      pos.push_back(beta);
  }
  std::sort(pos.begin(), pos.end(), [](const RootVector& a, const RootVector& b) {
    if (a.sum() != b.sum())
      return a.sum() < b.sum();
    return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(),
                                        a.data() + a.size());
  });

  const auto n = static_cast<Eigen::Index>(gram_.rows());
  Eigen::MatrixXi embed(n, r);
  for (Eigen::Index i = 0; i < r; ++i)
    embed.col(i) = simple_roots_[static_cast<std::size_t>(i)];
  simple_coords_ = pos;
  positive_roots_.clear();
  for (const auto& c : pos)
    positive_roots_.push_back(embed * c);
  simple_reflections_.clear();
  for (const auto& a : simple_roots_)
    simple_reflections_.push_back(reflection_matrix(a));
}

std::optional<std::size_t> RootSystem::positive_root_index(const RootVector& beta) const
{
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (positive_roots_[k] == beta)
      return k;
  return std::nullopt;
}

bool RootSystem::is_root(const RootVector& beta) const
{
  return is_positive_root(beta) || is_positive_root(-beta);
}

int RootSystem::pairing(const RootVector& beta, const RootVector& alpha) const
{
  const int num = 2 * beta.dot(gram_ * alpha);
  const int den = alpha.dot(gram_ * alpha);
  if (den == 0 || num % den != 0)
    throw std::logic_error("non-integral Cartan pairing");
  return num / den;
}

RootVector RootSystem::reflect(const RootVector& alpha, const RootVector& beta) const
{
  if (alpha.size() != gram_.rows() || !is_positive_root(alpha))
    throw std::invalid_argument("reflect: first argument is not a positive root");
  if (beta.size() != gram_.rows() || !is_root(beta))
    throw std::invalid_argument("reflect: second argument is not a root");
  return beta - pairing(beta, alpha) * alpha;
}

LatticeMap RootSystem::reflection_matrix(const RootVector& alpha) const
{
  const auto n = gram_.rows();
  LatticeMap m(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const RootVector e = RootVector::Unit(n, l);
    m.col(l) = e - pairing(e, alpha) * alpha;
  }
  return m;
}

LinearForm RootSystem::form(const RootVector& beta) const
{
  return LinearForm(Polynomial::linear(std::span<const int>(beta.data(), static_cast<std::size_t>(beta.size()))));
}

RootVector RootSystem::vector_of(const LinearForm& f) const
{
  if (f.nvars() != nvars())
    throw DimensionMismatch("form lives in a ring of the wrong dimension");
  const auto c = f.coefficients();
  RootVector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (c[l].get_den() != 1 || !c[l].get_num().fits_sint_p())
      throw std::invalid_argument("form '" + f.to_string(prefix_) + "' is not integral");
    v(static_cast<Eigen::Index>(l)) = static_cast<int>(c[l].get_num().get_si());
  }
  return v;
}

// WeylGroup -------------------------------------------------------------------

std::vector<int> WeylGroup::key(const LatticeMap& m)
{
  return std::vector<int>(m.data(), m.data() + m.size());
}

std::optional<WeylElement> WeylGroup::lookup(const LatticeMap& m) const
{
  auto it = index_.find(key(m));
  if (it == index_.end())
    return std::nullopt;
  return WeylElement{it->second};
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs))
{
  const auto n = static_cast<Eigen::Index>(rs_.nvars());
  const std::size_t r = rs_.rank();
  const auto& pos = rs_.positive_roots();

  // Breadth-first closure under left multiplication by simple reflections.
  std::vector<LatticeMap> found{LatticeMap::Identity(n, n)};
  std::set<std::vector<int>> seen{key(found.front())};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t i = 1; i <= r; ++i) {
      LatticeMap next = rs_.simple_reflection(i) * found[head];
      if (seen.insert(key(next)).second)
        found.push_back(std::move(next));
    }
  }

  auto inversions_of = [&](const LatticeMap& m) {
    // beta in Inv(m) iff beta = m(-gamma) for some positive gamma.
    std::vector<std::size_t> inv;
    for (const auto& gamma : pos) {
      if (auto k = rs_.positive_root_index(-(m * gamma)))
        inv.push_back(*k);
    }
    std::sort(inv.begin(), inv.end());
    return inv;
  };
  auto word_of = [&](LatticeMap m) {
    std::vector<int> word;
    for (;;) {
      const auto inv = inversions_of(m);
      if (inv.empty())
        return word;
      // Leftmost descent: smallest i with a_i in Inv(m).
      for (std::size_t i = 1; i <= r; ++i) {
        const auto k = *rs_.positive_root_index(rs_.simple_root(i));
        if (std::binary_search(inv.begin(), inv.end(), k)) {
          word.push_back(static_cast<int>(i));
          m = rs_.simple_reflection(i) * m;
          break;
        }
      }
    }
  };

  struct Entry {
    LatticeMap m;
    std::vector<std::size_t> inv;
    std::vector<int> word;
  };
  std::vector<Entry> entries;
  entries.reserve(found.size());
  for (auto& m : found) {
    auto inv = inversions_of(m);
    auto word = word_of(m);
    entries.push_back({std::move(m), std::move(inv), std::move(word)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.inv.size() != b.inv.size())
      return a.inv.size() < b.inv.size();
    return a.word < b.word;
  });

  const std::size_t order = entries.size();
  for (std::size_t id = 0; id < order; ++id) {
    index_.emplace(key(entries[id].m), static_cast<std::uint32_t>(id));
    matrices_.push_back(std::move(entries[id].m));
    inversions_.push_back(std::move(entries[id].inv));
  }

  left_simple_.assign(order, std::vector<WeylElement>(r));
  inverse_.resize(order);
  for (std::size_t id = 0; id < order; ++id) {
    for (std::size_t i = 1; i <= r; ++i)
      left_simple_[id][i - 1] = *lookup(rs_.simple_reflection(i) * matrices_[id]);
  }
  // Inverse via the reduced word read backwards.
  for (std::size_t id = 0; id < order; ++id) {
    auto word = reduced_word(WeylElement{static_cast<std::uint32_t>(id)});
    std::reverse(word.begin(), word.end());
    inverse_[id] = from_word(word);
  }

  // Bruhat intervals: if w = s_i w' with l(w) = l(w') + 1 then
  // [e, w] = [e, w'] union s_i [e, w'] (subword property).
  below_.assign(order, std::vector<char>(order, 0));
  below_[0][0] = 1;
  for (std::size_t id = 1; id < order; ++id) {
    const WeylElement w{static_cast<std::uint32_t>(id)};
    const auto word = reduced_word(w);
    const auto i = static_cast<std::size_t>(word.front());
    const WeylElement shorter = left_simple(i, w);
    auto& row = below_[id];
    const auto& prev = below_[shorter.id];
    for (std::size_t x = 0; x < order; ++x) {
      if (prev[x]) {
        row[x] = 1;
        row[left_simple_[x][i - 1].id] = 1;
      }
    }
  }

  for (const auto& beta : pos)
    reflections_.push_back(*lookup(rs_.reflection_matrix(beta)));
}

std::vector<WeylElement> WeylGroup::elements() const
{
  std::vector<WeylElement> out(order());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].id = static_cast<std::uint32_t>(i);
  return out;
}

WeylElement WeylGroup::reflection(const RootVector& beta) const
{
  const auto k = rs_.positive_root_index(beta);
  if (!k)
    throw std::invalid_argument("not a positive root");
  return reflections_[*k];
}

WeylElement WeylGroup::multiply(WeylElement a, WeylElement b) const
{
  WeylElement out = b;
  const auto word = reduced_word(a);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = left_simple(static_cast<std::size_t>(*it), out);
  return out;
}

WeylElement WeylGroup::right_simple(WeylElement a, std::size_t i) const
{
  return multiply(a, simple(i));
}

bool WeylGroup::has_left_descent(WeylElement a, std::size_t i) const
{
  return length(left_simple(i, a)) < length(a);
}

std::vector<LinearForm> WeylGroup::inversion_forms(WeylElement a) const
{
  std::vector<LinearForm> out;
  for (auto k : inversions(a))
    out.push_back(rs_.form(rs_.positive_roots()[k]));
  return out;
}

std::vector<int> WeylGroup::reduced_word(WeylElement a) const
{
  std::vector<int> word;
  while (a.id != 0) {
    for (std::size_t i = 1; i <= rank(); ++i) {
      if (has_left_descent(a, i)) {
        word.push_back(static_cast<int>(i));
        a = left_simple(i, a);
        break;
      }
    }
  }
  return word;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const
{
  WeylElement out = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || static_cast<std::size_t>(*it) > rank())
      throw std::out_of_range("simple index " + std::to_string(*it) + " outside 1.." +
                              std::to_string(rank()));
    out = left_simple(static_cast<std::size_t>(*it), out);
  }
  return out;
}

std::vector<WeylElement> WeylGroup::lower_interval(WeylElement w) const
{
  std::vector<WeylElement> out;
  for (std::size_t x = 0; x < order(); ++x)
    if (below_[w.id][x])
      out.push_back(WeylElement{static_cast<std::uint32_t>(x)});
  return out;
}

Substitution WeylGroup::coadjoint_substitution(WeylElement a) const
{
  const auto& m = matrix(a);
  Substitution sub;
  for (Eigen::Index l = 0; l < m.cols(); ++l) {
    const RootVector col = m.col(l);
    sub.push_back(Polynomial::linear(std::span<const int>(col.data(), static_cast<std::size_t>(col.size()))));
  }
  return sub;
}

Polynomial WeylGroup::act_on_polynomial(WeylElement a, const Polynomial& p) const
{
  if (a.id == 0)
    return p;
  return substitute(p, coadjoint_substitution(a));
}

std::string WeylGroup::name(WeylElement a) const
{
  if (rs_.is_type_a())
    return permutation(a)->to_string();
  if (a.id == 0)
    return "e";
  std::string out;
  for (int i : reduced_word(a))
    out += "s" + std::to_string(i);
  return out;
}

WeylElement WeylGroup::parse(std::string_view text) const
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s == "w0")
    return longest();
  if (s == "e")
    return identity();
  if (!s.empty() && s.front() == 's') {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != 's')
        throw std::invalid_argument("malformed word '" + s + "'");
      std::size_t end = pos + 1;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
        ++end;
      if (end == pos + 1)
        throw std::invalid_argument("malformed word '" + s + "'");
      word.push_back(std::stoi(s.substr(pos + 1, end - pos - 1)));
      pos = end;
    }
    return from_word(word);
  }
  if (rs_.is_type_a())
    return from_permutation(Permutation::parse(s, rs_.nvars()));
  throw std::invalid_argument("cannot parse Weyl group element '" + s + "' in " + rs_.name());
}

std::optional<Permutation> WeylGroup::permutation(WeylElement a) const
{
  if (!rs_.is_type_a())
    return std::nullopt;
  const auto& m = matrix(a);
  std::vector<int> one_line(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index l = 0; l < m.cols(); ++l) {
    Eigen::Index row = 0;
    m.col(l).maxCoeff(&row);
    one_line[static_cast<std::size_t>(l)] = static_cast<int>(row) + 1;
  }
  return Permutation(std::move(one_line));
}

WeylElement WeylGroup::from_permutation(const Permutation& p) const
{
  if (!rs_.is_type_a() || p.size() != rs_.nvars())
    throw std::invalid_argument("permutation does not belong to " + rs_.name());
  const auto n = static_cast<Eigen::Index>(p.size());
  LatticeMap m = LatticeMap::Zero(n, n);
  for (Eigen::Index l = 0; l < n; ++l)
    m(p(static_cast<std::size_t>(l + 1)) - 1, l) = 1;
  return *lookup(m);
}

} // namespace gkmcalc
