#include "qnil/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qnil {

RootVec RootVec::simple(int rank, int i) {
  RootVec r = zero(rank);
  r.m[static_cast<std::size_t>(i)] = 1;
  return r;
}

int RootVec::height() const { return std::accumulate(m.begin(), m.end(), 0); }

bool RootVec::is_zero() const {
  return std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

bool RootVec::is_nonnegative() const {
  return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
}

bool RootVec::is_nonpositive() const {
  return std::all_of(m.begin(), m.end(), [](int x) { return x <= 0; });
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t k = 0; k < m.size(); ++k) r.m[k] += o.m[k];
  return r;
}

RootVec RootVec::operator-(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t k = 0; k < m.size(); ++k) r.m[k] -= o.m[k];
  return r;
}

RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (auto& x : r.m) x = -x;
  return r;
}

RootVec RootVec::operator*(int k) const {
  RootVec r = *this;
  for (auto& x : r.m) x *= k;
  return r;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] -= o.coords[k];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.coords) x = -x;
  return r;
}

namespace {

// Rank of an integer matrix over Q (rows given).
int matrix_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[static_cast<std::size_t>(rank)][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[static_cast<std::size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpq_class>> to_rational(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<mpq_class>> r;
  for (const auto& row : m) r.emplace_back(row.begin(), row.end());
  return r;
}

}  // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> gcm, std::vector<int> sym, std::string name)
    : n_(static_cast<int>(gcm.size())), a_(std::move(gcm)), d_(std::move(sym)), name_(std::move(name)) {
  if (n_ == 0) throw std::invalid_argument("Cartan datum must have rank >= 1");
  if (static_cast<int>(d_.size()) != n_) throw std::invalid_argument("symmetrizer size does not match GCM");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(a_[static_cast<std::size_t>(i)].size()) != n_)
      throw std::invalid_argument("GCM must be square");
    if (d(i) <= 0) throw std::invalid_argument("symmetrizer entries must be positive");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && a(i, j) != 2) throw std::invalid_argument("GCM diagonal must be 2");
      if (i != j && a(i, j) > 0) throw std::invalid_argument("GCM off-diagonal entries must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw std::invalid_argument("GCM zero pattern must be symmetric");
      if (d(i) * a(i, j) != d(j) * a(j, i)) throw std::invalid_argument("GCM is not symmetrized by sym");
    }
  if (name_.empty()) name_ = "custom";
  // alpha_j has fundamental coordinates (a_ij)_i: the columns of the GCM.
  std::vector<std::vector<int>> alpha_rows(static_cast<std::size_t>(n_));  // row j = alpha_j
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) alpha_rows[static_cast<std::size_t>(j)].push_back(a(i, j));
  const int r = matrix_rank(to_rational(alpha_rows));
  corank_ = n_ - r;
  // Greedily append unit auxiliary coordinates until the simple roots are independent.
  std::vector<std::vector<int>> ext = alpha_rows;
  for (int k = 0; k < n_ && static_cast<int>(aux_.size()) < corank_; ++k) {
    std::vector<std::vector<int>> trial = ext;
    for (int j = 0; j < n_; ++j) trial[static_cast<std::size_t>(j)].push_back(j == k ? 1 : 0);
    if (matrix_rank(to_rational(trial)) > matrix_rank(to_rational(ext))) {
      ext = std::move(trial);
      std::vector<int> row(static_cast<std::size_t>(n_), 0);
      row[static_cast<std::size_t>(k)] = 1;
      aux_.push_back(std::move(row));
    }
  }
}

CartanDatum CartanDatum::of_type(std::string_view type) {
  if (type.size() != 2 || type[1] < '1' || type[1] > '9') throw std::invalid_argument("unknown Cartan type: " + std::string(type));
  const char family = type[0];
  const int n = type[1] - '0';
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  auto set = [&a](int i, int j, int v) { a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (family) {
    case 'A':
      if (n > 4) break;
      chain(n);
      return CartanDatum(a, d, std::string(type));
    case 'B':
      // alpha_n short: d = (2,...,2,1), a_{n-1,n} = -1, a_{n,n-1} = -2
      if (n < 2 || n > 4) break;
      chain(n);
      set(n - 1, n - 2, -2);
      for (int i = 0; i + 1 < n; ++i) d[static_cast<std::size_t>(i)] = 2;
      return CartanDatum(a, d, std::string(type));
    case 'C':
      // alpha_n long: d = (1,...,1,2), a_{n-1,n} = -2, a_{n,n-1} = -1
      if (n < 2 || n > 4) break;
      chain(n);
      set(n - 2, n - 1, -2);
      d[static_cast<std::size_t>(n - 1)] = 2;
      return CartanDatum(a, d, std::string(type));
    case 'D':
      if (n != 4) break;
      // node 2 (index 1) is the branch point
      set(0, 1, -1), set(1, 0, -1), set(1, 2, -1), set(2, 1, -1), set(1, 3, -1), set(3, 1, -1);
      return CartanDatum(a, d, std::string(type));
    case 'F':
      if (n != 4) break;
      chain(4);
      set(2, 1, -2);
      d = {2, 2, 1, 1};
      return CartanDatum(a, d, std::string(type));
    case 'G':
      if (n != 2) break;
      // alpha_1 short: d = (1,3), a_12 = -3, a_21 = -1
      set(0, 1, -3), set(1, 0, -1);
      d = {1, 3};
      return CartanDatum(a, d, std::string(type));
    default:
      break;
  }
  throw std::invalid_argument("unknown Cartan type: " + std::string(type));
}

void CartanDatum::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("index out of range: " + std::to_string(i + 1));
}

void CartanDatum::check_word(const Word& w) const {
  for (int i : w) check_index(i);
}

int CartanDatum::form(const RootVec& x, const RootVec& y) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) s += x[i] * y[j] * root_form(i, j);
  }
  return s;
}

int CartanDatum::pairing(const RootVec& x, int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += x[j] * a(i, j);
  return s;
}

RootVec CartanDatum::reflect(int i, const RootVec& x) const {
  RootVec r = x;
  r.m[static_cast<std::size_t>(i)] -= pairing(x, i);
  return r;
}

Weight CartanDatum::fundamental(int i) const {
  Weight w{std::vector<long>(static_cast<std::size_t>(n_ + corank_), 0)};
  w.coords[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight CartanDatum::rho() const {
  Weight w{std::vector<long>(static_cast<std::size_t>(n_ + corank_), 0)};
  for (int i = 0; i < n_; ++i) w.coords[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight CartanDatum::simple_root(int j) const { return from_root(RootVec::simple(n_, j)); }

Weight CartanDatum::from_root(const RootVec& x) const {
  Weight w{std::vector<long>(static_cast<std::size_t>(n_ + corank_), 0)};
  for (int j = 0; j < n_; ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < n_; ++i) w.coords[static_cast<std::size_t>(i)] += static_cast<long>(x[j]) * a(i, j);
    for (int k = 0; k < corank_; ++k)
      w.coords[static_cast<std::size_t>(n_ + k)] += static_cast<long>(x[j]) * aux_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  }
  return w;
}

std::optional<std::vector<mpq_class>> CartanDatum::rational_root_coords(const Weight& w) const {
  // Solve sum_j m_j alpha_j = w over Q; the extended alpha vectors are independent.
  const std::size_t rows = static_cast<std::size_t>(n_ + corank_);
  const std::size_t cols = static_cast<std::size_t>(n_);
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (int j = 0; j < n_; ++j) {
    Weight aj = simple_root(j);
    for (std::size_t r = 0; r < rows; ++r) m[r][static_cast<std::size_t>(j)] = aj.coords[r];
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = w.coords[r];
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols] / m[k][pivots[k]];
  return x;
}

std::optional<RootVec> CartanDatum::to_root(const Weight& w) const {
  auto x = rational_root_coords(w);
  if (!x) return std::nullopt;
  RootVec r = RootVec::zero(n_);
  for (int j = 0; j < n_; ++j) {
    const mpq_class& v = (*x)[static_cast<std::size_t>(j)];
    if (v.get_den() != 1) return std::nullopt;
    r.m[static_cast<std::size_t>(j)] = static_cast<int>(v.get_num().get_si());
  }
  return r;
}

int CartanDatum::pairing(const Weight& w, int i) const { return static_cast<int>(w.coords[static_cast<std::size_t>(i)]); }

long CartanDatum::form(const Weight& w, const RootVec& beta) const {
  long s = 0;
  for (int j = 0; j < n_; ++j) s += static_cast<long>(beta[j]) * d(j) * pairing(w, j);
  return s;
}

mpq_class CartanDatum::bilinear(const Weight& x, const Weight& y) const {
  auto pair_with = [this](const Weight& lam, const std::vector<mpq_class>& mu) {
    mpq_class s = 0;
    for (int j = 0; j < n_; ++j) s += mu[static_cast<std::size_t>(j)] * d(j) * pairing(lam, j);
    return s;
  };
  if (auto my = rational_root_coords(y)) return pair_with(x, *my);
  if (auto mx = rational_root_coords(x)) return pair_with(y, *mx);
  throw std::invalid_argument("bilinear form undefined on the auxiliary part of P");
}

Weight CartanDatum::reflect(int i, const Weight& w) const {
  const long k = pairing(w, i);
  if (k == 0) return w;
  Weight ai = simple_root(i);
  Weight r = w;
  for (std::size_t c = 0; c < r.coords.size(); ++c) r.coords[c] -= k * ai.coords[c];
  return r;
}

bool CartanDatum::is_dominant(const Weight& w) const {
  for (int i = 0; i < n_; ++i)
    if (pairing(w, i) < 0) return false;
  return true;
}

Weight weyl_act(const CartanDatum& cd, const Word& w, const Weight& x) {
  Weight r = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = cd.reflect(*it, r);
  return r;
}

RootVec weyl_act(const CartanDatum& cd, const Word& w, const RootVec& x) {
  RootVec r = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = cd.reflect(*it, r);
  return r;
}

std::vector<RootVec> root_sequence(const CartanDatum& cd, const Word& w) {
  cd.check_word(w);
  std::vector<RootVec> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word prefix(w.begin(), w.begin() + static_cast<long>(k));
    out.push_back(weyl_act(cd, prefix, RootVec::simple(cd.rank(), w[k])));
  }
  return out;
}

bool is_reduced(const CartanDatum& cd, const Word& w) {
  for (const auto& b : root_sequence(cd, w))
    if (!b.is_nonnegative()) return false;
  return true;
}

Word reduce_word(const CartanDatum& cd, const Word& w) {
  cd.check_word(w);
  Word out;
  for (int i : w) {
    RootVec img = weyl_act(cd, out, RootVec::simple(cd.rank(), i));
    if (img.is_nonnegative()) {
      out.push_back(i);
      continue;
    }
    // Exchange condition: out * s_i drops the letter k with
    // s_{j(k+1)}...s_{jm} alpha_i = alpha_{jk}.
    RootVec g = RootVec::simple(cd.rank(), i);
    for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k) {
      if (g == RootVec::simple(cd.rank(), out[static_cast<std::size_t>(k)])) {
        out.erase(out.begin() + k);
        break;
      }
      g = cd.reflect(out[static_cast<std::size_t>(k)], g);
    }
  }
  return out;
}

int length(const CartanDatum& cd, const Word& w) { return static_cast<int>(reduce_word(cd, w).size()); }

std::vector<RootVec> positive_roots_along(const CartanDatum& cd, const Word& w) {
  auto roots = root_sequence(cd, w);
  for (const auto& b : roots)
    if (!b.is_nonnegative()) throw std::invalid_argument("positive_roots_along: word is not reduced");
  return roots;
}

Word inverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool weak_order_leq(const CartanDatum& cd, const Word& u, const Word& w) {
  Word uinv_w = inverse_word(u);
  uinv_w.insert(uinv_w.end(), w.begin(), w.end());
  return length(cd, w) == length(cd, u) + length(cd, uinv_w);
}

bool word_equal(const CartanDatum& cd, const Word& u, const Word& w) {
  for (int i = 0; i < cd.rank(); ++i) {
    Weight f = cd.fundamental(i);
    if (weyl_act(cd, u, f) != weyl_act(cd, w, f)) return false;
  }
  return true;
}

std::vector<Word> reduced_words(const CartanDatum& cd, const Word& w) {
  // Grow reduced prefixes letter by letter; a prefix p survives when l(p^{-1} w) = l(w) - l(p).
  const Word target = reduce_word(cd, w);
  const int len = static_cast<int>(target.size());
  std::vector<Word> layer{Word{}};
  for (int step = 0; step < len; ++step) {
    std::vector<Word> next;
    for (const auto& p : layer)
      for (int i = 0; i < cd.rank(); ++i) {
        Word ext = p;
        ext.push_back(i);
        if (!is_reduced(cd, ext)) continue;
        Word rest = inverse_word(ext);
        rest.insert(rest.end(), target.begin(), target.end());
        if (length(cd, rest) == len - static_cast<int>(ext.size())) next.push_back(std::move(ext));
      }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace qnil

namespace qnil {

std::vector<Word> weyl_elements(const CartanDatum& cd, int max_length) {
  // w rho determines w, so rho serves as a faithful probe
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  std::set<std::vector<long>> seen;
  const Weight probe = cd.rho();
  seen.insert(probe.coords);
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& p : layer)
      for (int i = 0; i < cd.rank(); ++i) {
        Word ext = p;
        ext.push_back(i);
        if (seen.insert(weyl_act(cd, ext, probe).coords).second) next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace qnil
