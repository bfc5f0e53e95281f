#pragma once

// The full quantum group U_q on normal-ordered monomials f-word * K * e-word.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "qnil/rootdata.hpp"
#include "qnil/scalars.hpp"

namespace qnil {

struct UqMonomial {
  Word f;
  RootVec k;  // exponent of K_k = prod t_i^{k_i}
  Word e;

  auto operator<=>(const UqMonomial&) const = default;
  bool operator==(const UqMonomial&) const = default;
};

class UqElement {
 public:
  using Terms = std::map<UqMonomial, RatFunc>;

  UqElement() = default;
  static UqElement scalar(int rank, const RatFunc& c);
  static UqElement monomial(UqMonomial m, const RatFunc& c = 1);
  static UqElement f(int rank, int i);
  static UqElement e(int rank, int i);
  static UqElement t(const RootVec& mu);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  void add(const UqMonomial& m, const RatFunc& c);
  void add(const UqElement& o, const RatFunc& c = 1);

  UqElement operator+(const UqElement& o) const;
  UqElement operator-(const UqElement& o) const;
  UqElement operator-() const;
  UqElement scaled(const RatFunc& c) const;
  bool operator==(const UqElement& o) const { return t_ == o.t_; }

 private:
  Terms t_;
};

/// Write-once memo table shared by readers; values are immutable once published.
template <class K, class V>
class Memo {
 public:
  std::shared_ptr<const V> find(const K& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : it->second;
  }
  std::shared_ptr<const V> publish(const K& k, V v) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = map_.try_emplace(k, std::make_shared<const V>(std::move(v)));
    return it->second;
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<K, std::shared_ptr<const V>> map_;
};

struct GramMatrix;

/// A Cartan datum together with the memo tables of every computation over it.
class Context {
 public:
  explicit Context(CartanDatum cd) : cd_(std::move(cd)) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const CartanDatum& cartan() const { return cd_; }
  int rank() const { return cd_.rank(); }

  Memo<std::pair<Word, Word>, UqElement> straighten_memo;
  // key: (i, sign, 0 for f-word / 1 for e-word, word)
  Memo<std::tuple<int, int, int, Word>, UqElement> braid_word_memo;
  Memo<std::tuple<Word, int, UqMonomial>, UqElement> braid_generator_memo;
  Memo<RootVec, GramMatrix> gram_memo;

 private:
  CartanDatum cd_;
};

/// Weight of a monomial in Q: e-letters count +alpha, f-letters -alpha.
RootVec weight(const CartanDatum& cd, const UqMonomial& m);
/// Sum of alpha_j over the letters j of a word.
RootVec word_weight(const CartanDatum& cd, const Word& w);

/// Normal-ordered e-word * f-word.
std::shared_ptr<const UqElement> straighten(const Context& ctx, const Word& e, const Word& f);
UqElement multiply(const Context& ctx, const UqMonomial& a, const UqMonomial& b);
UqElement multiply(const Context& ctx, const UqElement& a, const UqElement& b);

enum class Involution { vee, bar, star, phi };
UqElement involution(const Context& ctx, Involution kind, const UqElement& x);
UqElement antipode(const Context& ctx, const UqElement& x);

/// T_i (sign +1) or T_i^{-1} (sign -1).
UqElement braid(const Context& ctx, int i, int sign, const UqElement& x);
/// sign +1: T_{i1} o ... o T_{il}; sign -1: the inverse T_{il}^{-1} o ... o T_{i1}^{-1}.
UqElement braid_word(const Context& ctx, const Word& w, int sign, const UqElement& x);
/// braid_word applied to a single generator monomial, memoized per (word, generator).
std::shared_ptr<const UqElement> braid_generator(const Context& ctx, const Word& w, int sign, const UqMonomial& gen);
/// braid_word computed by multiplying memoized generator images.
UqElement braid_word_by_generators(const Context& ctx, const Word& w, int sign, const UqElement& x);

std::string to_string(const UqMonomial& m);
std::string to_string(const UqElement& x);

}  // namespace qnil
