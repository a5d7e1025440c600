#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lieavg/lyndon.hpp"
#include "lieavg/rational.hpp"
#include "lieavg/rewrite.hpp"

namespace lieavg {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
};

template <>
struct scalar_traits<double> {
  static double from_rational(const Rational& q) { return q.to_double(); }
  static bool is_zero(double v) { return v == 0.0; }
};

// Degree-truncated element of the free Lie algebra on n generators,
// coefficients on Lyndon basis words (absent = zero, stored zeros pruned).
// Exact arithmetic uses S = Rational; the power-iteration cross-check uses
// S = double.
template <class S>
class BasicLieSeries {
 public:
  using TermMap = std::map<Word, S, DegLexLess>;

  BasicLieSeries(int n, int max_degree) : n_(n), max_degree_(max_degree) {
    if (n < 1) throw std::invalid_argument("LieSeries: generator count must be >= 1");
    if (max_degree < 1) throw std::invalid_argument("LieSeries: truncation degree must be >= 1");
  }

  static BasicLieSeries generator(int n, int i, int max_degree) {
    BasicLieSeries s(n, max_degree);
    if (i < 1 || i > n) throw std::invalid_argument("LieSeries: generator index out of range");
    s.terms_.emplace(Word{static_cast<Letter>(i)}, S(1));
    return s;
  }

  int generators() const { return n_; }
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  // Validates the word and prunes zeros; degree > truncation is dropped.
  void set(const Word& w, S c) {
    check_word(w);
    if (static_cast<int>(w.size()) > max_degree_) return;
    if (scalar_traits<S>::is_zero(c))
      terms_.erase(w);
    else
      terms_.insert_or_assign(w, std::move(c));
  }

  void add_term(const Word& w, const S& c) {
    if (static_cast<int>(w.size()) > max_degree_) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      if (!scalar_traits<S>::is_zero(c)) terms_.emplace(w, c);
      return;
    }
    it->second += c;
    if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
  }

 private:
  void check_word(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("LieSeries: empty word");
    for (Letter l : w)
      if (l < 1 || static_cast<int>(l) > n_)
        throw std::invalid_argument("LieSeries: letter out of range");
    if (!is_lyndon(w)) throw std::invalid_argument("LieSeries: word is not Lyndon");
  }

  int n_;
  int max_degree_;
  TermMap terms_;
};

using LieSeries = BasicLieSeries<Rational>;
using LieSeriesD = BasicLieSeries<double>;

namespace detail {
inline void require_same_generators(int na, int nb, const char* op) {
  if (na != nb) throw std::invalid_argument(std::string(op) + ": mismatched generator counts");
}
}  // namespace detail

// Coefficient-wise sum; result truncated at the finer of the two truncations.
template <class S>
BasicLieSeries<S> add(const BasicLieSeries<S>& a, const BasicLieSeries<S>& b) {
  detail::require_same_generators(a.generators(), b.generators(), "add");
  BasicLieSeries<S> out(a.generators(), std::min(a.max_degree(), b.max_degree()));
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

template <class S>
BasicLieSeries<S> scale(const S& c, const BasicLieSeries<S>& a) {
  BasicLieSeries<S> out(a.generators(), a.max_degree());
  if (scalar_traits<S>::is_zero(c)) return out;
  for (const auto& [w, q] : a.terms()) out.add_term(w, c * q);
  return out;
}

template <class S>
BasicLieSeries<S> negate(const BasicLieSeries<S>& a) {
  return scale(S(-1), a);
}

template <class S>
BasicLieSeries<S> operator+(const BasicLieSeries<S>& a, const BasicLieSeries<S>& b) {
  return add(a, b);
}

template <class S>
BasicLieSeries<S> operator-(const BasicLieSeries<S>& a, const BasicLieSeries<S>& b) {
  return add(a, negate(b));
}

template <class S>
BasicLieSeries<S> operator-(const BasicLieSeries<S>& a) {
  return negate(a);
}

template <class S>
BasicLieSeries<S> operator*(const S& c, const BasicLieSeries<S>& a) {
  return scale(c, a);
}

// Equality is coefficient-wise on the common truncation.
template <class S>
bool equal_truncated(const BasicLieSeries<S>& a, const BasicLieSeries<S>& b) {
  if (a.generators() != b.generators()) return false;
  int d = std::min(a.max_degree(), b.max_degree());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() && static_cast<int>(ia->first.size()) <= d &&
         ib != b.terms().end() && static_cast<int>(ib->first.size()) <= d) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    ++ia;
    ++ib;
  }
  auto tail_done = [d](auto it, auto end) {
    return it == end || static_cast<int>(it->first.size()) > d;
  };
  return tail_done(ia, a.terms().end()) && tail_done(ib, b.terms().end());
}

template <class S>
bool operator==(const BasicLieSeries<S>& a, const BasicLieSeries<S>& b) {
  return equal_truncated(a, b);
}

template <class S>
BasicLieSeries<S> truncate(const BasicLieSeries<S>& a, int max_degree) {
  BasicLieSeries<S> out(a.generators(), max_degree);
  for (const auto& [w, c] : a.terms()) {
    if (static_cast<int>(w.size()) > max_degree) break;
    out.add_term(w, c);
  }
  return out;
}

// Keeps exactly the terms with r brackets (degree r + 1).
template <class S>
BasicLieSeries<S> graded_component(const BasicLieSeries<S>& a, int r) {
  BasicLieSeries<S> out(a.generators(), a.max_degree());
  for (const auto& [w, c] : a.terms())
    if (static_cast<int>(w.size()) == r + 1) out.add_term(w, c);
  return out;
}

// Lie bracket, normalized to the Lyndon basis; truncation is the finer bound.
template <class S>
BasicLieSeries<S> bracket(const BasicLieSeries<S>& a, const BasicLieSeries<S>& b) {
  detail::require_same_generators(a.generators(), b.generators(), "bracket");
  const int d = std::min(a.max_degree(), b.max_degree());
  BasicLieSeries<S> out(a.generators(), d);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (static_cast<int>(wa.size() + wb.size()) > d) break;  // b sorted by degree
      if (wa == wb) continue;
      S c = ca * cb;
      if (scalar_traits<S>::is_zero(c)) continue;
      const bool ordered = lex_less(wa, wb);
      const Expansion& e = ordered ? lyndon_pair_expansion(wa, wb) : lyndon_pair_expansion(wb, wa);
      for (const auto& [w, q] : e) {
        S qc = scalar_traits<S>::from_rational(q) * c;
        out.add_term(w, ordered ? qc : -qc);
      }
    }
  }
  return out;
}

namespace detail {

// Image of one basis word under a generator substitution, built recursively on
// the standard factorization. The memo is shared across a whole substitution
// (or a whole block-matrix build).
template <class S>
const BasicLieSeries<S>& substitute_word(const Word& w,
                                         const std::vector<BasicLieSeries<S>>& images,
                                         std::map<Word, BasicLieSeries<S>, DegLexLess>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  if (w.size() == 1) return memo.emplace(w, images[w[0] - 1]).first->second;
  auto [u, v] = standard_factorization(w);
  const BasicLieSeries<S>& iu = substitute_word(u, images, memo);
  // maps are node-stable, but look v up after u to keep the recursion simple
  const BasicLieSeries<S>& iv = substitute_word(v, images, memo);
  return memo.emplace(w, bracket(iu, iv)).first->second;
}

}  // namespace detail

// The unique Lie-algebra homomorphism sending x_i to images[i-1], applied
// with truncation at the images' common bound. Linear in a.
template <class S>
BasicLieSeries<S> substitute(const BasicLieSeries<S>& a,
                             const std::vector<BasicLieSeries<S>>& images) {
  if (static_cast<int>(images.size()) != a.generators())
    throw std::invalid_argument("substitute: wrong image count");
  const int m = images.front().generators();
  const int d = images.front().max_degree();
  for (const auto& img : images)
    if (img.generators() != m || img.max_degree() != d)
      throw std::invalid_argument("substitute: images must share generator count and truncation");

  BasicLieSeries<S> out(m, d);
  std::map<Word, BasicLieSeries<S>, DegLexLess> memo;
  for (const auto& [w, c] : a.terms()) {
    if (static_cast<int>(w.size()) > d) break;  // image degree >= |w|
    const BasicLieSeries<S>& img = detail::substitute_word(w, images, memo);
    for (const auto& [iw, ic] : img.terms()) out.add_term(iw, c * ic);
  }
  return out;
}

// Generator relabeling along a bijection sigma of {1..n} (1-based images).
template <class S>
BasicLieSeries<S> permute(const BasicLieSeries<S>& a, const std::vector<int>& sigma) {
  const int n = a.generators();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permute: permutation size mismatch");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("permute: not a bijection of 1..n");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  std::vector<BasicLieSeries<S>> images;
  images.reserve(sigma.size());
  for (int v : sigma) images.push_back(BasicLieSeries<S>::generator(n, v, a.max_degree()));
  return substitute(a, images);
}

// Average of all generator permutations; idempotent, image = the symmetric
// subspace.
template <class S>
BasicLieSeries<S> symmetrize(const BasicLieSeries<S>& a) {
  const int n = a.generators();
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  BasicLieSeries<S> out(n, a.max_degree());
  const S inv_fact = scalar_traits<S>::from_rational(Rational(1, fact));
  do {
    BasicLieSeries<S> p = permute(a, sigma);
    for (const auto& [w, c] : p.terms()) out.add_term(w, inv_fact * c);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Re-indexes generators along a strictly increasing injection into {1..new_n}.
// Monotone relabeling preserves Lyndon words and their factorizations, so the
// terms map over key-by-key.
template <class S>
BasicLieSeries<S> relabel(const BasicLieSeries<S>& a, const std::vector<Letter>& target,
                          int new_n) {
  if (static_cast<int>(target.size()) != a.generators())
    throw std::invalid_argument("relabel: target size mismatch");
  for (size_t i = 0; i + 1 < target.size(); ++i)
    if (target[i] >= target[i + 1]) throw std::invalid_argument("relabel: must be increasing");
  if (target.back() > new_n) throw std::invalid_argument("relabel: target letter out of range");

  BasicLieSeries<S> out(new_n, a.max_degree());
  for (const auto& [w, c] : a.terms()) {
    Word nw(w.size());
    for (size_t i = 0; i < w.size(); ++i) nw[i] = target[w[i] - 1];
    out.add_term(nw, c);
  }
  return out;
}

// Float conversion for the power-iteration cross-check.
inline LieSeriesD to_double_series(const LieSeries& a) {
  LieSeriesD out(a.generators(), a.max_degree());
  for (const auto& [w, c] : a.terms()) out.add_term(w, c.to_double());
  return out;
}

}  // namespace lieavg
