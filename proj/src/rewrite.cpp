#include "lieavg/rewrite.hpp"

#include <mutex>
#include <unordered_map>

namespace lieavg {

namespace {

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (Letter c : w) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct WordPairHash {
  size_t operator()(const std::pair<Word, Word>& p) const {
    WordHash h;
    return h(p.first) * 1000003ull ^ h(p.second);
  }
};

void accumulate(Expansion& out, const Word& w, const Rational& c) {
  auto it = out.find(w);
  if (it == out.end()) {
    if (!c.is_zero()) out.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

std::recursive_mutex table_mutex;
std::unordered_map<std::pair<Word, Word>, Expansion, WordPairHash> pair_table;
std::unordered_map<Word, Expansion, WordHash> left_nested_table;
std::unordered_map<Word, Expansion, WordHash> commutator_table;

// [b(a), b(b)] for arbitrary basis words: orders the pair, flips the sign.
void bracket_basis_words(Expansion& out, const Word& a, const Word& b, const Rational& coef) {
  if (a == b) return;
  if (lex_less(a, b)) {
    for (const auto& [w, q] : lyndon_pair_expansion(a, b)) accumulate(out, w, coef * q);
  } else {
    for (const auto& [w, q] : lyndon_pair_expansion(b, a)) accumulate(out, w, -(coef * q));
  }
}

}  // namespace

const Expansion& lyndon_pair_expansion(const Word& u, const Word& v) {
  std::lock_guard<std::recursive_mutex> lock(table_mutex);
  auto key = std::make_pair(u, v);
  if (auto it = pair_table.find(key); it != pair_table.end()) return it->second;

  Expansion result;
  bool direct = false;
  if (u.size() == 1) {
    direct = true;
  } else {
    // (u, v) is the standard factorization of u.v iff the right factor of u's
    // own standard factorization is >= v.
    auto [u1, u2] = standard_factorization(u);
    if (!lex_less(u2, v)) {
      direct = true;
    } else {
      // [u, v] = [u1, [u2, v]] - [u2, [u1, v]]
      // Node references stay valid across the recursive inserts.
      const Expansion& inner1 = lyndon_pair_expansion(u2, v);
      for (const auto& [w, q] : inner1) bracket_basis_words(result, u1, w, q);
      const Expansion& inner2 = lyndon_pair_expansion(u1, v);
      for (const auto& [w, q] : inner2) bracket_basis_words(result, u2, w, -q);
    }
  }
  if (direct) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    result.emplace(std::move(uv), Rational(1));
  }
  return pair_table.emplace(std::move(key), std::move(result)).first->second;
}

const Expansion& left_nested_expansion(const Word& w) {
  std::lock_guard<std::recursive_mutex> lock(table_mutex);
  if (auto it = left_nested_table.find(w); it != left_nested_table.end()) return it->second;

  Expansion result;
  if (w.size() == 1) {
    result.emplace(w, Rational(1));
  } else {
    Word prefix(w.begin(), w.end() - 1);
    Word last{w.back()};
    const Expansion& inner = left_nested_expansion(prefix);
    for (const auto& [b, q] : inner) bracket_basis_words(result, b, last, q);
  }
  return left_nested_table.emplace(w, std::move(result)).first->second;
}

const Expansion& commutator_expansion(const Word& lyndon_word) {
  std::lock_guard<std::recursive_mutex> lock(table_mutex);
  if (auto it = commutator_table.find(lyndon_word); it != commutator_table.end()) return it->second;

  Expansion result;
  if (lyndon_word.size() == 1) {
    result.emplace(lyndon_word, Rational(1));
  } else {
    auto [u, v] = standard_factorization(lyndon_word);
    const Expansion& eu = commutator_expansion(u);
    const Expansion& ev = commutator_expansion(v);
    for (const auto& [wu, qu] : eu) {
      for (const auto& [wv, qv] : ev) {
        Word uv = wu;
        uv.insert(uv.end(), wv.begin(), wv.end());
        accumulate(result, uv, qu * qv);
        Word vu = wv;
        vu.insert(vu.end(), wu.begin(), wu.end());
        accumulate(result, vu, -(qu * qv));
      }
    }
  }
  return commutator_table.emplace(lyndon_word, std::move(result)).first->second;
}

}  // namespace lieavg
