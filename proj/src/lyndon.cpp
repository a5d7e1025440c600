#include "lieavg/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieavg {

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool DegLexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

bool is_lyndon(const Word& w) {
  const size_t d = w.size();
  if (d == 0) return false;
  for (size_t r = 1; r < d; ++r) {
    // compare w against its rotation by r
    bool less = false, greater = false;
    for (size_t i = 0; i < d; ++i) {
      Letter a = w[i];
      Letter b = w[(i + r) % d];
      if (a != b) {
        less = a < b;
        greater = a > b;
        break;
      }
    }
    if (greater || (!less && !greater)) return false;  // rotation <= w
  }
  return true;
}

std::vector<Word> generate_lyndon_words(int n, int max_degree) {
  if (n < 1) throw std::invalid_argument("generate_lyndon_words: n must be >= 1");
  if (max_degree < 1) throw std::invalid_argument("generate_lyndon_words: max_degree must be >= 1");
  if (n > 255) throw std::invalid_argument("generate_lyndon_words: n too large");

  // Duval's algorithm emits Lyndon words of length <= max_degree in pure
  // lexicographic order; re-sort stably into (degree, lex) order.
  std::vector<Word> out;
  Word w{1};
  while (true) {
    out.push_back(w);
    // periodic extension to full length
    Word t = w;
    while (static_cast<int>(t.size()) < max_degree) t.push_back(t[t.size() % w.size()]);
    w = std::move(t);
    while (!w.empty() && w.back() == static_cast<Letter>(n)) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  std::stable_sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: degree-1 word");
  for (size_t start = 1; start < w.size(); ++start) {
    Word v(w.begin() + static_cast<long>(start), w.end());
    if (is_lyndon(v)) {
      Word u(w.begin(), w.begin() + static_cast<long>(start));
      return {std::move(u), std::move(v)};
    }
  }
  throw std::invalid_argument("standard_factorization: input is not a Lyndon word");
}

namespace {

int moebius(long long m) {
  int result = 1;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;  // squared factor
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

long long ipow(long long base, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

long long witt_dimension(int n, int d) {
  if (n < 1) throw std::invalid_argument("witt_dimension: n must be >= 1");
  if (d < 1) throw std::invalid_argument("witt_dimension: d must be >= 1");
  long long sum = 0;
  for (long long e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    sum += moebius(e) * ipow(n, d / e);
  }
  return sum / d;
}

std::string word_to_string(const Word& w, int n) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (n <= 9) {
      s += static_cast<char>('0' + w[i]);
    } else {
      if (i) s += ',';
      s += std::to_string(static_cast<int>(w[i]));
    }
  }
  return s;
}

Word word_from_string(std::string_view s, int n) {
  Word w;
  if (s.empty()) throw std::invalid_argument("word_from_string: empty word");
  if (s.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find(',', pos);
      if (next == std::string_view::npos) next = s.size();
      int v = std::stoi(std::string(s.substr(pos, next - pos)));
      if (v < 1 || v > n) throw std::invalid_argument("word_from_string: letter out of range");
      w.push_back(static_cast<Letter>(v));
      pos = next + 1;
    }
  } else {
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("word_from_string: bad digit");
      int v = ch - '0';
      if (v > n) throw std::invalid_argument("word_from_string: letter out of range");
      w.push_back(static_cast<Letter>(v));
    }
  }
  return w;
}

}  // namespace lieavg
