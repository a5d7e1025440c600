#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieavg {

// Generator index, 1-based. Words over {1..n} label the graded bases; a word's
// degree is its letter count (= bracket count + 1).
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Orders words by (degree, lexicographic). This is the canonical term order
// used by every coefficient map and by serialization.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const;
};

bool lex_less(const Word& a, const Word& b);

// Rotation-minimality test: true iff w is strictly smaller than every proper
// cyclic rotation of itself.
bool is_lyndon(const Word& w);

// All Lyndon words on {1..n} of degree <= max_degree, sorted by
// (degree, lexicographic). Duval's generation.
std::vector<Word> generate_lyndon_words(int n, int max_degree);

// w = u.v with v the longest proper Lyndon suffix; u, v Lyndon and u < v.
// Requires degree(w) >= 2 and w Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

// Necklace count (1/d) * sum_{e|d} moebius(e) * n^(d/e): the dimension of the
// degree-d graded piece of the free Lie algebra on n generators.
long long witt_dimension(int n, int d);

// Compact form: digit string for n <= 9 ("112"), comma-separated otherwise.
std::string word_to_string(const Word& w, int n);
Word word_from_string(std::string_view s, int n);

}  // namespace lieavg
