#pragma once

#include <map>

#include "lieavg/series.hpp"

namespace lieavg {

// Degree-truncated element of the free associative (tensor) algebra on n
// generators; keys are plain words over {1..n} including the empty word.
class AssocSeries {
 public:
  using TermMap = std::map<Word, Rational, DegLexLess>;

  AssocSeries(int n, int max_degree);
  static AssocSeries one(int n, int max_degree);

  int generators() const { return n_; }
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;
  Rational constant_term() const { return coefficient(Word{}); }

  void add_term(const Word& w, const Rational& c);

  friend bool operator==(const AssocSeries& a, const AssocSeries& b);

 private:
  int n_;
  int max_degree_;
  TermMap terms_;
};

AssocSeries add(const AssocSeries& a, const AssocSeries& b);
AssocSeries scale(const Rational& c, const AssocSeries& a);
AssocSeries operator+(const AssocSeries& a, const AssocSeries& b);
AssocSeries operator-(const AssocSeries& a, const AssocSeries& b);

// Concatenation product, truncated at the finer degree bound.
AssocSeries assoc_mul(const AssocSeries& p, const AssocSeries& q);
AssocSeries operator*(const AssocSeries& p, const AssocSeries& q);

// exp(p) = sum p^k / k!; requires zero constant term.
AssocSeries assoc_exp(const AssocSeries& p);

// log(q) = sum (-1)^(k+1) (q-1)^k / k; requires constant term 1.
AssocSeries assoc_log(const AssocSeries& q);

// Commutator expansion of each basis word's standard bracketing.
AssocSeries to_associative(const LieSeries& a);

// (1/d) left-nested bracketing of each degree-d word, normalized to the Lyndon
// basis. Right-inverse of to_associative on Lie elements (Dynkin-Specht-Wever).
// Requires zero constant term.
LieSeries dynkin_project(const AssocSeries& p);

}  // namespace lieavg
