#include "lieavg/bch.hpp"

#include <stdexcept>

namespace lieavg {

LieSeries bch_universal(int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("bch_universal: degree must be >= 1");
  return bch_compose(LieSeries::generator(2, 1, max_degree),
                     LieSeries::generator(2, 2, max_degree));
}

LieSeries bch_compose(const LieSeries& a, const LieSeries& b) {
  detail::require_same_generators(a.generators(), b.generators(), "bch_compose");
  const int d = std::min(a.max_degree(), b.max_degree());
  AssocSeries ea = assoc_exp(to_associative(truncate(a, d)));
  AssocSeries eb = assoc_exp(to_associative(truncate(b, d)));
  return dynkin_project(assoc_log(assoc_mul(ea, eb)));
}

LieSeries bch_multi(const std::vector<LieSeries>& xs) {
  if (xs.empty()) throw std::invalid_argument("bch_multi: empty list");
  LieSeries acc = xs.front();
  for (size_t i = 1; i < xs.size(); ++i) acc = bch_compose(acc, xs[i]);
  return acc;
}

LieSeries ad_exp(const LieSeries& e, const LieSeries& a) {
  detail::require_same_generators(e.generators(), a.generators(), "ad_exp");
  const int d = std::min(e.max_degree(), a.max_degree());
  LieSeries out = truncate(a, d);
  LieSeries cur = out;
  for (int k = 1; k <= d; ++k) {
    cur = scale(Rational(1, k), bracket(e, cur));
    if (cur.is_zero()) break;
    out = add(out, cur);
  }
  return out;
}

}  // namespace lieavg
