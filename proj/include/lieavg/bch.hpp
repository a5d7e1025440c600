#pragma once

#include <vector>

#include "lieavg/assoc.hpp"
#include "lieavg/series.hpp"

namespace lieavg {

// The universal series Z with exp(Z) = exp(x1) exp(x2) on two generators,
// truncated at max_degree; computed as dynkin_project(log(exp(x1) exp(x2))).
LieSeries bch_universal(int max_degree);

// Z with exp(Z) = exp(a) exp(b) for truncated Lie series a, b on a common
// alphabet and truncation.
LieSeries bch_compose(const LieSeries& a, const LieSeries& b);

// Left fold of bch_compose over a nonempty list; order-independent by
// associativity.
LieSeries bch_multi(const std::vector<LieSeries>& xs);

// sum_k (1/k!) ad_e^k(a): finite at any truncation since each bracket raises
// degree.
LieSeries ad_exp(const LieSeries& e, const LieSeries& a);

}  // namespace lieavg
