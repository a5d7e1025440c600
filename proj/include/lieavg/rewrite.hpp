#pragma once

#include <map>

#include "lieavg/lyndon.hpp"
#include "lieavg/rational.hpp"

namespace lieavg {

// Homogeneous linear combination of Lyndon basis words (or, for the
// commutator expansion, of plain tensor words).
using Expansion = std::map<Word, Rational, DegLexLess>;

// Expansion of [b(u), b(v)] on the Lyndon basis for basis words u < v
// (lexicographically). [b(u), b(v)] is the basis word u.v when (u, v) is its
// standard factorization; otherwise it is rewritten through the Jacobi
// identity on the standard factorization of u, recursively. Memoized globally;
// results are homogeneous of degree |u| + |v|.
const Expansion& lyndon_pair_expansion(const Word& u, const Word& v);

// Left-nested bracketing [..[[x_{w1}, x_{w2}], x_{w3}].., x_{wd}] of an
// arbitrary word, on the Lyndon basis. Memoized; this is the Dynkin map
// before the 1/d scaling.
const Expansion& left_nested_expansion(const Word& w);

// Full commutator expansion of the standard bracketing of a Lyndon basis word
// inside the tensor algebra. Memoized.
const Expansion& commutator_expansion(const Word& lyndon_word);

}  // namespace lieavg
