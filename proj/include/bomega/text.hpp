#pragma once

#include <string>
#include <string_view>

#include "bomega/bicyclic.hpp"
#include "bomega/element.hpp"
#include "bomega/endo.hpp"

namespace bomega {

/// The surface grammar is plain ASCII. Inductive sets print as half
/// intervals `[n)` (the closing parenthesis is deliberately unbalanced),
/// the empty set and the zero element both print as `0`, triples as
/// `(i,j,[n))`, families as `{...}`, endomorphisms as `alpha:k,p`,
/// `beta:k,p`, `gamma:k`, `delta:k` and `zero`. Parsers skip whitespace
/// between tokens and report failures with a position and the expected
/// token.

std::string to_string(const OmegaSet& s);
std::string to_string(const Family& family);
std::string to_string(const Element& x);
std::string to_string(const MonoidEndo& e);
std::string to_string(const BicyclicPair& x);
std::string to_string(const BicyclicWord& w);
std::string to_string(const Lz2N& x);
std::string to_string(GreenRelation rel);

Element parse_element(std::string_view text, const Family& family);
Family parse_family(std::string_view text);
BicyclicWord parse_word(std::string_view text);
MonoidEndo parse_endo(std::string_view text);
GreenRelation parse_green_relation(std::string_view text, bool allow_j);

}  // namespace bomega
