#pragma once

#include "repkit/algebra.hpp"

namespace repkit {

// Human-writable JSON description of a bound quiver algebra. Rational
// coefficients are strings like "-1/2" so nothing is parsed as a float.
struct AlgebraFile {
  std::string name;
  std::vector<std::string> vertices;
  struct ArrowSpec {
    std::string name, from, to;
  };
  std::vector<ArrowSpec> arrows;
  struct TermSpec {
    std::string coeff;              // rational, e.g. "1", "-1/2"
    std::vector<std::string> path;  // arrow names in traversal order
  };
  std::vector<std::vector<TermSpec>> relations;
  std::vector<std::string> qh_order; // defaults to `vertices`
};

// Throws ParseError (with position) on malformed JSON, ValidationError when
// names do not resolve or a relation is not an admissible-ideal candidate.
AlgebraFile parse_algebra(const std::string& text);

std::string algebra_file_to_json(const AlgebraFile& f);

// Builds the bound quiver algebra; vertices are ordered by qh_order, which
// doubles as the quasi-hereditary order of the simples.
AlgebraPtr build_algebra(const AlgebraFile& f, int max_len = 30);

} // namespace repkit
