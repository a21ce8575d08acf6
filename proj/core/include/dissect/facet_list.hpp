#pragma once

// Plain-text facet lists: one facet per line, vertices as whitespace-separated
// tokens. Blank lines and lines starting with '#' are skipped; a line
// containing only "{}" denotes the empty facet.

#include <iosfwd>
#include <string>
#include <vector>

#include "dissect/simplicial.hpp"

namespace dissect {

struct NamedComplex {
  AbstractComplex complex;
  // names[v] is the token for vertex v.
  std::vector<std::string> names;
};

// Tokens are numbered in order of first appearance.
NamedComplex read_facet_list(std::istream& in);
void write_facet_list(std::ostream& out, const AbstractComplex& complex, const std::vector<std::string>& names = {});

}  // namespace dissect
