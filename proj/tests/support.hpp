#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "dissect/counts.hpp"
#include "dissect/dissection_complex.hpp"
#include "dissect/simplicial.hpp"
#include "oracle/oracle.hpp"

namespace dissect {

// Readable parameter values in test output.
inline void PrintTo(const ComplexParams& p, std::ostream* os) { *os << p.describe(); }

}  // namespace dissect

namespace testing_support {

inline oracle::Diag to_oracle(const dissect::Diagonal& d) {
  oracle::Diag out;
  for (const dissect::Chord& c : d.constituents()) out.emplace_back(c.low().position, c.high().position);
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::DiagFace to_oracle(const dissect::Face& f) {
  oracle::DiagFace out;
  for (const dissect::Diagonal& d : f.diagonals()) out.push_back(to_oracle(d));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Int> ints(const std::vector<dissect::BigInt>& v) { return {v.begin(), v.end()}; }

inline std::vector<oracle::Int> oracle_f(const dissect::ComplexParams& p) {
  return p.family() == dissect::Family::A ? oracle::f_type_a(p.m(), p.n()) : oracle::f_type_b(p.m(), p.n());
}

inline std::vector<oracle::Int> oracle_narayana(const dissect::ComplexParams& p) {
  return p.family() == dissect::Family::A ? oracle::narayana_a(p.m(), p.n()) : oracle::narayana_b(p.m(), p.n());
}

inline std::vector<oracle::Facet> facets_of(const dissect::AbstractComplex& c) {
  return {c.facets().begin(), c.facets().end()};
}

// Parameter grids shared by several suites.
inline std::vector<dissect::ComplexParams> grid(dissect::Family family, int max_m, int max_n) {
  std::vector<dissect::ComplexParams> out;
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) out.emplace_back(family, m, n);
  }
  return out;
}

inline std::string param_name(const dissect::ComplexParams& p) {
  return dissect::to_string(p.family()) + "_m" + std::to_string(p.m()) + "_n" + std::to_string(p.n());
}

}  // namespace testing_support
