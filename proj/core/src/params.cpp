#include "dissect/params.hpp"

#include <stdexcept>

namespace dissect {

std::string to_string(Family family) { return family == Family::A ? "A" : "B"; }

Family parse_family(const std::string& text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  throw std::invalid_argument("unknown family '" + text + "' (expected A or B)");
}

ComplexParams::ComplexParams(Family family, int m, int n) : family_(family), m_(m), n_(n) {
  if (m < 1) throw std::invalid_argument("multiplicity m must be >= 1");
  if (n < 1) throw std::invalid_argument("size n must be >= 1");
  // Labels and vertex indices are stored in 16 bits downstream.
  if (static_cast<long long>(m) * n > 16000) {
    throw std::invalid_argument("m*n too large for the polygon model");
  }
}

std::string ComplexParams::describe() const {
  if (family_ == Family::A) {
    return "A_" + std::to_string(n_ - 1) + " (m=" + std::to_string(m_) + ", n=" + std::to_string(n_) + ")";
  }
  return "B_" + std::to_string(n_) + " (m=" + std::to_string(m_) + ", n=" + std::to_string(n_) + ")";
}

}  // namespace dissect
