#pragma once

#include <compare>
#include <string>

namespace dissect {

enum class Family { A, B };

std::string to_string(Family family);
Family parse_family(const std::string& text);

// Parameters of a generalized cluster complex. Family A with size n stands
// for the root system A_{n-1}; family B with size n for B_n.
class ComplexParams {
 public:
  ComplexParams(Family family, int m, int n);

  Family family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

  // Rank of the reflection group: n-1 for A_{n-1}, n for B_n.
  int rank() const noexcept { return family_ == Family::A ? n_ - 1 : n_; }
  // Number of diagonals in a facet.
  int facet_size() const noexcept { return rank(); }
  int dimension() const noexcept { return rank() - 1; }
  // mn+2 for family A, 2mn+2 for family B.
  int polygon_size() const noexcept {
    return family_ == Family::A ? m_ * n_ + 2 : 2 * m_ * n_ + 2;
  }

  std::string describe() const;

  friend bool operator==(const ComplexParams&, const ComplexParams&) = default;
  friend auto operator<=>(const ComplexParams&, const ComplexParams&) = default;

 private:
  Family family_;
  int m_;
  int n_;
};

}  // namespace dissect
