#pragma once

// The bijection between type-B dissections with i diagonals and pairs
// (weakly increasing labels a_1 <= ... <= a_i in [1, mn+1],
//  0/1 vector of length n with exactly i ones).

#include <compare>
#include <vector>

#include "dissect/face.hpp"
#include "dissect/polygon.hpp"

namespace dissect {

struct BijectionImage {
  std::vector<int> labels;  // a_1 <= ... <= a_i, positive labels
  std::vector<int> flags;   // epsilon_1..epsilon_n

  int ones() const;
  friend bool operator==(const BijectionImage&, const BijectionImage&) = default;
  friend auto operator<=>(const BijectionImage&, const BijectionImage&) = default;
};

// Throws InvalidImageError unless img is in the stated domain for (m, n).
void validate_image(const BijectionImage& img, int m, int n);

// Initial point of a type-B diagonal: the positive endpoint of a diameter;
// for a mirror pair, orient each chord so the center is on its left and
// take the start with a positive label.
Label initial_point(const Diagonal& diagonal);

// The active vertices of a centrally symmetric sub-polygon, kept under their
// original positions.
class SubPolygon {
 public:
  explicit SubPolygon(int polygon_size);

  int size() const noexcept { return static_cast<int>(active_.size()); }
  bool contains(Label v) const;
  // The vertex k steps anticlockwise from `from` among the active vertices.
  Label step(Label from, int k) const;
  // Drops the `count` active vertices following `from` and their mirrors.
  void remove_after(Label from, int count);

 private:
  int polygon_size_;
  std::vector<Label> active_;
};

// Throws MalformedFaceError for faces outside the type-B complex.
BijectionImage encode(const Face& face);
// Throws InvalidImageError when no dissection corresponds to img.
Face decode(const BijectionImage& img, int m, int n);

}  // namespace dissect
