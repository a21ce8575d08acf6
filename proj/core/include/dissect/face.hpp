#pragma once

#include <span>
#include <string>
#include <vector>

#include "dissect/params.hpp"
#include "dissect/polygon.hpp"

namespace dissect {

// A set of pairwise compatible valid diagonals, i.e. a dissection.
class Face {
 public:
  // The empty dissection.
  explicit Face(ComplexParams params) : params_(params) {}

  // Validates every diagonal and every pair; throws MalformedFaceError
  // naming the first offending diagonal.
  static Face make(ComplexParams params, std::vector<Diagonal> diagonals);

  // Skips validation. The caller guarantees the face invariants and that
  // the diagonals are sorted and distinct.
  static Face trusted(ComplexParams params, std::vector<Diagonal> diagonals);

  const ComplexParams& params() const noexcept { return params_; }
  std::span<const Diagonal> diagonals() const noexcept { return diagonals_; }
  std::size_t size() const noexcept { return diagonals_.size(); }
  bool empty() const noexcept { return diagonals_.empty(); }
  bool contains(const Diagonal& d) const;
  bool has_diameter() const;

  std::string to_string() const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& x, const Face& y) {
    return x.diagonals_ <=> y.diagonals_;
  }

 private:
  Face(ComplexParams params, std::vector<Diagonal> diagonals)
      : params_(params), diagonals_(std::move(diagonals)) {}

  ComplexParams params_;
  std::vector<Diagonal> diagonals_;
};

}  // namespace dissect
