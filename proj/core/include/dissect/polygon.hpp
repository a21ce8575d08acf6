#pragma once

// Combinatorial model of a labeled convex polygon: vertices are positions on
// a cycle, chords are unordered vertex pairs, crossing is cyclic interleaving.

#include <compare>
#include <cstdint>
#include <string>

#include <boost/container/static_vector.hpp>

#include "dissect/params.hpp"

namespace dissect {

// A polygon vertex, identified by its anticlockwise position 0..N-1.
struct Label {
  int position = 0;

  friend bool operator==(Label, Label) = default;
  friend auto operator<=>(Label, Label) = default;
};

// Number of anticlockwise boundary steps from a to b, i.e. (b - a) mod N.
int arc_distance(Label a, Label b, int polygon_size);

// Antipodal vertex of a centrally symmetric polygon with an even vertex count.
Label mirror(Label label, int polygon_size);

// Human-facing labels. Family A: 1..mn+2. Family B: +i for vertex i and -i
// for the barred vertex, i in 1..mn+1.
int signed_label(Label label, const ComplexParams& params);
Label label_from_signed(int value, const ComplexParams& params);
std::string label_text(Label label, const ComplexParams& params);

// A diagonal of the polygon as an unordered pair of nonadjacent vertices.
class Chord {
 public:
  // Throws std::invalid_argument for equal or boundary-adjacent endpoints.
  static Chord make(Label a, Label b, int polygon_size);

  Label low() const noexcept { return low_; }
  Label high() const noexcept { return high_; }
  int polygon_size() const noexcept { return polygon_size_; }
  bool has_endpoint(Label v) const noexcept { return v == low_ || v == high_; }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;

 private:
  Chord(Label low, Label high, int polygon_size) : low_(low), high_(high), polygon_size_(polygon_size) {}

  Label low_;
  Label high_;
  int polygon_size_ = 0;
};

// True iff the endpoint pairs strictly interleave around the cycle.
// Chords sharing an endpoint do not cross.
bool chords_cross(const Chord& c1, const Chord& c2);

// The chord cuts the (mn+2)-gon into two parts whose vertex counts are
// congruent to 2 mod m.
bool is_valid_a_diagonal(const Chord& chord, int m, int n);

enum class DiagonalKind : std::uint8_t { AChord, BDiameter, BPair };

using ChordList = boost::container::static_vector<Chord, 2>;

// A vertex of the dissection complex. For BPair only the canonical
// constituent is stored (the one whose initial point has a positive label);
// the mirror chord is derived.
class Diagonal {
 public:
  static Diagonal a_chord(const Chord& chord);
  // Throws std::invalid_argument unless the chord joins antipodal vertices.
  static Diagonal b_diameter(const Chord& chord);
  static Diagonal b_diameter(Label endpoint, int polygon_size);
  // Either constituent of a mirror pair; the result is canonicalized.
  // Throws std::invalid_argument for diameters.
  static Diagonal b_pair(const Chord& constituent);

  DiagonalKind kind() const noexcept { return kind_; }
  // Start and end of the canonical chord. For BPair and BDiameter the start
  // is the initial point; for AChord it is the lower position.
  Label start() const noexcept { return start_; }
  Label end() const noexcept { return end_; }
  int polygon_size() const noexcept { return polygon_size_; }

  Chord chord() const { return Chord::make(start_, end_, polygon_size_); }
  // Every chord drawn for this diagonal: one, or two for a mirror pair.
  ChordList constituents() const;
  bool has_endpoint(Label v) const;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend std::strong_ordering operator<=>(const Diagonal& x, const Diagonal& y);

 private:
  Diagonal(DiagonalKind kind, Label start, Label end, int polygon_size)
      : kind_(kind), start_(start), end_(end), polygon_size_(polygon_size) {}

  DiagonalKind kind_;
  Label start_;
  Label end_;
  int polygon_size_;
};

// Diameters are always valid; a mirror pair is valid iff its chord does not
// cross its mirror and the arc cut off away from the center has length
// congruent to 1 mod m.
bool is_valid_b_diagonal(const Diagonal& diagonal, int m, int n);

bool is_valid_diagonal(const Diagonal& diagonal, const ComplexParams& params);

// No constituent chord of one crosses a constituent chord of the other.
bool compatible(const Diagonal& d1, const Diagonal& d2);

std::string to_string(const Diagonal& diagonal, const ComplexParams& params);

}  // namespace dissect
