#include "dissect/polygon.hpp"

#include <stdexcept>
#include <tuple>

namespace dissect {

int arc_distance(Label a, Label b, int polygon_size) {
  int d = (b.position - a.position) % polygon_size;
  return d < 0 ? d + polygon_size : d;
}

Label mirror(Label label, int polygon_size) {
  return Label{(label.position + polygon_size / 2) % polygon_size};
}

int signed_label(Label label, const ComplexParams& params) {
  if (params.family() == Family::A) return label.position + 1;
  const int half = params.m() * params.n() + 1;
  return label.position < half ? label.position + 1 : -(label.position - half + 1);
}

Label label_from_signed(int value, const ComplexParams& params) {
  if (params.family() == Family::A) {
    if (value < 1 || value > params.polygon_size()) {
      throw std::invalid_argument("label " + std::to_string(value) + " outside 1.." +
                                  std::to_string(params.polygon_size()));
    }
    return Label{value - 1};
  }
  const int half = params.m() * params.n() + 1;
  if (value == 0 || value > half || value < -half) {
    throw std::invalid_argument("label " + std::to_string(value) + " outside +-1.." + std::to_string(half));
  }
  return value > 0 ? Label{value - 1} : Label{half - value - 1};
}

std::string label_text(Label label, const ComplexParams& params) {
  const int value = signed_label(label, params);
  return value > 0 ? std::to_string(value) : "~" + std::to_string(-value);
}

Chord Chord::make(Label a, Label b, int polygon_size) {
  if (polygon_size < 4) throw std::invalid_argument("a polygon with diagonals needs at least 4 vertices");
  if (a.position < 0 || a.position >= polygon_size || b.position < 0 || b.position >= polygon_size) {
    throw std::invalid_argument("chord endpoint outside the polygon");
  }
  if (a == b) throw std::invalid_argument("chord endpoints must be distinct");
  const int d = arc_distance(a, b, polygon_size);
  if (d == 1 || d == polygon_size - 1) {
    throw std::invalid_argument("chord endpoints are consecutive on the boundary");
  }
  return a < b ? Chord(a, b, polygon_size) : Chord(b, a, polygon_size);
}

bool chords_cross(const Chord& c1, const Chord& c2) {
  const int a = c1.low().position, b = c1.high().position;
  const int c = c2.low().position, d = c2.high().position;
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool is_valid_a_diagonal(const Chord& chord, int m, int n) {
  if (chord.polygon_size() != m * n + 2) return false;
  return arc_distance(chord.low(), chord.high(), chord.polygon_size()) % m == 1 % m;
}

namespace {

// Start of the shorter anticlockwise arc: travelling from it along the chord
// keeps the polygon center on the left.
Label center_left_start(const Chord& chord) {
  const int n = chord.polygon_size();
  return 2 * arc_distance(chord.low(), chord.high(), n) < n ? chord.low() : chord.high();
}

}  // namespace

Diagonal Diagonal::a_chord(const Chord& chord) {
  return Diagonal(DiagonalKind::AChord, chord.low(), chord.high(), chord.polygon_size());
}

Diagonal Diagonal::b_diameter(const Chord& chord) {
  const int n = chord.polygon_size();
  if (n % 2 != 0 || mirror(chord.low(), n) != chord.high()) {
    throw std::invalid_argument("chord is not a diameter");
  }
  return b_diameter(chord.low(), n);
}

Diagonal Diagonal::b_diameter(Label endpoint, int polygon_size) {
  if (polygon_size % 2 != 0 || polygon_size < 4) throw std::invalid_argument("diameter needs an even polygon");
  const int half = polygon_size / 2;
  const Label positive{endpoint.position % half};
  return Diagonal(DiagonalKind::BDiameter, positive, mirror(positive, polygon_size), polygon_size);
}

Diagonal Diagonal::b_pair(const Chord& constituent) {
  const int n = constituent.polygon_size();
  if (n % 2 != 0) throw std::invalid_argument("mirror pairs need an even polygon");
  if (arc_distance(constituent.low(), constituent.high(), n) * 2 == n) {
    throw std::invalid_argument("a diameter is not a mirror pair");
  }
  Label start = center_left_start(constituent);
  Label end = start == constituent.low() ? constituent.high() : constituent.low();
  if (start.position >= n / 2) {
    start = mirror(start, n);
    end = mirror(end, n);
  }
  return Diagonal(DiagonalKind::BPair, start, end, n);
}

ChordList Diagonal::constituents() const {
  ChordList out;
  out.push_back(chord());
  if (kind_ == DiagonalKind::BPair) {
    out.push_back(Chord::make(mirror(start_, polygon_size_), mirror(end_, polygon_size_), polygon_size_));
  }
  return out;
}

bool Diagonal::has_endpoint(Label v) const {
  for (const Chord& c : constituents()) {
    if (c.has_endpoint(v)) return true;
  }
  return false;
}

std::strong_ordering operator<=>(const Diagonal& x, const Diagonal& y) {
  auto key = [](const Diagonal& d) {
    const int lo = std::min(d.start_.position, d.end_.position);
    const int hi = std::max(d.start_.position, d.end_.position);
    return std::make_tuple(d.polygon_size_, lo, hi, static_cast<int>(d.kind_));
  };
  return key(x) <=> key(y);
}

bool is_valid_b_diagonal(const Diagonal& diagonal, int m, int n) {
  const int size = 2 * m * n + 2;
  if (diagonal.polygon_size() != size) return false;
  switch (diagonal.kind()) {
    case DiagonalKind::AChord:
      return false;
    case DiagonalKind::BDiameter:
      return mirror(diagonal.start(), size) == diagonal.end();
    case DiagonalKind::BPair: {
      const ChordList chords = diagonal.constituents();
      if (chords[0] == chords[1] || chords_cross(chords[0], chords[1])) return false;
      const int cut = arc_distance(diagonal.start(), diagonal.end(), size);
      return 2 * cut < size && cut % m == 1 % m;
    }
  }
  return false;
}

bool is_valid_diagonal(const Diagonal& diagonal, const ComplexParams& params) {
  if (params.family() == Family::A) {
    return diagonal.kind() == DiagonalKind::AChord && is_valid_a_diagonal(diagonal.chord(), params.m(), params.n());
  }
  return is_valid_b_diagonal(diagonal, params.m(), params.n());
}

bool compatible(const Diagonal& d1, const Diagonal& d2) {
  for (const Chord& c1 : d1.constituents()) {
    for (const Chord& c2 : d2.constituents()) {
      if (chords_cross(c1, c2)) return false;
    }
  }
  return true;
}

std::string to_string(const Diagonal& diagonal, const ComplexParams& params) {
  const std::string s = label_text(diagonal.start(), params);
  const std::string e = label_text(diagonal.end(), params);
  switch (diagonal.kind()) {
    case DiagonalKind::AChord:
      return "[" + s + "," + e + "]";
    case DiagonalKind::BDiameter:
      return "diam[" + s + "," + e + "]";
    case DiagonalKind::BPair:
      return "pair[" + s + "," + e + "]";
  }
  return {};
}

}  // namespace dissect
