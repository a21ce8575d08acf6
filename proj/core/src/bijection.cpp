#include "dissect/bijection.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "dissect/errors.hpp"

namespace dissect {

int BijectionImage::ones() const { return static_cast<int>(std::count(flags.begin(), flags.end(), 1)); }

void validate_image(const BijectionImage& img, int m, int n) {
  if (m < 1 || n < 1) throw InvalidImageError("need m >= 1 and n >= 1");
  if (static_cast<int>(img.flags.size()) != n) {
    throw InvalidImageError("flag vector has length " + std::to_string(img.flags.size()) + ", expected " +
                            std::to_string(n));
  }
  for (int e : img.flags) {
    if (e != 0 && e != 1) throw InvalidImageError("flags must be 0 or 1");
  }
  if (static_cast<int>(img.labels.size()) != img.ones()) {
    throw InvalidImageError("label count " + std::to_string(img.labels.size()) + " differs from the " +
                            std::to_string(img.ones()) + " flags set to 1");
  }
  const int top = m * n + 1;
  for (std::size_t j = 0; j < img.labels.size(); ++j) {
    if (img.labels[j] < 1 || img.labels[j] > top) {
      throw InvalidImageError("label " + std::to_string(img.labels[j]) + " outside 1.." + std::to_string(top));
    }
    if (j > 0 && img.labels[j] < img.labels[j - 1]) throw InvalidImageError("labels must be weakly increasing");
  }
}

Label initial_point(const Diagonal& diagonal) {
  if (diagonal.kind() == DiagonalKind::AChord) {
    throw std::invalid_argument("initial points are defined for type-B diagonals only");
  }
  // Both constructors canonicalize the start to the positive initial point.
  return diagonal.start();
}

SubPolygon::SubPolygon(int polygon_size) : polygon_size_(polygon_size) {
  active_.reserve(static_cast<std::size_t>(polygon_size));
  for (int p = 0; p < polygon_size; ++p) active_.push_back(Label{p});
}

bool SubPolygon::contains(Label v) const { return std::binary_search(active_.begin(), active_.end(), v); }

Label SubPolygon::step(Label from, int k) const {
  auto it = std::lower_bound(active_.begin(), active_.end(), from);
  if (it == active_.end() || *it != from) throw std::logic_error("step from an inactive vertex");
  const auto idx = static_cast<std::size_t>(it - active_.begin());
  return active_[(idx + static_cast<std::size_t>(k)) % active_.size()];
}

void SubPolygon::remove_after(Label from, int count) {
  std::vector<Label> doomed;
  for (int k = 1; k <= count; ++k) {
    const Label v = step(from, k);
    doomed.push_back(v);
    doomed.push_back(mirror(v, polygon_size_));
  }
  std::sort(doomed.begin(), doomed.end());
  std::vector<Label> kept;
  std::set_difference(active_.begin(), active_.end(), doomed.begin(), doomed.end(), std::back_inserter(kept));
  active_ = std::move(kept);
}

namespace {

// One stage of the recursion: the smallest remaining initial point whose m
// successors in the current sub-polygon avoid every initial point and its
// mirror. `initial` is sorted.
std::optional<Label> eligible_start(const SubPolygon& sub, const std::vector<Label>& initial, int m,
                                    int polygon_size) {
  std::set<Label> marked;
  for (Label a : initial) {
    marked.insert(a);
    marked.insert(mirror(a, polygon_size));
  }
  for (std::size_t j = 0; j < initial.size(); ++j) {
    if (j > 0 && initial[j] == initial[j - 1]) continue;
    bool clear = true;
    for (int k = 1; k <= m && clear; ++k) clear = !marked.contains(sub.step(initial[j], k));
    if (clear) return initial[j];
  }
  return std::nullopt;
}

Diagonal stage_diagonal(const SubPolygon& sub, Label start, int m, int polygon_size) {
  const Label end = sub.step(start, m + 1);
  if (end == mirror(start, polygon_size)) return Diagonal::b_diameter(start, polygon_size);
  return Diagonal::b_pair(Chord::make(start, end, polygon_size));
}

}  // namespace

BijectionImage encode(const Face& face) {
  const ComplexParams& params = face.params();
  if (params.family() != Family::B) throw MalformedFaceError("the bijection is defined on type-B faces");
  const int m = params.m();
  const int size = params.polygon_size();

  std::vector<Diagonal> remaining(face.diagonals().begin(), face.diagonals().end());
  std::vector<Label> initial;
  for (const Diagonal& d : remaining) initial.push_back(initial_point(d));
  std::sort(initial.begin(), initial.end());

  BijectionImage img;
  for (Label a : initial) img.labels.push_back(signed_label(a, params));

  SubPolygon sub(size);
  for (int stage = 0; stage < params.n(); ++stage) {
    if (initial.empty()) {
      img.flags.push_back(0);
      continue;
    }
    const auto start = eligible_start(sub, initial, m, size);
    if (!start) throw MalformedFaceError("no eligible initial point at stage " + std::to_string(stage + 1));
    const Diagonal candidate = stage_diagonal(sub, *start, m, size);
    auto it = std::find(remaining.begin(), remaining.end(), candidate);
    if (it != remaining.end()) {
      img.flags.push_back(1);
      remaining.erase(it);
      initial.erase(std::find(initial.begin(), initial.end(), *start));
    } else {
      img.flags.push_back(0);
    }
    sub.remove_after(*start, m);
    for (const Diagonal& d : remaining) {
      for (const Chord& c : d.constituents()) {
        if (!sub.contains(c.low()) || !sub.contains(c.high())) {
          throw MalformedFaceError("diagonal " + to_string(d, params) + " leaves the sub-polygon at stage " +
                                   std::to_string(stage + 1));
        }
      }
    }
  }
  if (!remaining.empty()) throw MalformedFaceError("diagonals left over after all stages");
  return img;
}

Face decode(const BijectionImage& img, int m, int n) {
  validate_image(img, m, n);
  const ComplexParams params(Family::B, m, n);
  const int size = params.polygon_size();

  std::vector<Label> initial;
  for (int a : img.labels) initial.push_back(label_from_signed(a, params));

  SubPolygon sub(size);
  std::vector<Diagonal> diagonals;
  for (int stage = 0; stage < n; ++stage) {
    if (initial.empty()) continue;  // remaining flags are all 0 by validation
    const auto start = eligible_start(sub, initial, m, size);
    if (!start) throw InvalidImageError("no eligible label at stage " + std::to_string(stage + 1));
    if (img.flags[static_cast<std::size_t>(stage)] == 1) {
      diagonals.push_back(stage_diagonal(sub, *start, m, size));
      initial.erase(std::find(initial.begin(), initial.end(), *start));
    }
    sub.remove_after(*start, m);
  }
  if (!initial.empty()) throw InvalidImageError("labels left over after all stages");
  try {
    return Face::make(params, std::move(diagonals));
  } catch (const MalformedFaceError& e) {
    throw InvalidImageError(std::string("decoded diagonals do not form a face: ") + e.what());
  }
}

}  // namespace dissect
