#include "oracle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace oracle {

Int choose(int n, int k) {
  static std::vector<std::vector<Int>> rows{{1}};
  if (n < 0 || k < 0 || k > n) return 0;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, 1);
    for (std::size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Int> f_type_a(int m, int n) {
  std::vector<Int> f;
  for (int i = 0; i <= n - 1; ++i) f.push_back(choose(m * n + i + 1, i) * choose(n, i + 1) / n);
  return f;
}

std::vector<Int> f_type_b(int m, int n) {
  std::vector<Int> f;
  for (int i = 0; i <= n; ++i) f.push_back(choose(m * n + i, i) * choose(n, i));
  return f;
}

std::vector<Int> narayana_a(int m, int n) {
  std::vector<Int> h;
  for (int i = 0; i <= n - 1; ++i) h.push_back(choose(n - 1, i) * choose(m * n, i) / (i + 1));
  return h;
}

std::vector<Int> narayana_b(int m, int n) {
  std::vector<Int> h;
  for (int i = 0; i <= n; ++i) h.push_back(choose(n, i) * choose(m * n, i));
  return h;
}

std::vector<Int> h_from_f(const std::vector<Int>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<Int> h;
  for (int k = 0; k <= d; ++k) {
    Int sum = 0;
    for (int i = 0; i <= k; ++i) {
      const Int term = choose(d - i, k - i) * f[static_cast<std::size_t>(i)];
      sum += ((k - i) % 2 == 0) ? term : Int(-term);
    }
    h.push_back(sum);
  }
  return h;
}

std::vector<Diag> diagonals_a(int m, int n) {
  const int N = m * n + 2;
  std::vector<Diag> out;
  for (int a = 0; a < N; ++a) {
    for (int b = a + 2; b < N; ++b) {
      if (a == 0 && b == N - 1) continue;
      const int side1 = b - a + 1;
      const int side2 = N - (b - a) + 1;
      if (side1 % m == 2 % m && side2 % m == 2 % m) out.push_back({{a, b}});
    }
  }
  return out;
}

std::vector<Diag> diagonals_b(int m, int n) {
  const int N = 2 * m * n + 2;
  const int half = N / 2;
  std::set<Diag> out;
  for (int a = 0; a < half; ++a) out.insert({{a, a + half}});
  for (int a = 0; a < N; ++a) {
    for (int b = a + 2; b < N; ++b) {
      if ((a == 0 && b == N - 1) || b - a == half) continue;
      const int outer = std::min(b - a, N - (b - a)) + 1;  // vertices away from the center
      if (outer % m != 2 % m) continue;
      Chord c{a, b};
      Chord mc{(a + half) % N, (b + half) % N};
      if (mc.first > mc.second) std::swap(mc.first, mc.second);
      Diag d{c, mc};
      std::sort(d.begin(), d.end());
      out.insert(d);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

struct Point {
  double x, y;
};

Point corner(int p, int polygon_size) {
  const double t = 2.0 * std::numbers::pi * p / polygon_size;
  return {std::cos(t), std::sin(t)};
}

double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

}  // namespace

bool segments_cross(Chord c1, Chord c2, int polygon_size) {
  if (c1.first == c2.first || c1.first == c2.second || c1.second == c2.first || c1.second == c2.second) {
    return false;
  }
  const Point a = corner(c1.first, polygon_size), b = corner(c1.second, polygon_size);
  const Point c = corner(c2.first, polygon_size), d = corner(c2.second, polygon_size);
  const double o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool diagonals_compatible(const Diag& d1, const Diag& d2, int polygon_size) {
  for (const Chord& x : d1) {
    for (const Chord& y : d2) {
      if (x != y && segments_cross(x, y, polygon_size)) return false;
    }
  }
  return d1 != d2;
}

std::vector<std::set<DiagFace>> all_faces(const std::vector<Diag>& diagonals, int polygon_size) {
  std::vector<std::set<DiagFace>> out(1);
  out[0].insert(DiagFace{});
  const std::size_t v = diagonals.size();
  std::vector<std::vector<bool>> ok(v, std::vector<bool>(v));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) ok[i][j] = i != j && diagonals_compatible(diagonals[i], diagonals[j], polygon_size);
  }
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    for (std::size_t k = from; k < v; ++k) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return ok[c][k]; })) continue;
      chosen.push_back(k);
      if (out.size() <= chosen.size()) out.resize(chosen.size() + 1);
      DiagFace face;
      for (std::size_t c : chosen) face.push_back(diagonals[c]);
      std::sort(face.begin(), face.end());
      out[chosen.size()].insert(face);
      grow(k + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
  constexpr std::int64_t p = 2147483647;
  auto inverse = [&](std::int64_t a) {
    std::int64_t result = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : rows) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::int64_t inv = inverse(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> reduced_betti(const std::vector<Facet>& facets) {
  std::vector<std::set<Facet>> faces;
  for (const Facet& f : facets) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Facet sub;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask >> j & 1) sub.push_back(f[j]);
      }
      if (faces.size() <= sub.size()) faces.resize(sub.size() + 1);
      faces[sub.size()].insert(sub);
    }
  }
  if (facets.empty()) return {};
  // boundary from size s to size s-1, s = 1..top
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s) {
    std::map<Facet, std::size_t> row_of;
    for (const Facet& g : faces[s - 1]) row_of.emplace(g, row_of.size());
    std::vector<std::vector<std::int64_t>> matrix(row_of.size(), std::vector<std::int64_t>(faces[s].size(), 0));
    std::size_t col = 0;
    for (const Facet& f : faces[s]) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        Facet g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
        matrix[row_of.at(g)][col] = (j % 2 == 0) ? 1 : -1;
      }
      ++col;
    }
    ranks[s] = rank_mod_p(std::move(matrix));
  }
  std::vector<std::size_t> betti;
  for (std::size_t s = 0; s < faces.size(); ++s) {
    betti.push_back(faces[s].size() - ranks[s] - ranks[s + 1]);
  }
  return betti;
}

namespace {

bool subset(const Facet& a, const Facet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Facet without(const Facet& f, std::size_t j) {
  Facet g = f;
  g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
  return g;
}

bool in_earlier(const std::vector<Facet>& order, std::size_t j, const Facet& g) {
  for (std::size_t i = 0; i < j; ++i) {
    if (subset(g, order[i])) return true;
  }
  return false;
}

}  // namespace

bool is_shelling(const std::vector<Facet>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<Facet> ridges;
    for (std::size_t k = 0; k < order[j].size(); ++k) {
      Facet r = without(order[j], k);
      if (in_earlier(order, j, r)) ridges.push_back(r);
    }
    if (ridges.empty()) return false;
    for (std::size_t i = 0; i < j; ++i) {
      Facet common;
      std::set_intersection(order[i].begin(), order[i].end(), order[j].begin(), order[j].end(),
                            std::back_inserter(common));
      if (!std::any_of(ridges.begin(), ridges.end(), [&](const Facet& r) { return subset(common, r); })) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> restriction_histogram(const std::vector<Facet>& order) {
  std::vector<std::uint64_t> h;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < order[j].size(); ++k) {
      if (in_earlier(order, j, without(order[j], k))) ++count;
    }
    if (h.size() <= count) h.resize(count + 1, 0);
    ++h[count];
  }
  return h;
}

namespace {

// k-binomial expansion h = C(a_k, k) + C(a_{k-1}, k-1) + ... by descending
// linear search, then the shifted sum.
Int upper_bound_next(Int h, int k) {
  Int result = 0;
  for (int j = k; j >= 1 && h > 0; --j) {
    int a = j;
    while (choose(a + 1, j) <= h) ++a;
    h -= choose(a, j);
    result += choose(a + 1, j + 1);
  }
  return result;
}

}  // namespace

bool macaulay_ok(const std::vector<Int>& h) {
  if (h.empty() || h[0] != 1) return false;
  if (std::any_of(h.begin(), h.end(), [](const Int& x) { return x < 0; })) return false;
  for (std::size_t k = 1; k + 1 < h.size(); ++k) {
    if (h[k + 1] > upper_bound_next(h[k], static_cast<int>(k))) return false;
  }
  return true;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> images(int top, int n, int i) {
  std::vector<std::vector<int>> label_lists;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == i) {
      label_lists.push_back(cur);
      return;
    }
    for (int a = lo; a <= top; ++a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(1);
  std::vector<std::vector<int>> flag_lists;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(i)) continue;
    std::vector<int> flags;
    for (int j = 0; j < n; ++j) flags.push_back(static_cast<int>(mask >> j & 1));
    flag_lists.push_back(flags);
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& a : label_lists) {
    for (const auto& e : flag_lists) out.emplace_back(a, e);
  }
  return out;
}

}  // namespace oracle
