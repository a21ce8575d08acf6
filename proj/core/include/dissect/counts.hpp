#pragma once

// Closed-form face counts, f/h-vector transforms, Narayana numbers and the
// Macaulay M-sequence test, all in exact integer arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dissect/params.hpp"

namespace dissect {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::int64_t n, std::int64_t k);

// Divides and throws CountDomainError unless the remainder is zero.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator, const char* context);

// (f_{-1}, f_0, ..., f_{d-1}); entries[i] counts faces with i vertices.
struct FVector {
  std::vector<BigInt> entries;

  int d() const noexcept { return static_cast<int>(entries.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

// (h_0, ..., h_d).
struct HVector {
  std::vector<BigInt> entries;

  int d() const noexcept { return static_cast<int>(entries.size()) - 1; }
  friend bool operator==(const HVector&, const HVector&) = default;
};

// Number of m-divisible dissections of the (mn+2)-gon with i diagonals,
// (1/n) C(mn+i+1, i) C(n, i+1), for 0 <= i <= n-1.
BigInt f_a(int m, int n, int i);
// Faces of the type-B complex with i diagonals, C(mn+i, i) C(n, i), 0 <= i <= n.
BigInt f_b(int m, int n, int i);
FVector closed_form_f(const ComplexParams& params);

HVector h_from_f(const FVector& f);
FVector f_from_h(const HVector& h);

// Generalized Narayana number N^m_W(i).
BigInt narayana(Family family, int m, int n, int i);
HVector narayana_vector(const ComplexParams& params);

// -1 + f_0 - f_1 + ... + (-1)^{d-1} f_{d-1}.
BigInt reduced_euler(const FVector& f);

// Type-B faces with i diagonals that contain a diameter, C(mn+i, i) C(n-1, i-1).
BigInt diameter_count(int m, int n, int i);

// Greedy k-th Macaulay representation h = C(a_k, k) + C(a_{k-1}, k-1) + ...
// with a_k > a_{k-1} > ... >= j >= 1. Returns the tops (a_k, a_{k-1}, ...).
std::vector<std::int64_t> macaulay_representation(const BigInt& h, int k);
// h^<k>: each C(a_i, i) replaced by C(a_i + 1, i + 1).
BigInt macaulay_pseudo_power(const BigInt& h, int k);

bool is_m_sequence(const std::vector<BigInt>& h);
inline bool is_m_sequence(const HVector& h) { return is_m_sequence(h.entries); }

std::string to_string(const std::vector<BigInt>& values);

}  // namespace dissect
