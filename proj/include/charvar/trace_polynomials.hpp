#pragma once

#include <array>
#include <cstddef>

namespace charvar {

/// coeff * prod_i x_i^exps[i].
template <std::size_t N>
struct Monomial {
  int coeff;
  std::array<int, N> exps;
};

/// Defining polynomial of the rank-3 SL(2,C) character variety in the
/// coordinates t1..t7 = tr A1, tr A2, tr A3, tr A1A2, tr A1A3, tr A2A3,
/// tr A1A2A3.
inline constexpr std::array<Monomial<7>, 16> kHypersurfaceR{{
    {1, {2, 0, 0, 0, 0, 0, 0}},    // t1^2
    {-1, {1, 1, 0, 1, 0, 0, 0}},   // -t2 t4 t1
    {-1, {1, 0, 1, 0, 1, 0, 0}},   // -t3 t5 t1
    {1, {1, 1, 1, 0, 0, 0, 1}},    // t2 t3 t7 t1
    {-1, {1, 0, 0, 0, 0, 1, 1}},   // -t6 t7 t1
    {1, {0, 2, 0, 0, 0, 0, 0}},    // t2^2
    {1, {0, 0, 2, 0, 0, 0, 0}},    // t3^2
    {1, {0, 0, 0, 2, 0, 0, 0}},    // t4^2
    {1, {0, 0, 0, 0, 2, 0, 0}},    // t5^2
    {1, {0, 0, 0, 0, 0, 2, 0}},    // t6^2
    {1, {0, 0, 0, 0, 0, 0, 2}},    // t7^2
    {-1, {0, 1, 1, 0, 0, 1, 0}},   // -t2 t3 t6
    {1, {0, 0, 0, 1, 1, 1, 0}},    // t4 t5 t6
    {-1, {0, 0, 1, 1, 0, 0, 1}},   // -t3 t4 t7
    {-1, {0, 1, 0, 0, 1, 0, 1}},   // -t2 t5 t7
    {-4, {0, 0, 0, 0, 0, 0, 0}},   // -4
}};

/// Generator of the reducible locus of the rank-3 variety after eliminating
/// t3, t4, t7. Variables in order (t1, t2, t5, t6).
inline constexpr std::array<Monomial<4>, 19> kReducibleQuartic{{
    {1, {4, 0, 0, 0}},    // t1^4
    {-1, {3, 1, 1, 1}},   // -t2 t5 t6 t1^3
    {-2, {2, 2, 0, 0}},   // -2 t2^2 t1^2
    {1, {2, 2, 2, 0}},    // t2^2 t5^2 t1^2
    {-2, {2, 0, 2, 0}},   // -2 t5^2 t1^2
    {1, {2, 2, 0, 2}},    // t2^2 t6^2 t1^2
    {1, {2, 0, 2, 2}},    // t5^2 t6^2 t1^2
    {-2, {2, 0, 0, 2}},   // -2 t6^2 t1^2
    {-1, {1, 1, 1, 3}},   // -t2 t5 t6^3 t1
    {-1, {1, 1, 3, 1}},   // -t2 t5^3 t6 t1
    {-1, {1, 3, 1, 1}},   // -t2^3 t5 t6 t1
    {8, {1, 1, 1, 1}},    // 8 t2 t5 t6 t1
    {1, {0, 4, 0, 0}},    // t2^4
    {1, {0, 0, 4, 0}},    // t5^4
    {1, {0, 0, 0, 4}},    // t6^4
    {-2, {0, 2, 2, 0}},   // -2 t2^2 t5^2
    {-2, {0, 2, 0, 2}},   // -2 t2^2 t6^2
    {1, {0, 2, 2, 2}},    // t2^2 t5^2 t6^2
    {-2, {0, 0, 2, 2}},   // -2 t5^2 t6^2
}};

/// Evaluates a monomial table over any commutative ring type constructible
/// from int (double, std::complex<double>, exact rationals).
template <typename T, std::size_t N, std::size_t M>
T evaluate(const std::array<Monomial<N>, M>& table, const std::array<T, N>& x) {
  T total(0);
  for (const auto& term : table) {
    T value(term.coeff);
    for (std::size_t i = 0; i < N; ++i) {
      for (int e = 0; e < term.exps[i]; ++e) value = value * x[i];
    }
    total = total + value;
  }
  return total;
}

}  // namespace charvar
