/* Copyright 2026 The dgflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Frozen sign tables for the component orders documented in forms.hpp.
// Derived by hand once; tests/exterior/basis_test.cpp re-derives every entry
// by enumerating permutations.

#include <array>
#include <cstddef>

namespace dgflow::exterior::basis {

struct SignedIndex
{
  int index = 0;
  int sign = 0; // 0 marks a vanishing product
};

// Basis elements as +/- a sorted wedge monomial.
struct Monomial
{
  std::array<int, 4> idx{};
  int sign = 1;
};

inline constexpr std::array<Monomial, 4> form1_monomials{{
  {{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1},
}};

inline constexpr std::array<Monomial, 6> form2_monomials{{
  {{0, 1}, 1},  // e01
  {{0, 2}, 1},  // e02
  {{0, 3}, 1},  // e03
  {{2, 3}, 1},  // e23
  {{1, 3}, -1}, // e31 = -e13
  {{1, 2}, 1},  // e12
}};

inline constexpr std::array<Monomial, 4> form3_monomials{{
  {{1, 2, 3}, 1}, // e123
  {{0, 2, 3}, 1}, // e023
  {{0, 1, 3}, 1}, // e013
  {{0, 1, 2}, 1}, // e012
}};

// e_a ^ (basis element I of degree 0..3) = sign * (basis element index of degree+1).
// ext0[a][0], ext1[a][I], ext2[a][I], ext3[a][I].

inline constexpr std::array<std::array<SignedIndex, 1>, 4> ext0{{
  {{{0, 1}}}, {{{1, 1}}}, {{{2, 1}}}, {{{3, 1}}},
}};

inline constexpr std::array<std::array<SignedIndex, 4>, 4> ext1{{
  // e0 ^ (e0, e1, e2, e3)
  {{{0, 0}, {0, 1}, {1, 1}, {2, 1}}},
  // e1 ^ (e0, e1, e2, e3)
  {{{0, -1}, {0, 0}, {5, 1}, {4, -1}}},
  // e2 ^ (e0, e1, e2, e3)
  {{{1, -1}, {5, -1}, {0, 0}, {3, 1}}},
  // e3 ^ (e0, e1, e2, e3)
  {{{2, -1}, {4, 1}, {3, -1}, {0, 0}}},
}};

inline constexpr std::array<std::array<SignedIndex, 6>, 4> ext2{{
  // e0 ^ (e01, e02, e03, e23, e31, e12)
  {{{0, 0}, {0, 0}, {0, 0}, {1, 1}, {2, -1}, {3, 1}}},
  // e1 ^ ...
  {{{0, 0}, {3, -1}, {2, -1}, {0, 1}, {0, 0}, {0, 0}}},
  // e2 ^ ...
  {{{3, 1}, {0, 0}, {1, -1}, {0, 0}, {0, 1}, {0, 0}}},
  // e3 ^ ...
  {{{2, 1}, {1, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 1}}},
}};

inline constexpr std::array<std::array<SignedIndex, 4>, 4> ext3{{
  {{{0, 1}, {0, 0}, {0, 0}, {0, 0}}},
  {{{0, 0}, {0, -1}, {0, 0}, {0, 0}}},
  {{{0, 0}, {0, 0}, {0, 1}, {0, 0}}},
  {{{0, 0}, {0, 0}, {0, 0}, {0, -1}}},
}};

// Top-degree pairings: alpha ^ beta = (sum_I pair[I] * alpha_I * beta_{partner[I]}) e0123.
inline constexpr std::array<int, 6> pair22_partner{3, 4, 5, 0, 1, 2};
inline constexpr std::array<int, 4> pair13_sign{1, -1, 1, -1}; // Form1 ^ Form3
inline constexpr std::array<int, 4> pair31_sign{-1, 1, -1, 1}; // Form3 ^ Form1

} // namespace dgflow::exterior::basis
