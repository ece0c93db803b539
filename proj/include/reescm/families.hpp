#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reescm/instance.hpp"
#include "reescm/monomial_ideal.hpp"
#include "reescm/polynomial.hpp"

namespace reescm {

// E is not among the published families: det[z_2; x_1; y_2] on three
// columns, needed once min(t1, t2) >= 3 (s1 = s2 = 2).
enum class FamilyTag { MinorX, MinorY, G, F, FLK, U, W, WPV, V, VKW, H, ILKQ, IKW, E };

inline constexpr FamilyTag kAllTags[] = {
    FamilyTag::MinorX, FamilyTag::MinorY, FamilyTag::G,   FamilyTag::F,    FamilyTag::FLK,
    FamilyTag::U,      FamilyTag::W,      FamilyTag::WPV, FamilyTag::V,    FamilyTag::VKW,
    FamilyTag::H,      FamilyTag::ILKQ,   FamilyTag::IKW, FamilyTag::E};

std::string to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(const std::string& name);

// Readings of ambiguous passages. Every non-default choice is echoed in
// reports through assumption_flags().
struct FamilyOptions {
  // Second sum of U: literal runs k = j+1..m over rows 1..m minus p;
  // the default runs over the columns a_k > q and rows 1..s1 minus p.
  bool u_literal_second_sum = false;
  // Sign in front of the y * f summands of V, multiplied by the parity of
  // the split {e, c} of the b's.
  int v_sign = -1;
  // H: corrections over the columns above q (default) or c = k..j as printed.
  bool h_literal_range = false;
};

std::vector<std::string> assumption_flags(const Instance& inst, const FamilyOptions& opts);

// True when the W, V, H, I and E families have an established form for the
// instance; otherwise they are enumerated empty.
bool upper_families_established(const Instance& inst);

template <class K>
struct FamilyElement {
  FamilyTag tag;
  std::vector<int> index;
  Polynomial<K> value;
};

// Index tuples:
//   MinorX, MinorY  increasing columns
//   G               (i, j, l, k), (i, j) before (l, k) row-major
//   F               increasing columns, s1 of them
//   FLK             (l, k, columns...), s1 + k - 1 increasing columns
//   U               (p, q, columns...), s1 increasing columns, some <= q
//   W               (q, a, b1, b2) with b2 < a <= b1
//   V               (q, b2, b1) with q < b2 <= t1, b2 < b1 <= t2
//   H               (q, c1, c2, c3) with c1 < c2 <= q < c3
//   E               (c1, c2, c3)
template <class K>
std::vector<FamilyElement<K>> family_generators(const Instance& inst, FamilyTag tag,
                                                const RingPtr& ring, const K& field = K{},
                                                const FamilyOptions& opts = {});

// One U element; unlike the enumeration, p = s1 is allowed.
template <class K>
Polynomial<K> u_element(const Instance& inst, int p, int q, const std::vector<int>& cols,
                        const RingPtr& ring, const K& field = K{}, const FamilyOptions& opts = {});

template <class K>
std::vector<FamilyElement<K>> candidate_basis(const Instance& inst, const RingPtr& ring,
                                              const K& field = K{},
                                              const FamilyOptions& opts = {});

// Monomial families of the initial ideal, numbered 1..12, and 13 for E.
std::vector<Monomial> initial_family(const Instance& inst, int number, const RingPtr& ring);
MonomialIdeal initial_families(const Instance& inst, const RingPtr& ring);
std::string family_name(int number);

}  // namespace reescm
