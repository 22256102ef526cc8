#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nlcox/coxeter_graph.hpp"
#include "nlcox/rational.hpp"
#include "nlcox/witness.hpp"

// Exact model of the infinite dihedral group acting on the real line marked
// at the integers. Generators are the reflections r (across 0) and
// s (across 1); t = sr is the translation by +2. Every element is t^p r^q,
// stored as the pair (p, q). All arithmetic is exact.
namespace nlcox::dinfty {

struct Element {
  std::int64_t p = 0;  // translation part, in units of 2 on the line
  bool q = false;      // true for orientation-reversing (reflection)

  friend constexpr bool operator==(Element a, Element b) {
    return a.p == b.p && a.q == b.q;
  }
  friend constexpr bool operator!=(Element a, Element b) { return !(a == b); }
};

constexpr Element identity() { return {0, false}; }
constexpr Element refl_r() { return {0, true}; }   // x -> -x
constexpr Element refl_s() { return {1, true}; }   // x -> 2 - x

// Group law, left factor applied last: compose(a, b) acts by a after b.
constexpr Element compose(Element a, Element b) {
  return {a.p + (a.q ? -b.p : b.p), a.q != b.q};
}

constexpr Element inverse(Element a) { return a.q ? a : Element{-a.p, false}; }

// e^k for any integer k, via the closed form (reflections are involutions,
// translations add).
constexpr Element power(Element e, std::int64_t k) {
  if (!e.q) return {e.p * k, false};
  return (k % 2 == 0) ? identity() : e;
}

// Folds a word over the alphabet {r, s}; empty word gives the identity.
// Throws UsageError on any other letter.
Element word_to_element(std::string_view rs_word);

// The isometry x -> (-1)^q x + 2p.
Rational act(Element e, const Rational& x);

enum class IsometryKind { Identity, EllipticReflection, LoxodromicTranslation };

struct IsometryType {
  IsometryKind kind = IsometryKind::Identity;
  // Fixed point for a reflection, translation length 2|p| for a translation,
  // zero for the identity.
  Rational datum;
};

IsometryType isometry_type(Element e);

const char* isometry_kind_name(IsometryKind k);

// Minimal-length word in r, s evaluating back to e ("" for the identity).
std::string normal_form_string(Element e);

// Image of a word of the Coxeter group under the witness map A -> r,
// B -> s, K -> identity, folded under the group law.
Element push_forward(const CoxeterGraph& g, const EpimorphismWitness& w,
                     const Word& word);

}  // namespace nlcox::dinfty
