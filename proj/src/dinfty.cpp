#include "nlcox/dinfty.hpp"

#include <cstdlib>

namespace nlcox::dinfty {

Element word_to_element(std::string_view rs_word) {
  Element acc = identity();
  for (char c : rs_word) {
    if (c == ' ') continue;
    if (c == 'r')
      acc = compose(acc, refl_r());
    else if (c == 's')
      acc = compose(acc, refl_s());
    else
      throw UsageError(std::string("letter '") + c + "' is not in {r, s}");
  }
  return acc;
}

Rational act(Element e, const Rational& x) {
  const Rational flipped = e.q ? -x : x;
  return flipped + Rational(2 * e.p);
}

IsometryType isometry_type(Element e) {
  if (e.q) {
    // Fixed point of x -> -x + 2p is x = p.
    return {IsometryKind::EllipticReflection, Rational(e.p)};
  }
  if (e.p == 0) return {IsometryKind::Identity, Rational(0)};
  return {IsometryKind::LoxodromicTranslation, Rational(2 * std::abs(e.p))};
}

const char* isometry_kind_name(IsometryKind k) {
  switch (k) {
    case IsometryKind::Identity: return "IDENTITY";
    case IsometryKind::EllipticReflection: return "ELLIPTIC_REFLECTION";
    case IsometryKind::LoxodromicTranslation: return "LOXODROMIC_TRANSLATION";
  }
  return "?";
}

std::string normal_form_string(Element e) {
  std::string out;
  auto repeat = [&out](std::string_view block, std::int64_t times) {
    for (std::int64_t k = 0; k < times; ++k) out += block;
  };
  if (!e.q) {
    if (e.p >= 0)
      repeat("sr", e.p);
    else
      repeat("rs", -e.p);
  } else if (e.p <= 0) {
    repeat("rs", -e.p);
    out += 'r';
  } else {
    repeat("sr", e.p - 1);
    out += 's';
  }
  return out;
}

Element push_forward(const CoxeterGraph& g, const EpimorphismWitness& w,
                     const Word& word) {
  check_word(g, word);
  const std::vector<char> roles = witness_roles(g, w);
  Element acc = identity();
  for (int letter : word) {
    switch (roles[static_cast<std::size_t>(letter)]) {
      case 0: acc = compose(acc, refl_r()); break;
      case 1: acc = compose(acc, refl_s()); break;
      default: break;  // K letters map to the identity
    }
  }
  return acc;
}

}  // namespace nlcox::dinfty
