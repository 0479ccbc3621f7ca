#pragma once

// Ordinals below w^3 as triples (a, b, c) = w^2*a + w*b + c.

#include <compare>
#include <cstdint>
#include <string>

#include "longhom/ordinal.hpp"

namespace oracle {

struct Triple {
  std::uint64_t a = 0, b = 0, c = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline Triple add(const Triple& x, const Triple& y) {
  if (y.a > 0) return {x.a + y.a, y.b, y.c};
  if (y.b > 0) return {x.a, x.b + y.b, y.c};
  return {x.a, x.b, x.c + y.c};
}

enum class Kind { Zero, Successor, Limit };

inline Kind classify(const Triple& x) {
  if (x.c > 0) return Kind::Successor;
  if (x.a == 0 && x.b == 0) return Kind::Zero;
  return Kind::Limit;
}

inline longhom::Ordinal to_ordinal(const Triple& x) {
  using longhom::Ordinal;
  std::vector<longhom::CnfTerm> terms;
  if (x.a) terms.push_back({Ordinal::finite(2), x.a});
  if (x.b) terms.push_back({Ordinal::finite(1), x.b});
  if (x.c) terms.push_back({Ordinal::finite(0), x.c});
  return Ordinal::from_terms(std::move(terms));
}

// Written out by hand, independent of the library renderer.
inline std::string render(const Triple& x) {
  std::string out;
  auto term = [&](std::uint64_t coeff, const std::string& base) {
    if (!coeff) return;
    if (!out.empty()) out += "+";
    if (base.empty()) {
      out += std::to_string(coeff);
      return;
    }
    out += base;
    if (coeff > 1) out += "*" + std::to_string(coeff);
  };
  term(x.a, "w^2");
  term(x.b, "w");
  term(x.c, "");
  return out.empty() ? "0" : out;
}

}  // namespace oracle
