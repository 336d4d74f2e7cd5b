#pragma once

#include <string_view>

#include "weyl/parse.hpp"
#include "weyl/random.hpp"

namespace weyl::test {

inline WeylElement W(std::string_view s) { return parse_element(s); }
inline UniPoly U(std::string_view s) { return parse_unipoly(s); }

inline CommPoly C(std::string_view s) {
  const WeylElement w = parse_element(s);
  CommPoly out;
  for (const auto& [e, c] : w.terms()) out.add_term(e, c);
  return out;
}

inline Rng rng_for(std::uint64_t suite, std::uint64_t index) { return Rng(derive_seed(20261015, suite, index)); }

}  // namespace weyl::test
