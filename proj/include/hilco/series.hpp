#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilco/rational.hpp"

namespace hilco {

/// A truncated formal power series over Q, stored sparsely. Exponents at or
/// above `truncation` are unknown; kExact marks a fully known polynomial.
/// Invariants: terms sorted by exponent, no zero coefficients, all exponents
/// below truncation.
struct SeriesElement {
  static constexpr int kExact = std::numeric_limits<int>::max();

  std::vector<std::pair<int, Rat>> terms;
  int truncation = kExact;

  bool is_zero() const { return terms.empty(); }

  /// Smallest exponent with nonzero coefficient; nullopt for zero-mod-t^T.
  std::optional<int> valuation() const {
    if (terms.empty()) return std::nullopt;
    return terms.front().first;
  }

  const Rat& leading_coefficient() const { return terms.front().second; }

  bool operator==(const SeriesElement& other) const {
    return terms == other.terms && truncation == other.truncation;
  }
};

SeriesElement series_zero(int truncation = SeriesElement::kExact);
SeriesElement series_monomial(int exponent, Rat coeff = Rat(1));
SeriesElement series_from_terms(std::vector<std::pair<int, Rat>> terms,
                                int truncation = SeriesElement::kExact);

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_sub(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_scale(const SeriesElement& a, const Rat& c);
/// Multiplication by t^s (s >= 0).
SeriesElement series_shift(const SeriesElement& a, int s);
SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_truncate(const SeriesElement& a, int order);
/// Divides by the leading coefficient.
SeriesElement series_monic(const SeriesElement& a);

std::string series_to_string(const SeriesElement& a);

}  // namespace hilco
