#include "hilco/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hilco/errors.hpp"

namespace hilco {

namespace {

int add_truncation(int a, int b) {
  if (a == SeriesElement::kExact || b == SeriesElement::kExact)
    return std::min(a, b);
  return std::min(a, b);
}

void drop_above(SeriesElement& f) {
  if (f.truncation == SeriesElement::kExact) return;
  f.terms.erase(std::remove_if(f.terms.begin(), f.terms.end(),
                               [&](const auto& t) { return t.first >= f.truncation; }),
                f.terms.end());
}

}  // namespace

SeriesElement series_zero(int truncation) {
  SeriesElement f;
  f.truncation = truncation;
  return f;
}

SeriesElement series_monomial(int exponent, Rat coeff) {
  SeriesElement f;
  if (coeff != 0) f.terms.emplace_back(exponent, std::move(coeff));
  return f;
}

SeriesElement series_from_terms(std::vector<std::pair<int, Rat>> terms, int truncation) {
  std::map<int, Rat> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  SeriesElement f;
  f.truncation = truncation;
  for (auto& [e, c] : acc) {
    if (c != 0) f.terms.emplace_back(e, std::move(c));
  }
  drop_above(f);
  return f;
}

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b) {
  SeriesElement out;
  out.truncation = add_truncation(a.truncation, b.truncation);
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Rat c = a.terms[i].second + b.terms[j].second;
      if (c != 0) out.terms.emplace_back(a.terms[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  drop_above(out);
  return out;
}

SeriesElement series_sub(const SeriesElement& a, const SeriesElement& b) {
  return series_add(a, series_scale(b, Rat(-1)));
}

SeriesElement series_scale(const SeriesElement& a, const Rat& c) {
  if (c == 0) return series_zero(a.truncation);
  SeriesElement out = a;
  for (auto& [e, v] : out.terms) v *= c;
  return out;
}

SeriesElement series_shift(const SeriesElement& a, int s) {
  SeriesElement out = a;
  for (auto& [e, v] : out.terms) e += s;
  if (out.truncation != SeriesElement::kExact) out.truncation += s;
  return out;
}

SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b) {
  // Truncation of the product: unknown tail of one factor times the lowest
  // term of the other.
  long long trunc = SeriesElement::kExact;
  if (a.truncation != SeriesElement::kExact) {
    long long vb = b.terms.empty() ? 0 : b.terms.front().first;
    trunc = std::min(trunc, static_cast<long long>(a.truncation) + vb);
  }
  if (b.truncation != SeriesElement::kExact) {
    long long va = a.terms.empty() ? 0 : a.terms.front().first;
    trunc = std::min(trunc, static_cast<long long>(b.truncation) + va);
  }
  std::map<int, Rat> acc;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      const long long e = static_cast<long long>(ea) + eb;
      if (e >= trunc) continue;
      acc[static_cast<int>(e)] += ca * cb;
    }
  }
  SeriesElement out;
  out.truncation = static_cast<int>(std::min<long long>(trunc, SeriesElement::kExact));
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms.emplace_back(e, std::move(c));
  }
  return out;
}

SeriesElement series_truncate(const SeriesElement& a, int order) {
  SeriesElement out = a;
  out.truncation = std::min(out.truncation, order);
  drop_above(out);
  return out;
}

SeriesElement series_monic(const SeriesElement& a) {
  if (a.is_zero()) throw ZeroModule("cannot normalize the zero element");
  const Rat lead = a.leading_coefficient();
  SeriesElement out = a;
  for (auto& [e, c] : out.terms) c /= lead;
  return out;
}

std::string series_to_string(const SeriesElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || e == 0) os << rat_to_string(c);
    if (e > 0) {
      if (c != 1) os << "*";
      os << "t^" << e;
    }
  }
  return os.str();
}

}  // namespace hilco
