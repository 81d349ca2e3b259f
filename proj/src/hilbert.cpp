#include "hilco/hilbert.hpp"

#include <algorithm>
#include <string>

#include "hilco/errors.hpp"
#include "hilco/rational.hpp"

namespace hilco {

long long hilbert_function(PowerCache& chain, int n) {
  return length_quotient(chain.at(n), chain.at(n + 1));
}

long long hilbert_samuel(PowerCache& chain, int n) {
  return length_quotient(chain.at(0), chain.at(n + 1));
}

long long hilbert_coefficient(const std::vector<long long>& Q, int i) {
  long long out = 0;
  for (size_t j = 0; j < Q.size(); ++j) {
    out += binom(static_cast<long long>(j), i) * Q[j];
  }
  return out;
}

HilbertData hilbert_numerator(PowerCache& chain, long long b, int n_max) {
  const long long e0 = chain.ideal().min_valuation();
  const int window = static_cast<int>(std::max<long long>(4, b + 2));
  // H must be constant from e0 - b on (postulation bound); anything later is
  // an engine defect rather than slow stabilization.
  const int cap = std::min<long long>(n_max, e0 - b + 2 + window);

  std::vector<long long> H;
  int stable_run = 0;
  int n = 0;
  for (; n <= cap; ++n) {
    H.push_back(hilbert_function(chain, n));
    if (H.back() == e0) {
      if (++stable_run >= window) break;
    } else {
      stable_run = 0;
    }
  }
  if (stable_run < window) {
    throw NonStabilizing("Hilbert function not constant by n = " + std::to_string(cap));
  }

  int pn = 0;
  for (int i = static_cast<int>(H.size()) - 1; i >= 0; --i) {
    if (H[static_cast<size_t>(i)] != e0) {
      pn = i + 1;
      break;
    }
  }

  HilbertData out;
  out.d = 1;
  out.H = H;
  out.pn = pn;
  out.Q.resize(static_cast<size_t>(pn) + 1);
  for (int j = 0; j <= pn; ++j) {
    const long long prev = j == 0 ? 0 : H[static_cast<size_t>(j - 1)];
    out.Q[static_cast<size_t>(j)] = H[static_cast<size_t>(j)] - prev;
  }
  out.e = {hilbert_coefficient(out.Q, 0), hilbert_coefficient(out.Q, 1),
           hilbert_coefficient(out.Q, 2)};
  return out;
}

HilbertData lift_hilbert(const HilbertData& data, int k) {
  HilbertData out = data;
  out.d += k;
  out.pn -= k;
  for (int step = 0; step < k; ++step) {
    long long acc = 0;
    for (auto& h : out.H) {
      acc += h;
      h = acc;
    }
  }
  return out;
}

}  // namespace hilco
