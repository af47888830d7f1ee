// Closed Deutsch paths three ways: trinomial closed form, series expansion
// of (1+v+v^2)/(1+v), and the transfer-matrix count.

#include <iostream>

#include "deutsch.hpp"

int main() {
  using namespace deutsch;
  const std::size_t order = 15;
  const SeriesZ s = formula_series({FormulaId::Kind::phi0_limit}, order);
  for (std::size_t n = 0; n <= order; ++n) {
    const BigInt dp = count_dp({Family::deutsch, n, 0, std::nullopt});
    std::cout << n << "\t" << coeff_closed(n) << "\t" << to_string(s[n]) << "\t" << dp << "\n";
  }
}
