// Prints every open Deutsch path of length 4 next to its Motzkin image.

#include <iostream>

#include "deutsch.hpp"

int main() {
  using namespace deutsch;
  for (const auto& w : enumerate_paths<Family::deutsch>({Family::deutsch, 4, std::nullopt, std::nullopt})) {
    const auto m = to_motzkin(w);
    std::cout << w.to_string() << "  ->  " << m.to_string() << "\n";
  }
}
