// Builds a small codebook, pools two codewords into a composition mixture,
// and decodes the mixture back to the exact pair.

#include <iostream>
#include <vector>

#include "hmc/codec.hpp"

int main() {
  const hmc::Codebook cb = hmc::build_codebook(4, 2);
  std::cout << "codebook: " << cb.size() << " codewords of length "
            << cb.layout.N << "\n";

  const hmc::BinaryString& a = hmc::encode(cb, 3);
  const hmc::BinaryString& b = hmc::encode(cb, 11);
  std::cout << "codeword 3:  " << a.str() << "\n";
  std::cout << "codeword 11: " << b.str() << "\n";

  // The decoder sees only the unordered prefix/suffix composition readouts.
  const hmc::MixtureDocument doc = hmc::mix({a, b}, cb.h);
  std::cout << "mixture: " << doc.entries.total() << " compositions, e.g.";
  int shown = 0;
  for (const auto& [comp, count] : doc.entries.entries()) {
    if (shown++ == 4) break;
    std::cout << " [" << comp.str() << " x" << count << "]";
  }
  std::cout << " ...\n";

  const hmc::DecodeResult result = hmc::decode(cb, doc);
  std::cout << "decoded columns:";
  for (auto i : result.indices) std::cout << " " << i;
  std::cout << "\n";
  return result.indices == std::vector<std::size_t>{3, 11} ? 0 : 1;
}
