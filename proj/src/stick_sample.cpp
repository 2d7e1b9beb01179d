#include "brokenstick/stick_sample.hpp"

#include <algorithm>
#include <cmath>

#include "brokenstick/error.hpp"

namespace brokenstick {

StickSample::StickSample(std::vector<double> pieces) : pieces_(std::move(pieces)), sorted_(pieces_) {
  std::sort(sorted_.begin(), sorted_.end());
}

StickSample StickSample::from_pieces(std::vector<double> pieces) {
  if (pieces.empty()) {
    throw InvalidDomain("a stick sample needs at least one piece");
  }
  double total = 0.0;
  for (double x : pieces) {
    if (!(x > 0.0)) {
      throw InvalidDomain("stick pieces must be positive");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidDomain("stick pieces must sum to 1");
  }
  return StickSample(std::move(pieces));
}

} // namespace brokenstick
