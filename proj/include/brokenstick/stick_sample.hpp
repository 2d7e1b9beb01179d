#pragma once

#include <span>
#include <vector>

namespace brokenstick {

/// One random partition of the unit stick: piece lengths in draw order
/// plus their ascending order statistics.
class StickSample {
public:
  /// Validates that every piece is positive and the pieces sum to 1
  /// within 1e-12; throws InvalidDomain otherwise.
  static StickSample from_pieces(std::vector<double> pieces);

  std::span<const double> pieces() const { return pieces_; }
  std::span<const double> sorted() const { return sorted_; }
  int size() const { return static_cast<int>(pieces_.size()); }

private:
  explicit StickSample(std::vector<double> pieces);

  std::vector<double> pieces_;
  std::vector<double> sorted_;
};

} // namespace brokenstick
