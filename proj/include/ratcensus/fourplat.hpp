#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratcensus/contfrac.hpp"

namespace ratcensus {

// Strand positions are numbered 0..3 from top to bottom. Position 3 is the
// long bottom arc and never crosses anything. Odd-indexed twist blocks
// (a1, a3, ...) sit on positions (1, 2), even-indexed ones on (0, 1). Plat
// caps join (0, 1) and (2, 3) at both ends.

/// How the second component (if any) is oriented. The component through the
/// long arc is always oriented right-to-left along that arc.
enum class SecondComponent { forward, reversed };

/// Which diagonal of a crossing passes over. Descending runs from the upper
/// left port to the lower right one.
enum class OverStrand : std::uint8_t { descending, ascending };

/// Local port numbering inside a crossing.
enum Port : int { upper_left = 0, lower_left = 1, upper_right = 2, lower_right = 3 };

struct Crossing {
  int block;   // 0-based twist block index
  int upper;   // upper strand position of the twisted pair
  OverStrand over;
};

/// Oriented 4-plat at port level. Port id = 4 * crossing + Port. Each port is
/// joined by an arc to exactly one other port; a strand runs straight through
/// a crossing from port k to port 3 - k.
class FourPlatDiagram {
 public:
  FourPlatDiagram(CFVector vector, std::vector<Crossing> crossings, std::vector<int> arc_partner,
                  std::vector<bool> incoming);

  const CFVector& vector() const noexcept { return vector_; }
  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int port_count() const noexcept { return 4 * crossing_count(); }

  int arc_partner(int port) const { return arc_partner_.at(port); }
  bool incoming(int port) const { return incoming_.at(port); }

  /// True when the port lies on the over strand of its crossing.
  bool is_over(int port) const;

 private:
  CFVector vector_;
  std::vector<Crossing> crossings_;
  std::vector<int> arc_partner_;
  std::vector<bool> incoming_;
};

struct SeifertData {
  int c = 0;
  int s = 0;
  int mu = 0;
  std::vector<int> signs;  // one per crossing, +1 or -1
  int genus = 0;
};

enum class PlatType { I, II, III, IV };

struct SignedVectorType {
  std::vector<std::int64_t> signed_entries;
  PlatType type;
};

FourPlatDiagram build(const CFVector& v, SecondComponent orientation = SecondComponent::forward);

/// Number of closed curves, by strand traversal.
int component_count(const FourPlatDiagram& d);

/// Walks every strand and checks that consecutive crossings alternate over/under.
bool is_alternating(const FourPlatDiagram& d);

/// Crossing sign from the oriented strand directions (right-handed = +1).
int crossing_sign(const FourPlatDiagram& d, int crossing);

SeifertData seifert_decompose(const FourPlatDiagram& d);

PlatType classify(std::span<const std::int64_t> signed_entries);
SignedVectorType signed_vector_and_type(const FourPlatDiagram& d);

/// Half-turn about the vertical axis in the projection plane, then reverse
/// every component.
FourPlatDiagram reversal(const FourPlatDiagram& d);

/// The same operation seen on signed vectors: reverse the order, keep signs.
SignedVectorType reversal(const SignedVectorType& v);

std::string to_string(PlatType t);

}  // namespace ratcensus
