#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "ratcensus/bigint.hpp"

namespace ratcensus {

enum class RType { I, III };

/// Canonical encoding of a type I or type III R-decomposition.
///
/// The template has q = 2j + 1 (type I) or q = 2j (type III) Seifert circles:
/// the large circle plus q - 1 medium circles, each sharing two essential
/// crossings with the large one. `insertions[i]` counts the small/medium
/// circle pairs inserted at template medium i, which expands it into a block
/// of insertions[i] + 1 final medium circles, laid out left to right. `free[k]`
/// counts the free crossings added between final medium k and the large circle.
struct RTuple {
  RType rtype = RType::III;
  int j = 1;
  std::vector<int> insertions;
  std::vector<int> free;

  int template_circles() const noexcept { return rtype == RType::I ? 2 * j + 1 : 2 * j; }
  int template_mediums() const noexcept { return template_circles() - 1; }
  int essential_crossings() const noexcept { return 2 * template_circles() - 2; }
  int insertion_total() const noexcept;
  int free_total() const noexcept;
  int final_mediums() const noexcept { return template_mediums() + insertion_total(); }
  int seifert_circles() const noexcept { return template_circles() + 2 * insertion_total(); }
  int crossings() const noexcept {
    return essential_crossings() + 2 * insertion_total() + free_total();
  }

  friend bool operator==(const RTuple&, const RTuple&) = default;
  friend auto operator<=>(const RTuple&, const RTuple&) = default;
};

/// Throws InputError unless slot lengths, entry signs and the type/parity
/// relation all hold.
void validate(const RTuple& t);

/// All tuples with n crossings and s Seifert circles, ordered
/// lexicographically by (j, insertions, free). Type follows the parity of s.
std::vector<RTuple> enumerate_tuples(int n, int s);

BigInt oracle_count(int n, int s);

RTuple reverse_tuple(const RTuple& t);
bool is_symmetric(const RTuple& t);
BigInt oracle_symmetric_count(int n, int s);

RTuple apply_insertion(const RTuple& t, int slot);
RTuple apply_addition(const RTuple& t, int medium);
RTuple reduce_to_template(const RTuple& t);

enum class LinkKind { knot, link };

/// (kind, genus) -> number of oriented rational knots or links with n crossings,
/// counted from the enumerated tuples.
std::map<std::pair<LinkKind, int>, BigInt> oracle_genus_distribution(int n);

/// Knot iff n - s is odd.
LinkKind kind_of(int n, int s) noexcept;
int genus_of(int n, int s) noexcept;

}  // namespace ratcensus
