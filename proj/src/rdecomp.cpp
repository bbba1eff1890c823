#include "ratcensus/rdecomp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ratcensus/errors.hpp"

namespace ratcensus {

namespace {

// Weak compositions of `total` into `parts` slots, lexicographically ascending.
void for_each_composition(int total, int parts, const auto& visit) {
  std::vector<int> slots(parts, 0);
  const auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      slots[index] = remaining;
      visit(slots);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      slots[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(slots);
    return;
  }
  recurse(recurse, 0, total);
}

bool is_palindrome(const std::vector<int>& v) {
  return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin());
}

}  // namespace

int RTuple::insertion_total() const noexcept {
  return std::accumulate(insertions.begin(), insertions.end(), 0);
}

int RTuple::free_total() const noexcept { return std::accumulate(free.begin(), free.end(), 0); }

void validate(const RTuple& t) {
  if (t.j < 1) throw InputError("template index j must be positive");
  if (static_cast<int>(t.insertions.size()) != t.template_mediums()) {
    throw InputError("insertion vector must have one slot per template medium circle");
  }
  if (std::any_of(t.insertions.begin(), t.insertions.end(), [](int x) { return x < 0; }) ||
      std::any_of(t.free.begin(), t.free.end(), [](int x) { return x < 0; })) {
    throw InputError("tuple entries must be non-negative");
  }
  if (static_cast<int>(t.free.size()) != t.final_mediums()) {
    throw InputError("free vector must have one slot per final medium circle");
  }
}

std::vector<RTuple> enumerate_tuples(int n, int s) {
  std::vector<RTuple> out;
  if (n < 2 || s < 2) return out;
  const RType rtype = s % 2 == 1 ? RType::I : RType::III;
  for (int j = 1;; ++j) {
    const int q = rtype == RType::I ? 2 * j + 1 : 2 * j;
    if (q > s || s + q - 2 > n) break;
    const int inserts = (s - q) / 2;
    const int free_crossings = n - s - q + 2;
    for_each_composition(inserts, q - 1, [&](const std::vector<int>& ins) {
      for_each_composition(free_crossings, q - 1 + inserts, [&](const std::vector<int>& fr) {
        out.push_back(RTuple{rtype, j, ins, fr});
      });
    });
  }
  return out;
}

BigInt oracle_count(int n, int s) { return BigInt(enumerate_tuples(n, s).size()); }

RTuple reverse_tuple(const RTuple& t) {
  RTuple r = t;
  std::reverse(r.insertions.begin(), r.insertions.end());
  std::reverse(r.free.begin(), r.free.end());
  return r;
}

bool is_symmetric(const RTuple& t) {
  if (t.rtype == RType::I) return false;
  return is_palindrome(t.insertions) && is_palindrome(t.free);
}

BigInt oracle_symmetric_count(int n, int s) {
  const auto tuples = enumerate_tuples(n, s);
  return BigInt(std::count_if(tuples.begin(), tuples.end(), is_symmetric));
}

RTuple apply_insertion(const RTuple& t, int slot) {
  validate(t);
  if (slot < 0 || slot >= t.template_mediums()) {
    throw InputError("insertion slot " + std::to_string(slot) + " out of range");
  }
  RTuple r = t;
  int block_end = 0;
  for (int i = 0; i <= slot; ++i) block_end += t.insertions[i] + 1;
  // the new medium circle joins the right end of the expanded block
  r.free.insert(r.free.begin() + block_end, 0);
  r.insertions[slot] += 1;
  return r;
}

RTuple apply_addition(const RTuple& t, int medium) {
  validate(t);
  if (medium < 0 || medium >= t.final_mediums()) {
    throw InputError("medium index " + std::to_string(medium) + " out of range");
  }
  RTuple r = t;
  r.free[medium] += 1;
  return r;
}

RTuple reduce_to_template(const RTuple& t) {
  validate(t);
  return RTuple{t.rtype, t.j, std::vector<int>(t.template_mediums(), 0),
                std::vector<int>(t.template_mediums(), 0)};
}

LinkKind kind_of(int n, int s) noexcept { return (n - s) % 2 != 0 ? LinkKind::knot : LinkKind::link; }

int genus_of(int n, int s) noexcept {
  const int mu = kind_of(n, s) == LinkKind::knot ? 1 : 2;
  return (n - s - mu + 2) / 2;
}

std::map<std::pair<LinkKind, int>, BigInt> oracle_genus_distribution(int n) {
  std::map<std::pair<LinkKind, int>, BigInt> out;
  for (int s = 2; s <= n; ++s) {
    const BigInt total = oracle_count(n, s) + oracle_symmetric_count(n, s);
    if (total == 0) continue;
    out[{kind_of(n, s), genus_of(n, s)}] += total;
  }
  return out;
}

}  // namespace ratcensus
