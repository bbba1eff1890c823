#include "ratcensus/fourplat.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ratcensus/errors.hpp"

namespace ratcensus {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }

  int classes() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) count += find(i) == i;
    return count;
  }

  std::vector<int> parent;
};

constexpr int through(int port) { return 4 * (port / 4) + (3 - port % 4); }

struct Vec2 {
  int x;
  int y;
};

// y grows upward, so the upper ports have y = +1.
constexpr std::array<Vec2, 4> kPortPosition{{{-1, 1}, {-1, -1}, {1, 1}, {1, -1}}};

Vec2 strand_direction(const FourPlatDiagram& d, int port) {
  const int entry = d.incoming(port) ? port : through(port);
  const Vec2 from = kPortPosition[entry % 4];
  const Vec2 to = kPortPosition[through(entry) % 4];
  return {to.x - from.x, to.y - from.y};
}

std::vector<int> link_arcs(int crossing_count, const std::vector<Crossing>& crossings) {
  const int ports = 4 * crossing_count;
  const auto left_end = [ports](int pos) { return ports + pos; };
  const auto right_end = [ports](int pos) { return ports + 4 + pos; };

  std::vector<std::vector<int>> adj(ports + 8);
  const auto join = [&adj](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  // (left port, right port) of every crossing met along each position line
  std::array<std::vector<std::pair<int, int>>, 4> along;
  for (int ci = 0; ci < crossing_count; ++ci) {
    const int u = crossings[ci].upper;
    along[u].emplace_back(4 * ci + upper_left, 4 * ci + upper_right);
    along[u + 1].emplace_back(4 * ci + lower_left, 4 * ci + lower_right);
  }
  for (int pos = 0; pos < 4; ++pos) {
    const auto& seq = along[pos];
    if (seq.empty()) {
      join(left_end(pos), right_end(pos));
      continue;
    }
    join(left_end(pos), seq.front().first);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) join(seq[i].second, seq[i + 1].first);
    join(seq.back().second, right_end(pos));
  }
  join(left_end(0), left_end(1));
  join(left_end(2), left_end(3));
  join(right_end(0), right_end(1));
  join(right_end(2), right_end(3));

  std::vector<int> partner(ports);
  for (int p = 0; p < ports; ++p) {
    int prev = p;
    int cur = adj[p].at(0);
    while (cur >= ports) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    partner[p] = cur;
  }
  return partner;
}

}  // namespace

FourPlatDiagram::FourPlatDiagram(CFVector vector, std::vector<Crossing> crossings,
                                 std::vector<int> arc_partner, std::vector<bool> incoming)
    : vector_(std::move(vector)),
      crossings_(std::move(crossings)),
      arc_partner_(std::move(arc_partner)),
      incoming_(std::move(incoming)) {
  const auto ports = static_cast<std::size_t>(port_count());
  if (arc_partner_.size() != ports || incoming_.size() != ports) {
    throw ConsistencyError("port tables do not match the crossing count");
  }
  if (crossing_count() != crossing_number(vector_)) {
    throw ConsistencyError("crossing count differs from the vector's entry sum");
  }
}

bool FourPlatDiagram::is_over(int port) const {
  const int local = port % 4;
  const bool on_descending = local == upper_left || local == lower_right;
  return on_descending == (crossings_.at(port / 4).over == OverStrand::descending);
}

FourPlatDiagram build(const CFVector& v, SecondComponent orientation) {
  std::vector<Crossing> crossings;
  const auto entries = v.entries();
  for (std::size_t b = 0; b < entries.size(); ++b) {
    const bool odd_block = b % 2 == 0;
    // The first strand entering block a1 from the long arc side goes under.
    const Crossing cr{static_cast<int>(b), odd_block ? 1 : 0,
                      odd_block ? OverStrand::descending : OverStrand::ascending};
    crossings.insert(crossings.end(), static_cast<std::size_t>(entries[b]), cr);
  }
  const int count = static_cast<int>(crossings.size());
  std::vector<int> partner = link_arcs(count, crossings);

  std::vector<bool> incoming(4 * count, false);
  std::vector<bool> seen(4 * count, false);
  const auto walk = [&](int entry) {
    int p = entry;
    do {
      const int exit = through(p);
      seen[p] = seen[exit] = true;
      incoming[p] = true;
      incoming[exit] = false;
      p = partner[exit];
    } while (p != entry);
  };

  // Along the long arc the curve runs right to left, turns through the left
  // cap and enters crossing 0 at its lower left port.
  walk(lower_left);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    if (seen[upper_left]) throw ConsistencyError("second component misses the left (0,1) cap");
    walk(orientation == SecondComponent::forward ? upper_left : lower_right);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw ConsistencyError("4-plat closure produced more than two components");
    }
  }
  return FourPlatDiagram(v, std::move(crossings), std::move(partner), std::move(incoming));
}

int component_count(const FourPlatDiagram& d) {
  DisjointSets sets(d.port_count());
  for (int p = 0; p < d.port_count(); ++p) {
    sets.unite(p, d.arc_partner(p));
    sets.unite(p, through(p));
  }
  return sets.classes();
}

bool is_alternating(const FourPlatDiagram& d) {
  std::vector<bool> seen(d.port_count(), false);
  for (int start = 0; start < d.port_count(); ++start) {
    if (seen[start] || !d.incoming(start)) continue;
    std::vector<bool> pattern;
    int p = start;
    do {
      seen[p] = seen[through(p)] = true;
      pattern.push_back(d.is_over(p));
      p = d.arc_partner(through(p));
    } while (p != start);
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] == pattern[(i + 1) % pattern.size()]) return false;
    }
  }
  return true;
}

int crossing_sign(const FourPlatDiagram& d, int crossing) {
  const int base = 4 * crossing;
  const Vec2 descending = strand_direction(d, base + upper_left);
  const Vec2 ascending = strand_direction(d, base + lower_left);
  const bool desc_over = d.crossings()[crossing].over == OverStrand::descending;
  const Vec2 over = desc_over ? descending : ascending;
  const Vec2 under = desc_over ? ascending : descending;
  return over.x * under.y - over.y * under.x > 0 ? 1 : -1;
}

SeifertData seifert_decompose(const FourPlatDiagram& d) {
  SeifertData out;
  out.c = d.crossing_count();

  DisjointSets circles(d.port_count());
  for (int p = 0; p < d.port_count(); ++p) circles.unite(p, d.arc_partner(p));
  for (int ci = 0; ci < out.c; ++ci) {
    const int base = 4 * ci;
    const int in_desc = d.incoming(base + upper_left) ? base + upper_left : base + lower_right;
    const int in_asc = d.incoming(base + lower_left) ? base + lower_left : base + upper_right;
    // oriented smoothing swaps the outgoing halves of the two strands
    circles.unite(in_desc, through(in_asc));
    circles.unite(in_asc, through(in_desc));
  }
  out.s = circles.classes();
  out.mu = component_count(d);
  out.signs.reserve(out.c);
  for (int ci = 0; ci < out.c; ++ci) out.signs.push_back(crossing_sign(d, ci));

  const int twice_genus = out.c - out.s - out.mu + 2;
  if (twice_genus % 2 != 0 || twice_genus < 0) {
    throw ConsistencyError("Seifert statistics violate c - s = mu (mod 2) for " +
                           d.vector().str());
  }
  out.genus = twice_genus / 2;
  return out;
}

PlatType classify(std::span<const std::int64_t> signed_entries) {
  if (signed_entries.empty()) throw InputError("empty signed vector");
  const bool first = signed_entries.front() > 0;
  const bool last = signed_entries.back() > 0;
  if (first && !last) return PlatType::I;
  if (!first && last) return PlatType::II;
  if (first && last) return PlatType::III;
  return PlatType::IV;
}

SignedVectorType signed_vector_and_type(const FourPlatDiagram& d) {
  const auto entries = d.vector().entries();
  std::vector<std::int64_t> signed_entries(entries.begin(), entries.end());
  std::vector<int> block_sign(entries.size(), 0);
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const int b = d.crossings()[ci].block;
    const int sign = crossing_sign(d, ci);
    if (block_sign[b] == 0) {
      block_sign[b] = sign;
    } else if (block_sign[b] != sign) {
      throw ConsistencyError("mixed crossing signs inside twist block " + std::to_string(b + 1) +
                             " of " + d.vector().str());
    }
  }
  for (std::size_t b = 0; b < entries.size(); ++b) signed_entries[b] *= block_sign[b];
  const PlatType type = classify(signed_entries);
  return {std::move(signed_entries), type};
}

FourPlatDiagram reversal(const FourPlatDiagram& d) {
  const int count = d.crossing_count();
  const int blocks = static_cast<int>(d.vector().size());
  const auto mirror = [count](int port) { return 4 * (count - 1 - port / 4) + ((port % 4) ^ 2); };

  std::vector<Crossing> crossings(d.crossings().rbegin(), d.crossings().rend());
  // Mirroring left-right turns descending into ascending; viewing the turned
  // diagram from the front swaps over and under, so the label survives.
  for (auto& cr : crossings) cr.block = blocks - 1 - cr.block;

  std::vector<int> partner(4 * count);
  std::vector<bool> incoming(4 * count);
  for (int p = 0; p < 4 * count; ++p) {
    partner[mirror(p)] = mirror(d.arc_partner(p));
    incoming[mirror(p)] = !d.incoming(p);
  }
  return FourPlatDiagram(d.vector().reversed(), std::move(crossings), std::move(partner),
                         std::move(incoming));
}

SignedVectorType reversal(const SignedVectorType& v) {
  std::vector<std::int64_t> entries(v.signed_entries.rbegin(), v.signed_entries.rend());
  const PlatType type = classify(entries);
  return {std::move(entries), type};
}

std::string to_string(PlatType t) {
  switch (t) {
    case PlatType::I: return "I";
    case PlatType::II: return "II";
    case PlatType::III: return "III";
    case PlatType::IV: return "IV";
  }
  return "?";
}

}  // namespace ratcensus
