#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "ratcensus/bigint.hpp"
#include "ratcensus/errors.hpp"
#include "ratcensus/fourplat.hpp"

using namespace ratcensus;

namespace {

CFVector vec(std::vector<std::int64_t> v) { return CFVector(std::move(v)); }

constexpr std::array kOrientations{SecondComponent::forward, SecondComponent::reversed};

// Independent oracle: |det| of the Fox coloring matrix. Arcs run from one
// undercrossing to the next; each crossing contributes 2*over - under - under.
// For the 2-bridge link b(q, p) the determinant is q.
BigInt determinant(const FourPlatDiagram& d) {
  const int ports = d.port_count();
  std::vector<int> parent(ports);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < ports; ++p) {
    parent[find(p)] = find(d.arc_partner(p));
    const int other = 4 * (p / 4) + 3 - p % 4;
    if (d.is_over(p)) parent[find(p)] = find(other);
  }
  std::map<int, int> arc_index;
  for (int p = 0; p < ports; ++p) arc_index.emplace(find(p), 0);
  int next = 0;
  for (auto& [root, idx] : arc_index) idx = next++;
  const int c = d.crossing_count();
  REQUIRE(next == c);

  std::vector<std::vector<BigInt>> m(c, std::vector<BigInt>(c, 0));
  for (int ci = 0; ci < c; ++ci) {
    for (int local = 0; local < 4; ++local) {
      const int p = 4 * ci + local;
      const int arc = arc_index[find(p)];
      // each over port counts half of the +2, each under port -1
      m[ci][arc] += d.is_over(p) ? 1 : -1;
    }
  }
  // drop last row and column; fraction-free elimination
  const int k = c - 1;
  if (k == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    int pivot = i;
    while (pivot < k && m[pivot][i] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != i) {
      std::swap(m[pivot], m[i]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int col = i + 1; col < k; ++col) {
        m[r][col] = (m[r][col] * m[i][i] - m[r][i] * m[i][col]) / prev;
      }
      m[r][i] = 0;
    }
    prev = m[i][i];
  }
  BigInt det = sign * m[k - 1][k - 1];
  return abs(det);
}

}  // namespace

TEST_CASE("build") {
  CHECK(build(vec({3, 2, 2, 3, 3})).crossing_count() == 13);
  CHECK(component_count(build(vec({2}))) == 2);
  CHECK(component_count(build(vec({3}))) == 1);
  CHECK(build(vec({2})).crossing_count() == 2);
}

TEST_CASE("seifert_decompose") {
  const SeifertData trefoil = seifert_decompose(build(vec({3})));
  CHECK(trefoil.c == 3);
  CHECK(trefoil.s == 2);
  CHECK(trefoil.mu == 1);
  CHECK(trefoil.genus == 1);

  const SeifertData hopf = seifert_decompose(build(vec({2})));
  CHECK(hopf.c == 2);
  CHECK(hopf.s == 2);
  CHECK(hopf.mu == 2);
  CHECK(hopf.genus == 0);

  const SeifertData figure_eight = seifert_decompose(build(vec({2, 1, 1})));
  CHECK(figure_eight.c == 4);
  CHECK(figure_eight.s == 3);
  CHECK(figure_eight.mu == 1);
  CHECK(figure_eight.genus == 1);
}

TEST_CASE("signed vector of the 56/191 plat") {
  for (auto o : kOrientations) {
    const SignedVectorType sv = signed_vector_and_type(build(vec({3, 2, 2, 3, 3}), o));
    CHECK(sv.signed_entries == std::vector<std::int64_t>{-3, -2, -2, -3, -3});
    CHECK(sv.type == PlatType::IV);
  }
}

TEST_CASE("hopf link: the two orientations give opposite signs") {
  const auto fwd = signed_vector_and_type(build(vec({2}), SecondComponent::forward));
  const auto rev = signed_vector_and_type(build(vec({2}), SecondComponent::reversed));
  CHECK(fwd.signed_entries == std::vector<std::int64_t>{2});
  CHECK(rev.signed_entries == std::vector<std::int64_t>{-2});
}

TEST_CASE("classify") {
  const std::vector<std::int64_t> one{1, 1, -1};
  const std::vector<std::int64_t> two{-1, 1, 1};
  const std::vector<std::int64_t> three{2, -1, 3};
  const std::vector<std::int64_t> four{-2};
  CHECK(classify(one) == PlatType::I);
  CHECK(classify(two) == PlatType::II);
  CHECK(classify(three) == PlatType::III);
  CHECK(classify(four) == PlatType::IV);
}

TEST_CASE("signed-vector reversal") {
  const SignedVectorType fig1{{-3, -2, -2, -3, -3}, PlatType::IV};
  CHECK(reversal(fig1).signed_entries == std::vector<std::int64_t>{-3, -3, -2, -2, -3});
  CHECK(reversal(reversal(fig1)).signed_entries == fig1.signed_entries);
  const SignedVectorType type_one{{1, 1, -1}, PlatType::I};
  CHECK(reversal(type_one).type == PlatType::II);
}

TEST_CASE("diagram reversal reverses the signed vector and keeps statistics") {
  for (std::int64_t n = 1; n <= 9; ++n) {
    for (const CFVector& v : vectors_with_sum(n)) {
      for (auto o : kOrientations) {
        const FourPlatDiagram d = build(v, o);
        const FourPlatDiagram r = reversal(d);
        const auto sv = signed_vector_and_type(d);
        const auto rsv = signed_vector_and_type(r);
        std::vector<std::int64_t> expected(sv.signed_entries.rbegin(), sv.signed_entries.rend());
        REQUIRE(rsv.signed_entries == expected);
        REQUIRE(r.vector() == v.reversed());
        REQUIRE(is_alternating(r));

        const SeifertData a = seifert_decompose(d);
        const SeifertData b = seifert_decompose(r);
        REQUIRE(a.s == b.s);
        REQUIRE(a.mu == b.mu);

        const FourPlatDiagram back = reversal(r);
        REQUIRE(signed_vector_and_type(back).signed_entries == sv.signed_entries);
        for (int p = 0; p < d.port_count(); ++p) {
          REQUIRE(back.arc_partner(p) == d.arc_partner(p));
          REQUIRE(back.incoming(p) == d.incoming(p));
        }
      }
    }
  }
}

TEST_CASE("reversal of an even-position block twist matches building the reversed vector") {
  // The turned-over diagram is again in the builder's convention.
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (const CFVector& v : vectors_with_sum(n)) {
      const FourPlatDiagram r = reversal(build(v));
      const FourPlatDiagram direct = build(v.reversed());
      for (int ci = 0; ci < r.crossing_count(); ++ci) {
        REQUIRE(r.crossings()[ci].upper == direct.crossings()[ci].upper);
        REQUIRE(r.crossings()[ci].over == direct.crossings()[ci].over);
      }
      for (int p = 0; p < r.port_count(); ++p) REQUIRE(r.arc_partner(p) == direct.arc_partner(p));
    }
  }
}

TEST_CASE("diagrams are alternating and represent b(q, p)") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (const CFVector& v : vectors_with_sum(n)) {
      if (v == CFVector({1})) continue;
      const Fraction f = evaluate(v);
      const FourPlatDiagram d = build(v);
      REQUIRE(is_alternating(d));
      REQUIRE(d.crossing_count() == crossing_number(v));
      REQUIRE(determinant(d) == f.q());
      // two components exactly when the determinant is even
      REQUIRE(component_count(d) == (f.q() % 2 == 0 ? 2 : 1));
    }
  }
}

TEST_CASE("parity, genus bounds and knot/link labelling") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (const CFVector& v : vectors_with_sum(n)) {
      for (auto o : kOrientations) {
        const SeifertData sd = seifert_decompose(build(v, o));
        REQUIRE((sd.c - sd.s - sd.mu) % 2 == 0);
        REQUIRE(sd.genus >= 0);
        REQUIRE(sd.genus <= sd.c / 2);
        REQUIRE((sd.mu == 1) == ((sd.c - sd.s) % 2 != 0));
        REQUIRE(sd.signs.size() == static_cast<std::size_t>(sd.c));
      }
    }
  }
}

TEST_CASE("knots ignore the orientation choice") {
  const auto a = seifert_decompose(build(vec({2, 1, 1}), SecondComponent::forward));
  const auto b = seifert_decompose(build(vec({2, 1, 1}), SecondComponent::reversed));
  CHECK(a.s == b.s);
  CHECK(a.signs == b.signs);
}

TEST_CASE("two-component statistics can depend on orientation") {
  // [4] is the (2,4) torus link: parallel strands give 2 circles, antiparallel 4
  const int a = seifert_decompose(build(vec({4}), SecondComponent::forward)).s;
  const int b = seifert_decompose(build(vec({4}), SecondComponent::reversed)).s;
  CHECK(std::min(a, b) == 2);
  CHECK(std::max(a, b) == 4);
}
