#include <algorithm>
#include <numeric>
#include <set>

#include <doctest.h>

#include "rabu/errors.hpp"
#include "rabu/gwreath.hpp"
#include "test_diagrams.hpp"

using rabu::ActionGroup;
using rabu::GwpSpec;
using rabu::Permutation;
using rabu::PermGroup;

namespace {

PermGroup sym2() { return PermGroup(2, {rabu::parse_permutation("(1 2)", 2)}); }

// Poset given by covering pairs a < b (0-based), transitively closed by
// the caller's construction being short.
GwpSpec make_spec(int n, const std::vector<std::pair<int, int>>& below,
                  const std::vector<PermGroup>& factors) {
  GwpSpec spec;
  spec.less.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : below) spec.less[a][b] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (spec.less[i][k] && spec.less[k][j]) spec.less[i][j] = true;
      }
    }
  }
  for (const PermGroup& g : factors) {
    spec.set_sizes.push_back(g.degree());
    spec.factors.push_back(g);
  }
  spec.validate();
  return spec;
}

// Brute-force oracle: every permutation of the tuple space passing the
// definitional membership test.
std::vector<Permutation> members_by_brute_force(const GwpSpec& spec) {
  const auto tuples = rabu::all_tuples(spec, 1u << 16);
  const int n = static_cast<int>(tuples.size());
  REQUIRE(n <= 8);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> members;
  do {
    Permutation p{std::vector<int>(images)};
    if (rabu::gwp_member(spec, p)) members.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return members;
}

}  // namespace

TEST_CASE("membership by definition") {
  // Two 2-point coordinates, empty order: a direct product.
  const GwpSpec direct = make_spec(2, {}, {sym2(), sym2()});
  const auto tuples = rabu::all_tuples(direct, 100);
  REQUIRE(tuples.size() == 4);

  CHECK(rabu::gwp_member(direct, Permutation::identity(4)));

  // Swap coordinate 0 uniformly: tuples (1,y) <-> (2,y).
  auto coordinate_swap = [&](int coord) {
    std::vector<int> images(4);
    for (int x = 0; x < 4; ++x) {
      std::vector<int> tuple = tuples[x];
      tuple[coord] = tuple[coord] == 1 ? 2 : 1;
      images[x] = rabu::tuple_index(direct, tuple);
    }
    return Permutation(images);
  };
  CHECK(rabu::gwp_member(direct, coordinate_swap(0)));
  CHECK(rabu::gwp_member(direct, coordinate_swap(1)));

  // Chain: coordinate 1 below coordinate 0. A coordinate-1 swap applied
  // only when coordinate 0 is 1 is allowed; the reverse dependence is not.
  const GwpSpec chain = make_spec(2, {{1, 0}}, {sym2(), sym2()});
  std::vector<int> dependent_images(4), illegal_images(4);
  for (int x = 0; x < 4; ++x) {
    std::vector<int> a = tuples[x];
    if (a[0] == 1) a[1] = a[1] == 1 ? 2 : 1;
    dependent_images[x] = rabu::tuple_index(chain, a);
    std::vector<int> b = tuples[x];
    if (b[1] == 1) b[0] = b[0] == 1 ? 2 : 1;
    illegal_images[x] = rabu::tuple_index(chain, b);
  }
  CHECK(rabu::gwp_member(chain, Permutation(dependent_images)));
  CHECK_FALSE(rabu::gwp_member(chain, Permutation(illegal_images)));
}

TEST_CASE("generation matches the closed order form and the brute force") {
  const std::vector<GwpSpec> specs = {
      make_spec(2, {}, {sym2(), sym2()}),
      make_spec(2, {{1, 0}}, {sym2(), sym2()}),
      make_spec(1, {}, {testdiagrams::sym3()}),
      make_spec(3, {{1, 0}, {2, 0}}, {sym2(), sym2(), sym2()}),
      make_spec(3, {{2, 1}, {1, 0}, {2, 0}}, {sym2(), sym2(), sym2()}),
  };
  for (const GwpSpec& spec : specs) {
    const ActionGroup generated = rabu::gwp_generate(spec);
    CHECK(generated.group.order() == rabu::gwp_order_formula(spec));
    const std::vector<Permutation> brute = members_by_brute_force(spec);
    CHECK(generated.group.order() == brute.size());
    for (const Permutation& p : brute) CHECK(generated.group.contains(p));
    for (const Permutation& g : generated.group.generators()) {
      CHECK(rabu::gwp_member(spec, g));
    }
  }
}

TEST_CASE("generated orders for the named examples") {
  CHECK(rabu::gwp_generate(make_spec(2, {}, {sym2(), sym2()})).group.order() == 4);
  CHECK(rabu::gwp_generate(make_spec(2, {{1, 0}}, {sym2(), sym2()})).group.order() == 8);
  CHECK(rabu::gwp_generate(make_spec(1, {}, {testdiagrams::sym3()})).group.order() == 6);
}

TEST_CASE("ideals") {
  const GwpSpec chain = make_spec(2, {{1, 0}}, {sym2(), sym2()});
  CHECK(rabu::ideal_check(chain, {1}));
  CHECK_FALSE(rabu::ideal_check(chain, {0}));
  CHECK(rabu::ideal_check(chain, {0, 1}));
  CHECK(rabu::ideal_check(chain, {}));

  CHECK(rabu::d_of_ideal(chain, {1}).group.order() == 4);  // |G|^(|X_0|) = 2^2
  CHECK(rabu::d_of_ideal(chain, {}).group.order() == 1);
  CHECK_THROWS_AS(rabu::d_of_ideal(chain, {0}), rabu::PreconditionError);

  // The full ideal filters to the whole group.
  CHECK(rabu::d_of_ideal(chain, {0, 1}).group.order() == 8);

  // A nontrivial proper ideal of size two in a vee: 1 and 2 both below 0.
  const GwpSpec vee = make_spec(3, {{1, 0}, {2, 0}}, {sym2(), sym2(), sym2()});
  CHECK(rabu::ideal_check(vee, {1, 2}));
  const ActionGroup d12 = rabu::d_of_ideal(vee, {1, 2});
  // Coordinates 1 and 2 move freely per value of coordinate 0: (2^2)^2.
  CHECK(d12.group.order() == 16);
  for (const Permutation& g : d12.group.generators()) {
    for (int x = 0; x < g.degree(); ++x) {
      CHECK(d12.tuples[g(x)][0] == d12.tuples[x][0]);
    }
  }
}

TEST_CASE("every ideal gives a normal subgroup") {
  const std::vector<GwpSpec> specs = {
      make_spec(2, {{1, 0}}, {sym2(), sym2()}),
      make_spec(3, {{1, 0}, {2, 0}}, {sym2(), sym2(), sym2()}),
      make_spec(3, {{2, 1}, {1, 0}, {2, 0}}, {sym2(), sym2(), sym2()}),
  };
  for (const GwpSpec& spec : specs) {
    const ActionGroup whole = rabu::gwp_generate(spec);
    // All subsets; test the ideals among them.
    for (int mask = 0; mask < (1 << spec.size()); ++mask) {
      std::vector<int> subset;
      for (int s = 0; s < spec.size(); ++s) {
        if (mask & (1 << s)) subset.push_back(s);
      }
      if (!rabu::ideal_check(spec, subset)) continue;
      const ActionGroup d = rabu::d_of_ideal(spec, subset);
      for (const Permutation& g : whole.group.generators()) {
        const Permutation gi = g.inverse();
        for (const Permutation& x : d.group.generators()) {
          CHECK(d.group.contains(g * x * gi));
        }
      }
    }
  }
}

TEST_CASE("semidirect split off a minimal element") {
  const GwpSpec chain = make_spec(2, {{1, 0}}, {sym2(), sym2()});
  const rabu::SplitCheck split = rabu::semidirect_split(chain, 1);
  CHECK(split.d_order == 4);
  CHECK(split.h_order == 2);
  CHECK(split.g_order == 8);
  CHECK(split.pass());
  CHECK_THROWS_AS(rabu::semidirect_split(chain, 0), rabu::PreconditionError);

  const GwpSpec direct = make_spec(2, {}, {sym2(), testdiagrams::sym3()});
  const rabu::SplitCheck split2 = rabu::semidirect_split(direct, 0);
  CHECK(split2.d_order == 2);
  CHECK(split2.h_order == 6);
  CHECK(split2.pass());

  const GwpSpec single = make_spec(1, {}, {testdiagrams::sym3()});
  const rabu::SplitCheck split3 = rabu::semidirect_split(single, 0);
  CHECK(split3.d_order == 6);
  CHECK(split3.h_order == 1);
  CHECK(split3.pass());
}

TEST_CASE("color stabilizer") {
  const rabu::CoxeterDiagram d3 = testdiagrams::d3();
  const PermGroup g0 = rabu::color_stabilizer(d3, 0);
  CHECK(g0.degree() == 2);
  CHECK(g0.order() == 2);

  const rabu::CoxeterDiagram dc = testdiagrams::d3_cyclic_u();
  CHECK(rabu::color_stabilizer(dc, 2).order() == 1);
}

TEST_CASE("sphere specs from words") {
  const rabu::CoxeterDiagram d1 = testdiagrams::d1();
  const GwpSpec spec = rabu::sphere_spec(d1, rabu::parse_word(d1, "s t"));
  CHECK(spec.size() == 2);
  CHECK(spec.less[1][0]);  // position 2 below position 1
  CHECK_FALSE(spec.less[0][1]);
  CHECK(spec.set_sizes == std::vector<int>{2, 2});
  CHECK(rabu::gwp_generate(spec).group.order() == 8);

  const rabu::CoxeterDiagram d3 = testdiagrams::d3();
  const GwpSpec commuting = rabu::sphere_spec(d3, rabu::parse_word(d3, "s t"));
  CHECK_FALSE(commuting.less[0][1]);
  CHECK_FALSE(commuting.less[1][0]);
  CHECK(rabu::gwp_generate(commuting).group.order() == 4);

  CHECK_THROWS_AS(rabu::sphere_spec(d3, rabu::parse_word(d3, "s s")),
                  rabu::PreconditionError);
}

TEST_CASE("wreath intersections") {
  const rabu::CoxeterDiagram d1 = testdiagrams::d1();
  const rabu::CoxeterDiagram d3 = testdiagrams::d3();

  CHECK(rabu::wreath_intersection(d1, rabu::parse_word(d1, "s t")).group.order() == 8);
  CHECK(rabu::wreath_intersection(d3, rabu::parse_word(d3, "s t")).group.order() == 4);
  CHECK(rabu::wreath_intersection(d3, rabu::parse_word(d3, "s")).group.order() == 2);

  // The intersection model and the generalized wreath product agree as
  // permutation groups of the tuple space.
  for (const rabu::CoxeterDiagram& d :
       {testdiagrams::d1(), testdiagrams::d2(), testdiagrams::d3()}) {
    for (const rabu::Word& w : rabu::enumerate_elements(d, 3, 10000)) {
      const ActionGroup lhs = rabu::wreath_intersection(d, w);
      const ActionGroup rhs = rabu::gwp_generate(rabu::sphere_spec(d, w));
      CHECK(lhs.group.same_action(rhs.group));
    }
  }
}
