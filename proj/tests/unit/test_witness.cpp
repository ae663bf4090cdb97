#include <doctest.h>

#include <algorithm>

#include "catmat/decider.hpp"
#include "catmat/errors.hpp"
#include "catmat/verifier.hpp"
#include "catmat/witness.hpp"
#include "naive_check.hpp"
#include "predicates.hpp"

using namespace catmat;
using label::CrossPart;

namespace {

std::vector<std::string> names(const std::vector<MorphismLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) {
    out.push_back(to_string(l));
  }
  return out;
}

std::size_t count_part(const std::vector<MorphismLabel>& labels, CrossPart part) {
  return static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [&](const auto& l) {
    const auto* c = std::get_if<label::Cross>(&l);
    return c && c->part == part;
  }));
}

}  // namespace

TEST_CASE("a and b counts") {
  const HomMatrix m{{1, 2}, {3, 7}};
  const auto p = build_partition(m);
  CHECK(a_of(p, m, 0, 1) == 3);
  CHECK(b_of(p, m, 0, 1) == 2);
  CHECK(a_of(p, m, 0, 0) == 1);
  CHECK(b_of(p, m, 0, 0) == 1);
  const HomMatrix v{{2, 1}, {0, 3}};
  const auto pv = build_partition(v);
  CHECK(a_of(pv, v, 0, 1) == 1);
  CHECK(b_of(pv, v, 1, 1) == 1);
}

TEST_CASE("hom labels of the 2x2 unit case") {
  const HomMatrix m{{1, 2}, {3, 7}};
  const auto homs = build_hom_labels(m, build_partition(m));
  const auto h11 = names(homs[3]);
  REQUIRE(h11.size() == 7);
  CHECK(h11[0] == "Identity(0,1)");
  CHECK(h11[1] == "Pair(0,1,1,1,1)");
  CHECK(h11[6] == "Pair(0,1,1,3,2)");
  CHECK(names(homs[0]) == std::vector<std::string>{"Identity(0,0)"});
  CHECK(names(homs[1]) == std::vector<std::string>{"Pair(0,0,1,1,1)", "Pair(0,0,1,1,2)"});
  CHECK(homs[2].size() == 3);

  const HomMatrix padded{{1, 2}, {3, 9}};
  const auto hp = names(build_hom_labels(padded, build_partition(padded))[3]);
  REQUIRE(hp.size() == 9);
  CHECK(hp[7] == "Pad(0,1,1,1)");
  CHECK(hp[8] == "Pad(0,1,1,2)");
}

TEST_CASE("four-part split of a cross hom-set") {
  const HomMatrix m{{1, 1, 1, 2}, {1, 2, 2, 3}, {0, 0, 1, 1}, {0, 0, 1, 2}};
  const auto homs = build_hom_labels(m, build_partition(m));
  const auto& h = homs[1 * 4 + 3];
  CHECK(h.size() == 3);
  CHECK(count_part(h, CrossPart::Base) == 1);
  CHECK(count_part(h, CrossPart::Row) == 1);
  CHECK(count_part(h, CrossPart::Col) == 1);
  CHECK(count_part(h, CrossPart::Extra) == 0);
  CHECK(homs[2 * 4 + 0].empty());
}

TEST_CASE("part sizes that would be negative are reported") {
  const HomMatrix m{{1, 2}, {3, 6}};
  CHECK_THROWS_AS(build_hom_labels(m, build_partition(m)), CountError);
}

TEST_CASE("compositions through the basepoint") {
  const HomMatrix m{{1, 2}, {3, 7}};
  const auto p = build_partition(m);
  const WitnessContext ctx{m, p};
  const MorphismLabel out_of_base = label::Pair{0, 0, 1, 1, 1};  // 0 -> 1, v = 1
  const MorphismLabel into_base = label::Pair{0, 1, 0, 2, 1};    // 1 -> 0, u = 2
  CHECK(compose(into_base, out_of_base, ctx) == MorphismLabel{label::Identity{0, 0}});
  CHECK(compose(out_of_base, into_base, ctx) == MorphismLabel{label::Pair{0, 1, 1, 2, 1}});
  CHECK_THROWS_AS(compose(out_of_base, out_of_base, ctx), NotComposableError);

  // three pairs associate to Pair(i, n, e, b) either way
  const MorphismLabel f = label::Pair{0, 1, 0, 3, 1};
  const MorphismLabel g = label::Pair{0, 0, 1, 1, 2};
  const MorphismLabel h = label::Pair{0, 1, 1, 2, 1};
  const auto left = compose(h, compose(g, f, ctx), ctx);
  const auto right = compose(compose(h, g, ctx), f, ctx);
  CHECK(left == right);
  CHECK(left == MorphismLabel{label::Pair{0, 1, 1, 3, 1}});
}

TEST_CASE("padding compositions") {
  const HomMatrix m{{1, 2}, {3, 9}};
  const auto p = build_partition(m);
  const WitnessContext ctx{m, p};
  const MorphismLabel k1 = label::Pad{0, 1, 1, 1};
  const MorphismLabel k2 = label::Pad{0, 1, 1, 2};
  CHECK(compose(k1, k1, ctx) == k1);
  CHECK(compose(k1, k2, ctx) == MorphismLabel{label::Pair{0, 1, 1, 3, 1}});
  CHECK(compose(k1, label::Pair{0, 1, 1, 2, 2}, ctx) == MorphismLabel{label::Pair{0, 1, 1, 2, 1}});
  CHECK(compose(label::Pair{0, 1, 1, 2, 2}, k1, ctx) == MorphismLabel{label::Pair{0, 1, 1, 3, 2}});
}

TEST_CASE("witnesses for the quoted fixtures verify") {
  for (const auto& fx : testing::fixtures()) {
    if (!fx.exists) {
      CHECK_THROWS_AS(build_witness(fx.m), RejectedError);
      continue;
    }
    CAPTURE(fx.m);
    const auto c = build_witness(fx.m);
    const auto r = verify_category(c, fx.m);
    CHECK(r.passed);
    CHECK(testing::naive_is_category(c, fx.m));
  }
}

TEST_CASE("specific witnesses") {
  const auto point = build_witness(HomMatrix{{1}});
  CHECK(point.morphism_count() == 1);
  CHECK(point.compose(0, 0) == 0);

  const auto c = build_witness(HomMatrix{{1, 2}, {3, 7}});
  CHECK(c.morphism_count() == 13);

  const auto inflated = build_witness(HomMatrix{{2, 2}, {2, 2}});
  CHECK(inflated.label_of(inflated.identity(1)) == "Lift(1,1,Identity(0,1))");
  CHECK(verify_category(inflated, HomMatrix{{2, 2}, {2, 2}}).passed);

  CHECK(build_witness(HomMatrix{}).object_count() == 0);
}

TEST_CASE("cross hom-sets with one V side keep the U side's structure") {
  // V class {0} above U class {1,2}; |Hom(0, basepoint)| = 2
  const HomMatrix m{{2, 2, 2}, {0, 1, 1}, {0, 1, 2}};
  REQUIRE(decide(m).exists);
  CHECK(verify_category(build_witness(m), m).passed);
  // and the mirror image
  CHECK(verify_category(build_witness(transpose(m)), transpose(m)).passed);
}

TEST_CASE("building is deterministic") {
  const HomMatrix m{{1, 1, 1, 2}, {1, 2, 2, 3}, {0, 0, 1, 1}, {0, 0, 1, 2}};
  CHECK(build_witness(m) == build_witness(m));
}
