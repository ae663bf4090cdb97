#include <doctest.h>

#include "catmat/morphism_label.hpp"

using namespace catmat;

TEST_CASE("canonical label strings") {
  CHECK(to_string(label::Identity{0, 2}) == "Identity(0,2)");
  CHECK(to_string(label::Pair{0, 1, 1, 2, 1}) == "Pair(0,1,1,2,1)");
  CHECK(to_string(label::Collapsed{3, 1, 2}) == "Collapsed(3,1,2)");
  CHECK(to_string(label::Cross{label::CrossPart::Row, 0, 1, 1, 0, 2}) == "CrossRow(0,1,1,0,2)");
  CHECK(to_string(label::Cross{label::CrossPart::Extra, 0, 1, 1, 1, 1}) ==
        "CrossExtra(0,1,1,1,1)");
  CHECK(to_string(label::Pad{0, 1, 1, 3}) == "Pad(0,1,1,3)");
  CHECK(to_string(label::Lifted{0, 1, "Pair(0,0,1,1,2)"}) == "Lift(0,1,Pair(0,0,1,1,2))");
  CHECK(to_string(label::Opaque{"m0.1.2"}) == "m0.1.2");
}

TEST_CASE("parse_label inverts to_string") {
  const std::vector<MorphismLabel> labels = {
      label::Identity{1, 0},
      label::Pair{2, 0, 3, 1, 4},
      label::Collapsed{0, 1, 1},
      label::Cross{label::CrossPart::Base, 0, 0, 1, 0, 1},
      label::Cross{label::CrossPart::Col, 2, 1, 0, 3, 5},
      label::Pad{1, 2, 2, 7},
      label::Lifted{3, 4, "Lift(0,1,Identity(0,0))"},
      label::Opaque{"m1.1.0"},
  };
  for (const auto& l : labels) {
    CAPTURE(to_string(l));
    CHECK(parse_label(to_string(l)) == l);
  }
}

TEST_CASE("unrecognised text becomes an opaque label") {
  for (const char* text : {"Pair(0,1)", "Pair(0,1,1,2,x)", "Foo(1)", "(1,2)", "Pair(0,1,1,2,1",
                           "Identity(-1,0)", "", "Lift(a,1,x)"}) {
    CAPTURE(text);
    CHECK(parse_label(text) == MorphismLabel{label::Opaque{text}});
  }
}
