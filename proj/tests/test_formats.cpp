#include <doctest.h>

#include <random>

#include "cubestrata/json_io.hpp"

using namespace cubestrata;

TEST_CASE("rational strings") {
  CHECK(rat_to_string(Rat(-2, 3)) == "-2/3");
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK(rat_from_string("-2/3") == Rat(-2, 3));
  CHECK(rat_from_string("7") == 7);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("x"), ParseError);
}

TEST_CASE("json round trips on random data") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int t = 0; t < 25; ++t) {
    HeightFunction h;
    for (Vid v = 0; v < 8; ++v) {
      h[v] = Rat(num(rng), den(rng));
      h[v].canonicalize();
    }
    CHECK(heights_from_json(heights_to_json(h)) == h);
  }
  for (const Subdivision& s : enumerate_all()) {
    CHECK(subdivision_from_json(subdivision_to_json(s)) == s);
  }
}

TEST_CASE("vertex labels") {
  CHECK(vid_string(coords_vid(0, 1, 0)) == "010");
  CHECK(vid_from_string("010") == coords_vid(0, 1, 0));
  CHECK_THROWS_AS(vid_from_string("02"), ParseError);
}

TEST_CASE("subdivision json validates") {
  Json bad = Json::parse(R"({"cells": [[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]]})");
  CHECK_THROWS_AS(subdivision_from_json(bad), InvalidSubdivision);
  Json ok = Json::parse(
      R"({"cells": [[[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]]})");
  CHECK(subdivision_from_json(ok).cells.size() == 1);
}
