#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "kanforge/corpus.hpp"
#include "kanforge/hom.hpp"

using namespace kanforge;

namespace {

void expect_parse_error(const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse) << e.what();
  }
}

}  // namespace

TEST(Json, EveryCannedEntryRoundTrips) {
  for (auto& e : corpus::entries()) {
    std::string text = canonical(e.build());
    EXPECT_TRUE(roundtrip(text)) << e.id;
    EXPECT_EQ(canonical(reserialize(parse_text(text))), text) << e.id;
    EXPECT_EQ(detect_kind(parse_text(text)), e.kind) << e.id;
  }
}

TEST(Json, CanonicalFormIsSortedAndTerminated) {
  std::string text = canonical(to_json(cyclic_group(2)));
  EXPECT_EQ(text.back(), '\n');
  auto e = text.find("\"elements\""), f = text.find("\"format\""), i = text.find("\"identity\""), m = text.find("\"mul\"");
  EXPECT_LT(e, f);
  EXPECT_LT(f, i);
  EXPECT_LT(i, m);
}

TEST(Json, SSetSurvivesStructurally) {
  auto X = prism_quotient(1, 3);
  X.base = 0;
  auto Y = sset_from_json(parse_text(canonical(to_json(X))));
  EXPECT_TRUE(validate(Y).ok());
  EXPECT_EQ(Y.ids, X.ids);
  EXPECT_EQ(Y.face, X.face);
  EXPECT_EQ(Y.degen, X.degen);
  EXPECT_EQ(Y.base, X.base);
}

TEST(Json, MonoidalSurvivesStructurally) {
  auto M = twisted_z2();
  auto N = monoidal_from_json(to_json(M));
  EXPECT_TRUE(same_category(M.C, N.C));
  EXPECT_EQ(N.tensor_obj, M.tensor_obj);
  EXPECT_EQ(N.tensor_mor, M.tensor_mor);
  EXPECT_EQ(N.assoc, M.assoc);
  EXPECT_EQ(N.lunit, M.lunit);
  EXPECT_EQ(N.runit, M.runit);
  EXPECT_EQ(N.unit, M.unit);
}

TEST(Json, BiSetSurvivesStructurally) {
  auto X = constant_in_p(circle(3), 3, 3);
  auto Y = biset_from_json(to_json(X));
  EXPECT_TRUE(validate(Y).ok());
  EXPECT_EQ(Y.total, X.total);
  EXPECT_EQ(Y.ids, X.ids);
  EXPECT_EQ(Y.hface, X.hface);
  EXPECT_EQ(Y.vdegen, X.vdegen);
}

TEST(Json, UnknownKeyIsRejected) {
  for (auto& e : corpus::entries()) {
    json j = e.build();
    j["colour"] = "blue";
    expect_parse_error([&] { reserialize(j); });
  }
}

TEST(Json, WrongFormatIsRejected) {
  json j = to_json(cyclic_group(3));
  j["format"] = 2;
  expect_parse_error([&] { group_from_json(j); });
  j.erase("format");
  expect_parse_error([&] { group_from_json(j); });
}

TEST(Json, DanglingIdIsRejected) {
  json j = to_json(standard_simplex(1, 2));
  j["face"]["1.0"][0] = "nowhere";
  expect_parse_error([&] { sset_from_json(j); });
}

TEST(Json, WrongLengthIsRejected) {
  json j = to_json(cyclic_group(3));
  j["mul"][1].erase(0);
  expect_parse_error([&] { group_from_json(j); });
}

TEST(Json, SyntaxErrorIsAParseError) {
  expect_parse_error([] { parse_text("{\"format\": 1,"); });
  expect_parse_error([] { read_json_file("/nonexistent/kanforge.json"); });
}

TEST(Json, UnrecognizedDocumentIsRejected) {
  expect_parse_error([] { detect_kind(json{{"format", 1}}); });
  expect_parse_error([] { detect_kind(json::array()); });
}

TEST(Json, DataDirectoryMatchesCorpus) {
  for (auto& e : corpus::entries()) {
    std::string path = std::string(KANFORGE_DATA_DIR) + "/" + e.id + ".json";
    std::ifstream in(path);
    ASSERT_TRUE(in) << path;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), canonical(e.build())) << path;
    EXPECT_TRUE(roundtrip(ss.str())) << path;
  }
}
