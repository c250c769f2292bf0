#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "covred/document.hpp"
#include "covred/generate.hpp"
#include "fixtures.hpp"

namespace {

using namespace covred;
using namespace fixtures;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::usage;
}

TEST(Document, EightObjectFileParses) {
  const auto s = parse_system(slurp(data_path("eight_objects.json")));
  EXPECT_EQ(s, eight_objects());
}

TEST(Document, SerializationIsByteStable) {
  const auto text = slurp(data_path("eight_objects.json"));
  EXPECT_EQ(serialize_system(parse_system(text)), text);
}

TEST(Document, DuplicateBlockAfterDeletionIsMergedWithDiagnostic) {
  ConstructionReport report;
  const auto s = parse_system(slurp(data_path("eight_objects_deleted.json")), &report);
  EXPECT_EQ(s.universe_size(), 7u);
  EXPECT_EQ(s.covering(4).size(), 4u);
  ASSERT_EQ(report.notes.size(), 1u);
  EXPECT_NE(report.notes[0].find("'C5'"), std::string::npos);
  EXPECT_EQ(s, deleted_system(eight_objects(), DeleteSpec{7}).system);
}

TEST(Document, AddedFileMatchesIncrementalConstruction) {
  EXPECT_EQ(parse_system(slurp(data_path("eight_objects_added.json"))),
            added_system(eight_objects(), eight_objects_add()));
}

TEST(Document, EmptyBlockNamesCoveringAndBlock) {
  const std::string doc = R"({"format":"covred-system","version":1,"objects":["a","b"],
    "coverings":[{"name":"A","blocks":[["a","b"],[]]}],"decision":[["a","b"]]})";
  try {
    parse_system(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("'A'"), std::string::npos);
    EXPECT_NE(msg.find("block 1"), std::string::npos);
  }
}

TEST(Document, MalformedDocumentsAreValidationErrors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"format":"other","version":1})"), ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"format":"covred-system","version":2})"), ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"format":"covred-system","version":1,"objects":["a","a"]})"), ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"format":"covred-system","version":1,"objects":["a"],"universe_size":2,
    "coverings":[],"decision":[]})"), ErrorKind::validation);
  EXPECT_EQ(kind_of(R"({"format":"covred-system","version":1,"objects":["a"],
    "coverings":[{"name":"A","blocks":[["b"]]}],"decision":[["a"]]})"), ErrorKind::validation);
}

TEST(Document, RandomSystemsRoundTrip) {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto s = random_system(rng);
    const auto text = serialize_system(s);
    const auto back = parse_system(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(serialize_system(back), text);
  }
}

TEST(Document, EventsRoundTrip) {
  const auto events = parse_events(slurp(data_path("add_then_delete.json")));
  ASSERT_EQ(events.size(), 3u);
  EXPECT_EQ(events[0].op, EventRecord::Op::add);
  EXPECT_EQ(events[0].decision_class, 2u);
  EXPECT_EQ(events[0].absorbing, eight_objects_add().absorbing);
  EXPECT_EQ(events[2].label, "x8");
  EXPECT_EQ(parse_events(serialize_events(events)), events);
}

TEST(Document, BadEventsAreRejected) {
  EXPECT_THROW(parse_events(R"({"format":"covred-events","version":1,"events":[{"op":"move"}]})"), Error);
  EXPECT_THROW(parse_events(R"({"format":"covred-events","version":1,"events":[{"op":"delete"}]})"), Error);
  EXPECT_THROW(parse_events(R"({"format":"covred-events","version":1,"events":[{"op":"add","blocks":[]}]})"), Error);
  EXPECT_THROW(resolve_event(eight_objects(), EventRecord{EventRecord::Op::remove, "x42", 0, {}}), Error);
}

}  // namespace
