#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace fdes;
using namespace fdes::testing;

namespace {

ErrorCode build_error(const AlphabetPtr& a, const std::vector<std::pair<std::string, std::string>>& entries) {
  try {
    lang(a, entries);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "language accepted";
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST(Alphabet, ValidatesSubsetsAndSites) {
  EXPECT_THROW(make_alphabet(event_set({"a"}), event_set({"b"}), {}), Error);
  EXPECT_THROW(EventId("eps"), Error);
  EXPECT_THROW(EventId("a-b"), Error);
  const SitePair uncovered{SiteSpec{event_set({"a"}), event_set({"a"})}, SiteSpec{{}, {}}};
  try {
    make_alphabet(event_set({"a", "b"}), event_set({"a", "b"}), event_set({"a"}), uncovered);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SiteCoverViolation);
  }
  const SitePair outside{SiteSpec{event_set({"a", "b"}), event_set({"a"})}, SiteSpec{{}, {}}};
  try {
    make_alphabet(event_set({"a", "b"}), event_set({"a"}), event_set({"a"}), outside);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAlphabet);
  }
  const AlphabetPtr a = toy_alphabet();
  EXPECT_EQ(a->uncontrollable(), event_set({"d"}));
  EXPECT_EQ(a->unobservable(), event_set({"c"}));
}

TEST(EventString, ShortlexOrderAndText) {
  EXPECT_LT(str("b"), str("a.a"));
  EXPECT_LT(str("a.b"), str("a.c"));
  EXPECT_LT(EventString{}, str("a"));
  EXPECT_EQ(str("a.c.d").to_string(), "a.c.d");
  EXPECT_EQ(EventString{}.to_string(), "eps");
  EXPECT_EQ(str("a.c.d").parent(), str("a.c"));
  EXPECT_THROW(parse_event_string("a..b"), Error);
  EXPECT_THROW(parse_event_string(""), Error);
}

TEST(FuzzyLanguage, AcceptsValidLanguages) {
  const FuzzyLanguage l = toy_plant();
  EXPECT_EQ(l.size(), 7u);
  EXPECT_EQ(l.grade(str("a.c.d")), gr("0.6"));
  EXPECT_EQ(toy_spec().grade(str("a.b")), Grade::zero());
  EXPECT_EQ(l.max_length(), 3u);
  EXPECT_TRUE(FuzzyLanguage::empty(toy_alphabet()).is_empty());
}

TEST(FuzzyLanguage, RejectsInvalidLanguages) {
  const AlphabetPtr a = toy_alphabet();
  EXPECT_EQ(build_error(a, {{"eps", "1"}, {"a", "0.5"}, {"a.b", "0.7"}}), ErrorCode::P2Violation);
  EXPECT_EQ(build_error(a, {{"eps", "0.9"}, {"a", "0.5"}}), ErrorCode::P1Violation);
  EXPECT_EQ(build_error(a, {{"a", "0.9"}}), ErrorCode::P2Violation);
  EXPECT_EQ(build_error(a, {{"eps", "1"}, {"a.b", "0.5"}}), ErrorCode::P2Violation);
  EXPECT_EQ(build_error(a, {{"eps", "1"}, {"a", "0.5"}, {"a", "0.4"}}), ErrorCode::DuplicateString);
  EXPECT_EQ(build_error(a, {{"eps", "1"}, {"x", "0.5"}}), ErrorCode::UnknownEvent);
}

TEST(FuzzyLanguage, ZeroGradesAreNotStored) {
  const FuzzyLanguage l = lang(toy_alphabet(), {{"eps", "1"}, {"a", "0"}, {"b", "0.5"}});
  EXPECT_FALSE(l.contains(str("a")));
  EXPECT_EQ(l.size(), 2u);
}

TEST(FuzzyLanguage, UnionIntersectionConcatenation) {
  const AlphabetPtr a = toy_alphabet();
  const FuzzyLanguage l = toy_plant(a);
  const FuzzyLanguage k = toy_spec(a);
  EXPECT_EQ(language_union(l, k), l);
  EXPECT_EQ(language_intersection(l, k), k);
  const FuzzyLanguage x = lang(a, {{"eps", "1"}, {"a", "0.8"}});
  const FuzzyLanguage y = lang(a, {{"eps", "1"}, {"b", "0.6"}});
  const FuzzyLanguage xy = concatenation(x, y);
  EXPECT_EQ(xy.grade(str("a.b")), gr("0.6"));
  EXPECT_EQ(xy, lang(a, {{"eps", "1"}, {"a", "0.8"}, {"b", "0.6"}, {"a.b", "0.6"}}));
  EXPECT_EQ(concatenation(FuzzyLanguage::epsilon(a), l), l);
  EXPECT_TRUE(concatenation(FuzzyLanguage::empty(a), l).is_empty());
  const AlphabetPtr other = make_alphabet(event_set({"a"}), {}, {});
  EXPECT_THROW(language_union(l, lang(other, {{"eps", "1"}})), Error);
}

TEST(FuzzyLanguage, Containment) {
  EXPECT_TRUE(is_sublanguage(toy_spec(), toy_plant()));
  EXPECT_FALSE(is_sublanguage(toy_plant(), toy_spec()));
  EXPECT_TRUE(is_sublanguage(FuzzyLanguage::empty(toy_alphabet()), toy_spec()));
}

TEST(FuzzyLanguage, PrefixCloseRepair) {
  const AlphabetPtr a = toy_alphabet();
  EXPECT_EQ(prefix_close_repair(a, {{str("a.b"), gr("0.8")}}),
            lang(a, {{"eps", "1"}, {"a", "0.8"}, {"a.b", "0.8"}}));
  EXPECT_EQ(prefix_close_repair(a, {{str("a"), gr("0.5")}, {str("a.b"), gr("0.7")}}),
            lang(a, {{"eps", "1"}, {"a", "0.7"}, {"a.b", "0.7"}}));
  const FuzzyLanguage l = toy_plant(a);
  EXPECT_EQ(prefix_close_repair(a, FuzzyLanguage::EntryList(l.entries().begin(), l.entries().end())), l);
}
