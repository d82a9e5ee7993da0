#include <gtest/gtest.h>

#include <random>

#include "fdes/grade.hpp"

using fdes::ErrorCode;
using fdes::Grade;
using fdes::parse_grade;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_grade(text);
  } catch (const fdes::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST(Grade, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_grade("0.9"), Grade(9, 10));
  EXPECT_EQ(parse_grade("0.40"), Grade(2, 5));
  EXPECT_EQ(parse_grade("1"), Grade::one());
  EXPECT_EQ(parse_grade("1.000"), Grade::one());
  EXPECT_EQ(parse_grade("0"), Grade::zero());
  EXPECT_EQ(parse_grade("00.25"), Grade(1, 4));
  EXPECT_EQ(parse_grade("0.123456789012345678"), Grade(123456789012345678, 1000000000000000000));
}

TEST(Grade, ParsesFractions) {
  EXPECT_EQ(parse_grade("1/3"), Grade(1, 3));
  EXPECT_EQ(parse_grade("2/6"), Grade(1, 3));
  EXPECT_EQ(parse_grade("4/5"), parse_grade("0.8"));
  EXPECT_EQ(parse_grade("0/7"), Grade::zero());
  EXPECT_EQ(parse_grade("7/7"), Grade::one());
}

TEST(Grade, RejectsBadLiterals) {
  EXPECT_EQ(code_of(""), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("abc"), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("-0.5"), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of(".5"), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("0."), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("1/0"), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("0.5e1"), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("0.1234567890123456789"), ErrorCode::MalformedGrade);
  EXPECT_EQ(code_of("1.5"), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of("2"), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of("4/3"), ErrorCode::OutOfRange);
  EXPECT_THROW(Grade(3, 2), fdes::Error);
  EXPECT_THROW(Grade(-1, 2), fdes::Error);
}

TEST(Grade, RendersShortestExactForm) {
  EXPECT_EQ(Grade(4, 5).to_string(), "0.8");
  EXPECT_EQ(Grade(1, 3).to_string(), "1/3");
  EXPECT_EQ(Grade(1, 8).to_string(), "0.125");
  EXPECT_EQ(Grade(3, 40).to_string(), "0.075");
  EXPECT_EQ(Grade(2, 7).to_string(), "2/7");
  EXPECT_EQ(Grade::zero().to_string(), "0");
  EXPECT_EQ(Grade::one().to_string(), "1");
}

TEST(Grade, MeetAndJoin) {
  EXPECT_EQ(fdes::meet(parse_grade("0.9"), parse_grade("0.8")), parse_grade("0.8"));
  EXPECT_EQ(fdes::join(parse_grade("0.7"), Grade::zero()), parse_grade("0.7"));
  EXPECT_EQ(fdes::meet(parse_grade("0.4"), parse_grade("0.4")), parse_grade("0.4"));
  EXPECT_LT(Grade(1, 3), Grade(1, 2));
  EXPECT_LT(Grade(333333333333333333, 1000000000000000000), Grade(1, 3));
}

TEST(Grade, LatticeLawsAndRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  const auto random_grade = [&] {
    const std::int64_t q = den(rng);
    return Grade(std::uniform_int_distribution<std::int64_t>(0, q)(rng), q);
  };
  for (int i = 0; i < 2000; ++i) {
    const Grade a = random_grade(), b = random_grade(), c = random_grade();
    EXPECT_EQ(fdes::meet(a, fdes::join(a, b)), a);
    EXPECT_EQ(fdes::join(a, fdes::meet(a, b)), a);
    EXPECT_EQ(fdes::meet(a, fdes::join(b, c)), fdes::join(fdes::meet(a, b), fdes::meet(a, c)));
    EXPECT_EQ(fdes::meet(a, b), fdes::meet(b, a));
    EXPECT_EQ(fdes::join(fdes::join(a, b), c), fdes::join(a, fdes::join(b, c)));
    EXPECT_EQ(parse_grade(a.to_string()), a) << a.to_string();
  }
}
