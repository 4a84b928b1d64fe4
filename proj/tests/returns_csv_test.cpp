#include <gtest/gtest.h>

#include <sstream>

#include "fracopt/error.hpp"
#include "fracopt/returns_csv.hpp"

namespace fracopt {
namespace {

ReturnsMatrix parse(const std::string& text, ReturnsUnit unit = ReturnsUnit::Decimal,
                    LabelColumn labels = LabelColumn::Auto) {
  std::istringstream in(text);
  return parse_returns_csv(in, unit, labels);
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for input";
  return ErrorKind::DimensionError;
}

const char* kTwoRows = "date,A,B\n1990-07,1.0,2.0\n1990-08,3.0,4.0\n";

TEST(ReturnsCsv, PercentInput) {
  const auto r = parse(kTwoRows, ReturnsUnit::Percent);
  ASSERT_EQ(r.periods(), 2u);
  ASSERT_EQ(r.assets(), 2u);
  EXPECT_DOUBLE_EQ(r.values(0, 0), 0.01);
  EXPECT_DOUBLE_EQ(r.values(0, 1), 0.02);
  EXPECT_DOUBLE_EQ(r.values(1, 0), 0.03);
  EXPECT_DOUBLE_EQ(r.values(1, 1), 0.04);
  EXPECT_EQ(r.asset_labels, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(r.period_labels, (std::vector<std::string>{"1990-07", "1990-08"}));
}

TEST(ReturnsCsv, DecimalPassthrough) {
  const auto r = parse(kTwoRows);
  EXPECT_EQ(r.values, Matrix(2, 2, {1.0, 2.0, 3.0, 4.0}));
}

TEST(ReturnsCsv, WithoutLabelColumn) {
  const auto r = parse("A,B,C\n0.1,0.2,0.3\n0.4,0.5,0.6\n\n");
  EXPECT_EQ(r.assets(), 3u);
  EXPECT_TRUE(r.period_labels.empty());
  EXPECT_DOUBLE_EQ(r.values(1, 2), 0.6);
}

TEST(ReturnsCsv, ExplicitLabelModes) {
  // Numeric period labels need an explicit flag.
  const auto r = parse("t,A\n1,0.5\n2,0.25\n", ReturnsUnit::Decimal, LabelColumn::Present);
  EXPECT_EQ(r.assets(), 1u);
  EXPECT_EQ(r.period_labels, (std::vector<std::string>{"1", "2"}));
  const auto s = parse("t,A\n1,0.5\n2,0.25\n", ReturnsUnit::Decimal, LabelColumn::Absent);
  EXPECT_EQ(s.assets(), 2u);
}

TEST(ReturnsCsv, WhitespaceAndCrlf) {
  const auto r = parse("A , B\r\n 0.1 , 0.2 \r\n0.3,0.4\r\n");
  EXPECT_EQ(r.asset_labels, (std::vector<std::string>{"A", "B"}));
  EXPECT_DOUBLE_EQ(r.values(0, 1), 0.2);
}

TEST(ReturnsCsv, Errors) {
  EXPECT_EQ(kind_of("date,A,B\n"), ErrorKind::InsufficientData);
  EXPECT_EQ(kind_of("A,B\n0.1,0.2\n"), ErrorKind::InsufficientData);
  EXPECT_EQ(kind_of("A,B\n0.1,0.2\n0.3\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("A,B\n0.1,0.2\n0.3,abc\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("A,B\n0.1,0.2\n0.3,nan\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(""), ErrorKind::InsufficientData);
}

TEST(ReturnsCsv, ErrorMessageNamesLine) {
  try {
    parse("A,B\n0.1,0.2\n0.3,x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ReturnsCsv, MissingFile) {
  try {
    load_returns_csv("/nonexistent/returns.csv", ReturnsUnit::Decimal);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

}  // namespace
}  // namespace fracopt
