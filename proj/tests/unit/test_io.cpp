#include <sstream>

#include <gtest/gtest.h>

#include "altseq/error.hpp"
#include "altseq/io.hpp"

namespace altseq {
namespace {

TEST(RationalText, FormatAndParse) {
  EXPECT_EQ(format_rational(Rational(17, 6)), "17/6");
  EXPECT_EQ(format_rational(Rational(34, 12)), "17/6");
  EXPECT_EQ(format_rational(Rational(-5, 54)), "-5/54");
  EXPECT_EQ(format_rational(Rational(3)), "3");
  EXPECT_EQ(parse_rational("34/12"), Rational(17, 6));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("-0/5"), Rational(0));
  for (const char* bad : {"", "1/0", "a/2", "1/-2", "1.5", "1/2/3", "/3"}) {
    EXPECT_THROW(parse_rational(bad), InvalidArgument) << bad;
  }
}

TEST(RationalText, RoundTripProperty) {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    BigInt num(std::to_string(rng.next()));
    BigInt den(std::to_string(rng.next() | 1));
    if (rng.below(2)) num = -num;
    Rational x(num, den);
    x.canonicalize();
    EXPECT_EQ(parse_rational(format_rational(x)), x);
  }
}

TEST(DistributionJson, Schema) {
  const auto j = to_json(distribution_dp(4));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["type"], "DistributionTable");
  EXPECT_EQ(j["counts"], nlohmann::json::array({"1", "7", "11", "5"}));
  EXPECT_EQ(j["total"], "24");
  EXPECT_EQ(distribution_from_json(j), distribution_dp(4));
  const auto big = distribution_dp(60);
  EXPECT_EQ(distribution_from_json(to_json(big)), big);
  auto broken = j;
  broken["counts"] = nlohmann::json::array({"1", "x", "1", "1"});
  EXPECT_THROW(distribution_from_json(broken), InvalidArgument);
}

TEST(MomentsCsv, HeaderIsStable) {
  const auto h = moments_csv_header(5);
  const std::vector<std::string> expected{"schema_version", "n", "mean", "m2", "m3", "m4", "m5",
                                          "alpha2", "alpha4", "q3", "q5"};
  EXPECT_EQ(h, expected);
}

TEST(MomentsCsv, RoundTripIsExact) {
  std::vector<MomentTable> tables;
  for (const auto& d : distribution_family(40)) tables.push_back(moments_from_table(d, 12));
  std::stringstream buf;
  write_moments_csv(buf, tables, 12);
  const auto back = read_moments_csv(read_csv(buf));
  ASSERT_EQ(back.size(), tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    EXPECT_EQ(back[i].n, tables[i].n);
    EXPECT_EQ(back[i].mean, tables[i].mean);
    EXPECT_EQ(back[i].central, tables[i].central);
    EXPECT_EQ(back[i].std_even, tables[i].std_even);
    EXPECT_EQ(back[i].std_odd_q, tables[i].std_odd_q);
    EXPECT_EQ(back[i].standardized, tables[i].standardized);
  }
}

TEST(MomentsCsv, SampleExtraction) {
  std::stringstream buf;
  buf << "n,alpha4,q3,m2\n1,NA,NA,0\n10,3/1,-1/2,4\n";
  const auto csv = read_csv(buf);
  const auto even = even_samples_from_csv(csv, 2);
  ASSERT_EQ(even.size(), 1u);
  EXPECT_EQ(even[0].n, 10);
  EXPECT_EQ(even[0].alpha, 3);
  const auto odd = odd_samples_from_csv(csv, 1);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].q, Rational(-1, 2));
  EXPECT_EQ(odd[0].m2, 4);
  try {
    even_samples_from_csv(csv, 3);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "missing column 'alpha6'");
  }
}

TEST(Csv, MalformedInput) {
  std::stringstream empty;
  EXPECT_THROW(read_csv(empty), InvalidArgument);
  std::stringstream ragged("a,b\n1\n");
  EXPECT_THROW(read_csv(ragged), InvalidArgument);
  std::stringstream bad_version("schema_version,n,mean,m2,alpha2\n9,2,3/2,1/4,1\n");
  EXPECT_THROW(read_moments_csv(read_csv(bad_version)), InvalidArgument);
}

TEST(HistogramJson, Schema) {
  const auto h = empirical_histogram(3, 10, 5);
  const auto j = to_json(h);
  EXPECT_EQ(j["type"], "EmpiricalHistogram");
  EXPECT_EQ(j["samples"], 10);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["counts"].size(), 3u);
}

}  // namespace
}  // namespace altseq
