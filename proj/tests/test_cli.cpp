#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using ncspec::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ncspec::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// (type, value-or-sum, product, mult) from each format.
using Entry = std::tuple<std::string, std::string, std::string, std::string>;

std::vector<Entry> entries_from_json(const Json& rec) {
  std::vector<Entry> out;
  for (const auto& e : rec["spectrum"]) {
    if (e["type"] == "integer")
      out.emplace_back("integer", e["value"], "", std::to_string(e["mult"].get<long>()));
    else
      out.emplace_back("quadratic", e["sum"], e["product"], std::to_string(e["mult"].get<long>()));
  }
  return out;
}

}  // namespace

TEST(CliSpectrum, QuaternionLaplacianJson) {
  auto r = run({"spectrum", "--group", "q4n", "--n", "2", "--matrix", "dl", "--method", "closed", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json rec = Json::parse(r.out);
  EXPECT_EQ(rec["family"], "q4n");
  EXPECT_EQ(rec["params"]["n"], 2);
  EXPECT_EQ(rec["order"], 6);
  EXPECT_EQ(rec["integral"], true);
  EXPECT_EQ(entries_from_json(rec), (std::vector<Entry>{{"integer", "0", "", "1"},
                                                         {"integer", "6", "", "2"},
                                                         {"integer", "8", "", "3"}}));
}

TEST(CliSpectrum, U6DistanceText) {
  auto r = run({"spectrum", "--group", "u6n", "--n", "1", "--matrix", "d", "--method", "closed"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("integer    -2"), std::string::npos);
  EXPECT_NE(r.out.find("integer    -1"), std::string::npos);
  EXPECT_NE(r.out.find("quadratic  sum 4 product -2"), std::string::npos);
  EXPECT_NE(r.out.find("integral: no"), std::string::npos);
}

TEST(CliSpectrum, OracleMetacyclicM8EqualsOctahedron) {
  auto m8 = run({"spectrum", "--group", "metacyclic", "--m", "4", "--n", "1", "--matrix", "dq", "--method", "oracle",
                 "--charpoly", "--format", "json"});
  auto q8 = run({"spectrum", "--group", "q4n", "--n", "2", "--matrix", "dq", "--method", "oracle", "--charpoly",
                 "--format", "json"});
  ASSERT_EQ(m8.code, 0) << m8.err;
  ASSERT_EQ(q8.code, 0) << q8.err;
  EXPECT_EQ(Json::parse(m8.out)["charpoly"], Json::parse(q8.out)["charpoly"]);
  EXPECT_EQ(Json::parse(m8.out)["factored"], true);
}

TEST(CliSpectrum, JsonRoundTripsByteIdentically) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"spectrum", "--group", "qd", "--n", "6", "--matrix", "dq", "--charpoly", "--format", "json"},
           {"spectrum", "--group", "u6n", "--n", "7", "--matrix", "d", "--method", "oracle", "--format", "json"},
           {"verify", "--group", "qd", "--n-range", "4..5", "--matrix", "all", "--charpoly", "--format", "json"},
           {"search-integral", "--group", "q4n", "--matrix", "d", "--max-n", "100", "--format", "json"}}) {
    auto r = run(args);
    ASSERT_LE(r.code, 1) << r.err;
    for (const auto& line : lines(r.out)) EXPECT_EQ(Json::parse(line).dump(), line);
  }
}

TEST(CliSpectrum, BigCoefficientsAreDecimalStrings) {
  auto r = run({"spectrum", "--group", "qd", "--n", "6", "--matrix", "dq", "--charpoly", "--format", "json"});
  Json rec = Json::parse(r.out);
  for (const auto& c : rec["charpoly"]) EXPECT_TRUE(c.is_string());
  EXPECT_GT(rec["charpoly"][0].get<std::string>().size(), 20u);
}

TEST(CliSpectrum, FormatsCarryIdenticalContent) {
  std::vector<std::string> base = {"spectrum", "--group", "metacyclic", "--m", "7", "--n", "2",
                                   "--matrix", "dq",       "--charpoly"};
  auto with = [&](const std::string& f) {
    auto a = base;
    a.insert(a.end(), {"--format", f});
    return run(a);
  };
  Json rec = Json::parse(with("json").out);
  auto expected = entries_from_json(rec);
  std::vector<std::string> coeffs;
  for (const auto& c : rec["charpoly"]) coeffs.push_back(c);

  auto csv = lines(with("csv").out);
  ASSERT_FALSE(csv.empty());
  EXPECT_EQ(csv[0], "family,m,n,matrix,order,integral,type,value,sum,product,mult,degree");
  std::vector<Entry> from_csv;
  std::vector<std::string> csv_coeffs;
  for (std::size_t i = 1; i < csv.size(); ++i) {
    auto f = split(csv[i]);
    ASSERT_EQ(f.size(), 12u);
    EXPECT_EQ(f[4], std::to_string(rec["order"].get<long>()));
    if (f[6] == "coefficient")
      csv_coeffs.push_back(f[7]);
    else
      from_csv.emplace_back(f[6], f[6] == "integer" ? f[7] : f[8], f[9], f[10]);
  }
  EXPECT_EQ(from_csv, expected);
  EXPECT_EQ(csv_coeffs, coeffs);

  std::string text = with("text").out;
  for (const auto& [type, a, b, mult] : expected) {
    std::string needle = type == "integer" ? "integer    " + a : "quadratic  sum " + a + " product " + b;
    EXPECT_NE(text.find(needle), std::string::npos) << needle;
  }
  std::string joined;
  for (std::size_t i = 0; i < coeffs.size(); ++i) joined += (i ? " " : "") + coeffs[i];
  EXPECT_NE(text.find("charpoly (ascending): " + joined), std::string::npos);
}

TEST(CliSpectrum, UsageErrors) {
  auto r = run({"spectrum", "--group", "q4n", "--n", "1", "--matrix", "d"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n >= 2"), std::string::npos);
  r = run({"spectrum", "--group", "metacyclic", "--n", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--m"), std::string::npos);
  r = run({"spectrum", "--group", "metacyclic", "--m", "2", "--n", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("m > 2"), std::string::npos);
  EXPECT_EQ(run({"spectrum", "--group", "abelian", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--group", "q4n", "--n", "2", "--matrix", "adj"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--group", "q4n", "--n", "2", "--m", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliSpectrum, OracleOrderCapIsAUsageError) {
  auto r = run({"spectrum", "--group", "qd", "--n", "8", "--matrix", "d", "--method", "oracle"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("150"), std::string::npos);
}

TEST(CliSpectrum, WritesToFile) {
  auto path = std::filesystem::temp_directory_path() / "ncspec_cli_test.json";
  auto r = run({"spectrum", "--group", "q4n", "--n", "3", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(Json::parse(line)["params"]["n"], 3);
  std::filesystem::remove(path);
}

TEST(CliVerify, QuaternionGridAllMatch) {
  auto r = run({"verify", "--group", "q4n", "--n-range", "2..12", "--matrix", "all"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("33 matched, 0 mismatched"), std::string::npos);
}

TEST(CliVerify, QuasidihedralSignlessReportsResidual) {
  auto r = run({"verify", "--group", "qd", "--n-range", "4..7", "--matrix", "dq", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  for (const auto& l : ls) {
    Json rec = Json::parse(l);
    EXPECT_EQ(rec["status"], "mismatch");
    EXPECT_EQ(rec["residual"].size(), 3u);
    EXPECT_FALSE(rec["unmatched"].empty());
  }
  EXPECT_NE(r.err.find("4 mismatched"), std::string::npos);
}

TEST(CliVerify, CsvHasOneRowPerInstance) {
  auto r = run({"verify", "--group", "metacyclic", "--n-range", "1..2", "--m-range", "3..4", "--matrix", "all",
                "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 4u * 3u);
  EXPECT_EQ(split(ls[0])[0], "family");
}

TEST(CliVerify, UsageErrors) {
  auto r = run({"verify", "--group", "q4n", "--n-range", "0..1", "--matrix", "d"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n >= 2"), std::string::npos);
  EXPECT_EQ(run({"verify", "--group", "q4n", "--n-range", "5..3"}).code, 2);
  EXPECT_EQ(run({"verify", "--group", "q4n", "--n-range", "a..3"}).code, 2);
  EXPECT_EQ(run({"verify", "--group", "q4n"}).code, 2);
}

TEST(CliVerify, SkippedInstancesDoNotFail) {
  auto r = run({"verify", "--group", "qd", "--n-range", "8", "--matrix", "d"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped"), std::string::npos);
}

TEST(CliSearch, QuaternionDistanceCsv) {
  auto r = run({"search-integral", "--group", "q4n", "--matrix", "d", "--max-n", "1000", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 5u);
  EXPECT_EQ(ls[0], "family,m,n,matrix,witness");
  EXPECT_EQ(ls[1], "q4n,,2,d,3");
  EXPECT_EQ(split(ls[2])[2], "4");
  EXPECT_EQ(split(ls[3])[2], "9");
  EXPECT_EQ(split(ls[4])[2], "22");
}

TEST(CliSearch, U6nDistanceIsEmpty) {
  auto r = run({"search-integral", "--group", "u6n", "--matrix", "d", "--max-n", "100", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 1u);
}

TEST(CliSearch, U6nSignlessIsEveryN) {
  auto r = run({"search-integral", "--group", "u6n", "--matrix", "dq", "--max-n", "5", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 5u);
  for (std::size_t i = 0; i < ls.size(); ++i) EXPECT_EQ(Json::parse(ls[i])["params"]["n"], i + 1);
}

TEST(CliSearch, UsageErrors) {
  EXPECT_EQ(run({"search-integral", "--group", "q4n", "--matrix", "d"}).code, 2);
  EXPECT_EQ(run({"search-integral", "--group", "q4n", "--matrix", "d", "--max-n", "1"}).code, 2);
  EXPECT_EQ(run({"search-integral", "--group", "qd", "--matrix", "d", "--max-n", "70"}).code, 2);
}

TEST(CliSearch, SufficientConditionMissesAreWarningsOnly) {
  auto r = run({"search-integral", "--group", "q4n", "--matrix", "dq", "--max-n", "30", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  std::vector<std::string> ns;
  for (const auto& l : lines(r.out)) ns.push_back(split(l)[2]);
  EXPECT_EQ(ns, (std::vector<std::string>{"n", "2", "3", "6", "11", "28"}));
  EXPECT_NE(r.err.find("warning: q4n n=3 dq"), std::string::npos);
}
