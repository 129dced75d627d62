#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli_app.hpp"

using alcove_cells::cli::Json;
using alcove_cells::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

bool is_int_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!x.is_number_integer()) return false;
  return true;
}

bool is_root(const Json& j) { return is_int_array(j) && j.size() == 2 && j[0].get<int>() < j[1].get<int>(); }

bool is_root_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& r : j)
    if (!is_root(r)) return false;
  return true;
}

/// Schema of the cell document.
void expect_cell_schema(const Json& d) {
  const std::vector<std::string> keys{"n", "p", "input", "gamma", "good_bases", "s", "cell", "orbit_dim", "backing"};
  std::vector<std::string> got;
  for (const auto& [k, v] : d.items()) got.push_back(k);
  EXPECT_EQ(got, keys);
  EXPECT_TRUE(d["n"].is_number_integer());
  EXPECT_TRUE(d["p"].is_number_integer());
  ASSERT_TRUE(d["input"].is_object());
  ASSERT_EQ(d["input"].size(), 1u);
  if (d["input"].contains("weight")) {
    EXPECT_TRUE(is_int_array(d["input"]["weight"]));
  } else {
    ASSERT_TRUE(d["input"].contains("shifted"));
    for (const auto& x : d["input"]["shifted"]) EXPECT_TRUE(x.is_string());
  }
  EXPECT_TRUE(is_root_list(d["gamma"]));
  ASSERT_TRUE(d["good_bases"].is_array());
  for (const auto& b : d["good_bases"]) EXPECT_TRUE(is_root_list(b));
  EXPECT_TRUE(is_int_array(d["s"]));
  EXPECT_TRUE(is_int_array(d["cell"]));
  EXPECT_TRUE(d["orbit_dim"].is_number_integer());
  EXPECT_TRUE(d["backing"] == "theorem" || d["backing"] == "conjecture");
}

}  // namespace

TEST(CliCell, ShiftedSteinbergPointIsInTheZeroCell) {
  const auto d = json_of({"cell", "--n", "2", "--p", "5", "--weight", "5,5"});
  expect_cell_schema(d);
  EXPECT_EQ(d["s"], Json::array({3}));
  EXPECT_EQ(d["cell"], Json::array({1, 1, 1}));
  EXPECT_EQ(d["orbit_dim"], 0);
  EXPECT_EQ(d["backing"], "theorem");
  EXPECT_EQ(d["input"]["weight"], Json::array({5, 5}));
  const auto human = run({"cell", "--n", "2", "--p", "5", "--weight", "5,5"});
  EXPECT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("theorem-backed"), std::string::npos);
}

TEST(CliCell, OtherExamples) {
  const auto d = json_of({"cell", "--n", "2", "--p", "5", "--weight", "13,1"});
  expect_cell_schema(d);
  EXPECT_EQ(d["s"], Json::array({2, 1}));
  EXPECT_EQ(d["cell"], Json::array({2, 1}));
  EXPECT_EQ(d["good_bases"], Json::parse("[[[1,2]],[[1,3]]]"));
  const auto e = json_of({"cell", "--n", "2", "--p", "3", "--weight", "0,0"});
  EXPECT_EQ(e["cell"], Json::array({3}));
  EXPECT_EQ(e["backing"], "conjecture");
  const auto f = json_of({"cell", "--n", "2", "--p", "5", "--shifted", "6,6"});
  expect_cell_schema(f);
  EXPECT_EQ(f["input"]["shifted"], Json::array({"6", "6"}));
}

TEST(CliCell, Errors) {
  auto r = run({"cell", "--n", "2", "--p", "5", "--weight", "5,x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("entry 2"), std::string::npos);
  r = run({"cell", "--n", "2", "--p", "5", "--shifted", "1/0,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("entry 1"), std::string::npos);
  EXPECT_EQ(run({"cell", "--n", "2", "--p", "5", "--weight", "-1,3"}).code, 2);
  EXPECT_EQ(run({"cell", "--n", "2", "--p", "5", "--weight", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"cell", "--n", "2", "--p", "5"}).code, 2);
  EXPECT_EQ(run({"cell", "--n", "2", "--p", "5", "--weight", "1,1", "--shifted", "1,1"}).code, 2);
  EXPECT_EQ(run({"cell", "--p", "5", "--weight", "1,1"}).code, 2);
  EXPECT_EQ(run({"cell", "--n", "2", "--p", "5", "--weight", "1,1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliAlcove, Examples) {
  const auto a = json_of({"alcove", "--n", "2", "--p", "5", "--shifted", "9/2,1/2"});
  EXPECT_EQ(a["alcove"], Json::array({1, 2, 1}));
  EXPECT_EQ(a["walls"], Json::parse("[[1,3]]"));
  EXPECT_EQ(a["point"], Json::array({"9/2", "1/2"}));
  const auto b = json_of({"alcove", "--n", "2", "--p", "5", "--shifted", "5,5"});
  EXPECT_EQ(b["walls"].size(), 3u);
  EXPECT_EQ(b["stabilizer_system"], Json::parse("[[1,2],[1,3],[2,3]]"));
  EXPECT_EQ(b["d"], Json::array({3}));
  const auto c = json_of({"alcove", "--n", "2", "--p", "5", "--weight", "1,1"});
  EXPECT_EQ(c["alcove"], Json::array({1, 1, 1}));
  EXPECT_TRUE(c["walls"].empty());
  const auto human = run({"alcove", "--n", "2", "--p", "5", "--weight", "1,1"});
  EXPECT_NE(human.out.find("(1,2) (1,3) (2,3)"), std::string::npos);
}

TEST(CliVerify, Examples) {
  const auto a = json_of({"verify", "--n", "2", "--p", "5", "good-sup", "--box", "10"});
  EXPECT_TRUE(a["passed"].get<bool>());
  EXPECT_GE(a["cases"].get<int>(), 100);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "5", "weak-order", "--index-bound", "3"}).code, 0);
  const auto m = json_of({"verify", "--n", "2", "--p", "5", "mu", "--box", "10"});
  EXPECT_TRUE(m["passed"].get<bool>());
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "3", "all"}).code, 0);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "5", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "2", "lattice"}).code, 2);
  const auto s = json_of({"verify", "--n", "3", "--p", "7", "mu", "--samples", "20", "--seed", "5"});
  EXPECT_EQ(s["cases"].get<int>() > 0, true);
}

TEST(CliVerify, BoundPrecedence) {
  // weak-order search with a tiny cap fails through the resource limit
  ::setenv("ALCOVE_CELLS_BFS_BOUND", "1", 1);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "5", "weak-order"}).code, 1);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "5", "weak-order", "--bfs-bound", "100000"}).code, 0);
  ::setenv("ALCOVE_CELLS_BFS_BOUND", "abc", 1);
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "5", "weak-order"}).code, 2);
  ::unsetenv("ALCOVE_CELLS_BFS_BOUND");
  EXPECT_EQ(run({"verify", "--n", "2", "--p", "5", "weak-order"}).code, 0);
}

TEST(CliAtlas, TilesTheBox) {
  const auto d = json_of({"atlas", "--n", "2", "--p", "5", "--box", "7"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : d["cells"].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"3", "2,1", "1,1,1"}));
  std::set<std::vector<int>> seen;
  std::size_t total = 0;
  for (const auto& [k, v] : d["cells"].items()) {
    EXPECT_EQ(v["count"].get<std::size_t>(), v["weights"].size());
    total += v["weights"].size();
    for (const auto& w : v["weights"]) seen.insert(w.get<std::vector<int>>());
  }
  EXPECT_EQ(total, 49u);
  EXPECT_EQ(seen.size(), 49u);
  EXPECT_EQ(d["cells"]["1,1,1"]["orbit_dim"], 0);
  EXPECT_EQ(d["cells"]["3"]["orbit_dim"], 6);
}

TEST(CliAtlas, RankOneAndEmptyBox) {
  const auto d = json_of({"atlas", "--n", "1", "--p", "2", "--box", "4"});
  EXPECT_EQ(d["cells"]["2"]["weights"], Json::parse("[[0]]"));
  EXPECT_EQ(d["cells"]["1,1"]["weights"], Json::parse("[[1],[2],[3]]"));
  EXPECT_EQ(run({"atlas", "--n", "2", "--p", "5", "--box", "0"}).code, 2);
}

TEST(CliCertificate, Examples) {
  const auto d = json_of({"certificate", "--n", "2", "--p", "5", "--weight", "5,5"});
  EXPECT_EQ(d["legs"].size(), 5u);
  EXPECT_EQ(d["s"], Json::array({3}));
  bool saw_fraction = false;
  for (const auto& leg : d["legs"]) {
    for (const auto& x : leg["mu"]) {
      ASSERT_TRUE(x.is_string());
      if (x.get<std::string>().find('/') != std::string::npos) saw_fraction = true;
    }
    EXPECT_TRUE(is_int_array(leg["mu_prime"]));
    EXPECT_TRUE(is_int_array(leg["mu_alcove"]));
  }
  EXPECT_TRUE(saw_fraction);
  EXPECT_EQ(d["alcove"], Json::array({2, 3, 2}));
  EXPECT_EQ(json_of({"certificate", "--n", "2", "--p", "5", "--weight", "1,1"})["legs"].size(), 1u);
  const auto r = run({"certificate", "--n", "2", "--p", "2", "--weight", "1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("requires p >= n+1"), std::string::npos);
}

TEST(CliDocuments, RoundTripAndDeterminism) {
  const std::vector<std::vector<std::string>> commands{
      {"cell", "--n", "3", "--p", "5", "--weight", "4,0,6"},
      {"alcove", "--n", "3", "--p", "5", "--shifted", "7/3,1,9"},
      {"verify", "--n", "2", "--p", "3", "reduction"},
      {"atlas", "--n", "2", "--p", "3", "--box", "4"},
      {"certificate", "--n", "3", "--p", "5", "--weight", "4,0,6"},
  };
  for (auto args : commands) {
    for (const char* format : {"json", "csv", "human"}) {
      auto with = args;
      with.push_back("--format");
      with.push_back(format);
      const auto first = run(with);
      const auto second = run(with);
      ASSERT_EQ(first.code, 0) << first.err;
      EXPECT_EQ(first.out, second.out);
      if (std::string(format) == "json") {
        const auto doc = Json::parse(first.out);
        EXPECT_EQ(Json::parse(doc.dump()), doc);
        EXPECT_EQ(doc.dump(2) + "\n", first.out);
        if (args[0] == "cell") expect_cell_schema(doc);
      }
    }
  }
}
