#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run credfuse(std::vector<std::string> args) {
  args.insert(args.begin(), "credfuse");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = credfusion::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("credfuse_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("fuse builtin evidence") {
  const auto dcr = credfuse({"fuse", "--builtin", "table1", "--method", "dcr"});
  CHECK(dcr.code == 0);
  CHECK(contains(dcr.out, "\"A2\",0.3443"));
  CHECK(contains(dcr.out, "\"A3\",0.6557"));
  CHECK(contains(dcr.out, "decision,A3"));

  const auto icef = credfuse({"fuse", "--builtin", "table1", "--method", "icef-pbagd"});
  CHECK(icef.code == 0);
  CHECK(contains(icef.out, "\"A1\",0.9974"));
  CHECK(contains(icef.out, "m5,0.0009"));

  const auto full = credfuse({"fuse", "--builtin", "table1", "--method", "murphy", "--full-precision"});
  CHECK(contains(full.out, "\"A1\",0.9715"));
  CHECK_FALSE(contains(full.out, "\"A1\",0.9715\n"));

  for (const char* m : {"cef-avg", "cef-eig"}) CHECK(credfuse({"fuse", "--builtin", "table6", "--method", m}).code == 0);
}

TEST_CASE("fuse a document file") {
  const auto path = write_temp("doc.json", R"({"frame": ["p", "q"],
    "evidence": [{"masses": {"p": 0.9, "p,q": 0.1}}, {"masses": {"p": 0.8, "q": 0.2}}], "tau": 50})");
  const auto r = credfuse({"fuse", path, "--method", "icef"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "decision,p"));

  const auto out_path = (std::filesystem::temp_directory_path() / "credfuse_test_out.csv").string();
  CHECK(credfuse({"fuse", path, "--method", "dcr", "--out", out_path}).code == 0);
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(contains(buf.str(), "method,dcr"));
}

TEST_CASE("exit codes") {
  CHECK(credfuse({}).code == credfusion::cli::kUsage);
  CHECK(credfuse({"fuse", "--builtin", "table1", "--method", "bogus"}).code == credfusion::cli::kUsage);
  CHECK(credfuse({"fuse"}).code == credfusion::cli::kUsage);
  CHECK(credfuse({"--help"}).code == credfusion::cli::kOk);

  const auto malformed = write_temp("bad.json", "{\"frame\": [\"a\"], \"evidence\": [");
  const auto r = credfuse({"fuse", malformed});
  CHECK(r.code == credfusion::cli::kParse);
  CHECK(contains(r.err, "error:"));

  const auto conflict = write_temp("conflict.json",
                                   R"({"frame": ["a", "b"], "evidence": [{"masses": {"a": 1}}, {"masses": {"b": 1}}]})");
  CHECK(credfuse({"fuse", conflict, "--method", "dcr"}).code == credfusion::cli::kTotalConflict);

  const auto capped = credfuse({"fuse", "--builtin", "table1", "--max-iter", "2"});
  CHECK(capped.code == credfusion::cli::kNotConverged);
  CHECK(contains(capped.err, "credfuse trace"));

  CHECK(credfuse({"fuse", "--builtin", "table1", "--out", "/nonexistent/dir/out.csv"}).code ==
        credfusion::cli::kOutputError);
  CHECK(credfuse({"bench", "--data", CREDFUSION_IRIS_CSV, "--label", "kind"}).code == credfusion::cli::kSchemaError);
  const auto table = write_temp("table.csv", "a,b,label\n1,x,k\n");
  CHECK(credfuse({"bench", "--data", table, "--label", "label"}).code == credfusion::cli::kParse);
}

TEST_CASE("trace") {
  const auto r = credfuse({"trace", "--builtin", "table1", "--init", "eem"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("step,p_A1,p_A2,p_A3,cred_m1", 0) == 0);
  CHECK(contains(r.out, "\n6,0.9977,0.0017,0.0007,0.2349,0.2874,0.1588,0.3180,0.0009,"));

  const auto single = write_temp("single.json", R"({"frame": ["a", "b"], "evidence": [{"masses": {"a": 0.7, "a,b": 0.3}}]})");
  const auto s = credfuse({"trace", single});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "\n1,0.5000,0.5000,1.0000,"));
  CHECK_FALSE(contains(s.out, "\n2,"));

  CHECK(credfuse({"trace", "--builtin", "table1", "--max-iter", "3"}).code == credfusion::cli::kNotConverged);
}

TEST_CASE("divergence") {
  const auto ex2 = credfuse({"divergence", "--builtin", "example2"});
  CHECK(ex2.code == 0);
  CHECK(contains(ex2.out, "\n1,0.9500,0.0000000000\n"));
  CHECK(contains(ex2.out, "\n10,0.9500,0.0000000000\n"));

  const auto ex3 = credfuse({"divergence", "--builtin", "example3"});
  CHECK(ex3.code == 0);
  CHECK(contains(ex3.out, "\n5,0.0000,"));

  const auto same = credfuse({"divergence", "--builtin", "example4", "--matrix", "edmm"});
  CHECK(same.out == "# EDMM (pbagd)\n,m1,m2\nm1,0.0000,0.0000\nm2,0.0000,0.0000\n");

  const auto eem = credfuse({"divergence", "--builtin", "table1", "--matrix", "eem", "--measure", "bjs"});
  CHECK(eem.out.rfind("# EEM (bjs)\n,m1,m2,m3,m4,m5\nA1,", 0) == 0);
  CHECK(credfuse({"divergence", "--builtin", "example9"}).code == credfusion::cli::kUsage);
}

TEST_CASE("bench and evidence") {
  const auto dir = (std::filesystem::temp_directory_path() / "credfuse_test_bench").string();
  const auto mc = credfuse({"bench", "--data", CREDFUSION_IRIS_CSV, "--label", "species", "--trials", "5", "--out", dir});
  CHECK(mc.code == 0);
  CHECK(contains(mc.out, "Total,icef,"));
  CHECK(std::filesystem::exists(std::filesystem::path(dir) / "montecarlo.csv"));

  const auto again = credfuse({"bench", "--data", CREDFUSION_IRIS_CSV, "--label", "species", "--trials", "5", "--out", dir});
  CHECK(again.out == mc.out);

  const auto sweep = credfuse({"bench", "--data", CREDFUSION_IRIS_CSV, "--label", "species", "--mode", "sweep",
                               "--methods", "dcr,icef"});
  CHECK(sweep.code == 0);
  CHECK(contains(sweep.out, "experiments,51"));
  CHECK(contains(sweep.out, "class,dcr,icef\n"));

  const auto ev = credfuse({"evidence", "--data", CREDFUSION_IRIS_CSV, "--label", "species", "--row", "1"});
  CHECK(ev.code == 0);
  const auto doc_path = write_temp("iris_row.json", ev.out);
  const auto fused = credfuse({"fuse", doc_path, "--method", "murphy"});
  CHECK(fused.code == 0);
  CHECK(contains(fused.out, "decision,Iris-setosa"));
  CHECK(credfuse({"evidence", "--data", CREDFUSION_IRIS_CSV, "--label", "species", "--row", "151"}).code ==
        credfusion::cli::kUsage);
}
