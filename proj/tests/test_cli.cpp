#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("zzv_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run zzv(const std::string& args) {
  fs::path out = scratch() / "stdout.txt";
  std::string cmd = std::string(ZZV_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

const char* fix_a = "zzf 1\na 0\nd 0\n";
const char* fix_b = "zzf 1\na 0\na 1\na 0 1\nd 0 1\nd 1\nd 0\n";
const char* fix_c = "zzf 1\na 0\na 1\na 0 1\nd 0 1\na 0 1\nd 0 1\nd 1\nd 0\n";
const char* fix_d = "zzf 1\na 0\na 1\na 0 1\nd 0 1\na 2\nd 2\nd 1\nd 0\n";
const char* fix_e = "zzf 1\na 0\na 1\nd 1\na 1\nd 1\nd 0\n";

}  // namespace

TEST_CASE("cli barcode on the fixtures") {
  CHECK(zzv("barcode --in " + write("a.zzf", fix_a).string()).out == "0 1 1\n");
  CHECK(zzv("barcode --in " + write("b.zzf", fix_b).string()).out == "0 1 5\n0 2 2\n0 4 4\n");
  CHECK(zzv("barcode --in " + write("c.zzf", fix_c).string()).out == "0 1 7\n0 2 2\n0 4 4\n0 6 6\n");
  CHECK(zzv("barcode --in " + write("d.zzf", fix_d).string()).out == "0 1 7\n0 2 2\n0 4 6\n0 5 5\n");
  CHECK(zzv("barcode --in " + write("e.zzf", fix_e).string()).out == "0 1 5\n0 2 2\n0 4 4\n");
  // the loop of the parallel edges is a 1-pair of U reported in dimension 0
  CHECK(zzv("barcode --pairs --in " + write("c.zzf", fix_c).string()).out ==
        "0 1 7 | 0 7 CC\n0 2 2 | 1 2 CO\n0 4 4 | 3 4 CC\n0 6 6 | 5 6 OC\n");
}

TEST_CASE("cli convert") {
  auto r = zzv("convert --in " + write("b.zzf", fix_b).string());
  CHECK(r.code == 0);
  CHECK(r.out ==
        "asc 0 dim 0 bnd from 0\nasc 1 dim 0 bnd from 1\nasc 2 dim 1 bnd 0 1 from 2\n"
        "desc 2 from 3\ndesc 1 from 4\ndesc 0 from 5\n");
  auto empty = zzv("convert --in " + write("empty.zzf", "zzf 1\n").string());
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(zzv("convert --in " + write("bad.zzf", "zzf 1\na 0 x\n").string()).code == 2);
  CHECK(zzv("convert --in " + write("illegal.zzf", "zzf 1\nd 0\n").string()).code == 2);
  CHECK(zzv("convert --in " + (scratch() / "missing.zzf").string()).code == 2);
  CHECK(zzv("convert").code == 2);
}

TEST_CASE("cli apply") {
  auto e = write("e.zzf", fix_e);
  auto b = write("b.zzf", fix_b);
  auto r = zzv("apply --validate-each --oracle --in " + e.string() + " --ops " + write("co.zzops", "contract-out 2\n").string());
  CHECK(r.code == 0);
  CHECK(r.out == "0 1 3\n0 2 2\n");

  CHECK(zzv("apply --in " + b.string() + " --ops " + write("bad.zzops", "switch 2\n").string()).code == 3);
  CHECK(zzv("apply --in " + b.string() + " --ops " + write("junk.zzops", "twist 2\n").string()).code == 2);

  auto vine = scratch() / "rt.zzvine";
  auto rt = zzv("apply --in " + b.string() + " --vine " + vine.string() + " --ops " +
                write("rt.zzops", "contract-in 2\nexpand-in 2 0 1\n").string());
  CHECK(rt.code == 0);
  CHECK(rt.out == zzv("barcode --in " + b.string()).out);
  std::string log = slurp(vine);
  CHECK(log.find("step 0 pair ") == 0);
  CHECK(log.find("step 1 pair ") != std::string::npos);
}

TEST_CASE("cli validate and compare-oracle") {
  auto c = write("c.zzf", fix_c);
  auto v = zzv("validate --in " + c.string());
  CHECK(v.code == 0);
  CHECK(v.out.find("ok") == 0);
  auto cmp = zzv("compare-oracle --in " + c.string() + " --ops " + write("sw.zzops", "switch 0\nswitch 6\n").string());
  CHECK(cmp.code == 0);
  CHECK(cmp.out.find("match") == 0);
  CHECK(zzv("compare-oracle --max-m 4 --in " + c.string()).code == 2);
}

TEST_CASE("cli bench") {
  auto empty = zzv("bench --seed 3");
  CHECK(empty.code == 0);
  CHECK(empty.out == "m,op,time_ns,chain_adds\n");
  auto r = zzv("bench --seed 3 --sizes 8,12 --reps 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("\n8,init,") != std::string::npos);
  CHECK(r.out.find("\n12,") != std::string::npos);
  // chain-add columns do not depend on timing
  auto strip = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line)) {
      auto a = line.find(','), b = line.find(',', a + 1), c = line.find(',', b + 1);
      out += line.substr(0, b) + line.substr(c) + "\n";
    }
    return out;
  };
  CHECK(strip(r.out) == strip(zzv("bench --seed 3 --sizes 8,12 --reps 2").out));
}
