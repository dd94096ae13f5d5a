// zzv: command-line driver for zigzag barcodes and their updates.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "zzv/bench.hpp"
#include "zzv/updates.hpp"

using namespace zzv;

namespace {

enum Exit { ok = 0, input_error = 2, op_error = 3, mismatch = 4 };

struct Config {
  std::string in, ops, out, vine;
  bool pairs = false, validate_each = false, oracle = false;
  std::uint64_t seed = 1;
  std::size_t max_m = 48;
  std::vector<std::size_t> sizes;
  std::size_t reps = 20;
};

struct input_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ZigzagFiltration load_zzf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_failure("cannot read " + path);
  try {
    ZigzagFiltration f = parse_zzf(in);
    auto rep = validate_filtration(f);
    if (!rep.ok) throw input_failure(path + ": arrow " + std::to_string(rep.arrow) + ": " + rep.reason);
    return f;
  } catch (const rejected_input& e) {
    throw input_failure(path + ": " + e.what());
  }
}

std::vector<UpdateOp> load_ops(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_failure("cannot read " + path);
  try {
    return parse_zzops(in);
  } catch (const rejected_input& e) {
    throw input_failure(path + ": " + e.what());
  }
}

// Writes to the file if one was named, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw input_failure("cannot write " + path);
  out << text;
}

int cmd_convert(const Config& c) {
  UpDownState st = convert(load_zzf(c.in));
  std::ostringstream os;
  write_zzud(os, st);
  emit(c.out, os.str());
  return ok;
}

int cmd_barcode(const Config& c) {
  Bundle b = make_bundle(load_zzf(c.in));
  std::ostringstream os;
  write_zzb(os, b.pairs, b.U, c.pairs);
  emit(c.out, os.str());
  return ok;
}

int cmd_apply(const Config& c) {
  Bundle b = make_bundle(load_zzf(c.in));
  auto ops = c.ops.empty() ? std::vector<UpdateOp>{} : load_ops(c.ops);
  ScriptOptions opt{c.validate_each, c.oracle, c.max_m};
  std::vector<VineRecord> recs;
  try {
    recs = apply_script(b, ops, opt);
  } catch (const oracle_mismatch& e) {
    std::cerr << "step " << e.index << ": " << e.what() << '\n';
    return mismatch;
  } catch (const script_error& e) {
    std::cerr << "step " << e.index << ": " << e.what() << '\n';
    return op_error;
  }
  std::ostringstream os;
  write_zzb(os, b.pairs, b.U, c.pairs);
  emit(c.out, os.str());
  if (!c.vine.empty()) {
    std::ostringstream vs;
    for (std::size_t s = 0; s < recs.size(); ++s) write_vine(vs, s, recs[s]);
    emit(c.vine, vs.str());
  }
  return ok;
}

int cmd_validate(const Config& c) {
  Bundle b = make_bundle(load_zzf(c.in));
  std::string why;
  if (!validate_pairset(b.pairs, b.U, &why)) {
    std::cout << "invalid: " << why << '\n';
    return op_error;
  }
  if (!c.ops.empty()) {
    try {
      apply_script(b, load_ops(c.ops), {true, false, c.max_m});
    } catch (const script_error& e) {
      std::cout << "invalid at step " << e.index << ": " << e.what() << '\n';
      return op_error;
    }
  }
  std::cout << "ok m=" << b.F.m() << " pairs=" << b.pairs.size() << '\n';
  return ok;
}

int cmd_compare(const Config& c) {
  Bundle b = make_bundle(load_zzf(c.in));
  if (!c.ops.empty()) {
    try {
      apply_script(b, load_ops(c.ops), {});
    } catch (const script_error& e) {
      std::cerr << "step " << e.index << ": " << e.what() << '\n';
      return op_error;
    }
  }
  if (b.U.m() > c.max_m) {
    std::cerr << "m=" << b.U.m() << " exceeds --max-m " << c.max_m << '\n';
    return input_error;
  }
  auto got = u_barcode(b.pairs, b.U);
  auto want = ud_barcode_oracle(b.U);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  std::vector<Interval> only_got, only_want;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(only_got));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(only_want));
  for (const auto& i : only_got) std::cout << "pairs-only " << i.dim << ' ' << i.b << ' ' << i.d << '\n';
  for (const auto& i : only_want) std::cout << "oracle-only " << i.dim << ' ' << i.b << ' ' << i.d << '\n';
  if (!only_got.empty() || !only_want.empty()) return mismatch;
  std::cout << "match " << got.size() << " intervals\n";
  return ok;
}

int cmd_bench(const Config& c) {
  BenchConfig bc{c.seed, c.sizes, c.reps, true};
  std::ostringstream os;
  write_bench_csv(os, run_bench(bc));
  emit(c.out, os.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zigzag persistence with dynamic updates"};
  app.require_subcommand(1);
  Config c;

  auto add_in = [&](CLI::App* s) { s->add_option("--in", c.in, "filtration (.zzf)")->required(); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "output file (default stdout)"); };

  auto* conv = app.add_subcommand("convert", "write the up-down listing (.zzud)");
  add_in(conv);
  add_out(conv);

  auto* bar = app.add_subcommand("barcode", "write the barcode (.zzb)");
  add_in(bar);
  add_out(bar);
  bar->add_flag("--pairs", c.pairs, "append creator, destroyer and kind");

  auto* apply = app.add_subcommand("apply", "apply an op script, write barcode and vine log");
  add_in(apply);
  add_out(apply);
  apply->add_option("--ops", c.ops, "op script (.zzops)")->required();
  apply->add_option("--vine", c.vine, "vine log (.zzvine)");
  apply->add_flag("--pairs", c.pairs, "append creator, destroyer and kind");
  apply->add_flag("--validate-each", c.validate_each, "run the validator after every op");
  apply->add_flag("--oracle", c.oracle, "compare with the oracle after every op");
  apply->add_option("--max-m", c.max_m, "largest m checked by the oracle");

  auto* val = app.add_subcommand("validate", "certify the pairing (and a script, if given)");
  add_in(val);
  val->add_option("--ops", c.ops, "op script (.zzops)");

  auto* cmp = app.add_subcommand("compare-oracle", "compare the maintained barcode with the oracle");
  add_in(cmp);
  cmp->add_option("--ops", c.ops, "op script (.zzops)");
  cmp->add_option("--max-m", c.max_m, "refuse larger filtrations");

  auto* bench = app.add_subcommand("bench", "time random ops across sizes (CSV)");
  add_out(bench);
  bench->add_option("--seed", c.seed, "random seed");
  bench->add_option("--sizes", c.sizes, "target m values")->delimiter(',');
  bench->add_option("--reps", c.reps, "samples per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : input_error;
  }

  try {
    if (*conv) return cmd_convert(c);
    if (*bar) return cmd_barcode(c);
    if (*apply) return cmd_apply(c);
    if (*val) return cmd_validate(c);
    if (*cmp) return cmd_compare(c);
    if (*bench) return cmd_bench(c);
  } catch (const input_failure& e) {
    std::cerr << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return op_error;
  }
  return input_error;
}
