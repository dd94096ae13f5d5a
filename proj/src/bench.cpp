#include "zzv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "zzv/random.hpp"

namespace zzv {

namespace {

using Clock = std::chrono::steady_clock;

std::string row_name(const UpdateOp& op, const ZigzagFiltration& f) {
  if (op.kind != OpKind::switch_arrows) return op_name(op.kind);
  SwitchKind k = classify_switch(f, op.pos);
  return k == SwitchKind::forward || k == SwitchKind::backward ? "switch-updown" : "switch-mixed";
}

RandomFiltrationParams params_for(std::size_t m) {
  RandomFiltrationParams p;
  p.additions = m / 2;
  p.vertices = std::max<std::size_t>(6, m / 8);
  return p;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(cfg.seed);
  const OpKind kinds[] = {OpKind::switch_arrows, OpKind::expand_in, OpKind::contract_in, OpKind::expand_out,
                          OpKind::contract_out};
  for (std::size_t m : cfg.sizes) {
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      auto p = params_for(m);
      ZigzagFiltration f = random_filtration(rng, p);
      reset_chain_adds();
      auto t0 = Clock::now();
      Bundle base = make_bundle(f);
      auto t1 = Clock::now();
      if (cfg.with_init)
        rows.push_back({m, "init", static_cast<std::uint64_t>((t1 - t0).count()), chain_adds()});

      // expansions start two arrows short so the result has size m
      auto q = params_for(m - 2);
      Bundle small = make_bundle(random_filtration(rng, q));
      for (OpKind k : kinds) {
        bool grows = k == OpKind::expand_in || k == OpKind::expand_out;
        const Bundle& src = grows ? small : base;
        // switches: draw one of each flavour when available
        int draws = k == OpKind::switch_arrows ? 4 : 1;
        for (int d = 0; d < draws; ++d) {
          auto op = random_op(rng, src.F, p.vertices, p.max_dim, src.F.m() + 2, k);
          if (!op) continue;
          Bundle b = src;
          std::string name = row_name(*op, b.F);
          reset_chain_adds();
          auto s0 = Clock::now();
          apply_op(b, *op);
          auto s1 = Clock::now();
          std::uint64_t adds = chain_adds();
          auto ns = static_cast<std::uint64_t>((s1 - s0).count());
          if (k == OpKind::switch_arrows) {
            // a switch undoes itself; average over a batch to get above timer noise
            constexpr int batch = 32;
            auto b0 = Clock::now();
            for (int rep = 0; rep < batch; ++rep) apply_op(b, *op);
            ns = static_cast<std::uint64_t>((Clock::now() - b0).count()) / batch;
          }
          rows.push_back({m, name, ns, adds});
        }
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "m,op,time_ns,chain_adds\n";
  for (const auto& r : rows) out << r.m << ',' << r.op << ',' << r.time_ns << ',' << r.chain_adds << '\n';
}

namespace {

template <class Get>
std::vector<double> pick_rows(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op, Get get) {
  std::vector<double> v;
  for (const auto& r : rows)
    if (r.m == m && r.op == op) v.push_back(get(r));
  return v;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace

double median_time(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op) {
  return median(pick_rows(rows, m, op, [](const BenchRow& r) { return double(r.time_ns); }));
}

double median_adds(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op) {
  return median(pick_rows(rows, m, op, [](const BenchRow& r) { return double(r.chain_adds); }));
}

std::uint64_t max_adds(const std::vector<BenchRow>& rows, std::size_t m, const std::string& op) {
  std::uint64_t best = 0;
  for (const auto& r : rows)
    if (r.m == m && r.op == op) best = std::max(best, r.chain_adds);
  return best;
}

}  // namespace zzv
