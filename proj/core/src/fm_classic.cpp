#include "fmpart/fm_classic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace fmpart {

Partition random_initial_partition(const Hypergraph& h, Rng& rng) {
  std::vector<CellId> order(h.cell_count());
  std::iota(order.begin(), order.end(), CellId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Block> sides(h.cell_count(), Block::B2);
  const std::size_t first = (h.cell_count() + 1) / 2;
  for (std::size_t i = 0; i < first; ++i) sides[order[i]] = Block::B1;
  return Partition(h, std::move(sides));
}

namespace {

Block choose_block(const GainState& gs, const Partition& p) {
  const auto g1 = gs.bucket(Block::B1).max_gain();
  const auto g2 = gs.bucket(Block::B2).max_gain();
  const std::size_t s1 = p.block_size(Block::B1);
  const std::size_t s2 = p.block_size(Block::B2);

  // An empty bucket compares below every gain.
  const bool g1_dominates = g1 && (!g2 || *g1 >= *g2);
  Block pick;
  if (g1_dominates && s1 >= s2) pick = Block::B1;
  else if (s2 >= s1) pick = Block::B2;
  else pick = Block::B1;

  if (gs.bucket(pick).empty()) pick = other(pick);
  return pick;
}

}  // namespace

PassTrace fm_pass(const Hypergraph& h, Partition& p, const FmConfig& cfg, Rng& rng,
                  const StepObserver& observer) {
  PassTrace trace;
  trace.initial_cut = p.cut_count();
  trace.steps.reserve(h.cell_count());

  GainState gs(h, p);
  std::int64_t cumulative = 0;
  while (gs.unlocked_count() > 0) {
    const Block from = choose_block(gs, p);
    const CellId c = *gs.select_max(from, cfg.tie_policy, rng);
    const int g = gs.gain(c);
    gs.move_and_update(h, p, c);
    cumulative += g;
    trace.steps.push_back(PassStep{c, std::nullopt, g, cumulative, p.cut_count(), p.balanced()});
    if (observer) observer(gs, p);
  }

  trace.best_prefix = select_best_prefix(trace);
  rollback(h, p, trace);
  return trace;
}

RunResult fm_run_from(const Hypergraph& h, Partition start, const FmConfig& cfg, Rng& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r;
  r.algorithm = Algorithm::Fm;
  r.seed = cfg.seed;
  r.initial_cut = start.cut_count();
  Partition p = std::move(start);
  for (;;) {
    const PassTrace trace = fm_pass(h, p, cfg, rng);
    ++r.passes;
    if (trace.best_gain() <= 0) break;
    if (cfg.max_passes && r.passes >= *cfg.max_passes) break;
  }
  r.optimal_cut = p.cut_count();
  r.sides.assign(p.sides().begin(), p.sides().end());
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RunResult fm_run(const Hypergraph& h, const FmConfig& cfg) {
  Rng rng(cfg.seed);
  Partition start = random_initial_partition(h, rng);
  return fm_run_from(h, std::move(start), cfg, rng);
}

}  // namespace fmpart
