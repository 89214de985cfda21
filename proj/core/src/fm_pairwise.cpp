#include "fmpart/fm_pairwise.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace fmpart {

PaddedHypergraph pad_dummy(const Hypergraph& h) {
  PaddedHypergraph out;
  out.original_cell_count = h.cell_count();
  if (h.cell_count() % 2 == 0) {
    out.graph = h;
    return out;
  }
  const auto nets = h.net_lists();
  out.graph = Hypergraph::build(nets, h.cell_count() + 1);
  out.dummy = static_cast<CellId>(h.cell_count());
  return out;
}

int correct_term(const Hypergraph& h, const Partition& p, CellId u, CellId v) {
  if (p.side(u) == p.side(v)) throw std::invalid_argument("correct_term needs cells on opposite blocks");
  const auto nu = h.nets_of(u);
  const auto nv = h.nets_of(v);
  int term = 0;
  auto a = nu.begin();
  auto b = nv.begin();
  while (a != nu.end() && b != nv.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      const NetId n = *a;
      // u and v are on opposite blocks, so n is cut. It is critical when
      // moving either cell alone would uncut it.
      const bool critical = p.pins_in(n, Block::B1) == 1 || p.pins_in(n, Block::B2) == 1;
      if (critical) term += h.pins(n).size() == 2 ? 2 : 1;
      ++a;
      ++b;
    }
  }
  return term;
}

int pair_gain(const Hypergraph& h, const Partition& p, const GainState& gains, CellId u, CellId v) {
  return gains.gain(u) + gains.gain(v) - correct_term(h, p, u, v);
}

PairChoice best_pair(const Hypergraph& h, const Partition& p, const GainState& gains, TiePolicy policy,
                     Rng& rng) {
  const GainBucket& b1 = gains.bucket(Block::B1);
  const GainBucket& b2 = gains.bucket(Block::B2);
  if (b1.empty() || b2.empty()) throw std::logic_error("best_pair needs an unlocked cell in each block");

  GainBucket::Cursor us(b1, policy, rng);
  GainBucket::Cursor vs(b2, policy, rng);
  const int top_v = *b2.max_gain();

  PairChoice best;
  bool have = false;
  std::size_t ties = 0;
  std::size_t evaluations = 0;

  for (std::size_t i = 0;; ++i) {
    const CellId u = us.at(i);
    if (u == GainBucket::kNone) break;
    const int gu = gains.gain(u);
    if (have && gu + top_v <= best.gain) break;
    for (std::size_t j = 0;; ++j) {
      const CellId v = vs.at(j);
      if (v == GainBucket::kNone) break;
      const int bound = gu + gains.gain(v);
      if (have && bound <= best.gain) break;
      const int g = bound - correct_term(h, p, u, v);
      ++evaluations;
      if (!have || g > best.gain) {
        best = PairChoice{u, v, g, 0};
        have = true;
        ties = 1;
      } else if (g == best.gain) {
        ++ties;
        if (policy == TiePolicy::Random) {
          if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng) == 0) best = PairChoice{u, v, g, 0};
        } else if (policy == TiePolicy::Lifo) {
          best = PairChoice{u, v, g, 0};
        }
      }
    }
  }
  best.evaluations = evaluations;
  return best;
}

Partition random_equal_partition(const Hypergraph& h, Rng& rng) {
  if (h.cell_count() % 2 != 0) throw std::invalid_argument("equal partition needs an even cell count");
  std::vector<CellId> order(h.cell_count());
  std::iota(order.begin(), order.end(), CellId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Block> sides(h.cell_count(), Block::B2);
  for (std::size_t i = 0; i < h.cell_count() / 2; ++i) sides[order[i]] = Block::B1;
  return Partition(h, std::move(sides));
}

PassTrace variant_pass(const PaddedHypergraph& ph, Partition& p, const FmConfig& cfg, Rng& rng,
                       const StepObserver& observer) {
  const Hypergraph& h = ph.graph;
  if (p.block_size(Block::B1) != p.block_size(Block::B2)) {
    throw std::invalid_argument("variant pass needs equal block sizes");
  }
  PassTrace trace;
  trace.initial_cut = p.cut_count();
  trace.steps.reserve(ph.cells_per_block());

  GainState gs(h, p);
  std::int64_t cumulative = 0;
  while (gs.unlocked_count() > 0) {
    const PairChoice pick = best_pair(h, p, gs, cfg.tie_policy, rng);
    gs.move_and_update(h, p, pick.u);
    gs.move_and_update(h, p, pick.v);
    cumulative += pick.gain;
    trace.pair_evaluations += pick.evaluations;
    trace.steps.push_back(PassStep{pick.u, pick.v, pick.gain, cumulative, p.cut_count(), true});
    if (observer) observer(gs, p);
  }

  trace.best_prefix = select_best_prefix(trace);
  rollback(h, p, trace);
  return trace;
}

RunResult variant_run_from(const PaddedHypergraph& ph, Partition start, const FmConfig& cfg, Rng& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r;
  r.algorithm = Algorithm::Variant;
  r.seed = cfg.seed;
  r.initial_cut = start.cut_count();
  Partition p = std::move(start);
  for (;;) {
    const PassTrace trace = variant_pass(ph, p, cfg, rng);
    ++r.passes;
    if (trace.best_gain() <= 0) break;
    if (cfg.max_passes && r.passes >= *cfg.max_passes) break;
  }
  r.optimal_cut = p.cut_count();
  r.sides.assign(p.sides().begin(), p.sides().begin() + static_cast<std::ptrdiff_t>(ph.original_cell_count));
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RunResult variant_run(const Hypergraph& h, const FmConfig& cfg) {
  const PaddedHypergraph ph = pad_dummy(h);
  Rng rng(cfg.seed);
  Partition start = random_equal_partition(ph.graph, rng);
  return variant_run_from(ph, std::move(start), cfg, rng);
}

}  // namespace fmpart
