#include "fmpart/pass.hpp"

namespace fmpart {

std::size_t select_best_prefix(const PassTrace& trace) {
  std::size_t best = 0;
  std::size_t best_cut = trace.initial_cut;
  for (std::size_t k = 1; k <= trace.steps.size(); ++k) {
    const PassStep& s = trace.steps[k - 1];
    if (s.balanced && s.cut_after < best_cut) {
      best = k;
      best_cut = s.cut_after;
    }
  }
  return best;
}

void rollback(const Hypergraph& h, Partition& p, const PassTrace& trace) {
  for (std::size_t k = trace.steps.size(); k > trace.best_prefix; --k) {
    const PassStep& s = trace.steps[k - 1];
    if (s.second) p.apply_move(h, *s.second);
    p.apply_move(h, s.first);
  }
}

void replay(const Hypergraph& h, Partition& p, const PassTrace& trace, std::size_t prefix) {
  for (std::size_t k = 0; k < prefix; ++k) {
    const PassStep& s = trace.steps[k];
    p.apply_move(h, s.first);
    if (s.second) p.apply_move(h, *s.second);
  }
}

}  // namespace fmpart
