#include "wdom/dom_params.hpp"

#include <cmath>
#include <stdexcept>

namespace wdom {

DomParams init_params(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("init_params: weight must be positive and finite");
  }
  ExtWeight weight(w);
  return DomParams{ExtWeight(0.0), weight, ExtWeight::infinity(), weight};
}

DomParams combine_edge(const DomParams& parent, const DomParams& child, OpCounter& counter,
                       MinTrace* trace) {
  DomParams out;
  out.g00 = counter.add(parent.g00, child.g);
  MinPick child_best = counter.argmin(child.g1, child.g00);
  out.g1 = counter.add(parent.g1, child_best.value);
  MinPick zero = counter.argmin(counter.add(parent.g0, child.g), counter.add(parent.g00, child.g1));
  out.g0 = zero.value;
  MinPick best = counter.argmin(out.g1, out.g0);
  out.g = best.value;
  if (trace) {
    trace->record(0, child_best.second);
    trace->record(1, zero.second);
    trace->record(2, best.second);
  }
  return out;
}

DomParams merge_at_vertex(const DomParams& p1, const DomParams& p2, double w0, OpCounter& counter,
                          MinTrace* trace) {
  DomParams out;
  out.g00 = counter.add(p1.g00, p2.g00);
  out.g1 = counter.subtract(counter.add(p1.g1, p2.g1), w0);
  MinPick zero = counter.argmin(counter.add(p1.g0, p2.g00), counter.add(p1.g00, p2.g0));
  out.g0 = zero.value;
  MinPick best = counter.argmin(out.g1, out.g0);
  out.g = best.value;
  if (trace) {
    trace->record(0, zero.second);
    trace->record(1, best.second);
  }
  return out;
}

DomParams combine_forced(const DomParams& next, const DomParams& forced, OpCounter& counter,
                         MinTrace* trace) {
  DomParams out;
  out.g00 = counter.add(next.g00, forced.g1);
  out.g1 = counter.add(next.g1, forced.g1);
  out.g0 = counter.add(next.g00, forced.g1);
  MinPick best = counter.argmin(out.g1, out.g0);
  out.g = best.value;
  if (trace) trace->record(0, best.second);
  return out;
}

namespace {

// Folds chain[first], chain[first-1], ..., chain[0] in that order onto an
// accumulated head, so the result is rooted at chain[0].
DomParams fold_down(std::span<const DomParams> chain, std::size_t first, DomParams head,
                    OpCounter& counter, std::vector<MinTrace>* trace) {
  for (std::size_t i = first + 1; i-- > 0;) {
    MinTrace t;
    head = combine_edge(chain[i], head, counter, trace ? &t : nullptr);
    if (trace) trace->push_back(t);
  }
  return head;
}

}  // namespace

DomParams path_like_fold(std::span<const DomParams> chain, OpCounter& counter,
                         std::vector<MinTrace>* trace) {
  if (chain.empty()) throw std::invalid_argument("path_like_fold: empty chain");
  DomParams head = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) {
    MinTrace t;
    head = combine_edge(chain[i], head, counter, trace ? &t : nullptr);
    if (trace) trace->push_back(t);
  }
  return head;
}

DomParams d_closed_path_like_fold(std::span<const DomParams> chain, OpCounter& counter,
                                  std::vector<MinTrace>* trace) {
  if (chain.size() < 2) throw std::invalid_argument("d_closed_path_like_fold: chain shorter than 2");
  MinTrace t;
  DomParams head = combine_forced(chain[1], chain[0], counter, trace ? &t : nullptr);
  if (trace) trace->push_back(t);
  for (std::size_t i = 2; i < chain.size(); ++i) {
    MinTrace step;
    head = combine_edge(chain[i], head, counter, trace ? &step : nullptr);
    if (trace) trace->push_back(step);
  }
  return head;
}

DomParams cycle_like(std::span<const DomParams> chain, double root_weight, OpCounter& counter,
                     CycleTrace* trace) {
  if (chain.size() < 2) throw std::invalid_argument("cycle_like: cycle shorter than 3");
  const std::size_t last = chain.size() - 1;
  const DomParams bare_root = init_params(root_weight);

  // Open path from the far end to the entry vertex: gamma(C - r) and the
  // entry-vertex-forced value gamma1(C - r, entry).
  DomParams open = fold_down(chain, last - 1, chain[last], counter,
                             trace ? &trace->open_path : nullptr);

  // Path r', far end, ..., entry, r with r' a bare copy of r forced into D.
  MinTrace t;
  DomParams closed = combine_forced(chain[last], bare_root, counter, trace ? &t : nullptr);
  if (trace) trace->closed_through_root.push_back(t);
  closed = fold_down(chain, last - 1, closed, counter, trace ? &trace->closed_through_root : nullptr);
  MinTrace t_root;
  closed = combine_edge(bare_root, closed, counter, trace ? &t_root : nullptr);
  if (trace) trace->closed_through_root.push_back(t_root);

  // Far end forced, folded to the entry vertex.
  MinTrace t_far;
  DomParams far = combine_forced(chain[last - 1], chain[last], counter, trace ? &t_far : nullptr);
  if (trace) trace->closed_far_end.push_back(t_far);
  if (last >= 2) {
    far = fold_down(chain, last - 2, far, counter, trace ? &trace->closed_far_end : nullptr);
  }

  DomParams out;
  out.g00 = open.g;
  out.g1 = counter.subtract(closed.g1, root_weight);
  MinPick zero = counter.argmin(open.g1, far.g);
  out.g0 = zero.value;
  MinPick best = counter.argmin(out.g1, out.g0);
  out.g = best.value;
  if (trace) {
    trace->result.record(0, zero.second);
    trace->result.record(1, best.second);
  }
  return out;
}

}  // namespace wdom
