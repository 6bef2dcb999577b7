#include "opacity/analysis.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "opacity/error.hpp"
#include "opacity/minimization.hpp"

// Shortest inhomogeneous paths.
//
// A path from i0 is inhomogeneous iff some vertex s is entered by two of its
// edges carrying different digits. Take a shortest inhomogeneous word and its
// first collision: edge a enters s with digit x, edge b > a enters s again
// with digit y != x. Minimality forces b to be the last edge. The prefix of
// length a + 1 is a path from i0 ending with an x-edge into s, so
// a + 1 >= entry(s, x); edges a+1..b form a cycle at s ending with a y-edge,
// so b - a >= ret(s, y). Hence l >= entry(s, x) + ret(s, y). Conversely, the
// concatenation of such an entry path and such a cycle is inhomogeneous at s
// and has exactly that length. So
//
//   l = min over s and x != y of entry(s, x) + ret(s, y),
//
// where entry(s, x) = 1 + min{dist(i0, r) : t(r, x) = s} and
// ret(s, y) = 1 + min{dist(s, r) : t(r, y) = s}. Every shortest word is such
// a concatenation with both parts shortest, so the lexicographically smallest
// one is found by taking, for each optimal (s, x, y), the smallest shortest
// entry word followed by the smallest shortest cycle word.
//
// Both entry(s, x) and ret(s, y) are at most |S|, so l <= 2|S|.

namespace opacity {

// -- Opacity -----------------------------------------------------------------

Opacity Opacity::from_path_length(std::size_t shortest_path_length) {
  if (shortest_path_length < 2) {
    throw std::invalid_argument("an inhomogeneous path has at least two edges");
  }
  return Opacity(shortest_path_length);
}

DyadicDistance Opacity::value() const {
  if (!length_) return DyadicDistance::zero();
  return DyadicDistance::pow2inv(*length_ - 1);
}

DyadicDistance Opacity::complexity() const { return value().doubled(); }

DyadicDistance max_opacity() { return DyadicDistance::pow2inv(1); }

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::Transparent: return "TRANSPARENT";
    case Classification::Opaque: return "OPAQUE";
    case Classification::Intermediate: return "INTERMEDIATE";
  }
  return "UNKNOWN";
}

// -- Homogeneity ---------------------------------------------------------------

std::vector<StateVerdict> state_homogeneity(const Automaton& a) {
  std::vector<StateVerdict> verdicts(a.state_count());
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    for (Digit d = 0; d < a.radix(); ++d) {
      StateVerdict& v = verdicts[a.next(s, d)];
      if (!v.homogeneous) continue;
      if (!v.type) {
        v.type = d;
      } else if (*v.type != d) {
        v.homogeneous = false;
        v.type.reset();
      }
    }
  }
  return verdicts;
}

bool is_homogeneous_automaton(const Automaton& a) {
  const auto verdicts = state_homogeneity(a);
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const StateVerdict& v) { return v.homogeneous; });
}

std::size_t longest_homogeneous_prefix(const Automaton& a, std::span<const Digit> word) {
  const PathRun run = run_path(a, word);
  std::unordered_map<StateIndex, Digit> entered_with;
  for (std::size_t j = 0; j < run.edges.size(); ++j) {
    const Edge& e = run.edges[j];
    auto [it, inserted] = entered_with.emplace(e.target, e.digit);
    if (!inserted && it->second != e.digit) return j;
  }
  return word.size();
}

// -- Distances -------------------------------------------------------------------

namespace {

using Predecessors = std::vector<std::vector<StateIndex>>;

// preds[s * k + d] lists every r with t(r, d) = s.
Predecessors labelled_predecessors(const Automaton& a) {
  const Digit k = a.radix();
  Predecessors preds(a.state_count() * k);
  for (StateIndex r = 0; r < a.state_count(); ++r) {
    for (Digit d = 0; d < k; ++d) preds[std::size_t{a.next(r, d)} * k + d].push_back(r);
  }
  return preds;
}

std::optional<std::size_t> one_plus_min(const std::vector<std::size_t>& dist,
                                        const std::vector<StateIndex>& sources) {
  std::size_t best = kUnreachable;
  for (StateIndex r : sources) best = std::min(best, dist[r]);
  if (best == kUnreachable) return std::nullopt;
  return best + 1;
}

// Distance from every state to the nearest member of `targets`.
std::vector<std::size_t> distances_to(const Automaton& a,
                                      const std::vector<std::vector<StateIndex>>& reverse,
                                      const std::vector<StateIndex>& targets) {
  std::vector<std::size_t> dist(a.state_count(), kUnreachable);
  std::deque<StateIndex> queue;
  for (StateIndex t : targets) {
    if (dist[t] == kUnreachable) {
      dist[t] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const StateIndex s = queue.front();
    queue.pop_front();
    for (StateIndex r : reverse[s]) {
      if (dist[r] == kUnreachable) {
        dist[r] = dist[s] + 1;
        queue.push_back(r);
      }
    }
  }
  return dist;
}

// Lexicographically smallest shortest word leading from `from` into the
// target set whose distances are `dist`.
void append_smallest_path(const Automaton& a, const std::vector<std::size_t>& dist,
                          StateIndex from, Word& out) {
  StateIndex v = from;
  while (dist[v] != 0) {
    for (Digit d = 0; d < a.radix(); ++d) {
      const StateIndex w = a.next(v, d);
      if (dist[w] + 1 == dist[v]) {
        out.push_back(d);
        v = w;
        break;
      }
    }
  }
}

}  // namespace

std::optional<std::size_t> entry_distance(const Automaton& a, StateIndex s, Digit sigma) {
  const auto dist = bfs_distances(a, a.initial());
  std::vector<StateIndex> sources;
  for (StateIndex r = 0; r < a.state_count(); ++r) {
    if (a.next(r, sigma) == s) sources.push_back(r);
  }
  return one_plus_min(dist, sources);
}

std::optional<std::size_t> return_distance(const Automaton& a, StateIndex s, Digit sigma) {
  const auto dist = bfs_distances(a, s);
  std::vector<StateIndex> sources;
  for (StateIndex r = 0; r < a.state_count(); ++r) {
    if (a.next(r, sigma) == s) sources.push_back(r);
  }
  return one_plus_min(dist, sources);
}

std::optional<PathWitness> shortest_inhomogeneous_path(const Automaton& a) {
  const std::size_t n = a.state_count();
  const Digit k = a.radix();
  const Predecessors preds = labelled_predecessors(a);
  const auto from_initial = bfs_distances(a, a.initial());

  struct Candidate {
    StateIndex state;
    Digit first;
    Digit second;
    std::size_t entry;
  };
  std::size_t best = kUnreachable;
  std::vector<Candidate> optimal;

  std::vector<std::optional<std::size_t>> entry(k);
  std::vector<std::optional<std::size_t>> ret(k);
  for (StateIndex s = 0; s < n; ++s) {
    const auto from_s = bfs_distances(a, s);
    for (Digit d = 0; d < k; ++d) {
      const auto& sources = preds[std::size_t{s} * k + d];
      entry[d] = one_plus_min(from_initial, sources);
      ret[d] = one_plus_min(from_s, sources);
    }
    for (Digit x = 0; x < k; ++x) {
      if (!entry[x]) continue;
      for (Digit y = 0; y < k; ++y) {
        if (x == y || !ret[y]) continue;
        const std::size_t total = *entry[x] + *ret[y];
        if (total < best) {
          best = total;
          optimal.clear();
        }
        if (total == best) optimal.push_back({s, x, y, *entry[x]});
      }
    }
  }
  if (optimal.empty()) return std::nullopt;

  std::vector<std::vector<StateIndex>> reverse(n);
  for (StateIndex s = 0; s < n; ++s) {
    for (Digit d = 0; d < k; ++d) reverse[a.next(s, d)].push_back(s);
  }
  std::unordered_map<std::size_t, std::vector<std::size_t>> to_sources;
  auto distances_into = [&](StateIndex s, Digit d) -> const std::vector<std::size_t>& {
    const std::size_t key = std::size_t{s} * k + d;
    auto it = to_sources.find(key);
    if (it == to_sources.end()) {
      it = to_sources.emplace(key, distances_to(a, reverse, preds[key])).first;
    }
    return it->second;
  };

  std::optional<PathWitness> witness;
  for (const Candidate& c : optimal) {
    Word word;
    word.reserve(best);
    append_smallest_path(a, distances_into(c.state, c.first), a.initial(), word);
    word.push_back(c.first);
    append_smallest_path(a, distances_into(c.state, c.second), c.state, word);
    word.push_back(c.second);
    if (!witness || word < witness->word) {
      witness = PathWitness{std::move(word), c.state, c.entry - 1, best - 1};
    }
  }
  return witness;
}

Opacity compute_opacity(const Automaton& a) {
  const auto witness = shortest_inhomogeneous_path(a);
  if (!witness) return Opacity::transparent();
  return Opacity::from_path_length(witness->word.size());
}

bool is_opaque_quick(const Automaton& a) {
  for (Digit x = 0; x < a.radix(); ++x) {
    const StateIndex after_x = a.next(a.initial(), x);
    for (Digit y = 0; y < a.radix(); ++y) {
      if (x != y && a.next(after_x, y) == after_x) return true;
    }
  }
  return false;
}

// -- Sequences -------------------------------------------------------------------

AnalysisReport analyze_sequence(const Dfao& d) {
  const Validated accessible = prune_inaccessible(d);
  FactorMap intrinsic = intrinsic_automaton(accessible.dfao);
  const Automaton& a = intrinsic.target.automaton();

  auto witness = shortest_inhomogeneous_path(a);
  const Opacity opacity = witness ? Opacity::from_path_length(witness->word.size())
                                  : Opacity::transparent();
  Classification classification = Classification::Intermediate;
  if (opacity.is_transparent()) {
    classification = Classification::Transparent;
  } else if (opacity.is_opaque()) {
    classification = Classification::Opaque;
  }

  return AnalysisReport{
      .intrinsic = intrinsic.target,
      .k = a.radix(),
      .input_states = accessible.dfao.state_count(),
      .states_count = a.state_count(),
      .opacity = opacity,
      .complexity = opacity.complexity(),
      .classification = classification,
      .witness = std::move(witness),
      .state_homogeneity = state_homogeneity(a),
      .strictly_accessible = is_strictly_accessible(a),
  };
}

}  // namespace opacity
