#include "opacity/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "opacity/error.hpp"

namespace opacity {

// -- Automaton / Dfao ------------------------------------------------------

Automaton::Automaton(Digit radix, std::vector<std::string> state_names,
                     StateIndex initial, std::vector<StateIndex> table)
    : radix_(radix),
      names_(std::move(state_names)),
      initial_(initial),
      table_(std::move(table)) {
  if (radix_ < 2 || radix_ > kMaxRadix) {
    throw Error(ErrorKind::BadRadix, "radix " + std::to_string(radix_) +
                                         " outside [2, " +
                                         std::to_string(kMaxRadix) + "]");
  }
  if (names_.empty()) throw Error(ErrorKind::NoStates, "automaton has no states");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw Error(ErrorKind::SyntaxError, "empty state name");
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::DuplicateState, "state '" + name + "' listed twice");
    }
  }
  if (initial_ >= names_.size()) {
    throw Error(ErrorKind::UnknownState, "initial state index out of range");
  }
  if (table_.size() != names_.size() * radix_) {
    throw Error(ErrorKind::MissingTransition,
                "transition table is not total over states x digits");
  }
  for (StateIndex target : table_) {
    if (target >= names_.size()) {
      throw Error(ErrorKind::UnknownState, "transition target out of range");
    }
  }
}

StateIndex Automaton::find(const std::string& name) const noexcept {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<StateIndex>(it - names_.begin());
}

Dfao::Dfao(Automaton automaton, std::vector<std::string> outputs)
    : automaton_(std::move(automaton)), outputs_(std::move(outputs)) {
  if (outputs_.size() != automaton_.state_count()) {
    throw Error(ErrorKind::MissingOutput, "output count does not match state count");
  }
  for (const auto& token : outputs_) {
    if (token.empty()) throw Error(ErrorKind::SyntaxError, "empty output token");
  }
}

Dfao with_identity_output(Automaton automaton) {
  auto outputs = automaton.state_names();
  return Dfao(std::move(automaton), std::move(outputs));
}

// -- Validation --------------------------------------------------------------

Validated validate(const RawDescription& raw) {
  if (raw.radix < 2 || raw.radix > static_cast<std::int64_t>(kMaxRadix)) {
    throw Error(ErrorKind::BadRadix,
                "radix must be in [2, " + std::to_string(kMaxRadix) + "], got " +
                    std::to_string(raw.radix),
                raw.radix_line);
  }
  if (raw.states.empty()) {
    throw Error(ErrorKind::NoStates, "no states declared", raw.states_line);
  }
  const auto k = static_cast<Digit>(raw.radix);
  const std::size_t n = raw.states.size();

  std::unordered_map<std::string, StateIndex> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(raw.states[i], static_cast<StateIndex>(i)).second) {
      throw Error(ErrorKind::DuplicateState,
                  "state '" + raw.states[i] + "' listed twice", raw.states_line);
    }
  }
  auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorKind::UnknownState, "unknown state '" + name + "'", line);
    }
    return it->second;
  };

  const StateIndex initial = lookup(raw.initial, raw.initial_line);

  constexpr StateIndex kUnset = static_cast<StateIndex>(-1);
  std::vector<StateIndex> table(n * k, kUnset);
  for (const auto& e : raw.edges) {
    const StateIndex src = lookup(e.source, e.line);
    if (e.digit >= k) {
      throw Error(ErrorKind::DigitOutOfRange,
                  "digit " + std::to_string(e.digit) + " not below k = " +
                      std::to_string(k),
                  e.line);
    }
    const StateIndex dst = lookup(e.target, e.line);
    auto& slot = table[std::size_t{src} * k + e.digit];
    if (slot != kUnset) {
      throw Error(ErrorKind::DuplicateTransition,
                  "second edge for (" + e.source + ", " + std::to_string(e.digit) + ")",
                  e.line);
    }
    slot = dst;
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (Digit d = 0; d < k; ++d) {
      if (table[s * k + d] == kUnset) {
        throw Error(ErrorKind::MissingTransition,
                    "no edge for (" + raw.states[s] + ", " + std::to_string(d) + ")",
                    raw.states_line);
      }
    }
  }

  std::vector<std::string> outputs;
  if (raw.outputs.empty()) {
    outputs = raw.states;
  } else {
    outputs.assign(n, std::string());
    std::vector<bool> assigned(n, false);
    for (const auto& o : raw.outputs) {
      const StateIndex s = lookup(o.state, o.line);
      if (assigned[s]) {
        throw Error(ErrorKind::DuplicateOutput, "second output for '" + o.state + "'",
                    o.line);
      }
      assigned[s] = true;
      outputs[s] = o.token;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (!assigned[s]) {
        throw Error(ErrorKind::MissingOutput,
                    "outputs are given for some states but not '" + raw.states[s] + "'",
                    raw.states_line);
      }
    }
  }

  Dfao dfao(Automaton(k, raw.states, initial, std::move(table)), std::move(outputs));
  return prune_inaccessible(dfao);
}

Validated prune_inaccessible(const Dfao& dfao) {
  const Automaton& a = dfao.automaton();
  const auto dist = bfs_distances(a, a.initial());
  const std::size_t n = a.state_count();

  std::vector<StateIndex> remap(n, 0);
  std::vector<std::string> names;
  std::vector<std::string> outputs;
  std::vector<std::string> pruned;
  for (std::size_t s = 0; s < n; ++s) {
    if (dist[s] == kUnreachable) {
      pruned.push_back(a.name(static_cast<StateIndex>(s)));
      continue;
    }
    remap[s] = static_cast<StateIndex>(names.size());
    names.push_back(a.name(static_cast<StateIndex>(s)));
    outputs.push_back(dfao.output(static_cast<StateIndex>(s)));
  }
  if (pruned.empty()) return {dfao, {}};

  const Digit k = a.radix();
  std::vector<StateIndex> table;
  table.reserve(names.size() * k);
  for (std::size_t s = 0; s < n; ++s) {
    if (dist[s] == kUnreachable) continue;
    for (Digit d = 0; d < k; ++d) {
      table.push_back(remap[a.next(static_cast<StateIndex>(s), d)]);
    }
  }
  Automaton pruned_automaton(k, std::move(names), remap[a.initial()], std::move(table));
  return {Dfao(std::move(pruned_automaton), std::move(outputs)), std::move(pruned)};
}

// -- Running -----------------------------------------------------------------

namespace {

void check_digits(const Automaton& a, std::span<const Digit> word) {
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] >= a.radix()) {
      throw Error(ErrorKind::DigitOutOfRange,
                  "digit " + std::to_string(word[j]) + " at position " +
                      std::to_string(j) + " not below k = " + std::to_string(a.radix()));
    }
  }
}

}  // namespace

StateIndex step(const Automaton& a, StateIndex s, std::span<const Digit> word) {
  check_digits(a, word);
  for (Digit d : word) s = a.next(s, d);
  return s;
}

PathRun run_path(const Automaton& a, std::span<const Digit> word) {
  check_digits(a, word);
  PathRun run;
  run.word.assign(word.begin(), word.end());
  run.vertices.reserve(word.size() + 1);
  run.edges.reserve(word.size());
  StateIndex s = a.initial();
  run.vertices.push_back(s);
  for (Digit d : word) {
    const StateIndex t = a.next(s, d);
    run.edges.push_back({s, d, t});
    run.vertices.push_back(t);
    s = t;
  }
  return run;
}

std::vector<std::size_t> bfs_distances(const Automaton& a, StateIndex from) {
  std::vector<std::size_t> dist(a.state_count(), kUnreachable);
  std::deque<StateIndex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const StateIndex s = queue.front();
    queue.pop_front();
    for (Digit d = 0; d < a.radix(); ++d) {
      const StateIndex t = a.next(s, d);
      if (dist[t] == kUnreachable) {
        dist[t] = dist[s] + 1;
        queue.push_back(t);
      }
    }
  }
  return dist;
}

bool is_strictly_accessible(const Automaton& a) {
  const std::size_t n = a.state_count();
  auto reaches_all = [n](const std::vector<std::size_t>& dist) {
    return std::none_of(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(n),
                        [](std::size_t x) { return x == kUnreachable; });
  };
  if (!reaches_all(bfs_distances(a, a.initial()))) return false;

  // Everything must also reach the initial state: search on reversed edges.
  std::vector<std::vector<StateIndex>> reverse(n);
  for (StateIndex s = 0; s < n; ++s) {
    for (Digit d = 0; d < a.radix(); ++d) reverse[a.next(s, d)].push_back(s);
  }
  std::vector<std::size_t> seen(n, kUnreachable);
  std::deque<StateIndex> queue{a.initial()};
  seen[a.initial()] = 0;
  while (!queue.empty()) {
    const StateIndex s = queue.front();
    queue.pop_front();
    for (StateIndex r : reverse[s]) {
      if (seen[r] == kUnreachable) {
        seen[r] = 0;
        queue.push_back(r);
      }
    }
  }
  return reaches_all(seen);
}

Word digits_msb(std::uint64_t n, Digit k) {
  if (k < 2) throw Error(ErrorKind::BadRadix, "radix must be at least 2");
  Word digits;
  while (n != 0) {
    digits.push_back(static_cast<Digit>(n % k));
    n /= k;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::vector<std::string> generate(const Dfao& d, std::size_t n_terms) {
  std::vector<std::string> terms;
  terms.reserve(n_terms);
  const Automaton& a = d.automaton();
  for (std::size_t n = 0; n < n_terms; ++n) {
    const Word digits = digits_msb(n, a.radix());
    terms.push_back(d.output(step(a, a.initial(), digits)));
  }
  return terms;
}

const std::string& output_after(const Dfao& d, std::span<const Digit> word) {
  return d.output(step(d.automaton(), d.automaton().initial(), word));
}

Dfao normalize_zero(const Dfao& d) {
  const Automaton& a = d.automaton();
  const StateIndex i0 = a.initial();
  if (a.next(i0, 0) == i0) return d;

  const Digit k = a.radix();
  const auto fresh = static_cast<StateIndex>(a.state_count());
  std::string fresh_name = a.name(i0) + "'";
  while (a.find(fresh_name) != a.state_count()) fresh_name += "'";

  auto names = a.state_names();
  names.push_back(fresh_name);
  auto outputs = d.outputs();
  outputs.push_back(d.output(i0));
  auto table = a.table();
  table.push_back(fresh);
  for (Digit sigma = 1; sigma < k; ++sigma) table.push_back(a.next(i0, sigma));

  Dfao extended(Automaton(k, std::move(names), fresh, std::move(table)),
                std::move(outputs));
  return prune_inaccessible(extended).dfao;
}

bool are_equivalent(const Dfao& lhs, const Dfao& rhs) {
  if (lhs.radix() != rhs.radix()) {
    throw Error(ErrorKind::RadixMismatch,
                "radix " + std::to_string(lhs.radix()) + " vs " +
                    std::to_string(rhs.radix()));
  }
  const Automaton& a = lhs.automaton();
  const Automaton& b = rhs.automaton();
  const std::size_t nb = b.state_count();
  std::vector<bool> visited(a.state_count() * nb, false);
  std::deque<std::pair<StateIndex, StateIndex>> queue{{a.initial(), b.initial()}};
  visited[std::size_t{a.initial()} * nb + b.initial()] = true;
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    if (lhs.output(p) != rhs.output(q)) return false;
    for (Digit d = 0; d < a.radix(); ++d) {
      const StateIndex p2 = a.next(p, d);
      const StateIndex q2 = b.next(q, d);
      const std::size_t key = std::size_t{p2} * nb + q2;
      if (!visited[key]) {
        visited[key] = true;
        queue.emplace_back(p2, q2);
      }
    }
  }
  return true;
}

std::vector<StateIndex> bfs_order(const Automaton& a) {
  std::vector<StateIndex> order;
  std::vector<bool> seen(a.state_count(), false);
  order.push_back(a.initial());
  seen[a.initial()] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Digit d = 0; d < a.radix(); ++d) {
      const StateIndex t = a.next(order[head], d);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

Dfao canonical_form(const Dfao& d) {
  const Automaton& a = d.automaton();
  const auto order = bfs_order(a);
  std::vector<StateIndex> rank(a.state_count(), 0);
  for (std::size_t j = 0; j < order.size(); ++j) {
    rank[order[j]] = static_cast<StateIndex>(j);
  }
  std::vector<std::string> names;
  std::vector<std::string> outputs;
  std::vector<StateIndex> table;
  table.reserve(order.size() * a.radix());
  for (std::size_t j = 0; j < order.size(); ++j) {
    names.push_back(letter_name(j));
    outputs.push_back(d.output(order[j]));
    for (Digit dg = 0; dg < a.radix(); ++dg) table.push_back(rank[a.next(order[j], dg)]);
  }
  return Dfao(Automaton(a.radix(), std::move(names), 0, std::move(table)),
              std::move(outputs));
}

std::string letter_name(std::size_t index) {
  std::string name;
  ++index;
  while (index > 0) {
    --index;
    name.push_back(static_cast<char>('A' + index % 26));
    index /= 26;
  }
  std::reverse(name.begin(), name.end());
  return name;
}

std::string format_word(std::span<const Digit> word, Digit k) {
  std::string out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (k > 10 && j > 0) out.push_back('.');
    out += std::to_string(word[j]);
  }
  return out;
}

}  // namespace opacity
