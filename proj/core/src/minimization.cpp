#include "opacity/minimization.hpp"

#include <map>
#include <string>
#include <utility>

namespace opacity {

namespace {

// Renumbers blocks so that block ids follow the smallest member state.
Partition renumber_by_first_member(const std::vector<std::size_t>& raw) {
  Partition p;
  p.block_of.resize(raw.size());
  std::map<std::size_t, std::size_t> fresh;
  for (std::size_t s = 0; s < raw.size(); ++s) {
    auto [it, inserted] = fresh.emplace(raw[s], fresh.size());
    p.block_of[s] = it->second;
  }
  p.block_count = fresh.size();
  return p;
}

}  // namespace

Partition moore_partition(const Dfao& d) {
  const Automaton& a = d.automaton();
  const std::size_t n = a.state_count();
  const Digit k = a.radix();

  std::vector<std::size_t> raw(n);
  {
    std::map<std::string, std::size_t> by_output;
    for (std::size_t s = 0; s < n; ++s) {
      raw[s] = by_output.emplace(d.output(static_cast<StateIndex>(s)), by_output.size())
                   .first->second;
    }
  }
  Partition current = renumber_by_first_member(raw);

  // Each round splits blocks by the vector of successor blocks; stable after
  // at most n - 1 rounds.
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig;
      sig.reserve(k + 1);
      sig.push_back(current.block_of[s]);
      for (Digit dg = 0; dg < k; ++dg) {
        sig.push_back(current.block_of[a.next(static_cast<StateIndex>(s), dg)]);
      }
      next[s] = signatures.emplace(std::move(sig), signatures.size()).first->second;
    }
    Partition refined = renumber_by_first_member(next);
    if (refined.block_count == current.block_count) return refined;
    current = std::move(refined);
  }
}

FactorMap minimize(const Dfao& d) {
  const Automaton& a = d.automaton();
  const Partition p = moore_partition(d);
  const Digit k = a.radix();

  std::vector<StateIndex> representative(p.block_count, 0);
  std::vector<bool> filled(p.block_count, false);
  for (std::size_t s = 0; s < a.state_count(); ++s) {
    const std::size_t b = p.block_of[s];
    if (!filled[b]) {
      filled[b] = true;
      representative[b] = static_cast<StateIndex>(s);
    }
  }

  std::vector<std::string> names;
  std::vector<std::string> outputs;
  std::vector<StateIndex> table;
  table.reserve(p.block_count * k);
  for (std::size_t b = 0; b < p.block_count; ++b) {
    const StateIndex rep = representative[b];
    names.push_back(a.name(rep));
    outputs.push_back(d.output(rep));
    for (Digit dg = 0; dg < k; ++dg) {
      table.push_back(static_cast<StateIndex>(p.block_of[a.next(rep, dg)]));
    }
  }
  const auto initial = static_cast<StateIndex>(p.block_of[a.initial()]);
  Dfao quotient(Automaton(k, std::move(names), initial, std::move(table)),
                std::move(outputs));

  // canonical_form ranks blocks by breadth-first discovery.
  const auto order = bfs_order(quotient.automaton());
  std::vector<StateIndex> rank(order.size(), 0);
  for (std::size_t j = 0; j < order.size(); ++j) {
    rank[order[j]] = static_cast<StateIndex>(j);
  }
  std::vector<StateIndex> lambda(a.state_count());
  for (std::size_t s = 0; s < a.state_count(); ++s) lambda[s] = rank[p.block_of[s]];

  return FactorMap{d, canonical_form(quotient), std::move(lambda)};
}

FactorMap intrinsic_automaton(const Dfao& d) { return minimize(normalize_zero(d)); }

bool is_minimal(const Dfao& d) {
  return moore_partition(d).block_count == d.state_count();
}

bool is_factor_map(const FactorMap& map) {
  const Automaton& src = map.source.automaton();
  const Automaton& dst = map.target.automaton();
  if (src.radix() != dst.radix()) return false;
  if (map.lambda.size() != src.state_count()) return false;
  std::vector<bool> hit(dst.state_count(), false);
  for (StateIndex s = 0; s < src.state_count(); ++s) {
    const StateIndex image = map.lambda[s];
    if (image >= dst.state_count()) return false;
    hit[image] = true;
    if (map.source.output(s) != map.target.output(image)) return false;
    for (Digit d = 0; d < src.radix(); ++d) {
      if (map.lambda[src.next(s, d)] != dst.next(image, d)) return false;
    }
  }
  if (map.lambda[src.initial()] != dst.initial()) return false;
  for (bool h : hit) {
    if (!h) return false;
  }
  return true;
}

}  // namespace opacity
