#include "opacity/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "opacity/error.hpp"

namespace opacity::oracle {

namespace {

// k^exponent, or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t k, std::size_t exponent,
                                           std::uint64_t cap) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (value > cap / k) return std::nullopt;
    value *= k;
  }
  if (value > cap) return std::nullopt;
  return value;
}

std::uint64_t assignment_count(const Automaton& a) {
  const auto count = bounded_power(a.radix(), a.state_count(), kMaxAssignments);
  if (!count) {
    throw Error(ErrorKind::InstanceTooLarge,
                "k^|S| exceeds " + std::to_string(kMaxAssignments) + " assignments");
  }
  return *count;
}

void check_word(const Automaton& a, std::span<const Digit> word) {
  for (Digit d : word) {
    if (d >= a.radix()) {
      throw Error(ErrorKind::DigitOutOfRange,
                  "digit " + std::to_string(d) + " not below k = " +
                      std::to_string(a.radix()));
    }
  }
}

}  // namespace

DyadicDistance prefix_distance(std::span<const Digit> w, std::span<const Digit> v) {
  const std::size_t common = std::min(w.size(), v.size());
  for (std::size_t n = 0; n < common; ++n) {
    if (w[n] != v[n]) return DyadicDistance::pow2inv(n);
  }
  if (w.size() == v.size()) return DyadicDistance::zero();
  return DyadicDistance::pow2inv(common);
}

Word readout(const Automaton& a, const OutputAssignment& o, std::span<const Digit> word) {
  Word out;
  out.reserve(word.size());
  StateIndex s = a.initial();
  for (Digit d : word) {
    s = a.next(s, d);
    out.push_back(o[s]);
  }
  return out;
}

std::vector<std::uint64_t> assignment_order(const Automaton& a,
                                            std::optional<std::uint64_t> shuffle_seed) {
  std::vector<std::uint64_t> order(assignment_count(a));
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

OutputAssignment decode_assignment(const Automaton& a, std::uint64_t index) {
  OutputAssignment o(a.state_count());
  for (auto& digit : o) {
    digit = static_cast<Digit>(index % a.radix());
    index /= a.radix();
  }
  return o;
}

DyadicDistance inf_over_outputs(const Automaton& a, std::span<const Digit> word,
                                std::optional<std::uint64_t> shuffle_seed) {
  check_word(a, word);
  std::optional<DyadicDistance> best;
  for (std::uint64_t index : assignment_order(a, shuffle_seed)) {
    const OutputAssignment o = decode_assignment(a, index);
    const DyadicDistance d = prefix_distance(readout(a, o, word), word);
    if (!best || d < *best) best = d;
  }
  return *best;
}

DyadicDistance brute_force_opacity(const Automaton& a, std::size_t max_length) {
  const std::uint64_t assignments = assignment_count(a);
  if (!bounded_power(a.radix(), max_length, kMaxWords)) {
    throw Error(ErrorKind::InstanceTooLarge,
                "k^L exceeds " + std::to_string(kMaxWords) + " words");
  }
  const std::size_t n = a.state_count();
  const Digit k = a.radix();
  const std::size_t blocks = (assignments + 63) / 64;

  // match[s * k + d]: the assignments o with o(s) = d.
  std::vector<std::vector<std::uint64_t>> match(n * k,
                                                std::vector<std::uint64_t>(blocks, 0));
  for (std::uint64_t index = 0; index < assignments; ++index) {
    const OutputAssignment o = decode_assignment(a, index);
    for (std::size_t s = 0; s < n; ++s) {
      match[s * k + o[s]][index / 64] |= std::uint64_t{1} << (index % 64);
    }
  }

  // Depth-first walk over all words. alive[m] holds the assignments whose
  // readout agrees with the current word on its first m positions. Once the
  // set empties at position m, that word and all its extensions have
  // inf = 2^-m, so the subtree is settled.
  std::vector<std::vector<std::uint64_t>> alive(max_length + 1,
                                                std::vector<std::uint64_t>(blocks, 0));
  for (std::uint64_t index = 0; index < assignments; ++index) {
    alive[0][index / 64] |= std::uint64_t{1} << (index % 64);
  }

  DyadicDistance sup = DyadicDistance::zero();
  struct Frame {
    StateIndex state;
    Digit next_digit;
  };
  std::vector<Frame> stack;
  stack.push_back({a.initial(), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::size_t depth = stack.size() - 1;
    if (depth == max_length || top.next_digit == k) {
      stack.pop_back();
      continue;
    }
    const Digit d = top.next_digit++;
    const StateIndex target = a.next(top.state, d);
    const auto& mask = match[std::size_t{target} * k + d];
    const auto& before = alive[depth];
    auto& after = alive[depth + 1];
    bool any = false;
    for (std::size_t b = 0; b < blocks; ++b) {
      after[b] = before[b] & mask[b];
      any = any || after[b] != 0;
    }
    if (!any) {
      sup = std::max(sup, DyadicDistance::pow2inv(depth));
      continue;
    }
    stack.push_back({target, 0});
  }
  return sup;
}

std::size_t oracle_bound(const Automaton& a) { return 2 * a.state_count() + 2; }

}  // namespace opacity::oracle
