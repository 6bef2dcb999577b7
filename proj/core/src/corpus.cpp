#include "opacity/corpus.hpp"

#include <array>
#include <utility>

#include "opacity/error.hpp"

namespace opacity::corpus {

namespace {

struct EdgeSpec {
  const char* source;
  Digit digit;
  const char* target;
};

Dfao make(Digit k, std::vector<std::string> states, std::vector<EdgeSpec> edges,
          std::vector<std::string> outputs) {
  RawDescription raw;
  raw.radix = k;
  raw.initial = states.front();
  for (std::size_t s = 0; s < states.size(); ++s) {
    raw.outputs.push_back({states[s], outputs[s], 0});
  }
  raw.states = std::move(states);
  for (const auto& e : edges) raw.edges.push_back({e.source, e.digit, e.target, 0});
  return validate(raw).dfao;
}

std::string pm1(int v) { return v > 0 ? "1" : "-1"; }

}  // namespace

Dfao one_state(Digit k) {
  std::vector<EdgeSpec> edges;
  for (Digit d = 0; d < k; ++d) edges.push_back({"A", d, "A"});
  return make(k, {"A"}, std::move(edges), {"A"});
}

Dfao identity2() {
  return make(2, {"A", "B"},
              {{"A", 0, "A"}, {"A", 1, "B"}, {"B", 0, "A"}, {"B", 1, "B"}},
              {"0", "1"});
}

Dfao thue_morse() {
  return make(2, {"A", "B"},
              {{"A", 0, "A"}, {"A", 1, "B"}, {"B", 0, "B"}, {"B", 1, "A"}},
              {"0", "1"});
}

Dfao period_doubling() {
  return make(2, {"A", "B"},
              {{"A", 0, "A"}, {"A", 1, "B"}, {"B", 0, "A"}, {"B", 1, "A"}},
              {"0", "1"});
}

Dfao golay_shapiro() {
  return make(2, {"A", "B", "C", "D"},
              {{"A", 0, "A"},
               {"A", 1, "B"},
               {"B", 0, "A"},
               {"B", 1, "C"},
               {"C", 0, "D"},
               {"C", 1, "B"},
               {"D", 0, "D"},
               {"D", 1, "C"}},
              {"1", "1", "-1", "-1"});
}

Dfao paperfolding() {
  return make(2, {"A", "B", "C", "D"},
              {{"A", 0, "A"},
               {"A", 1, "B"},
               {"B", 0, "A"},
               {"B", 1, "C"},
               {"C", 0, "D"},
               {"C", 1, "C"},
               {"D", 0, "D"},
               {"D", 1, "B"}},
              {"1", "1", "-1", "-1"});
}

Dfao baum_sweet() {
  return make(2, {"A", "B", "C", "D"},
              {{"A", 0, "A"},
               {"A", 1, "B"},
               {"B", 0, "C"},
               {"B", 1, "B"},
               {"C", 0, "B"},
               {"C", 1, "D"},
               {"D", 0, "D"},
               {"D", 1, "D"}},
              {"1", "1", "0", "0"});
}

Dfao hanoi() {
  return make(2, {"A", "B", "C", "D", "E", "F"},
              {{"A", 0, "A"},
               {"A", 1, "D"},
               {"B", 0, "A"},
               {"B", 1, "C"},
               {"C", 0, "E"},
               {"C", 1, "B"},
               {"D", 0, "E"},
               {"D", 1, "A"},
               {"E", 0, "C"},
               {"E", 1, "F"},
               {"F", 0, "C"},
               {"F", 1, "E"}},
              {"a", "a_bar", "c", "c_bar", "b", "b_bar"});
}

Dfao ternary_digit_sum() {
  return make(3, {"A", "B", "C"},
              {{"A", 0, "A"},
               {"A", 1, "B"},
               {"A", 2, "C"},
               {"B", 0, "B"},
               {"B", 1, "C"},
               {"B", 2, "A"},
               {"C", 0, "C"},
               {"C", 1, "A"},
               {"C", 2, "B"}},
              {"0", "1", "2"});
}

std::span<const CorpusEntry> entries() {
  const auto half = DyadicDistance::pow2inv(1);
  const auto quarter = DyadicDistance::pow2inv(2);
  const auto one = DyadicDistance::pow2inv(0);
  const auto zero = DyadicDistance::zero();
  using C = Classification;
  static const std::array<CorpusEntry, 9> table{{
      {"one_state", [] { return one_state(2); }, half, one, C::Opaque, 1, 2,
       "constant sequence, one-state 2-automaton"},
      {"identity2", identity2, zero, zero, C::Transparent, 2, std::nullopt,
       "purely 2-periodic 0101..., identity automaton"},
      {"thue_morse", thue_morse, half, one, C::Opaque, 2, 2,
       "Thue-Morse: u(0)=0, u(2n)=u(n), u(2n+1)=1-u(n)"},
      {"period_doubling", period_doubling, quarter, half, C::Intermediate, 2, 3,
       "period-doubling: u(n) = v2(n+1) mod 2"},
      {"golay_shapiro", golay_shapiro, zero, zero, C::Transparent, 4, std::nullopt,
       "Golay-Shapiro: u(0)=1, u(2n)=u(n), u(4n+1)=u(n), u(4n+3)=-u(2n+1)"},
      {"paperfolding", paperfolding, zero, zero, C::Transparent, 4, std::nullopt,
       "paperfolding: u(2^n (2m+1)) = (-1)^m"},
      {"baum_sweet", baum_sweet, quarter, half, C::Intermediate, 4, 3,
       "Baum-Sweet: u(0)=1, u(2n+1)=u(n), u(4n)=u(n), u(4n+2)=0"},
      {"hanoi", hanoi, quarter, half, C::Intermediate, 6, 3,
       "Tower of Hanoi moves on 6 symbols"},
      {"ternary_digit_sum", ternary_digit_sum, half, one, C::Opaque, 3, 2,
       "sum of ternary digits mod 3"},
  }};
  return table;
}

const CorpusEntry& entry(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::UnknownCorpusName, "no corpus entry '" + std::string(name) + "'");
}

Dfao build(std::string_view name) { return entry(name).build(); }

bool has_recurrence(std::string_view name) {
  entry(name);
  return name != "hanoi";
}

std::vector<std::optional<std::string>> reference_terms(std::string_view name,
                                                        std::size_t n) {
  entry(name);
  std::vector<std::optional<std::string>> terms(n);
  if (name == "one_state") {
    for (auto& t : terms) t = "A";
  } else if (name == "identity2") {
    for (std::size_t i = 0; i < n; ++i) terms[i] = std::to_string(i % 2);
  } else if (name == "thue_morse") {
    std::vector<int> u(n);
    for (std::size_t i = 1; i < n; ++i) u[i] = i % 2 == 0 ? u[i / 2] : 1 - u[i / 2];
    for (std::size_t i = 0; i < n; ++i) terms[i] = std::to_string(u[i]);
  } else if (name == "period_doubling") {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t m = i + 1;
      int valuation = 0;
      while (m % 2 == 0) {
        m /= 2;
        ++valuation;
      }
      terms[i] = std::to_string(valuation % 2);
    }
  } else if (name == "golay_shapiro") {
    std::vector<int> u(n, 1);
    for (std::size_t i = 1; i < n; ++i) {
      if (i % 2 == 0) {
        u[i] = u[i / 2];
      } else if (i % 4 == 1) {
        u[i] = u[(i - 1) / 4];
      } else {
        u[i] = -u[(i - 1) / 2];
      }
    }
    for (std::size_t i = 0; i < n; ++i) terms[i] = pm1(u[i]);
  } else if (name == "paperfolding") {
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t odd = i;
      while (odd % 2 == 0) odd /= 2;
      const std::size_t m = (odd - 1) / 2;
      terms[i] = pm1(m % 2 == 0 ? 1 : -1);
    }
  } else if (name == "baum_sweet") {
    std::vector<int> u(n, 1);
    for (std::size_t i = 1; i < n; ++i) {
      if (i % 2 == 1) {
        u[i] = u[(i - 1) / 2];
      } else if (i % 4 == 0) {
        u[i] = u[i / 4];
      } else {
        u[i] = 0;
      }
    }
    for (std::size_t i = 0; i < n; ++i) terms[i] = std::to_string(u[i]);
  } else if (name == "ternary_digit_sum") {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t m = i;
      std::size_t sum = 0;
      while (m != 0) {
        sum += m % 3;
        m /= 3;
      }
      terms[i] = std::to_string(sum % 3);
    }
  } else {
    throw Error(ErrorKind::NoRecurrence,
                "no independent recurrence for '" + std::string(name) + "'");
  }
  return terms;
}

bool sequence_checks(std::string_view name, std::size_t n) {
  const auto reference = reference_terms(name, n);
  const auto generated = generate(build(name), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (reference[i] && *reference[i] != generated[i]) return false;
  }
  return true;
}

}  // namespace opacity::corpus
