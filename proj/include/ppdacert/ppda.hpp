#pragma once

#include "ppdacert/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppdacert {

enum class StateId : std::uint32_t {};
enum class SymbolId : std::uint32_t {};

constexpr std::size_t index(StateId s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index(SymbolId z) { return static_cast<std::size_t>(z); }

/// pZ --weight--> q push, where push[0] ends up on top of the stack.
struct Transition {
  StateId from;
  SymbolId top;
  Rational weight;
  StateId to;
  std::vector<SymbolId> push;
};

/// Return-probability variable <pZq>.
struct TriIndex {
  StateId p;
  SymbolId z;
  StateId q;
  friend bool operator==(const TriIndex&, const TriIndex&) = default;
};

/// Configuration pZ with a single stack symbol.
struct PairIndex {
  StateId p;
  SymbolId z;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

enum class Validation { strict, lenient };

/// Probabilistic pushdown automaton: states, stack alphabet and weighted rules
/// that pop the top symbol and push at most two. Index order of states,
/// symbols, triples and pairs is declaration order.
class Ppda {
 public:
  Ppda() = default;
  Ppda(std::vector<std::string> states, std::vector<std::string> alphabet, std::vector<Transition> transitions);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_symbols() const { return alphabet_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  const std::string& state_name(StateId s) const { return states_.at(index(s)); }
  const std::string& symbol_name(SymbolId z) const { return alphabet_.at(index(z)); }
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;

  std::size_t tri_count() const { return states_.size() * alphabet_.size() * states_.size(); }
  std::size_t tri_id(TriIndex t) const;
  TriIndex tri_at(std::size_t id) const;
  std::string tri_name(std::size_t id) const;

  std::size_t pair_count() const { return states_.size() * alphabet_.size(); }
  std::size_t pair_id(PairIndex pz) const;
  PairIndex pair_at(std::size_t id) const;
  std::string pair_name(std::size_t id) const;

  /// Indices into transitions() of the rules applicable in pair `pair_id`.
  const std::vector<std::size_t>& rules_of(std::size_t pair_id) const { return rules_.at(pair_id); }
  /// Total outgoing weight of a pair.
  const Rational& mass(std::size_t pair_id) const { return mass_.at(pair_id); }
  /// 1 - mass for pairs whose outgoing weight is below one (deadlock mass).
  Rational deficit(std::size_t pair_id) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<std::size_t>> rules_;
  std::vector<Rational> mass_;
};

/// Problems found by probabilistic validation.
struct ProbabilityIssue {
  std::size_t pair_id;
  Rational mass;
};

/// Pairs whose weight sum exceeds one (an error in every mode) or, in strict
/// mode, differs from one for a pair that has rules.
std::vector<ProbabilityIssue> probability_errors(const Ppda& ppda, Validation mode);
/// Pairs with no rules or with outgoing weight below one.
std::vector<std::size_t> deadlocked_pairs(const Ppda& ppda);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, probability };
  ParseError(Kind kind, std::size_t line, const std::string& message);
  Kind kind() const { return kind_; }
  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Reads the text format:
///   # comment
///   states: p q
///   alphabet: Z
///   trans p Z 1/4 q Z Z      (push: '-', one symbol, or two symbols)
Ppda parse_ppda(std::string_view text, Validation mode = Validation::lenient);

/// Canonical text form (no comments, single spaces, rationals as num/den).
std::string serialize_ppda(const Ppda& ppda);

/// Hex SHA-256 of the canonical serialization.
std::string model_hash(const Ppda& ppda);

/// Parses "p:Z" into a pair of the automaton. Throws std::invalid_argument.
PairIndex parse_pair(const Ppda& ppda, std::string_view text);

}  // namespace ppdacert
