#include "ppdacert/ppda.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace ppdacert {

Ppda::Ppda(std::vector<std::string> states, std::vector<std::string> alphabet, std::vector<Transition> transitions)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), transitions_(std::move(transitions)) {
  const auto unique = [](const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty()) throw std::invalid_argument(std::string("empty ") + what + " name");
      if (!seen.insert(n).second) throw std::invalid_argument(std::string("duplicate ") + what + " '" + n + "'");
    }
  };
  unique(states_, "state");
  unique(alphabet_, "symbol");

  rules_.assign(pair_count(), {});
  mass_.assign(pair_count(), Rational(0));
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const Transition& t = transitions_[i];
    if (index(t.from) >= num_states() || index(t.to) >= num_states() || index(t.top) >= num_symbols()) {
      throw std::invalid_argument("transition refers to an unknown state or symbol");
    }
    for (const auto z : t.push) {
      if (index(z) >= num_symbols()) throw std::invalid_argument("transition pushes an unknown symbol");
    }
    if (t.push.size() > 2) throw std::invalid_argument("a transition pushes at most two symbols");
    if (t.weight <= 0) throw std::invalid_argument("transition weights must be positive");
    const std::size_t pz = pair_id({t.from, t.top});
    rules_[pz].push_back(i);
    mass_[pz] += t.weight;
  }
}

std::optional<StateId> Ppda::find_state(std::string_view name) const {
  const auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return StateId(static_cast<std::uint32_t>(it - states_.begin()));
}

std::optional<SymbolId> Ppda::find_symbol(std::string_view name) const {
  const auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) return std::nullopt;
  return SymbolId(static_cast<std::uint32_t>(it - alphabet_.begin()));
}

std::size_t Ppda::tri_id(TriIndex t) const {
  return (index(t.p) * num_symbols() + index(t.z)) * num_states() + index(t.q);
}

TriIndex Ppda::tri_at(std::size_t id) const {
  if (id >= tri_count()) throw std::out_of_range("triple index out of range");
  const std::size_t q = id % num_states();
  const std::size_t pz = id / num_states();
  return {StateId(static_cast<std::uint32_t>(pz / num_symbols())), SymbolId(static_cast<std::uint32_t>(pz % num_symbols())),
          StateId(static_cast<std::uint32_t>(q))};
}

std::string Ppda::tri_name(std::size_t id) const {
  const TriIndex t = tri_at(id);
  return state_name(t.p) + " " + symbol_name(t.z) + " " + state_name(t.q);
}

std::size_t Ppda::pair_id(PairIndex pz) const { return index(pz.p) * num_symbols() + index(pz.z); }

PairIndex Ppda::pair_at(std::size_t id) const {
  if (id >= pair_count()) throw std::out_of_range("pair index out of range");
  return {StateId(static_cast<std::uint32_t>(id / num_symbols())), SymbolId(static_cast<std::uint32_t>(id % num_symbols()))};
}

std::string Ppda::pair_name(std::size_t id) const {
  const PairIndex pz = pair_at(id);
  return state_name(pz.p) + " " + symbol_name(pz.z);
}

Rational Ppda::deficit(std::size_t pair_id) const {
  const Rational& m = mass_.at(pair_id);
  return m < 1 ? Rational(1 - m) : Rational(0);
}

std::vector<ProbabilityIssue> probability_errors(const Ppda& ppda, Validation mode) {
  std::vector<ProbabilityIssue> issues;
  for (std::size_t pz = 0; pz < ppda.pair_count(); ++pz) {
    const Rational& m = ppda.mass(pz);
    const bool has_rules = !ppda.rules_of(pz).empty();
    if (m > 1 || (mode == Validation::strict && has_rules && m != 1)) issues.push_back({pz, m});
  }
  return issues;
}

std::vector<std::size_t> deadlocked_pairs(const Ppda& ppda) {
  std::vector<std::size_t> out;
  for (std::size_t pz = 0; pz < ppda.pair_count(); ++pz) {
    if (ppda.mass(pz) < 1) out.push_back(pz);
  }
  return out;
}

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), kind_(kind), line_(line) {}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

Ppda parse_ppda(std::string_view text, Validation mode) {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  bool have_states = false;
  bool have_alphabet = false;
  std::vector<Transition> transitions;
  std::vector<std::size_t> transition_lines;

  const auto lookup = [](const std::vector<std::string>& names, const std::string& name, const char* what,
                         std::size_t line) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw ParseError(ParseError::Kind::syntax, line, std::string("undeclared ") + what + " '" + name + "'");
    }
    return static_cast<std::uint32_t>(it - names.begin());
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const std::string& head = words[0];
    if (head == "states:" || head == "alphabet:") {
      const bool is_states = head == "states:";
      bool& seen = is_states ? have_states : have_alphabet;
      if (seen) throw ParseError(ParseError::Kind::syntax, line_no, "duplicate '" + head + "' line");
      if (!transitions.empty()) {
        throw ParseError(ParseError::Kind::syntax, line_no, "'" + head + "' must precede transitions");
      }
      seen = true;
      auto& target = is_states ? states : alphabet;
      target.assign(words.begin() + 1, words.end());
      std::set<std::string> unique(target.begin(), target.end());
      if (unique.size() != target.size()) {
        throw ParseError(ParseError::Kind::syntax, line_no, "duplicate name in '" + head + "' line");
      }
    } else if (head == "trans") {
      if (!have_states || !have_alphabet) {
        throw ParseError(ParseError::Kind::syntax, line_no, "transition before 'states:' and 'alphabet:'");
      }
      if (words.size() < 6 || words.size() > 7) {
        throw ParseError(ParseError::Kind::syntax, line_no, "expected 'trans <p> <Z> <weight> <q> <push>'");
      }
      Transition t;
      t.from = StateId(lookup(states, words[1], "state", line_no));
      t.top = SymbolId(lookup(alphabet, words[2], "symbol", line_no));
      try {
        t.weight = parse_rational(words[3]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Kind::syntax, line_no, e.what());
      }
      if (t.weight == 0) throw ParseError(ParseError::Kind::syntax, line_no, "transition weight must be positive");
      t.to = StateId(lookup(states, words[4], "state", line_no));
      if (words.size() == 6 && words[5] == "-") {
        // pop
      } else {
        for (std::size_t i = 5; i < words.size(); ++i) {
          t.push.push_back(SymbolId(lookup(alphabet, words[i], "symbol", line_no)));
        }
      }
      transitions.push_back(std::move(t));
      transition_lines.push_back(line_no);
    } else {
      throw ParseError(ParseError::Kind::syntax, line_no, "unknown directive '" + head + "'");
    }
    if (end == text.size()) break;
  }

  if (!have_states || !have_alphabet) {
    throw ParseError(ParseError::Kind::syntax, 0, "missing 'states:' or 'alphabet:' line");
  }
  if (states.empty()) throw ParseError(ParseError::Kind::syntax, 0, "no states declared");

  Ppda ppda(std::move(states), std::move(alphabet), std::move(transitions));
  if (mode == Validation::strict && ppda.transitions().empty()) {
    throw ParseError(ParseError::Kind::probability, 0, "strict mode: the automaton has no transitions");
  }
  const auto issues = probability_errors(ppda, mode);
  if (!issues.empty()) {
    const auto& first = issues.front();
    throw ParseError(ParseError::Kind::probability, 0,
                     "outgoing weights of (" + ppda.pair_name(first.pair_id) + ") sum to " + to_string(first.mass) +
                         (mode == Validation::strict ? ", expected 1" : ", more than 1"));
  }
  return ppda;
}

std::string serialize_ppda(const Ppda& ppda) {
  std::ostringstream out;
  out << "states:";
  for (const auto& s : ppda.states()) out << ' ' << s;
  out << "\nalphabet:";
  for (const auto& z : ppda.alphabet()) out << ' ' << z;
  out << '\n';
  for (const auto& t : ppda.transitions()) {
    out << "trans " << ppda.state_name(t.from) << ' ' << ppda.symbol_name(t.top) << ' ' << to_string(t.weight) << ' '
        << ppda.state_name(t.to);
    if (t.push.empty()) {
      out << " -";
    } else {
      for (const auto z : t.push) out << ' ' << ppda.symbol_name(z);
    }
    out << '\n';
  }
  return out.str();
}

std::string model_hash(const Ppda& ppda) {
  const std::string canonical = serialize_ppda(ppda);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

PairIndex parse_pair(const Ppda& ppda, std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("expected <state>:<symbol>, got '" + std::string(text) + "'");
  const auto p = ppda.find_state(text.substr(0, colon));
  const auto z = ppda.find_symbol(text.substr(colon + 1));
  if (!p || !z) throw std::invalid_argument("unknown state or symbol in '" + std::string(text) + "'");
  return {*p, *z};
}

}  // namespace ppdacert
