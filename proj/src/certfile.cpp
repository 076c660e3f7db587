#include "ppdacert/certfile.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace ppdacert {

CertFormatError::CertFormatError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

ModelMismatch::ModelMismatch(std::string expected, std::string found)
    : std::runtime_error("certificate is for model " + found + ", automaton hashes to " + expected),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

void write_triples(std::ostream& out, const Ppda& ppda, char tag, const RatVec& v, bool skip_zero) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (skip_zero && v[i] == 0) continue;
    out << tag << ' ' << ppda.tri_name(i) << ' ' << to_string(v[i]) << '\n';
  }
}

void write_pairs(std::ostream& out, const Ppda& ppda, char tag, const RatVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << tag << ' ' << ppda.pair_name(i) << ' ' << to_string(v[i]) << '\n';
}

std::vector<std::string> words_of(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

// One vector being filled from entry lines, with duplicate detection.
struct Slot {
  RatVec values;
  std::vector<bool> seen;
  bool complete_required = false;
  bool used = false;

  Slot() = default;
  Slot(std::size_t n, bool required) : values(zeros(n)), seen(n, false), complete_required(required), used(true) {}
};

}  // namespace

std::string write_certificate(const Ppda& ppda, const Certificate& cert) {
  std::ostringstream out;
  out << "cert " << kind_name(cert) << " v1\n";
  out << "model " << model_hash(ppda) << '\n';
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, UpperCert>) {
          if (c.strict) out << "strict\n";
          write_triples(out, ppda, 'u', c.u, true);
        } else if constexpr (std::is_same_v<T, LowerCert>) {
          write_triples(out, ppda, 'l', c.l, true);
          write_triples(out, ppda, 'u', c.u, true);
        } else if constexpr (std::is_same_v<T, PastCert>) {
          write_triples(out, ppda, 'u', c.u, true);
          write_pairs(out, ppda, 'r', c.r);
        } else {
          write_triples(out, ppda, 'u', c.u, true);
          write_triples(out, ppda, 'v', c.v, false);
        }
      },
      cert);
  return out.str();
}

Certificate read_certificate(const Ppda& ppda, std::string_view text) {
  std::string kind;
  bool have_model = false;
  bool strict = false;
  Slot u;
  Slot l;
  Slot r;
  Slot v;

  const auto slot_for = [&](const std::string& tag, std::size_t line) -> Slot& {
    Slot* slot = nullptr;
    if (tag == "u") slot = &u;
    if (tag == "l") slot = &l;
    if (tag == "r") slot = &r;
    if (tag == "v") slot = &v;
    if (slot == nullptr || !slot->used) {
      throw CertFormatError(line, "entry '" + tag + "' is not part of a " + kind + " certificate");
    }
    return *slot;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = words_of(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (kind.empty()) {
      if (words.size() != 3 || words[0] != "cert" || words[2] != "v1") {
        throw CertFormatError(line_no, "expected 'cert <upper|lower|past|cpast> v1'");
      }
      kind = words[1];
      const std::size_t tris = ppda.tri_count();
      if (kind == "upper") {
        u = Slot(tris, false);
      } else if (kind == "lower") {
        l = Slot(tris, false);
        u = Slot(tris, false);
      } else if (kind == "past") {
        u = Slot(tris, false);
        r = Slot(ppda.pair_count(), true);
      } else if (kind == "cpast") {
        u = Slot(tris, false);
        v = Slot(tris, true);
      } else {
        throw CertFormatError(line_no, "unknown certificate kind '" + kind + "'");
      }
      continue;
    }
    if (!have_model) {
      if (words.size() != 2 || words[0] != "model") throw CertFormatError(line_no, "expected 'model <hash>'");
      const std::string expected = model_hash(ppda);
      if (words[1] != expected) throw ModelMismatch(expected, words[1]);
      have_model = true;
      continue;
    }
    if (words.size() == 1 && words[0] == "strict") {
      if (kind != "upper") throw CertFormatError(line_no, "'strict' only applies to upper certificates");
      strict = true;
      continue;
    }

    Slot& slot = slot_for(words[0], line_no);
    const bool is_pair = words[0] == "r";
    if (words.size() != (is_pair ? 4U : 5U)) {
      throw CertFormatError(line_no, is_pair ? "expected 'r <p> <Z> <value>'" : "expected '" + words[0] + " <p> <Z> <q> <value>'");
    }
    const auto p = ppda.find_state(words[1]);
    const auto z = ppda.find_symbol(words[2]);
    const auto q = is_pair ? p : ppda.find_state(words[3]);
    if (!p || !z || !q) throw CertFormatError(line_no, "unknown state or symbol");
    const std::size_t id = is_pair ? ppda.pair_id({*p, *z}) : ppda.tri_id({*p, *z, *q});
    if (slot.seen[id]) throw CertFormatError(line_no, "duplicate entry");
    try {
      slot.values[id] = parse_rational(words.back());
    } catch (const std::invalid_argument& e) {
      throw CertFormatError(line_no, e.what());
    }
    slot.seen[id] = true;
  }

  if (kind.empty()) throw CertFormatError(0, "empty certificate");
  if (!have_model) throw CertFormatError(0, "missing 'model' line");
  for (const auto& [tag, slot] : {std::pair{'r', &r}, std::pair{'v', &v}}) {
    if (!slot->complete_required) continue;
    for (std::size_t i = 0; i < slot->seen.size(); ++i) {
      if (!slot->seen[i]) {
        throw CertFormatError(0, std::string("missing ") + tag + " entry for " +
                                     (tag == 'r' ? ppda.pair_name(i) : ppda.tri_name(i)));
      }
    }
  }

  if (kind == "upper") return UpperCert{std::move(u.values), strict};
  if (kind == "lower") return LowerCert{std::move(l.values), std::move(u.values)};
  if (kind == "past") return PastCert{std::move(u.values), std::move(r.values)};
  return CpastCert{std::move(u.values), std::move(v.values)};
}

}  // namespace ppdacert
