#pragma once

#include "ppdacert/certificates.hpp"
#include "ppdacert/ppda.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppdacert {

/// Malformed certificate text. line() is 1-based, 0 when not tied to a line.
class CertFormatError : public std::runtime_error {
 public:
  CertFormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The certificate names a different automaton than the one supplied.
class ModelMismatch : public std::runtime_error {
 public:
  ModelMismatch(std::string expected, std::string found);
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

/// Text form:
///   cert <upper|lower|past|cpast> v1
///   model <sha-256 hex of the canonical automaton>
///   strict                       (upper only, optional)
///   u <p> <Z> <q> <num>/<den>    (u and l: zero entries omitted)
///   l <p> <Z> <q> <num>/<den>
///   r <p> <Z> <num>/<den>        (r and v: every entry present)
///   v <p> <Z> <q> <num>/<den>
/// Entries are written in index order.
std::string write_certificate(const Ppda& ppda, const Certificate& cert);

/// Inverse of write_certificate. Entries may come in any order, blank lines
/// and '#' comments are ignored. Throws ModelMismatch when the hash differs
/// from model_hash(ppda) and CertFormatError on anything else.
Certificate read_certificate(const Ppda& ppda, std::string_view text);

}  // namespace ppdacert
