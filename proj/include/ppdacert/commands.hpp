#pragma once

#include "ppdacert/ppda.hpp"
#include "ppdacert/rational.hpp"
#include "ppdacert/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ppdacert {

// Command implementations behind the CLI and the Python module. Each takes
// file contents rather than paths, writes its report to `out`, diagnostics to
// `err`, and returns the process exit code.

enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,
  kExitSyntax = 2,
  kExitProbability = 3,
  kExitModelMismatch = 4,
};

/// Exact value of "1/1000", "0.001", "1e-9" or "25e-4". Throws std::invalid_argument.
Rational parse_epsilon(std::string_view text);

int cmd_parse(std::string_view model, Validation mode, const std::optional<std::string>& start, std::ostream& out,
              std::ostream& err);

/// Certified lower and upper bounds per non-zero triple with gap <= epsilon.
int cmd_bounds(std::string_view model, const ApproxConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes a certificate of kind upper, lower, past or cpast to `out`.
/// `strict` only affects upper; `decide_budget` only affects past.
int cmd_certify(std::string_view model, std::string_view kind, const ApproxConfig& cfg, bool strict,
                std::size_t decide_budget, std::ostream& out, std::ostream& err);

/// 0 when accepted, 1 with the first violation when rejected, 2 for a
/// malformed certificate, 4 when the certificate names another model.
int cmd_verify(std::string_view model, std::string_view certificate, std::ostream& out, std::ostream& err);

int cmd_decide(std::string_view model, std::size_t max_iter, std::ostream& out, std::ostream& err);

int cmd_pbpa(std::string_view model, std::ostream& out, std::ostream& err);

/// `param` is n for fig4/fig5, a for delta_a, unused for fig1.
int cmd_gen(std::string_view kind, std::string_view param, std::ostream& out, std::ostream& err);

int cmd_simulate(std::string_view model, std::string_view start, std::uint64_t runs, std::uint64_t cap,
                 std::uint64_t seed, std::ostream& out, std::ostream& err);

/// Parses the model, reporting failures on `err`. Sets `code` to the exit
/// code on failure.
std::optional<Ppda> load_model(std::string_view text, Validation mode, std::ostream& err, int& code);

}  // namespace ppdacert
