// Kept apart from the other commands: everything reachable from here uses
// exact arithmetic only.
#include "ppdacert/certfile.hpp"
#include "ppdacert/certificates.hpp"
#include "ppdacert/commands.hpp"

#include <ostream>

namespace ppdacert {

std::optional<Ppda> load_model(std::string_view text, Validation mode, std::ostream& err, int& code) {
  try {
    return parse_ppda(text, mode);
  } catch (const ParseError& e) {
    code = e.kind() == ParseError::Kind::syntax ? kExitSyntax : kExitProbability;
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    code = kExitSyntax;
    err << "error: " << e.what() << '\n';
  }
  return std::nullopt;
}

int cmd_verify(std::string_view model, std::string_view certificate, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto ppda = load_model(model, Validation::lenient, err, code);
  if (!ppda) return code;

  Certificate cert;
  try {
    cert = read_certificate(*ppda, certificate);
  } catch (const ModelMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelMismatch;
  } catch (const CertFormatError& e) {
    err << "error: certificate " << e.what() << '\n';
    return kExitSyntax;
  }

  const Verdict verdict = verify(*ppda, cert);
  if (verdict.accepted()) {
    out << "accepted " << kind_name(cert) << " certificate\n";
    return kExitOk;
  }
  out << "rejected " << kind_name(cert) << " certificate: " << describe(verdict.first()) << '\n';
  return kExitRejected;
}

}  // namespace ppdacert
