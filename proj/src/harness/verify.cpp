#include "qla/harness/verify.hpp"

#include <cstdio>

#include "qla/errors.hpp"
#include "qla/harness/io.hpp"
#include "qla/harness/run.hpp"
#include "qla/kdv/certify.hpp"
#include "qla/maxwell/certify.hpp"

namespace qla::harness {

series::CertificationReport run_verify(const std::string& target) {
  if (target == "kdv-v1") {
    return kdv::certify(kdv::Variant::UnitaryV1);
  }
  if (target == "kdv-v2") {
    return kdv::certify(kdv::Variant::UnitaryV2);
  }
  if (target == "kdv-nonunitary") {
    return kdv::certify(kdv::Variant::NonUnitaryPotential);
  }
  if (target == "maxwell") {
    return maxwell::certify().report;
  }
  throw ConfigError("unknown verify target '" + target +
                    "' (expected kdv-v1|kdv-v2|kdv-nonunitary|maxwell)");
}

int cmd_verify(const std::string& target, const std::string& out_path) {
  const auto report = run_verify(target);
  const std::string text = report.to_text();
  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) {
    write_text_file(out_path, text);
  }
  return report.passed() ? kExitOk : kExitCertificationFailure;
}

}  // namespace qla::harness
