#pragma once

#include <string>

#include "qla/series/certify.hpp"

namespace qla::harness {

// Runs the symbolic certification for one scheme and returns the report.
// Valid targets: kdv-v1 | kdv-v2 | kdv-nonunitary | maxwell.
series::CertificationReport run_verify(const std::string& target);

// Prints the report (and optionally writes it to a file). Returns 0 when
// every component certifies, 1 otherwise.
int cmd_verify(const std::string& target, const std::string& out_path = "");

}  // namespace qla::harness
