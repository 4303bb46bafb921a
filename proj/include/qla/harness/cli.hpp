#pragma once

namespace qla::harness {

// Full command-line front end:
//   qla kdv run|converge [-c config] [overrides]
//   qla maxwell run|converge [-c config] [overrides]
//   qla verify kdv-v1|kdv-v2|kdv-nonunitary|maxwell [--out file]
// Exit codes: 0 ok, 1 certification failure, 2 config error,
// 3 numeric abort.
int cli_main(int argc, const char* const* argv);

}  // namespace qla::harness
