#pragma once

#include <optional>
#include <string>

namespace twmack {

struct JobOptions {
  int max_group_order = 48;
  bool allow_external_data = false;
  std::optional<std::string> json_out;
};

struct JobOutcome {
  int exit_code = 0; // 0 ok, 1 check failure, 2 parse/validation, 3 unsupported
  std::string text_report;
  std::string json_report;
};

/// Runs one declarative job given as a JSON document. The outcome carries the
/// aligned text report and the full JSON report; both are deterministic for a
/// fixed job (timings are emitted only when the job opts in).
JobOutcome run_job_text(const std::string& json_text, const JobOptions& options = {});
JobOutcome run_job_file(const std::string& path, const JobOptions& options = {});

} // namespace twmack
