#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twmack/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"twmack: twisted group rings, Mackey functors, and K0 at desk scale"};
  std::string job_path;
  std::string json_out;
  twmack::JobOptions opts;
  app.add_option("job", job_path, "job description file (JSON, one job per file)")->required();
  app.add_option("--json-out", json_out, "write the JSON report to this path");
  app.add_option("--max-group-order", opts.max_group_order, "bound on the group order")
      ->capture_default_str();
  app.add_flag("--allow-external-data", opts.allow_external_data,
               "enable instances whose values come from external computations");
  CLI11_PARSE(app, argc, argv);

  if (!json_out.empty()) opts.json_out = json_out;
  auto outcome = twmack::run_job_file(job_path, opts);
  std::cout << outcome.text_report;
  if (opts.json_out) {
    std::ofstream out(*opts.json_out);
    if (!out) {
      std::cerr << "cannot write " << *opts.json_out << "\n";
      return 2;
    }
    out << outcome.json_report;
  } else {
    std::cout << outcome.json_report;
  }
  return outcome.exit_code;
}
