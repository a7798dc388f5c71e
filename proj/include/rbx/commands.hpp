#ifndef RBX_COMMANDS_HPP
#define RBX_COMMANDS_HPP

#include <string>
#include <vector>

namespace rbx::cmd {

/* One parsed invocation.  Option strings stay empty when the flag was not
   given; order -1 defaults to the order of the series being transformed. */
struct Request {
  std::vector<std::string> command;
  std::string file;
  std::string operator_name;
  std::string series_name;
  std::string tensor_name;
  std::string form_name;
  std::string degrees;
  std::vector<std::string> terms;
  int order = -1;
  bool restricted = false;
  bool json = false;
};

struct Outcome {
  int exit_code = 0;
  std::string output;
};

/* Runs one command against the model file and renders the report: exit
   code 0 when every verdict holds, 1 when a checked mathematical property
   fails.  Bad input, unknown names included, throws std::invalid_argument
   for the caller to map to exit code 2. */
Outcome run(const Request& r);

}  // namespace rbx::cmd

#endif
