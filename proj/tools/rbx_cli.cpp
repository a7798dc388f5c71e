#include <CLI11.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbx/commands.hpp"

namespace {

/* Shared tail of every leaf command: the model file, the output switch,
   and the dispatch tag. */
void wire_leaf(CLI::App* leaf, rbx::cmd::Request& req,
               const std::vector<std::string>& name) {
  leaf->add_option("file", req.file, "model file")->required();
  leaf->add_flag("--json", req.json, "emit the JSON report");
  leaf->callback([&req, name] { req.command = name; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification tool for operator deformation complexes"};
  app.require_subcommand(1);

  rbx::cmd::Request req;

  wire_leaf(app.add_subcommand("validate", "check every model section against its axioms"),
            req, {"validate"});

  CLI::App* rb = app.add_subcommand("rb-check",
                                    "test an operator for the Rota-Baxter identity");
  rb->add_option("--operator", req.operator_name, "operator name")->required();
  wire_leaf(rb, req, {"rb-check"});

  CLI::App* coh =
      app.add_subcommand("cohomology", "cohomology of a Rota-Baxter operator");
  coh->add_option("--operator", req.operator_name, "operator name")->required();
  coh->add_option("--degrees", req.degrees, "degree range A:B")->required();
  wire_leaf(coh, req, {"cohomology"});

  CLI::App* deform =
      app.add_subcommand("deform", "formal deformations of a Rota-Baxter operator");
  deform->require_subcommand(1);
  for (const char* sub : {"check", "obstruction", "extend"}) {
    CLI::App* leaf = deform->add_subcommand(sub);
    leaf->add_option("--operator", req.operator_name, "base operator name")->required();
    leaf->add_option("--terms", req.terms, "operator names, one per t-power")
        ->required()
        ->delimiter(',');
    wire_leaf(leaf, req, {"deform", sub});
  }

  CLI::App* gauge =
      app.add_subcommand("gauge", "straighten a deformation whose first-order class vanishes");
  gauge->add_option("--operator", req.operator_name, "base operator name")->required();
  gauge->add_option("--series", req.series_name, "deformation series name")->required();
  gauge->add_option("--order", req.order, "truncation order (defaults to the series order)");
  wire_leaf(gauge, req, {"gauge"});

  CLI::App* prelie = app.add_subcommand("prelie", "pre-Lie algebra layer");
  prelie->require_subcommand(1);
  for (const char* sub : {"validate", "cohomology"})
    wire_leaf(prelie->add_subcommand(sub), req, {"prelie", sub});

  CLI::App* kv = app.add_subcommand("kv", "Koszul-Vinberg tensor layer");
  kv->require_subcommand(1);
  for (const char* sub : {"check", "cohomology", "obstruction", "extend"}) {
    CLI::App* leaf = kv->add_subcommand(sub);
    leaf->add_option("--tensor", req.tensor_name, "symmetric tensor name")->required();
    leaf->add_flag("--restricted", req.restricted, "use the restricted subcomplex");
    if (std::string(sub) == "obstruction" || std::string(sub) == "extend")
      leaf->add_option("--terms", req.terms, "tensor names, one per t-power")
          ->required()
          ->delimiter(',');
    wire_leaf(leaf, req, {"kv", sub});
  }

  CLI::App* hessian =
      app.add_subcommand("hessian-check", "test a symmetric form for pseudo-Hessian");
  hessian->add_option("--form", req.form_name, "form name")->required();
  wire_leaf(hessian, req, {"hessian-check"});

  CLI::App* action = app.add_subcommand("action", "polynomial action layer");
  action->require_subcommand(1);
  wire_leaf(action->add_subcommand("verify"), req, {"action", "verify"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    rbx::cmd::Outcome out = rbx::cmd::run(req);
    std::fputs(out.output.c_str(), stdout);
    return out.exit_code;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
}
