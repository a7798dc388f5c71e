#ifndef RBX_MODEL_IO_HPP
#define RBX_MODEL_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbx/action.hpp"
#include "rbx/liealg.hpp"
#include "rbx/prelie.hpp"
#include "rbx/qmatrix.hpp"

namespace rbx::io {

using lin::QMatrix;

/* One model file holds any subset of the algebraic inputs, plus named
   matrices attached to them.  All indices in files are 0-based; rational
   entries are JSON integers or strings "p/q"; polynomial entries use the
   grammar of Poly::parse over x1..xm. */
struct Model {
  std::optional<lie::LieRepPair> pair;
  std::map<std::string, QMatrix> operators;
  std::optional<prelie::PreLieAlgebra> pre_lie;
  std::map<std::string, QMatrix> tensors;
  std::map<std::string, QMatrix> forms;
  std::map<std::string, std::vector<QMatrix>> series;
  std::optional<action::ActionModel> action_model;
};

/* Parses and shape-checks a model.  A missing representation section
   defaults to the adjoint representation.  Schema violations throw
   std::invalid_argument naming the offending field by its JSON path;
   mathematical axioms are left to the commands. */
Model parse_model(const std::string& path);
Model parse_model_text(const std::string& text);

/* Deterministic serialization; the output parses back to an equal model. */
std::string serialize_model(const Model& m);

bool models_equal(const Model& a, const Model& b);

}  // namespace rbx::io

#endif
