#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gorelab/path_algebra.hpp"
#include "gorelab/representation.hpp"

namespace gorelab {

/// Syntax or semantic error in a workspace file, with 1-based position.
class WorkspaceError : public std::invalid_argument {
 public:
  WorkspaceError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ModuleSpec {
  std::string name;
  std::vector<std::size_t> dims;  // per vertex
  std::vector<Mat> matrices;      // per arrow
};

struct TargetSpec {
  std::string name;
  Quiver quiver;
  std::vector<AlgElement> relations;
};

/// Contents of a `galg 1` file.
///
///   galg 1
///   field p=3
///   vertex 1
///   arrow alpha: 1 -> 1
///   relation alpha*alpha - beta1*beta2
///   module M dim 1=4 2=2
///   mat alpha = [[0,0,0,0],[1,0,0,0],[0,1,0,0],[1,0,0,0]]
///   target kW/L
///   vertex 1
///   arrow a1: 1 -> 1
///   relation a1*a1
///   end
///
/// `#` starts a comment. Matrices of an arrow with a zero-dimensional end may be omitted.
struct Workspace {
  FieldSpec field{2};
  Quiver quiver;
  std::vector<AlgElement> relations;
  std::vector<ModuleSpec> modules;
  std::vector<TargetSpec> targets;

  AlgebraPtr algebra() const;
  const ModuleSpec& module_spec(std::string_view name) const;
  /// Throws InvalidRepresentation when the relations do not vanish.
  Representation module(std::string_view name) const;
  AlgebraPtr target(std::string_view name) const;

 private:
  mutable AlgebraPtr algebra_;
};

Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::string& path);
std::string serialize(const Workspace& w);

}  // namespace gorelab
