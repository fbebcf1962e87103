#pragma once

#include "xha/comod.hpp"
#include "xha/quasi.hpp"
#include "xha/structure.hpp"
#include "xha/tannaka.hpp"
#include "xha/trace.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xha {

/// A positioned problem found while reading a structure file. `path` is the
/// JSON path of the offending node (e.g. "components[0].delta"); line and
/// column are 1-based positions of that node in the input text.
struct Diagnostic {
  std::string path;
  long line = 0;
  long column = 0;
  std::string message;

  std::string to_string() const;
};

/// A named finite family declaration; witnesses default to identity matrices
/// when the block omits them.
struct FamilyBlock {
  std::vector<std::string> objects;  // comodule names
  long zero = 0;
  std::vector<long> dual_index;
  std::vector<Mat> dual_witness;  // empty when defaulted
};

/// The in-memory model of a structure file: the crossed Hopf G-algebra plus
/// the optional analysis blocks.
struct StructureFile {
  long conductor = 1;
  CrossedHopfGAlgebra structure;
  std::optional<Cobraiding> cobraiding;
  std::optional<Cotwist> cotwist;
  std::map<std::string, Comodule> comodules;
  std::map<std::string, FamilyBlock> families;
  std::optional<FiniteDiagram> diagram;
  std::optional<TannakianPresentation> presentation;
  bool presentation_is_regulars = false;  // shorthand {"regulars": true}
};

/// Either a fully validated model or a list of positioned diagnostics.
/// Parsing is total: malformed input produces diagnostics, never a crash.
struct ParseResult {
  std::optional<StructureFile> file;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return file.has_value(); }
};

ParseResult parse_structure_file(const std::string& text);

/// Canonical text form; parse(serialize(f)) reproduces f field by field.
std::string serialize_structure_file(const StructureFile& f);

/// Resolves a family block into a SimpleFamily (computing the canonical dual
/// targets for the witnesses). Returns nullopt with a message on unresolvable
/// names or shape problems.
std::optional<SimpleFamily> build_family(const StructureFile& f, const std::string& name, std::string* error);

}  // namespace xha
