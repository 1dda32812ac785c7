#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stsurf/group.hpp"
#include "stsurf/origami.hpp"
#include "stsurf/staircase.hpp"

namespace stsurf {

/// Positioned error in a .surf document.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

/// Malformed text: bad token, unknown key, missing value.
class ParseError : public DocumentError {
 public:
  using DocumentError::DocumentError;
};

/// Well-formed text describing an invalid object: non-bijective generators,
/// cuts through singular points, values outside the group.
class SemanticError : public DocumentError {
 public:
  using DocumentError::DocumentError;
};

/// Plain-text surface description, one `key=value` token per field:
///
///   # comment
///   name=wollmilchsau
///   k=8
///   h=(1 2 3 4)(5 6 7 8)
///   v=(1 8 3 6)(2 7 4 5)
///   group=Z
///   expect-genus=3
///   expect-stratum=H(1,1,1,1)
///   cut { square=1 at=0,1/2 dir=1,0 len=1/3 value=[1] }
///   cut { edge=top:5 value=[-1] }
///
/// With k <= 9 a cycle written without separators, as in (123), lists digits.
struct SurfaceDocument {
  std::string name;
  int k = 1;
  Permutation h = Permutation::identity(1);
  Permutation v = Permutation::identity(1);
  std::optional<GroupDescriptor> group;
  std::vector<Cut> cuts;
  std::optional<int> expect_genus;
  std::optional<std::string> expect_stratum;

  Origami origami() const { return Origami::build(k, h, v); }
  bool has_cuts() const { return !cuts.empty() || group.has_value(); }
  /// The cut system; group defaults to Z.
  StaircaseSpec staircase() const;
};

SurfaceDocument parse_surface(const std::string& text);
SurfaceDocument read_surface_file(const std::string& path);
/// Canonical text; parse_surface(print_surface(d)) reproduces d.
std::string print_surface(const SurfaceDocument& doc);
/// Document holding an existing cut system.
SurfaceDocument document_for(const StaircaseSpec& spec, const std::string& name);

bool same_cut(const Cut& a, const Cut& b);

}  // namespace stsurf
