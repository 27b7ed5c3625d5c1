#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/graded.hpp"
#include "lefschetz/polyring.hpp"

namespace lefschetz {

/// Parse failure in a definition file; the message starts with
/// `<source>:<line>:<column>:`.
class DefinitionError : public Error {
 public:
  DefinitionError(ErrorKind kind, const std::string& source, std::size_t line, std::size_t column,
                  const std::string& message)
      : Error(kind, source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedForm {
  std::string name;
  Polynomial polynomial;
};

/// A ring, a homogeneous ideal and optional named degree-one forms.
struct Definition {
  std::string source;
  Ring ring;
  std::vector<Polynomial> ideal;
  std::vector<NamedForm> forms;

  const NamedForm* find_form(const std::string& name) const;
};

/// Line-oriented format with sections `ring:`, `weights:`, `ideal:` and
/// `forms:`; `#` starts a comment. See docs/definition-format.md.
Definition parse_definition(const std::string& text, const std::string& source = "<input>");
Definition load_definition(const std::string& path);

GradedAlgebra build_algebra(const Definition& def, std::size_t max_dim = kDefaultMaxQuotientDim);

/// A named form from the file, or else an expression in the ring's variables.
Polynomial resolve_form(const Definition& def, const std::string& name_or_expr);

}  // namespace lefschetz
