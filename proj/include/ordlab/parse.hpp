#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ordlab/ordinal.hpp"

namespace ordlab {

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr   := term {"+" term}
//   term   := factor {"*" factor}
//   factor := atom ["^" factor]
//   atom   := NAT | "w" | "e" NAT | "(" expr ")"
// "+" and "*" evaluate left-associatively under ordinal semantics, "^" is
// right-associative and only the literals w and e<k> may carry it.
Ordinal parse_ordinal(std::string_view text);

enum class RenderStyle { Ascii, Unicode };

// Canonical leveled normal form.  parse_ordinal(render(a)) == a for the
// ascii style; unicode is display-only.
std::string render(const Ordinal& a, RenderStyle style = RenderStyle::Ascii);

}  // namespace ordlab
