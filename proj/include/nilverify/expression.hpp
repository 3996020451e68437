#pragma once

// Text syntax for scalars and forms.
//
//   scalars:  integers, p/q, z^k (zeta_12^k), z6^k (zeta_6^k = zeta_12^(2k))
//   forms:    generator names joined by ^ (wedge), e.g. mu^~mu
//   both:     + - * / and parentheses; x^n with an integer n is a power and
//             requires a scalar base
//
// Example: -z^3*mu^~mu + nu^theta + ~nu^~theta

#include <stdexcept>
#include <string>
#include <string_view>

#include "nilverify/exterior.hpp"
#include "nilverify/scalar.hpp"

namespace nilverify {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column, bool unknown_name = false)
      : std::runtime_error(what), column_(column), unknown_name_(unknown_name) {}
  /// 0-based offset of the offending token within the parsed text.
  std::size_t column() const { return column_; }
  /// The text was well formed but named an undeclared generator.
  bool unknown_name() const { return unknown_name_; }

 private:
  std::size_t column_;
  bool unknown_name_;
};

/// True for names the expression grammar reserves for scalars.
bool is_reserved_name(std::string_view name);

Form parse_form(std::string_view text, const GeneratorSet& gens);
CycloScalar parse_scalar(std::string_view text);

}  // namespace nilverify
