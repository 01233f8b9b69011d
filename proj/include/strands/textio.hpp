// Text and JSON forms for both algebras, plus the ASCII band picture.
//
// A-side grammar:   "C2 C4 [1/9]_1 [0/2]_3 @ {0,1,2}"   idempotent "J{0,2}"
// B-side grammar:   "U1^2 U3 C2 @ {0,1} -> {1,2}"       idempotent "I{0,1}"
// Sums are "+"-joined, the zero element is "0", zero columns / zero exponents
// are omitted, and parse(format(e)) == e for every element.
#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "strands/algebra.hpp"
#include "strands/osz.hpp"

namespace strands {

// "3/2", "-1/2", "2" from a doubled half-integer.
std::string half2_str(Half2 v);

std::string format_generator(const StrandsGenerator& g);
std::string format_element(const F2Element& e);
std::string format_os_generator(const OSGenerator& g);
std::string format_os_element(const OSElement& e);

// Malformed text throws GrammarError carrying the byte offset of the first
// offending character; column subscripts outside [1,n] and repeated C letters
// are grammar errors too. Structurally well-formed text is routed through the
// usual constructors, so other out-of-range data raise ParameterError and
// non-basis data raise ValidityError / DomainError. A term may omit its
// idempotent clause only when a fallback anchor is supplied.
F2Element parse_element(const std::string& text, const AlgebraContext& ctx,
                        std::optional<IState> x = std::nullopt);
OSElement parse_os_element(const std::string& text, const AlgebraContext& ctx,
                           std::optional<IState> x = std::nullopt,
                           std::optional<IState> y = std::nullopt);

nlohmann::json context_to_json(const AlgebraContext& ctx);
nlohmann::json generator_to_json(const StrandsGenerator& g);  // {"x","c","pq"}
nlohmann::json os_generator_to_json(const OSGenerator& g);    // {"x","y","c","r"}
nlohmann::json element_to_json(const F2Element& e);    // {"ctx","terms"}
nlohmann::json os_element_to_json(const OSElement& e);  // {"ctx","terms"}

// Fixed-width picture of one basis element. One band per circle (lanes for
// z_i^+ above z_i^-, topmost row the upper segment, bottom row the lower
// one), moving strands as slanted runs with '>' wrap marks, idle occupied
// matchings as a dashed pair, and an "O" row on circle i for each C_i.
// Byte-deterministic.
std::string render_ascii(const StrandsGenerator& g);

}  // namespace strands
