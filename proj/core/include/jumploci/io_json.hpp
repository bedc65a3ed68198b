#pragma once

#include <cstdint>
#include <string>

#include "jumploci/cdga.hpp"
#include "jumploci/group_side.hpp"
#include "jumploci/lie.hpp"
#include "jumploci/models.hpp"

namespace jumploci {

// JSON input formats.  All scalars are exact: rationals as strings "p/q",
// Gaussian rationals as two-element arrays, rational functions as
// {"num": [...], "den": [...]} coefficient lists.  Parse failures raise
// ParseError with the offending location.
Cdga parse_cdga(const std::string& text);            // schema "cdga/1"
LieAlgebra parse_lie(const std::string& text);       // schema "lie/1"
Arrangement parse_arrangement(const std::string& text);    // schema "arrangement/1"
Presentation parse_presentation(const std::string& text);  // schema "presentation/1"

std::string cdga_json(const Cdga& a);
std::string lie_json(const LieAlgebra& e);
std::string arrangement_json(const Arrangement& arr);
std::string presentation_json(const Presentation& p);

// Scalar literal: "3", "-3/7", "1/2+2/3i", "i".
Scalar parse_scalar(const std::string& text);

// Digest used to identify inputs inside reports.
std::uint64_t fnv1a64(const std::string& data);
std::string fnv1a64_hex(const std::string& data);

}  // namespace jumploci
