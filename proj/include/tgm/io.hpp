#pragma once

#include "tgm/segdiv.hpp"
#include "tgm/threefold.hpp"

#include <string>

namespace tgm {

// Divisor text format, one directive per line:
//
//   model blowup d=1        (or: model fan)
//   divisor D1 ray 1 0
//   divisor C  curve v+(u+v^2)^3
//   seg D1 -1/3 -1/3
//
// Rationals as p/q, names are identifiers, blank lines and '#' comments
// ignored. A fan model takes its rays from the divisor lines; a blowup model
// may rename the standard divisors by declaring them.
SegmentalDivisor read_divisor_text(const std::string& text);
std::string write_divisor_text(const SegmentalDivisor& d);

// JSON mirror of the same data; parse(emit(d)) emits byte-identical JSON.
SegmentalDivisor read_divisor_json(const std::string& text);
std::string write_divisor_json(const SegmentalDivisor& d);

// Reads either format, sniffing for a leading '{'.
SegmentalDivisor read_divisor_auto(const std::string& text);

// Theorem data as JSON: weights, section, mu_weights, f, g, param_f, param_g.
TheoremData read_theorem_data_json(const std::string& text);
std::string write_theorem_data_json(const TheoremData& d);

std::string read_file(const std::string& path);

}  // namespace tgm
