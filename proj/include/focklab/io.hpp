#pragma once

#include <iosfwd>

#include "focklab/model.hpp"
#include "focklab/radial.hpp"

namespace focklab {

std::string read_file(const std::string& path);
std::string format17(double v);  // round-trip safe decimal

// strict parsers: unknown keys are rejected
RepSpec parse_model_spec(const std::string& json_text);
RadialSymbol parse_phi_spec(const std::string& json_text);

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace focklab
