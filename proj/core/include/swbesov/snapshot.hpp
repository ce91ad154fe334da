#pragma once

#include <iosfwd>
#include <string>

#include "swbesov/field.hpp"

namespace swbesov {

// "SWF1" | dims u8 | points_per_dim u32 LE | period f64 LE | rank u8 | samples f64 LE.
// rank is the tensor rank (0 scalar, 1 vector of N components). Samples are row-major
// per component, components one after another.
void write_snapshot(std::ostream& os, const Field& f);
void write_snapshot(const std::string& path, const Field& f);
Field read_snapshot(std::istream& is, GridPtr grid_hint = nullptr);
Field read_snapshot(const std::string& path, GridPtr grid_hint = nullptr);

}  // namespace swbesov
