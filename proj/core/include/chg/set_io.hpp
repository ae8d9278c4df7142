#pragma once

// Plain-text set files:
//
//   # group=product:3^3
//   0,1,2
//   2,2,1
//
// One element per line; lines starting with '#' are comments. Interval sets
// are written 1-based (elements of [n] = {1..n}) and held 0-based in memory.

#include <filesystem>
#include <iosfwd>

#include "chg/group.hpp"

namespace chg {

GSet read_set(std::istream& in);
GSet read_set_file(const std::filesystem::path& path);

void write_set(std::ostream& out, const GSet& set);
void write_set_file(const std::filesystem::path& path, const GSet& set);

}  // namespace chg
