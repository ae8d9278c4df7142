#include "chg/set_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "chg/error.hpp"

namespace chg {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::int64_t parse_coord(std::string_view s, std::size_t line_no) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw StructuralError("line " + std::to_string(line_no) +
                          ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

GSet read_set(std::istream& in) {
  std::optional<GroupDescriptor> group;
  std::vector<Elem> elems;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      auto pos = body.find("group=");
      if (pos != std::string_view::npos && !group) {
        group = GroupDescriptor::parse(trim(body.substr(pos + 6)));
      }
      continue;
    }
    if (!group) {
      throw StructuralError("set file has elements before the '# group=' header");
    }
    std::vector<std::int64_t> coords;
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      coords.push_back(parse_coord(body.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (group->kind() == GroupKind::kInterval) {
      if (coords.size() != 1 || coords[0] < 1 || coords[0] > group->modulus()) {
        throw StructuralError("line " + std::to_string(line_no) +
                              ": interval element outside [1, " +
                              std::to_string(group->modulus()) + "]");
      }
      coords[0] -= 1;
    }
    Elem e(std::move(coords));
    if (!group->contains(e)) {
      throw StructuralError("line " + std::to_string(line_no) +
                            ": element not valid for " + group->to_string());
    }
    elems.push_back(std::move(e));
  }
  if (!group) throw StructuralError("set file lacks a '# group=' header");
  return GSet(*group, std::move(elems));
}

GSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  return read_set(in);
}

void write_set(std::ostream& out, const GSet& set) {
  const bool interval = set.group().kind() == GroupKind::kInterval;
  out << "# group=" << set.group().to_string() << '\n';
  if (interval) out << "# elements are 1-based members of [n]\n";
  for (const auto& e : set.elems()) {
    if (interval) {
      out << e.coords[0] + 1 << '\n';
    } else {
      out << to_string(e) << '\n';
    }
  }
}

void write_set_file(const std::filesystem::path& path, const GSet& set) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path.string());
  write_set(out, set);
}

}  // namespace chg
