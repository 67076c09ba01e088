#include "specs.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "nqr/errors.hpp"
#include "nqr/serialize.hpp"

namespace nqr::cli {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t number(std::string_view text, std::string_view spec) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty())
    throw DomainError("bad number '" + std::string(text) + "' in '" + std::string(spec) + "'");
  return v;
}

void expect_args(const std::vector<std::string>& parts, std::size_t lo, std::size_t hi, std::string_view spec) {
  if (parts.size() < lo || parts.size() > hi) throw DomainError("wrong number of arguments in '" + std::string(spec) + "'");
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

GroupTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("table")) throw DomainError("group table JSON needs \"table\"");
  try {
    return GroupTable(j.at("table").get<std::vector<std::vector<std::uint32_t>>>());
  } catch (const Json::exception& e) {
    throw DomainError(std::string("group table: ") + e.what());
  }
}

std::size_t default_box_side(const FamilyInstance* context, std::string_view spec) {
  if (context == nullptr) throw DomainError("'" + std::string(spec) + "' needs b or a --graph");
  const auto n = context->graph.order();
  const auto b = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (b * b != n) throw DomainError("'" + std::string(spec) + "': graph order is not a square");
  return b;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

FamilyInstance load_family(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "complete" || kind == "box" || kind == "paley" || kind == "kneser2" || kind == "multipartite-minus") {
    expect_args(parts, 2, 2, spec);
    const auto v = number(parts[1], spec);
    if (kind == "complete") return complete(v);
    if (kind == "box") return cartesian_square(v);
    if (kind == "paley") return paley(v);
    if (kind == "kneser2") return kneser2(v);
    return multipartite_minus(v);
  }
  if (kind == "multipartite") {
    expect_args(parts, 2, 2, spec);
    const auto args = split(parts[1], ',');
    if (args.size() != 2) throw DomainError("multipartite needs parts,size");
    return complete_multipartite(number(args[0], spec), number(args[1], spec));
  }
  if (kind == "cayley") {
    if (parts.size() < 2) throw DomainError("cayley needs a file");
    const Json j = read_json(std::string(spec.substr(7)));
    if (!j.contains("connection_set")) throw DomainError("cayley JSON needs \"connection_set\"");
    const auto set = j.at("connection_set").get<std::vector<std::uint32_t>>();
    return cayley_graph(table_from_json(j), set);
  }

  const Json j = read_json(std::string(spec));
  FamilyInstance out{graph_from_json(j), j.value("label", std::string(spec)), {}, {}};
  if (j.contains("groups") && j.at("groups").is_object())
    for (const auto& [name, g] : j.at("groups").items()) out.companion_groups.push_back({name, group_from_json(g)});
  return out;
}

PermGroup load_group(std::string_view spec, GroupRole role, const FamilyInstance* context) {
  const auto parts = split(spec, ':');
  if (parts[0] == "companion") {
    expect_args(parts, 2, 2, spec);
    if (context == nullptr) throw DomainError("'" + std::string(spec) + "' needs a --graph family");
    return context->group(parts[1]);
  }
  if (parts[0] != "builtin") return group_from_json(read_json(std::string(spec)));
  if (parts.size() < 2) throw DomainError("empty builtin group spec");

  const std::string& name = parts[1];
  if (name == "reduction") {
    expect_args(parts, 2, 3, spec);
    const auto b = parts.size() == 3 ? number(parts[2], spec) : default_box_side(context, spec);
    auto groups = cartesian_reduction_groups(b);
    return role == GroupRole::acting ? groups.g : groups.n;
  }
  if (name == "wreath" || name == "translations" || name == "diagonalN" || name == "fullB") {
    expect_args(parts, 2, 3, spec);
    const auto b = parts.size() == 3 ? number(parts[2], spec) : default_box_side(context, spec);
    return cartesian_square(b).group(name);
  }
  if (name == "cyclic") {
    expect_args(parts, 3, 4, spec);
    return cyclic_translations(number(parts[2], spec), parts.size() == 4 ? number(parts[3], spec) : 1);
  }
  if (name == "affine" || name == "dihedral") {
    expect_args(parts, 3, 3, spec);
    const auto n = number(parts[2], spec);
    return name == "affine" ? cyclic_affine(n) : cyclic_dihedral(n);
  }
  if (name == "mult") {
    expect_args(parts, 4, 4, spec);
    return cyclic_multiplier(number(parts[2], spec), number(parts[3], spec));
  }
  if (name == "autA5") {
    expect_args(parts, 2, 2, spec);
    const std::vector<Permutation> s5{Permutation::from_cycles(5, "(0 1)"), Permutation::from_cycles(5, "(0 1 2 3 4)")};
    return conjugation_action(alternating5(), s5);
  }
  throw DomainError("unknown builtin group '" + std::string(spec) + "'");
}

GroupTable load_table(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "builtin") {
    if (parts.size() == 2 && parts[1] == "A5") return alternating5().table;
    if (parts.size() == 3 && parts[1] == "cyclic") return cyclic_group_table(number(parts[2], spec));
    throw DomainError("unknown builtin table '" + std::string(spec) + "'");
  }
  return table_from_json(read_json(std::string(spec)));
}

}  // namespace nqr::cli
