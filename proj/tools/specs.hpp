#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nqr/families.hpp"
#include "nqr/permgrp.hpp"

namespace nqr::cli {

/// Family spec (complete:n, multipartite:p,s, multipartite-minus:b, box:b,
/// paley:q, kneser2:n, cayley:<path>) or a path to graph / family JSON.
FamilyInstance load_family(std::string_view spec);

enum class GroupRole { acting, normal };

/// builtin:<name>[:args], companion:<name>, or a path to group JSON.
/// `context` supplies companions and the default b for builtin:reduction.
PermGroup load_group(std::string_view spec, GroupRole role, const FamilyInstance* context);

/// builtin:A5, builtin:cyclic:n, or a path to {"table": [[...], ...]}.
GroupTable load_table(std::string_view spec);

std::string read_file(const std::string& path);

}  // namespace nqr::cli
