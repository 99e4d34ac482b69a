#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/perm_group.hpp"

namespace hurwitz {

// Builtin groups reachable by name on the CLI. `cyclic_generator` is set
// for the cyclic ones and enables the additive "k mod m" entry shorthand.
struct BuiltinGroup {
  std::string name;
  int degree;
  std::vector<std::string> generators;
  bool cyclic;
};

const std::vector<BuiltinGroup>& builtin_groups();
// Case-insensitive lookup; throws InvalidInput for unknown names.
std::shared_ptr<const PermGroup> make_builtin(
    std::string_view name, std::size_t order_cap = PermGroup::kDefaultOrderCap);
bool is_builtin(std::string_view name);

// Datum entry list: comma-separated cycle-notation entries, with the
// additive shorthand "k mod m" translated to powers of the generator when
// one is supplied (builtin cyclic groups).
std::vector<Perm> parse_entries(std::string_view text, int degree,
                                const std::optional<Perm>& cyclic_generator);

}  // namespace hurwitz
