#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jmkit/characters.hpp"
#include "jmkit/expansion.hpp"
#include "jmkit/identities.hpp"
#include "jmkit/partition.hpp"

namespace jmkit {

using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);

// {"basis":...,"degree":...,"terms":[{"partition":[..],"coeff":"a/b"},...]},
// terms sorted lexicographically by partition.
Json expansion_to_json(const SchurExpansion& f);
Json expansion_to_json(const PowerExpansion& f);

Json record_to_json(const VerificationRecord& record, bool include_elapsed);

Json hook_moves_to_json(const std::vector<HookMove>& moves);

std::string table_to_csv(const CharacterTable& table);
std::string table_to_text(const CharacterTable& table);

}  // namespace jmkit
