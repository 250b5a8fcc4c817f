#pragma once

// Text format for algebras: "key: value" lines with indented `arrows:` and
// `relations:` blocks. See README.md for the grammar.

#include <cstdint>
#include <filesystem>
#include <string>

#include "siltlab/algebra.hpp"

namespace siltlab {

enum class FamilyHint { hereditary_an, nakayama, generic };

[[nodiscard]] const char* to_string(FamilyHint f) noexcept;

struct AlgebraSpec {
  std::int64_t characteristic = 0;
  FamilyHint family = FamilyHint::generic;
  Quiver quiver;
  RelationSet relations;
};

/// Throws InputError with a "line N: " prefix on malformed text.
[[nodiscard]] AlgebraSpec parse_algebra_spec(const std::string& text);
[[nodiscard]] AlgebraSpec load_algebra_spec(const std::filesystem::path& path);
/// Canonical form; parse_algebra_spec(serialize_algebra_spec(s)) reproduces s.
[[nodiscard]] std::string serialize_algebra_spec(const AlgebraSpec& spec);

/// Builds kQ/I and checks the family hint against the quiver shape.
[[nodiscard]] AlgebraPtr build_algebra(const AlgebraSpec& spec);

}  // namespace siltlab
