#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wcat/dynsys.hpp"
#include "wcat/futequiv.hpp"
#include "wcat/zoo.hpp"

namespace wcat {

// Malformed document text: JSON syntax errors carry line/column, schema
// errors name the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One JSON document; exactly the member matching `kind` is populated.
struct Document {
  std::string kind;  // category | functor | cospan | lawvere | future-equivalence |
                     // grid-module | dynsystem | family
  CatPtr category;
  std::optional<Functor> functor;
  std::optional<EmbeddingPair> cospan;
  std::optional<LawvereSpace> lawvere;
  std::optional<FutureEquivalence> fut;
  std::optional<GridModule> grid_module;
  std::optional<DynSystem> dynsystem;
  std::optional<std::vector<FamilyMember>> family;
};

Document parse_document(const std::string& text);
std::string emit_document(const Document& d);

// Validator dispatch on `kind`; used by the `validate` subcommand and as the
// pre-computation gate of every other subcommand.
Report validate_document(const Document& d);

}  // namespace wcat
