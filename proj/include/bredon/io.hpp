#pragma once

// Input documents: parsing, validation against the per-mode schema, and
// canonical re-emission.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bredon/cog.hpp"
#include "bredon/coxeter.hpp"

namespace bredon {

/// Any problem with an input document. `kind` is a stable machine-readable
/// tag ("ParseError", "SchemaError", "CycleError", "NotStrict", ...).
class InputError : public std::invalid_argument {
public:
    InputError(std::string kind, const std::string& message)
        : std::invalid_argument(message), kind_(std::move(kind))
    {
    }
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

enum class InputMode { Coxeter, GraphProduct, PosetOmega, FiniteDevelopment };

std::string to_string(InputMode m);

struct PosetSpec {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
};

/// One parsed input file. Only the fields of `mode` are meaningful.
struct InputDocument {
    InputMode mode = InputMode::Coxeter;

    // coxeter; infinity is stored as 0.
    std::vector<std::string> generators;
    std::vector<std::vector<unsigned>> matrix;

    // graph_product
    std::vector<GraphVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    // poset_omega and finite_development
    PosetSpec poset;
    std::optional<std::vector<std::vector<std::string>>> omega_classes;

    // finite_development
    std::size_t degree = 0;
    std::vector<std::vector<std::uint32_t>> group;
    std::map<std::string, std::vector<std::vector<std::uint32_t>>> locals;
};

/// Throws InputError.
InputDocument parse_input(const nlohmann::json& j);
InputDocument parse_input_text(const std::string& text);
InputDocument load_input(const std::string& path);

/// Canonical JSON: fixed key set per mode, keys sorted.
nlohmann::json to_json(const InputDocument& doc);
std::string canonical_dump(const InputDocument& doc);

/// Interpretations of a document; each throws InputError on semantic
/// problems (unknown generators, cycles, non-strict inclusions, ...).
CoxeterMatrix to_coxeter(const InputDocument& doc);
FinitePoset to_poset(const InputDocument& doc);
SimpleComplexOfGroups to_complex(const InputDocument& doc);

}  // namespace bredon
