#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syncx/dfa.hpp"
#include "syncx/replication.hpp"

namespace syncx {

/**
 * Serialized automaton: letter names and k rows of n 1-based targets.
 *
 * JSON:  {"n": 3, "alphabet": ["a","b"], "delta": [[2,3,1],[1,1,3]]}
 * Text:  "n k" on the first line, then k rows of n targets separated by
 *        whitespace. Letters are named a, b, c, ... in order.
 */
struct DfaDocument {
    std::size_t n = 0;
    std::string alphabet;
    std::vector<std::vector<int>> delta;

    bool operator==(const DfaDocument&) const = default;
};

/// Throws ConstructionError on malformed input.
DfaDocument parse_json_document(std::string_view text);
DfaDocument parse_text_document(std::string_view text);
/// JSON if the first non-blank character is '{', plain text otherwise.
DfaDocument parse_document(std::string_view text);
DfaDocument load_document(const std::string& path);

std::string to_json(const DfaDocument& doc);
std::string to_text(const DfaDocument& doc);
/// Graphviz digraph; parallel edges between the same pair of states share one edge labelled "b,c".
std::string to_dot(const DfaDocument& doc);

Dfa to_dfa(const DfaDocument& doc);
/// Letters are named from `alphabet`, defaulting to a, b, c, ...
DfaDocument to_document(const Dfa& dfa, std::string_view alphabet = kDefaultAlphabet);

/// Array of claim objects: claim_id, parameter, expected, computed, status, witness, note.
/// A bracket is written as {"lower": x, "upper": y}, with null for an open upper end.
std::string claims_to_json(const std::vector<ClaimResult>& claims, std::string_view alphabet = kDefaultAlphabet);

}  // namespace syncx
