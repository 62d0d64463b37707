#include "syncx/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "syncx/errors.hpp"

namespace syncx {
namespace {

using nlohmann::json;

void validate(const DfaDocument& doc) {
    if (doc.n < 1) throw ConstructionError("n must be positive");
    if (doc.alphabet.empty()) throw ConstructionError("alphabet must not be empty");
    if (doc.delta.size() != doc.alphabet.size()) {
        throw ConstructionError("delta has " + std::to_string(doc.delta.size()) + " rows for " +
                                std::to_string(doc.alphabet.size()) + " letters");
    }
    std::set<char> seen;
    for (char c : doc.alphabet) {
        if (!seen.insert(c).second) throw ConstructionError(std::string("duplicate letter name '") + c + "'");
    }
    for (std::size_t a = 0; a < doc.delta.size(); ++a) {
        if (doc.delta[a].size() != doc.n) {
            throw ConstructionError(std::string("row for letter ") + doc.alphabet[a] + " has " +
                                    std::to_string(doc.delta[a].size()) + " entries, expected " +
                                    std::to_string(doc.n));
        }
        for (std::size_t q = 0; q < doc.n; ++q) {
            const int t = doc.delta[a][q];
            if (t < 1 || static_cast<std::size_t>(t) > doc.n) {
                throw ConstructionError(std::string("letter ") + doc.alphabet[a] + ", state q" +
                                        std::to_string(q + 1) + ": target " + std::to_string(t) +
                                        " not in [1.." + std::to_string(doc.n) + "]");
            }
        }
    }
}

}  // namespace

DfaDocument parse_json_document(std::string_view text) {
    DfaDocument doc;
    try {
        const json j = json::parse(text);
        if (!j.is_object()) throw ConstructionError("automaton JSON must be an object");
        const auto n = j.at("n").get<long long>();
        if (n < 1) throw ConstructionError("n must be positive");
        doc.n = static_cast<std::size_t>(n);
        for (const auto& name : j.at("alphabet")) {
            const auto s = name.get<std::string>();
            if (s.size() != 1) throw ConstructionError("letter names must be single characters: '" + s + "'");
            doc.alphabet += s;
        }
        doc.delta = j.at("delta").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ConstructionError(std::string("malformed automaton JSON: ") + e.what());
    }
    validate(doc);
    return doc;
}

DfaDocument parse_text_document(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0;
    long long k = 0;
    if (!(in >> n >> k) || n < 1 || k < 1) throw ConstructionError("text automaton must start with 'n k'");
    if (static_cast<std::size_t>(k) > kMaxLetters) throw ConstructionError("too many letters");
    DfaDocument doc;
    doc.n = static_cast<std::size_t>(n);
    doc.alphabet = std::string(kDefaultAlphabet.substr(0, static_cast<std::size_t>(k)));
    doc.delta.assign(static_cast<std::size_t>(k), std::vector<int>(doc.n));
    for (auto& row : doc.delta) {
        for (auto& target : row) {
            if (!(in >> target)) throw ConstructionError("text automaton has too few targets");
        }
    }
    std::string extra;
    if (in >> extra) throw ConstructionError("unexpected trailing input '" + extra + "'");
    validate(doc);
    return doc;
}

DfaDocument parse_document(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_document(text);
    return parse_text_document(text);
}

DfaDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConstructionError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string to_json(const DfaDocument& doc) {
    json j;
    j["n"] = doc.n;
    j["alphabet"] = json::array();
    for (char c : doc.alphabet) j["alphabet"].push_back(std::string(1, c));
    j["delta"] = doc.delta;
    return j.dump() + "\n";
}

std::string to_text(const DfaDocument& doc) {
    std::ostringstream out;
    out << doc.n << ' ' << doc.delta.size() << '\n';
    for (const auto& row : doc.delta) {
        for (std::size_t q = 0; q < row.size(); ++q) out << (q ? " " : "") << row[q];
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const DfaDocument& doc) {
    std::ostringstream out;
    out << "digraph automaton {\n  node [shape=circle];\n";
    for (std::size_t q = 1; q <= doc.n; ++q) out << "  q" << q << ";\n";
    for (std::size_t q = 1; q <= doc.n; ++q) {
        std::map<int, std::string> labels;
        for (std::size_t a = 0; a < doc.delta.size(); ++a) {
            auto& label = labels[doc.delta[a][q - 1]];
            if (!label.empty()) label += ',';
            label += doc.alphabet[a];
        }
        for (const auto& [target, label] : labels) {
            out << "  q" << q << " -> q" << target << " [label=\"" << label << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

Dfa to_dfa(const DfaDocument& doc) {
    validate(doc);
    return make_dfa(doc.n, doc.alphabet.size(), doc.delta);
}

DfaDocument to_document(const Dfa& dfa, std::string_view alphabet) {
    if (alphabet.size() < dfa.k()) throw ConstructionError("alphabet has too few letter names");
    DfaDocument doc;
    doc.n = dfa.n();
    doc.alphabet = std::string(alphabet.substr(0, dfa.k()));
    for (Letter a = 0; a < dfa.k(); ++a) {
        std::vector<int> row;
        for (State q : dfa.row(a)) row.push_back(static_cast<int>(q) + 1);
        doc.delta.push_back(std::move(row));
    }
    return doc;
}

std::string claims_to_json(const std::vector<ClaimResult>& claims, std::string_view alphabet) {
    json out = json::array();
    for (const auto& c : claims) {
        json item;
        item["claim_id"] = c.claim_id;
        item["parameter"] = c.parameter;
        if (const auto* value = std::get_if<std::int64_t>(&c.expected)) {
            item["expected"] = *value;
        } else {
            const auto& bound = std::get<Bound>(c.expected);
            item["expected"] = {{"lower", bound.lower}, {"upper", bound.upper ? json(*bound.upper) : json(nullptr)}};
        }
        item["computed"] = c.computed;
        item["status"] = status_id(c.status);
        item["witness"] = c.witness ? json(c.witness->str(alphabet)) : json(nullptr);
        item["note"] = c.note;
        out.push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

}  // namespace syncx
