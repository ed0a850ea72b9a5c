#include "ihs/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ihs {

using nlohmann::json;

std::string hyperspace_to_json(const Hyperspace& space) {
    json j;
    j["n"] = space.relation_count();
    j["size"] = space.size();
    j["labels"] = space.labels();
    return j.dump();
}

Hyperspace hyperspace_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("hyperspace: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("size") || !j.contains("labels"))
        throw ParseError("hyperspace: expected an object with n, size and labels");
    try {
        const int n = j.at("n").get<int>();
        const int size = j.at("size").get<int>();
        auto labels = j.at("labels").get<std::vector<std::vector<int>>>();
        return Hyperspace(n, size, std::move(labels));
    } catch (const json::exception& e) {
        throw ParseError(std::string("hyperspace: malformed field: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("hyperspace: ") + e.what());
    }
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

Mask parse_member_line(const std::string& line, int ground, const std::string& what) {
    Mask member = 0;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        int value = -1;
        try {
            std::size_t used = 0;
            value = std::stoi(token, &used);
            if (used != token.size())
                value = -1;
        } catch (const std::exception&) {
            value = -1;
        }
        if (value < 0 || value >= ground)
            throw ParseError(what + ": bad element '" + token + "'");
        member |= mask_bit(value);
    }
    return member;
}

std::string member_to_line(Mask member) {
    std::string out;
    for (int e : indices_from_mask(member)) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(e);
    }
    return out;
}

int parse_assignment(const std::string& token, const std::string& key, const std::string& what) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 || token[key.size()] != '=')
        throw ParseError(what + ": expected '" + key + "=<int>'");
    try {
        std::size_t used = 0;
        const int v = std::stoi(token.substr(key.size() + 1), &used);
        if (used != token.size() - key.size() - 1)
            throw ParseError(what + ": bad " + key);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(what + ": bad " + key);
    }
}

}  // namespace

std::string set_system_to_text(const SetSystem& sys) {
    std::string out = "n=" + std::to_string(sys.ground()) + "\n";
    for (Mask m : sys.members()) {
        out += member_to_line(m);
        out += '\n';
    }
    return out;
}

SetSystem set_system_from_text(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty())
        throw ParseError("set system: empty input");
    std::istringstream header(lines[0]);
    std::string token;
    if (!(header >> token))
        throw ParseError("set system: missing header");
    const int ground = parse_assignment(token, "n", "set system");
    if (ground < 1 || ground > 64)
        throw ParseError("set system: ground must be in 1..64");
    std::vector<Mask> members;
    for (std::size_t i = 1; i < lines.size(); ++i)
        members.push_back(parse_member_line(lines[i], ground, "set system"));
    try {
        return SetSystem(ground, std::move(members));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("set system: ") + e.what());
    }
}

std::string set_tuple_to_text(const SetTuple& tuple) {
    std::string out = "n=" + std::to_string(tuple.length()) + " m=" + std::to_string(tuple.codomain) + "\n";
    for (Mask s : tuple.sets) {
        out += member_to_line(s);
        out += '\n';
    }
    return out;
}

SetTuple set_tuple_from_text(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty())
        throw ParseError("set tuple: empty input");
    std::istringstream header(lines[0]);
    std::string n_token, m_token;
    if (!(header >> n_token >> m_token))
        throw ParseError("set tuple: expected header 'n=<length> m=<codomain>'");
    const int length = parse_assignment(n_token, "n", "set tuple");
    const int codomain = parse_assignment(m_token, "m", "set tuple");
    if (length < 0)
        throw ParseError("set tuple: negative length");
    if (codomain < 0 || codomain > 64)
        throw ParseError("set tuple: codomain must be in 0..64");
    if (static_cast<int>(lines.size()) - 1 != length)
        throw ParseError("set tuple: expected exactly one entry line per tuple position");
    std::vector<Mask> sets;
    for (std::size_t i = 1; i < lines.size(); ++i)
        sets.push_back(parse_member_line(lines[i], codomain == 0 ? 1 : codomain, "set tuple"));
    try {
        return SetTuple(codomain, std::move(sets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("set tuple: ") + e.what());
    }
}

std::string coloring_to_json(const Coloring& coloring, int relation_count) {
    json j;
    j["N"] = coloring.colors.size();
    j["n"] = relation_count;
    j["colors"] = coloring.colors;
    return j.dump();
}

std::string audit_report_to_json(const AuditReport& report) {
    json j;
    j["N"] = report.prefix_length;
    json violations = json::array();
    for (const AuditEntry& v : report.certificate_violations)
        violations.push_back(
            {{"kind", "certificate"}, {"a", v.element}, {"i", v.relation}, {"count", v.count}, {"bound", v.bound}});
    for (const ProfileViolation& v : report.profile_violations)
        violations.push_back({{"kind", "profile"},
                              {"members", indices_from_mask(v.member)},
                              {"witness", v.witness},
                              {"count", v.count},
                              {"bound", v.bound}});
    j["violations"] = violations;
    json counts = json::array();
    for (const AuditEntry& e : report.counts)
        counts.push_back({{"a", e.element}, {"i", e.relation}, {"count", e.count}, {"bound", e.bound}});
    j["counts"] = counts;
    json profile = json::array();
    for (const ProfileObservation& o : report.profile) {
        json entry = {{"members", indices_from_mask(o.member)}, {"max_count", o.max_count}};
        if (o.bound)
            entry["bound"] = *o.bound;
        profile.push_back(entry);
    }
    j["profile"] = profile;
    return j.dump();
}

std::string witness_to_json(const SearchOutcome& outcome) {
    json j;
    switch (outcome.status) {
        case SearchStatus::Found:
            j["status"] = "found";
            break;
        case SearchStatus::None:
            j["status"] = "none";
            break;
        case SearchStatus::Indeterminate:
            j["status"] = "indeterminate";
            break;
    }
    j["nodes"] = outcome.nodes;
    if (outcome.witness) {
        const MorphismWitness& w = *outcome.witness;
        switch (w.kind) {
            case MorphismKind::Embedding:
                j["kind"] = "embed";
                break;
            case MorphismKind::WeakEmbedding:
                j["kind"] = "weak";
                j["pi"] = w.pi;
                break;
            case MorphismKind::Parbedding:
                j["kind"] = "parbed";
                j["beta"] = w.beta;
                break;
        }
        j["map"] = w.map;
    }
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace ihs
