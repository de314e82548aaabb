#include "maxcert/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "maxcert/errors.hpp"

namespace maxcert {

namespace {

using nlohmann::ordered_json;

Rational parse_rational_field(const ordered_json& node, const std::string& where) {
    if (node.is_number_integer()) {
        return Rational(static_cast<long>(node.get<long long>()));
    }
    if (!node.is_string()) {
        throw ParseError(where + ": expected a rational string");
    }
    try {
        return Rational::from_string(node.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace

Instance parse_instance(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");

    if (!doc.contains("m") || !doc["m"].is_number_integer()) {
        throw ParseError("m: expected an integer");
    }
    const long long m_raw = doc["m"].get<long long>();
    if (m_raw < 1 || m_raw > 1'000'000) {
        throw ParseError("m: must be a positive integer, got " + std::to_string(m_raw));
    }
    const int m = static_cast<int>(m_raw);

    std::vector<std::string> names;
    if (doc.contains("elements")) {
        const auto& els = doc["elements"];
        if (!els.is_array() || static_cast<int>(els.size()) != m) {
            throw ParseError("elements: expected a list of " + std::to_string(m) + " names");
        }
        for (size_t i = 0; i < els.size(); ++i) {
            if (!els[i].is_string()) {
                throw ParseError("elements[" + std::to_string(i) + "]: expected a string");
            }
            names.push_back(els[i].get<std::string>());
        }
    }

    if (!doc.contains("op") || !doc["op"].is_array() || static_cast<int>(doc["op"].size()) != m) {
        throw ParseError("op: expected " + std::to_string(m) + " rows");
    }
    std::vector<std::vector<int>> rows(m);
    for (int x = 0; x < m; ++x) {
        const auto& row = doc["op"][x];
        if (!row.is_array() || static_cast<int>(row.size()) != m) {
            throw ParseError("op[" + std::to_string(x) + "]: expected " + std::to_string(m) +
                             " entries, got " + std::to_string(row.is_array() ? row.size() : 0));
        }
        for (int y = 0; y < m; ++y) {
            if (!row[y].is_number_integer()) {
                throw ParseError("op[" + std::to_string(x) + "][" + std::to_string(y) +
                                 "]: expected an integer index");
            }
            const long long v = row[y].get<long long>();
            if (v < 0 || v >= m) {
                throw ParseError("op[" + std::to_string(x) + "][" + std::to_string(y) +
                                 "]: index " + std::to_string(v) + " out of range for m=" +
                                 std::to_string(m));
            }
            rows[x].push_back(static_cast<int>(v));
        }
    }

    if (!doc.contains("p") || !doc.contains("q")) {
        throw ParseError("document: missing \"p\" or \"q\"");
    }
    Rational p = parse_rational_field(doc["p"], "p");
    Rational q = parse_rational_field(doc["q"], "q");
    if (!p.is_positive()) throw ParseError("p: must be positive, got " + p.str());
    if (!q.is_positive()) throw ParseError("q: must be positive, got " + q.str());

    std::vector<Fn> fns;
    if (doc.contains("functions")) {
        const auto& arr = doc["functions"];
        if (!arr.is_array()) throw ParseError("functions: expected a list");
        for (size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "functions[" + std::to_string(i) + "]";
            const auto& fnode = arr[i];
            if (!fnode.is_object() || !fnode.contains("name") || !fnode.contains("values")) {
                throw ParseError(where + ": expected { \"name\", \"values\" }");
            }
            if (!fnode["name"].is_string()) throw ParseError(where + ".name: expected a string");
            Fn f;
            f.name = fnode["name"].get<std::string>();
            const auto& vals = fnode["values"];
            if (!vals.is_array() || static_cast<int>(vals.size()) != m) {
                throw ParseError(where + ": expected " + std::to_string(m) + " values, got " +
                                 std::to_string(vals.is_array() ? vals.size() : 0));
            }
            for (size_t k = 0; k < vals.size(); ++k) {
                f.values.push_back(
                    parse_rational_field(vals[k], where + ".values[" + std::to_string(k) + "]"));
            }
            fns.push_back(std::move(f));
        }
    }

    return Instance(Magma(OpTable(std::move(rows)), std::move(names)),
                    ConvexityParams(std::move(p), std::move(q)), std::move(fns));
}

std::string serialize_instance(const Instance& inst) {
    ordered_json doc;
    doc["m"] = inst.size();
    if (inst.magma().has_names()) {
        doc["elements"] = inst.magma().element_names();
    }
    doc["op"] = inst.magma().table().rows();
    doc["p"] = inst.params().p().str();
    doc["q"] = inst.params().q().str();
    doc["functions"] = ordered_json::array();
    for (const auto& f : inst.functions()) {
        ordered_json fj;
        fj["name"] = f.name;
        auto vals = ordered_json::array();
        for (const auto& v : f.values) vals.push_back(v.str());
        fj["values"] = std::move(vals);
        doc["functions"].push_back(std::move(fj));
    }
    return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    out << serialize_instance(inst);
}

} // namespace maxcert
