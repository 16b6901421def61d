#include "invsg/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace invsg {

using nlohmann::json;

namespace {

json parse_json(std::string const& text)
{
    try {
        return json::parse(text);
    } catch (json::parse_error const& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

template <class T>
T get_field(json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (json::exception const& e) {
        throw InvalidInput(std::string("bad field \"") + key + "\": " + e.what());
    }
}

} // namespace

std::string read_text_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FiniteInvSemigroup parse_carrier(std::string const& text)
{
    json j = parse_json(text);
    auto n = get_field<long long>(j, "n");
    auto rows = get_field<std::vector<std::vector<long long>>>(j, "table");
    std::vector<std::string> names;
    if (j.contains("names"))
        names = get_field<std::vector<std::string>>(j, "names");
    if (n <= 0)
        throw ValidationError(ValidationError::Kind::Empty, {}, "carrier must have at least one element");
    if (rows.size() != std::size_t(n))
        throw ValidationError(ValidationError::Kind::NotSquare, {},
                              "table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    std::vector<std::vector<ElementId>> table;
    for (std::size_t s = 0; s < rows.size(); ++s) {
        if (rows[s].size() != std::size_t(n))
            throw ValidationError(ValidationError::Kind::NotSquare, {ElementId(s)},
                                  "row " + std::to_string(s) + " has " + std::to_string(rows[s].size()) + " entries");
        std::vector<ElementId> row;
        for (std::size_t t = 0; t < rows[s].size(); ++t) {
            long long v = rows[s][t];
            if (v < 0 || v >= n)
                throw ValidationError(ValidationError::Kind::EntryOutOfRange, {ElementId(s), ElementId(t)},
                                      "entry [" + std::to_string(s) + "][" + std::to_string(t) +
                                          "] = " + std::to_string(v) + " out of range");
            row.push_back(ElementId(v));
        }
        table.push_back(std::move(row));
    }
    if (!names.empty() && names.size() != std::size_t(n))
        throw InvalidInput("names has " + std::to_string(names.size()) + " entries, expected " + std::to_string(n));
    return FiniteInvSemigroup::validate(table, std::move(names));
}

FiniteInvSemigroup read_carrier_file(std::string const& path)
{
    return parse_carrier(read_text_file(path));
}

std::string carrier_to_json(FiniteInvSemigroup const& s)
{
    json j;
    j["n"] = s.size();
    j["table"] = s.rows();
    if (!s.names().empty())
        j["names"] = s.names();
    return j.dump();
}

FiniteTopology parse_topology(std::string const& text)
{
    json j = parse_json(text);
    auto points = get_field<int>(j, "points");
    auto opens = get_field<std::vector<std::vector<int>>>(j, "opens");
    if (points < 1 || points > kMaxGround)
        throw InvalidInput("NotATopology: points must be in [1, " + std::to_string(kMaxGround) + "]");
    std::vector<PointSet> sets;
    for (auto const& o : opens) {
        PointSet u = 0;
        for (int x : o) {
            if (x < 0 || x >= points)
                throw InvalidInput("NotATopology: point " + std::to_string(x) + " out of range");
            u |= PointSet(1u << x);
        }
        sets.push_back(u);
    }
    return FiniteTopology::validate(points, std::move(sets));
}

FiniteInvSemigroup read_finite_subject(std::string const& path)
{
    std::string text = read_text_file(path);
    json j = parse_json(text);
    if (j.is_object() && j.contains("points"))
        return pseudogroup_of_space(parse_topology(text)).carrier;
    return parse_carrier(text);
}

} // namespace invsg
