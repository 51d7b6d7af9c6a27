#include "tangency/io.hpp"

#include <charconv>

namespace tangency {

namespace detail {

std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<std::string> tokens;
        for (std::string tok; is >> tok;) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw PreconditionError("bad " + what + ": \"" + s + "\"");
    return v;
}

}  // namespace detail

nlohmann::json to_json(const CountRecord& r) {
    nlohmann::json j{{"q", r.q}, {"k", r.k}, {"count", r.count}, {"n", r.n}, {"d", r.d}, {"elapsedMs", r.elapsed_ms}};
    if (!r.source.empty()) j["source"] = r.source;
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

CountRecord count_record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw PreconditionError("count record must be a JSON object");
    for (const char* key : {"q", "k", "count"})
        if (!j.contains(key) || !j.at(key).is_number_integer())
            throw PreconditionError(std::string("count record needs integer field \"") + key + "\"");
    CountRecord r;
    r.q = j.at("q").get<std::uint64_t>();
    r.k = j.at("k").get<int>();
    if (j.at("count").get<long long>() < 0) throw PreconditionError("count must be >= 0");
    r.count = j.at("count").get<std::uint64_t>();
    r.n = j.value("n", 0);
    r.d = j.value("d", 0);
    r.elapsed_ms = j.value("elapsedMs", 0.0);
    r.source = j.value("source", std::string());
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::vector<CountRecord> read_count_series(const nlohmann::json& j) {
    const nlohmann::json* arr = &j;
    if (j.is_object() && j.contains("records")) arr = &j.at("records");
    if (!arr->is_array()) throw PreconditionError("series must be an array of count records");
    std::vector<CountRecord> out;
    for (const auto& item : *arr) out.push_back(count_record_from_json(item));
    if (!out.empty()) {
        const int k = out.front().k;
        for (const auto& r : out)
            if (r.k != k) throw PreconditionError("series mixes contact orders");
    }
    return out;
}

nlohmann::json to_json(const SlopeReport& r) {
    return nlohmann::json{
        {"slope", r.slope}, {"stepRatios", r.step_ratios}, {"qUsed", r.q_used}, {"warnings", r.warnings}};
}

nlohmann::json to_json(const BoundResult& r, TermOrder order) {
    return nlohmann::json{{"polynomial", r.polynomial.to_string(order)},
                          {"validity", r.validity},
                          {"validFromD", r.valid_from_d},
                          {"pipeline", r.pipeline}};
}

nlohmann::json to_json(const FermatPlane& p) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [i, j] : p.pairing) pairs.push_back({i, j});
    return nlohmann::json{{"pairing", pairs}, {"rootExponents", {p.roots[0], p.roots[1], p.roots[2]}}};
}

}  // namespace tangency
