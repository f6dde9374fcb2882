#include "fairsplit/json_io.hpp"

#include <algorithm>
#include <set>

namespace fairsplit::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

int positive_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) fail(what + " must be an integer");
    auto v = j.get<long long>();
    if (v < 1 || v > 1'000'000) fail(what + " must be a positive integer");
    return static_cast<int>(v);
}

std::vector<int> index_list(const json& j, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(positive_int(x, what + " entry") - 1);
    return out;
}

json one_based(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

}  // namespace

Instance parse_instance(const json& j) {
    if (!j.is_object()) fail("instance must be a JSON object");
    Instance inst;
    if (!j.contains("kind") || !j["kind"].is_string()) fail("missing string field 'kind'");
    inst.kind = j["kind"].get<std::string>();
    if (inst.kind != "path" && inst.kind != "cycle" && inst.kind != "necklace")
        fail("kind must be one of path, cycle, necklace");
    if (!j.contains("colors")) fail("missing field 'colors'");
    inst.colors = index_list(j["colors"], "colors");
    if (inst.colors.empty()) fail("colors must be nonempty");
    int m = *std::max_element(inst.colors.begin(), inst.colors.end()) + 1;
    std::vector<bool> seen(m, false);
    for (int c : inst.colors) seen[c] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail("color indices must be contiguous from 1");

    if (j.contains("q")) inst.q = positive_int(j["q"], "q");
    if (inst.kind == "necklace") {
        if (!inst.q) fail("necklace instances need q");
        if (*inst.q < 2) fail("q must be at least 2 for a necklace");
    }
    if (j.contains("advantages")) {
        if (inst.kind != "necklace") fail("advantages only apply to necklaces");
        const json& adv = j["advantages"];
        if (!adv.is_object()) fail("advantages must be an object");
        const int q = *inst.q;
        for (auto it = adv.begin(); it != adv.end(); ++it) {
            int color;
            try {
                std::size_t used = 0;
                color = std::stoi(it.key(), &used) - 1;
                if (used != it.key().size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                fail("advantages key '" + it.key() + "' is not a color index");
            }
            if (color < 0 || color >= m) fail("advantages key '" + it.key() + "' is not a color");
            int a = static_cast<int>(std::count(inst.colors.begin(), inst.colors.end(), color));
            int r = a % q;
            if (r == 0) fail("advantages for color " + it.key() + ": remainder is 0");
            std::vector<int> thieves = index_list(it.value(), "advantages thieves");
            if (static_cast<int>(thieves.size()) != r)
                fail("advantages for color " + it.key() + " must list exactly " + std::to_string(r) + " thieves");
            std::set<int> distinct(thieves.begin(), thieves.end());
            if (static_cast<int>(distinct.size()) != r) fail("advantages for color " + it.key() + " repeat a thief");
            if (*distinct.rbegin() >= q) fail("advantages for color " + it.key() + " name a thief beyond q");
            inst.advantages.advantaged[color] = std::vector<int>(distinct.begin(), distinct.end());
        }
    }
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_instance(j);
}

json to_json(const Instance& inst) {
    json j{{"kind", inst.kind}, {"colors", one_based(inst.colors)}};
    if (inst.q) j["q"] = *inst.q;
    if (!inst.advantages.advantaged.empty()) {
        json adv = json::object();
        for (const auto& [c, t] : inst.advantages.advantaged) adv[std::to_string(c + 1)] = one_based(t);
        j["advantages"] = adv;
    }
    return j;
}

json rational_to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

Rational rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_number_integer() ||
        !j["den"].is_number_integer())
        fail("rational must be {\"num\": int, \"den\": int}");
    auto den = j["den"].get<std::int64_t>();
    if (den <= 0) fail("rational denominator must be positive");
    return Rational(j["num"].get<std::int64_t>(), den);
}

json to_json(const PairSplit& split) {
    json removed = json::object();
    for (std::size_t c = 0; c < split.removed.size(); ++c) removed[std::to_string(c + 1)] = split.removed[c] + 1;
    return {{"removed", removed}, {"s1", one_based(split.s1)}, {"s2", one_based(split.s2)}};
}

namespace {

// {"1": x, "2": y, ...} with keys exactly 1..m
std::vector<json> color_keyed(const json& j, const std::string& what) {
    if (!j.is_object()) fail(what + " must be an object keyed by color");
    std::vector<json> out(j.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        int c = 0;
        try {
            c = std::stoi(it.key());
        } catch (const std::exception&) {
            fail(what + " key '" + it.key() + "' is not a color");
        }
        if (c < 1 || c > static_cast<int>(out.size())) fail(what + " keys must be 1..m");
        out[c - 1] = it.value();
    }
    return out;
}

}  // namespace

PairSplit pair_split_from_json(const json& j) {
    if (!j.is_object() || !j.contains("removed") || !j.contains("s1") || !j.contains("s2"))
        fail("pair split needs removed, s1, s2");
    PairSplit p;
    for (const json& v : color_keyed(j["removed"], "removed")) p.removed.push_back(positive_int(v, "removed") - 1);
    p.s1 = index_list(j["s1"], "s1");
    p.s2 = index_list(j["s2"], "s2");
    return p;
}

json to_json(const StableSplit& split) {
    json removed = json::object();
    for (std::size_t c = 0; c < split.removed.size(); ++c) removed[std::to_string(c + 1)] = one_based(split.removed[c]);
    json classes = json::array();
    for (const auto& cls : split.classes) classes.push_back(one_based(cls));
    return {{"q", split.q}, {"removed", removed}, {"classes", classes}};
}

StableSplit stable_split_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("removed") || !j.contains("classes"))
        fail("stable split needs q, removed, classes");
    StableSplit s;
    s.q = positive_int(j["q"], "q");
    for (const json& v : color_keyed(j["removed"], "removed")) s.removed.push_back(index_list(v, "removed"));
    if (!j["classes"].is_array()) fail("classes must be an array");
    for (const json& cls : j["classes"]) s.classes.push_back(index_list(cls, "class"));
    return s;
}

json to_json(const ContinuousSplitting& cont) {
    json cuts = json::array();
    for (const Rational& c : cont.cuts) cuts.push_back(rational_to_json(c));
    return {{"cuts", cuts}, {"owners", one_based(cont.owners)}};
}

ContinuousSplitting continuous_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cuts") || !j.contains("owners") || !j["cuts"].is_array())
        fail("continuous splitting needs cuts and owners");
    ContinuousSplitting c;
    for (const json& x : j["cuts"]) c.cuts.push_back(rational_from_json(x));
    c.owners = index_list(j["owners"], "owners");
    return c;
}

json to_json(const DiscreteSplitting& split) {
    return {{"owner", one_based(split.owner)}, {"cuts", split.cuts()}};
}

DiscreteSplitting discrete_from_json(const json& j) {
    if (!j.is_object() || !j.contains("owner")) fail("discrete splitting needs owner");
    return DiscreteSplitting{index_list(j["owner"], "owner")};
}

json certificate(const std::vector<std::string>& violations) {
    return {{"ok", violations.empty()}, {"violations", violations}};
}

}  // namespace fairsplit::io
