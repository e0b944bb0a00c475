#include "wreathmac/jsonio.hpp"

#include <json.hpp>

namespace wreathmac {

using nlohmann::json;

namespace {

std::string schur_key(const MultiPartition& mp) {
    if (mp.r() == 1) {
        std::string s = mp.comp(0).str();
        return "s" + s;
    }
    return mp.str();
}

MultiPartition parse_schur_key(const std::string& key, int r) {
    if (r == 1 && !key.empty() && key[0] == 's')
        return MultiPartition(std::vector<Partition>{Partition::parse(key.substr(1))});
    MultiPartition mp = MultiPartition::parse(key);
    if (mp.r() != r) throw ParseError("schur key has wrong number of components: " + key);
    return mp;
}

}  // namespace

std::string multisym_to_json(const MultiSymFn& f) {
    json terms = json::object();
    for (const auto& [mp, c] : f.schur_expansion()) terms[schur_key(mp)] = c.str();
    json doc;
    doc["basis"] = "schur";
    doc["terms"] = terms;
    return doc.dump();
}

MultiSymFn multisym_from_json(const std::string& text, int r) {
    json doc = json::parse(text);
    if (doc.at("basis").get<std::string>() != "schur") throw ParseError("multisym json: unsupported basis");
    MultiSymFn::PMap terms;
    for (const auto& [key, val] : doc.at("terms").items())
        terms[parse_schur_key(key, r)] = RatFn2::parse(val.get<std::string>());
    return MultiSymFn::from_schur(r, terms);
}

std::string cache_entry_to_json(const std::string& keyjson, const MultiSymFn& f) {
    json doc;
    doc["key"] = json::parse(keyjson);
    doc["value"] = json::parse(multisym_to_json(f));
    return doc.dump(1);
}

std::pair<std::string, MultiSymFn> cache_entry_from_json(const std::string& text, int r) {
    json doc = json::parse(text);
    return {doc.at("key").dump(), multisym_from_json(doc.at("value").dump(), r)};
}

}  // namespace wreathmac
