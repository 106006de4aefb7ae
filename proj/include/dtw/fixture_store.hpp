#ifndef DTW_FIXTURE_STORE_HPP
#define DTW_FIXTURE_STORE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "dtw/fixtures.hpp"
#include "dtw/json_io.hpp"

namespace dtw::fixtures {

/// Fixture directory: DTWLAB_DATA overrides, then ./data, then the build
/// default when compiled in.
inline std::string data_dir() {
    if (const char* env = std::getenv("DTWLAB_DATA")) return env;
    if (std::filesystem::exists("data") && std::filesystem::is_directory("data")) return "data";
#ifdef DTWLAB_DATA_DIR
    return DTWLAB_DATA_DIR;
#else
    return "data";
#endif
}

inline std::string fixture_path(const std::string& name) { return data_dir() + "/" + name + ".json"; }

/// FNV-1a content fingerprint used by the CHECKSUMS manifest.
inline std::uint64_t content_hash(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// CHECKSUMS lines look like "a1b2... name.json".
inline std::map<std::string, std::uint64_t> load_checksums() {
    std::map<std::string, std::uint64_t> out;
    std::ifstream in(data_dir() + "/CHECKSUMS");
    if (!in) return out;  // manifest is optional at runtime
    std::string hash, file;
    while (in >> hash >> file) out[file] = std::stoull(hash, nullptr, 16);
    return out;
}

inline json load_fixture_json(const std::string& name) {
    std::string path = fixture_path(name);
    std::string content = read_file(path);
    static const std::map<std::string, std::uint64_t> sums = load_checksums();
    if (auto it = sums.find(name + ".json"); it != sums.end() && it->second != content_hash(content))
        throw Error("fixture " + name + " does not match its checksum (data corrupted?)");
    return json::parse(content);
}

inline const Entry& catalog_entry(const std::string& name) {
    for (const Entry& e : catalog())
        if (e.name == name) return e;
    throw Error("unknown fixture: " + name);
}

inline std::shared_ptr<const Digraph> load_graph(const std::string& name) {
    if (catalog_entry(name).kind != Kind::Graph) throw Error(name + " is not a graph fixture");
    return std::make_shared<const Digraph>(digraph_from_json(load_fixture_json(name)));
}

inline TreeDecomposition load_decomposition(const std::string& name) {
    const Entry& e = catalog_entry(name);
    if (e.kind != Kind::Decomposition) throw Error(name + " is not a decomposition fixture");
    return decomposition_from_json(load_fixture_json(name), load_graph(e.base));
}

inline std::pair<StrategyTree, std::shared_ptr<const Digraph>> load_strategy(const std::string& name) {
    const Entry& e = catalog_entry(name);
    if (e.kind != Kind::Strategy) throw Error(name + " is not a strategy fixture");
    auto host = load_graph(e.base);
    return {strategy_from_json(load_fixture_json(name), *host), host};
}

inline MinorWitness load_witness(const std::string& name) {
    const Entry& e = catalog_entry(name);
    if (e.kind != Kind::Witness) throw Error(name + " is not a witness fixture");
    return witness_from_json(load_fixture_json(name));
}

inline std::pair<Bramble, std::shared_ptr<const Digraph>> load_bramble(const std::string& name) {
    const Entry& e = catalog_entry(name);
    if (e.kind != Kind::Bramble) throw Error(name + " is not a bramble fixture");
    auto host = load_graph(e.base);
    return {bramble_from_json(load_fixture_json(name), *host), host};
}

/// Loads a fixture and checks it against its catalogue claim: graphs match
/// the in-code transcription, decompositions validate at their stated
/// flavor and width, witnesses verify, strategies validate with the right
/// monotonicity, brambles validate. Returns an error message or empty.
inline std::string check_fixture(const std::string& name) {
    try {
        const Entry& e = catalog_entry(name);
        switch (e.kind) {
            case Kind::Graph: {
                auto g = load_graph(name);
                if (!same_named_digraph(*g, build_graph(name))) return "graph differs from the reference transcription";
                break;
            }
            case Kind::Decomposition: {
                TreeDecomposition T = load_decomposition(name);
                FlavorReport rep = validate(T);
                if (!rep.valid) return "decomposition does not validate";
                if (rep.width != 3) return "width is " + std::to_string(rep.width) + ", expected 3";
                if (name == "dtd_SC0_D2p" && !validate(T.with_flavor(Flavor::SCd)).valid)
                    return "decomposition should also be SCd-valid";
                break;
            }
            case Kind::Witness: {
                const std::string target =
                    name == "witness_D1_D1p" ? "D1" : name == "witness_D2_D2p" ? "D2" : "bramble_D";
                auto host = load_graph(e.base);
                auto tg = load_graph(target);
                if (auto reason = verify_witness(*tg, *host, load_witness(name))) return *reason;
                break;
            }
            case Kind::Strategy: {
                auto [T, host] = load_strategy(name);
                StrategyVerdict v = validate_strategy_tree(*host, T);
                if (!v.valid) return "strategy tree does not validate";
                bool want_monotone = name != "strategy_D2_nonmono";
                if (v.robber_monotone != want_monotone) return "robber-monotone flag is off";
                if (T.width() != 4) return "width is " + std::to_string(T.width()) + ", expected 4";
                break;
            }
            case Kind::Bramble: {
                auto [b, host] = load_bramble(name);
                if (!validate_bramble(*host, b).valid) return "bramble does not validate";
                if (bramble_order(*host, b).order() != 2) return "order differs from the stated 2";
                break;
            }
        }
    } catch (const Error& err) {
        return err.what();
    }
    return "";
}

}  // namespace dtw::fixtures

#endif
