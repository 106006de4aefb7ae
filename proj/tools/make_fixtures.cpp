// Regenerates the bundled instance data under data/ from the reference
// transcription in dtw/fixtures.hpp, along with the CHECKSUMS manifest.
// Usage: make_fixtures [output-dir]

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "dtw/fixture_store.hpp"
#include "dtw/fixtures.hpp"
#include "dtw/json_io.hpp"

using namespace dtw;

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);
    std::map<std::string, std::string> files;

    auto put = [&](const std::string& name, const json& j) { files[name + ".json"] = j.dump(2) + "\n"; };

    auto d1 = std::make_shared<const Digraph>(fixtures::make_d1());
    auto d1p = std::make_shared<const Digraph>(fixtures::make_d1p());
    auto d2 = std::make_shared<const Digraph>(fixtures::make_d2());
    auto d2p = std::make_shared<const Digraph>(fixtures::make_d2p());
    Digraph bd = fixtures::make_bramble_d();
    Digraph bdp = fixtures::make_bramble_dp();

    put("D1", to_json(*d1));
    put("D1p", to_json(*d1p));
    put("D2", to_json(*d2));
    put("D2p", to_json(*d2p));
    put("bramble_D", to_json(bd));
    put("bramble_Dp", to_json(bdp));
    put("dtd_SC0_D1", to_json(fixtures::make_dtd_sc0_d1(d1)));
    put("dtd_NCW_D1p", to_json(fixtures::make_dtd_ncw_d1p(d1p)));
    put("dtd_NCW_D2", to_json(fixtures::make_dtd_ncw_d2(d2)));
    put("dtd_SC0_D2p", to_json(fixtures::make_dtd_sc0_d2p(d2p)));
    // the same trees read as NCW0, the flavor the minor-lifting operation needs
    put("dtd_NCW0_D2p", to_json(fixtures::make_dtd_sc0_d2p(d2p).with_flavor(Flavor::NCW0)));
    put("dtd_NCW0_D1p", to_json(fixtures::make_dtd_ncw_d1p(d1p).with_flavor(Flavor::NCW0)));
    put("witness_D1_D1p", to_json(fixtures::make_witness_d1_d1p()));
    put("witness_D2_D2p", to_json(fixtures::make_witness_d2_d2p()));
    put("witness_bramble", to_json(fixtures::make_witness_bramble()));
    put("strategy_D1_sweep", to_json(*d1, fixtures::make_strategy_d1_sweep(*d1)));
    put("strategy_D1_rooted", to_json(*d1, fixtures::make_strategy_d1_rooted(*d1)));
    put("strategy_D2p_mono", to_json(*d2p, fixtures::make_strategy_d2p_mono(*d2p)));
    put("strategy_D2_nonmono", to_json(*d2, fixtures::make_strategy_d2_nonmono(*d2)));
    put("bramble_weak_D", to_json(bd, fixtures::make_bramble_weak_d(bd)));

    std::ostringstream sums;
    for (const auto& [name, content] : files) {
        std::ofstream out(dir + "/" + name, std::ios::binary);
        out << content;
        sums << std::hex << std::setw(16) << std::setfill('0') << fixtures::content_hash(content) << "  "
             << name << "\n";
    }
    std::ofstream(dir + "/CHECKSUMS") << sums.str();
    std::cout << "wrote " << files.size() << " fixtures and CHECKSUMS to " << dir << "\n";
    return 0;
}
