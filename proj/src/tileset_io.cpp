#include "tilesim/tileset_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tilesim {

static const char* kDirLetters = "EWNSUD";

static int dir_from_letter(const std::string& s) {
    if (s.size() == 1)
        for (int d = 0; d < kNumDirs; ++d)
            if (s[0] == kDirLetters[d]) return d;
    return -1;
}

std::string write_tileset(const TileSystem& sys) {
    std::ostringstream out;
    {
        std::istringstream m(sys.manifest);
        std::string line;
        while (std::getline(m, line)) out << "# " << line << "\n";
    }
    out << "tileset v1\n";
    out << "dim " << sys.dimension << "\n";
    for (GlueId g = 1; g < sys.glue_count(); ++g)
        out << "glue " << sys.glue_name(g) << "\n";
    for (const auto& [a, b] : sys.relation_pairs())
        out << "relate " << sys.glue_name(a) << " " << sys.glue_name(b) << "\n";
    for (const TileType& t : sys.tiles()) {
        out << "tile " << t.id;
        if (t.arm >= 0) out << " arm=" << sys.arm_name(t.arm);
        if (t.erroneous) out << " erroneous";
        out << "\n";
        for (int d = 0; d < kNumDirs; ++d) {
            const GlueSpec& g = t.sides[d];
            if (g.name == kNullGlue && g.strength == 0) continue;
            out << "side " << kDirLetters[d] << " " << sys.glue_name(g.name) << " "
                << g.strength << "\n";
        }
    }
    for (const auto& [pos, tile] : sys.seed) {
        out << "place " << pos.x << " " << pos.y;
        if (sys.dimension == 3) out << " " << pos.z;
        out << " " << sys.tile(tile).id << "\n";
    }
    return out.str();
}

TileSystem parse_tileset(const std::string& text) {
    TileSystem sys;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    bool in_preamble = true;
    std::string manifest;
    TileType pending;
    bool has_pending = false;

    auto fail = [&](const std::string& msg) {
        throw TilesimError("tileset parse error at line " + std::to_string(lineno) +
                           ": " + msg);
    };
    auto flush_tile = [&]() {
        if (has_pending) {
            sys.add_tile(pending);
            pending = TileType{};
            has_pending = false;
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (in_preamble) {
                std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
                manifest += manifest.empty() ? body : "\n" + body;
            }
            continue;
        }
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (!header_seen) {
            std::string version;
            ls >> version;
            if (kw != "tileset" || version != "v1") fail("expected 'tileset v1' header");
            header_seen = true;
            in_preamble = false;
            continue;
        }
        if (kw == "dim") {
            int d = 0;
            if (!(ls >> d) || (d != 2 && d != 3)) fail("bad dimension");
            sys.dimension = d;
        } else if (kw == "glue") {
            std::string name;
            if (!(ls >> name)) fail("glue needs a name");
            sys.intern_glue(name);
        } else if (kw == "relate") {
            std::string a, b;
            if (!(ls >> a >> b)) fail("relate needs two glue names");
            GlueId ga = sys.find_glue(a), gb = sys.find_glue(b);
            if (ga == kNullGlue || gb == kNullGlue) fail("relate references unknown glue");
            sys.add_relation(ga, gb);
        } else if (kw == "tile") {
            flush_tile();
            if (!(ls >> pending.id)) fail("tile needs an id");
            std::string attr;
            while (ls >> attr) {
                if (attr == "erroneous")
                    pending.erroneous = true;
                else if (attr.rfind("arm=", 0) == 0)
                    pending.arm = sys.intern_arm(attr.substr(4));
                else
                    fail("unknown tile attribute '" + attr + "'");
            }
            has_pending = true;
        } else if (kw == "side") {
            if (!has_pending) fail("side before any tile");
            std::string dir, glue;
            int strength = 0;
            if (!(ls >> dir >> glue >> strength)) fail("side needs dir, glue, strength");
            int d = dir_from_letter(dir);
            if (d < 0) fail("bad direction '" + dir + "'");
            GlueId g = sys.find_glue(glue);
            if (g == kNullGlue) fail("side references undeclared glue '" + glue + "'");
            if (strength < 0 || strength > 2) fail("strength out of range");
            pending.sides[d] = GlueSpec{g, strength};
        } else if (kw == "place") {
            flush_tile();
            std::vector<std::string> tok;
            std::string t;
            while (ls >> t) tok.push_back(t);
            std::size_t want = sys.dimension == 3 ? 4 : 3;
            if (tok.size() != want) fail("place needs coordinates and a tile id");
            Position p;
            try {
                p.x = std::stoi(tok[0]);
                p.y = std::stoi(tok[1]);
                if (sys.dimension == 3) p.z = std::stoi(tok[2]);
            } catch (const std::exception&) {
                fail("bad coordinate");
            }
            int idx = sys.tile_index(tok.back());
            if (idx < 0) fail("place references unknown tile '" + tok.back() + "'");
            sys.seed.emplace_back(p, idx);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    flush_tile();
    sys.manifest = manifest;
    sys.validate();
    return sys;
}

TileSystem load_tileset_file(const std::string& path) {
    return parse_tileset(read_text_file(path));
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TilesimError("cannot write " + path);
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TilesimError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace tilesim
