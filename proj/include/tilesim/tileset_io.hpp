#pragma once

#include <iosfwd>
#include <string>

#include "tilesim/system.hpp"

namespace tilesim {

// Textual, line-oriented tileset format:
//
//   # <manifest line(s)>
//   tileset v1
//   dim <2|3>
//   glue <name>
//   relate <name> <name>
//   tile <id> [arm=<label>] [erroneous]
//   side <E|W|N|S|U|D> <glue> <strength>     (attaches to the last tile line)
//   place <x> <y> [<z>] <tile_id>            (seed assembly)
//
// Writing is canonical: glue/tile declaration order is preserved, sides are
// emitted in E,W,N,S,U,D order with null sides omitted, so
// write(parse(write(s))) == write(s) byte for byte.
std::string write_tileset(const TileSystem& sys);
TileSystem parse_tileset(const std::string& text);

TileSystem load_tileset_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace tilesim
