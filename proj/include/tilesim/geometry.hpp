#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace tilesim {

// Lattice directions. 2D systems use the first four; 3D adds Up/Down.
enum class Dir : int { East = 0, West = 1, North = 2, South = 3, Up = 4, Down = 5 };

inline constexpr int kNumDirs = 6;

inline constexpr Dir opposite(Dir d) {
    switch (d) {
    case Dir::East: return Dir::West;
    case Dir::West: return Dir::East;
    case Dir::North: return Dir::South;
    case Dir::South: return Dir::North;
    case Dir::Up: return Dir::Down;
    case Dir::Down: return Dir::Up;
    }
    return Dir::East;
}

inline const char* dir_name(Dir d) {
    static const char* names[] = {"E", "W", "N", "S", "U", "D"};
    return names[static_cast<int>(d)];
}

// Integer lattice position; z stays 0 in 2D systems.
struct Position {
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const Position&, const Position&) = default;
    friend auto operator<=>(const Position&, const Position&) = default;

    Position shifted(Dir d) const {
        switch (d) {
        case Dir::East: return {x + 1, y, z};
        case Dir::West: return {x - 1, y, z};
        case Dir::North: return {x, y + 1, z};
        case Dir::South: return {x, y - 1, z};
        case Dir::Up: return {x, y, z + 1};
        case Dir::Down: return {x, y, z - 1};
        }
        return *this;
    }
};

inline std::string to_string(const Position& p, int dimension) {
    std::string s = std::to_string(p.x) + "," + std::to_string(p.y);
    if (dimension == 3) s += "," + std::to_string(p.z);
    return s;
}

struct PositionHash {
    std::size_t operator()(const Position& p) const {
        std::uint64_t h = static_cast<std::uint32_t>(p.x);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(p.y);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(p.z);
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

}  // namespace tilesim
