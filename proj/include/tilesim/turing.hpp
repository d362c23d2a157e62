#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tilesim/system.hpp"

namespace tilesim {

enum class Move { Left, Right };

struct TmRule {
    std::string next_state;
    std::string write;
    Move move = Move::Right;
};

// Deterministic single-tape machine on a one-way infinite tape. A left move
// at cell 0 stays at cell 0 (bounce). Transitions must be total on
// non-halting states.
struct TuringMachineSpec {
    std::string name;
    std::vector<std::string> states;
    std::vector<std::string> alphabet;       // tape symbols; blank included
    std::string blank = "_";
    std::string start_state;
    std::set<std::string> halting_states;
    std::map<std::pair<std::string, std::string>, TmRule> rules;
    std::vector<std::string> input;          // initial tape contents

    bool halting(const std::string& q) const { return halting_states.count(q) != 0; }
    const TmRule& rule(const std::string& q, const std::string& a) const;
    void validate() const;
};

// Instantaneous description used as the oracle against wedge rows.
struct TmConfig {
    std::vector<std::string> tape;
    int head = 0;
    std::string state;
    bool halted = false;

    const std::string& symbol_at(int i, const std::string& blank) const {
        static const std::string empty;
        (void)empty;
        return i < static_cast<int>(tape.size()) ? tape[i] : blank;
    }
};

class TmInterpreter {
public:
    explicit TmInterpreter(const TuringMachineSpec& spec);
    TmConfig initial() const;
    // One head move; no-op if halted.
    TmConfig step(const TmConfig& c) const;
    // Configuration after n moves (stops early on halt).
    TmConfig after(int n) const;

private:
    const TuringMachineSpec& spec_;
};

// Named machines used by the CLI and tests.
//   halt           halts immediately
//   unary-increment  appends one '1' to a unary string, then halts
//   runner         moves right forever over blanks
//   zigzag         bounces between cell 0 and cell 2 forever
TuringMachineSpec tm_preset(const std::string& name, const std::string& input);
std::vector<std::string> tm_preset_names();

}  // namespace tilesim
