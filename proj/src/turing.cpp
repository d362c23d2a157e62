#include "tilesim/turing.hpp"

#include <algorithm>

namespace tilesim {

const TmRule& TuringMachineSpec::rule(const std::string& q, const std::string& a) const {
    auto it = rules.find({q, a});
    if (it == rules.end())
        throw TilesimError("missing transition for (" + q + ", " + a + ")");
    return it->second;
}

void TuringMachineSpec::validate() const {
    auto has = [](const std::vector<std::string>& v, const std::string& s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    if (!has(states, start_state)) throw TilesimError("start state undeclared");
    if (!has(alphabet, blank)) throw TilesimError("blank symbol undeclared");
    for (const std::string& q : halting_states)
        if (!has(states, q)) throw TilesimError("halting state undeclared: " + q);
    for (const std::string& q : states) {
        if (halting(q)) continue;
        for (const std::string& a : alphabet) {
            const TmRule& r = rule(q, a);
            if (!has(states, r.next_state))
                throw TilesimError("rule targets undeclared state " + r.next_state);
            if (!has(alphabet, r.write))
                throw TilesimError("rule writes undeclared symbol " + r.write);
        }
    }
    for (const std::string& a : input)
        if (!has(alphabet, a)) throw TilesimError("input symbol undeclared: " + a);
}

TmInterpreter::TmInterpreter(const TuringMachineSpec& spec) : spec_(spec) {}

TmConfig TmInterpreter::initial() const {
    TmConfig c;
    c.tape = spec_.input;
    if (c.tape.empty()) c.tape.push_back(spec_.blank);
    c.head = 0;
    c.state = spec_.start_state;
    c.halted = spec_.halting(c.state);
    return c;
}

TmConfig TmInterpreter::step(const TmConfig& c) const {
    if (c.halted) return c;
    TmConfig n = c;
    while (n.head >= static_cast<int>(n.tape.size())) n.tape.push_back(spec_.blank);
    const TmRule& r = spec_.rule(n.state, n.tape[n.head]);
    n.tape[n.head] = r.write;
    n.state = r.next_state;
    if (r.move == Move::Right)
        ++n.head;
    else if (n.head > 0)
        --n.head;  // bounce at cell 0
    while (n.head >= static_cast<int>(n.tape.size())) n.tape.push_back(spec_.blank);
    n.halted = spec_.halting(n.state);
    return n;
}

TmConfig TmInterpreter::after(int n) const {
    TmConfig c = initial();
    for (int i = 0; i < n && !c.halted; ++i) c = step(c);
    return c;
}

TuringMachineSpec tm_preset(const std::string& name, const std::string& input) {
    TuringMachineSpec tm;
    tm.name = name;
    tm.blank = "_";
    for (char ch : input) tm.input.push_back(std::string(1, ch));
    if (name == "halt") {
        tm.states = {"h"};
        tm.alphabet = {"_", "1"};
        tm.start_state = "h";
        tm.halting_states = {"h"};
    } else if (name == "unary-increment") {
        // Scan right over 1s, write one more 1, halt.
        tm.states = {"s", "h"};
        tm.alphabet = {"_", "1"};
        tm.start_state = "s";
        tm.halting_states = {"h"};
        tm.rules[{"s", "1"}] = {"s", "1", Move::Right};
        tm.rules[{"s", "_"}] = {"h", "1", Move::Right};
    } else if (name == "runner") {
        tm.states = {"s"};
        tm.alphabet = {"_", "1"};
        tm.start_state = "s";
        tm.rules[{"s", "1"}] = {"s", "1", Move::Right};
        tm.rules[{"s", "_"}] = {"s", "1", Move::Right};
    } else if (name == "zigzag") {
        // Shuttle between cell 0 and cell 2: exercises left moves and bounce.
        tm.states = {"r1", "r2", "l1", "l2"};
        tm.alphabet = {"_", "a", "b"};
        tm.start_state = "r1";
        for (const std::string& a : tm.alphabet) {
            tm.rules[{"r1", a}] = {"r2", "a", Move::Right};
            tm.rules[{"r2", a}] = {"l1", "b", Move::Right};
            tm.rules[{"l1", a}] = {"l2", "a", Move::Left};
            tm.rules[{"l2", a}] = {"r1", "b", Move::Left};
        }
    } else {
        throw TilesimError("unknown TM preset: " + name);
    }
    tm.validate();
    return tm;
}

std::vector<std::string> tm_preset_names() {
    return {"halt", "unary-increment", "runner", "zigzag"};
}

}  // namespace tilesim
