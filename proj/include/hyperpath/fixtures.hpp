#pragma once

#include <string>
#include <vector>

namespace hyperpath {

struct Fixture {
    std::string name;     // e.g. "ex34"
    std::string filename; // e.g. "ex34.dhg.json"
    std::string kind;
    std::string text;
};

const std::vector<Fixture>& fixtures();

// Looks a fixture up by name or filename; nullptr if absent.
const Fixture* find_fixture(const std::string& name);

} // namespace hyperpath
