#include <hyperpath/fixtures.hpp>

namespace hyperpath {

namespace {

const char* kEx34 = R"({
  "vertices": ["1", "2", "3", "4"],
  "edges": [
    {"origin": ["1"], "end": ["2"]},
    {"origin": ["2"], "end": ["3", "4"]},
    {"origin": ["4"], "end": ["1"]},
    {"origin": ["1"], "end": ["2", "3"]},
    {"origin": ["2"], "end": ["3"]},
    {"origin": ["2"], "end": ["4"]}
  ]
}
)";

const char* kEx314 = R"({
  "vertices": ["1", "2", "3", "4", "5", "6"],
  "edges": [
    {"origin": ["1"], "end": ["2"]},
    {"origin": ["1"], "end": ["3"]},
    {"origin": ["2"], "end": ["4", "6"]},
    {"origin": ["3"], "end": ["5"]},
    {"origin": ["4"], "end": ["5", "6"]}
  ]
}
)";

const char* kEx319 = R"({
  "vertices": ["1", "2", "3", "4", "5", "6", "7", "8"],
  "edges": [
    {"origin": ["1"], "end": ["3", "4"]},
    {"origin": ["1"], "end": ["5", "6"]},
    {"origin": ["1"], "end": ["7", "8"]},
    {"origin": ["2"], "end": ["3", "4"]},
    {"origin": ["2"], "end": ["5", "6"]},
    {"origin": ["2"], "end": ["7", "8"]},
    {"origin": ["3", "4"], "end": ["5", "6"]},
    {"origin": ["5", "6"], "end": ["7", "8"]},
    {"origin": ["7", "8"], "end": ["3", "4"]}
  ]
}
)";

const char* kEx32G = R"({
  "vertices": ["1", "2", "3", "4"],
  "edges": [
    {"origin": ["1"], "end": ["2", "3"]},
    {"origin": ["1"], "end": ["2", "4"]}
  ]
}
)";

const char* kEx32H = R"({
  "vertices": ["a", "b", "c"],
  "edges": [
    {"origin": ["a"], "end": ["b", "c"]}
  ]
}
)";

const char* kEx32F = R"({
  "vertex_map": {"1": "a", "2": "b", "3": "c", "4": "c"}
}
)";

const char* kCycle3 = R"({
  "vertices": ["1", "2", "3"],
  "edges": [
    {"origin": ["1"], "end": ["2"]},
    {"origin": ["2"], "end": ["3"]},
    {"origin": ["3"], "end": ["1"]}
  ]
}
)";

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{
        {"ex34", "ex34.dhg.json", "directed-hypergraph", kEx34},
        {"ex314", "ex314.dhg.json", "directed-hypergraph", kEx314},
        {"ex319", "ex319.dhg.json", "directed-hypergraph", kEx319},
        {"ex32-g", "ex32-g.dhg.json", "directed-hypergraph", kEx32G},
        {"ex32-h", "ex32-h.dhg.json", "directed-hypergraph", kEx32H},
        {"ex32-f", "ex32-f.map.json", "morphism", kEx32F},
        {"cycle3", "cycle3.dhg.json", "directed-hypergraph", kCycle3},
    };
    return all;
}

const Fixture* find_fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name || f.filename == name) return &f;
    return nullptr;
}

} // namespace hyperpath
