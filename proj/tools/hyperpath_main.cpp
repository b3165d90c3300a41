#include <hyperpath/cylinder.hpp>
#include <hyperpath/document.hpp>
#include <hyperpath/errors.hpp>
#include <hyperpath/fixtures.hpp>
#include <hyperpath/homotopy.hpp>
#include <hyperpath/pc_morphism.hpp>
#include <hyperpath/report.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hp = hyperpath;
using nlohmann::json;

namespace {

struct Input {
    std::string name;
    std::string text;
};

// An input argument is a file path or the name of a bundled fixture.
Input load_input(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return {arg, buf.str()};
    }
    if (const hp::Fixture* f = hp::find_fixture(arg)) return {f->filename, f->text};
    throw hp::ParseError("no such file or fixture: " + arg);
}

struct CommonFlags {
    bool json_out = false;
};

void print_report(const hp::Report& report, const json& human_free_payload, bool json_out,
                  const std::string& human) {
    (void)human_free_payload;
    if (json_out)
        std::cout << report.to_string();
    else
        std::cout << human;
}

std::vector<std::string> echo(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 0; i < argc; ++i) out.emplace_back(argv[i]);
    return out;
}

std::string betti_line(const hp::BettiTable& t) {
    std::string bs;
    for (std::size_t b : t.betti) bs += (bs.empty() ? "" : ", ") + std::to_string(b);
    return "betti = (" + bs + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path homology of directed hypergraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hp::kEngineVersion));

    std::string input_arg, theory_name = "connective", field_name = "Q", law_id, emit;
    std::string source_arg, target_arg, map_arg, map2_arg, write_dir;
    int density = 1, max_dim = 2, max_length = 3, induced_dim = -1;
    std::size_t max_steps = 8;
    bool json_out = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a document");
    validate_cmd->add_option("input", input_arg, "file or fixture")->required();
    validate_cmd->add_flag("--json", json_out, "emit the JSON report");

    auto* compute = app.add_subcommand("compute", "Betti table of a theory");
    compute->add_option("input", input_arg)->required();
    compute->add_option("--theory", theory_name, "connective|bold|nondirected|natural");
    compute->add_option("--density", density, "density for connective/nondirected");
    compute->add_option("--max-dim", max_dim, "top homology dimension");
    compute->add_option("--field", field_name, "Q or Fp:<prime>");
    compute->add_option("--emit", emit, "basis: also dump path bases and matrices");
    compute->add_flag("--json", json_out);

    auto* morphism = app.add_subcommand("morphism", "validate a morphism, optionally induced maps");
    morphism->add_option("source", source_arg)->required();
    morphism->add_option("target", target_arg)->required();
    morphism->add_option("map", map_arg)->required();
    morphism->add_option("--induced-dim", induced_dim, "print induced homology maps up to this dim");
    morphism->add_option("--theory", theory_name, "check a single theory's path-level morphism");
    morphism->add_option("--density", density);
    morphism->add_option("--field", field_name);
    morphism->add_flag("--json", json_out);

    auto* homotopy = app.add_subcommand("homotopy", "search for a homotopy between two morphisms");
    homotopy->add_option("source", source_arg)->required();
    homotopy->add_option("target", target_arg)->required();
    homotopy->add_option("f", map_arg)->required();
    homotopy->add_option("g", map2_arg)->required();
    homotopy->add_option("--max-steps", max_steps);
    homotopy->add_flag("--json", json_out);

    auto* laws = app.add_subcommand("laws", "run a structural law check");
    laws->add_option("input", input_arg)->required();
    laws->add_option("--law", law_id, "check identifier (see README)")->required();
    laws->add_option("--max-length", max_length);
    laws->add_option("--max-dim", max_dim);
    laws->add_option("--density", density);
    laws->add_option("--field", field_name);
    laws->add_flag("--json", json_out);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "list bundled inputs");
    fixtures_cmd->add_option("--write", write_dir, "write fixture files into a directory");
    fixtures_cmd->add_flag("--json", json_out);

    CLI11_PARSE(app, argc, argv);

    try {
        hp::Report report;
        report.command = echo(argc, argv);

        if (app.got_subcommand(validate_cmd)) {
            Input in = load_input(input_arg);
            report.inputs.emplace_back(in.name, hp::digest_hex(in.text));
            hp::Document doc = hp::parse_document(in.text); // throws on violations
            report.payload = {{"kind", hp::kind_name(doc.kind)}, {"valid", true}};
            print_report(report, report.payload, json_out,
                         "ok: valid " + hp::kind_name(doc.kind) + "\n");
            return 0;
        }

        if (app.got_subcommand(compute)) {
            Input in = load_input(input_arg);
            report.inputs.emplace_back(in.name, hp::digest_hex(in.text));
            hp::DirectedHypergraph g = hp::parse_directed_hypergraph(in.text);
            hp::TheorySpec spec;
            spec.kind = hp::theory_from_name(theory_name);
            spec.density = density;
            spec.max_dim = max_dim;
            spec.field = hp::Field::parse(field_name);
            if (density < 1) throw hp::ParseError("density must be >= 1");

            hp::BettiTable table = hp::theory_betti(g, spec);
            report.field_name = spec.field.name();
            report.truncation = table.length_bound;
            report.payload = {{"betti_table", hp::betti_to_json(table)}};

            std::ostringstream human;
            human << table.to_string() << betti_line(table) << "\n";
            if (spec.kind == hp::TheoryKind::connective && density >= 2)
                human << "note: connective homology at density >= 2 is not functorial\n";
            if (emit == "basis") {
                hp::PathComplexView view = hp::theory_view(g, spec, spec.max_dim + 1);
                hp::OmegaComplex oc = hp::build_omega(view, spec.max_dim, spec.field);
                report.payload["basis"] = hp::omega_to_json(oc);
                for (int n = 0; n <= oc.max_dim + 1; ++n) {
                    human << "dimension " << n << ": " << oc.allowed[n].size()
                          << " allowed paths, dim(Omega) = " << oc.dim(n) << "\n";
                    for (const hp::Path& p : oc.allowed[n]) human << "  " << hp::path_str(p) << "\n";
                }
            } else if (!emit.empty()) {
                throw hp::ParseError("unknown --emit mode: " + emit);
            }
            print_report(report, report.payload, json_out, human.str());
            return 0;
        }

        if (app.got_subcommand(morphism)) {
            Input src_in = load_input(source_arg), tgt_in = load_input(target_arg),
                  map_in = load_input(map_arg);
            report.inputs.emplace_back(src_in.name, hp::digest_hex(src_in.text));
            report.inputs.emplace_back(tgt_in.name, hp::digest_hex(tgt_in.text));
            report.inputs.emplace_back(map_in.name, hp::digest_hex(map_in.text));
            hp::DirectedHypergraph g = hp::parse_directed_hypergraph(src_in.text);
            hp::DirectedHypergraph h = hp::parse_directed_hypergraph(tgt_in.text);
            auto vm = hp::parse_morphism_map(map_in.text);
            hp::Field field = hp::Field::parse(field_name);

            auto check = hp::check_dh_morphism(g, h, vm);
            if (!check.ok()) {
                report.payload = {{"valid", false}, {"violation", check.message}};
                print_report(report, report.payload, json_out,
                             "invalid morphism: " + check.message + "\n");
                return 2;
            }
            report.payload = {{"valid", true}};
            std::ostringstream human;
            human << "valid morphism\n";

            if (morphism->count("--theory")) {
                hp::TheoryKind kind = hp::theory_from_name(theory_name);
                hp::TheorySpec spec{kind, density, max_dim, field};
                hp::PathComplexView sv = hp::theory_view(g, spec, max_dim + 1);
                hp::PathComplexView tv = hp::theory_view(h, spec, max_dim + 1);
                auto pc = hp::check_pc_morphism(sv, tv, hp::theory_vertex_map(*check.morphism, kind));
                report.payload["path_level"] = {{"theory", spec.label()}, {"valid", pc.ok()}};
                if (!pc.ok()) {
                    report.payload["path_level"]["witness"] = hp::path_str(*pc.violation);
                    human << "warning: no induced morphism on " << spec.label()
                          << " path complexes";
                    if (kind == hp::TheoryKind::connective && density >= 2)
                        human << " (density >= 2 is not functorial)";
                    human << "; witness path " << hp::path_str(*pc.violation) << "\n";
                } else {
                    human << "path-level morphism on " << spec.label() << " verified\n";
                }
            }

            if (induced_dim >= 0) {
                json induced = json::object();
                for (hp::TheoryKind kind :
                     {hp::TheoryKind::connective, hp::TheoryKind::bold, hp::TheoryKind::nondirected,
                      hp::TheoryKind::natural}) {
                    hp::TheorySpec spec{kind, kind == hp::TheoryKind::nondirected ? 2 : 1,
                                        induced_dim, field};
                    hp::PathComplexView sv = hp::theory_view(g, spec, induced_dim + 1);
                    hp::PathComplexView tv = hp::theory_view(h, spec, induced_dim + 1);
                    auto pc =
                        hp::check_pc_morphism(sv, tv, hp::theory_vertex_map(*check.morphism, kind));
                    if (!pc.ok())
                        throw std::logic_error("functorial theory failed path-level check: " +
                                               pc.message);
                    auto mats = hp::induced_homology_maps(*pc.morphism, induced_dim, field);
                    json per_dim = json::array();
                    human << "induced maps on " << spec.label() << " homology:\n";
                    for (int n = 0; n <= induced_dim; ++n) {
                        per_dim.push_back(hp::matrix_to_json(mats[n]));
                        human << "  dim " << n << ": " << mats[n].rows() << "x" << mats[n].cols()
                              << "\n";
                        for (std::size_t i = 0; i < mats[n].rows(); ++i) {
                            human << "    ";
                            for (std::size_t jx = 0; jx < mats[n].cols(); ++jx)
                                human << hp::scalar_str(mats[n].at(i, jx)) << " ";
                            human << "\n";
                        }
                    }
                    induced[spec.label()] = std::move(per_dim);
                }
                report.payload["induced"] = std::move(induced);
            }
            report.field_name = field.name();
            print_report(report, report.payload, json_out, human.str());
            return 0;
        }

        if (app.got_subcommand(homotopy)) {
            Input src_in = load_input(source_arg), tgt_in = load_input(target_arg),
                  f_in = load_input(map_arg), g_in = load_input(map2_arg);
            for (const Input& i : {src_in, tgt_in, f_in, g_in})
                report.inputs.emplace_back(i.name, hp::digest_hex(i.text));
            hp::DirectedHypergraph g = hp::parse_directed_hypergraph(src_in.text);
            hp::DirectedHypergraph h = hp::parse_directed_hypergraph(tgt_in.text);
            auto fc = hp::check_dh_morphism(g, h, hp::parse_morphism_map(f_in.text));
            auto gc = hp::check_dh_morphism(g, h, hp::parse_morphism_map(g_in.text));
            if (!fc.ok()) throw hp::ParseError("f: " + fc.message);
            if (!gc.ok()) throw hp::ParseError("g: " + gc.message);

            hp::HomotopySearchCaps caps;
            caps.max_steps = max_steps;
            auto witness = hp::homotopic(*fc.morphism, *gc.morphism, caps);
            std::ostringstream human;
            if (!witness) {
                report.payload = {{"homotopic", false},
                                  {"note", "none within " + std::to_string(max_steps) + " steps"}};
                human << "none within " << max_steps << " steps\n";
            } else {
                json steps = json::array();
                human << "homotopic in " << witness->steps.size() << " step(s)\n";
                for (const auto& s : witness->steps) {
                    json st;
                    st["orientation"] = s.forward_interval ? "0->1" : "1->0";
                    st["from"] = s.from.vertex_map;
                    st["to"] = s.to.vertex_map;
                    steps.push_back(std::move(st));
                    human << "  step via interval " << (s.forward_interval ? "0->1" : "1->0")
                          << "\n";
                }
                report.payload = {{"homotopic", true}, {"steps", std::move(steps)}};
            }
            print_report(report, report.payload, json_out, human.str());
            return 0;
        }

        if (app.got_subcommand(laws)) {
            Input in = load_input(input_arg);
            report.inputs.emplace_back(in.name, hp::digest_hex(in.text));
            hp::DirectedHypergraph g = hp::parse_directed_hypergraph(in.text);
            hp::LawParams params;
            params.max_length = max_length;
            params.max_dim = max_dim;
            params.density = std::max(density, 2);
            params.field = hp::Field::parse(field_name);
            hp::LawReport law = hp::run_law(law_id, g, params);
            report.field_name = params.field.name();
            report.truncation = max_length;
            report.payload = hp::law_to_json(law);
            std::ostringstream human;
            human << law.law << ": " << (law.holds ? "holds" : "FAILS") << "\n";
            for (const auto& d : law.details) human << "  " << d << "\n";
            print_report(report, report.payload, json_out, human.str());
            return 0;
        }

        if (app.got_subcommand(fixtures_cmd)) {
            if (!write_dir.empty()) {
                std::filesystem::create_directories(write_dir);
                for (const hp::Fixture& f : hp::fixtures()) {
                    std::ofstream out(std::filesystem::path(write_dir) / f.filename,
                                      std::ios::binary);
                    out << f.text;
                }
            }
            json list = json::array();
            std::ostringstream human;
            for (const hp::Fixture& f : hp::fixtures()) {
                list.push_back({{"name", f.name}, {"file", f.filename}, {"kind", f.kind}});
                human << f.name << "  (" << f.kind << ", " << f.filename << ")\n";
            }
            report.payload = {{"fixtures", std::move(list)}};
            print_report(report, report.payload, json_out, human.str());
            return 0;
        }
    } catch (const hp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hp::TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
