// Copyright 2026 The recolor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  One subcommand per library operation, stable text
// formats on disk, machine-readable mirrors behind --format json.
//
// Exit codes: 0 success, 1 usage, 2 different components, 3 undecided,
// 4 validation failure, 5 search budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "recolor/coloring.hpp"
#include "recolor/complexd.hpp"
#include "recolor/connectivity.hpp"
#include "recolor/hardness.hpp"
#include "recolor/oracle.hpp"
#include "recolor/reconfigure.hpp"
#include "recolor/triangulation.hpp"

namespace {

using nlohmann::ordered_json;
using namespace recolor;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDifferentComponents = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitValidation = 4;
constexpr int kExitBudget = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << content;
}

// First whitespace-delimited token of a file, used to dispatch on format.
std::string sniff(const std::string& content) {
    std::istringstream in(content);
    std::string tag;
    in >> tag;
    return tag;
}

Triangulation load_tri2_file(const std::string& path) {
    std::istringstream in(read_file(path));
    return Triangulation::load_tri2(in);
}

Coloring load_col_file(const std::string& path) {
    std::istringstream in(read_file(path));
    return Coloring::load_col(in);
}

std::string tri2_string(const Triangulation& g) {
    std::ostringstream out;
    g.save_tri2(out);
    return out.str();
}

std::string col_string(const Coloring& c) {
    std::ostringstream out;
    c.save_col(out);
    return out.str();
}

std::string trid_string(const ComplexD& k) {
    std::ostringstream out;
    save_trid(out, k);
    return out.str();
}

std::string seq_string(const RecolorSequence& seq) {
    std::ostringstream out;
    save_sequence(out, seq);
    return out.str();
}

// Output state shared by every subcommand.
struct Emitter {
    std::string format = "text";

    void verdict(const std::string& text, const ordered_json& j) const {
        if (format == "json")
            std::cout << j.dump() << '\n';
        else
            std::cout << text << '\n';
    }
};

int run_validate(const Emitter& em, const std::string& path) {
    std::string content = read_file(path);
    std::string tag = sniff(content);
    std::istringstream in(content);
    ordered_json j;
    std::string text;
    if (tag == "tri2") {
        Triangulation g = Triangulation::load_tri2(in);
        j = {{"ok", true}, {"kind", "tri2"}, {"vertices", g.vertex_count()}, {"faces", g.face_count()}, {"even", g.is_even()}};
        text = "OK tri2 V=" + std::to_string(g.vertex_count()) + " F=" + std::to_string(g.face_count()) +
               (g.is_even() ? " even" : " odd");
    } else if (tag == "trid") {
        ComplexD k = load_trid(in);
        j = {{"ok", true}, {"kind", "trid"}, {"dim", k.dimension()}, {"vertices", k.vertex_count()}, {"facets", k.facet_count()}, {"even", k.is_even()}};
        text = "OK trid d=" + std::to_string(k.dimension()) + " V=" + std::to_string(k.vertex_count()) +
               " F=" + std::to_string(k.facet_count()) + (k.is_even() ? " even" : " odd");
    } else if (tag == "col") {
        Coloring c = Coloring::load_col(in);
        j = {{"ok", true}, {"kind", "col"}, {"k", c.k}, {"vertices", c.size()}};
        text = "OK col k=" + std::to_string(c.k) + " V=" + std::to_string(c.size());
    } else if (tag == "seq") {
        RecolorSequence s = load_sequence(in);
        j = {{"ok", true}, {"kind", "seq"}, {"steps", s.size()}};
        text = "OK seq steps=" + std::to_string(s.size());
    } else if (tag == "listinst") {
        ListInstance li = ListInstance::load_listinst(in);
        j = {{"ok", true}, {"kind", "listinst"}, {"vertices", li.n}, {"edges", li.edges.size()}};
        text = "OK listinst V=" + std::to_string(li.n) + " E=" + std::to_string(li.edges.size());
    } else if (tag == "gadgetx") {
        GadgetX x = GadgetX::load_gadgetx(in);
        j = {{"ok", true},
             {"kind", "gadgetx"},
             {"vertices", x.vertex_count()},
             {"triangles", x.triangles.size()},
             {"edge_groups", x.s_edges.size()},
             {"cross_edges", x.cross.size()},
             {"faces", x.faces.size()}};
        text = "OK gadgetx V=" + std::to_string(x.vertex_count()) + " T=" + std::to_string(x.triangles.size()) +
               " S=" + std::to_string(x.s_edges.size()) + " E=" + std::to_string(x.cross.size());
    } else {
        throw validation_error("unrecognized format tag '" + tag + "'");
    }
    em.verdict(text, j);
    return kExitOk;
}

int run_gen(const Emitter& em, const std::string& kind, int n, int steps, std::uint64_t seed,
            const std::string& out) {
    Triangulation g = [&] {
        if (kind == "octahedron") return Triangulation::octahedron();
        if (kind == "double_wheel") return Triangulation::double_wheel(n);
        if (kind == "octahedron_chain") return Triangulation::octahedron_chain(n);
        if (kind == "glued") {
            Triangulation oct = Triangulation::octahedron();
            return Triangulation::glue_along_face(oct, 0, oct, 0);
        }
        if (kind == "barycentric") return Triangulation::tetrahedron().barycentric_subdivision();
        if (kind == "random")
            return random_expand(Triangulation::octahedron(), steps, seed);
        throw validation_error("unknown generator kind '" + kind + "'");
    }();
    std::string content = tri2_string(g);
    ordered_json j = {{"kind", kind}, {"vertices", g.vertex_count()}, {"faces", g.face_count()}, {"even", g.is_even()}};
    if (!out.empty()) {
        write_file(out, content);
        j["out"] = out;
        em.verdict("GENERATED " + kind + " V=" + std::to_string(g.vertex_count()) +
                       " F=" + std::to_string(g.face_count()) + " -> " + out,
                   j);
    } else if (em.format == "json") {
        j["content"] = content;
        em.verdict("", j);
    } else {
        std::cout << content;
    }
    return kExitOk;
}

int run_check(const Emitter& em, const std::string& graph_path, const std::string& col_path) {
    std::string content = read_file(graph_path);
    std::string tag = sniff(content);
    std::istringstream in(content);
    Coloring c = load_col_file(col_path);
    bool balanced = false;
    if (tag == "tri2") {
        Triangulation g = Triangulation::load_tri2(in);
        balanced = is_balanced(g, c);
    } else if (tag == "trid") {
        ComplexD k = load_trid(in);
        balanced = balance_check_d(k, c);
    } else {
        throw validation_error("check expects a tri2 or trid file, got '" + tag + "'");
    }
    em.verdict(balanced ? "BALANCED" : "UNBALANCED",
               {{"verdict", balanced ? "BALANCED" : "UNBALANCED"}});
    return kExitOk;
}

int run_solve(const Emitter& em, const std::string& graph_path, const std::string& a_path,
              const std::string& b_path, const std::string& out, bool oracle_fallback) {
    Triangulation g = load_tri2_file(graph_path);
    Coloring a = load_col_file(a_path);
    Coloring b = load_col_file(b_path);
    SolveOptions opts;
    opts.oracle_fallback = oracle_fallback;
    SolveResult r = solve(g, a, b, opts);
    if (r.status == SolveStatus::DifferentComponents) {
        em.verdict("DIFFERENT_COMPONENTS", {{"verdict", "DIFFERENT_COMPONENTS"}});
        return kExitDifferentComponents;
    }
    if (r.status == SolveStatus::Undecided) {
        em.verdict("UNDECIDED", {{"verdict", "UNDECIDED"}});
        return kExitUndecided;
    }
    VerifyResult chk = verify_sequence(g, a, r.steps, b);
    if (!chk) throw std::logic_error("solve produced an invalid sequence: " + chk.reason);
    write_file(out, seq_string(r.steps));
    em.verdict("SEQUENCE " + std::to_string(r.steps.size()) + " -> " + out,
               {{"verdict", "SEQUENCE"}, {"steps", r.steps.size()}, {"out", out}});
    return kExitOk;
}

int run_verify(const Emitter& em, const std::string& graph_path, const std::string& a_path,
               const std::string& b_path, const std::string& seq_path) {
    Triangulation g = load_tri2_file(graph_path);
    Coloring a = load_col_file(a_path);
    Coloring b = load_col_file(b_path);
    std::istringstream in(read_file(seq_path));
    RecolorSequence seq = load_sequence(in);
    VerifyResult r = verify_sequence(g, a, seq, b);
    if (r.ok) {
        em.verdict("VALID " + std::to_string(seq.size()), {{"verdict", "VALID"}, {"steps", seq.size()}});
        return kExitOk;
    }
    em.verdict("INVALID step=" + std::to_string(r.fail_step) + " " + r.reason,
               {{"verdict", "INVALID"}, {"step", r.fail_step}, {"reason", r.reason}});
    return kExitValidation;
}

int run_connected(const Emitter& em, const std::string& graph_path, const std::string& witness_out) {
    Triangulation g = load_tri2_file(graph_path);
    bool conn = decide_connected(g);
    ordered_json j = {{"verdict", conn ? "CONNECTED" : "DISCONNECTED"}};
    std::string text = conn ? "CONNECTED" : "DISCONNECTED";
    if (!conn && !witness_out.empty()) {
        Coloring w = unbalanced_witness(g);
        write_file(witness_out, col_string(w));
        j["witness"] = witness_out;
        text += " witness -> " + witness_out;
    }
    em.verdict(text, j);
    return kExitOk;
}

int run_witness(const Emitter& em, const std::string& graph_path, const std::string& out) {
    Triangulation g = load_tri2_file(graph_path);
    if (decide_connected(g)) {
        em.verdict("NONE", {{"verdict", "NONE"}});
        return kExitOk;
    }
    Coloring w = unbalanced_witness(g);
    write_file(out, col_string(w));
    em.verdict("WITNESS -> " + out, {{"verdict", "WITNESS"}, {"out", out}});
    return kExitOk;
}

int run_reduce(const Emitter& em, const std::string& gadget_path, const std::string& inst_path,
               int k, const std::string& prefix) {
    std::istringstream gin(read_file(gadget_path));
    GadgetX x = GadgetX::load_gadgetx(gin);
    ReducedInstance r = [&] {
        if (inst_path.empty()) return reduce(x, k);
        std::istringstream iin(read_file(inst_path));
        return reduce(x, ListInstance::load_listinst(iin), k);
    }();
    std::string graph_file;
    if (r.tri) {
        graph_file = prefix + ".tri2";
        write_file(graph_file, tri2_string(*r.tri));
    } else {
        graph_file = prefix + ".trid";
        write_file(graph_file, trid_string(r.complex));
    }
    write_file(prefix + ".alpha.col", col_string(r.alpha));
    write_file(prefix + ".beta.col", col_string(r.beta));
    ordered_json j = {{"k", r.k},
                      {"vertices", r.complex.vertex_count()},
                      {"facets", r.complex.facet_count()},
                      {"list_graph_vertices", r.h_vertex_count},
                      {"graph", graph_file},
                      {"alpha", prefix + ".alpha.col"},
                      {"beta", prefix + ".beta.col"}};
    em.verdict("REDUCED k=" + std::to_string(r.k) + " V=" + std::to_string(r.complex.vertex_count()) +
                   " F=" + std::to_string(r.complex.facet_count()) + " -> " + graph_file,
               j);
    return kExitOk;
}

int run_oracle(const Emitter& em, const std::string& graph_path, const std::string& a_path,
               const std::string& b_path, int k, const std::string& out) {
    std::string content = read_file(graph_path);
    std::string tag = sniff(content);
    std::istringstream in(content);
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> lists;
    std::vector<int> from, to;
    if (tag == "listinst") {
        ListInstance li = ListInstance::load_listinst(in);
        adj = li.adjacency();
        lists = li.lists;
        k = 4;
        from = li.alpha;
        to = li.beta;
    } else if (tag == "tri2") {
        Triangulation g = Triangulation::load_tri2(in);
        adj.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) adj[static_cast<size_t>(v)] = g.link(v);
    } else {
        throw validation_error("oracle expects a tri2 or listinst file, got '" + tag + "'");
    }
    if (!a_path.empty()) from = load_col_file(a_path).at;
    if (!b_path.empty()) to = load_col_file(b_path).at;
    if (from.empty() || to.empty())
        throw validation_error("oracle: colorings required (tri2 inputs carry none)");
    Oracle oracle(adj, k);
    if (!lists.empty()) oracle = Oracle(adj, k, lists);
    std::optional<std::vector<Step>> path = oracle.same_component(from, to);
    if (!path) {
        em.verdict("UNREACHABLE states=" + std::to_string(oracle.states_visited()),
                   {{"verdict", "UNREACHABLE"}, {"states", oracle.states_visited()}});
        return kExitDifferentComponents;
    }
    if (!out.empty()) {
        RecolorSequence seq;
        for (const Step& s : *path) seq.push_back({s.v, s.c});
        write_file(out, seq_string(seq));
    }
    ordered_json j = {{"verdict", "REACHABLE"}, {"steps", path->size()}, {"states", oracle.states_visited()}};
    std::string text = "REACHABLE " + std::to_string(path->size());
    if (!out.empty()) {
        j["out"] = out;
        text += " -> " + out;
    }
    em.verdict(text, j);
    return kExitOk;
}

int run_suspend(const Emitter& em, const std::string& graph_path, int times, const std::string& out) {
    if (times < 1) throw validation_error("suspend: --times must be at least 1");
    std::string content = read_file(graph_path);
    std::string tag = sniff(content);
    std::istringstream in(content);
    ComplexD k = [&] {
        if (tag == "tri2") return from_triangulation(Triangulation::load_tri2(in));
        if (tag == "trid") return load_trid(in);
        throw validation_error("suspend expects a tri2 or trid file, got '" + tag + "'");
    }();
    for (int i = 0; i < times; ++i) k = suspend(k);
    std::string content_out = trid_string(k);
    ordered_json j = {{"dim", k.dimension()}, {"vertices", k.vertex_count()}, {"facets", k.facet_count()}};
    if (!out.empty()) {
        write_file(out, content_out);
        j["out"] = out;
        em.verdict("SUSPENDED d=" + std::to_string(k.dimension()) + " V=" + std::to_string(k.vertex_count()) +
                       " F=" + std::to_string(k.facet_count()) + " -> " + out,
                   j);
    } else if (em.format == "json") {
        j["content"] = content_out;
        em.verdict("", j);
    } else {
        std::cout << content_out;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-vertex recoloring toolkit for even sphere triangulations"};
    app.require_subcommand(1);
    app.fallthrough();

    Emitter em;
    app.add_option("--format", em.format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string in_path, in2_path, in3_path, in4_path, kind = "octahedron", witness_path;
    std::string gen_out, solve_out = "out.seq", witness_out = "witness.col", reduce_prefix = "reduced";
    std::string oracle_out, suspend_out;
    int n = 8, steps = 3, k = 4, times = 1;
    std::uint64_t seed = 0;
    bool oracle_fallback = false;

    CLI::App* c_validate = app.add_subcommand("validate", "parse and validate a file of any supported format");
    c_validate->add_option("file", in_path, "input file")->required();

    CLI::App* c_gen = app.add_subcommand("gen", "generate an even sphere triangulation");
    c_gen->add_option("--kind", kind,
                      "octahedron|double_wheel|octahedron_chain|glued|barycentric|random");
    c_gen->add_option("--n", n, "size parameter (double_wheel vertices / chain blocks)");
    c_gen->add_option("--steps", steps, "expansion steps for --kind random");
    c_gen->add_option("--seed", seed, "random seed");
    c_gen->add_option("--out", gen_out, "output file (default stdout)");

    CLI::App* c_check = app.add_subcommand("check", "balance verdict for a coloring");
    c_check->add_option("graph", in_path, "tri2 or trid file")->required();
    c_check->add_option("coloring", in2_path, "col file")->required();

    CLI::App* c_solve = app.add_subcommand("solve", "find a recoloring sequence between two colorings");
    c_solve->add_option("graph", in_path, "tri2 file")->required();
    c_solve->add_option("from", in2_path, "col file")->required();
    c_solve->add_option("to", in3_path, "col file")->required();
    c_solve->add_option("--out", solve_out, "sequence output file");
    c_solve->add_flag("--oracle-fallback", oracle_fallback, "exact search when both colorings are unbalanced");

    CLI::App* c_verify = app.add_subcommand("verify", "replay a recoloring sequence");
    c_verify->add_option("graph", in_path, "tri2 file")->required();
    c_verify->add_option("from", in2_path, "col file")->required();
    c_verify->add_option("to", in3_path, "col file")->required();
    c_verify->add_option("sequence", in4_path, "seq file")->required();

    CLI::App* c_connected = app.add_subcommand("connected", "is the 4-coloring reconfiguration graph connected");
    c_connected->add_option("graph", in_path, "tri2 file")->required();
    c_connected->add_option("--witness", witness_path, "write an unreachable coloring here if disconnected");

    CLI::App* c_witness = app.add_subcommand("witness", "produce an unbalanced coloring if one exists");
    c_witness->add_option("graph", in_path, "tri2 file")->required();
    c_witness->add_option("--out", witness_out, "witness output file");

    CLI::App* c_reduce = app.add_subcommand("reduce", "compile a list-recoloring gadget into a sphere instance");
    c_reduce->add_option("gadget", in_path, "gadgetx file")->required();
    c_reduce->add_option("instance", in2_path, "optional listinst file with endpoint colorings");
    c_reduce->add_option("--k", k, "palette size of the target instance (>= 4)");
    c_reduce->add_option("--out-prefix", reduce_prefix, "prefix for emitted files");

    CLI::App* c_oracle = app.add_subcommand("oracle", "exhaustive reachability search");
    c_oracle->add_option("graph", in_path, "tri2 or listinst file")->required();
    c_oracle->add_option("from", in2_path, "col file (optional for listinst)");
    c_oracle->add_option("to", in3_path, "col file (optional for listinst)");
    c_oracle->add_option("--k", k, "palette size for tri2 inputs");
    c_oracle->add_option("--out", oracle_out, "write the found sequence here");

    CLI::App* c_suspend = app.add_subcommand("suspend", "iterated suspension of an even complex");
    c_suspend->add_option("graph", in_path, "tri2 or trid file")->required();
    c_suspend->add_option("--times", times, "number of suspension steps");
    c_suspend->add_option("--out", suspend_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_validate->parsed()) return run_validate(em, in_path);
        if (c_gen->parsed()) return run_gen(em, kind, n, steps, seed, gen_out);
        if (c_check->parsed()) return run_check(em, in_path, in2_path);
        if (c_solve->parsed()) return run_solve(em, in_path, in2_path, in3_path, solve_out, oracle_fallback);
        if (c_verify->parsed()) return run_verify(em, in_path, in2_path, in3_path, in4_path);
        if (c_connected->parsed()) return run_connected(em, in_path, witness_path);
        if (c_witness->parsed()) return run_witness(em, in_path, witness_out);
        if (c_reduce->parsed()) return run_reduce(em, in_path, in2_path, k, reduce_prefix);
        if (c_oracle->parsed()) return run_oracle(em, in_path, in2_path, in3_path, k, oracle_out);
        if (c_suspend->parsed()) return run_suspend(em, in_path, times, suspend_out);
    } catch (const budget_exceeded_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const gadget_search_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}
