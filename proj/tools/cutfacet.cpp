// Command-line front end over the C interface.
#include "cutfacet/cutfacet.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;

struct InputError {
    std::string message;
};

void check(cf_status status)
{
    if (status != CF_OK)
        throw InputError{cf_last_error()};
}

struct IneqDeleter {
    void operator()(cf_inequality* p) const { cf_inequality_free(p); }
};
struct InstanceDeleter {
    void operator()(cf_instance* p) const { cf_instance_free(p); }
};
struct SurveyDeleter {
    void operator()(cf_survey* p) const { cf_survey_free(p); }
};
using Ineq = std::unique_ptr<cf_inequality, IneqDeleter>;
using InstancePtr = std::unique_ptr<cf_instance, InstanceDeleter>;
using SurveyPtr = std::unique_ptr<cf_survey, SurveyDeleter>;

Ineq read_ineq(const std::string& path)
{
    cf_inequality* raw = nullptr;
    check(cf_inequality_read(path.c_str(), &raw));
    return Ineq(raw);
}

InstancePtr read_instance(const std::string& path, const std::vector<int>& cycle)
{
    cf_instance* raw = nullptr;
    check(cf_instance_read(path.c_str(), &raw));
    InstancePtr inst(raw);
    if (!cycle.empty()) {
        if (cycle.size() != 4)
            throw InputError{"--cycle takes four nodes"};
        check(cf_instance_set_cycle(inst.get(), cycle.data()));
    }
    return inst;
}

void write_ineq(const cf_inequality* ineq, const std::string& out)
{
    if (!out.empty() && out != "-") {
        check(cf_inequality_write(ineq, out.c_str()));
        return;
    }
    char* text = nullptr;
    check(cf_inequality_serialize(ineq, &text));
    std::fputs(text, stdout);
    cf_string_free(text);
}

std::vector<int> cut_members(const cf_report& r)
{
    std::vector<int> out;
    for (int x = 1; x <= r.cut_node_count; ++x)
        if ((r.violating_cut >> (x - 1)) & 1U)
            out.push_back(x);
    return out;
}

const char* yes_no(int v)
{
    return v ? "true" : "false";
}

struct Common {
    int threads = 0;
    int max_nodes = 24;

    cf_options options() const { return {threads, max_nodes}; }
};

void add_engine_flags(CLI::App* cmd, Common& common)
{
    cmd->add_option("--threads", common.threads, "worker threads (0 = all cores)")
        ->envname("CUTFACET_THREADS")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-nodes", common.max_nodes, "refuse enumerations beyond this node count")
        ->check(CLI::PositiveNumber);
}

int run_verify(const std::string& path, bool as_json, const std::string& expect, const Common& common)
{
    const auto ineq = read_ineq(path);
    const cf_options opts = common.options();
    cf_report r{};
    check(cf_verify(ineq.get(), &opts, &r));

    const auto cut = cut_members(r);
    if (as_json) {
        json j;
        j["valid"] = static_cast<bool>(r.valid);
        j["violating_cut"] = r.has_violating_cut ? json(cut) : json(nullptr);
        j["ambient_dim"] = r.ambient_dim;
        j["root_count"] = r.root_count;
        j["affine_rank"] = r.affine_rank;
        j["is_facet"] = static_cast<bool>(r.is_facet);
        j["scale"] = r.scale;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "valid: " << yes_no(r.valid) << '\n';
        std::cout << "violating_cut:";
        if (!r.has_violating_cut)
            std::cout << " none";
        else if (cut.empty())
            std::cout << " {}";
        for (int x : cut)
            std::cout << ' ' << x;
        std::cout << '\n';
        std::cout << "ambient_dim: " << r.ambient_dim << '\n';
        std::cout << "root_count: " << r.root_count << '\n';
        std::cout << "affine_rank: " << r.affine_rank << '\n';
        std::cout << "is_facet: " << yes_no(r.is_facet) << '\n';
        std::cout << "scale: " << r.scale << '\n';
    }

    if (expect.empty())
        return exit_ok;
    bool met = false;
    if (expect == "facet")
        met = r.is_facet;
    else if (expect == "valid")
        met = r.valid;
    else if (expect == "not-facet")
        met = !r.is_facet;
    if (!met)
        std::cerr << "expectation '" << expect << "' not met\n";
    return met ? exit_ok : exit_mismatch;
}

int run_check(const std::string& theorem, const std::string& path, const std::vector<int>& cycle, bool as_json,
              const Common& common)
{
    const auto inst = read_instance(path, cycle);
    const cf_options opts = common.options();
    cf_check_result r{};
    check(cf_check(theorem.c_str(), inst.get(), &opts, &r));
    if (as_json) {
        json j;
        j["theorem"] = theorem;
        j["applicable"] = static_cast<bool>(r.applicable);
        j["predicted"] = r.predicted;
        j["observed"] = r.observed;
        j["agree"] = static_cast<bool>(r.agree);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "theorem: " << theorem << '\n';
        std::cout << "applicable: " << yes_no(r.applicable) << '\n';
        std::cout << "predicted: " << r.predicted << '\n';
        std::cout << "observed: " << r.observed << '\n';
        std::cout << "agree: " << yes_no(r.agree) << '\n';
        if (r.converse_candidate)
            std::cout << "note: facet although the sufficient condition fails\n";
    }
    return r.agree ? exit_ok : exit_mismatch;
}

struct SurveyArgs {
    std::string theorem;
    int k = 3;
    int t_min = 0;
    std::optional<int> t_max;
    int max_n = 8;
};

int run_survey(const SurveyArgs& a, const Common& common)
{
    const int t_max = a.t_max.value_or(a.k);
    const cf_options opts = common.options();
    cf_survey* raw = nullptr;
    check(cf_survey_run(a.theorem.c_str(), a.k, a.t_min, t_max, a.max_n, &opts, &raw));
    SurveyPtr s(raw);

    std::cout << "survey " << a.theorem << " k=" << a.k << " t=" << a.t_min << ".." << t_max << " max-n=" << a.max_n
              << '\n';
    std::cout << "k t instances checks skipped agree disagree converse\n";
    std::size_t instances = 0;
    std::size_t checks = 0;
    for (std::size_t i = 0; i < cf_survey_cell_count(s.get()); ++i) {
        cf_survey_cell c{};
        check(cf_survey_cell_at(s.get(), i, &c));
        std::cout << c.k << ' ' << c.t << ' ' << c.instances << ' ' << c.checks << ' ' << c.skipped << ' ' << c.agree
                  << ' ' << c.disagree << ' ' << c.converse_candidates << '\n';
        instances += c.instances;
        checks += c.checks;
    }
    const std::size_t bad = cf_survey_disagreement_count(s.get());
    std::cout << "total instances=" << instances << " checks=" << checks << " disagreements=" << bad << '\n';
    for (std::size_t i = 0; i < bad; ++i)
        std::cout << "disagree " << cf_survey_disagreement(s.get(), i) << '\n';
    for (std::size_t i = 0; i < cf_survey_converse_count(s.get()); ++i)
        std::cout << "converse " << cf_survey_converse(s.get(), i) << '\n';
    return bad == 0 ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact facet verification for cut and correlation polytope inequalities"};
    app.require_subcommand(1);
    Common common;

    // gen
    auto* gen = app.add_subcommand("gen", "write an inequality from a named family");
    std::string family;
    cf_gen_params params{};
    std::vector<int64_t> b_values;
    std::string gen_instance;
    std::vector<int> gen_cycle;
    std::string gen_out;
    gen->add_option("family", family, "triangle, hypermetric, pure-gonal, hyp-thm3, gr7, gr8, igh, igh-prime, imm22, imm22-cut")
        ->required()
        ->check(CLI::IsMember({"triangle", "hypermetric", "pure-gonal", "hyp-thm3", "gr7", "gr8", "igh", "igh-prime",
                               "imm22", "imm22-cut"}));
    gen->add_option("--n", params.n, "node count");
    gen->add_option("--m", params.m, "number of settings per party");
    gen->add_option("--s", params.s, "gonal parameter");
    gen->add_option("--u", params.u, "triangle x_uv - x_uw - x_vw <= 0");
    gen->add_option("--v", params.v, "triangle node v");
    gen->add_option("--w", params.w, "triangle apex w");
    gen->add_option("--b", b_values, "hypermetric vector")->delimiter(',')->allow_extra_args(false);
    gen->add_option("--instance", gen_instance, "(G,H) instance file")->check(CLI::ExistingFile);
    gen->add_option("--cycle", gen_cycle, "4-cycle A,B,C,D")->delimiter(',')->allow_extra_args(false);
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "brute-force validity and facet check");
    std::string verify_in;
    bool verify_json = false;
    std::string expect;
    verify->add_option("file", verify_in)->required()->check(CLI::ExistingFile);
    verify->add_flag("--json", verify_json, "emit a JSON report");
    verify->add_option("--expect", expect, "exit 1 unless the verdict matches")
        ->check(CLI::IsMember({"facet", "valid", "not-facet"}));
    add_engine_flags(verify, common);

    // transform
    auto* transform = app.add_subcommand("transform", "apply a transformation");
    transform->require_subcommand(1);
    std::string tr_in;
    std::string tr_out;
    std::vector<int> cut_list;
    std::vector<int> map_list;
    int cu = 0;
    int cv = 0;
    std::vector<int> tri_edge;
    std::vector<int> tri_common;
    const auto add_io = [&](CLI::App* op) {
        op->add_option("file", tr_in)->required()->check(CLI::ExistingFile);
        op->add_option("-o,--out", tr_out, "output file (default stdout)");
    };
    auto* t_switch = transform->add_subcommand("switch", "switch by a cut");
    t_switch->add_option("--cut", cut_list, "cut members")->delimiter(',')->allow_extra_args(false)->required();
    add_io(t_switch);
    auto* t_permute = transform->add_subcommand("permute", "relabel nodes: node i goes to the i-th entry");
    t_permute->add_option("--map", map_list, "images of 1..N")->delimiter(',')->allow_extra_args(false)->required();
    add_io(t_permute);
    auto* t_collapse = transform->add_subcommand("collapse", "merge two nodes");
    t_collapse->add_option("--u", cu, "first node")->required();
    t_collapse->add_option("--v", cv, "second node")->required();
    add_io(t_collapse);
    auto* t_trielim = transform->add_subcommand("trielim", "triangular elimination of an edge");
    t_trielim->add_option("--edge", tri_edge, "u,u'")->delimiter(',')->allow_extra_args(false)->required()->expected(2);
    t_trielim->add_option("--common", tri_common, "nodes adjacent to both u and u'")->delimiter(',')->allow_extra_args(false);
    add_io(t_trielim);
    auto* t_cov = transform->add_subcommand("covariance", "correlation form to cut form on the suspension graph");
    add_io(t_cov);

    // check
    auto* chk = app.add_subcommand("check", "compare a structural prediction with brute force");
    std::string chk_theorem;
    std::string chk_in;
    std::vector<int> chk_cycle;
    bool chk_json = false;
    const auto theorem_names =
        CLI::IsMember({"facet1", "facet2", "prop1-roots", "prop9-roots", "lift-witness", "decompose"});
    chk->add_option("theorem", chk_theorem)->required()->check(theorem_names);
    chk->add_option("instance", chk_in)->required()->check(CLI::ExistingFile);
    chk->add_option("--cycle", chk_cycle, "4-cycle A,B,C,D (overrides the file)")->delimiter(',')->allow_extra_args(false);
    chk->add_flag("--json", chk_json);
    add_engine_flags(chk, common);

    // survey
    auto* sv = app.add_subcommand("survey", "exhaustive check over all (G, H_{k,t})");
    SurveyArgs sargs;
    sv->add_option("theorem", sargs.theorem)->required()->check(theorem_names);
    sv->add_option("--k", sargs.k, "number of components")->check(CLI::PositiveNumber);
    sv->add_option("--t-min", sargs.t_min)->check(CLI::NonNegativeNumber);
    sv->add_option("--t-max", sargs.t_max, "default k")->check(CLI::NonNegativeNumber);
    sv->add_option("--max-n", sargs.max_n, "skip instances with more nodes")->check(CLI::PositiveNumber);
    add_engine_flags(sv, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*gen) {
            InstancePtr inst;
            if (!gen_instance.empty()) {
                inst = read_instance(gen_instance, gen_cycle);
                params.instance = inst.get();
            }
            params.b = b_values.data();
            params.b_len = b_values.size();
            cf_inequality* raw = nullptr;
            check(cf_generate(family.c_str(), &params, &raw));
            write_ineq(Ineq(raw).get(), gen_out);
            return exit_ok;
        }
        if (*verify)
            return run_verify(verify_in, verify_json, expect, common);
        if (*transform) {
            const auto in = read_ineq(tr_in);
            cf_inequality* raw = nullptr;
            if (*t_switch) {
                check(cf_switch(in.get(), cut_list.data(), cut_list.size(), &raw));
            } else if (*t_permute) {
                check(cf_permute(in.get(), map_list.data(), map_list.size(), &raw));
            } else if (*t_collapse) {
                check(cf_collapse(in.get(), cu, cv, &raw));
            } else if (*t_trielim) {
                int hypothesis = 0;
                check(cf_trielim(in.get(), tri_edge[0], tri_edge[1], tri_common.data(), tri_common.size(), &raw,
                                 &hypothesis));
                if (!hypothesis)
                    std::cerr << "warning: no coefficient outside the eliminated triangles\n";
            } else {
                int64_t scale = 1;
                check(cf_covariance(in.get(), &raw, &scale));
                if (scale != 1)
                    std::cerr << "scale: " << scale << '\n';
            }
            write_ineq(Ineq(raw).get(), tr_out);
            return exit_ok;
        }
        if (*chk)
            return run_check(chk_theorem, chk_in, chk_cycle, chk_json, common);
        if (*sv)
            return run_survey(sargs, common);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
