#include "cutfacet/cutfacet.h"

#include "cutfacet/engine.hpp"
#include "cutfacet/error.hpp"
#include "cutfacet/families.hpp"
#include "cutfacet/io.hpp"
#include "cutfacet/survey.hpp"
#include "cutfacet/transforms.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

using namespace cutfacet;

struct cf_inequality {
    LinearInequality value;
};

struct cf_instance {
    Instance value;
};

struct cf_survey {
    SurveyResult value;
    std::vector<std::string> disagreements;
    std::vector<std::string> converse;
};

namespace {

thread_local std::string last_error;

cf_status set_error(cf_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

/// Runs f, translating exceptions into status codes.
template <typename F>
cf_status guarded(F&& f)
{
    try {
        f();
        last_error.clear();
        return CF_OK;
    } catch (const Error& e) {
        return set_error(static_cast<cf_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CF_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CF_E_INTERNAL, e.what());
    }
}

void require(bool condition, const char* what)
{
    if (!condition)
        fail(ErrorCode::InvalidArgument, what);
}

EngineOptions engine_options(const cf_options* options)
{
    EngineOptions out;
    if (options) {
        out.threads = options->threads;
        out.max_nodes = options->max_nodes;
    }
    return out;
}

char* copy_string(std::string_view s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size());
    out[s.size()] = '\0';
    return out;
}

template <std::size_t N>
void copy_into(char (&dst)[N], const std::string& src)
{
    const std::size_t len = std::min(src.size(), N - 1);
    std::memcpy(dst, src.data(), len);
    dst[len] = '\0';
}

std::vector<Node> nodes_from(const int* data, std::size_t count)
{
    require(data != nullptr || count == 0, "null node list");
    return {data, data + count};
}

void emit(LinearInequality ineq, cf_inequality** out)
{
    require(out != nullptr, "null output handle");
    *out = new cf_inequality{std::move(ineq)};
}

LinearInequality generate(std::string_view family, const cf_gen_params& p)
{
    if (family == "triangle")
        return triangle(p.n, p.u, p.v, p.w);
    if (family == "hypermetric") {
        require(p.b != nullptr, "hypermetric needs b");
        return hypermetric(HypermetricVector({p.b, p.b + p.b_len}));
    }
    if (family == "pure-gonal")
        return pure_gonal(p.n, p.s);
    if (family == "hyp-thm3")
        return hypermetric_thm3(p.n);
    if (family == "gr7")
        return gr7();
    if (family == "gr8")
        return gr8();
    if (family == "igh" || family == "igh-prime") {
        require(p.instance != nullptr, "family needs an instance");
        const auto& inst = p.instance->value;
        if (family == "igh")
            return build_I(inst.pair);
        if (!inst.cycle)
            fail(ErrorCode::InvalidArgument, "igh-prime needs a cycle");
        return build_I_prime(inst.pair, *inst.cycle);
    }
    if (family == "imm22")
        return build_imm22(p.m);
    if (family == "imm22-cut")
        return imm22_cut_form(p.m);
    fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(family) + "'");
}

std::string row_line(const SurveyRow& row)
{
    return row.instance + ": " + row.result.predicted + " vs " + row.result.observed;
}

} // namespace

extern "C" {

const char* cf_last_error(void)
{
    return last_error.c_str();
}

const char* cf_status_name(cf_status status)
{
    if (status == CF_OK)
        return "Ok";
    if (status == CF_E_INTERNAL)
        return "Internal";
    if (status >= CF_E_INVALID_ARGUMENT && status <= CF_E_PARSE_ERROR)
        return error_code_name(static_cast<ErrorCode>(status));
    return "Unknown";
}

void cf_string_free(char* s)
{
    std::free(s);
}

cf_options cf_default_options(void)
{
    const EngineOptions d;
    return {d.threads, d.max_nodes};
}

cf_status cf_inequality_parse(const char* text, cf_inequality** out)
{
    return guarded([&] {
        require(text != nullptr, "null text");
        emit(parse_inequality(text), out);
    });
}

cf_status cf_inequality_read(const char* path, cf_inequality** out)
{
    return guarded([&] {
        require(path != nullptr, "null path");
        emit(parse_inequality(read_text(path)), out);
    });
}

cf_status cf_inequality_serialize(const cf_inequality* ineq, char** out)
{
    return guarded([&] {
        require(ineq != nullptr && out != nullptr, "null argument");
        *out = copy_string(serialize_inequality(ineq->value));
    });
}

cf_status cf_inequality_write(const cf_inequality* ineq, const char* path)
{
    return guarded([&] {
        require(ineq != nullptr && path != nullptr, "null argument");
        write_text(path, serialize_inequality(ineq->value));
    });
}

int cf_inequality_node_count(const cf_inequality* ineq)
{
    return ineq ? ineq->value.node_count() : 0;
}

int cf_inequality_is_correlation(const cf_inequality* ineq)
{
    return ineq && ineq->value.form() == Form::Correlation;
}

int cf_inequality_equal(const cf_inequality* a, const cf_inequality* b)
{
    return a && b && a->value == b->value;
}

void cf_inequality_free(cf_inequality* ineq)
{
    delete ineq;
}

cf_status cf_instance_parse(const char* text, cf_instance** out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new cf_instance{parse_instance(text)};
    });
}

cf_status cf_instance_read(const char* path, cf_instance** out)
{
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new cf_instance{parse_instance(read_text(path))};
    });
}

cf_status cf_instance_serialize(const cf_instance* inst, char** out)
{
    return guarded([&] {
        require(inst != nullptr && out != nullptr, "null argument");
        *out = copy_string(serialize_instance(inst->value));
    });
}

cf_status cf_instance_set_cycle(cf_instance* inst, const int nodes[4])
{
    return guarded([&] {
        require(inst != nullptr && nodes != nullptr, "null argument");
        inst->value.cycle = Cycle4(inst->value.pair, {nodes[0], nodes[1], nodes[2], nodes[3]});
    });
}

int cf_instance_has_cycle(const cf_instance* inst)
{
    return inst && inst->value.cycle.has_value();
}

void cf_instance_free(cf_instance* inst)
{
    delete inst;
}

cf_status cf_generate(const char* family, const cf_gen_params* params, cf_inequality** out)
{
    return guarded([&] {
        require(family != nullptr, "null family");
        const cf_gen_params empty{};
        emit(generate(family, params ? *params : empty), out);
    });
}

cf_status cf_switch(const cf_inequality* ineq, const int* members, size_t count, cf_inequality** out)
{
    return guarded([&] {
        require(ineq != nullptr, "null inequality");
        const auto nodes = nodes_from(members, count);
        for (Node x : nodes)
            if (x < 1 || x > ineq->value.node_count())
                fail(ErrorCode::InvalidArgument, "cut member out of range: " + std::to_string(x));
        emit(switch_by(ineq->value, CutSet::from_members(ineq->value.node_count(), nodes)), out);
    });
}

cf_status cf_permute(const cf_inequality* ineq, const int* images, size_t count, cf_inequality** out)
{
    return guarded([&] {
        require(ineq != nullptr, "null inequality");
        if (static_cast<int>(count) != ineq->value.node_count())
            fail(ErrorCode::NotBijection, "map has " + std::to_string(count) + " entries for " +
                                              std::to_string(ineq->value.node_count()) + " nodes");
        emit(permute(ineq->value, Permutation(nodes_from(images, count))), out);
    });
}

cf_status cf_collapse(const cf_inequality* ineq, int u, int v, cf_inequality** out)
{
    return guarded([&] {
        require(ineq != nullptr, "null inequality");
        emit(collapse(ineq->value, u, v).ineq, out);
    });
}

cf_status cf_trielim(const cf_inequality* ineq, int u, int u_prime, const int* common, size_t count,
                     cf_inequality** out, int* hypothesis_holds)
{
    return guarded([&] {
        require(ineq != nullptr, "null inequality");
        const auto w = nodes_from(common, count);
        auto result = triangular_eliminate(ineq->value, ineq->value.graph(), u, u_prime, w);
        if (hypothesis_holds)
            *hypothesis_holds = result.hypothesis_holds;
        emit(std::move(result.ineq), out);
    });
}

cf_status cf_covariance(const cf_inequality* ineq, cf_inequality** out, int64_t* scale)
{
    return guarded([&] {
        require(ineq != nullptr, "null inequality");
        auto result = covariance_map(ineq->value);
        if (scale)
            *scale = result.scale;
        emit(std::move(result.ineq), out);
    });
}

cf_status cf_verify(const cf_inequality* ineq, const cf_options* options, cf_report* out)
{
    return guarded([&] {
        require(ineq != nullptr && out != nullptr, "null argument");
        const auto r = facet_report(ineq->value, engine_options(options));
        *out = cf_report{};
        out->valid = r.valid;
        out->has_violating_cut = r.violating_cut.has_value();
        if (r.violating_cut) {
            out->violating_cut = r.violating_cut->mask();
            out->cut_node_count = r.violating_cut->node_count();
        }
        out->ambient_dim = r.ambient_dim;
        out->root_count = r.root_count;
        out->affine_rank = r.affine_rank;
        out->is_facet = r.is_facet;
        out->scale = r.scale;
    });
}

cf_status cf_check(const char* theorem, const cf_instance* inst, const cf_options* options, cf_check_result* out)
{
    return guarded([&] {
        require(theorem != nullptr && inst != nullptr && out != nullptr, "null argument");
        const Theorem th = parse_theorem(theorem);
        const auto r = check_theorem(th, inst->value.pair, inst->value.cycle, engine_options(options));
        *out = cf_check_result{};
        out->applicable = r.applicable;
        out->agree = r.agree;
        out->converse_candidate = r.converse_candidate;
        out->asserts_equivalence = asserts_equivalence(th);
        copy_into(out->predicted, r.predicted);
        copy_into(out->observed, r.observed);
    });
}

cf_status cf_survey_run(const char* theorem, int k, int t_min, int t_max, int max_n, const cf_options* options,
                        cf_survey** out)
{
    return guarded([&] {
        require(theorem != nullptr && out != nullptr, "null argument");
        const Theorem th = parse_theorem(theorem);
        if (k < 1 || t_min < 0 || t_max < t_min || max_n < 1)
            fail(ErrorCode::BadParameters, "need k >= 1 and 0 <= t-min <= t-max");
        auto result = std::make_unique<cf_survey>();
        result->value = survey(th, SurveyBounds{k, t_min, t_max, max_n}, engine_options(options));
        for (const auto& row : result->value.disagreements)
            result->disagreements.push_back(row_line(row));
        for (const auto& row : result->value.converse_candidates)
            result->converse.push_back(row_line(row));
        *out = result.release();
    });
}

int cf_survey_asserts_equivalence(const cf_survey* survey)
{
    return survey && asserts_equivalence(survey->value.theorem);
}

size_t cf_survey_cell_count(const cf_survey* survey)
{
    return survey ? survey->value.cells.size() : 0;
}

cf_status cf_survey_cell_at(const cf_survey* survey, size_t index, cf_survey_cell* out)
{
    return guarded([&] {
        require(survey != nullptr && out != nullptr, "null argument");
        require(index < survey->value.cells.size(), "cell index out of range");
        const auto& c = survey->value.cells[index];
        *out = cf_survey_cell{c.k, c.t, c.instances, c.checks, c.skipped, c.agree, c.disagree, c.converse_candidates};
    });
}

size_t cf_survey_disagreement_count(const cf_survey* survey)
{
    return survey ? survey->disagreements.size() : 0;
}

const char* cf_survey_disagreement(const cf_survey* survey, size_t index)
{
    return survey && index < survey->disagreements.size() ? survey->disagreements[index].c_str() : nullptr;
}

size_t cf_survey_converse_count(const cf_survey* survey)
{
    return survey ? survey->converse.size() : 0;
}

const char* cf_survey_converse(const cf_survey* survey, size_t index)
{
    return survey && index < survey->converse.size() ? survey->converse[index].c_str() : nullptr;
}

void cf_survey_free(cf_survey* survey)
{
    delete survey;
}

} // extern "C"
