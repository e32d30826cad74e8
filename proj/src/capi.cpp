#include "gradus/gradus.h"

#include "gradus/commands.hpp"
#include "gradus/error.hpp"
#include "gradus/jacobian.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <new>

struct gradus_context {
    gradus::CommandContext settings;
    std::string last_error;
};

struct gradus_report {
    std::string json;
};

struct gradus_poly {
    gradus::Polynomial value;
};

namespace {

thread_local std::string g_creation_error;

gradus_status status_of(gradus::ErrorKind kind) {
    switch (kind) {
        case gradus::ErrorKind::Usage: return GRADUS_USAGE;
        case gradus::ErrorKind::Precondition: return GRADUS_PRECONDITION;
        case gradus::ErrorKind::Internal: return GRADUS_INTERNAL;
    }
    return GRADUS_INTERNAL;
}

template <class F>
gradus_status guarded(std::string& error, F&& body) {
    try {
        body();
        error.clear();
        return GRADUS_OK;
    } catch (const gradus::Error& e) {
        error = e.what();
        return status_of(e.kind());
    } catch (const nlohmann::json::exception& e) {
        error = std::string("invalid JSON parameters: ") + e.what();
        return GRADUS_USAGE;
    } catch (const std::bad_alloc&) {
        error = "out of memory";
        return GRADUS_INTERNAL;
    } catch (const std::exception& e) {
        error = e.what();
        return GRADUS_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* gradus_version(void) { return "0.1.0"; }

gradus_status gradus_context_new(const char* field, uint64_t seed, gradus_context** out) {
    if (!out) return GRADUS_USAGE;
    *out = nullptr;
    return guarded(g_creation_error, [&] {
        auto ctx = std::make_unique<gradus_context>();
        ctx->settings.field = gradus::FieldConfig::parse(field ? field : "rational");
        ctx->settings.seed = seed;
        *out = ctx.release();
    });
}

void gradus_context_free(gradus_context* ctx) { delete ctx; }

gradus_status gradus_context_set_option(gradus_context* ctx, const char* name, int64_t value) {
    if (!ctx || !name) return GRADUS_USAGE;
    return guarded(ctx->last_error, [&] {
        const std::string key = name;
        if (key == "coeff-bound") {
            if (value < 1) throw gradus::UsageError("coeff-bound must be at least 1");
            ctx->settings.coeff_bound = value;
        } else if (key == "kmax") {
            if (value < 1 || value > 64) throw gradus::UsageError("kmax must lie in [1, 64]");
            ctx->settings.k_max = static_cast<unsigned>(value);
        } else if (key == "trials") {
            if (value < 1 || value > 100000) throw gradus::UsageError("trials must lie in [1, 100000]");
            ctx->settings.trials = static_cast<unsigned>(value);
        } else if (key == "timing") {
            ctx->settings.timing = value != 0;
        } else {
            throw gradus::UsageError("unknown option '" + key + "'");
        }
    });
}

const char* gradus_last_error(const gradus_context* ctx) {
    return ctx ? ctx->last_error.c_str() : g_creation_error.c_str();
}

gradus_status gradus_run(gradus_context* ctx, const char* command, const char* params_json, gradus_report** out) {
    if (!ctx || !command || !out) return GRADUS_USAGE;
    *out = nullptr;
    return guarded(ctx->last_error, [&] {
        nlohmann::json params = params_json && *params_json ? nlohmann::json::parse(params_json) : nlohmann::json::object();
        nlohmann::json report = gradus::run_command(command, params, ctx->settings);
        auto r = std::make_unique<gradus_report>();
        r->json = report.dump(2) + "\n";
        *out = r.release();
    });
}

const char* gradus_report_json(const gradus_report* report) { return report ? report->json.c_str() : ""; }

void gradus_report_free(gradus_report* report) { delete report; }

size_t gradus_command_count(void) { return gradus::command_names().size(); }

const char* gradus_command_name(size_t index) {
    static const std::vector<std::string> names = gradus::command_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

gradus_status gradus_poly_parse(gradus_context* ctx, const char* text, int dual, size_t num_vars, gradus_poly** out) {
    if (!ctx || !text || !out) return GRADUS_USAGE;
    *out = nullptr;
    return guarded(ctx->last_error, [&] {
        std::optional<std::size_t> nv;
        if (num_vars) nv = num_vars;
        auto family = dual ? gradus::Family::Dual : gradus::Family::Primal;
        auto p = std::make_unique<gradus_poly>();
        p->value = gradus::parse_poly(text, family, std::nullopt, nv).reduced(ctx->settings.field);
        *out = p.release();
    });
}

void gradus_poly_free(gradus_poly* poly) { delete poly; }

char* gradus_poly_to_string(const gradus_poly* poly) {
    if (!poly) return nullptr;
    std::string s = gradus::to_string(poly->value);
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void gradus_string_free(char* text) { std::free(text); }

gradus_status gradus_milnor_dim(gradus_context* ctx, const gradus_poly* poly, unsigned k, size_t* out) {
    if (!ctx || !poly || !out) return GRADUS_USAGE;
    return guarded(ctx->last_error, [&] { *out = gradus::milnor_dim(poly->value, k, ctx->settings.field); });
}

gradus_status gradus_is_smooth(gradus_context* ctx, const gradus_poly* poly, gradus_verdict* out) {
    if (!ctx || !poly || !out) return GRADUS_USAGE;
    return guarded(ctx->last_error, [&] {
        switch (gradus::is_smooth_hypersurface(poly->value, ctx->settings.field).verdict) {
            case gradus::Verdict::Smooth: *out = GRADUS_SMOOTH; break;
            case gradus::Verdict::Singular: *out = GRADUS_SINGULAR; break;
            case gradus::Verdict::Inconclusive: *out = GRADUS_INCONCLUSIVE; break;
        }
    });
}

}  // extern "C"
