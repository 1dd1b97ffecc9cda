#include "g2seq.h"

#include "g2seq/holonomic.hpp"
#include "g2seq/laurent.hpp"
#include "g2seq/sequence.hpp"
#include "g2seq/series.hpp"
#include "g2seq/verify.hpp"
#include "g2seq/walks.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

using namespace g2seq;

struct g2seq_sequence {
    Sequence seq;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(const std::string& msg) {
    g_last_error = msg;
    return G2SEQ_USAGE_ERROR;
}

Sequence generate_impl(const std::string& model, long n, std::string method) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    auto bad_method = [&]() -> Sequence {
        throw std::invalid_argument("method \"" + method + "\" is not defined for model \"" +
                                    model + "\"");
    };
    if (model == "t3") {
        if (method.empty()) method = "rec";
        if (method == "walk") return count_excursions(octant_g2_model(), n);
        if (method == "ct") return ct_sequence(g2_kernel(), n);
        if (method == "rec") return rec_generate(t3_recurrence(), {1, 0, 1}, n);
        if (method == "closed")
            return Sequence{"", ps_integer_coeffs(t3_closed_form_hypergeom(n + 1))};
        return bad_method();
    }
    if (model == "e3") {
        if (method.empty()) method = "rec";
        if (method == "walk") return count_excursions(hesitating_model(), n);
        if (method == "ct") {
            // adjoining a loop to the kernel realizes one binomial transform
            Kernel g2 = g2_kernel();
            return ct_sequence(lp_add(g2.K, LaurentPoly::constant(1)), g2.W, n);
        }
        if (method == "rec") return rec_generate(e3_recurrence(), {1, 1}, n);
        return bad_method();
    }
    if (model == "a108304") {
        if (method.empty()) method = "ct";
        if (method == "walk") return count_excursions(with_extra_zero_steps(octant_g2_model(), 2), n);
        if (method == "ct") {
            Kernel g2 = g2_kernel();
            return ct_sequence(lp_add(g2.K, LaurentPoly::constant(2)), g2.W, n);
        }
        return bad_method();
    }
    if (model.size() == 5 && model.rfind("quad", 0) == 0 && model[4] >= '0' && model[4] <= '3') {
        const long q = model[4] - '0';
        if (method.empty()) method = "rec";
        if (method == "ct") return ct_sequence(sl3_kernel(q), n);
        if (method == "rec") {
            // pick the uniform-recurrence parameter that generates this row
            static const char* kTags[4] = {"A151366", "A236408", "A001181", "A216947"};
            const Sequence want = ct_sequence(sl3_kernel(q), std::max<long>(n, 3));
            const auto sigma = resolve_sigma();
            const std::string tag = kTags[q];
            for (const auto& [k, t] : sigma) {
                if (t != tag) continue;
                std::vector<Int> init(want.terms.begin(), want.terms.begin() + 4);
                Sequence s = rec_generate(uniform_recurrence(k), init, std::max<long>(n, 3));
                s.terms.resize(static_cast<size_t>(n) + 1);
                return s;
            }
            throw std::runtime_error("no uniform-recurrence parameter maps to " + tag);
        }
        return bad_method();
    }
    throw std::invalid_argument("unknown model \"" + model +
                                "\"; known models: t3, e3, a108304, quad0..quad3");
}

} // namespace

extern "C" {

const char* g2seq_last_error(void) { return g_last_error.c_str(); }

int g2seq_generate(const char* model, long n, const char* method, g2seq_sequence** out) {
    if (!model || !out) return fail("null argument");
    try {
        *out = new g2seq_sequence{generate_impl(model, n, method ? method : "")};
        return G2SEQ_OK;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

int g2seq_transform(const g2seq_sequence* s, long k, g2seq_sequence** out) {
    if (!s || !out) return fail("null argument");
    try {
        *out = new g2seq_sequence{binomial_transform(s->seq, k)};
        return G2SEQ_OK;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

int g2seq_parse_bfile(const char* text, g2seq_sequence** out) {
    if (!text || !out) return fail("null argument");
    try {
        *out = new g2seq_sequence{from_bfile(text)};
        return G2SEQ_OK;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

int g2seq_render_bfile(const g2seq_sequence* s, char** out) {
    if (!s || !out) return fail("null argument");
    *out = dup_string(to_bfile(s->seq));
    return G2SEQ_OK;
}

size_t g2seq_length(const g2seq_sequence* s) { return s ? s->seq.terms.size() : 0; }

int g2seq_term(const g2seq_sequence* s, size_t index, char** out) {
    if (!s || !out) return fail("null argument");
    if (index >= s->seq.terms.size()) return fail("term index out of range");
    *out = dup_string(s->seq.terms[index].get_str());
    return G2SEQ_OK;
}

int g2seq_verify(const char* scope, char** json_report, int* all_pass) {
    if (!scope) return fail("null argument");
    try {
        const VerificationReport report = run_verification(scope);
        if (json_report) *json_report = dup_string(report_to_json(report));
        if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
        return G2SEQ_OK;
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

void g2seq_sequence_free(g2seq_sequence* s) { delete s; }

void g2seq_string_free(char* s) { std::free(s); }

} // extern "C"
