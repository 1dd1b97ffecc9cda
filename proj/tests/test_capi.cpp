#include "g2seq.h"

#include "g2seq/verify.hpp"

#include <doctest.h>

#include <string>

namespace {

std::string take_string(char* s) {
    std::string out = s ? s : "";
    g2seq_string_free(s);
    return out;
}

} // namespace

TEST_CASE("C API generation and rendering") {
    g2seq_sequence* seq = nullptr;
    REQUIRE(g2seq_generate("t3", 9, "rec", &seq) == G2SEQ_OK);
    CHECK(g2seq_length(seq) == 10);
    char* text = nullptr;
    REQUIRE(g2seq_render_bfile(seq, &text) == G2SEQ_OK);
    CHECK(take_string(text) ==
          "0 1\n1 0\n2 1\n3 1\n4 4\n5 10\n6 35\n7 120\n8 455\n9 1792\n");
    char* term = nullptr;
    REQUIRE(g2seq_term(seq, 9, &term) == G2SEQ_OK);
    CHECK(take_string(term) == "1792");
    g2seq_sequence_free(seq);
}

TEST_CASE("C API methods agree across pipelines") {
    for (const char* method : {"walk", "ct", "rec", "closed"}) {
        g2seq_sequence* seq = nullptr;
        REQUIRE(g2seq_generate("t3", 9, method, &seq) == G2SEQ_OK);
        char* text = nullptr;
        g2seq_render_bfile(seq, &text);
        CHECK(take_string(text).substr(0, 8) == "0 1\n1 0\n");
        g2seq_sequence_free(seq);
    }
}

TEST_CASE("C API transform matches the table") {
    g2seq_sequence* t3 = nullptr;
    REQUIRE(g2seq_generate("t3", 9, nullptr, &t3) == G2SEQ_OK);
    g2seq_sequence* e3 = nullptr;
    REQUIRE(g2seq_transform(t3, 1, &e3) == G2SEQ_OK);
    g2seq_sequence* expected = nullptr;
    REQUIRE(g2seq_generate("e3", 9, "rec", &expected) == G2SEQ_OK);
    char *a = nullptr, *b = nullptr;
    g2seq_render_bfile(e3, &a);
    g2seq_render_bfile(expected, &b);
    CHECK(take_string(a) == take_string(b));
    g2seq_sequence_free(t3);
    g2seq_sequence_free(e3);
    g2seq_sequence_free(expected);
}

TEST_CASE("C API b-file parsing") {
    g2seq_sequence* seq = nullptr;
    REQUIRE(g2seq_parse_bfile("0 1\n1 2\n2 4\n", &seq) == G2SEQ_OK);
    CHECK(g2seq_length(seq) == 3);
    g2seq_sequence_free(seq);
    CHECK(g2seq_parse_bfile("0 1\nbroken\n", &seq) == G2SEQ_USAGE_ERROR);
    CHECK(std::string(g2seq_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("C API rejects unknown models and undefined methods") {
    g2seq_sequence* seq = nullptr;
    CHECK(g2seq_generate("t4", 5, nullptr, &seq) == G2SEQ_USAGE_ERROR);
    CHECK(std::string(g2seq_last_error()).find("unknown model") != std::string::npos);
    CHECK(g2seq_generate("quad0", 5, "walk", &seq) == G2SEQ_USAGE_ERROR);
    CHECK(g2seq_generate("e3", 5, "closed", &seq) == G2SEQ_USAGE_ERROR);
}

TEST_CASE("C API verify on a fast scope") {
    char* json = nullptr;
    int all_pass = -1;
    REQUIRE(g2seq_verify("factorization", &json, &all_pass) == G2SEQ_OK);
    const std::string report = take_string(json);
    CHECK(all_pass == 1);
    CHECK(report.find("c04_operator_identities") != std::string::npos);
    CHECK(g2seq_verify("bogus", &json, &all_pass) == G2SEQ_USAGE_ERROR);
}

TEST_CASE("verification fails loudly on corrupted reference data") {
    auto refs = g2seq::reference_table();
    refs.at("A059710").terms[4] = 5;
    const auto report = g2seq::run_verification("thm2", refs);
    CHECK_FALSE(report.all_pass());
}
