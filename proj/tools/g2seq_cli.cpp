// Command-line front end; talks to the library exclusively through the C API.

#include "g2seq.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
        buf << in.rdbuf();
    }
    return buf.str();
}

void print_sequence(g2seq_sequence* seq, const std::string& format) {
    char* text = nullptr;
    if (format == "json") {
        std::cout << "[";
        for (size_t i = 0; i < g2seq_length(seq); ++i) {
            g2seq_term(seq, i, &text);
            std::cout << (i ? "," : "") << "\"" << text << "\"";
            g2seq_string_free(text);
        }
        std::cout << "]\n";
    } else {
        g2seq_render_bfile(seq, &text);
        std::cout << text;
        g2seq_string_free(text);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact octant/quadrant sequence generator and verifier"};
    app.require_subcommand(1);

    std::string model, method, scope = "all", input, format = "bfile";
    long n = 20, k = 1;

    CLI::App* gen = app.add_subcommand("gen", "generate a sequence");
    gen->add_option("model", model, "t3, e3, a108304, quad0..quad3")->required();
    gen->add_option("--n", n, "last index to generate (default 20)");
    gen->add_option("--method", method, "walk, ct, rec, closed (model default if omitted)");
    gen->add_option("--format", format, "bfile or json")
        ->check(CLI::IsMember({"bfile", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("--scope", scope, "all, thm1, thm2, factorization, closed, quadrant");

    CLI::App* transform = app.add_subcommand("transform", "binomial transform of a b-file");
    transform->add_option("input", input, "b-file path, or - for stdin");
    transform->add_option("--k", k, "transform exponent (negative inverts)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        g2seq_sequence* seq = nullptr;
        if (g2seq_generate(model.c_str(), n, method.empty() ? nullptr : method.c_str(),
                           &seq) != G2SEQ_OK)
            return usage_error(g2seq_last_error());
        print_sequence(seq, format);
        g2seq_sequence_free(seq);
        return 0;
    }

    if (verify->parsed()) {
        char* json = nullptr;
        int all_pass = 0;
        if (g2seq_verify(scope.c_str(), &json, &all_pass) != G2SEQ_OK)
            return usage_error(g2seq_last_error());
        std::cout << json;
        g2seq_string_free(json);
        return all_pass ? 0 : 1;
    }

    // transform
    std::string text;
    try {
        text = read_input(input);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    g2seq_sequence* seq = nullptr;
    if (g2seq_parse_bfile(text.c_str(), &seq) != G2SEQ_OK)
        return usage_error(g2seq_last_error());
    g2seq_sequence* out = nullptr;
    if (g2seq_transform(seq, k, &out) != G2SEQ_OK) {
        g2seq_sequence_free(seq);
        return usage_error(g2seq_last_error());
    }
    print_sequence(out, "bfile");
    g2seq_sequence_free(seq);
    g2seq_sequence_free(out);
    return 0;
}
