#include "g2seq/sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace g2seq {

namespace {

// One application of the (forward or inverse) transform. Pascal's triangle is
// built incrementally, so a full call costs O(n^2) exact additions.
std::vector<Int> transform_once(const std::vector<Int>& a, bool inverse) {
    const size_t n = a.size();
    std::vector<Int> out(n);
    std::vector<Int> row{Int(1)}; // binomial row C(m, .)
    for (size_t m = 0; m < n; ++m) {
        Int acc = 0;
        for (size_t i = 0; i <= m; ++i) {
            if (inverse && ((m - i) & 1))
                acc -= row[i] * a[i];
            else
                acc += row[i] * a[i];
        }
        out[m] = acc;
        // next Pascal row
        std::vector<Int> next(m + 2, Int(1));
        for (size_t i = 1; i <= m; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    return out;
}

} // namespace

Sequence binomial_transform(const Sequence& s, long k) {
    if (s.terms.empty()) throw std::invalid_argument("empty sequence");
    std::vector<Int> t = s.terms;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) t = transform_once(t, k < 0);
    return Sequence{s.tag, std::move(t)};
}

const std::map<std::string, Sequence>& reference_table() {
    static const std::map<std::string, Sequence> table = {
        // first family (octant), 10 terms each
        {"A059710", {"A059710", {1, 0, 1, 1, 4, 10, 35, 120, 455, 1792}}},
        {"A108307", {"A108307", {1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032}}},
        {"A108304", {"A108304", {1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566}}},
        // second family (quadrant), 6 terms each
        {"A151366", {"A151366", {1, 0, 2, 2, 12, 30}}},
        {"A236408", {"A236408", {1, 1, 3, 9, 33, 131}}},
        {"A001181", {"A001181", {1, 2, 6, 22, 92, 422}}},
        {"A216947", {"A216947", {1, 3, 11, 47, 225, 1173}}},
    };
    return table;
}

Sequence reference(const std::string& tag) {
    const auto& table = reference_table();
    auto it = table.find(tag);
    if (it == table.end()) {
        std::ostringstream msg;
        msg << "unknown tag \"" << tag << "\"; known tags:";
        for (const auto& [t, _] : table) msg << " " << t;
        throw std::invalid_argument(msg.str());
    }
    return it->second;
}

std::size_t compare_prefix(const Sequence& a, const Sequence& b) {
    const size_t n = std::min(a.terms.size(), b.terms.size());
    size_t i = 0;
    while (i < n && a.terms[i] == b.terms[i]) ++i;
    return i;
}

std::string to_bfile(const Sequence& s) {
    std::ostringstream out;
    for (size_t n = 0; n < s.terms.size(); ++n)
        out << n << " " << s.terms[n].get_str() << "\n";
    return out.str();
}

Sequence from_bfile(const std::string& text) {
    Sequence s;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    long expected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long idx;
        std::string value;
        if (!(ls >> idx >> value)) {
            throw std::invalid_argument("b-file parse error at line " +
                                        std::to_string(lineno) + ": expected \"n a(n)\"");
        }
        std::string rest;
        if (ls >> rest) {
            throw std::invalid_argument("b-file parse error at line " +
                                        std::to_string(lineno) + ": trailing content");
        }
        if (idx != expected) {
            throw std::invalid_argument("b-file parse error at line " +
                                        std::to_string(lineno) + ": expected index " +
                                        std::to_string(expected));
        }
        Int term;
        if (term.set_str(value, 10) != 0) {
            throw std::invalid_argument("b-file parse error at line " +
                                        std::to_string(lineno) + ": bad integer \"" +
                                        value + "\"");
        }
        s.terms.push_back(std::move(term));
        ++expected;
    }
    return s;
}

} // namespace g2seq
