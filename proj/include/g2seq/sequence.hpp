#pragma once

#include "g2seq/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2seq {

/// Finite prefix of an integer sequence, indexed from 0. Immutable by
/// convention: every operation returns a new value.
struct Sequence {
    std::string tag;
    std::vector<Int> terms;

    bool operator==(const Sequence& o) const { return terms == o.terms; }
};

/// k-fold binomial transform. k = 1 maps a(n) to sum C(n,i) a(i); negative k
/// applies the inverse transform |k| times; k = 0 is the identity.
/// Throws std::invalid_argument on an empty sequence.
Sequence binomial_transform(const Sequence& s, long k);

/// Sequence rows printed in the paper's two tables, keyed by OEIS tag.
const std::map<std::string, Sequence>& reference_table();

/// Throws std::invalid_argument listing the known tags if `tag` is unknown.
Sequence reference(const std::string& tag);

/// Length of the longest common prefix.
std::size_t compare_prefix(const Sequence& a, const Sequence& b);

/// OEIS b-file rendering: one "n a(n)\n" line per term, n from 0.
std::string to_bfile(const Sequence& s);

/// Parses b-file text; throws std::invalid_argument with the offending line
/// number on malformed input.
Sequence from_bfile(const std::string& text);

} // namespace g2seq
