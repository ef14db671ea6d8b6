#pragma once

// Terse constructors for test fixtures.

#include <sstream>
#include <string>
#include <vector>

#include <spdist/spdist.hpp>

namespace testutil {

inline std::vector<spdist::Candidate> cands(const std::string& tokens) {
    std::vector<spdist::Candidate> out;
    std::istringstream in(tokens);
    std::string tok;
    while (in >> tok) out.push_back({tok});
    return out;
}

inline spdist::Vote vote(const std::string& tokens) { return {cands(tokens)}; }

inline spdist::Axis axis(const std::string& tokens) { return {cands(tokens)}; }

// Parse the library text format from a literal.
inline spdist::Profile profile(const std::string& text) {
    std::istringstream in(text);
    return spdist::parse_profile(in);
}

// Build a profile from vote token strings, all multiplicity one unless a
// "3x" style prefix is given.
inline spdist::Profile profile_of(const std::string& candidates,
                                  const std::vector<std::string>& votes) {
    spdist::Profile p;
    p.candidates = cands(candidates);
    for (const auto& line : votes) {
        long long mult = 1;
        std::string body = line;
        auto x = line.find('x');
        if (x != std::string::npos && x > 0 &&
            line.find_first_not_of("0123456789") == x) {
            mult = std::stoll(line.substr(0, x));
            body = line.substr(x + 1);
        }
        p.entries.push_back({vote(body), mult});
    }
    spdist::validate_profile(p);
    return p;
}

}  // namespace testutil
