#pragma once

// Text formats for profiles, axes and partitions, plus deterministic JSON
// serialization of the solver reports.
//
// Profile format, line oriented:
//   # comment
//   candidates: a b c d e
//   1: a b c e d
//   100: a b c d e
// A vote line starts with its multiplicity. In manipulation instances the
// multiplicity of a line is read as the voting weight of one ballot.
//
// Axis files hold one or more `axis: ...` lines. Partition files hold
// `block: ...` lines, each optionally followed by an `axis: ...` line that
// orders exactly that block (default: the block order as written).

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "manipulation.hpp"

namespace spdist {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> tokens_after_colon(const std::string& line,
                                                   std::size_t colon) {
    std::vector<std::string> out;
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    while (rest >> tok) out.push_back(tok);
    return out;
}

inline bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace detail

inline Profile parse_profile(std::istream& in) {
    Profile p;
    std::string line;
    bool have_candidates = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw input_error("profile line " + std::to_string(lineno) +
                              ": expected 'candidates:' or '<count>:'");
        std::string head = line.substr(0, colon);
        auto toks = detail::tokens_after_colon(line, colon);
        if (head == "candidates") {
            if (have_candidates)
                throw input_error("profile line " + std::to_string(lineno) +
                                  ": duplicate candidates line");
            for (const auto& t : toks) p.candidates.push_back({t});
            have_candidates = true;
            continue;
        }
        long long mult = 0;
        try {
            std::size_t used = 0;
            mult = std::stoll(head, &used);
            while (used < head.size() &&
                   std::isspace(static_cast<unsigned char>(head[used])))
                ++used;
            if (used != head.size()) throw std::invalid_argument(head);
        } catch (const std::exception&) {
            throw input_error("profile line " + std::to_string(lineno) +
                              ": bad vote count '" + head + "'");
        }
        if (!have_candidates)
            throw input_error("profile line " + std::to_string(lineno) +
                              ": vote before candidates line");
        Vote v;
        for (const auto& t : toks) v.ranking.push_back({t});
        p.entries.push_back({v, mult});
    }
    validate_profile(p);
    return p;
}

inline void write_profile(std::ostream& out, const Profile& p) {
    out << "candidates:";
    for (const auto& c : p.candidates) out << ' ' << c.id;
    out << '\n';
    for (const auto& e : p.entries) {
        out << e.multiplicity << ':';
        for (const auto& c : e.vote.ranking) out << ' ' << c.id;
        out << '\n';
    }
}

inline std::string profile_text(const Profile& p) {
    std::ostringstream os;
    write_profile(os, p);
    return os.str();
}

inline std::vector<Axis> parse_axes(std::istream& in) {
    std::vector<Axis> axes;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos || line.substr(0, colon) != "axis")
            throw input_error("axis line " + std::to_string(lineno) +
                              ": expected 'axis: ...'");
        Axis a;
        for (const auto& t : detail::tokens_after_colon(line, colon))
            a.order.push_back({t});
        if (a.order.empty())
            throw input_error("axis line " + std::to_string(lineno) + ": empty axis");
        axes.push_back(a);
    }
    if (axes.empty()) throw input_error("axis file: no axis lines");
    return axes;
}

struct PartitionSpec {
    std::vector<std::vector<Candidate>> blocks;
    std::vector<Axis> axes;  // aligned with blocks
};

inline PartitionSpec parse_partition(std::istream& in) {
    PartitionSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable(line)) continue;
        auto colon = line.find(':');
        std::string head = colon == std::string::npos ? "" : line.substr(0, colon);
        auto toks = detail::tokens_after_colon(line, colon == std::string::npos ? 0 : colon);
        if (head == "block") {
            std::vector<Candidate> block;
            for (const auto& t : toks) block.push_back({t});
            if (block.empty())
                throw input_error("partition line " + std::to_string(lineno) +
                                  ": empty block");
            spec.blocks.push_back(block);
            spec.axes.push_back(Axis{block});
        } else if (head == "axis") {
            if (spec.blocks.empty())
                throw input_error("partition line " + std::to_string(lineno) +
                                  ": axis before any block");
            Axis a;
            for (const auto& t : toks) a.order.push_back({t});
            spec.axes.back() = a;
        } else {
            throw input_error("partition line " + std::to_string(lineno) +
                              ": expected 'block:' or 'axis:'");
        }
    }
    if (spec.blocks.empty()) throw input_error("partition file: no blocks");
    return spec;
}

// --- JSON ----------------------------------------------------------------------

inline ordered_json to_json(const Axis& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : a.order) arr.push_back(c.id);
    return arr;
}

inline ordered_json to_json(const Vote& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v.ranking) arr.push_back(c.id);
    return arr;
}

inline ordered_json to_json(const Profile& p) {
    ordered_json j;
    j["candidates"] = ordered_json::array();
    for (const auto& c : p.candidates) j["candidates"].push_back(c.id);
    j["votes"] = ordered_json::array();
    for (const auto& e : p.entries) {
        ordered_json entry;
        entry["count"] = e.multiplicity;
        entry["ranking"] = to_json(e.vote);
        j["votes"].push_back(entry);
    }
    return j;
}

inline ordered_json to_json(const Witness& w) {
    ordered_json j;
    j["vote_index"] = w.entry_index;
    j["left"] = w.left.id;
    j["middle"] = w.middle.id;
    j["right"] = w.right.id;
    return j;
}

inline ordered_json to_json(const ConsistencyResult& r) {
    ordered_json j;
    j["consistent"] = r.consistent();
    if (r.axis) j["axis"] = to_json(*r.axis);
    if (r.witness) j["witness"] = to_json(*r.witness);
    return j;
}

// The certificate part of a report, keyed per measure.
inline ordered_json certificate_json(const DistanceReport& r) {
    ordered_json c;
    switch (r.measure) {
        case Measure::M: {
            c["axis"] = to_json(r.axis());
            c["removed_voters"] = r.removed_voters;
            break;
        }
        case Measure::CD: {
            c["axis"] = to_json(r.axis());
            ordered_json kept = ordered_json::array();
            for (const auto& cd : r.kept_candidates) kept.push_back(cd.id);
            c["kept_candidates"] = kept;
            break;
        }
        case Measure::LCD: {
            c["axis"] = to_json(r.axis());
            ordered_json rem = ordered_json::array();
            for (const auto& per : r.removed_candidates) {
                ordered_json one = ordered_json::array();
                for (const auto& cd : per) one.push_back(cd.id);
                rem.push_back(one);
            }
            c["removed_candidates"] = rem;
            break;
        }
        case Measure::AA: {
            ordered_json axes = ordered_json::array();
            for (const auto& a : r.axes) axes.push_back(to_json(a));
            c["axes"] = axes;
            c["assignment"] = r.assignment;
            break;
        }
        case Measure::GS:
        case Measure::LS: {
            c["axis"] = to_json(r.axis());
            ordered_json corr = ordered_json::array();
            for (const auto& v : r.corrected) corr.push_back(to_json(v));
            c["corrected_votes"] = corr;
            break;
        }
        case Measure::CP: {
            ordered_json blocks = ordered_json::array();
            for (const auto& b : r.blocks) {
                ordered_json one = ordered_json::array();
                for (const auto& cd : b) one.push_back(cd.id);
                blocks.push_back(one);
            }
            c["blocks"] = blocks;
            ordered_json axes = ordered_json::array();
            for (const auto& a : r.axes) axes.push_back(to_json(a));
            c["block_axes"] = axes;
            break;
        }
    }
    return c;
}

inline ordered_json to_json(const Profile& p, const DistanceReport& r) {
    ordered_json j;
    j["measure"] = measure_name(r.measure);
    j["value"] = r.value;
    j["certificate"] = certificate_json(r);
    j["certificate_valid"] = verify_report(p, r);
    return j;
}

inline ordered_json to_json(const CcwmResult& r) {
    ordered_json j;
    j["manipulable"] = r.yes;
    if (r.yes) {
        ordered_json votes = ordered_json::array();
        for (const auto& v : r.manipulator_votes) votes.push_back(to_json(v));
        j["manipulator_votes"] = votes;
    }
    return j;
}

// --- small file helpers ----------------------------------------------------------

inline Profile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open profile file: " + path);
    return parse_profile(in);
}

inline std::vector<Axis> load_axes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open axis file: " + path);
    return parse_axes(in);
}

inline PartitionSpec load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open partition file: " + path);
    return parse_partition(in);
}

}  // namespace spdist
