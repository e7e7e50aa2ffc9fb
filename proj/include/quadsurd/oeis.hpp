#pragma once

#include "quadsurd/numbers.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadsurd::oeis {

class NotAvailableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(const std::string& what, unsigned line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    unsigned line_number;
};

struct BFile {
    std::string id;
    long offset = 0;  // index of the first term
    std::vector<std::pair<long, Int>> terms;
    enum class Source { network, fixture, cache } source = Source::fixture;
};

struct PrefixMatch {
    enum class Kind { unique, ambiguous, none } kind = Kind::none;
    long offset = 0;  // candidate[0] aligns to index (first_index + offset)
};

struct ClientOptions {
    std::filesystem::path cache_dir;  // empty: no on-disk cache
    std::string base_url = "http://oeis.org";
    bool offline = false;
};

/// B-file access with a cache -> bundled fixture -> network lookup order.
/// All 12 sequences the suites reference ship as bundled fixtures, so the
/// whole harness runs with offline = true.
class Client {
public:
    Client() = default;
    explicit Client(ClientOptions opts) : opts_(std::move(opts)) {}

    /// At least `count` terms of the sequence, or NotAvailableError.
    BFile get_terms(const std::string& id, std::size_t count) const;

    /// Unique shift aligning candidate to the b-file (overhang off the
    /// front counts as a partial alignment), ambiguity reported as such.
    PrefixMatch compare_prefix(const std::string& id, const std::vector<Int>& candidate,
                               unsigned max_offset) const;

    const ClientOptions& options() const { return opts_; }

private:
    ClientOptions opts_;
};

bool valid_sequence_id(const std::string& id);

/// Parse b-file text: '#' comments, then "index value" lines with strictly
/// increasing contiguous indices.
BFile parse_bfile(const std::string& id, const std::string& text, BFile::Source source);

/// Bundled term lists. Sequences with a formula in the numbers module are
/// generated; the rest are embedded verbatim.
const std::map<std::string, std::string>& bundled_fixtures();

}  // namespace quadsurd::oeis
