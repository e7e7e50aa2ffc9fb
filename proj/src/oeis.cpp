#include "quadsurd/oeis.hpp"

#include "httplib.h"

#include <cctype>
#include <fstream>
#include <sstream>

namespace quadsurd::oeis {

bool valid_sequence_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

BFile parse_bfile(const std::string& id, const std::string& text, BFile::Source source) {
    BFile out;
    out.id = id;
    out.source = source;
    std::istringstream in(text);
    std::string line;
    unsigned line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream fields(line);
        long index;
        std::string value;
        if (!(fields >> index >> value))
            throw BFileParseError(id + ": malformed b-file line", line_no);
        Int v;
        if (mpz_set_str(v.get_mpz_t(), value.c_str(), 10) != 0)
            throw BFileParseError(id + ": malformed term value", line_no);
        if (first) {
            out.offset = index;
            first = false;
        } else if (index != out.terms.back().first + 1) {
            throw BFileParseError(id + ": indices must be strictly increasing and contiguous",
                                  line_no);
        }
        out.terms.emplace_back(index, std::move(v));
    }
    return out;
}

namespace {

std::filesystem::path cache_path(const ClientOptions& opts, const std::string& id) {
    return opts.cache_dir / (id + ".txt");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Single-writer atomic replacement: write aside, then rename over.
void write_file_atomic(const std::filesystem::path& p, const std::string& text) {
    std::filesystem::create_directories(p.parent_path());
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << text;
    }
    std::filesystem::rename(tmp, p);
}

std::string fetch_network(const ClientOptions& opts, const std::string& id) {
    std::string url = opts.base_url;
    std::string host = url;
    auto scheme = host.find("://");
    if (scheme != std::string::npos) host = host.substr(scheme + 3);
    int port = 80;
    if (auto colon = host.find(':'); colon != std::string::npos) {
        port = std::stoi(host.substr(colon + 1));
        host = host.substr(0, colon);
    }
    httplib::Client cli(host, port);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(20);
    cli.set_follow_location(true);
    std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
    auto res = cli.Get(path.c_str());
    if (!res || res->status != 200)
        throw NotAvailableError(id + ": network fetch failed (" + host + path + ")");
    return res->body;
}

}  // namespace

BFile Client::get_terms(const std::string& id, std::size_t count) const {
    if (!valid_sequence_id(id))
        throw std::domain_error("get_terms: sequence id must match A followed by six digits");
    if (count < 1) throw std::domain_error("get_terms: count >= 1");

    if (!opts_.cache_dir.empty()) {
        auto p = cache_path(opts_, id);
        if (std::filesystem::exists(p)) {
            BFile cached = parse_bfile(id, read_file(p), BFile::Source::cache);
            if (cached.terms.size() >= count) return cached;
        }
    }

    const auto& fixtures = bundled_fixtures();
    if (auto it = fixtures.find(id); it != fixtures.end()) {
        BFile fixed = parse_bfile(id, it->second, BFile::Source::fixture);
        if (fixed.terms.size() >= count) return fixed;
    }

    if (opts_.offline)
        throw NotAvailableError(id + ": not cached or bundled, and offline mode forbids "
                                     "network access");

    std::string body = fetch_network(opts_, id);
    BFile fetched = parse_bfile(id, body, BFile::Source::network);
    if (fetched.terms.size() < count)
        throw NotAvailableError(id + ": b-file has only " +
                                std::to_string(fetched.terms.size()) + " terms");
    if (!opts_.cache_dir.empty()) write_file_atomic(cache_path(opts_, id), body);
    return fetched;
}

PrefixMatch Client::compare_prefix(const std::string& id, const std::vector<Int>& candidate,
                                   unsigned max_offset) const {
    if (candidate.size() < 5)
        throw std::domain_error("compare_prefix: candidate needs at least 5 terms");
    BFile seq = get_terms(id, candidate.size());

    const long n_terms = static_cast<long>(seq.terms.size());
    const long len = static_cast<long>(candidate.size());
    std::vector<long> hits;
    for (long s = -static_cast<long>(max_offset); s <= static_cast<long>(max_offset); ++s) {
        long overlap = 0;
        bool ok = true;
        for (long j = 0; j < len; ++j) {
            long pos = s + j;
            if (pos < 0 || pos >= n_terms) continue;
            ++overlap;
            if (seq.terms[static_cast<size_t>(pos)].second != candidate[static_cast<size_t>(j)]) {
                ok = false;
                break;
            }
        }
        if (ok && overlap > 0) hits.push_back(s);
    }
    if (hits.empty()) return PrefixMatch{PrefixMatch::Kind::none, 0};
    if (hits.size() > 1) return PrefixMatch{PrefixMatch::Kind::ambiguous, hits.front()};
    return PrefixMatch{PrefixMatch::Kind::unique, hits.front()};
}

}  // namespace quadsurd::oeis
