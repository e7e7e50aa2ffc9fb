#pragma once

#include "quadsurd/closedform.hpp"
#include "quadsurd/oeis.hpp"
#include "quadsurd/recognition.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace quadsurd::harness {

enum class SuiteId {
    lemma1,
    lemma2,
    lemma3,
    theorem1,
    theorem2,
    conj1,
    conj2,
    conj3,
    conj4,
    conj5,
    conj6,
    conj7,
    conj8,
    conj9,
    conj10,
    prop1,
    prop2,
    series,
};

std::string to_string(SuiteId id);
std::optional<SuiteId> suite_from_string(const std::string& name);
std::vector<SuiteId> all_suites();

/// Exact integral upper limit q or q*sqrt(2); kept symbolic so cache keys
/// and reports never hold rounded decimals.
struct ExactLimit {
    Rat q{0};
    bool times_sqrt2 = false;

    std::string str() const;
    Real value(mpfr_prec_t prec) const;
    /// Accepts "1", "5/4", "sqrt2", "3*sqrt2"; rejects decimals.
    static ExactLimit parse(const std::string& token);
};

enum class CaseStatus { pass, fail, recognition_failure, quadrature_failure };
std::string to_string(CaseStatus s);

struct CaseResult {
    std::string id;  // e.g. "conj5/m=3"
    std::vector<std::pair<std::string, std::string>> params;
    std::string computed;
    std::string recognized;
    std::string expected;
    std::optional<long> offset;
    CaseStatus status = CaseStatus::fail;
    std::string residual;
    unsigned digits = 0;
    long ms = 0;
    std::string note;
};

struct OffsetRecord {
    std::string suite;
    std::string sequence;
    long offset = 0;
    std::string note;
};

struct SuiteReport {
    SuiteId suite;
    std::vector<CaseResult> cases;
    unsigned pass = 0, fail = 0;
    std::map<std::string, unsigned> failures_by_kind;
    std::string label;  // overrides to_string(suite) in reports when set
};

struct Report {
    unsigned digits = 60;
    bool offline = true;
    unsigned threads = 1;
    unsigned long cache_hits = 0, cache_misses = 0;
    std::vector<OffsetRecord> offset_ledger;
    std::vector<SuiteReport> suites;

    unsigned total_pass() const;
    unsigned total_fail() const;
    bool all_pass() const { return total_fail() == 0; }
    /// Deterministic serialization; the only run-dependent bytes are the
    /// "ms" duration fields.
    std::string to_json() const;
};

/// JSON-lines store for expensive integrals, keyed by
/// (kind, n, exact upper limit, digits). Values are decimal strings with
/// their error bounds; entries computed at fewer digits than requested are
/// recomputed. Writers serialize through a mutex and replace the file
/// atomically.
class IntegralCache {
public:
    IntegralCache() = default;
    explicit IntegralCache(std::filesystem::path file);

    std::optional<BigReal> get(const std::string& key, unsigned digits);
    void put(const std::string& key, const BigReal& value);

    unsigned long hits() const { return hits_; }
    unsigned long misses() const { return misses_; }
    std::size_t size() const;
    void clear();
    std::filesystem::path path() const { return file_; }

private:
    struct Entry {
        std::string value, error_bound;
        unsigned digits = 0;
        std::string created_at;
    };
    void load();
    void flush_locked();

    std::filesystem::path file_;
    std::map<std::string, Entry> entries_;
    mutable std::mutex mu_;
    unsigned long hits_ = 0, misses_ = 0;
};

struct RunConfig {
    std::vector<SuiteId> suites;
    unsigned digits = 60;
    std::optional<std::pair<unsigned, unsigned>> n_range;
    std::optional<std::pair<unsigned, unsigned>> m_range;
    std::vector<Rat> k_set;
    unsigned long series_terms = 100000;
    unsigned long fourier_terms = 10000;
    bool offline = true;
    std::filesystem::path cache_file;  // empty: in-memory memo only
    std::string oeis_base_url;         // empty: default
    std::filesystem::path oeis_cache_dir;
    unsigned threads = 1;
};

Report run_suite(const RunConfig& config);

/// Closed-form verification (theorem2 + lemma suites) at the given ranges.
Report verify_closed_forms(unsigned n_max, const std::vector<Rat>& k_set,
                           const PrecisionContext& ctx);

/// One conjecture suite over an index range.
Report verify_conjecture(SuiteId id, unsigned lo, unsigned hi, const PrecisionContext& ctx);

}  // namespace quadsurd::harness
