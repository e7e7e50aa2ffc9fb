#include "quadsurd/harness.hpp"

#include "quadsurd/integrals.hpp"
#include "quadsurd/quadrature.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace quadsurd::harness {

using closedform::SeriesKind;
using realfield::QuadratureFailure;
using realfield::TrigMode;
using recognition::RecognitionError;

// ---------------------------------------------------------------------------
// names and tokens

namespace {
const std::pair<SuiteId, const char*> kSuiteNames[] = {
    {SuiteId::lemma1, "lemma1"},     {SuiteId::lemma2, "lemma2"},
    {SuiteId::lemma3, "lemma3"},     {SuiteId::theorem1, "theorem1"},
    {SuiteId::theorem2, "theorem2"}, {SuiteId::conj1, "conj1"},
    {SuiteId::conj2, "conj2"},       {SuiteId::conj3, "conj3"},
    {SuiteId::conj4, "conj4"},       {SuiteId::conj5, "conj5"},
    {SuiteId::conj6, "conj6"},       {SuiteId::conj7, "conj7"},
    {SuiteId::conj8, "conj8"},       {SuiteId::conj9, "conj9"},
    {SuiteId::conj10, "conj10"},     {SuiteId::prop1, "prop1"},
    {SuiteId::prop2, "prop2"},       {SuiteId::series, "series"},
};
}  // namespace

std::string to_string(SuiteId id) {
    for (const auto& [s, n] : kSuiteNames)
        if (s == id) return n;
    return "?";
}

std::optional<SuiteId> suite_from_string(const std::string& name) {
    for (const auto& [s, n] : kSuiteNames)
        if (name == n) return s;
    return std::nullopt;
}

std::vector<SuiteId> all_suites() {
    std::vector<SuiteId> out;
    for (const auto& [s, n] : kSuiteNames) out.push_back(s);
    return out;
}

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::recognition_failure: return "recognition_failure";
        case CaseStatus::quadrature_failure: return "quadrature_failure";
    }
    return "?";
}

std::string ExactLimit::str() const {
    std::string qs = q.get_den() == 1 ? q.get_num().get_str()
                                      : q.get_num().get_str() + "/" + q.get_den().get_str();
    if (!times_sqrt2) return qs;
    return q == 1 ? "sqrt2" : qs + "*sqrt2";
}

Real ExactLimit::value(mpfr_prec_t prec) const {
    Real v = Real::of(q, prec);
    if (times_sqrt2) v = v * sqrt(Real::of(2L, prec));
    return v;
}

ExactLimit ExactLimit::parse(const std::string& token) {
    if (token.find('.') != std::string::npos)
        throw std::invalid_argument("limits must be exact tokens (no decimals): " + token);
    ExactLimit out;
    std::string body = token;
    if (body == "sqrt2") {
        out.q = 1;
        out.times_sqrt2 = true;
        return out;
    }
    if (auto star = body.find("*sqrt2"); star != std::string::npos && star + 6 == body.size()) {
        out.times_sqrt2 = true;
        body = body.substr(0, star);
    }
    if (body.empty() || mpq_set_str(out.q.get_mpq_t(), body.c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse limit token: " + token);
    out.q.canonicalize();
    if (out.q.get_den() <= 0 || out.q <= 0)
        throw std::invalid_argument("limit must be positive: " + token);
    return out;
}

// ---------------------------------------------------------------------------
// integral cache

namespace {
std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}
}  // namespace

IntegralCache::IntegralCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

void IntegralCache::load() {
    if (file_.empty() || !std::filesystem::exists(file_)) return;
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        Entry e;
        e.value = j.value("value", "");
        e.error_bound = j.value("error_bound", "");
        e.digits = j.value("digits", 0u);
        e.created_at = j.value("created_at", "");
        entries_[j.value("key", "")] = std::move(e);
    }
}

void IntegralCache::flush_locked() {
    if (file_.empty()) return;
    std::filesystem::path tmp = file_;
    tmp += ".tmp";
    if (!file_.parent_path().empty()) std::filesystem::create_directories(file_.parent_path());
    {
        std::ofstream out(tmp);
        for (const auto& [key, e] : entries_) {
            nlohmann::ordered_json j;
            j["key"] = key;
            j["value"] = e.value;
            j["error_bound"] = e.error_bound;
            j["digits"] = e.digits;
            j["created_at"] = e.created_at;
            out << j.dump() << "\n";
        }
    }
    std::filesystem::rename(tmp, file_);
}

std::optional<BigReal> IntegralCache::get(const std::string& key, unsigned digits) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end() || it->second.digits < digits) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    const Entry& e = it->second;
    PrecisionContext ctx(e.digits);
    BigReal out;
    out.value = Real::of_decimal(e.value, ctx.bits());
    out.error_bound = Real::of_decimal(e.error_bound, 64);
    out.digits = e.digits;
    return out;
}

void IntegralCache::put(const std::string& key, const BigReal& value) {
    std::lock_guard<std::mutex> lock(mu_);
    Entry e;
    e.value = value.value.str(value.digits + 30);
    e.error_bound = value.error_bound.str(8);
    e.digits = value.digits;
    e.created_at = now_iso8601();
    entries_[key] = std::move(e);
    flush_locked();
}

std::size_t IntegralCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

void IntegralCache::clear() {
    std::lock_guard<std::mutex> lock(mu_);
    entries_.clear();
    if (!file_.empty() && std::filesystem::exists(file_)) std::filesystem::remove(file_);
}

// ---------------------------------------------------------------------------
// report serialization

unsigned Report::total_pass() const {
    unsigned n = 0;
    for (const auto& s : suites) n += s.pass;
    return n;
}

unsigned Report::total_fail() const {
    unsigned n = 0;
    for (const auto& s : suites) n += s.fail;
    return n;
}

std::string Report::to_json() const {
    nlohmann::ordered_json root;
    root["environment"] = {{"digits", digits},
                           {"offline", offline},
                           {"threads", threads},
                           {"cache_hits", cache_hits},
                           {"cache_misses", cache_misses}};
    auto& ledger = root["offset_ledger"] = nlohmann::ordered_json::array();
    for (const auto& o : offset_ledger)
        ledger.push_back({{"suite", o.suite},
                          {"sequence", o.sequence},
                          {"offset", o.offset},
                          {"note", o.note}});
    auto& js = root["suites"] = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        nlohmann::ordered_json suite;
        suite["suite"] = s.label.empty() ? to_string(s.suite) : s.label;
        auto& cases = suite["cases"] = nlohmann::ordered_json::array();
        for (const auto& c : s.cases) {
            nlohmann::ordered_json jc;
            jc["id"] = c.id;
            nlohmann::ordered_json params;
            for (const auto& [k, v] : c.params) params[k] = v;
            jc["params"] = params;
            jc["computed"] = c.computed;
            jc["recognized"] = c.recognized;
            jc["expected"] = c.expected;
            if (c.offset) jc["offset"] = *c.offset;
            else jc["offset"] = nullptr;
            jc["status"] = to_string(c.status);
            jc["residual"] = c.residual;
            jc["digits"] = c.digits;
            jc["ms"] = c.ms;
            if (!c.note.empty()) jc["note"] = c.note;
            cases.push_back(std::move(jc));
        }
        suite["summary"] = {{"pass", s.pass},
                            {"fail", s.fail},
                            {"failures_by_kind", s.failures_by_kind}};
        js.push_back(std::move(suite));
    }
    root["summary"] = {{"pass", total_pass()}, {"fail", total_fail()}};
    return root.dump(1);
}

// ---------------------------------------------------------------------------
// golden tables transcribed from the published integration results

namespace {

const char* kConj2Table[] = {
    "4 (-4 + 3 sqrt(2)) pi",   "4 (-12 + 5 sqrt(6)) pi",  "8 (-12 + 7 sqrt(3)) pi",
    "8 (-20 + 9 sqrt(5)) pi",  "4 (-60 + 11 sqrt(30)) pi", "4 (-84 + 13 sqrt(42)) pi",
    "8 (-56 + 15 sqrt(14)) pi",
};

const char* kConj5Table[] = {
    "4 (-1 + sqrt(2)) pi",     "4 (-2 + sqrt(6)) pi",      "4 (-3 + 2 sqrt(3)) pi",
    "8 (-2 + sqrt(5)) pi",     "4 (-5 + sqrt(30)) pi",     "4 (-6 + sqrt(42)) pi",
    "4 (-7 + 2 sqrt(14)) pi",  "8 (-4 + 3 sqrt(2)) pi",    "12 (-3 + sqrt(10)) pi",
    "4 (-10 + sqrt(110)) pi",  "4 (-11 + 2 sqrt(33)) pi",  "8 (-6 + sqrt(39)) pi",
    "4 (-13 + sqrt(182)) pi",  "4 (-14 + sqrt(210)) pi",   "4 (-15 + 4 sqrt(15)) pi",
    "16 (-4 + sqrt(17)) pi",
};

// rows 1..17 align to m = row + 3
const char* kConj8Table[] = {
    "-pi (ln(4) - 2 ln(7 + 3 sqrt(5)))",    "-pi (ln(25) - 2 ln(17 + 2 sqrt(66)))",
    "-pi (ln(9) - 2 ln(10 + sqrt(91)))",    "-pi (ln(49) - 2 ln(23 + 4 sqrt(30)))",
    "-pi (ln(16) - 2 ln(13 + 3 sqrt(17)))", "-pi (ln(81) - 2 ln(29 + 2 sqrt(190)))",
    "-pi (ln(25) - 2 ln(16 + sqrt(231)))",  "-pi (ln(121) - 2 ln(35 + 4 sqrt(69)))",
    "-pi (ln(36) - 2 ln(19 + 5 sqrt(13)))", "-pi (ln(169) - 2 ln(41 + 6 sqrt(42)))",
    "-pi (ln(49) - 2 ln(22 + sqrt(435)))",  "-pi (ln(225) - 2 ln(47 + 8 sqrt(31)))",
    "-pi (ln(64) - 2 ln(25 + sqrt(561)))",  "-pi (ln(289) - 2 ln(53 + 6 sqrt(70)))",
    "-pi (ln(81) - 2 ln(28 + sqrt(703)))",  "-pi (ln(361) - 2 ln(59 + 4 sqrt(195)))",
    "-pi (ln(100) - 2 ln(31 + sqrt(861)))",
};

const char* kConj9Table[] = {
    "4 (-12 + 5 sqrt(6)) pi",      "2 (-15 + 4 sqrt(15)) pi",
    "8/9 (-28 + 11 sqrt(7)) pi",   "3/2 (-15 + 7 sqrt(5)) pi",
    "4/25 (-132 + 17 sqrt(66)) pi", "2/9 (-91 + 10 sqrt(91)) pi",
    "8/49 (-120 + 23 sqrt(30)) pi", "3/8 (-51 + 13 sqrt(17)) pi",
    "4/81 (-380 + 29 sqrt(190)) pi", "2/25 (-231 + 16 sqrt(231)) pi",
    "8/121 (-276 + 35 sqrt(69)) pi", "5/18 (-65 + 19 sqrt(13)) pi",
    "12/169 (-252 + 41 sqrt(42)) pi", "2/49 (-435 + 22 sqrt(435)) pi",
    "16/225 (-248 + 47 sqrt(31)) pi", "1/32 (-561 + 25 sqrt(561)) pi",
    "12/289 (-420 + 53 sqrt(70)) pi", "2/81 (-703 + 28 sqrt(703)) pi",
    "8/361 (-780 + 59 sqrt(195)) pi", "1/50 (-861 + 31 sqrt(861)) pi",
};

// ---------------------------------------------------------------------------
// runner

struct CaseData {
    CaseResult r;
    std::optional<Int> seq1, seq2;  // per-suite sequence payloads
};

class Runner {
public:
    explicit Runner(const RunConfig& cfg)
        : cfg_(cfg),
          cache_(cfg.cache_file),
          oeis_([&] {
              oeis::ClientOptions o;
              o.offline = cfg.offline;
              if (!cfg.oeis_base_url.empty()) o.base_url = cfg.oeis_base_url;
              o.cache_dir = cfg.oeis_cache_dir;
              return o;
          }()) {}

    Report run() {
        Report rep;
        rep.digits = cfg_.digits;
        rep.offline = cfg_.offline;
        rep.threads = cfg_.threads;
        for (SuiteId s : cfg_.suites) rep.suites.push_back(run_one(s, rep));
        rep.cache_hits = cache_.hits();
        rep.cache_misses = cache_.misses();
        return rep;
    }

private:
    RunConfig cfg_;
    IntegralCache cache_;
    oeis::Client oeis_;

    PrecisionContext ctx() const { return PrecisionContext(cfg_.digits); }

    Real tol_closed() const {
        long e = std::min<long>(40, static_cast<long>(cfg_.digits) - 20);
        return Real::pow10(-e);
    }

    std::pair<unsigned, unsigned> n_range(unsigned lo, unsigned hi) const {
        return cfg_.n_range ? *cfg_.n_range : std::make_pair(lo, hi);
    }
    std::pair<unsigned, unsigned> m_range(unsigned lo, unsigned hi) const {
        return cfg_.m_range ? *cfg_.m_range : std::make_pair(lo, hi);
    }
    std::vector<Rat> k_set(std::vector<Rat> dflt) const {
        return cfg_.k_set.empty() ? dflt : cfg_.k_set;
    }

    // cached double integral with the precision-escalation policy: the
    // error bound must be below 1e-45 before recognition sees the value.
    BigReal integral_J(unsigned n, const ExactLimit& upper) {
        std::string key = "J|n=" + std::to_string(n) + "|upper=" + upper.str();
        if (auto hit = cache_.get(key, cfg_.digits)) return *hit;
        PrecisionContext c = ctx();
        BigReal v = realfield::double_integral_numeric(n, upper.value(c.bits()), c);
        if (!(v.error_bound < Real::pow10(-45))) {
            c = c.escalated();
            v = realfield::double_integral_numeric(n, upper.value(c.bits()), c);
        }
        cache_.put(key, v);
        return v;
    }

    using Task = std::function<CaseData()>;

    std::vector<CaseData> run_tasks(std::vector<Task> tasks) {
        std::vector<CaseData> out(tasks.size());
        auto worker_body = [&](CaseData& slot, Task& task) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                slot = task();
            } catch (const QuadratureFailure& e) {
                slot.r.status = CaseStatus::quadrature_failure;
                slot.r.note = e.what();
            } catch (const RecognitionError& e) {
                slot.r.status = CaseStatus::recognition_failure;
                slot.r.note = e.what();
            } catch (const std::exception& e) {
                slot.r.status = CaseStatus::fail;
                slot.r.note = e.what();
            }
            slot.r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            if (slot.r.digits == 0) slot.r.digits = cfg_.digits;
        };
        if (cfg_.threads <= 1) {
            for (size_t i = 0; i < tasks.size(); ++i) worker_body(out[i], tasks[i]);
        } else {
            std::atomic<size_t> next{0};
            auto pool_fn = [&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    worker_body(out[i], tasks[i]);
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < cfg_.threads; ++t) pool.emplace_back(pool_fn);
            for (auto& t : pool) t.join();
        }
        return out;
    }

    static void finish(SuiteReport& sr, std::vector<CaseData> data) {
        for (auto& d : data) {
            if (d.r.status == CaseStatus::pass) ++sr.pass;
            else {
                ++sr.fail;
                ++sr.failures_by_kind[to_string(d.r.status)];
            }
            sr.cases.push_back(std::move(d.r));
        }
    }

    // offset search per the sequence-alignment policy: unique shift in
    // [-3, 3] matching all (>= 5) observed cases.
    static std::optional<long> resolve_offset(
        const std::vector<std::pair<long, Int>>& observed,
        const std::function<std::optional<Int>(long)>& predict) {
        if (observed.size() < 5) return std::nullopt;
        std::vector<long> good;
        for (long s = -3; s <= 3; ++s) {
            bool all = true;
            for (const auto& [m, v] : observed) {
                auto p = predict(m + s);
                if (!p || *p != v) {
                    all = false;
                    break;
                }
            }
            if (all) good.push_back(s);
        }
        if (good.size() == 1) return good.front();
        return std::nullopt;
    }

    SuiteReport run_one(SuiteId id, Report& rep);

    SuiteReport suite_lemma1();
    SuiteReport suite_lemma2();
    SuiteReport suite_lemma3();
    SuiteReport suite_theorem1();
    SuiteReport suite_theorem2();
    SuiteReport suite_conj1(Report& rep);
    SuiteReport suite_conj2(Report& rep);
    SuiteReport suite_conj3(Report& rep);
    SuiteReport suite_conj4();
    SuiteReport suite_conj_factored(SuiteId id, Report& rep);  // conj5/6/7
    SuiteReport suite_conj8(Report& rep);
    SuiteReport suite_conj9(Report& rep);
    SuiteReport suite_conj10(Report& rep);
    SuiteReport suite_prop(SuiteId id, Report& rep);
    SuiteReport suite_series();
};

// --- closed-form suites ----------------------------------------------------

SuiteReport Runner::suite_lemma1() {
    SuiteReport sr;
    sr.suite = SuiteId::lemma1;
    auto [lo, hi] = n_range(0, 20);
    std::vector<Task> tasks;
    for (unsigned n = lo; n <= hi; ++n) {
        tasks.push_back([this, n] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "lemma1/n=" + std::to_string(n);
            d.r.params = {{"n", std::to_string(n)}, {"k", "2"}};
            auto numeric = realfield::inner_integral_numeric(n, Real::of(2L, c.bits()), c);
            auto closed = closedform::inner_integral_closed(n, Rat(2), c);
            d.r.computed = numeric.value.str(c.digits);
            std::ostringstream form;
            if (n % 2 == 1) form << "0";
            else
                form << "pi (-" << closed.y.get_num().get_str() << " + "
                     << closed.z.get_num().get_str() << " sqrt(2/3))";
            d.r.recognized = form.str();
            d.r.expected = form.str();
            Real res = abs(numeric.value - closed.value.value);
            d.r.residual = res.str(5);
            d.r.status = res <= tol_closed() ? CaseStatus::pass : CaseStatus::fail;
            return d;
        });
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

SuiteReport Runner::suite_lemma2() {
    SuiteReport sr;
    sr.suite = SuiteId::lemma2;
    std::vector<Task> tasks;
    for (const Rat& k : k_set({Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(7, 3)})) {
        std::string ks = Rat(k).get_str();
        tasks.push_back([this, k, ks] {
            // base case P(0,k): the elementary display 2 sqrt(1+1/k) pi/(1+k)
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "lemma2/P0/k=" + ks;
            d.r.params = {{"n", "0"}, {"k", ks}};
            Real kk = Real::of(k, c.bits());
            auto numeric = realfield::inner_integral_numeric(0, kk, c);
            Real expected = 2 * sqrt(1 + 1 / kk) * Real::pi(c.bits()) / (1 + kk);
            d.r.computed = numeric.value.str(c.digits);
            d.r.recognized = "2 sqrt(1 + 1/k) pi / (1 + k)";
            d.r.expected = d.r.recognized;
            Real res = abs(numeric.value - expected);
            d.r.residual = res.str(5);
            d.r.status = res <= tol_closed() ? CaseStatus::pass : CaseStatus::fail;
            return d;
        });
        tasks.push_back([this, k, ks] {
            // base case P(1,k): reduced value pi(-4 + (2k+1) 2/sqrt(k(k+1)))
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "lemma2/P1/k=" + ks;
            d.r.params = {{"n", "2"}, {"k", ks}};
            Real kk = Real::of(k, c.bits());
            auto numeric = realfield::inner_integral_numeric(2, kk, c);
            Real expected =
                Real::pi(c.bits()) * (-4 + (2 * kk + 1) * 2 / sqrt(kk * (kk + 1)));
            d.r.computed = numeric.value.str(c.digits);
            d.r.recognized = "pi (-4 + (2k+1) 2/sqrt(k(k+1)))";
            d.r.expected = d.r.recognized;
            Real res = abs(numeric.value - expected);
            d.r.residual = res.str(5);
            d.r.status = res <= tol_closed() ? CaseStatus::pass : CaseStatus::fail;
            return d;
        });
        tasks.push_back([this, k, ks] {
            // T_k is read as the k-th triangular number: sqrt(2/T_k) must
            // equal 2/sqrt(k(k+1))
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "lemma2/Tk/k=" + ks;
            d.r.params = {{"k", ks}};
            Real kk = Real::of(k, c.bits());
            Real lhs = sqrt(2 / (kk * (kk + 1) / 2));
            Real rhs = 2 / sqrt(kk * (kk + 1));
            Real res = abs(lhs - rhs);
            d.r.computed = lhs.str(c.digits);
            d.r.recognized = "sqrt(2/T_k)";
            d.r.expected = "2/sqrt(k(k+1))";
            d.r.residual = res.str(5);
            d.r.status =
                res <= Real::pow10(-static_cast<long>(c.digits) + 10) ? CaseStatus::pass
                                                                      : CaseStatus::fail;
            return d;
        });
        auto [nlo, nhi] = n_range(1, 21);
        for (unsigned n = nlo % 2 == 1 ? nlo : nlo + 1; n <= nhi; n += 2) {
            tasks.push_back([this, k, ks, n] {
                PrecisionContext c = ctx();
                CaseData d;
                d.r.id = "lemma2/odd/n=" + std::to_string(n) + "/k=" + ks;
                d.r.params = {{"n", std::to_string(n)}, {"k", ks}};
                auto numeric = realfield::inner_integral_numeric(n, Real::of(k, c.bits()), c);
                d.r.computed = numeric.value.str(c.digits);
                d.r.recognized = "0";
                d.r.expected = "0";
                Real res = abs(numeric.value);
                d.r.residual = res.str(5);
                d.r.status = res <= max(tol_closed(), 10 * numeric.error_bound)
                                 ? CaseStatus::pass
                                 : CaseStatus::fail;
                return d;
            });
        }
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

SuiteReport Runner::suite_lemma3() {
    SuiteReport sr;
    sr.suite = SuiteId::lemma3;
    std::vector<Rat> ks;
    for (long k = 1; k <= 8; ++k) ks.emplace_back(k);
    ks.emplace_back(7, 3);
    ks.emplace_back(1, 2);
    auto [nlo, nhi] = n_range(0, 40);
    std::vector<Task> tasks;
    for (const Rat& k : k_set(ks)) {
        std::string kstr = Rat(k).get_str();
        tasks.push_back([this, k, kstr, nlo, nhi] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "lemma3/k=" + kstr;
            d.r.params = {{"k", kstr},
                          {"n_max", std::to_string(nhi)}};
            Real worst = Real::of(0L, c.bits());
            for (unsigned n = nlo; n <= nhi; ++n) {
                auto [y, z] = closedform::yz_closed(n, Real::of(k, c.bits()), c);
                Real ye = Real::of(numbers::y_seq(n, k), y.value.prec());
                Real ze = Real::of(numbers::z_seq(n, k), z.value.prec());
                worst = max(worst, abs(y.value - ye));
                worst = max(worst, abs(z.value - ze));
            }
            d.r.computed = worst.str(5);
            d.r.recognized = "binet/cosh closed forms";
            d.r.expected = "recurrence values";
            d.r.residual = worst.str(5);
            d.r.status = worst <= Real::pow10(-40) ? CaseStatus::pass : CaseStatus::fail;
            return d;
        });
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

SuiteReport Runner::suite_theorem1() {
    SuiteReport sr;
    sr.suite = SuiteId::theorem1;
    auto [lo, hi] = n_range(0, 12);
    std::vector<Task> tasks;
    for (unsigned n = lo; n <= hi; ++n) {
        tasks.push_back([this, n] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "theorem1/n=" + std::to_string(n);
            d.r.params = {{"n", std::to_string(n)}};
            Real residual;
            Int got = closedform::kekule_from_integral(n, c, &residual);
            Int expect = numbers::kekule_c(n);
            d.r.computed = got.get_str();
            d.r.recognized = got.get_str();
            d.r.expected = expect.get_str();
            d.r.residual = residual.str(5);
            d.r.status = (got == expect && residual < Real::pow10(-30)) ? CaseStatus::pass
                                                                        : CaseStatus::fail;
            return d;
        });
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

SuiteReport Runner::suite_theorem2() {
    SuiteReport sr;
    sr.suite = SuiteId::theorem2;
    auto [nlo, nhi] = n_range(0, 21);
    std::vector<Task> tasks;
    for (const Rat& k : k_set({Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(4), Rat(7, 3)})) {
        std::string ks = Rat(k).get_str();
        for (unsigned n = nlo; n <= nhi; ++n) {
            if (n % 2 == 1 && n > 21) continue;
            if (n % 2 == 0 && n > 20 && !cfg_.n_range) continue;
            tasks.push_back([this, k, ks, n] {
                PrecisionContext c = ctx();
                CaseData d;
                d.r.id = "theorem2/n=" + std::to_string(n) + "/k=" + ks;
                d.r.params = {{"n", std::to_string(n)}, {"k", ks}};
                auto numeric = realfield::inner_integral_numeric(n, Real::of(k, c.bits()), c);
                auto closed = closedform::inner_integral_closed(n, k, c);
                d.r.computed = numeric.value.str(c.digits);
                d.r.recognized = "((-1)^n+1)/2 pi (-y + z 2/sqrt(k(k+1)))";
                d.r.expected = d.r.recognized;
                Real res = abs(numeric.value - closed.value.value);
                d.r.residual = res.str(5);
                d.r.status = res <= tol_closed() ? CaseStatus::pass : CaseStatus::fail;
                return d;
            });
        }
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

// --- conjecture suites -----------------------------------------------------

SuiteReport Runner::suite_conj1(Report& rep) {
    SuiteReport sr;
    sr.suite = SuiteId::conj1;
    auto [lo, hi] = n_range(2, 18);
    std::vector<Task> tasks;
    for (unsigned n = lo + lo % 2; n <= hi; n += 2) {
        tasks.push_back([this, n] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj1/n=" + std::to_string(n);
            d.r.params = {{"n", std::to_string(n)}, {"upper", "1"}};
            BigReal J = integral_J(n, ExactLimit{Rat(1), false});
            long ipow = (n / 2) % 2 == 0 ? 1 : -1;  // i^n for even n
            Rat factor = Rat(-5 + ipow) * Rat(2 + ipow) * Rat(n, 48);
            BigReal f = mul_exact(J, Real::of(factor, J.value.prec()));
            d.r.computed = f.value.str(c.digits);

            auto raw = recognition::recognize_surd_pi(f, {Int(2)}, c);
            auto got = recognition::make_surd_form(raw);
            d.r.recognized = recognition::to_string(got);

            unsigned j = n / 2;
            recognition::SurdForm pred;
            if (j % 2 == 1) {
                Int A = numbers::convergents_sqrt(2, j).numerator;
                Int P = numbers::pell(j);
                pred = recognition::SurdForm{Rat(A), -A, P, Int(2)};
            } else {
                Int A = numbers::convergents_sqrt(2, j).numerator;
                Int P = numbers::pell(j);
                pred = recognition::SurdForm{Rat(2) * Rat(P), -2 * P, A, Int(2)};
            }
            d.r.expected = recognition::to_string(pred);
            bool plus = got.a == pred.a && got.b == pred.b && got.c == pred.c && got.d == pred.d;
            bool minus = got.a == pred.a && got.b == -pred.b && got.c == -pred.c && got.d == pred.d;
            d.r.status = (plus || minus) ? CaseStatus::pass : CaseStatus::fail;
            d.r.note = plus ? "sign=+1" : (minus ? "sign=-1 (matches the printed f-table)" : "");
            d.seq1 = Int(plus ? 1 : (minus ? -1 : 0));
            Real res = abs(recognition::synthesize(got, f.value.prec()) - f.value);
            d.r.residual = res.str(5);
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    bool all_minus = !data.empty();
    for (const auto& d : data) all_minus = all_minus && d.seq1 && *d.seq1 == -1;
    if (all_minus)
        rep.offset_ledger.push_back(
            {"conj1", "sign", -1,
             "f(n) equals the negative of the conjectured right-hand side, matching the "
             "printed f-table rather than the conjecture statement"});
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_conj2(Report& rep) {
    SuiteReport sr;
    sr.suite = SuiteId::conj2;
    auto [lo, hi] = m_range(1, 7);
    std::vector<Task> tasks;
    for (unsigned m = lo; m <= hi; ++m) {
        tasks.push_back([this, m] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj2/m=" + std::to_string(m);
            d.r.params = {{"n", "4"}, {"m", std::to_string(m)}};
            BigReal J = integral_J(4, ExactLimit{Rat(m), false});
            d.r.computed = J.value.str(c.digits);
            Int dm = numbers::a083481(m);
            auto raw = recognition::recognize_surd_pi(J, {dm}, c);
            auto got = recognition::make_surd_form(raw);
            d.r.recognized = recognition::to_string(got);
            d.r.expected = m <= 7 ? kConj2Table[m - 1] : d.r.recognized;
            d.seq1 = got.d;
            bool ok = d.r.recognized == d.r.expected && got.d == dm;
            d.r.status = ok ? CaseStatus::pass : CaseStatus::fail;
            Real res = abs(recognition::synthesize(got, J.value.prec()) - J.value);
            d.r.residual = res.str(5);
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    // d_m follows A083481 with no shift
    std::vector<std::pair<long, Int>> observed;
    for (auto& d : data)
        if (d.seq1) observed.emplace_back(std::stol(d.r.params[1].second), *d.seq1);
    auto off = resolve_offset(observed, [](long m) -> std::optional<Int> {
        if (m < 1) return std::nullopt;
        return numbers::a083481(static_cast<unsigned>(m));
    });
    if (off)
        rep.offset_ledger.push_back({"conj2", "A083481", *off, "d_m = core(m(m+1))"});
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_conj3(Report& rep) {
    SuiteReport sr;
    sr.suite = SuiteId::conj3;
    auto [lo, hi] = n_range(2, 18);
    std::vector<Task> tasks;
    for (unsigned n = lo; n <= hi; ++n) {
        if (n % 4 != 2) continue;
        tasks.push_back([this, n] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj3/n=" + std::to_string(n);
            d.r.params = {{"n", std::to_string(n)}, {"upper", "1/2"}};
            BigReal J = integral_J(n, ExactLimit{Rat(1, 2), false});
            BigReal v = mul_exact(J, Real::of(Rat(n, 4), J.value.prec()));
            d.r.computed = v.value.str(c.digits);
            auto raw = recognition::recognize_surd_pi(v, {Int(3)}, c);
            auto got = recognition::make_surd_form(raw);
            d.r.recognized = recognition::to_string(got);
            unsigned j = n / 2;
            auto conv = numbers::convergents_sqrt(3, j);
            recognition::SurdForm pred{Rat(conv.numerator), -conv.numerator, conv.denominator,
                                       Int(3)};
            d.r.expected = recognition::to_string(pred);
            bool plus = got.a == pred.a && got.b == pred.b && got.c == pred.c;
            bool minus = got.a == pred.a && got.b == -pred.b && got.c == -pred.c;
            d.r.status = (plus || minus) ? CaseStatus::pass : CaseStatus::fail;
            d.r.note = plus ? "sign=+1" : (minus ? "sign=-1" : "");
            d.seq1 = Int(plus ? 1 : (minus ? -1 : 0));
            Real res = abs(recognition::synthesize(got, v.value.prec()) - v.value);
            d.r.residual = res.str(5);
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    if (!data.empty()) {
        bool all_plus = true;
        for (const auto& d : data) all_plus = all_plus && d.seq1 && *d.seq1 == 1;
        if (all_plus)
            rep.offset_ledger.push_back(
                {"conj3", "sign", 1, "statement sign verified as printed"});
    }
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_conj4() {
    SuiteReport sr;
    sr.suite = SuiteId::conj4;
    auto [lo, hi] = n_range(2, 12);
    std::vector<Task> tasks;
    for (unsigned n = lo + lo % 2; n <= hi; n += 2) {
        tasks.push_back([this, n] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj4/n=" + std::to_string(n);
            d.r.params = {{"n", std::to_string(n)}, {"upper", "1/3"}};
            BigReal J = integral_J(n, ExactLimit{Rat(1, 3), false});
            BigReal v = mul_exact(J, Real::of(static_cast<long>(n), J.value.prec()));
            d.r.computed = v.value.str(c.digits);
            Int p3;
            mpz_ui_pow_ui(p3.get_mpz_t(), 3, n / 2);
            Rat coeff = Rat(4 * p3 - 4, p3);
            coeff.canonicalize();
            Real expect = Real::of(coeff, v.value.prec()) * Real::pi(v.value.prec());
            Real res = abs(v.value - expect);
            d.r.residual = res.str(5);
            auto raw = recognition::recognize_surd_pi(v, {Int(1)}, c);
            auto got = recognition::make_surd_form(raw);
            d.r.recognized = recognition::to_string(got);
            recognition::SurdForm pred =
                recognition::make_surd_form(recognition::RawSurdPi{coeff, Rat(0), Int(1)});
            d.r.expected = recognition::to_string(pred);
            d.r.status = (res < Real::pow10(-35) && d.r.recognized == d.r.expected)
                             ? CaseStatus::pass
                             : CaseStatus::fail;
            return d;
        });
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

// conj5 (square-root coefficient vs A000188), conj6 (negative coefficient vs
// A019554), conj7 (same over upper limit (m+1)/m).
SuiteReport Runner::suite_conj_factored(SuiteId id, Report& rep) {
    SuiteReport sr;
    sr.suite = id;
    auto [lo, hi] = m_range(1, 16);
    const bool over_ratio = id == SuiteId::conj7;
    std::vector<Task> tasks;
    for (unsigned m = lo; m <= hi; ++m) {
        tasks.push_back([this, id, m, over_ratio] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = to_string(id) + "/m=" + std::to_string(m);
            ExactLimit upper =
                over_ratio ? ExactLimit{Rat(m + 1, m), false} : ExactLimit{Rat(m), false};
            d.r.params = {{"n", "2"}, {"m", std::to_string(m)}, {"upper", upper.str()}};
            BigReal J = integral_J(2, upper);
            d.r.computed = J.value.str(c.digits);
            Int u_num = over_ratio ? Int(m + 1) * Int(2 * m + 1) : Int(m) * Int(m + 1);
            Int hint = numbers::squarefree_decompose(u_num).d;
            auto raw = recognition::recognize_surd_pi(J, {hint}, c);
            auto got = recognition::make_surd_form(raw);
            d.r.recognized = recognition::to_string(got);
            if (id == SuiteId::conj5) {
                d.r.expected = m <= 16 ? kConj5Table[m - 1] : d.r.recognized;
                d.seq1 = got.c;
                d.r.status = d.r.recognized == d.r.expected ? CaseStatus::pass
                                                            : CaseStatus::fail;
            } else {
                d.r.expected = d.r.recognized;
                d.seq1 = abs(got.b);
                d.r.status = CaseStatus::pass;  // sequence check follows
            }
            Real res = abs(recognition::synthesize(got, J.value.prec()) - J.value);
            d.r.residual = res.str(5);
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));

    std::vector<std::pair<long, Int>> observed;
    for (auto& d : data)
        if (d.seq1) observed.emplace_back(std::stol(d.r.params[1].second), *d.seq1);

    const bool coeff_suite = id == SuiteId::conj5;
    auto predict = [&](long mm) -> std::optional<Int> {
        if (mm < 1) return std::nullopt;
        return coeff_suite ? numbers::a000188(mm) : numbers::a019554(mm);
    };
    auto off = resolve_offset(observed, predict);
    long documented = coeff_suite ? 1 : (id == SuiteId::conj6 ? 0 : 1);
    long use = off.value_or(documented);
    std::string seq = coeff_suite ? "A000188" : "A019554";
    for (auto& d : data) {
        if (!d.seq1) continue;
        long m = std::stol(d.r.params[1].second);
        auto p = predict(m + use);
        bool ok = p && *p == *d.seq1;
        d.r.offset = use;
        if (!ok) d.r.status = CaseStatus::fail;
        else if (d.r.note.empty())
            d.r.note = seq + "(" + std::to_string(m + use) + ") matches";
    }
    rep.offset_ledger.push_back(
        {to_string(id), seq, use,
         off ? "resolved by search over shifts -3..3"
             : "documented offset (range too short for a 5-case search)"});

    // cross-check the collected terms against the bundled b-file
    if (observed.size() >= 5) {
        std::vector<Int> cand;
        for (auto& [m, v] : observed) cand.push_back(v);
        auto pm = oeis_.compare_prefix(seq, cand, 6);
        if (pm.kind == oeis::PrefixMatch::Kind::unique)
            rep.offset_ledger.push_back({to_string(id), seq + "/bfile", pm.offset,
                                         "compare_prefix alignment of the recognized terms"});
    }
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_conj8(Report& rep) {
    SuiteReport sr;
    sr.suite = SuiteId::conj8;
    auto [lo, hi] = m_range(1, 20);
    std::vector<Task> tasks;
    for (unsigned m = lo; m <= hi; ++m) {
        tasks.push_back([this, m] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj8/m=" + std::to_string(m);
            ExactLimit upper{Rat(m + 1, m), false};
            d.r.params = {{"n", "0"}, {"m", std::to_string(m)}, {"upper", upper.str()}};
            BigReal J = integral_J(0, upper);
            d.r.computed = J.value.str(c.digits);
            auto got = recognition::recognize_log_surd(J, c);
            d.r.recognized = recognition::to_string(got);
            d.r.expected = (m >= 4 && m <= 20) ? kConj8Table[m - 4] : d.r.recognized;
            Int a_pred = numbers::a026741(m);
            Int b_pred = numbers::a026741(3 * static_cast<long>(m) + 2);
            bool ok = got.a == a_pred && got.b == b_pred &&
                      d.r.recognized == d.r.expected;
            d.r.status = ok ? CaseStatus::pass : CaseStatus::fail;
            d.seq1 = got.b;
            d.seq2 = got.a * got.a;
            d.r.note = "c=" + got.c.get_str() + ", d=" + got.d.get_str() +
                       " (left open by the statement)";
            Real res = abs(recognition::synthesize(got, J.value.prec()) - J.value);
            d.r.residual = res.str(5);
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    if (lo <= 4 && hi >= 8)
        rep.offset_ledger.push_back({"conj8", "appendix", 3,
                                     "appendix rows align to m = row + 3"});
    std::vector<Int> bs, a2s;
    for (auto& d : data) {
        if (d.seq1) bs.push_back(*d.seq1);
        if (d.seq2) a2s.push_back(*d.seq2);
    }
    if (bs.size() >= 5) {
        auto pm = oeis_.compare_prefix("A165367", bs, 6);
        if (pm.kind == oeis::PrefixMatch::Kind::unique)
            rep.offset_ledger.push_back(
                {"conj8", "A165367/bfile", pm.offset, "b_m terms align to the b-file"});
        auto pm2 = oeis_.compare_prefix("A168077", a2s, 6);
        if (pm2.kind == oeis::PrefixMatch::Kind::unique)
            rep.offset_ledger.push_back(
                {"conj8", "A168077/bfile", pm2.offset, "a_m^2 terms align to the b-file"});
    }
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_conj9(Report& rep) {
    SuiteReport sr;
    sr.suite = SuiteId::conj9;
    auto [lo, hi] = m_range(1, 20);
    std::vector<Task> tasks;
    for (unsigned m = lo; m <= hi; ++m) {
        tasks.push_back([this, m] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj9/m=" + std::to_string(m);
            ExactLimit upper{Rat(m + 1, m), false};
            d.r.params = {{"n", "4"}, {"m", std::to_string(m)}, {"upper", upper.str()}};
            BigReal J = integral_J(4, upper);
            d.r.computed = J.value.str(c.digits);
            Int hint = numbers::squarefree_decompose(Int(m + 1) * Int(2 * m + 1)).d;
            auto raw = recognition::recognize_surd_pi(J, {hint}, c);
            auto got = recognition::make_surd_form(raw);
            d.r.recognized = recognition::to_string(got);
            d.r.expected = m <= 20 ? kConj9Table[m - 1] : d.r.recognized;
            Int c_pred = numbers::a026741(3 * static_cast<long>(m) + 2);  // A165367(m)
            bool ok = got.c == c_pred && d.r.recognized == d.r.expected;
            d.r.status = ok ? CaseStatus::pass : CaseStatus::fail;
            d.seq1 = got.c;
            Real res = abs(recognition::synthesize(got, J.value.prec()) - J.value);
            d.r.residual = res.str(5);
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    std::vector<Int> cs;
    for (auto& d : data)
        if (d.seq1) cs.push_back(*d.seq1);
    if (cs.size() >= 5) {
        auto pm = oeis_.compare_prefix("A165367", cs, 6);
        if (pm.kind == oeis::PrefixMatch::Kind::unique)
            rep.offset_ledger.push_back(
                {"conj9", "A165367/bfile", pm.offset, "c_m terms align to the b-file"});
    }
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_conj10(Report& rep) {
    SuiteReport sr;
    sr.suite = SuiteId::conj10;
    auto [lo, hi] = m_range(1, 20);
    std::vector<Task> tasks;
    for (unsigned m = lo; m <= hi; ++m) {
        tasks.push_back([this, m] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = "conj10/m=" + std::to_string(m);
            ExactLimit upper{Rat(m), true};
            d.r.params = {{"n", "0"}, {"m", std::to_string(m)}, {"upper", upper.str()}};
            BigReal J = integral_J(0, upper);
            d.r.computed = J.value.str(c.digits);
            auto [a, b] = recognition::recognize_conj10(J, m, c);
            d.r.recognized = recognition::conj10_string(m, a, b);
            Int a_pred = 2 * numbers::a000188(m);
            Int b_pred = numbers::a007913(m);
            d.r.expected = recognition::conj10_string(m, a_pred, b_pred);
            d.r.status = (a == a_pred && b == b_pred) ? CaseStatus::pass : CaseStatus::fail;
            d.seq1 = b;
            // round-trip residual of the recognized nested radical
            Real prec_pi = Real::pi(J.value.prec());
            Real s2 = sqrt(Real::of(2L, J.value.prec()));
            Real inner = 1 + s2 * (2 * static_cast<long>(m)) +
                         Real::of(a, J.value.prec()) *
                             sqrt(Real::of(b, J.value.prec()) *
                                  (2 * static_cast<long>(m) + s2));
            Real res = abs(2 * prec_pi * log(inner) - J.value);
            d.r.residual = res.str(5);
            if (!(res <= 100 * J.error_bound + Real::pow10(-40)))
                d.r.status = CaseStatus::fail;
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    std::vector<Int> bs;
    for (auto& d : data)
        if (d.seq1) bs.push_back(*d.seq1);
    if (bs.size() >= 5) {
        auto pm = oeis_.compare_prefix("A007913", bs, 6);
        if (pm.kind == oeis::PrefixMatch::Kind::unique)
            rep.offset_ledger.push_back(
                {"conj10", "A007913/bfile", pm.offset, "b_m terms align to the b-file"});
    }
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_prop(SuiteId id, Report& rep) {
    SuiteReport sr;
    sr.suite = id;
    auto [lo, hi] = n_range(1, 16);
    TrigMode mode = id == SuiteId::prop1 ? TrigMode::cos : TrigMode::sin;
    std::vector<Task> tasks;
    for (unsigned n = lo; n <= hi; ++n) {
        tasks.push_back([this, id, mode, n] {
            PrecisionContext c = ctx();
            CaseData d;
            d.r.id = to_string(id) + "/n=" + std::to_string(n);
            d.r.params = {{"n", std::to_string(n)}};
            auto closed = closedform::prop_fourier_coeff(mode, n, c);
            auto quad = realfield::complex_log_integral(mode, n, c);
            d.r.computed = quad.re.value.str(30) + " + " + quad.im.value.str(30) + " i";
            d.r.recognized = closed.re.value.str(30) + " + " + closed.im.value.str(30) + " i";
            d.r.expected = d.r.recognized;
            Real res = max(abs(closed.re.value - quad.re.value),
                           abs(closed.im.value - quad.im.value));
            d.r.residual = res.str(5);
            d.r.status = res < Real::pow10(-25) ? CaseStatus::pass : CaseStatus::fail;
            if (id == SuiteId::prop1 && n % 4 == 0)
                d.r.note = "real term evaluated with the corrected sign; the printed "
                           "formula gives its negative";
            return d;
        });
    }
    auto data = run_tasks(std::move(tasks));
    if (id == SuiteId::prop1 && hi >= 4)
        rep.offset_ledger.push_back(
            {"prop1", "sign", -1,
             "printed cosine coefficient has the wrong sign at n = 0 mod 4; quadrature "
             "fixes it"});
    finish(sr, std::move(data));
    return sr;
}

SuiteReport Runner::suite_series() {
    SuiteReport sr;
    sr.suite = SuiteId::series;
    std::vector<Task> tasks;
    const unsigned long N = cfg_.series_terms;
    tasks.push_back([this, N] {
        PrecisionContext c = ctx();
        CaseData d;
        d.r.id = "series/sqrt2";
        d.r.params = {{"N", std::to_string(N)}};
        auto s = closedform::series_partial(SeriesKind::sqrt2, N, c);
        Real target = -Real::pi(c.bits()) / sqrt(Real::of(2L, c.bits()));
        d.r.computed = s.value.str(c.digits);
        d.r.recognized = "-pi/sqrt(2)";
        d.r.expected = "-pi/sqrt(2)";
        Real res = abs(s.value - target);
        d.r.residual = res.str(5);
        d.r.status = res <= Real::of(10L, 64) / static_cast<long>(N) ? CaseStatus::pass
                                                                     : CaseStatus::fail;
        return d;
    });
    tasks.push_back([this, N] {
        PrecisionContext c = ctx();
        CaseData d;
        d.r.id = "series/ln2";
        d.r.params = {{"N", std::to_string(N)}};
        auto s = closedform::series_partial(SeriesKind::ln2, N, c);
        Real target = -log(Real::of(2L, c.bits())) / 4;
        d.r.computed = s.value.str(c.digits);
        d.r.recognized = "-ln(2)/4";
        d.r.expected = "-ln(2)/4";
        Real res = abs(s.value - target);
        d.r.residual = res.str(5);
        d.r.status = res <= Real::of(10L, 64) / static_cast<long>(N) ? CaseStatus::pass
                                                                     : CaseStatus::fail;
        return d;
    });
    const char* points[] = {"0", "pi/2", "pi"};
    for (int i = 0; i < 3; ++i) {
        tasks.push_back([this, i, points] {
            PrecisionContext c = ctx();
            const unsigned long N = cfg_.fourier_terms;
            CaseData d;
            d.r.id = std::string("series/fourier/x=") + points[i];
            d.r.params = {{"x", points[i]}, {"N", std::to_string(N)}};
            Real pi = Real::pi(c.bits());
            Real x = i == 0 ? Real::of(0L, c.bits()) : (i == 1 ? pi / 2 : pi);
            auto f = closedform::fourier_series_eval(x, N, c);
            // principal-branch target: ln(1) = 0 at x=0, pi/2; ln(-1) = i pi
            Real ere = Real::of(0L, c.bits());
            Real eim = i == 2 ? pi : Real::of(0L, c.bits());
            d.r.computed = f.re.value.str(25) + " + " + f.im.value.str(25) + " i";
            d.r.recognized = i == 2 ? "i pi" : "0";
            d.r.expected = d.r.recognized;
            Real res = max(abs(f.re.value - ere), abs(f.im.value - eim));
            d.r.residual = res.str(5);
            d.r.status = res <= Real::of(10L, 64) / static_cast<long>(N) ? CaseStatus::pass
                                                                         : CaseStatus::fail;
            return d;
        });
    }
    finish(sr, run_tasks(std::move(tasks)));
    return sr;
}

SuiteReport Runner::run_one(SuiteId id, Report& rep) {
    switch (id) {
        case SuiteId::lemma1: return suite_lemma1();
        case SuiteId::lemma2: return suite_lemma2();
        case SuiteId::lemma3: return suite_lemma3();
        case SuiteId::theorem1: return suite_theorem1();
        case SuiteId::theorem2: return suite_theorem2();
        case SuiteId::conj1: return suite_conj1(rep);
        case SuiteId::conj2: return suite_conj2(rep);
        case SuiteId::conj3: return suite_conj3(rep);
        case SuiteId::conj4: return suite_conj4();
        case SuiteId::conj5:
        case SuiteId::conj6:
        case SuiteId::conj7: return suite_conj_factored(id, rep);
        case SuiteId::conj8: return suite_conj8(rep);
        case SuiteId::conj9: return suite_conj9(rep);
        case SuiteId::conj10: return suite_conj10(rep);
        case SuiteId::prop1:
        case SuiteId::prop2: return suite_prop(id, rep);
        case SuiteId::series: return suite_series();
    }
    return SuiteReport{id, {}, 0, 0, {}, {}};
}

}  // namespace

Report run_suite(const RunConfig& config) {
    Runner runner(config);
    return runner.run();
}

Report verify_closed_forms(unsigned n_max, const std::vector<Rat>& k_set,
                           const PrecisionContext& ctx) {
    if (n_max > 100) throw std::domain_error("verify_closed_forms: n_max <= 100 (desk scale)");
    RunConfig cfg;
    cfg.suites = {SuiteId::lemma1, SuiteId::lemma2, SuiteId::lemma3, SuiteId::theorem2};
    cfg.digits = ctx.digits;
    cfg.n_range = {0u, n_max};
    cfg.k_set = k_set;
    return run_suite(cfg);
}

Report verify_conjecture(SuiteId id, unsigned lo, unsigned hi, const PrecisionContext& ctx) {
    if (hi > 40) throw std::domain_error("verify_conjecture: ranges are desk-scale (<= 40)");
    RunConfig cfg;
    cfg.suites = {id};
    cfg.digits = ctx.digits;
    cfg.n_range = {lo, hi};
    cfg.m_range = {lo, hi};
    return run_suite(cfg);
}

}  // namespace quadsurd::harness
