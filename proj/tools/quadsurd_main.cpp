// quadsurd: compute the trigonometric integrals, recognize their surd
// constants, and run the verification suites from the command line.

#include "quadsurd/harness.hpp"
#include "quadsurd/integrals.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace quadsurd;
namespace hn = quadsurd::harness;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("QUADSURD_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "quadsurd";
    return std::filesystem::temp_directory_path() / "quadsurd";
}

std::string oeis_url_override() {
    if (const char* env = std::getenv("QUADSURD_OEIS_BASE_URL")) return env;
    return "";
}

struct Range {
    unsigned lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = static_cast<unsigned>(std::stoul(s));
    } else {
        r.lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
        r.hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    }
    if (r.hi < r.lo) throw std::invalid_argument("range upper bound below lower bound");
    return r;
}

Rat parse_rat(const std::string& s) {
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("exact rational expected (no decimals): " + s);
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

hn::ExactLimit parse_limit_or_zero(const std::string& s) {
    if (s == "0") return hn::ExactLimit{Rat(0), false};
    return hn::ExactLimit::parse(s);
}

void emit(const hn::Report& rep, bool as_json, const std::string& out_path) {
    std::string json = rep.to_json();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << json << "\n";
    }
    if (as_json) {
        std::cout << json << "\n";
        return;
    }
    for (const auto& s : rep.suites) {
        for (const auto& c : s.cases) {
            std::cout << c.id << ": " << c.computed;
            if (!c.recognized.empty() && c.recognized != c.computed)
                std::cout << "  =  " << c.recognized;
            if (c.status != hn::CaseStatus::pass || !c.note.empty())
                std::cout << "  [" << hn::to_string(c.status)
                          << (c.note.empty() ? "" : ": " + c.note) << "]";
            std::cout << "\n";
        }
        std::cout << (s.label.empty() ? hn::to_string(s.suite) : s.label) << ": " << s.pass
                  << " pass, " << s.fail << " fail\n";
    }
    for (const auto& o : rep.offset_ledger)
        std::cout << "offset " << o.suite << "/" << o.sequence << " = " << o.offset << " ("
                  << o.note << ")\n";
}

hn::Report one_case_report(const std::string& label, hn::CaseResult c, unsigned digits) {
    hn::Report rep;
    rep.digits = digits;
    hn::SuiteReport sr;
    sr.suite = hn::SuiteId::series;
    sr.label = label;
    if (c.status == hn::CaseStatus::pass) sr.pass = 1;
    else {
        sr.fail = 1;
        ++sr.failures_by_kind[hn::to_string(c.status)];
    }
    sr.cases.push_back(std::move(c));
    rep.suites.push_back(std::move(sr));
    return rep;
}

int run_seq(const std::string& kind, Range n, const Rat& k, long radicand, bool as_json,
            unsigned digits) {
    hn::Report rep;
    rep.digits = digits;
    hn::SuiteReport sr;
    sr.suite = hn::SuiteId::series;
    sr.label = "seq";
    for (unsigned i = n.lo; i <= n.hi; ++i) {
        std::string value;
        if (kind == "kekule") value = numbers::kekule_c(i).get_str();
        else if (kind == "companion") value = numbers::companion_d(i).get_str();
        else if (kind == "y") value = Rat(numbers::y_seq(i, k)).get_str();
        else if (kind == "z") value = Rat(numbers::z_seq(i, k)).get_str();
        else if (kind == "core") value = numbers::a007913(static_cast<long>(i)).get_str();
        else if (kind == "a000188") value = numbers::a000188(static_cast<long>(i)).get_str();
        else if (kind == "a019554") value = numbers::a019554(static_cast<long>(i)).get_str();
        else if (kind == "a083481") value = numbers::a083481(i).get_str();
        else if (kind == "pell") value = numbers::pell(i).get_str();
        else if (kind == "convergent") {
            auto c = numbers::convergents_sqrt(radicand, i);
            value = c.numerator.get_str() + "/" + c.denominator.get_str();
        } else {
            throw std::invalid_argument("unknown sequence '" + kind + "'");
        }
        hn::CaseResult c;
        c.id = "seq/" + kind + "/" + std::to_string(i);
        c.params = {{"n", std::to_string(i)}};
        c.computed = value;
        c.recognized = value;
        c.expected = value;
        c.status = hn::CaseStatus::pass;
        c.digits = digits;
        c.residual = "0";
        sr.cases.push_back(std::move(c));
        ++sr.pass;
    }
    rep.suites.push_back(std::move(sr));
    if (as_json) emit(rep, true, "");
    else
        for (const auto& c : rep.suites[0].cases) std::cout << c.computed << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision verification toolkit for Kekule-number integrals and "
                 "surd-recognition conjectures"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags like --digits may follow the subcommand

    unsigned digits = 60;
    app.add_option("--digits", digits, "working decimal digits (20..300)")
        ->check(CLI::Range(20u, 300u));

    auto* seq = app.add_subcommand("seq", "exact sequence values");
    std::string seq_kind;
    seq->add_option("kind", seq_kind,
                    "kekule|companion|y|z|core|a019554|a000188|a083481|convergent|pell")
        ->required();
    std::string seq_n = "0..10";
    seq->add_option("--n", seq_n, "index or range lo..hi");
    std::string seq_k = "2";
    seq->add_option("--k", seq_k, "rational parameter for y/z");
    long seq_radicand = 2;
    seq->add_option("--radicand", seq_radicand, "radicand for convergent");
    bool seq_json = false;
    seq->add_flag("--json", seq_json, "machine-readable output");

    auto* integral =
        app.add_subcommand("integral", "inner integral of cos(nx)/(k+sin^2 x) over [-pi,pi]");
    unsigned int_n = 0;
    integral->add_option("--n", int_n)->required();
    std::string int_k = "2";
    integral->add_option("--k", int_k, "rational k > 0");
    bool int_json = false;
    integral->add_flag("--json", int_json);

    auto* dbl = app.add_subcommand("double", "double integral over [lower,upper] x [-pi,pi]");
    unsigned dbl_n = 2;
    dbl->add_option("--n", dbl_n, "even cosine order")->required();
    std::string dbl_upper;
    dbl->add_option("--upper", dbl_upper, "exact token: 1, 5/4, 3*sqrt2")->required();
    std::string dbl_lower = "0";
    dbl->add_option("--lower", dbl_lower, "exact token, default 0");
    bool dbl_nested = false;
    dbl->add_flag("--nested", dbl_nested, "slow full-2d oracle mode");
    bool dbl_json = false;
    dbl->add_flag("--json", dbl_json);

    auto* rec = app.add_subcommand("recognize", "identify a decimal constant");
    std::string rec_value;
    rec->add_option("--value", rec_value, "decimal string or @file")->required();
    std::string rec_form = "surd";
    rec->add_option("--form", rec_form, "surd|logsurd|conj10")
        ->check(CLI::IsMember({"surd", "logsurd", "conj10"}));
    unsigned rec_m = 1;
    rec->add_option("--m", rec_m, "m parameter for the conj10 template");
    bool rec_json = false;
    rec->add_flag("--json", rec_json);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suite_names;
    verify->add_option("--suite", suite_names, "suite id or 'all'")->required();
    std::string v_n, v_m, v_k;
    verify->add_option("--n", v_n, "n range lo..hi");
    verify->add_option("--m", v_m, "m range lo..hi");
    verify->add_option("--k", v_k, "comma-separated rational k set");
    bool v_offline = false;
    verify->add_flag("--offline", v_offline, "forbid network access");
    std::string v_out;
    verify->add_option("--out", v_out, "write the JSON report here");
    bool v_json = false;
    verify->add_flag("--json", v_json);
    bool v_cache = false;
    verify->add_flag("--cache", v_cache, "cache integrals under the cache directory");
    unsigned v_threads = 1;
    verify->add_option("--threads", v_threads, "parallel case evaluation");
    unsigned long v_series = 100000;
    verify->add_option("--series-terms", v_series);

    auto* oeis_cmd = app.add_subcommand("oeis", "fetch sequence terms (b-file)");
    std::string oeis_id;
    oeis_cmd->add_option("--id", oeis_id)->required();
    unsigned oeis_terms = 10;
    oeis_cmd->add_option("--terms", oeis_terms);
    bool oeis_offline = false;
    oeis_cmd->add_flag("--offline", oeis_offline);
    bool oeis_json = false;
    oeis_cmd->add_flag("--json", oeis_json);

    auto* cache_cmd = app.add_subcommand("cache", "integral/b-file cache maintenance");
    std::string cache_verb;
    cache_cmd->add_option("verb", cache_verb, "stats|clear")
        ->required()
        ->check(CLI::IsMember({"stats", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        PrecisionContext ctx(digits);
        const auto cache_dir = default_cache_dir();

        if (seq->parsed())
            return run_seq(seq_kind, parse_range(seq_n), parse_rat(seq_k), seq_radicand,
                           seq_json, digits);

        if (integral->parsed()) {
            Rat k = parse_rat(int_k);
            if (sgn(k) <= 0) throw std::invalid_argument("k must be positive");
            auto closed = closedform::inner_integral_closed(int_n, k, ctx);
            auto numeric =
                realfield::inner_integral_numeric(int_n, Real::of(k, ctx.bits()), ctx);
            Real res = abs(closed.value.value - numeric.value);
            hn::CaseResult c;
            c.id = "integral/n=" + std::to_string(int_n) + "/k=" + int_k;
            c.params = {{"n", std::to_string(int_n)}, {"k", int_k}};
            c.computed = numeric.value.str(digits);
            c.recognized = closed.value.value.str(digits);
            c.expected = c.recognized;
            c.residual = res.str(5);
            c.digits = digits;
            c.status = res <= Real::pow10(-static_cast<long>(digits) + 20)
                           ? hn::CaseStatus::pass
                           : hn::CaseStatus::fail;
            bool pass = c.status == hn::CaseStatus::pass;
            emit(one_case_report("integral", std::move(c), digits), int_json, "");
            return pass ? kExitPass : kExitFail;
        }

        if (dbl->parsed()) {
            auto upper = hn::ExactLimit::parse(dbl_upper);
            auto lower = parse_limit_or_zero(dbl_lower);
            auto mode = dbl_nested ? realfield::NestedMode::full_2d
                                   : realfield::NestedMode::reduced_1d;
            BigReal v = realfield::double_integral_numeric(
                dbl_n, lower.value(ctx.bits()), upper.value(ctx.bits()), ctx, mode);
            std::string recognized;
            hn::CaseStatus status = hn::CaseStatus::pass;
            try {
                if (dbl_n == 0) {
                    recognized = recognition::to_string(recognition::recognize_log_surd(v, ctx));
                } else {
                    auto raw = recognition::recognize_surd_pi(v, {}, ctx);
                    recognized = recognition::to_string(recognition::make_surd_form(raw));
                }
            } catch (const recognition::RecognitionError& e) {
                recognized = std::string("(unrecognized: ") + e.what() + ")";
                status = hn::CaseStatus::recognition_failure;
            }
            hn::CaseResult c;
            c.id = "double/n=" + std::to_string(dbl_n) + "/upper=" + upper.str();
            c.params = {{"n", std::to_string(dbl_n)},
                        {"lower", lower.str()},
                        {"upper", upper.str()},
                        {"nested", dbl_nested ? "true" : "false"}};
            c.computed = v.value.str(digits);
            c.recognized = recognized;
            c.expected = recognized;
            c.residual = v.error_bound.str(5);
            c.digits = digits;
            c.status = status;
            emit(one_case_report("double", std::move(c), digits), dbl_json, "");
            return status == hn::CaseStatus::pass ? kExitPass : kExitComputation;
        }

        if (rec->parsed()) {
            std::string text = rec_value;
            if (!text.empty() && text[0] == '@') {
                std::ifstream in(text.substr(1));
                if (!in) throw std::runtime_error("cannot open " + text.substr(1));
                in >> text;
            }
            BigReal v;
            v.value = Real::of_decimal(text, ctx.bits());
            long sig = static_cast<long>(text.size()) - 2;  // rough significant digits
            v.error_bound = (abs(v.value) + 1) * Real::pow10(-std::min<long>(sig, digits));
            v.digits = digits;
            std::string recognized;
            if (rec_form == "surd") {
                auto raw = recognition::recognize_surd_pi(v, {}, ctx);
                recognized = recognition::to_string(recognition::make_surd_form(raw));
            } else if (rec_form == "logsurd") {
                recognized = recognition::to_string(recognition::recognize_log_surd(v, ctx));
            } else {
                auto [a, b] = recognition::recognize_conj10(v, rec_m, ctx);
                recognized = recognition::conj10_string(rec_m, a, b);
            }
            hn::CaseResult c;
            c.id = "recognize/" + rec_form;
            c.params = {{"form", rec_form}};
            c.computed = text;
            c.recognized = recognized;
            c.expected = recognized;
            c.residual = "0";
            c.digits = digits;
            c.status = hn::CaseStatus::pass;
            emit(one_case_report("recognize", std::move(c), digits), rec_json, "");
            return kExitPass;
        }

        if (verify->parsed()) {
            hn::RunConfig cfg;
            for (const auto& name : suite_names) {
                if (name == "all") {
                    cfg.suites = hn::all_suites();
                    break;
                }
                auto id = hn::suite_from_string(name);
                if (!id) throw std::invalid_argument("unknown suite '" + name + "'");
                cfg.suites.push_back(*id);
            }
            cfg.digits = digits;
            if (!v_n.empty()) {
                auto r = parse_range(v_n);
                cfg.n_range = {r.lo, r.hi};
            }
            if (!v_m.empty()) {
                auto r = parse_range(v_m);
                cfg.m_range = {r.lo, r.hi};
            }
            if (!v_k.empty()) {
                std::stringstream ss(v_k);
                std::string tok;
                while (std::getline(ss, tok, ',')) cfg.k_set.push_back(parse_rat(tok));
            }
            cfg.series_terms = v_series;
            cfg.offline = v_offline;
            cfg.threads = v_threads;
            if (v_cache) cfg.cache_file = cache_dir / "integrals.jsonl";
            cfg.oeis_cache_dir = cache_dir / "oeis";
            cfg.oeis_base_url = oeis_url_override();
            hn::Report rep = hn::run_suite(cfg);
            emit(rep, v_json, v_out);
            return rep.all_pass() ? kExitPass : kExitFail;
        }

        if (oeis_cmd->parsed()) {
            oeis::ClientOptions opts;
            opts.offline = oeis_offline;
            opts.cache_dir = cache_dir / "oeis";
            if (!oeis_url_override().empty()) opts.base_url = oeis_url_override();
            oeis::Client client(opts);
            auto b = client.get_terms(oeis_id, oeis_terms);
            hn::Report rep;
            rep.digits = digits;
            hn::SuiteReport sr;
            sr.suite = hn::SuiteId::series;
            sr.label = "oeis";
            for (size_t i = 0; i < oeis_terms && i < b.terms.size(); ++i) {
                hn::CaseResult c;
                c.id = oeis_id + "/" + std::to_string(b.terms[i].first);
                c.params = {{"index", std::to_string(b.terms[i].first)}};
                c.computed = b.terms[i].second.get_str();
                c.recognized = c.computed;
                c.expected = c.computed;
                c.residual = "0";
                c.digits = digits;
                c.status = hn::CaseStatus::pass;
                sr.cases.push_back(std::move(c));
                ++sr.pass;
            }
            rep.suites.push_back(std::move(sr));
            if (oeis_json) emit(rep, true, "");
            else
                for (const auto& c : rep.suites[0].cases)
                    std::cout << c.params[0].second << " " << c.computed << "\n";
            return kExitPass;
        }

        if (cache_cmd->parsed()) {
            auto integral_file = cache_dir / "integrals.jsonl";
            auto oeis_dir = cache_dir / "oeis";
            if (cache_verb == "stats") {
                hn::IntegralCache cache(integral_file);
                size_t bfiles = 0;
                if (std::filesystem::exists(oeis_dir))
                    for (auto& e : std::filesystem::directory_iterator(oeis_dir))
                        bfiles += e.is_regular_file() ? 1 : 0;
                std::cout << "cache directory: " << cache_dir.string() << "\n"
                          << "integral entries: " << cache.size() << "\n"
                          << "b-files: " << bfiles << "\n";
            } else {
                hn::IntegralCache cache(integral_file);
                cache.clear();
                std::filesystem::remove_all(oeis_dir);
                std::cout << "cache cleared\n";
            }
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
