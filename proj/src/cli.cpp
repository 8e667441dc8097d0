#include "superwig/cli.hpp"
#include "superwig/errors.hpp"
#include "superwig/io.hpp"
#include "superwig/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sw {

namespace {

struct WeightArgs {
    int m = 1, n = 1;
    std::string Lambda;
    Shape shape() const {
        if (m < 0 || n < 0 || m + n < 1) throw DomainError("need m, n >= 0 and m + n >= 1", "UsageError");
        return {m, n};
    }
};

void add_shape(CLI::App* cmd, WeightArgs& w) {
    cmd->add_option("--m", w.m, "even rank")->required();
    cmd->add_option("--n", w.n, "odd rank")->required();
}

BranchRule parse_rule(const std::string& s) {
    if (s == "generic") return BranchRule::generic;
    if (s == "covariant") return BranchRule::covariant;
    if (s == "contravariant") return BranchRule::contravariant;
    if (s == "auto") return BranchRule::automatic;
    throw DomainError("unknown rule '" + s + "'", "UsageError");
}

EvalMode parse_mode(const std::string& s) {
    if (s == "strict") return EvalMode::strict;
    if (s == "continued") return EvalMode::continued;
    throw DomainError("unknown mode '" + s + "'", "UsageError");
}

PhaseConvention parse_phase(const std::string& s) {
    if (s == "gauge") return PhaseConvention::gauge_consistent;
    if (s == "printed") return PhaseConvention::printed;
    throw DomainError("unknown phase convention '" + s + "'", "UsageError");
}

std::string pattern_text(const GTPattern& p) {
    std::string s;
    for (std::size_t k = 0; k < p.rows.size(); ++k) {
        if (k) s += ';';
        for (std::size_t i = 0; i < p.rows[k].labels.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(p.rows[k].labels[i]);
        }
    }
    return s;
}

Json root_json(const RootVector& r) {
    Json a = Json::array();
    for (auto& v : r.values) a.push_back(v.str());
    return a;
}

// Branching observed in the oracle decomposition of the tensor-power family containing Lambda.
std::vector<Weight> oracle_branch(const Weight& L, int kmax) {
    for (Direction d : {Direction::covariant, Direction::contravariant}) {
        const Family& F = cached_family(L.shape, d, kmax);
        auto it = F.members.find(L);
        if (it == F.members.end()) continue;
        std::vector<Weight> out;
        for (const auto& p : it->second.patterns) out.push_back(p.level(L.size() - 1));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    throw NotRealizable(L.str() + " is not a constituent of V or V* tensor powers up to " + std::to_string(kmax));
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string table_body(const Shape& s, Direction d, int bound, const std::string& format, const WcOptions& opt) {
    const Family& F = cached_family(s, d, bound);
    struct Row {
        GTPattern source, target;
        int p;
        CoefficientValue value;
    };
    std::vector<Row> rows;
    for (const auto& [L, c] : F.couplings) {
        const RepModule& R = F.members.at(L);
        for (const auto& src : R.patterns)
            for (int p = 1; p <= s.size(); ++p)
                for (auto& w : full_wc_column(d, src, p, opt)) rows.push_back({src, w.target, p, w.value});
    }
    std::ostringstream os;
    if (format == "json") {
        Json a = Json::array();
        for (auto& r : rows) {
            Json j;
            j["source"] = to_json(r.source)["rows"];
            j["p"] = r.p;
            j["target"] = to_json(r.target)["rows"];
            j["value"] = to_json(r.value);
            a.push_back(j);
        }
        os << a.dump();
    } else if (format == "csv") {
        os << "source,p,target,sign,radicand\n";
        for (auto& r : rows)
            os << '"' << pattern_text(r.source) << "\"," << r.p << ",\"" << pattern_text(r.target) << "\","
               << r.value.sign() << ',' << r.value.radicand().str() << '\n';
    } else if (format == "table") {
        os << "| source | p | target | sign | radicand |\n|---|---|---|---|---|\n";
        for (auto& r : rows)
            os << "| " << pattern_text(r.source) << " | " << r.p << " | " << pattern_text(r.target) << " | "
               << r.value.sign() << " | " << r.value.radicand().str() << " |\n";
    } else {
        throw DomainError("unknown format '" + format + "'", "UsageError");
    }
    return os.str();
}

std::string cached_table(const Shape& s, Direction d, int bound, const std::string& format, const WcOptions& opt) {
    std::ostringstream key;
    key << "superwig " << kVersion << " table m=" << s.m << " n=" << s.n << " family=" << direction_name(d)
        << " bound=" << bound << " format=" << format << " mode=" << static_cast<int>(opt.mode)
        << " phase=" << static_cast<int>(opt.phase);
    const char* dir = std::getenv("SUPERWIG_CACHE_DIR");
    std::filesystem::path file;
    if (dir && *dir) {
        std::ostringstream name;
        name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key.str()) << ".cache";
        file = std::filesystem::path(dir) / name.str();
        std::ifstream in(file, std::ios::binary);
        if (in) {
            std::string header;
            std::getline(in, header);
            if (header == key.str()) {
                std::ostringstream body;
                body << in.rdbuf();
                return body.str();
            }
        }
    }
    std::string body = table_body(s, d, bound, format, opt);
    if (!file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        std::filesystem::path tmp = file;
        tmp += ".tmp";
        std::ofstream o(tmp, std::ios::binary);
        o << key.str() << '\n' << body;
        o.close();
        if (o) std::filesystem::rename(tmp, file, ec);
    }
    return body;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Wigner coefficients for gl(m|n) fundamental couplings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    WeightArgs w;
    std::string lambda, direction = "covariant", rule = "auto", mode = "strict", phase = "gauge";
    std::string source, target, format = "json", report;
    int r = 1, p = 1, bound = 2, kmax = 3;
    std::optional<int> u;
    SuiteOptions so;
    std::string suite = "all";

    auto* roots_cmd = app.add_subcommand("roots", "characteristic roots of a weight");
    add_shape(roots_cmd, w);
    roots_cmd->add_option("--Lambda", w.Lambda, "labels, comma separated")->required();

    auto* branch_cmd = app.add_subcommand("branch", "subalgebra weights of Lambda");
    add_shape(branch_cmd, w);
    branch_cmd->add_option("--Lambda", w.Lambda)->required();
    branch_cmd->add_option("--rule", rule, "generic|covariant|contravariant|auto|oracle");
    branch_cmd->add_option("--kmax", kmax, "tensor power bound for --rule oracle");

    auto* patterns_cmd = app.add_subcommand("patterns", "GT patterns of Lambda");
    add_shape(patterns_cmd, w);
    patterns_cmd->add_option("--Lambda", w.Lambda)->required();
    patterns_cmd->add_option("--rule", rule);

    auto* rwc_cmd = app.add_subcommand("rwc", "reduced Wigner coefficient");
    add_shape(rwc_cmd, w);
    rwc_cmd->add_option("--direction", direction);
    rwc_cmd->add_option("--Lambda", w.Lambda)->required();
    rwc_cmd->add_option("--lambda", lambda)->required();
    rwc_cmd->add_option("--r", r)->required();
    rwc_cmd->add_option("--u", u);
    rwc_cmd->add_option("--mode", mode, "strict|continued");
    rwc_cmd->add_option("--phase", phase, "gauge|printed");
    rwc_cmd->add_option("--rule", rule);

    auto* wc_cmd = app.add_subcommand("wc", "full Wigner coefficient <target | e_p (x) source>");
    add_shape(wc_cmd, w);
    wc_cmd->add_option("--direction", direction);
    wc_cmd->add_option("--source", source, "pattern rows, top first, rows separated by ';'")->required();
    wc_cmd->add_option("--target", target, "pattern rows; omit to list every target");
    wc_cmd->add_option("--p", p)->required();
    wc_cmd->add_option("--mode", mode);
    wc_cmd->add_option("--phase", phase);

    auto* eta_cmd = app.add_subcommand("eta", "measured symmetry constant and closed-form candidates");
    add_shape(eta_cmd, w);
    eta_cmd->add_option("--Lambda", w.Lambda)->required();
    eta_cmd->add_option("--r", r)->required();
    eta_cmd->add_option("--kmax", kmax);

    auto* table_cmd = app.add_subcommand("table", "coefficient table over a tensor-power family");
    add_shape(table_cmd, w);
    table_cmd->add_option("--direction", direction);
    table_cmd->add_option("--bound", bound, "tensor power bound");
    table_cmd->add_option("--format", format, "json|csv|table");
    table_cmd->add_option("--phase", phase);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name or all");
    verify_cmd->add_option("--seed", so.seed);
    verify_cmd->add_option("--max-label", so.max_label);
    verify_cmd->add_option("--samples", so.samples);
    verify_cmd->add_option("--kmax", so.kmax);
    verify_cmd->add_option("--report", report, "write suite records as JSON");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "UsageError: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*roots_cmd) {
            Weight L = parse_weight(w.shape(), w.Lambda);
            Json j;
            j["barred"] = root_json(roots(L, Variant::barred));
            j["unbarred"] = root_json(roots(L, Variant::unbarred));
            out << j.dump();
        } else if (*branch_cmd) {
            Weight L = parse_weight(w.shape(), w.Lambda);
            if (!is_dominant(L)) throw InvalidBranch(L.str() + " is not dominant");
            auto kids = rule == "oracle" ? oracle_branch(L, kmax) : branch(L, parse_rule(rule));
            Json a = Json::array();
            for (auto& k : kids) a.push_back(k.labels);
            out << a.dump();
        } else if (*patterns_cmd) {
            Weight L = parse_weight(w.shape(), w.Lambda);
            if (!is_dominant(L)) throw InvalidBranch(L.str() + " is not dominant");
            Json a = Json::array();
            for (auto& pat : enumerate_patterns(L, parse_rule(rule))) {
                Json j = to_json(pat);
                j["parity"] = pattern_parity(pat);
                a.push_back(j);
            }
            out << a.dump();
        } else if (*rwc_cmd) {
            Shape s = w.shape();
            Weight L = parse_weight(s, w.Lambda);
            Weight l = parse_weight(child_shape(s), lambda);
            BranchContext ctx(L, l);
            RwcOptions o;
            o.mode = parse_mode(mode);
            o.phase = parse_phase(phase);
            o.rule = parse_rule(rule);
            out << to_json(rwc(ctx, {parse_direction(direction), r, u}, o)).dump();
        } else if (*wc_cmd) {
            Shape s = w.shape();
            Direction d = parse_direction(direction);
            GTPattern src = parse_pattern(s, source);
            WcOptions o;
            o.mode = parse_mode(mode);
            o.phase = parse_phase(phase);
            if (!target.empty()) {
                out << to_json(full_wc(d, src, p, parse_pattern(s, target), o).value).dump();
            } else {
                Json a = Json::array();
                for (auto& c : full_wc_column(d, src, p, o)) {
                    Json j;
                    j["target"] = to_json(c.target)["rows"];
                    j["value"] = to_json(c.value);
                    a.push_back(j);
                }
                out << a.dump();
            }
        } else if (*eta_cmd) {
            Shape s = w.shape();
            Weight L = parse_weight(s, w.Lambda);
            const Family& F = cached_family(s, Direction::covariant, kmax);
            out << to_json(eta_closed_form_report(F, L, r)).dump();
        } else if (*table_cmd) {
            if (bound < 0 || bound > 6) throw DomainError("bound must lie in 0..6", "UsageError");
            WcOptions o;
            o.phase = parse_phase(phase);
            out << cached_table(w.shape(), parse_direction(direction), bound, format, o);
        } else if (*verify_cmd) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            Json records = Json::object();
            for (auto& name : names) {
                SuiteResult res = run_suite(name, so);
                ok = ok && res.pass;
                out << (res.pass ? "PASS " : "FAIL ") << res.name << " (" << std::fixed << std::setprecision(2)
                    << res.seconds << " s): " << res.detail << '\n';
                if (!res.artifact.is_null()) records[res.name] = res.artifact;
            }
            if (!report.empty()) {
                std::ofstream f(report);
                f << records.dump(2) << '\n';
                if (!f) throw DomainError("cannot write " + report, "IOError");
            }
            return ok ? 0 : 1;
        }
    } catch (const DomainError& e) {
        Json j;
        j["error"] = e.code();
        j["message"] = e.what();
        err << j.dump() << '\n';
        return e.code() == "UsageError" ? 2 : 1;
    }
    return 0;
}

} // namespace sw
