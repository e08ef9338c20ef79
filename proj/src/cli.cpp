#include "quadnorm/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "quadnorm/arith.hpp"
#include "quadnorm/criterion.hpp"
#include "quadnorm/ideals.hpp"
#include "quadnorm/quadfield.hpp"
#include "quadnorm/survey.hpp"

namespace quadnorm::cli {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::json;

enum class Format { text, json, csv };

struct Options {
    Format format = Format::text;
    std::string out_path;
    int jobs = 0;  // 0 = available parallelism
};

int default_jobs() {
    if (const char* env = std::getenv("QUADNORM_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 0;
}

// The survey line format: supports are blank for S=-1, with the m=mp=2
// marker in the even case.
std::string ladder_line(const survey::MainRecord& r) {
    std::ostringstream os;
    os << "D=" << r.D << " M=" << r.M << " relations: ";
    if (r.S == 1) {
        if (r.m > 2)
            os << r.m << "," << r.M / r.m;
        else
            os << r.m << "," << r.mp;
        os << ", S=1";
    } else {
        os << " , , S=-1";
        if (r.M % 2 == 0) os << ", m=mp=2";
    }
    return os.str();
}

std::string records_csv(const std::vector<survey::MainRecord>& recs) {
    std::ostringstream os;
    os << "D,M,m,mp,S\n";
    for (const auto& r : recs) os << r.D << "," << r.M << "," << r.m << "," << r.mp << "," << r.S << "\n";
    return os.str();
}

void emit(const Options& opt, std::ostream& out, std::ostream& err, const std::string& payload) {
    if (opt.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
    f << payload;
    err << "wrote " << opt.out_path << "\n";
}

std::string cmd_unit(u64 M, const Options& opt) {
    const quadfield::FundamentalUnit fu = quadfield::fundamental_unit(M);
    switch (opt.format) {
        case Format::json: {
            json j;
            j["M"] = M;
            j["u"] = fu.eps.u.get_str();
            j["v"] = fu.eps.v.get_str();
            j["norm"] = fu.norm_sign;
            j["period"] = fu.period_length;
            return j.dump() + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "M,u,v,norm,period\n"
               << M << "," << fu.eps.u.get_str() << "," << fu.eps.v.get_str() << "," << fu.norm_sign
               << "," << fu.period_length << "\n";
            return os.str();
        }
        case Format::text:
        default:
            return fu.eps.str() + ", N=" + std::to_string(fu.norm_sign) + "\n";
    }
}

std::string cmd_criterion(u64 M, const Options& opt) {
    const criterion::CriterionResult r = criterion::classify_norm(M);
    switch (opt.format) {
        case Format::json:
            return criterion::to_json(r) + "\n";
        case Format::csv: {
            std::ostringstream os;
            os << "D,M,m,mp,S\n" << r.D << "," << M << "," << r.m << "," << r.m_prime << "," << r.predicted_S << "\n";
            return os.str();
        }
        case Format::text:
        default: {
            std::ostringstream os;
            os << ladder_line({r.D, M, r.m, r.m_prime, r.predicted_S}) << "\n";
            os << "eps = " << r.eps.eps.str() << ", N=" << r.eps.norm_sign
               << ", period=" << r.eps.period_length << "\n";
            os << "eps+1 = " << r.plus.g.get_str() << " * (" << r.plus.A_str() << " + " << r.plus.B_str()
               << "*sqrt(" << M << "))   [m=" << r.m << "]\n";
            os << "eps-1 = " << r.minus.g.get_str() << " * (" << r.minus.A_str() << " + "
               << r.minus.B_str() << "*sqrt(" << M << "))   [mp=" << r.m_prime << "]\n";
            if (!r.global_norm) os << "note: -1 is not a global norm for this radical\n";
            return os.str();
        }
    }
}

std::string cmd_relations(u64 M, bool generators, const Options& opt) {
    const criterion::CriterionResult r = criterion::classify_norm(M);
    const bool two_ram = (M % 2 == 0) || (M % 4 == 3);
    bool canonical = (r.m == 1 && r.m_prime == M) || (r.m == M && r.m_prime == 1);
    json j;
    j["M"] = M;
    j["global_norm"] = r.global_norm;
    j["S"] = r.predicted_S;
    j["m"] = r.m;
    j["mp"] = r.m_prime;
    j["canonical"] = canonical;
    std::ostringstream os;
    if (r.global_norm) {
        if (r.predicted_S == -1) {
            os << "M=" << M << ": canonical relations only, S=-1\n";
        } else {
            os << "M=" << M << ": non-canonical relation supports m=" << r.m << ", n=" << r.n << ", S=1\n";
            if (generators) {
                auto [alpha, beta] = criterion::relation_generators(r);
                const BigInt na = abs(alpha.norm()), nb = abs(beta.norm());
                os << "alpha = " << alpha.str() << ", |N(alpha)| = " << na.get_str() << "\n";
                os << "beta  = " << beta.str() << ", |N(beta)|  = " << nb.get_str() << "\n";
                j["alpha"] = alpha.str();
                j["beta"] = beta.str();
            }
        }
    } else {
        os << "M=" << M << ": -1 not a global norm; supports from eps+1, eps-1: (" << r.m << ", "
           << r.m_prime << "), " << (canonical ? "canonical" : "non-canonical") << "\n";
        if (two_ram) {
            const ideals::Q2Classification q2 = ideals::classify_q2(M);
            os << "q2 " << (q2.principal ? "principal" : "non principal") << "\n";
            j["q2_principal"] = q2.principal;
        } else {
            os << "2 unramified (D=M)\n";
        }
    }
    if (opt.format == Format::json) return j.dump() + "\n";
    return os.str();
}

std::string cmd_lattice(u64 M, const Options& opt) {
    const arith::Factorization f = arith::factorize(M);
    std::vector<u64> primes;
    for (auto [p, e] : f.factors) primes.push_back(p);
    const auto vectors = ideals::relation_lattice(M);
    switch (opt.format) {
        case Format::json: {
            json j;
            j["M"] = M;
            j["primes"] = primes;
            j["vectors"] = vectors;
            return j.dump() + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
            os << "\n";
            for (const auto& v : vectors) {
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                os << "\n";
            }
            return os.str();
        }
        case Format::text:
        default: {
            std::ostringstream os;
            os << "M=[";
            for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
            os << "]\n";
            for (const auto& v : vectors) {
                os << "L=[";
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
                os << "]\n";
            }
            return os.str();
        }
    }
}

std::string cmd_q2(u64 M, const Options& opt) {
    const ideals::Q2Classification q = ideals::classify_q2(M);
    if (opt.format == Format::json) {
        json j;
        j["M"] = M;
        j["principal"] = q.principal;
        j["m"] = q.m;
        j["n"] = q.n;
        j["canonical"] = q.canonical;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    if (q.principal)
        os << "M=" << M << ": q2 principal\n";
    else
        os << "M=" << M << ": q2 non principal (m=" << q.m << ", n=" << q.n << ")\n";
    return os.str();
}

std::string cmd_survey_main(u64 BD, bool with_records, const Options& opt) {
    std::vector<survey::MainRecord> recs;
    const bool collect = with_records || opt.format == Format::csv;
    const survey::MainCounters c = survey::survey_main(BD, opt.jobs, collect ? &recs : nullptr);
    switch (opt.format) {
        case Format::csv:
            return records_csv(recs);
        case Format::json: {
            json j;
            j["BD"] = BD;
            j["CD"] = c.CD;
            j["Cm"] = c.Cm;
            j["Cp"] = c.Cp;
            j["C22"] = c.C22;
            j["Cm/CD"] = survey::format_ratio(c.Cm, c.CD);
            j["Cp/CD"] = survey::format_ratio(c.Cp, c.CD);
            j["C22/CD"] = survey::format_ratio(c.C22, c.CD);
            j["C22/Cm"] = survey::format_ratio(c.C22, c.Cm);
            return j.dump() + "\n";
        }
        case Format::text:
        default: {
            std::ostringstream os;
            if (with_records)
                for (const auto& r : recs)
                    if (r.S == 1 || r.M % 2 == 0) os << ladder_line(r) << "\n";
            os << "CD=" << c.CD << " Cm=" << c.Cm << " Cp=" << c.Cp << " C22=" << c.C22 << "\n";
            os << "Cm/CD=" << survey::format_ratio(c.Cm, c.CD)
               << " Cp/CD=" << survey::format_ratio(c.Cp, c.CD) << "\n";
            os << "C22/CD=" << survey::format_ratio(c.C22, c.CD)
               << " C22/Cm=" << survey::format_ratio(c.C22, c.Cm) << "\n";
            return os.str();
        }
    }
}

std::string cmd_survey_partial(u64 bM, u64 BM, const Options& opt) {
    const survey::PartialCounters c = survey::survey_partial(bM, BM, opt.jobs);
    const survey::ReferenceConstants rc = survey::reference_constants();
    switch (opt.format) {
        case Format::csv: {
            std::ostringstream os;
            os << "bM,BM,CM,C22,C2p,Cm2,Cmp,CC11,CCmp\n"
               << bM << "," << BM << "," << c.CM << "," << c.C22 << "," << c.C2p << "," << c.Cm2 << ","
               << c.Cmp << "," << c.CC11 << "," << c.CCmp << "\n";
            return os.str();
        }
        case Format::json: {
            json j;
            j["bM"] = bM;
            j["BM"] = BM;
            j["CM"] = c.CM;
            j["C22"] = c.C22;
            j["C2p"] = c.C2p;
            j["Cm2"] = c.Cm2;
            j["Cmp"] = c.Cmp;
            j["CC11"] = c.CC11;
            j["CCmp"] = c.CCmp;
            j["d22"] = survey::format_ratio(c.C22, c.CM);
            j["dd11"] = survey::format_ratio(c.CC11, c.CM);
            j["delta_gcd_measured"] = survey::format_ratio(c.C22 + c.CC11, c.CM);
            j["delta_gcd_reference"] = survey::format_decimal(rc.delta_gcd, 12);
            return j.dump() + "\n";
        }
        case Format::text:
        default: {
            std::ostringstream os;
            os << "CM=" << c.CM << " C22=" << c.C22 << " C2p=" << c.C2p << " Cm2=" << c.Cm2
               << " Cmp=" << c.Cmp << " CC11=" << c.CC11 << " CCmp=" << c.CCmp << "\n";
            os << "d22=" << survey::format_ratio(c.C22, c.CM)
               << " d2p=" << survey::format_ratio(c.C2p, c.CM)
               << " dm2=" << survey::format_ratio(c.Cm2, c.CM)
               << " dmp=" << survey::format_ratio(c.Cmp, c.CM)
               << " dd11=" << survey::format_ratio(c.CC11, c.CM)
               << " ddmp=" << survey::format_ratio(c.CCmp, c.CM) << "\n";
            os << "measured Delta_gcd = " << survey::format_ratio(c.C22 + c.CC11, c.CM)
               << "  (reference heuristic " << survey::format_decimal(rc.delta_gcd, 12)
               << ", Stevenhagen " << survey::format_decimal(rc.stevenhagen_p, 12) << ")\n";
            return os.str();
        }
    }
}

std::string cmd_survey_fop(u64 B, const Options& opt) {
    const survey::FopResult r = survey::fop_survey(B, opt.jobs);
    switch (opt.format) {
        case Format::csv: {
            std::ostringstream os;
            os << "M,sign,t\n";
            for (const auto& e : r.entries) os << e.M << "," << e.sign << "," << e.t << "\n";
            return os.str();
        }
        case Format::json: {
            json j;
            j["B"] = B;
            j["total"] = r.total();
            j["Cp"] = r.Cp;
            j["Cm"] = r.Cm;
            j["dp"] = survey::format_ratio(r.Cp, r.total());
            j["dm"] = survey::format_ratio(r.Cm, r.total());
            return j.dump() + "\n";
        }
        case Format::text:
        default: {
            std::ostringstream os;
            os << "#VM=" << r.total() << " Cp=" << r.Cp << " Cm=" << r.Cm
               << " dp=" << survey::format_ratio(r.Cp, r.total())
               << " dm=" << survey::format_ratio(r.Cm, r.total()) << "\n";
            return os.str();
        }
    }
}

std::string cmd_survey_parity(u64 bM, u64 BM, const Options& opt) {
    const survey::ParityCounters c = survey::parity_survey(bM, BM, opt.jobs);
    const std::string rho = c.CP == 0 ? "undefined" : survey::format_ratio(c.CI, c.CP);
    switch (opt.format) {
        case Format::csv: {
            std::ostringstream os;
            os << "bM,BM,CM,CP,CI,rho\n"
               << bM << "," << BM << "," << c.CM << "," << c.CP << "," << c.CI << "," << rho << "\n";
            return os.str();
        }
        case Format::json: {
            json j;
            j["bM"] = bM;
            j["BM"] = BM;
            j["CM"] = c.CM;
            j["CP"] = c.CP;
            j["CI"] = c.CI;
            j["rho"] = rho;
            return j.dump() + "\n";
        }
        case Format::text:
        default: {
            std::ostringstream os;
            os << "CM=" << c.CM << " CP=" << c.CP << " CI=" << c.CI << " rho=" << rho << "\n";
            return os.str();
        }
    }
}

std::string cmd_constants(const Options& opt) {
    const survey::ReferenceConstants rc = survey::reference_constants();
    if (opt.format == Format::json) {
        json j;
        j["delta_gcd"] = survey::format_decimal(rc.delta_gcd, 12);
        j["stevenhagen_p"] = survey::format_decimal(rc.stevenhagen_p, 12);
        j["rieger"] = survey::format_decimal(rc.rieger, 12);
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "delta_gcd     = " << survey::format_decimal(rc.delta_gcd, 12) << "\n";
    os << "stevenhagen_p = " << survey::format_decimal(rc.stevenhagen_p, 12) << "\n";
    os << "rieger        = " << survey::format_decimal(rc.rieger, 12) << "\n";
    return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fundamental units of real quadratic fields, unit-norm prediction from "
                 "gcds of eps+-1, ramified-prime principality relations, and batch surveys"};
    app.name("quadnorm");
    Options opt;
    opt.jobs = default_jobs();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag_callback("--json", [&format] { format = "json"; }, "shorthand for --format json");
    app.add_option("--out", opt.out_path, "write output to a file");
    app.add_option("--jobs", opt.jobs, "worker count (default: QUADNORM_JOBS or available parallelism)");
    app.require_subcommand(1);

    u64 M = 0, bound = 0, lo = 0, hi = 0;
    bool generators = false, with_records = false;

    auto* c_unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt(M))");
    c_unit->add_option("M", M, "squarefree radical >= 2")->required();
    auto* c_crit = app.add_subcommand("criterion", "predict N(eps) from the gcds of eps+-1");
    c_crit->add_option("M", M)->required();
    auto* c_rel = app.add_subcommand("relations", "principality-relation supports for M");
    c_rel->add_option("M", M)->required();
    c_rel->add_flag("--generators", generators, "also print the relation generators");
    auto* c_lat = app.add_subcommand("lattice", "principal subsets of the ramified primes of M");
    c_lat->add_option("M", M)->required();
    auto* c_q2 = app.add_subcommand("q2", "classify the prime above 2 (M even or M = 3 mod 4)");
    c_q2->add_option("M", M)->required();

    auto* c_survey = app.add_subcommand("survey", "batch surveys");
    c_survey->require_subcommand(1);
    auto* s_main = c_survey->add_subcommand("main", "discriminant survey D <= BD");
    s_main->add_option("--bound", bound, "discriminant bound BD")->required();
    s_main->add_flag("--records", with_records, "print one line per eligible discriminant");
    auto* s_partial = c_survey->add_subcommand("partial", "six-way radical classification");
    s_partial->add_option("--min", lo, "lower radical bound (inclusive)")->required();
    s_partial->add_option("--max", hi, "upper radical bound (inclusive)")->required();
    auto* s_fop = c_survey->add_subcommand("fop", "first-occurrence process by ascending trace");
    s_fop->add_option("--bound", bound, "trace bound B")->required();
    auto* s_parity = c_survey->add_subcommand("parity", "parity of b over M = 2 mod 8 in (min, max]");
    s_parity->add_option("--min", lo, "lower bound (exclusive)")->required();
    s_parity->add_option("--max", hi, "upper bound (inclusive)")->required();

    auto* c_const = app.add_subcommand("constants", "reference density constants");
    (void)c_const;

    // global flags may trail the subcommand, e.g. "criterion 34 --json"
    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    if (format == "json") opt.format = Format::json;
    else if (format == "csv") opt.format = Format::csv;
    else opt.format = Format::text;

    try {
        const auto t0 = std::chrono::steady_clock::now();
        std::string payload;
        if (*c_unit) payload = cmd_unit(M, opt);
        else if (*c_crit) payload = cmd_criterion(M, opt);
        else if (*c_rel) payload = cmd_relations(M, generators, opt);
        else if (*c_lat) payload = cmd_lattice(M, opt);
        else if (*c_q2) payload = cmd_q2(M, opt);
        else if (*s_main) payload = cmd_survey_main(bound, with_records, opt);
        else if (*s_partial) payload = cmd_survey_partial(lo, hi, opt);
        else if (*s_fop) payload = cmd_survey_fop(bound, opt);
        else if (*s_parity) payload = cmd_survey_parity(lo, hi, opt);
        else payload = cmd_constants(opt);
        emit(opt, out, err, payload);
        if (*c_survey) {
            const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0);
            err << "survey finished in " << dt.count() << " ms\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace quadnorm::cli
