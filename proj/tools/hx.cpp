#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hx/errors.hpp"
#include "hx/hypercomplex.hpp"
#include "hx/matrix.hpp"
#include "hx/moments.hpp"
#include "hx/spectral.hpp"
#include "hx/text.hpp"
#include "hx/verify.hpp"

namespace {

using hx::cplx;
using hx::Hypercomplex;
using json = nlohmann::json;

const char* errc_name(hx::errc c) {
    switch (c) {
        case hx::errc::nonfinite: return "Nonfinite";
        case hx::errc::singular: return "Singular";
        case hx::errc::zero_element: return "ZeroElement";
        case hx::errc::not_in_realization: return "NotInRealization";
        case hx::errc::adjoint_not_closed: return "AdjointNotClosed";
        case hx::errc::bad_scale: return "BadScale";
        case hx::errc::zero_b: return "ZeroB";
        case hx::errc::similarity_not_established: return "SimilarityNotEstablished";
        case hx::errc::zero_input: return "ZeroInput";
    }
    return "DomainError";
}

// CSV cells never contain commas or quotes; diagnostics are sanitized to keep it so.
std::string csv_sanitize(std::string s) {
    for (char& ch : s) {
        if (ch == ',') ch = ';';
        if (ch == '"') ch = '\'';
        if (ch == '\n') ch = ' ';
    }
    return s;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

struct Settings {
    double t = 0.0;
    std::string format = "human";
    int precision = 12;
    double tol = hx::kDefaultTol;
    std::uint64_t seed = 12345;
};

int run_eval(const Settings& s, const std::string& expr) {
    Hypercomplex r = hx::eval_expression(s.t, expr);
    if (s.format == "json") {
        std::printf("%s\n", hx::to_json(r).c_str());
    } else if (s.format == "csv") {
        std::printf("a_re,a_im,b_re,b_im\n%s,%s,%s,%s\n",
                    hx::format_real(r.a.real(), s.precision).c_str(),
                    hx::format_real(r.a.imag(), s.precision).c_str(),
                    hx::format_real(r.b.real(), s.precision).c_str(),
                    hx::format_real(r.b.imag(), s.precision).c_str());
    } else {
        std::printf("%s\n", hx::format_hypercomplex(r, s.precision).c_str());
    }
    return 0;
}

int run_spectrum(const Settings& s, const std::string& elem) {
    Hypercomplex x = hx::parse_hypercomplex(elem);
    hx::SpectralValue sv = hx::spectralize(s.t, x);
    cplx v = sv.value();
    cplx vc = sv.symbolic_conjugate().value();
    const char* sclass = hx::to_string(hx::classify_spectral(s.t, x, s.tol));
    const char* aclass = hx::to_string(hx::classify_algebraic(s.t, x, s.tol));
    bool has_res = s.t < 0.0;
    double res = has_res ? hx::similarity_residual(s.t, x) : 0.0;
    if (s.format == "json") {
        json j = json::parse(hx::to_json(sv));
        j["spectral_class"] = sclass;
        j["algebraic_class"] = aclass;
        if (has_res) j["similarity_residual"] = res;
        std::printf("%s\n", j.dump().c_str());
    } else if (s.format == "csv") {
        std::printf(
            "x,R,value_re,value_im,conjugate_re,conjugate_im,spectral_class,algebraic_class,"
            "similarity_residual\n");
        std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%s\n",
                    hx::format_real(sv.x, s.precision).c_str(),
                    hx::format_real(sv.R, s.precision).c_str(),
                    hx::format_real(v.real(), s.precision).c_str(),
                    hx::format_real(v.imag(), s.precision).c_str(),
                    hx::format_real(vc.real(), s.precision).c_str(),
                    hx::format_real(vc.imag(), s.precision).c_str(), sclass, aclass,
                    has_res ? hx::format_real(res, s.precision).c_str() : "");
    } else {
        std::printf("value                %s\n", hx::format_complex(v, s.precision).c_str());
        std::printf("conjugate            %s\n", hx::format_complex(vc, s.precision).c_str());
        std::printf("x                    %s\n", hx::format_real(sv.x, s.precision).c_str());
        std::printf("R                    %s\n", hx::format_real(sv.R, s.precision).c_str());
        std::printf("spectral_class       %s\n", sclass);
        std::printf("algebraic_class      %s\n", aclass);
        if (has_res) {
            std::printf("similarity_residual  %s\n", hx::format_real(res, s.precision).c_str());
        }
    }
    return 0;
}

int run_moments(const Settings& s, const std::string& elem, const std::string& words_arg,
                int nmax) {
    Hypercomplex x = hx::parse_hypercomplex(elem);
    std::vector<hx::StarWord> words;
    if (!words_arg.empty()) {
        for (const std::string& tok : split_commas(words_arg)) {
            words.push_back(hx::parse_star_word(tok));
        }
    } else {
        for (int k = 1; k <= nmax; ++k) {
            hx::StarWord w;
            w.letters.assign(static_cast<std::size_t>(k), hx::Letter::plain);
            words.push_back(std::move(w));
        }
    }

    struct Row {
        std::string word;
        cplx oracle;
        bool has_closed = false;
        double closed = 0.0;
    };
    std::vector<Row> rows;
    for (const hx::StarWord& w : words) {
        Row r;
        r.word = hx::to_string(w);
        r.oracle = hx::word_moment_oracle(s.t, x, w);
        try {
            r.closed = hx::word_moment_closed(s.t, x, w);
            r.has_closed = true;
        } catch (const hx::DomainError& e) {
            if (e.code() != hx::errc::similarity_not_established) throw;
        }
        rows.push_back(std::move(r));
    }

    if (s.format == "json") {
        json j;
        j["t"] = s.t;
        j["x"] = json::parse(hx::to_json(x));
        j["moments"] = json::array();
        for (const Row& r : rows) {
            json m;
            m["word"] = r.word;
            m["oracle"] = {r.oracle.real(), r.oracle.imag()};
            if (r.has_closed) {
                m["closed"] = r.closed;
                m["gap"] = std::abs(cplx{r.closed, 0.0} - r.oracle);
            } else {
                m["closed"] = nullptr;
                m["gap"] = nullptr;
            }
            j["moments"].push_back(std::move(m));
        }
        std::printf("%s\n", j.dump().c_str());
    } else if (s.format == "csv") {
        std::printf("word,re,im\n");
        for (const Row& r : rows) {
            std::printf("%s,%s,%s\n", r.word.c_str(),
                        hx::format_real(r.oracle.real(), s.precision).c_str(),
                        hx::format_real(r.oracle.imag(), s.precision).c_str());
        }
    } else {
        std::printf("%-10s %-26s %-34s %s\n", "word", "oracle", "closed", "gap");
        for (const Row& r : rows) {
            std::string closed = r.has_closed
                                     ? hx::format_real(r.closed, s.precision)
                                     : std::string("n/a (similarity not established)");
            std::string gapcol =
                r.has_closed
                    ? hx::format_real(std::abs(cplx{r.closed, 0.0} - r.oracle), 3)
                    : std::string("n/a");
            std::printf("%-10s %-26s %-34s %s\n", r.word.c_str(),
                        hx::format_complex(r.oracle, s.precision).c_str(), closed.c_str(),
                        gapcol.c_str());
        }
    }
    return 0;
}

int run_sweep(const Settings& s, const std::string& elem, double from, double to, double step) {
    Hypercomplex x = hx::parse_hypercomplex(elem);
    double span = (to - from) / step;
    long long nsteps = static_cast<long long>(span + 1e-9) + 1;
    if (nsteps > 1000000) {
        std::fprintf(stderr, "error: sweep would emit %lld rows; refine the range\n", nsteps);
        return 2;
    }

    struct Row {
        double t = 0.0;
        bool ok = false;
        double det = 0.0;
        const char* aclass = "";
        double R = 0.0;
        const char* sclass = "";
        hx::OperatorClass flags;
        std::string note;
    };
    std::vector<Row> rows;
    for (long long k = 0; k < nsteps; ++k) {
        Row r;
        r.t = from + static_cast<double>(k) * step;
        try {
            r.det = hx::det(r.t, x);
            r.aclass = hx::to_string(hx::classify_algebraic(r.t, x, s.tol));
            r.R = hx::spectralize(r.t, x).R;
            r.sclass = hx::to_string(hx::classify_spectral(r.t, x, s.tol));
            r.flags = hx::classify_operator(r.t, x, s.tol);
            r.ok = true;
        } catch (const hx::DomainError& e) {
            r.note = std::string(errc_name(e.code())) + ": " + e.what();
        } catch (const std::logic_error& e) {
            r.note = e.what();
        }
        rows.push_back(std::move(r));
    }

    if (s.format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json j;
            j["t"] = r.t;
            if (r.ok) {
                j["det"] = r.det;
                j["algebraic_class"] = r.aclass;
                j["R"] = r.R;
                j["spectral_class"] = r.sclass;
                j["self_adjoint"] = r.flags.self_adjoint;
                j["projection"] = r.flags.projection;
                j["normal"] = r.flags.normal;
                j["unitary"] = r.flags.unitary;
            } else {
                j["note"] = r.note;
            }
            arr.push_back(std::move(j));
        }
        std::printf("%s\n", arr.dump().c_str());
    } else {
        bool csv = s.format == "csv";
        if (csv) {
            std::printf(
                "t,det,algebraic_class,R,spectral_class,self_adjoint,projection,normal,unitary,"
                "note\n");
        } else {
            std::printf("%-14s %-18s %-12s %-18s %-12s %-3s %-4s %-4s %-3s %s\n", "t", "det",
                        "algebraic", "R", "spectral", "sa", "proj", "norm", "uni", "note");
        }
        for (const Row& r : rows) {
            std::string tcol = hx::format_real(r.t, s.precision);
            if (r.ok) {
                if (csv) {
                    std::printf("%s,%s,%s,%s,%s,%d,%d,%d,%d,\n", tcol.c_str(),
                                hx::format_real(r.det, s.precision).c_str(), r.aclass,
                                hx::format_real(r.R, s.precision).c_str(), r.sclass,
                                r.flags.self_adjoint ? 1 : 0, r.flags.projection ? 1 : 0,
                                r.flags.normal ? 1 : 0, r.flags.unitary ? 1 : 0);
                } else {
                    std::printf("%-14s %-18s %-12s %-18s %-12s %-3d %-4d %-4d %-3d\n",
                                tcol.c_str(), hx::format_real(r.det, s.precision).c_str(),
                                r.aclass, hx::format_real(r.R, s.precision).c_str(), r.sclass,
                                r.flags.self_adjoint ? 1 : 0, r.flags.projection ? 1 : 0,
                                r.flags.normal ? 1 : 0, r.flags.unitary ? 1 : 0);
                }
            } else {
                if (csv) {
                    std::printf("%s,,,,,,,,,%s\n", tcol.c_str(), csv_sanitize(r.note).c_str());
                } else {
                    std::printf("%-14s error: %s\n", tcol.c_str(), r.note.c_str());
                }
            }
        }
    }
    return 0;
}

int run_verify(const Settings& s, int samples) {
    std::vector<hx::InvariantResult> results = hx::run_verification(s.seed, samples);
    if (s.format == "json") {
        json j;
        j["seed"] = s.seed;
        j["samples"] = samples;
        j["all_passed"] = hx::all_passed(results);
        j["results"] = json::array();
        for (const hx::InvariantResult& r : results) {
            json item;
            item["name"] = r.name;
            item["samples"] = r.samples;
            item["max_residual"] = r.max_residual;
            item["tolerance"] = r.tolerance;
            item["pass"] = r.pass;
            j["results"].push_back(std::move(item));
        }
        std::printf("%s\n", j.dump().c_str());
    } else if (s.format == "csv") {
        std::printf("name,samples,max_residual,tolerance,pass\n");
        for (const hx::InvariantResult& r : results) {
            std::printf("%s,%zu,%s,%s,%d\n", r.name.c_str(), r.samples,
                        hx::format_real(r.max_residual, 17).c_str(),
                        hx::format_real(r.tolerance, 17).c_str(), r.pass ? 1 : 0);
        }
    } else {
        std::printf("%-30s %9s %14s %12s %s\n", "invariant", "samples", "max_residual",
                    "tolerance", "status");
        for (const hx::InvariantResult& r : results) {
            std::printf("%-30s %9zu %14s %12s %s\n", r.name.c_str(), r.samples,
                        hx::format_real(r.max_residual, 3).c_str(),
                        hx::format_real(r.tolerance, 3).c_str(), r.pass ? "PASS" : "FAIL");
        }
    }
    if (!hx::all_passed(results)) {
        std::string names;
        for (const hx::InvariantResult& r : results) {
            if (!r.pass) {
                if (!names.empty()) names += ", ";
                names += r.name;
            }
        }
        std::fprintf(stderr, "verification failed: %s\n", names.c_str());
        return 3;
    }
    if (s.format == "human") {
        std::printf("all %zu invariants passed\n", results.size());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Calculator for the family of scaled hypercomplex rings, their 2x2 matrix "
        "realizations, spectral analysis, and tracial moments."};
    app.require_subcommand(1);

    Settings s;
    auto* topt = app.add_option("-t,--scale", s.t, "scale parameter of the ring");
    app.add_option("--format", s.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--precision", s.precision, "significant digits for printed numbers")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--tol", s.tol, "tolerance used by classification predicates")
        ->capture_default_str();
    app.add_option("--seed", s.seed, "seed for randomized verification")
        ->capture_default_str();

    std::string expr, elem, words_arg;
    int nmax = 0, samples = 10000;
    double from = 0.0, to = 0.0, step = 0.0;

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate a ring expression: pair literals like (1+2i,3), +, -, *, inv(...)");
    eval->fallthrough();
    eval->add_option("expr", expr, "expression to evaluate")->required();
    eval->footer("Requires -t. CSV columns: a_re,a_im,b_re,b_im");

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "spectral value, class, and similarity data");
    spectrum->fallthrough();
    spectrum->add_option("element", elem, "ring element, e.g. \"(1+3i,-1+1i)\"")->required();
    spectrum->footer(
        "Requires -t. CSV columns: x,R,value_re,value_im,conjugate_re,conjugate_im,"
        "spectral_class,algebraic_class,similarity_residual\n"
        "similarity_residual is only computed for t<0 and is left empty otherwise.");

    CLI::App* moments = app.add_subcommand("moments", "tracial moments of star words");
    moments->fallthrough();
    moments->add_option("element", elem, "ring element")->required();
    auto* wopt = moments->add_option(
        "--words", words_arg, "comma-separated star words over letters '1' and '*', e.g. 11,1*");
    auto* nopt = moments->add_option("--nmax", nmax, "compute plain power words 1..N")
                     ->check(CLI::Range(1, 64));
    wopt->excludes(nopt);
    nopt->excludes(wopt);
    moments->footer(
        "Requires -t and exactly one of --words / --nmax.\n"
        "CSV columns: word,re,im (real and imaginary part of the tracial moment).\n"
        "The closed column shows the spectral closed form when similarity is "
        "established (t<0, or b=0); otherwise 'n/a'.");

    CLI::App* sweep = app.add_subcommand("sweep", "scan the scale parameter over a range");
    sweep->fallthrough();
    sweep->add_option("element", elem, "ring element")->required();
    sweep->add_option("--from", from, "first scale value")->required();
    sweep->add_option("--to", to, "last scale value (inclusive)")->required();
    sweep->add_option("--step", step, "positive increment")->required();
    sweep->footer(
        "CSV columns: t,det,algebraic_class,R,spectral_class,self_adjoint,projection,"
        "normal,unitary,note\n"
        "Flags are 1/0. A row that cannot be computed keeps only t and a diagnostic in "
        "note (commas/quotes sanitized); numbers are never NaN.");

    CLI::App* verify =
        app.add_subcommand("verify", "run randomized self-checks of the library invariants");
    verify->fallthrough();
    verify->add_option("--samples", samples, "random samples per invariant")
        ->check(CLI::Range(1, 10000000))
        ->capture_default_str();
    verify->footer("CSV columns: name,samples,max_residual,tolerance,pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval) || app.got_subcommand(spectrum) ||
            app.got_subcommand(moments)) {
            if (topt->count() == 0) {
                std::fprintf(stderr, "error: this subcommand needs the scale flag -t\n");
                return 2;
            }
        }
        if (app.got_subcommand(eval)) return run_eval(s, expr);
        if (app.got_subcommand(spectrum)) return run_spectrum(s, elem);
        if (app.got_subcommand(moments)) {
            if (wopt->count() == 0 && nopt->count() == 0) {
                std::fprintf(stderr, "error: moments needs --words or --nmax\n");
                return 2;
            }
            return run_moments(s, elem, words_arg, nmax);
        }
        if (app.got_subcommand(sweep)) {
            if (!(step > 0.0)) {
                std::fprintf(stderr, "error: --step must be positive\n");
                return 2;
            }
            if (to < from) {
                std::fprintf(stderr, "error: --to must not be below --from\n");
                return 2;
            }
            return run_sweep(s, elem, from, to, step);
        }
        if (app.got_subcommand(verify)) return run_verify(s, samples);
    } catch (const hx::ParseError& e) {
        std::fprintf(stderr, "error: Parse: %s\n", e.what());
        return 2;
    } catch (const hx::DomainError& e) {
        std::fprintf(stderr, "error: %s: %s\n", errc_name(e.code()), e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
