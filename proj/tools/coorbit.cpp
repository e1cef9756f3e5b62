// Copyright 2026 The Coorbit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// coorbit: command-line front end over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coorbit/coorbit.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct SystemDeleter {
    void operator()(coorbit_system* s) const { coorbit_system_destroy(s); }
};
using SystemHandle = std::unique_ptr<coorbit_system, SystemDeleter>;

struct Owned {
    char* text = nullptr;
    ~Owned() { coorbit_string_free(text); }
};

// Budget refusals count as usage errors; internal inconsistencies falsify a
// check, so they share the mismatch code.
int status_exit(coorbit_status status) {
    switch (status) {
        case COORBIT_OK: return 0;
        case COORBIT_E_INPUT:
        case COORBIT_E_BUDGET: return kExitInput;
        default: return kExitMismatch;
    }
}

int report_error(coorbit_status status) {
    std::cerr << "coorbit: " << coorbit_last_error() << "\n";
    return status_exit(status);
}

std::optional<SystemHandle> open_system(const std::string& family, int rank, int& exit_code) {
    if (family.size() != 1) {
        std::cerr << "coorbit: family must be one of B, C, D\n";
        exit_code = kExitInput;
        return std::nullopt;
    }
    coorbit_system* raw = nullptr;
    const coorbit_status st = coorbit_system_create(family[0], rank, &raw);
    if (st != COORBIT_OK) {
        exit_code = report_error(st);
        return std::nullopt;
    }
    return SystemHandle(raw);
}

std::vector<uint32_t> parse_primes(const std::string& text) {
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const unsigned long v = std::stoul(item, &used);
        if (used != item.size() || v > 0xffffffffUL) throw CLI::ValidationError("--primes", "bad prime '" + item + "'");
        out.push_back(static_cast<uint32_t>(v));
    }
    return out;
}

bool write_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::trunc);
    for (const auto& l : lines) out << l << "\n";
    if (!out) {
        std::cerr << "coorbit: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::string join_ints(const Json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : " ") + v.dump();
    return s;
}

void print_dim_table(const Json& r) {
    std::cout << r["family"].get<std::string>() << r["n"].get<int>() << "  {" << r["set"].get<std::string>() << "}\n";
    if (r.contains("normalized_set")) std::cout << "  normalized      {" << r["normalized_set"].get<std::string>() << "}\n";
    std::cout << "  xi              " << r["xi"].get<std::string>() << "\n";
    std::cout << "  l(sigma)        " << r["l_sigma"] << "\n";
    std::cout << "  s(sigma)        " << r["s_sigma"] << "\n";
    const Json& d = r["defect"];
    std::cout << "  defect          d1=" << d["d1"] << " d2=" << d["d2"] << " d3=" << d["d3"] << " d4=" << d["d4"]
              << " theta=" << d["theta"] << "\n";
    std::cout << "  predicted dim   " << r["predicted_dim"] << "\n";
    for (const auto& [p, rank] : r["oracle_rank"].items()) std::cout << "  oracle (p=" << p << ")  " << rank << "\n";
    const Json& pol = r["polarization"];
    std::cout << "  polarization    dim=" << pol["dim"] << " |P|=" << pol["P_size"] << " |p0|=" << pol["p0_size"]
              << " closed=" << pol["subalgebra_ok"] << " isotropic=" << pol["isotropic_ok"]
              << " maximal=" << pol["maximal_ok"] << "\n";
    for (const auto& b : r["blocks"])
        std::cout << "  block col " << b["column"] << "     " << b["roots"].get<std::string>() << "\n";
    for (const auto& v : r["p0"]) {
        std::cout << "  p0 (i,l,j)=(" << v["i"] << "," << v["l"] << "," << v["j"] << ")";
        for (const auto& [root, c] : v["coeffs"].items()) std::cout << "  " << c << "*e[" << root << "]";
        std::cout << "\n";
    }
    std::cout << "  match           " << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
}

void print_verify_table(const Json& s) {
    std::cout << "verify " << s["family"].get<std::string>() << s["n"].get<int>() << "  primes " << join_ints(s["primes"])
              << "  xi samples " << s["xi_samples"] << "\n";
    for (const char* key : {"subsets", "instances", "mismatches", "rank_mismatches", "polarization_failures",
                            "recursion_failures", "xi_dependent", "bound_violations", "nonzero_theta"})
        std::printf("  %-22s %s\n", key, s[key].dump().c_str());
    std::printf("  %-22s %s (mu=%d)\n", "dims", join_ints(s["dims"]).c_str(), s["mu"].get<int>());
    std::printf("  %-22s %s\n", "dims_cover_spectrum", s["dims_cover_spectrum"].get<bool>() ? "yes" : "no");
    std::printf("  %-22s %s\n", "result", s["ok"].get<bool>() ? "PASS" : "FAIL");
}

void print_spectrum_table(const Json& t) {
    std::cout << "spectrum " << t["family"].get<std::string>() << t["n"].get<int>() << "  mu=" << t["mu"]
              << "  column sizes " << join_ints(t["column_sizes"]) << " (sum " << t["column_sum"] << ")\n";
    std::printf("  %4s  %5s  %5s  %s\n", "l", "pred", "rank", "witness");
    for (const auto& row : t["rows"]) {
        if (row["witness"].is_null()) {
            std::printf("  %4d  %5s  %5s  FAILED: %s\n", row["exponent"].get<int>(), "-", "-",
                        row["error"].get<std::string>().c_str());
            continue;
        }
        std::printf("  %4d  %5d  %5d  {%s}%s\n", row["exponent"].get<int>(), row["predicted_dim"].get<int>(),
                    row["oracle_rank"].get<int>(), row["witness"].get<std::string>().c_str(),
                    row["ok"].get<bool>() ? "" : "  MISMATCH");
    }
    if (t.contains("census")) {
        const Json& c = t["census"];
        std::cout << "  census q=" << c["q"] << "  functionals " << c["functionals"] << "/" << c["expected"]
                  << "  orbits " << c["orbits"] << "\n";
        for (const auto& [d, count] : c["by_dim"].items()) std::cout << "    dim " << d << ": " << count << " orbits\n";
    }
    std::cout << "  result " << (t["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void print_roots_table(const Json& t) {
    std::cout << t["family"].get<std::string>() << t["n"].get<int>() << "  m=" << t["m"] << "  " << t["count"]
              << " positive roots\n";
    for (const auto& r : t["roots"])
        std::printf("  %3d  %-8s row %3d  col %2d\n", r["ordinal"].get<int>(), r["root"].get<std::string>().c_str(),
                    r["row"].get<int>(), r["col"].get<int>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coadjoint orbits of maximal unipotent subgroups in types B, C, D"};
    app.require_subcommand(1);
    app.set_version_flag("--version", coorbit_version());

    std::string family;
    int rank = 0;
    std::string format = "table";
    const auto add_system = [&](CLI::App* sub) {
        sub->add_option("family", family, "B, C or D")->required();
        sub->add_option("n", rank, "rank")->required();
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto* roots = app.add_subcommand("roots", "list the positive roots in canonical order");
    add_system(roots);

    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "list the normalized orthogonal subsets");
    add_system(enumerate);
    enumerate->add_flag("--count-only", count_only, "print only the number of subsets");

    std::string set_literal;
    std::optional<std::string> xi_literal;
    std::optional<std::uint64_t> xi_seed;
    std::string primes_text;
    std::string out_path;
    auto* dim = app.add_subcommand("dim", "predict and certify the orbit dimension of one (D, xi)");
    add_system(dim);
    dim->add_option("--set", set_literal, "comma-separated roots, e.g. \"e1-e5,e1+e5\"");
    auto* xi_opt = dim->add_option("--xi", xi_literal, "scalars, e.g. \"e1-e5=3,e1+e5=1\"");
    dim->add_option("--xi-seed", xi_seed, "seeded nonzero scalars")->excludes(xi_opt);
    dim->add_option("--prime,--primes", primes_text, "prime or comma-separated primes (default: smallest >= m)");
    dim->add_option("--out", out_path, "write the record as NDJSON");

    int xi_samples = 3;
    int jobs = 1;
    bool perturb = false;
    double budget = 0;
    auto* verify = app.add_subcommand("verify", "sweep every normalized subset against the oracles");
    add_system(verify);
    verify->add_option("--xi-samples", xi_samples, "seeded scalar samples besides all-ones")->check(CLI::NonNegativeNumber);
    verify->add_option("--primes", primes_text, "comma-separated primes (default: smallest >= m)");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "write one NDJSON record per subset");
    verify->add_flag("--perturb-defect", perturb, "add 1 to every defect (harness self-test)");
    verify->add_option("--budget", budget, "maximum estimated field operations");

    std::uint32_t census_q = 0;
    auto* spectrum = app.add_subcommand("spectrum", "witness sets for every orbit dimension");
    add_system(spectrum);
    spectrum->add_option("--census", census_q, "also partition u* over F_q into orbits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    std::vector<uint32_t> primes;
    try {
        primes = parse_primes(primes_text);
    } catch (const std::exception&) {
        std::cerr << "coorbit: cannot parse primes '" << primes_text << "'\n";
        return kExitInput;
    }

    int exit_code = 0;
    auto sys = open_system(family, rank, exit_code);
    if (!sys) return exit_code;
    const bool json = format == "json";

    if (roots->parsed()) {
        Owned text;
        const coorbit_status st = coorbit_roots_json(sys->get(), &text.text);
        if (st != COORBIT_OK) return report_error(st);
        if (json) {
            std::cout << text.text << "\n";
        } else {
            print_roots_table(Json::parse(text.text));
        }
        return 0;
    }

    if (enumerate->parsed()) {
        coorbit_status st;
        if (count_only) {
            uint64_t count = 0;
            st = coorbit_count_normalized(sys->get(), &count);
            if (st == COORBIT_OK) std::cout << count << "\n";
        } else {
            st = coorbit_enumerate(
                sys->get(),
                [](const char* literal, void*) {
                    std::cout << (*literal ? literal : "\xe2\x88\x85") << "\n";
                    return 0;
                },
                nullptr);
        }
        return st == COORBIT_OK ? 0 : report_error(st);
    }

    if (dim->parsed()) {
        coorbit_dim_options opt{};
        opt.set_literal = set_literal.c_str();
        opt.xi_literal = xi_literal ? xi_literal->c_str() : nullptr;
        opt.has_seed = xi_seed.has_value();
        opt.xi_seed = xi_seed.value_or(0);
        opt.primes = primes.data();
        opt.prime_count = primes.size();
        Owned text;
        const coorbit_status st = coorbit_dim(sys->get(), &opt, &text.text);
        if (st != COORBIT_OK && st != COORBIT_MISMATCH) return report_error(st);
        if (json) {
            std::cout << text.text << "\n";
        } else {
            print_dim_table(Json::parse(text.text));
        }
        if (!out_path.empty() && !write_lines(out_path, {text.text})) return kExitInput;
        return status_exit(st);
    }

    if (verify->parsed()) {
        struct Sink {
            std::vector<std::string> lines;
            std::vector<std::string> failures;
        } sink;
        coorbit_verify_options opt{};
        opt.xi_samples = xi_samples;
        opt.primes = primes.data();
        opt.prime_count = primes.size();
        opt.jobs = jobs;
        opt.perturb_defect = perturb ? 1 : 0;
        opt.budget = budget;
        Owned text;
        const coorbit_status st = coorbit_verify(
            sys->get(), &opt,
            [](const char* line, void* user) {
                auto* s = static_cast<Sink*>(user);
                s->lines.emplace_back(line);
                if (!Json::parse(line)["match"].get<bool>()) s->failures.emplace_back(line);
            },
            &sink, &text.text);
        if (st != COORBIT_OK && st != COORBIT_MISMATCH) return report_error(st);
        if (json) {
            std::cout << text.text << "\n";
        } else {
            print_verify_table(Json::parse(text.text));
        }
        constexpr std::size_t kShownFailures = 20;
        for (std::size_t k = 0; k < sink.failures.size() && k < kShownFailures; ++k)
            std::cout << sink.failures[k] << "\n";
        if (sink.failures.size() > kShownFailures)
            std::cout << "... " << sink.failures.size() - kShownFailures << " more failing records\n";
        if (!out_path.empty() && !write_lines(out_path, sink.lines)) return kExitInput;
        return status_exit(st);
    }

    if (spectrum->parsed()) {
        Owned text;
        const coorbit_status st = coorbit_spectrum(sys->get(), census_q, &text.text);
        if (st != COORBIT_OK && st != COORBIT_MISMATCH) return report_error(st);
        if (json) {
            std::cout << text.text << "\n";
        } else {
            print_spectrum_table(Json::parse(text.text));
        }
        return status_exit(st);
    }
    return kExitInput;
}
