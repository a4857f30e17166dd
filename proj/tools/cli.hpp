#ifndef BQT_TOOLS_CLI_HPP
#define BQT_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bqt/bqt.hpp>
#include <bqt/serialize.hpp>

namespace bqt::cli {

enum Exit : int { affirmative = 0, negative = 1, input_error = 2, inconsistent = 3 };

/// Exit code for iso given the verdicts that were computed (nullopt = method not run).
inline int reconcile(std::optional<bool> brute, std::optional<bool> structural) {
    if (brute && structural && *brute != *structural) return inconsistent;
    bool iso = brute ? *brute : structural.value_or(false);
    return iso ? affirmative : negative;
}

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline BiquandleTable load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

inline FiniteModule zn_module(const std::vector<long long>& v) {
    if (v.size() != 3) throw UsageError("--zn takes m s t");
    return FiniteModule::cyclic(v[0], v[1], v[2]);
}

inline IntMatrix square(const std::vector<long long>& v, std::size_t k, const char* what) {
    if (v.size() != k * k) throw UsageError(std::string(what) + " needs k*k entries");
    return IntMatrix(k, v);
}

inline std::string join(const FiniteModule& M, const std::vector<ModuleElement>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += M.format(xs[i]);
    }
    return out;
}

inline nlohmann::ordered_json elements_json(const FiniteModule& M, const std::vector<ModuleElement>& xs) {
    auto j = nlohmann::ordered_json::array();
    for (auto x : xs) j.push_back(M.format(x));
    return j;
}

inline nlohmann::ordered_json table_json(const BiquandleTable& t) {
    nlohmann::ordered_json j;
    j["order"] = t.order();
    for (Op op : all_ops) {
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t a = 0; a < t.order(); ++a) {
            std::vector<std::uint32_t> row;
            for (std::size_t b = 0; b < t.order(); ++b) row.push_back(t.raw(op, a, b) + 1);
            rows.push_back(row);
        }
        j[op_name(op)] = rows;
    }
    return j;
}

inline void print_report(std::ostream& out, const AxiomReport& r) {
    if (r.passed) {
        out << "biquandle: yes\n";
        return;
    }
    out << "biquandle: no (" << r.violations.size() << " violations)\n";
    for (const auto& v : r.violations) {
        out << "  " << v.axiom << ' ' << violation_kind_name(v.kind);
        for (auto e : v.witness) out << ' ' << e.index();
        out << '\n';
    }
}

}  // namespace detail

/// Runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"finite biquandle toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // check
    auto* check = app.add_subcommand("check", "verify the biquandle axioms for a matrix file");
    std::string check_file;
    check->add_option("file", check_file)->required();
    check->add_flag("--json", json);

    // alexander
    auto* alex = app.add_subcommand("alexander", "Alexander biquandle of a module");
    std::vector<long long> alex_zn;
    std::string alex_mod;
    auto* alex_zn_opt = alex->add_option("--zn", alex_zn, "m s t")->expected(3);
    alex->add_option("--mod", alex_mod, "module file")->excludes(alex_zn_opt);
    alex->add_flag("--json", json);

    // switch
    auto* sw = app.add_subcommand("switch", "switch biquandle x^y = Cx+Dy+c, x_y = Ay+Bx+c on Z_m^k");
    long long sw_m = 0;
    std::size_t sw_k = 0;
    std::vector<long long> sw_a, sw_b, sw_c;
    sw->add_option("--m", sw_m)->required();
    sw->add_option("--k", sw_k)->required();
    sw->add_option("--A", sw_a, "row-major entries")->required();
    sw->add_option("--B", sw_b, "row-major entries")->required();
    sw->add_option("--c", sw_c, "shift vector");
    sw->add_flag("--json", json);

    // iso
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two biquandles");
    std::vector<std::vector<long long>> iso_zn;
    std::vector<std::string> iso_mod, iso_matrix;
    std::string method = "both";
    iso->add_option("--zn", iso_zn, "m s t (give twice)")->expected(3);
    iso->add_option("--mod", iso_mod, "module file (give twice)");
    iso->add_option("--matrix", iso_matrix, "matrix file (give twice, brute only)");
    iso->add_option("--method", method)->check(CLI::IsMember({"brute", "structural", "both"}));
    iso->add_flag("--json", json);

    // count
    auto* count = app.add_subcommand("count", "count homomorphisms from a knot biquandle to a target");
    std::string gauss, target_file;
    std::vector<long long> target_zn;
    count->add_option("--gauss", gauss, "Gauss code or fixture file")->required();
    auto* target_opt = count->add_option("--target", target_file, "matrix file");
    count->add_option("--target-zn", target_zn, "m s t")->expected(3)->excludes(target_opt);
    count->add_flag("--json", json);

    // orbits
    auto* orbits = app.add_subcommand("orbits", "(1-st)M, Ker(1-s), transversal and its s-orbit");
    std::vector<long long> orb_zn;
    std::string orb_mod;
    auto* orb_zn_opt = orbits->add_option("--zn", orb_zn, "m s t")->expected(3);
    orbits->add_option("--mod", orb_mod, "module file")->excludes(orb_zn_opt);
    orbits->add_flag("--json", json);

    // enumerate
    auto* en = app.add_subcommand("enumerate", "all biquandles of a small order");
    std::size_t en_n = 0;
    bool allow_four = false, en_tables = false;
    en->add_option("n", en_n)->required();
    en->add_flag("--allow-4", allow_four, "permit order 4");
    en->add_flag("--tables", en_tables, "print every table");
    en->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return affirmative;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    auto module_from = [](const std::vector<long long>& zn, const std::string& file) {
        if (!zn.empty()) return zn_module(zn);
        if (file.empty()) throw UsageError("give --zn m s t or --mod FILE");
        return parse_module(read_file(file));
    };

    try {
        if (*check) {
            auto table = load_matrix(check_file);
            auto report = verify_biquandle(table);
            if (json) {
                auto j = to_json(report);
                j["yang_baxter"] = yang_baxter_check(table);
                out << j.dump(2) << '\n';
            } else {
                print_report(out, report);
            }
            return report.passed ? affirmative : negative;
        }

        if (*alex) {
            auto M = module_from(alex_zn, alex_mod);
            auto table = make_alexander(M);
            if (json) {
                auto j = json_envelope("alexander");
                j["elements"] = elements_json(M, canonical_order(M));
                j["table"] = table_json(table);
                out << j.dump(2) << '\n';
            } else {
                out << serialize_matrix(table);
            }
            return affirmative;
        }

        if (*sw) {
            if (sw_k == 0) throw UsageError("k must be positive");
            auto carrier = plain_module(sw_m, sw_k);
            if (sw_c.empty()) sw_c.assign(sw_k, 0);
            if (sw_c.size() != sw_k) throw UsageError("--c needs k entries");
            auto result = make_switch_biquandle(carrier, square(sw_a, sw_k, "--A"), square(sw_b, sw_k, "--B"),
                                                carrier.from_coords(sw_c));
            if (json) {
                auto j = json_envelope("switch");
                j["elements"] = elements_json(carrier, canonical_order(carrier));
                j["switch_condition"] = result.switch_condition;
                j["report"] = to_json(result.report);
                j["table"] = table_json(result.table);
                out << j.dump(2) << '\n';
            } else {
                out << "# switch condition: " << (result.switch_condition ? "holds" : "fails") << '\n';
                out << "# biquandle: " << (result.report.passed ? "yes" : "no") << '\n';
                out << serialize_matrix(result.table);
            }
            return result.report.passed ? affirmative : negative;
        }

        if (*iso) {
            std::vector<FiniteModule> modules;
            for (const auto& v : iso_zn) modules.push_back(zn_module(v));
            for (const auto& f : iso_mod) modules.push_back(parse_module(read_file(f)));
            std::vector<BiquandleTable> tables;
            if (!iso_matrix.empty()) {
                if (!modules.empty()) throw UsageError("do not mix --matrix with module inputs");
                for (const auto& f : iso_matrix) tables.push_back(load_matrix(f));
                if (method != "brute") {
                    if (method == "structural") throw UsageError("structural search needs module inputs");
                    method = "brute";
                }
            } else {
                for (const auto& M : modules) tables.push_back(make_alexander(M));
            }
            if (tables.size() != 2) throw UsageError("iso needs exactly two inputs");

            std::optional<bool> brute_verdict, structural_verdict;
            auto j = json_envelope("iso");
            std::ostringstream text;
            if (method == "brute" || method == "both") {
                auto r = brute_force_iso(tables[0], tables[1]);
                brute_verdict = r.witness.has_value();
                nlohmann::ordered_json b;
                b["isomorphic"] = *brute_verdict;
                if (r.witness) b["f"] = one_line(*r.witness);
                b["stats"] = {{"nodes", r.stats.nodes},
                              {"propagations", r.stats.propagations},
                              {"prune_injectivity", r.stats.prune_injectivity},
                              {"prune_operation", r.stats.prune_operation},
                              {"prune_signature", r.stats.prune_signature}};
                j["brute"] = b;
                text << "brute: " << (*brute_verdict ? "isomorphic" : "non-isomorphic") << " (nodes "
                     << r.stats.nodes << ", prunes " << r.stats.prunes() << ")\n";
                if (r.witness) text << "  f = " << format_one_line(*r.witness) << '\n';
            }
            if (method == "structural" || method == "both") {
                StructuralStats stats;
                auto w = structural_iso(modules[0], modules[1], &stats);
                structural_verdict = w.has_value();
                nlohmann::ordered_json s;
                s["isomorphic"] = *structural_verdict;
                if (w) s["witness"] = to_json(modules[0], modules[1], *w);
                s["stats"] = {{"module_isos", stats.module_isos},
                              {"k_nodes", stats.k_nodes},
                              {"prune_coset", stats.prune_coset},
                              {"prune_closure", stats.prune_closure},
                              {"verify_failed", stats.verify_failed}};
                j["structural"] = s;
                text << "structural: " << (*structural_verdict ? "isomorphic" : "non-isomorphic") << " (module isos "
                     << stats.module_isos << ", k nodes " << stats.k_nodes << ")\n";
                if (w) {
                    const auto& M = modules[0];
                    const auto& M2 = modules[1];
                    text << "  h:";
                    for (auto [x, y] : w->h.pairs()) text << ' ' << M.format(x) << "->" << M2.format(y);
                    text << "\n  k:";
                    for (auto [x, y] : w->k.pairs()) text << ' ' << M.format(x) << "->" << M2.format(y);
                    text << "\n  f = " << format_one_line(w->f) << '\n';
                }
            }
            int code = reconcile(brute_verdict, structural_verdict);
            const char* verdict = code == inconsistent ? "inconsistent" : code == affirmative ? "isomorphic" : "non-isomorphic";
            j["verdict"] = verdict;
            if (json)
                out << j.dump(2) << '\n';
            else
                out << text.str() << "verdict: " << verdict << '\n';
            if (code == inconsistent) err << "error: brute-force and structural verdicts disagree\n";
            return code;
        }

        if (*count) {
            BiquandleTable target = !target_zn.empty()    ? make_alexander(zn_module(target_zn))
                                    : !target_file.empty() ? load_matrix(target_file)
                                                           : throw UsageError("give --target or --target-zn");
            std::vector<GaussFixture> codes;
            std::error_code ec;
            if (!gauss.empty() && std::filesystem::is_regular_file(gauss, ec)) {
                std::istringstream in(read_file(gauss));
                codes = parse_gauss_file(in);
            } else {
                codes.push_back({"", parse_gauss_code(gauss)});
            }
            auto j = json_envelope("count");
            j["target_order"] = target.order();
            auto results = nlohmann::ordered_json::array();
            for (const auto& fx : codes) {
                auto d = build_diagram(fx.code);
                auto r = count_homs(d, target);
                results.push_back({{"name", fx.name},
                                   {"code", format_gauss_code(fx.code)},
                                   {"semi_arcs", d.semi_arcs},
                                   {"count", r.count}});
                if (!json) {
                    if (!fx.name.empty()) out << fx.name << ": ";
                    out << r.count << '\n';
                }
            }
            j["results"] = std::move(results);
            if (json) out << j.dump(2) << '\n';
            return affirmative;
        }

        if (*orbits) {
            auto M = module_from(orb_zn, orb_mod);
            auto N = one_minus_st_submodule(M);
            auto K = kernel_one_minus_s(M);
            auto A = transversal(M, N);
            if (json) {
                auto j = json_envelope("orbits");
                j["one_minus_st"] = elements_json(M, N.elements());
                j["kernel_one_minus_s"] = elements_json(M, K.elements());
                j["transversal"] = elements_json(M, A.reps);
                j["orbit"] = elements_json(M, A.orbit);
                out << j.dump(2) << '\n';
            } else {
                out << "(1-st)M: " << join(M, N.elements()) << '\n'
                    << "Ker(1-s): " << join(M, K.elements()) << '\n'
                    << "A: " << join(M, A.reps) << '\n'
                    << "O_s(A): " << join(M, A.orbit) << '\n';
            }
            return affirmative;
        }

        if (*en) {
            auto result = enumerate_biquandles(en_n, allow_four);
            if (json) {
                auto j = json_envelope("enumerate");
                j["order"] = en_n;
                j["tables"] = result.tables.size();
                j["classes"] = result.classes.size();
                auto cls = nlohmann::ordered_json::array();
                for (const auto& c : result.classes) {
                    std::vector<std::size_t> one_based;
                    for (auto i : c) one_based.push_back(i + 1);
                    cls.push_back(one_based);
                }
                j["class_members"] = std::move(cls);
                if (en_tables) {
                    auto list = nlohmann::ordered_json::array();
                    for (const auto& t : result.tables) list.push_back(table_json(t));
                    j["matrices"] = std::move(list);
                }
                out << j.dump(2) << '\n';
            } else {
                out << "order " << en_n << ": " << result.tables.size() << " biquandles, " << result.classes.size()
                    << " isomorphism classes\n";
                for (std::size_t c = 0; c < result.classes.size(); ++c) {
                    out << "class " << c + 1 << ":";
                    for (auto i : result.classes[c]) out << ' ' << i + 1;
                    out << '\n';
                }
                if (en_tables)
                    for (std::size_t i = 0; i < result.tables.size(); ++i)
                        out << "# table " << i + 1 << '\n' << serialize_matrix(result.tables[i]);
            }
            return affirmative;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

}  // namespace bqt::cli

#endif
