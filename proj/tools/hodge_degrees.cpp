// Command-line front end. Every value is computed and printed exactly; the
// only decimal output is the advisory column in CSV/JSON records. Exit codes:
//   0  success
//   2  invalid input (malformed datum, bad character, bad flags)
//   3  internal cross-check mismatch (always a bug)
//   4  structurally valid input outside the supported case analysis
//   5  a verification sweep found failures

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hodge/degrees.hpp"
#include "hodge/errors.hpp"
#include "hodge/localization.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/report.hpp"
#include "hodge/tautring.hpp"
#include "hodge/verify.hpp"

namespace {

using namespace hodge;

Integer parse_integer(const std::string& text, const char* what) {
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw ValidationError(std::string(what) + ": not an integer: '" + text + "'");
    }
}

std::vector<Integer> parse_list(const std::string& text, const char* what) {
    std::vector<Integer> out;
    std::string token;
    const auto flush = [&] {
        const auto from = token.find_first_not_of(" \t");
        if (from == std::string::npos) {
            throw ValidationError(std::string(what) + ": empty entry in '" + text + "'");
        }
        const auto to = token.find_last_not_of(" \t");
        out.push_back(parse_integer(token.substr(from, to - from + 1), what));
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return out;
}

// parses --d/--m, reducing monodromies into [0, d) with a warning
MonodromyDatum build_datum(const std::string& d_text, const std::string& m_text) {
    const Integer d = parse_integer(d_text, "--d");
    if (d < 1) {
        throw ValidationError("--d: degree must be positive, got " + d.str());
    }
    std::vector<Integer> m = parse_list(m_text, "--m");
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer r = m[i] % d;
        if (r < 0) {
            r += d;
        }
        if (r != m[i]) {
            std::cerr << "note: m[" << (i + 1) << "] = " << m[i].str() << " reduced mod "
                      << d.str() << " to " << r.str() << "\n";
            m[i] = r;
        }
    }
    return MonodromyDatum(d, std::move(m));
}

OutputRecord make_record(const MonodromyDatum& datum, std::string quantity, Rational value,
                         Provenance provenance, std::optional<Integer> e = std::nullopt) {
    OutputRecord record;
    record.d = datum.d();
    record.m = datum.m();
    record.connected = datum.is_connected();
    record.e = std::move(e);
    record.quantity = std::move(quantity);
    record.value = std::move(value);
    record.provenance = provenance;
    return record;
}

void emit_single(const OutputRecord& record, bool as_json, bool as_csv) {
    if (as_json) {
        std::cout << to_json(record).dump(2) << "\n";
    } else if (as_csv) {
        std::cout << csv_header() << "\n" << to_csv_row(record) << "\n";
    } else {
        std::cout << to_fraction_string(record.value) << "\n";
    }
}

int default_jobs() {
    if (const char* env = std::getenv("HODGE_DEGREES_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) {
                return v;
            }
        } catch (const std::exception&) {
        }
        std::cerr << "note: ignoring invalid HODGE_DEGREES_JOBS='" << env << "'\n";
    }
    return 1;
}

int run_lambda1(const std::string& d_text, const std::string& m_text, bool as_json, bool as_csv) {
    const MonodromyDatum datum = build_datum(d_text, m_text);
    const Rational value = lambda1_degree(datum);
    if (lambda1_degree_compact(datum) != value) {
        throw CrossCheckError("folded power-set form disagrees for " + describe(datum));
    }
    if (!datum.is_connected() && !as_json && !as_csv) {
        std::cerr << "note: datum is disconnected; the degree is evaluated arithmetically\n";
    }
    emit_single(make_record(datum, "lambda1", value, Provenance::closed_form), as_json, as_csv);
    return 0;
}

int run_lambda1e(const std::string& d_text, const std::string& m_text, const std::string& e_text,
                 bool all_e, bool as_json, bool as_csv) {
    const MonodromyDatum datum = build_datum(d_text, m_text);
    if (!all_e) {
        if (e_text.empty()) {
            throw ValidationError("lambda1e: need --e or --all-e");
        }
        const Integer e = parse_integer(e_text, "--e");
        if (e < 0 || e >= datum.d()) {
            throw ValidationError("--e: character must lie in [0, d), got " + e.str());
        }
        const Rational value = lambda1e_degree(datum, e);
        emit_single(make_record(datum, "lambda1e", value, Provenance::closed_form, e), as_json,
                    as_csv);
        return 0;
    }

    std::vector<OutputRecord> records;
    Rational total = 0;
    for (Integer e = 0; e < datum.d(); ++e) {
        const Rational value = lambda1e_degree(datum, e);
        if (e > 0) {
            total += value;
        }
        records.push_back(make_record(datum, "lambda1e", value, Provenance::closed_form, e));
    }
    const Rational reference = lambda1_degree(datum);
    if (total != reference) {
        throw CrossCheckError("eigen sum " + to_fraction_string(total) +
                              " differs from lambda_1 degree " + to_fraction_string(reference) +
                              " for " + describe(datum));
    }
    records.push_back(make_record(datum, "sum_lambda1e", total, Provenance::eigen_sum));
    records.push_back(make_record(datum, "lambda1", reference, Provenance::closed_form));

    if (as_json) {
        Json rows = Json::array();
        for (const OutputRecord& record : records) {
            rows.push_back(to_json(record));
        }
        std::cout << rows.dump(2) << "\n";
    } else if (as_csv) {
        std::cout << csv_header() << "\n";
        for (const OutputRecord& record : records) {
            std::cout << to_csv_row(record) << "\n";
        }
    } else {
        for (const OutputRecord& record : records) {
            if (record.e) {
                std::cout << "e=" << record.e->str() << ": " << to_fraction_string(record.value)
                          << "\n";
            }
        }
        const Integer top = datum.d() - 1;
        std::cout << "sum(e=1.." << top.str() << ") = " << to_fraction_string(total) << "\n";
        std::cout << "lambda1 = " << to_fraction_string(reference) << "\n";
    }
    return 0;
}

int run_graph_formula(const std::string& d_text, const std::string& m_text,
                      const std::string& e_text, bool canonical, bool as_json) {
    const MonodromyDatum datum = build_datum(d_text, m_text);
    DivisorClass cls = [&] {
        if (e_text.empty()) {
            return graph_formula_lambda1(datum);
        }
        if (datum.n() != 4) {
            throw UnsupportedError("--e: the character-e expression is only available on "
                                   "4-pointed spaces, got n = " + std::to_string(datum.n()));
        }
        const Integer e = parse_integer(e_text, "--e");
        if (e < 0 || e >= datum.d()) {
            throw ValidationError("--e: character must lie in [0, d), got " + e.str());
        }
        return graph_formula_lambda1e_question(datum, e);
    }();
    if (canonical) {
        cls = canonicalize(cls);
    }
    if (as_json) {
        std::cout << to_json(cls).dump(2) << "\n";
    } else {
        std::cout << format_divisor_class(cls);
    }
    return 0;
}

int run_info(const std::string& d_text, const std::string& m_text) {
    const MonodromyDatum datum = build_datum(d_text, m_text);
    const CoverInvariants inv = cover_invariants(datum);
    std::cout << "d = " << datum.d().str() << "\n";
    std::cout << "m = ";
    for (int i = 1; i <= datum.n(); ++i) {
        std::cout << (i > 1 ? "," : "") << datum.m(i).str();
    }
    std::cout << "\n";
    std::cout << "n = " << datum.n() << ", dimension = " << (datum.n() - 3) << "\n";
    std::cout << "connected = " << (datum.is_connected() ? "true" : "false") << "\n";
    std::cout << "genus = " << inv.genus.str() << "\n";
    std::cout << "q = ";
    for (std::size_t i = 0; i < inv.q.size(); ++i) {
        std::cout << (i > 0 ? "," : "") << inv.q[i].str();
    }
    std::cout << "\n";
    std::cout << "r = ";
    for (std::size_t i = 0; i < inv.r.size(); ++i) {
        std::cout << (i > 0 ? "," : "") << inv.r[i].str();
    }
    std::cout << "\n";
    std::cout << "ranks:\n";
    for (Integer e = 0; e < datum.d(); ++e) {
        std::cout << "  e=" << e.str() << "  rank = " << rank_eigenbundle(datum, e).str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& dmax_text, int nmax, int jobs) {
    const Integer dmax = parse_integer(dmax_text, "--dmax");
    if (dmax < 1) {
        throw ValidationError("--dmax: need a positive bound, got " + dmax.str());
    }
    if (jobs < 1) {
        throw ValidationError("--jobs: need at least one worker, got " + std::to_string(jobs));
    }
    SweepReport report;
    if (suite == "identity") {
        report = verify_identity(dmax, jobs);
    } else if (suite == "localization") {
        report = verify_localization(dmax, jobs);
    } else if (suite == "graph") {
        if (nmax < 4) {
            throw ValidationError("--nmax: need at least 4 marked points, got " +
                                  std::to_string(nmax));
        }
        report = verify_graph(dmax, nmax, jobs);
    } else if (suite == "question") {
        report = verify_question(dmax, jobs);
    } else {
        throw ValidationError("unknown suite '" + suite + "'");
    }
    std::cout << format_report(report);
    std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
    return report.ok() ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degrees of Hurwitz-Hodge classes on spaces of cyclic admissible covers"};
    app.require_subcommand(1);

    std::string d_text, m_text, e_text, suite, dmax_text;
    bool as_json = false, as_csv = false, all_e = false, canonical = false;
    int nmax = 6;
    int jobs = default_jobs();

    auto* lambda1 = app.add_subcommand("lambda1", "degree of lambda_1 on a 4-pointed space");
    lambda1->add_option("--d", d_text, "degree of the cyclic cover")->required();
    lambda1->add_option("--m", m_text, "comma-separated monodromies")->required();
    auto* l1_json = lambda1->add_flag("--json", as_json, "emit a JSON record");
    auto* l1_csv = lambda1->add_flag("--csv", as_csv, "emit a CSV record");
    l1_json->excludes(l1_csv);

    auto* lambda1e =
        app.add_subcommand("lambda1e", "degree of an eigenbundle summand lambda_1^e");
    lambda1e->add_option("--d", d_text, "degree of the cyclic cover")->required();
    lambda1e->add_option("--m", m_text, "comma-separated monodromies")->required();
    auto* le_e = lambda1e->add_option("--e", e_text, "character in [0, d)");
    auto* le_all = lambda1e->add_flag("--all-e", all_e, "tabulate every character and the sum");
    le_e->excludes(le_all);
    auto* le_json = lambda1e->add_flag("--json", as_json, "emit JSON records");
    auto* le_csv = lambda1e->add_flag("--csv", as_csv, "emit CSV records");
    le_json->excludes(le_csv);

    auto* graph = app.add_subcommand("graph-formula",
                                     "divisor expression of lambda_1 (or lambda_1^e with --e)");
    graph->add_option("--d", d_text, "degree of the cyclic cover")->required();
    graph->add_option("--m", m_text, "comma-separated monodromies")->required();
    graph->add_option("--e", e_text, "character in [0, d); 4-pointed spaces only");
    graph->add_flag("--canonical", canonical,
                    "merge complementary boundary subsets onto the representative containing 1");
    graph->add_flag("--json", as_json, "emit the class as JSON");

    auto* verify = app.add_subcommand("verify", "run an exhaustive cross-validation sweep");
    verify->add_option("suite", suite, "identity, localization, graph, or question")
        ->required()
        ->check(CLI::IsMember({"identity", "localization", "graph", "question"}));
    verify->add_option("--dmax", dmax_text, "largest cover degree to sweep")->required();
    verify->add_option("--nmax", nmax, "largest point count (graph suite)");
    verify->add_option("--jobs", jobs, "worker threads (default HODGE_DEGREES_JOBS or 1)");

    auto* info = app.add_subcommand("info", "invariants of a monodromy datum");
    info->add_option("--d", d_text, "degree of the cyclic cover")->required();
    info->add_option("--m", m_text, "comma-separated monodromies")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(lambda1)) {
            return run_lambda1(d_text, m_text, as_json, as_csv);
        }
        if (app.got_subcommand(lambda1e)) {
            return run_lambda1e(d_text, m_text, e_text, all_e, as_json, as_csv);
        }
        if (app.got_subcommand(graph)) {
            return run_graph_formula(d_text, m_text, e_text, canonical, as_json);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(suite, dmax_text, nmax, jobs);
        }
        if (app.got_subcommand(info)) {
            return run_info(d_text, m_text);
        }
        return 2;
    } catch (const ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const DimensionError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const UnsupportedError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const CrossCheckError& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    } catch (const DegenerateRelationError& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    }
}
