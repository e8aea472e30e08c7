#include "hodge/verify.hpp"

#include <exception>
#include <functional>
#include <thread>
#include <utility>

#include "hodge/degrees.hpp"
#include "hodge/localization.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/tautring.hpp"

namespace hodge {

namespace {

struct CaseResult {
    unsigned long long checked = 0;
    unsigned long long caveats = 0;
    std::vector<std::string> failures;
};

// Runs fn(index) for every index, striding indices across `jobs` workers and
// merging results back in index order, so the report does not depend on the
// worker count.
template <class Fn>
std::vector<CaseResult> run_indexed(std::size_t count, int jobs, const Fn& fn) {
    std::vector<CaseResult> results(count);
    if (jobs < 1) {
        jobs = 1;
    }
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = fn(i);
        }
        return results;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) {
                    results[i] = fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    return results;
}

SweepReport merge(std::string suite, const std::vector<CaseResult>& results) {
    SweepReport report;
    report.suite = std::move(suite);
    for (const CaseResult& r : results) {
        report.checked += r.checked;
        report.caveats += r.caveats;
        for (const std::string& f : r.failures) {
            ++report.failure_count;
            if (report.failures.size() < SweepReport::failure_detail_cap) {
                report.failures.push_back(f);
            }
        }
    }
    return report;
}

std::vector<MonodromyDatum> connected_data_through(const Integer& dmax, int n = 4) {
    std::vector<MonodromyDatum> out;
    for (Integer d = 1; d <= dmax; ++d) {
        auto batch = enumerate_data(d, n);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

// wraps the body so an internal abort becomes a reported failure instead of
// tearing down the whole sweep
template <class Body>
CaseResult guarded_case(const MonodromyDatum& datum, const Body& body) {
    CaseResult r;
    try {
        body(r);
    } catch (const Error& ex) {
        ++r.checked;
        r.failures.push_back("aborted on " + describe(datum) + ": " + ex.what());
    }
    return r;
}

} // namespace

SweepReport verify_eigen_sum(const Integer& dmax, int jobs) {
    const auto data = connected_data_through(dmax);
    const auto results = run_indexed(data.size(), jobs, [&](std::size_t idx) {
        const MonodromyDatum& datum = data[idx];
        return guarded_case(datum, [&](CaseResult& r) {
            ++r.checked;
            const Rational reference = lambda1_degree(datum);
            if (lambda1_degree_compact(datum) != reference) {
                r.failures.push_back("folded power-set form differs for " + describe(datum));
            }
            Rational total = 0;
            for (Integer e = 1; e < datum.d(); ++e) {
                total += lambda1e_degree(datum, e);
            }
            if (total != reference) {
                r.failures.push_back("eigen sum " + to_fraction_string(total) +
                                     " differs from lambda_1 degree " +
                                     to_fraction_string(reference) + " for " + describe(datum));
            }
            if (reference < 0) {
                r.failures.push_back("negative degree " + to_fraction_string(reference) +
                                     " for " + describe(datum));
            }
            bool has_zero = false;
            for (int i = 1; i <= 4; ++i) {
                has_zero = has_zero || datum.m(i) == 0;
            }
            if (has_zero && reference != 0) {
                r.failures.push_back("zero monodromy but nonzero degree for " + describe(datum));
            }
        });
    });
    return merge("eigen-sum", results);
}

SweepReport verify_lambda1e_consistency(const Integer& dmax, int jobs) {
    const auto data = connected_data_through(dmax);
    const auto results = run_indexed(data.size(), jobs, [&](std::size_t idx) {
        const MonodromyDatum& datum = data[idx];
        return guarded_case(datum, [&](CaseResult& r) {
            std::vector<Rational> values;
            for (Integer e = 0; e < datum.d(); ++e) {
                // both forms are evaluated and compared inside every call
                values.push_back(lambda1e_degree(datum, e));
                ++r.checked;
            }
            for (std::size_t e = 1; e < values.size(); ++e) {
                if (values[e] < 0) {
                    r.failures.push_back("negative lambda_1^e for " + describe(datum) +
                                         ", e = " + std::to_string(e));
                }
                const std::size_t mirror = values.size() - e;
                if (values[e] != values[mirror]) {
                    r.failures.push_back("symmetry e <-> d-e broken for " + describe(datum) +
                                         ", e = " + std::to_string(e));
                }
            }
        });
    });
    return merge("lambda1e-consistency", results);
}

SweepReport verify_prime_agreement(const Integer& pmax, int jobs) {
    std::vector<MonodromyDatum> data;
    for (Integer p = 3; p <= pmax; ++p) {
        if (!is_odd_prime(p)) {
            continue;
        }
        auto batch = enumerate_data(p);
        data.insert(data.end(), std::make_move_iterator(batch.begin()),
                    std::make_move_iterator(batch.end()));
    }
    const auto results = run_indexed(data.size(), jobs, [&](std::size_t idx) {
        const MonodromyDatum& datum = data[idx];
        return guarded_case(datum, [&](CaseResult& r) {
            ++r.checked;
            const PrimeDegree classified = lambda1_degree_prime(datum);
            const Rational reference = lambda1_degree(datum);
            if (classified.value != reference) {
                r.failures.push_back("prime case " + std::string(to_string(classified.case_label)) +
                                     " gives " + to_fraction_string(classified.value) +
                                     ", power-set sum gives " + to_fraction_string(reference) +
                                     " for " + describe(datum));
            }
        });
    });
    return merge("prime-agreement", results);
}

SweepReport verify_localization(const Integer& dmax, int jobs) {
    const auto data = connected_data_through(dmax);
    const auto results = run_indexed(data.size(), jobs, [&](std::size_t idx) {
        const MonodromyDatum& datum = data[idx];
        return guarded_case(datum, [&](CaseResult& r) {
            const Rational reference = lambda1_degree(datum);
            for (int k = 1; k <= 4; ++k) {
                // send the k-th point to infinity by moving it last
                std::vector<Integer> m;
                for (int i = 1; i <= 4; ++i) {
                    if (i != k) {
                        m.push_back(datum.m(i));
                    }
                }
                m.push_back(datum.m(k));
                const MonodromyDatum designated(datum.d(), std::move(m));
                const Rational solved = solve(nonorbifold_relation(designated));
                ++r.checked;
                if (solved != reference) {
                    r.failures.push_back("relation solves to " + to_fraction_string(solved) +
                                         " instead of " + to_fraction_string(reference) +
                                         " for " + describe(designated) +
                                         ": " + to_json(nonorbifold_relation(designated)).dump());
                }
            }
            for (Integer e = 1; e < datum.d(); ++e) {
                LocalizationRelation rel;
                try {
                    rel = orbifold_relation(datum, e);
                } catch (const UnsupportedError&) {
                    continue; // no relation in this numerical situation
                }
                ++r.checked;
                const Rational solved = solve(rel);
                const Rational expected = lambda1e_degree(datum, e);
                if (solved != expected) {
                    r.failures.push_back("character relation solves to " +
                                         to_fraction_string(solved) + " instead of " +
                                         to_fraction_string(expected) + " for " +
                                         describe(datum) + ", e = " + e.str());
                }
            }
        });
    });
    return merge("localization", results);
}

SweepReport verify_graph(const Integer& dmax, int nmax, int jobs) {
    if (nmax < 4) {
        throw ValidationError("verify_graph: need nmax >= 4, got " + std::to_string(nmax));
    }
    std::vector<MonodromyDatum> data;
    std::vector<std::vector<BoundaryCurve>> curves_by_n(static_cast<std::size_t>(nmax) + 1);
    for (int n = 4; n <= nmax; ++n) {
        curves_by_n[static_cast<std::size_t>(n)] = enumerate_boundary_curves(n);
        auto batch = connected_data_through(dmax, n);
        data.insert(data.end(), std::make_move_iterator(batch.begin()),
                    std::make_move_iterator(batch.end()));
    }
    const auto results = run_indexed(data.size(), jobs, [&](std::size_t idx) {
        const MonodromyDatum& datum = data[idx];
        return guarded_case(datum, [&](CaseResult& r) {
            const DivisorClass cls = graph_formula_lambda1(datum);
            const DivisorClass canonical = canonicalize(cls);
            for (const BoundaryCurve& curve : curves_by_n[static_cast<std::size_t>(datum.n())]) {
                const MonodromyDatum induced = induced_datum(datum, curve);
                const Rational expected = lambda1_degree(induced);
                const Rational paired = pair(curve, cls);
                ++r.checked;
                if (!induced.is_connected()) {
                    ++r.caveats;
                }
                if (paired != expected) {
                    r.failures.push_back("pairing gives " + to_fraction_string(paired) +
                                         ", induced degree is " + to_fraction_string(expected) +
                                         " for " + describe(datum) + " against " +
                                         describe(induced));
                }
                if (pair(curve, canonical) != paired) {
                    r.failures.push_back("canonicalization changed a pairing for " +
                                         describe(datum));
                }
            }
            if (datum.n() == 4 &&
                evaluate_degree_4pt(cls) != lambda1_degree(datum)) {
                r.failures.push_back("4-pointed degree of the divisor expression differs for " +
                                     describe(datum));
            }
        });
    });
    return merge("graph-pairing", results);
}

SweepReport verify_question(const Integer& dmax, int jobs) {
    const auto data = connected_data_through(dmax);
    const auto results = run_indexed(data.size(), jobs, [&](std::size_t idx) {
        const MonodromyDatum& datum = data[idx];
        return guarded_case(datum, [&](CaseResult& r) {
            for (Integer e = 0; e < datum.d(); ++e) {
                const DivisorClass cls = graph_formula_lambda1e_question(datum, e);
                const Rational got = evaluate_degree_4pt(cls);
                const Rational expected = lambda1e_degree(datum, e);
                ++r.checked;
                if (got != expected) {
                    r.failures.push_back("candidate expression has degree " +
                                         to_fraction_string(got) + " instead of " +
                                         to_fraction_string(expected) + " for " +
                                         describe(datum) + ", e = " + e.str());
                }
            }
        });
    });
    return merge("question", results);
}

SweepReport verify_identity(const Integer& dmax, int jobs) {
    SweepReport combined;
    combined.suite = "identity";
    for (const SweepReport& part :
         {verify_eigen_sum(dmax, jobs), verify_lambda1e_consistency(dmax, jobs),
          verify_prime_agreement(dmax, jobs)}) {
        combined.checked += part.checked;
        combined.caveats += part.caveats;
        combined.failure_count += part.failure_count;
        for (const std::string& f : part.failures) {
            if (combined.failures.size() < SweepReport::failure_detail_cap) {
                combined.failures.push_back(f);
            }
        }
    }
    return combined;
}

std::string format_report(const SweepReport& report) {
    std::string out = report.suite + ": checked " + std::to_string(report.checked) +
                      " cases, " + std::to_string(report.failure_count) + " failures";
    if (report.caveats > 0) {
        out += ", " + std::to_string(report.caveats) + " comparisons on disconnected induced data";
    }
    out += "\n";
    for (const std::string& f : report.failures) {
        out += "  FAIL: " + f + "\n";
    }
    if (report.failure_count > report.failures.size()) {
        out += "  (" + std::to_string(report.failure_count - report.failures.size()) +
               " further failures suppressed)\n";
    }
    return out;
}

} // namespace hodge
