#include "hodge/tautring.hpp"

#include <algorithm>

namespace hodge {

DivisorSymbol DivisorSymbol::boundary(std::vector<int> J) {
    std::sort(J.begin(), J.end());
    return {Kind::boundary, std::move(J), 0};
}

DivisorSymbol DivisorSymbol::psi(int j) {
    return {Kind::psi, {}, j};
}

DivisorSymbol DivisorSymbol::kappa1() {
    return {Kind::kappa1, {}, 0};
}

DivisorClass::DivisorClass(int n, Integer d) : n_(n), d_(std::move(d)) {
    if (n_ < 4) {
        throw DimensionError("divisor class: need n >= 4, got " + std::to_string(n_));
    }
    if (d_ < 1) {
        throw ValidationError("divisor class: degree must be positive, got " + d_.str());
    }
}

void DivisorClass::add(const DivisorSymbol& symbol, const Rational& coefficient) {
    switch (symbol.kind) {
    case DivisorSymbol::Kind::boundary: {
        const auto& J = symbol.subset;
        if (static_cast<int>(J.size()) < 2 || static_cast<int>(J.size()) > n_ - 2) {
            throw ValidationError("boundary symbol: block size " + std::to_string(J.size()) +
                                  " outside [2," + std::to_string(n_ - 2) + "]");
        }
        for (std::size_t t = 0; t < J.size(); ++t) {
            if (J[t] < 1 || J[t] > n_ || (t > 0 && J[t] <= J[t - 1])) {
                throw ValidationError("boundary symbol: indices must be a sorted subset of "
                                      "{1,...," + std::to_string(n_) + "}");
            }
        }
        break;
    }
    case DivisorSymbol::Kind::psi:
        if (symbol.point < 1 || symbol.point > n_) {
            throw ValidationError("psi symbol: point " + std::to_string(symbol.point) +
                                  " outside [1," + std::to_string(n_) + "]");
        }
        break;
    case DivisorSymbol::Kind::kappa1:
        break;
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(symbol, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational DivisorClass::coefficient(const DivisorSymbol& symbol) const {
    const auto it = terms_.find(symbol);
    return it == terms_.end() ? Rational(0) : it->second;
}

DivisorClass build_divisor_class(const MonodromyDatum& datum,
                                 const DeltaCoefficientFn& delta_coefficient) {
    const int n = datum.n();
    if (n < 4) {
        throw DimensionError("build_divisor_class: need n >= 4, got " + std::to_string(n));
    }
    if (n > 30) {
        throw ValidationError("build_divisor_class: power-set enumeration capped at n = 30");
    }
    DivisorClass cls(n, datum.d());
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> J;
        for (int i = 0; i < n; ++i) {
            if (mask & (1ul << i)) {
                J.push_back(i + 1);
            }
        }
        const Rational c = delta_coefficient(J);
        if (c == 0) {
            continue;
        }
        const int size = static_cast<int>(J.size());
        if (size == 0 || size == n) {
            cls.add(DivisorSymbol::kappa1(), c);
        } else if (size == 1) {
            cls.add(DivisorSymbol::psi(J.front()), -c);
        } else if (size == n - 1) {
            int missing = 1;
            for (int i = 1, t = 0; i <= n; ++i) {
                if (t < size && J[static_cast<std::size_t>(t)] == i) {
                    ++t;
                } else {
                    missing = i;
                }
            }
            cls.add(DivisorSymbol::psi(missing), -c);
        } else {
            cls.add(DivisorSymbol::boundary(J), c);
        }
    }
    return cls;
}

DivisorClass graph_formula_lambda1(const MonodromyDatum& datum) {
    const Integer& d = datum.d();
    return build_divisor_class(datum, [&](const std::vector<int>& J) {
        Integer sum = 0;
        for (int i : J) {
            sum += datum.m(i);
        }
        const Integer g = gcd_with(sum, d);
        return Rational(g * g, 24 * d);
    });
}

DivisorClass graph_formula_lambda1e_question(const MonodromyDatum& datum, const Integer& e) {
    if (datum.n() != 4) {
        throw DimensionError("graph_formula_lambda1e_question: needs a 4-pointed space, got n = " +
                             std::to_string(datum.n()));
    }
    std::array<Rational, 4> ages = {age(datum, e, 1), age(datum, e, 2), age(datum, e, 3),
                                    age(datum, e, 4)};
    return build_divisor_class(datum, [ages](const std::vector<int>& J) {
        Rational s = 0;
        for (int i : J) {
            s += ages[static_cast<std::size_t>(i - 1)];
        }
        const Rational slack = 1 - s;
        return slack < 0 ? slack / 2 : Rational(0);
    });
}

Rational pair(const BoundaryCurve& curve, const DivisorClass& cls) {
    if (curve.n() != cls.n()) {
        throw DimensionError("pair: curve on " + std::to_string(curve.n()) +
                             " points against a class on " + std::to_string(cls.n()));
    }
    const Integer& d = cls.d();
    Rational total = 0;
    for (const auto& [symbol, c] : cls.terms()) {
        switch (symbol.kind) {
        case DivisorSymbol::Kind::kappa1:
            total += c / d;
            break;
        case DivisorSymbol::Kind::psi:
            if (curve.has_singleton(symbol.point)) {
                total += c / d;
            }
            break;
        case DivisorSymbol::Kind::boundary: {
            // nonzero exactly when J is a union of blocks; the sign is the
            // parity of the number of blocks used
            int used = 0;
            bool is_union = true;
            for (const auto& block : curve.blocks()) {
                std::size_t inside = 0;
                for (int idx : block) {
                    inside += std::binary_search(symbol.subset.begin(), symbol.subset.end(), idx)
                                  ? 1u
                                  : 0u;
                }
                if (inside == block.size()) {
                    ++used;
                } else if (inside != 0) {
                    is_union = false;
                    break;
                }
            }
            if (is_union) {
                if (used % 2 == 0) {
                    total += c / d;
                } else {
                    total -= c / d;
                }
            }
            break;
        }
        }
    }
    return total;
}

DivisorClass canonicalize(const DivisorClass& cls) {
    DivisorClass out(cls.n(), cls.d());
    for (const auto& [symbol, c] : cls.terms()) {
        if (symbol.kind == DivisorSymbol::Kind::boundary &&
            !std::binary_search(symbol.subset.begin(), symbol.subset.end(), 1)) {
            std::vector<int> complement;
            for (int i = 1, t = 0; i <= cls.n(); ++i) {
                if (t < static_cast<int>(symbol.subset.size()) &&
                    symbol.subset[static_cast<std::size_t>(t)] == i) {
                    ++t;
                } else {
                    complement.push_back(i);
                }
            }
            out.add(DivisorSymbol::boundary(std::move(complement)), c);
        } else {
            out.add(symbol, c);
        }
    }
    return out;
}

Rational evaluate_degree_4pt(const DivisorClass& cls) {
    if (cls.n() != 4) {
        throw DimensionError("evaluate_degree_4pt: class lives on n = " + std::to_string(cls.n()));
    }
    Rational total = 0;
    for (const auto& [symbol, c] : cls.terms()) {
        total += c;
    }
    return total / cls.d();
}

Json to_json(const DivisorClass& cls) {
    Json terms = Json::array();
    for (const auto& [symbol, c] : cls.terms()) {
        Json t;
        switch (symbol.kind) {
        case DivisorSymbol::Kind::boundary:
            t["sym"] = "B";
            t["J"] = symbol.subset;
            break;
        case DivisorSymbol::Kind::psi:
            t["sym"] = "P";
            t["j"] = symbol.point;
            break;
        case DivisorSymbol::Kind::kappa1:
            t["sym"] = "K";
            break;
        }
        t["c"] = to_fraction_string(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["n"] = cls.n();
    out["d"] = json_int(cls.d());
    out["terms"] = std::move(terms);
    return out;
}

DivisorClass divisor_class_from_json(const Json& j) {
    try {
        DivisorClass cls(j.at("n").get<int>(), int_from_json(j.at("d")));
        for (const Json& t : j.at("terms")) {
            const std::string sym = t.at("sym").get<std::string>();
            const Rational c = rational_from_string(t.at("c").get<std::string>());
            if (sym == "B") {
                cls.add(DivisorSymbol::boundary(t.at("J").get<std::vector<int>>()), c);
            } else if (sym == "P") {
                cls.add(DivisorSymbol::psi(t.at("j").get<int>()), c);
            } else if (sym == "K") {
                cls.add(DivisorSymbol::kappa1(), c);
            } else {
                throw ValidationError("divisor class: unknown symbol tag '" + sym + "'");
            }
        }
        return cls;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("divisor class: malformed JSON: ") + ex.what());
    }
}

std::string format_divisor_class(const DivisorClass& cls) {
    std::string out = "class on n=" + std::to_string(cls.n()) + " points, d=" + cls.d().str() + "\n";
    if (cls.terms().empty()) {
        out += "  0\n";
        return out;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 0;
    for (const auto& [symbol, c] : cls.terms()) {
        std::string name;
        switch (symbol.kind) {
        case DivisorSymbol::Kind::boundary: {
            name = "delta[";
            for (std::size_t t = 0; t < symbol.subset.size(); ++t) {
                if (t > 0) {
                    name += ",";
                }
                name += std::to_string(symbol.subset[t]);
            }
            name += "]";
            break;
        }
        case DivisorSymbol::Kind::psi:
            name = "psi[" + std::to_string(symbol.point) + "]";
            break;
        case DivisorSymbol::Kind::kappa1:
            name = "kappa1";
            break;
        }
        width = std::max(width, name.size());
        rows.emplace_back(std::move(name), to_fraction_string(c));
    }
    for (const auto& [name, value] : rows) {
        out += "  " + name + std::string(width - name.size() + 2, ' ') + value + "\n";
    }
    return out;
}

} // namespace hodge
