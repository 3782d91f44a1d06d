#include "impactcalc/analysis.hpp"

#include "impactcalc/error.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

namespace impactcalc {

ParamPath ParamPath::parse(std::string_view text) {
    ParamPath p;
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        p.name = std::string(text);
    } else {
        p.item_id = std::string(text.substr(0, dot));
        p.name = std::string(text.substr(dot + 1));
    }
    if ((p.is_item_arg() && !is_valid_identifier(p.item_id)) || !is_valid_identifier(p.name)) {
        throw CalcError(ErrorKind::UnknownParameter, "malformed parameter path '" + std::string(text) + "'");
    }
    return p;
}

std::string ParamPath::str() const { return is_item_arg() ? item_id + "." + name : name; }

namespace {

[[noreturn]] void unknown(std::string_view path) {
    throw CalcError(ErrorKind::UnknownParameter, "'" + std::string(path) + "' does not resolve");
}

Decimal* locate(Scenario& scenario, const ParamPath& p) {
    if (!p.is_item_arg()) {
        auto it = scenario.parameters.find(p.name);
        return it == scenario.parameters.end() ? nullptr : &it->second;
    }
    for (auto& item : scenario.line_items) {
        if (item.id != p.item_id) continue;
        auto* der = std::get_if<DerivedSource>(&item.source);
        if (!der) return nullptr;
        auto it = der->args.find(p.name);
        return it == der->args.end() ? nullptr : &it->second;
    }
    return nullptr;
}

}  // namespace

Decimal parameter_value(const Scenario& scenario, std::string_view path) {
    Scenario copy = scenario;
    Decimal* slot = locate(copy, ParamPath::parse(path));
    if (!slot) unknown(path);
    return *slot;
}

Scenario with_parameter(const Scenario& scenario, std::string_view path, const Decimal& value) {
    Scenario copy = scenario;
    Decimal* slot = locate(copy, ParamPath::parse(path));
    if (!slot) unknown(path);
    *slot = value;
    return copy;
}

Decimal usd_net(const Scenario& scenario) { return compute_ledger(scenario).net(Unit::USD); }

SweepResult sweep(const Scenario& scenario, std::string_view path, std::span<const Decimal> values,
                  SweepOptions options) {
    if (values.empty()) throw CalcError(ErrorKind::OutOfRange, "sweep needs at least one value");
    (void)parameter_value(scenario, path);

    std::vector<Decimal> sorted(values.begin(), values.end());
    std::stable_sort(sorted.begin(), sorted.end());

    SweepResult result{std::string(path), {}};
    result.points.resize(sorted.size());
    auto evaluate = [&](std::size_t i) {
        result.points[i] = {sorted[i], usd_net(with_parameter(scenario, path, sorted[i]))};
    };

    if (!options.parallel || sorted.size() == 1) {
        for (std::size_t i = 0; i < sorted.size(); ++i) evaluate(i);
        return result;
    }
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < sorted.size(); begin += workers) {
        std::vector<std::future<void>> batch;
        for (std::size_t i = begin; i < std::min(sorted.size(), begin + workers); ++i) {
            batch.push_back(std::async(std::launch::async, evaluate, i));
        }
        for (auto& f : batch) f.get();
    }
    return result;
}

int bisection_step_bound(const Decimal& lo, const Decimal& hi) {
    Decimal width = hi - lo;
    Decimal reach = kBreakEvenPrecision;
    int steps = 0;
    while (width > reach) {
        reach *= Decimal(2);
        ++steps;
    }
    return steps;
}

BreakEvenResult break_even(const Scenario& scenario, std::string_view path, const Decimal& lo,
                           const Decimal& hi, const Decimal& tol) {
    if (hi < lo) throw CalcError(ErrorKind::OutOfRange, "lo must not exceed hi");
    if (tol.sign() < 0) throw CalcError(ErrorKind::OutOfRange, "tol must be >= 0");
    (void)parameter_value(scenario, path);

    BreakEvenResult r;
    auto net_at = [&](const Decimal& p) {
        ++r.evaluations;
        return usd_net(with_parameter(scenario, path, p));
    };
    auto done = [&](const Decimal& p, const Decimal& net) {
        r.value = p;
        r.usd_net = net;
        return r;
    };

    Decimal a = lo, b = hi;
    Decimal fa = net_at(a);
    if (fa.abs() <= tol) return done(a, fa);
    Decimal fb = net_at(b);
    if (fb.abs() <= tol) return done(b, fb);
    if (fa.sign() == fb.sign()) {
        throw CalcError(ErrorKind::NoSignChange, "USD net is " + fa.to_string() + " at " + a.to_string() +
                                                     " and " + fb.to_string() + " at " + b.to_string());
    }

    const Decimal half = Decimal::from_scaled(5, 1);
    while (b - a > kBreakEvenPrecision) {
        Decimal mid = (a + b) * half;
        Decimal fm = net_at(mid);
        ++r.bisection_steps;
        if (fm.abs() <= tol) return done(mid, fm);
        if (fm.sign() == fa.sign()) {
            a = std::move(mid);
            fa = std::move(fm);
        } else {
            b = std::move(mid);
            fb = std::move(fm);
        }
    }
    if (fa.abs() <= fb.abs() && fa.abs() <= tol) return done(a, fa);
    if (fb.abs() <= tol) return done(b, fb);
    throw CalcError(ErrorKind::NoConvergence,
                    "bracket narrowed to " + kBreakEvenPrecision.to_string() + " with |net| above tol");
}

std::vector<TornadoBar> tornado(const Scenario& scenario, std::span<const std::string> paths,
                                const Decimal& relative_delta) {
    if (relative_delta.sign() <= 0) throw CalcError(ErrorKind::OutOfRange, "relative_delta must be > 0");
    std::vector<TornadoBar> bars;
    bars.reserve(paths.size());
    for (const auto& path : paths) {
        Decimal base = parameter_value(scenario, path);
        Decimal low = usd_net(with_parameter(scenario, path, base * (Decimal(1) - relative_delta)));
        Decimal high = usd_net(with_parameter(scenario, path, base * (Decimal(1) + relative_delta)));
        bars.push_back({path, low, high, (high - low).abs()});
    }
    std::stable_sort(bars.begin(), bars.end(), [](const TornadoBar& x, const TornadoBar& y) {
        if (x.span != y.span) return x.span > y.span;
        return x.param_path < y.param_path;
    });
    return bars;
}

}  // namespace impactcalc
